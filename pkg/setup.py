#! /usr/bin/env python

import setuptools

long_description = """
# signflip-modal

This project provides a Python package for the modal analysis of scalar transmission problems across an interface
where the principal coefficient changes sign, as between a positive material and a negative metamaterial.

For the negative disk, the negative ball and flat-interface waveguides (half-line and slab) it reduces the problem to
one small linear system per mode. It classifies the contrast regime and measures the order of regularity lost. It also
detects surface plasmons and trapped modes.

## Installation

Install from source:
```
$ python setup.py install
```

## Example

```py
import signflip_modal

analysis = signflip_modal.Analysis()
config = signflip_modal.DiskBallConfig(2, 1.0, -3.0, 1.0, 2.0)

print(analysis.inverse_entry_slopes(config, m_range=(20, 100))["slopes"])
```
"""


setuptools.setup(
    name="signflip_modal",
    version="1.0.0",
    author="The signflip-modal developers",
    description="Modal analysis of transmission problems across sign-changing interfaces.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=['tests', 'tests.*']),
    classifiers=[
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Scientific/Engineering :: Physics"
    ],
    python_requires='>=3.8',
    install_requires=[
        'numpy >= 1.20',
        'scipy >= 1.6',
        'mpmath >= 1.2',
        'pydantic >= 2.0'
    ],
    extras_require={
        'docs': ['jinja2 >= 2.10']
    },
    tests_require=[
        'pytest',
        'pytest-mock'
    ],
    entry_points={
        'console_scripts': [
            'signflip-modal = signflip_modal.cli:main'
        ]
    },
    zip_safe=True,
)
