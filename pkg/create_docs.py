# Copyright 2026 The signflip-modal developers
#
#  Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software and associated documentation files (the "Software"), to
#  deal in the Software without restriction, including without limitation the
#  rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
#  sell copies of the Software, and to permit persons to whom the Software is
#  furnished to do so, subject to the following conditions:
#
#  The above copyright notice and this permission notice shall be included in
#  all copies or substantial portions of the Software.
#
#  THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
#  IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
#  FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
#  AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
#  LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
#  FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
#  DEALINGS IN THE SOFTWARE.

import glob
import inspect
import logging
import os
import re
import shutil

import jinja2
import signflip_modal
from signflip_modal import core, disk_ball, field_synthesis, radiation, regularity_analysis, special_functions, waveguide

# Navigation sections in the order they appear in SUMMARY.md
SECTIONS = [
    ("Special Functions", special_functions.SpecialFunctions),
    ("Disk and Ball", disk_ball.DiskBall),
    ("Waveguides", waveguide.Waveguide),
    ("Radiation", radiation.Radiation),
    ("Regularity", regularity_analysis.RegularityAnalysis),
    ("Field Synthesis", field_synthesis.FieldSynthesis),
    ("Shared", core.Core),
]

build_directory = 'docs/_build'
log = logging.getLogger(__name__)

TYPED_LINE = re.compile(r"^(\*{0,2}\w+) \{([^}]*)\}\s*(?:--)?\s*(.*)$")


def _is_internal_function(name):
    return name.startswith('_')


def get_analysis_functions():
    class_functions = {}

    for title, c in SECTIONS:
        functions = inspect.getmembers(c, lambda o: inspect.isfunction(o) and o.__name__ != '__init__' and
                                       o.__module__ == c.__module__ and o.__qualname__.startswith(c.__name__ + '.'))
        class_functions[title] = {
            'public': [f for f in functions if not _is_internal_function(f[0])],
            'private': [f for f in functions if _is_internal_function(f[0])],
        }

    return class_functions


def _split_typed_line(line):
    """Split `name {type} -- description` into its three parts, or return empty parts for a continuation line."""

    match = TYPED_LINE.match(line)
    if match is None:
        return "", "", line
    return match.group(1), match.group(2).strip(), match.group(3).strip()


def _pop_marker(description, marker):
    if marker not in description:
        return description, ''
    head, _, tail = description.partition(marker)
    value, _, after = tail.partition('})')
    return (head + after).strip(), value.replace("'", "").replace('"', '').strip()


def _parse_arguments(lines, with_default=False):
    arguments = []

    for line in lines:
        name, python_type, description = _split_typed_line(line)
        if name:
            arguments.append({'name': name, 'type': python_type, 'description': description})
        elif arguments:
            arguments[-1]['description'] += ' ' + description

    # markers may sit on a continuation line
    for entry in arguments:
        entry['description'], entry['choices'] = _pop_marker(entry['description'], '(choices: {')
        if with_default:
            entry['description'], entry['default'] = _pop_marker(entry['description'], '(default: {')

    return arguments


def _parse_pairs(lines):
    pairs = []

    for line in lines:
        head, separator, description = line.partition(' -- ')
        if separator:
            pairs.append({'type': head.strip(), 'description': description.strip()})
        elif pairs:
            pairs[-1]['description'] += ' ' + line.strip()

    return pairs


def parse_docstring(docstring):
    sections = {
        'description': [],
        'arguments': [],
        'keyword_arguments': [],
        'returns': [],
        'exceptions': []
    }
    headers = {
        'Arguments:': 'arguments',
        'Keyword Arguments:': 'keyword_arguments',
        'Returns:': 'returns',
        'Exceptions:': 'exceptions',
    }

    current_section = 'description'
    for line in (docstring or '').splitlines():
        stripped = line.strip()
        if stripped in headers:
            current_section = headers[stripped]
        elif stripped:
            sections[current_section].append(stripped)

    return {
        'description': ' '.join(sections['description']),
        'arguments': _parse_arguments(sections['arguments']),
        'keyword_arguments': _parse_arguments(sections['keyword_arguments'], with_default=True),
        'returns': _parse_pairs(sections['returns']),
        'exceptions': _parse_pairs(sections['exceptions'])
    }


def generate_function_doc(env, name, obj):
    sections = parse_docstring(obj.__doc__)

    # First line of the definition without trailing comments
    funcdef = inspect.getsource(obj).strip().partition('\n')[0].partition('#')[0].strip()
    if funcdef == "@staticmethod":
        funcdef = ""

    example = ""
    sample = "sample/{}.py".format(name)
    if not _is_internal_function(name) and os.path.exists(sample):
        with open(sample) as code:
            example = code.read()
    else:
        log.debug('No code example for {}'.format(name))

    template = env.get_template('function.md.j2')
    with open('{}/{}.md'.format(build_directory, name), 'w') as md:
        md.write(template.render(name=name, funcdef=funcdef, example=example, **sections))
    log.debug('Wrote {}/{}.md'.format(build_directory, name))


def _sorted(functions):
    return sorted(functions, key=lambda f: f[0])


def generate_summary_doc(env, functions):
    internal_functions = []
    for fns in functions.values():
        internal_functions += fns['private']

    template = env.get_template('SUMMARY.md.j2')
    with open('{}/SUMMARY.md'.format(build_directory), 'w') as md:
        md.write(template.render(
            sections=[(title, _sorted(fns['public'])) for title, fns in functions.items()],
            internal_functions=_sorted(internal_functions),
            version=signflip_modal.__version__,
        ))


if __name__ == "__main__":
    console_output_handler = logging.StreamHandler()
    console_output_handler.setFormatter(logging.Formatter("[%(asctime)s] [%(levelname)s] -- %(message)s"))
    log.addHandler(console_output_handler)
    # Uncomment to enable debug logging
    # log.setLevel(logging.DEBUG)

    env = jinja2.Environment(
        loader=jinja2.FileSystemLoader('docs/templates'),
        trim_blocks=True,
        lstrip_blocks=True
    )

    try:
        os.mkdir(build_directory)
    except FileExistsError:
        for f in glob.glob('{}/*'.format(build_directory)):
            os.remove(f)

    # Static pages are copied as they are
    for f in glob.glob(r'docs/*.md'):
        shutil.copy(f, build_directory)

    analysis_functions = get_analysis_functions()

    for class_fns in analysis_functions.values():
        for fn in (class_fns['public'] + class_fns['private']):
            generate_function_doc(env, fn[0], fn[1])

    generate_summary_doc(env, analysis_functions)
