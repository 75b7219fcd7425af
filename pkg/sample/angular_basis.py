import math

import signflip_modal

analysis = signflip_modal.Analysis()

fourier = analysis.angular_basis("fourier", 3, math.pi / 4)
harmonic = analysis.angular_basis("spherical_harmonic", 2, -1, 0.7, 1.1)
transverse = analysis.angular_basis("transverse", 2, 0.25, signflip_modal.TransverseBasis.dirichlet(1.0))
