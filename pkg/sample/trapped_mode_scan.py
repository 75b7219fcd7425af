import math

import signflip_modal

analysis = signflip_modal.Analysis()

# tan(t L) = t / s+ at lambda_1 = pi^2
t = math.sqrt(16.0 - math.pi ** 2)
length = math.atan(t / math.sqrt(math.pi ** 2 - 1.0)) / t

basis = signflip_modal.TransverseBasis.dirichlet(1.0)
config = signflip_modal.WaveguideConfig(basis, -1.0, 1.0, 4.0, geometry="slab", length=length)

roots = analysis.trapped_mode_roots(config)
modes = analysis.trapped_mode_scan(config)
