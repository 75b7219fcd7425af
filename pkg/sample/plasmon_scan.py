import math

import signflip_modal

analysis = signflip_modal.Analysis()

# tanh(s L) = 1/2 at lambda_1 = pi^2
length = math.atanh(0.5) / math.sqrt(math.pi ** 2 - 1.0)

basis = signflip_modal.TransverseBasis.dirichlet(1.0)
config = signflip_modal.WaveguideConfig(basis, -2.0, 1.0, 1.0, geometry="slab", length=length)

modes = analysis.plasmon_scan(config, 50.0)
print([mode.to_dict() for mode in modes])
