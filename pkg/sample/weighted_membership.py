import math

import signflip_modal

analysis = signflip_modal.Analysis()

basis = signflip_modal.TransverseBasis.dirichlet(1.0)
coefficients = [math.exp(-3.0 * n * math.pi) for n in range(1, 101)]

result = analysis.weighted_membership(coefficients, basis, 0.0, 1.0)
print(result["verdict"])
