import math

import signflip_modal

analysis = signflip_modal.Analysis()

# Evanescent mode: beta is purely imaginary, with the sign chosen per side
beta_plus = analysis.beta(math.pi ** 2, 2.0, "plus")
beta_minus = analysis.beta(math.pi ** 2, 2.0, "minus")
