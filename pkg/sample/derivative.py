import signflip_modal

analysis = signflip_modal.Analysis()

j_prime = analysis.derivative(3, 2.0, "J")
h_prime = analysis.derivative(3, 2.0, "H")
