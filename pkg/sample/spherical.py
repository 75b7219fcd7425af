import signflip_modal

analysis = signflip_modal.Analysis()

j_10 = analysis.spherical(10, 3.0, "j")
h_prime = analysis.spherical(10, 3.0, "h'")
