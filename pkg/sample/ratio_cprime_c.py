import signflip_modal

analysis = signflip_modal.Analysis()

interior = analysis.ratio_cprime_c(12, 2.0, "J")
exterior = analysis.ratio_cprime_c(12, 2.0, "H")

# Spherical ratio c_l'/c_l for the ball
spherical = analysis.ratio_cprime_c(12, 2.0, "H", spherical=True)
