import signflip_modal

analysis = signflip_modal.Analysis()

residual = analysis.besseltmp_residual(3, 2.0, 5.0, -0.5)
