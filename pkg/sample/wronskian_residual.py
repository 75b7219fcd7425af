import signflip_modal

analysis = signflip_modal.Analysis()

residual = analysis.wronskian_residual(60, 0.5)
