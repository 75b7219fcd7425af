import signflip_modal

analysis = signflip_modal.Analysis()

deviations = analysis.curvature_convergence(5.0, -1.0, 3.0, 2.0, [40, 80, 160, 320])
