import signflip_modal

analysis = signflip_modal.Analysis()

limit = analysis.curvature_limit(5.0, -1.0, 3.0, 2.0)
