import signflip_modal

analysis = signflip_modal.Analysis()

config = signflip_modal.DiskBallConfig(2, 1.0, -1.0, 2.0, 2.0)

# Super-critical disk: D_n decays like R (k+)^2 / n^2
determinant = analysis.determinant(config, 200)
margin = analysis.determinant_margin(config, 200)
