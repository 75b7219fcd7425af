import signflip_modal

analysis = signflip_modal.Analysis()

config = signflip_modal.DiskBallConfig(3, 1.0, -3.0, 2.0, 2.0)

u_minus, u_plus = analysis.solve_mode(config, 4, 1.0, 0.0)
