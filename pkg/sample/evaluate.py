import signflip_modal

analysis = signflip_modal.Analysis()

config = signflip_modal.DiskBallConfig(2, 1.0, -3.0, 2.0, 2.0)
field = analysis.solve_field(config, {0: 1.0, 1: 0.5}, {2: -0.5}, n_modes=4)

inside = analysis.evaluate(field, (0.5, 0.0))
outside = analysis.evaluate(field, (1.5, 1.0))
flux = analysis.evaluate_normal_derivative(field, (1.0, 0.0), "minus")
