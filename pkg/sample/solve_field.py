import signflip_modal

analysis = signflip_modal.Analysis()

config = signflip_modal.DiskBallConfig(2, 1.0, -3.0, 2.0, 2.0)

# Missing modes are zero; without n_modes the series stops on three quiet shells
field = analysis.solve_field(config, {0: 1.0, 1: 0.5}, {2: -0.5})
