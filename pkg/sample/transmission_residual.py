import signflip_modal

analysis = signflip_modal.Analysis()

config = signflip_modal.DiskBallConfig(2, 1.0, -3.0, 2.0, 2.0)
f_data, g_data = {0: 1.0, 1: 0.5}, {2: -0.5}
field = analysis.solve_field(config, f_data, g_data, n_modes=4)

jump, flux = analysis.transmission_residual(field, (f_data, g_data), [0.0, 1.0, 2.0, 3.0])
