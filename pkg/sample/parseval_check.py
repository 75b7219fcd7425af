import signflip_modal

analysis = signflip_modal.Analysis()

config = signflip_modal.DiskBallConfig(3, 1.0, -3.0, 2.0, 2.0)
field = analysis.solve_field(config, {(1, 0): 1.0}, None, n_modes=3)

report = analysis.parseval_check(field, "plus")
