import signflip_modal

analysis = signflip_modal.Analysis()

config = signflip_modal.DiskBallConfig(2, 1.0, -3.0, 2.0, 2.0)

rows = analysis.mode_table(config, (20, 30))
