import signflip_modal

analysis = signflip_modal.Analysis()

config = signflip_modal.DiskBallConfig(2, 1.0, -1.0, 1.0, 3.0)

case = analysis.classify_case(config)
