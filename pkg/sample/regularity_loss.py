import signflip_modal

analysis = signflip_modal.Analysis()

config = signflip_modal.DiskBallConfig(3, 1.0, -1.0, 1.0, 3.0)

report = analysis.regularity_loss(config)
print(report.to_dict())
