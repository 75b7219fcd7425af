import signflip_modal

analysis = signflip_modal.Analysis()

config = signflip_modal.DiskBallConfig(2, 1.0, -1.0, 1.0, 3.0)

predicted = analysis.predicted_matrix(config, 200)
exact = analysis.build_system(config, 200).inverse()
