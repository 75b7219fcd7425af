import signflip_modal

analysis = signflip_modal.Analysis()

basis = signflip_modal.TransverseBasis.dirichlet(1.0)
config = signflip_modal.WaveguideConfig(basis, -1.0, 1.0, 3.0)

predicted = analysis.predicted_inverse_unbounded(config, 200)
