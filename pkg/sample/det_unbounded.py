import signflip_modal

analysis = signflip_modal.Analysis()

basis = signflip_modal.TransverseBasis.dirichlet(1.0)
config = signflip_modal.WaveguideConfig(basis, -3.0, 1.0, 2.0)

determinant = analysis.det_unbounded(config, 5)
