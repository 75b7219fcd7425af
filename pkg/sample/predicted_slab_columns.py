import signflip_modal

analysis = signflip_modal.Analysis()

basis = signflip_modal.TransverseBasis.dirichlet(1.0)
config = signflip_modal.WaveguideConfig(basis, -1.0, 1.0, 3.0, geometry="slab", length=1.0)

predicted = analysis.predicted_slab_columns(config, 200)
exact = analysis.slab_inverse(config, 200)
