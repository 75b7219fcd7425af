import signflip_modal

analysis = signflip_modal.Analysis()

basis = signflip_modal.TransverseBasis.dirichlet(1.0)
config = signflip_modal.WaveguideConfig(basis, -3.0, 1.0, 2.0, geometry="slab", length=0.5)
field = analysis.solve_field(config, {1: 1.0}, {2: 0.5}, n_modes=3)

residual = analysis.end_residual(field, [0.1, 0.5, 0.9])
