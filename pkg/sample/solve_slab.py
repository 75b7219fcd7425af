import signflip_modal

analysis = signflip_modal.Analysis()

basis = signflip_modal.TransverseBasis.dirichlet(1.0)
config = signflip_modal.WaveguideConfig(basis, -3.0, 1.0, 2.0, geometry="slab", length=0.5)

u_plus, u_minus_plus, u_minus_minus = analysis.solve_slab(config, 3, 1.0, 0.5 - 1.0j)
