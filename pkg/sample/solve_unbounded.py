import signflip_modal

analysis = signflip_modal.Analysis()

basis = signflip_modal.TransverseBasis.dirichlet(1.0)
config = signflip_modal.WaveguideConfig(basis, -3.0, 1.0, 2.0)

u_plus, u_minus = analysis.solve_unbounded(config, 3, 1.0 + 0.5j, -2.0)
