import signflip_modal

analysis = signflip_modal.Analysis()

basis = signflip_modal.TransverseBasis.dirichlet(1.0)
config = signflip_modal.WaveguideConfig(basis, -1.0, 2.0, 2.0, geometry="slab", length=1.0)

closed_form = analysis.det_slab(config, 50)
expanded = analysis.det_slab_expanded(config, 50)

print(closed_form.isclose(expanded, rel_tol=1e-10))
