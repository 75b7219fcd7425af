import signflip_modal

analysis = signflip_modal.Analysis()

basis = signflip_modal.TransverseBasis.dirichlet(1.0)
config = signflip_modal.WaveguideConfig(basis, -1.0, 2.0, 2.0)

mode = analysis.kernel_scan_unbounded(config, 5)["kernel_modes"][0]
field = analysis.kernel_field(mode)

jump, flux = analysis.transmission_residual(field, (None, None), [0.25, 0.5])
