import signflip_modal

analysis = signflip_modal.Analysis()

basis = signflip_modal.TransverseBasis.neumann(2.0)
config = signflip_modal.WaveguideConfig(basis, -3.0, 1.0, 2.0)

rows = analysis.waveguide_mode_table(config, (0, 10))
