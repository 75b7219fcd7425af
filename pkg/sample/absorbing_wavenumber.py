import signflip_modal

analysis = signflip_modal.Analysis()

medium = signflip_modal.AbsorbingMedium(-1.0, -1.0, 2.0, 0.1, 0.1)

k = analysis.absorbing_wavenumber(medium)
