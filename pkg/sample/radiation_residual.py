import signflip_modal

analysis = signflip_modal.Analysis()

profile = signflip_modal.RadiationProfile.outgoing_negative(2.0)

residual = analysis.radiation_residual(profile, 10.0)
