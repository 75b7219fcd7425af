import signflip_modal

analysis = signflip_modal.Analysis(threads=4)

config = signflip_modal.DiskBallConfig(2, 1.0, -1.0, 2.0, 2.0)

fit = analysis.inverse_entry_slopes(config, m_range=(20, 100))
print(fit["slopes"])
