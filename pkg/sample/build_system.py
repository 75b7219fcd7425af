import signflip_modal

analysis = signflip_modal.Analysis()

config = signflip_modal.DiskBallConfig(2, 1.0, -3.0, 2.0, 2.0)

system = analysis.build_system(config, 12, f_m=1.0, g_m=0.5)
print(system.determinant, system.inverse())
