import signflip_modal

analysis = signflip_modal.Analysis()

basis = signflip_modal.TransverseBasis.dirichlet(1.0)
config = signflip_modal.WaveguideConfig(basis, -1.0, 2.0, 2.0)

report = analysis.regularity_report(config, n_max=50)
print(report.statement)
