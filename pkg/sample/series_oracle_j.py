import signflip_modal

analysis = signflip_modal.Analysis()

# mpmath value certified to 50 significant digits
reference = analysis.series_oracle_j(5, 2.0, digits=50)
