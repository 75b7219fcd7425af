import signflip_modal

analysis = signflip_modal.Analysis()

reference = analysis.series_oracle_y(40, 1.0)
