import signflip_modal

analysis = signflip_modal.Analysis()

verdict = analysis.source_distance_check(1.0, 1.5)
