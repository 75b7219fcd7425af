import signflip_modal

analysis = signflip_modal.Analysis()

root = analysis.branch_sqrt(-4.0 + 1e-3j)
