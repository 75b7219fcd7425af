import signflip_modal

analysis = signflip_modal.Analysis()

record = analysis.limiting_k("negative", 2.0)
print(record["limit"], record["deviations"][-1])
