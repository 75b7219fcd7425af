import signflip_modal

analysis = signflip_modal.Analysis()

sequence = signflip_modal.CoeffSequence.from_values([m ** -2.5 for m in range(1, 201)])

partial_sums, verdict = analysis.sobolev_partial_sums(sequence, 1.0)
