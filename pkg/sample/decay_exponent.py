import signflip_modal

analysis = signflip_modal.Analysis()

sequence = signflip_modal.CoeffSequence.from_values([m ** -2.5 for m in range(1, 201)])

slope, r_squared = analysis.decay_exponent(sequence, fit_range=(20, 200))
