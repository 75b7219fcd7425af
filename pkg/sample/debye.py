import signflip_modal

analysis = signflip_modal.Analysis()

# J_n(n z) with z = sech(alpha) and two correction terms
value = analysis.debye("J", 100, 0.5, terms=2)
