import signflip_modal

analysis = signflip_modal.Analysis()

points = [(5, 2.0), (10.5, 3.0), (40, 1.0)]

rows = analysis.dump_golden_values("golden_j.csv", points, digits=30)
