import numpy as np

import signflip_modal

analysis = signflip_modal.Analysis(threads=4)

config = signflip_modal.DiskBallConfig(2, 1.0, -3.0, 2.0, 2.0)
field = analysis.solve_field(config, {0: 1.0, 1: 0.5}, None, n_modes=3)

points = [(r, theta) for r in np.linspace(0.1, 2.0, 20) for theta in np.linspace(0.0, 6.0, 13)]
analysis.write_grid_csv("grid.csv", field, points)
