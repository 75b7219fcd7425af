import signflip_modal

analysis = signflip_modal.Analysis()

approximation = analysis.large_order_h_spherical(100, 2.0)
