import signflip_modal

analysis = signflip_modal.Analysis()

approximation = analysis.large_order_h(80, 1.0, N=3)
derivative = analysis.large_order_h(80, 1.0, N=3, derivative=True)
