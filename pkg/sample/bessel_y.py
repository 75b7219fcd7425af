import signflip_modal

analysis = signflip_modal.Analysis()

value = analysis.bessel_y(40, 1.0)
