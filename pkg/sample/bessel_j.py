import signflip_modal

analysis = signflip_modal.Analysis()

# J_5(2) as mantissa * e^exponent
value = analysis.bessel_j(5, 2.0)

# Orders far beyond the double range stay representable
tiny = analysis.bessel_j(300, 0.1)
print(tiny.log_abs())
