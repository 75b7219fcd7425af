import signflip_modal

analysis = signflip_modal.Analysis(truncation=3)

approximation = analysis.large_order_j(50, 2.0)
exact = analysis.bessel_j(50, 2.0)

print(complex(approximation / exact))
