import signflip_modal

analysis = signflip_modal.Analysis()

basis = signflip_modal.TransverseBasis.from_eigenvalues([1.0, 35.0 / 3.0, 20.0])
config = signflip_modal.WaveguideConfig(basis, -2.0, 3.0, 1.0)

scan = analysis.kernel_scan_unbounded(config, 3)
print(scan["kernel_indices"], scan["lambda_star"])
