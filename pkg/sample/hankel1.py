import signflip_modal

analysis = signflip_modal.Analysis()

# H^(1)_nu = J_nu + i Y_nu, half-integer orders included
value = analysis.hankel1(2.5, 3.0)
