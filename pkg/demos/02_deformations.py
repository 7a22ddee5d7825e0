#!/usr/bin/env python3
"""When does the block sum of SL2 x SL1 trefoil representations deform?

Scans lambda over all twelfth roots of unity, prints the classifier
verdict for each, and then inspects the deformable case: the bent
representation built from a degree-one cohomology class has the same
character as the block sum but is certifiably not conjugate to it.
"""

from twistalex import (algebra_dimension, build_rho_cocycle,
                       build_rho_lambda, build_tensor_dual,
                       classify_deformation, field, nonsemisimple_locus,
                       rho_plus, trefoil_presentation, trefoil_sl2_rep,
                       trivial_rep)

K = field(12)
P = trefoil_presentation()
alpha = trefoil_sl2_rep(1)
beta = trivial_rep(P, 1)

print("locus polynomial delta1+ * delta0+ =",
      nonsemisimple_locus(P, alpha, beta))
print()
print("lambda        delta1+(lambda^3)   multiplicity   classification")
for k in range(12):
    lam = K.zeta(k) if k else K.one
    rep = classify_deformation(P, alpha, beta, lam)
    val = rep.delta1_plus.eval_at(lam ** 3)
    print(f"zeta^{k:<2}       {str(val):<18}  {rep.delta1_plus_multiplicity:<12}"
          f" {rep.classification}")
print()

lam = K.zeta()
rp, d_plus = rho_plus(P, alpha, beta, lam)
rl = build_rho_lambda(alpha, beta, lam)
Mplus = build_tensor_dual(alpha, beta, lam, 3)
cand = build_rho_cocycle(rl, d_plus.values, Mplus)
print(f"bend at lambda = zeta: representation = {cand.is_representation},")
print(f"same character as the block sum = {cand.same_character},")
print(f"conjugating witness found = {cand.conjugating_witness is not None}")
print(f"generated algebra dimensions: bend {cand.algebra_dim} vs "
      f"block sum {algebra_dimension(rl)} (different => not conjugate)")
