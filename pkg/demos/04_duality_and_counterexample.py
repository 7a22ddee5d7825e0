#!/usr/bin/env python3
"""Duality of twisted polynomials, and how semisimplicity earns it.

For completely reducible coefficients the polynomials in degrees 0 and 1
are symmetric under t -> 1/t; a unipotent bend of an abelian
representation destroys the symmetry already in degree zero.
"""

from twistalex import (duality_check, duality_failure_counterexample,
                       field, normalize_associate, trefoil_presentation,
                       trefoil_sl2_rep)

K = field(12)
P = trefoil_presentation()

print("semisimple side: tensor-dual pairs of irreducible SL2 members")
for s, s2 in ((1, 2), (3, 1), (2, 2)):
    report = duality_check(trefoil_sl2_rep(s), trefoil_sl2_rep(s2))
    print(f"  (s={s}, s'={s2}):  delta1+ = {report.plus.delta1},"
          f"  degree-0 symmetric: {report.degree0_ok},"
          f"  degree-1 symmetric: {report.degree1_ok}")
print()

lam = K.zeta()
df = duality_failure_counterexample(lam)
print(f"non-semisimple bend at lambda = zeta_12 "
      f"(non-abelian: {df.nonabelian})")
print(f"  delta0            = {df.delta0}")
print(f"  delta0 of the dual = {normalize_associate(df.delta0_dual)}")
print(f"  delta0 with t -> 1/t, renormalized = {df.flipped}")
print(f"  symmetry broken: {df.duality_fails}")
print()
print("the two roots lambda and 1/lambda differ, so no unit c*t^k can")
print("match the flipped polynomial with the dual one")
