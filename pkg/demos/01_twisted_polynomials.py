#!/usr/bin/env python3
"""Twisted Alexander polynomials of the trefoil, step by step.

Walks the full pipeline once by hand: Fox derivatives of the relator,
the symbolic Jacobian, the Wada quotient, and the degree-0/1 polynomials
for three coefficient systems (trivial, scalar twist, irreducible SL2).
"""

from twistalex import (alexander_data, field, fox_derivative, rep_apply,
                       scalar_phi_rep, trefoil_presentation,
                       trefoil_sl2_rep, trivial_rep, word_to_str)

K = field(12)
P = trefoil_presentation()
print(f"presentation: {P!r}")
print(f"abelianization phi = {P.phi()}  "
      f"(meridian {P.word_str(P.meridian)} has phi = "
      f"{P.phi_of(P.meridian)})")
print()

rel = P.relators[0]
for j, name in enumerate(P.generators):
    d = fox_derivative(rel, j)
    terms = " + ".join(f"{c}*[{word_to_str(w, P.generators)}]"
                       for w, c in sorted(d.coeffs.items(),
                                          key=lambda kv: len(kv[0])))
    print(f"Fox derivative d(relator)/d{name} = {terms}")
print()

for label, rep in [("trivial 1-dim", trivial_rep(P, 1)),
                   ("scalar twist lambda^phi, lambda = zeta_12",
                    scalar_phi_rep(P, K.zeta())),
                   ("irreducible SL2 member (s = 1)", trefoil_sl2_rep(1))]:
    module = rep.as_module()
    blk = rep_apply(rep, fox_derivative(rel, 0), twist="t")
    print(f"-- {label}")
    print(f"   symbolic x-block of the Jacobian: {blk!r}")
    data = alexander_data(P, module)
    print(f"   delta0 = {data.delta0}")
    print(f"   Wada quotient = ({data.wada_num}) / ({data.wada_den}),"
          f" removed generator {P.generators[data.removed_generator]}")
    print(f"   delta1 = {data.delta1}")
    print()

print("All polynomials are canonical associates: lowest exponent 0 and")
print("monic top coefficient; every identity above is exact in Q(zeta_12).")
