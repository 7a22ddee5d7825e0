#!/usr/bin/env python3
"""The plane of irreducible SL3 trefoil characters.

Meridian traces give exact affine coordinates on the character plane;
this script draws the three reducible lines on a small grid, follows one
orbit of the order-three symmetry, and shows that symmetric squares of
SL2 characters populate the diagonal.
"""

from fractions import Fraction

from twistalex import (coords_from_traces, field, irreducible,
                       sym_square_rep, symmetry_step, trace_coordinates,
                       trefoil_presentation, trefoil_sl2_rep,
                       trefoil_sl3_rep)

K = field(12)
P = trefoil_presentation()

print("reducible locus on the integer grid (+ = irreducible, . = reducible)")
for si in range(5):
    row = ""
    for ti in range(5):
        row += " + " if irreducible(trefoil_sl3_rep(si, ti)) else " . "
    print(f"  s={si}: {row}")
print("(the dots are exactly the lines s = 0, t = 0, s + t = 2)")
print()

s, t = Fraction(5, 2), Fraction(-3)
print(f"orbit of ({s}, {t}) under (s, t) -> (2 - s - t, s):")
cs, ct = K.from_rational(s), K.from_rational(t)
for step in range(4):
    cc = trace_coordinates(cs, ct)
    print(f"  ({cc.s}, {cc.t}) -> traces ({cc.trace_m}, {cc.trace_m_inv})")
    cs, ct = symmetry_step(cs, ct)
print("the orbit closes after three steps; the unique fixed point is "
      "(2/3, 2/3), where both traces vanish")
print()

print("symmetric squares of SL2 characters land on the diagonal:")
for s in (Fraction(1), Fraction(2), Fraction(1, 2), Fraction(-3)):
    r3 = sym_square_rep(trefoil_sl2_rep(s))
    tr_m = r3.trace_of(P.meridian)
    tr_mi = r3.trace_of(P.meridian.inverse())
    sc, tc = coords_from_traces(tr_m, tr_mi)
    print(f"  SL2 parameter {s}: plane coordinates ({sc}, {tc})")
