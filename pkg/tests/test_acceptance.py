"""Acceptance battery.

One test per criterion; every comparison is exact (no tolerances except
the stated 1e-9 on the display-only numeric embedding, which is not used
here).  Each test prints a single PASS line when it succeeds, so running
``pytest tests/test_acceptance.py -v -s`` gives one line per criterion.
"""

import random
from fractions import Fraction

from twistalex.alexander import alexander_data, duality_check, \
    wada_column_check
from twistalex.cohomology import (Cocycle, build_complex, cocycle_basis,
                                  cohomology_dims, cup_product,
                                  restrict_module, scalar_pairing)
from twistalex.cyclotomic import field
from twistalex.deform import (DEFORMABLE, NO_IRRED_DEFORMATION,
                              build_rho_cocycle, classify_deformation,
                              eq17_sides, parabolic_subspace_basis,
                              rho_plus)
from twistalex.groups import GroupRingElt, Word, fox_derivative
from twistalex.laurent import LaurentPoly, associated, normalize_associate
from twistalex.linalg import Mat
from twistalex.reps import (build_rho_lambda, build_tensor_dual,
                            irreducible, scalar_phi_rep,
                            trefoil_presentation, trefoil_sl2_rep,
                            trefoil_sl3_rep, trivial_rep)
from twistalex.trefoil import (duality_failure_counterexample,
                               symmetry_step, trace_coordinates)

K = field(12)
P = trefoil_presentation()
ONE = LaurentPoly.one(K)


def t_pow(k):
    return LaurentPoly.t_power(K, k)


def _report(name):
    print(f"PASS {name}")


def test_criterion_01_sl2_family_polynomials():
    for s in (1, 3):
        data = alexander_data(P, trefoil_sl2_rep(s).as_module())
        assert data.delta0 == ONE
        assert data.delta1 == t_pow(2) + ONE
    _report("criterion 1: irreducible SL2 family has delta0 ~ 1, "
            "delta1 ~ t^2 + 1 (s = 1, 3)")


def test_criterion_02_untwisted_baseline():
    data = alexander_data(P, trivial_rep(P, 1).as_module())
    assert data.delta0 == t_pow(1) - ONE
    assert data.delta1 == LaurentPoly(
        K, {2: K.one, 1: -K.one, 0: K.one})
    _report("criterion 2: untwisted baseline delta0 ~ t - 1, "
            "delta1 ~ t^2 - t + 1")


def test_criterion_03_deformability_classification():
    a1 = trefoil_sl2_rep(1)
    triv = trivial_rep(P, 1)
    for k in (1, 3, 5, 7, 9, 11):
        report = classify_deformation(P, a1, triv, K.zeta(k))
        assert report.classification == DEFORMABLE, f"zeta^{k}"
    for lam in (K.one, K.zeta(2)):
        report = classify_deformation(P, a1, triv, lam)
        assert report.classification == NO_IRRED_DEFORMATION
    _report("criterion 3: deformable at all six odd zeta powers; "
            "not at 1 and zeta^2")


def test_criterion_04_duality_battery():
    params = [1, 2, 3, Fraction(1, 2), Fraction(-5, 3), -1,
              K.zeta(2), K.one + K.zeta(3)]
    pairs = [(params[i], params[(i + 3) % len(params)]) for i in range(8)]
    pairs += [(1, 1), (Fraction(5, 2), -2)]
    assert len(pairs) == 10
    for s, s2 in pairs:
        alpha = trefoil_sl2_rep(s)
        beta = trefoil_sl2_rep(s2)
        assert irreducible(alpha) and irreducible(beta)
        report = duality_check(alpha, beta)
        assert report.degree0_ok and report.degree1_ok, (s, s2)
    _report("criterion 4: duality holds in degrees 0 and 1 on 10 "
            "irreducible SL2 parameter pairs")


def test_criterion_05_duality_failure_counterexample():
    lam = K.zeta()
    df = duality_failure_counterexample(lam)
    assert df.delta0 == normalize_associate(
        LaurentPoly(K, {1: K.one, 0: -lam.inverse()}))
    assert df.flipped != normalize_associate(df.delta0_dual)
    assert df.duality_fails and df.nonabelian
    _report("criterion 5: non-semisimple counterexample has "
            "delta0 ~ t - lambda^-1 and breaks the symmetry")


def test_criterion_06_twisted_dims_and_cup_product():
    a1 = trefoil_sl2_rep(1)
    triv = trivial_rep(P, 1)
    lam = K.zeta()
    Mp = build_tensor_dual(a1, triv, lam, 3)
    Mm = build_tensor_dual(triv, a1, lam.inverse(), 3)
    for module in (Mp, Mm):
        dims = cohomology_dims(build_complex(P, module))
        assert (dims.h0, dims.h1, dims.h2) == (0, 1, 1)
    Cp = build_complex(P, Mp)
    Ct = build_complex(P, trivial_rep(P, 1).as_module())
    phi = Cocycle(Ct, [[K.from_rational(v)] for v in P.phi()])
    _, reps = cocycle_basis(Cp)
    _, is_cb = cup_product(phi, reps[0], scalar_pairing(Mp))
    assert not is_cb
    _report("criterion 6: twisted modules have dims (0,1,1); "
            "the cup product class does not vanish")


def test_criterion_07_parabolic_chain():
    a1 = trefoil_sl2_rep(1)
    triv = trivial_rep(P, 1)
    rp, _ = rho_plus(P, a1, triv, K.zeta())
    from twistalex.reps import build_adjoint
    ad = build_adjoint(rp)
    assert cohomology_dims(build_complex(P, ad)).h1 == 2
    par = restrict_module(ad, parabolic_subspace_basis(K, 2, 1))
    dims = cohomology_dims(build_complex(P, par))
    assert dims.h0 == 0 and dims.h1 == 1
    _report("criterion 7: parabolic chain h0 = 0, h1 = 1; "
            "adjoint of the bend has h1 = 2")


def test_criterion_08_cocycle_dimension_identity():
    a1 = trefoil_sl2_rep(1)
    triv = trivial_rep(P, 1)
    assert eq17_sides(P, a1, triv, K.zeta()) == (11, 11)
    assert eq17_sides(P, a1, triv, K.zeta(2)) == (9, 9)
    _report("criterion 8: cocycle dimension identity holds at a root "
            "(11 = 11) and a non-root (9 = 9)")


def test_criterion_09_bend_equivalences():
    rng = random.Random(2024)
    a1 = trefoil_sl2_rep(1)
    triv = trivial_rep(P, 1)
    lam = K.zeta()
    rl = build_rho_lambda(a1, triv, lam)
    Mp = build_tensor_dual(a1, triv, lam, 3)
    Cp = build_complex(P, Mp)
    zb, _ = cocycle_basis(Cp)
    mismatches = 0
    for trial in range(50):
        kind = trial % 3
        if kind == 0:
            vals = [[K.element([rng.randint(-2, 2) for _ in range(4)])
                     for _ in range(2)] for _ in range(2)]
        elif kind == 1:
            vals = [[K.zero] * 2, [K.zero] * 2]
            for z in zb:
                c = K.from_rational(rng.randint(-2, 2))
                vals = [[a + c * b for a, b in zip(row, zrow)]
                        for row, zrow in zip(vals, z.values)]
        else:
            v = [K.element([rng.randint(-2, 2) for _ in range(4)])
                 for _ in range(2)]
            vals = [[a - b for a, b in zip(Mp.images[j].apply(v), v)]
                    for j in range(2)]
        rep = build_rho_cocycle(rl, vals, Mp)
        coc = Cocycle(Cp, vals)
        if rep.is_representation != coc.is_cocycle():
            mismatches += 1
        if rep.is_representation and \
                (rep.conjugating_witness is not None) != coc.is_coboundary():
            mismatches += 1
    assert mismatches == 0
    _report("criterion 9: 50 random cochains, representation iff cocycle "
            "and conjugate iff coboundary, zero mismatches")


def test_criterion_10_trace_plane_and_loci():
    rng = random.Random(35)
    om = K.zeta(4)
    # 20 random direct-vs-formula agreements (asserted inside) plus
    # symmetry closure
    for _ in range(20):
        s = Fraction(rng.randint(-9, 9), rng.choice([1, 2, 3]))
        t = Fraction(rng.randint(-9, 9), rng.choice([1, 2, 3]))
        c1 = trace_coordinates(s, t)
        s2, t2 = symmetry_step(c1.s, c1.t)
        c2 = trace_coordinates(s2, t2)
        assert c2.trace_m == om.inverse() * c1.trace_m
        assert c2.trace_m_inv == om * c1.trace_m_inv
        s3, t3 = symmetry_step(s2, t2)
        assert symmetry_step(s3, t3) == (c1.s, c1.t)
    cc = trace_coordinates(Fraction(2, 3), Fraction(2, 3))
    assert cc.trace_m.is_zero() and cc.trace_m_inv.is_zero()
    third = K.from_rational(Fraction(2, 3))
    assert symmetry_step(third, third) == (third, third)
    # SL2 locus: reducible exactly at 0 and 2i
    i2 = K.zeta(3) * 2
    for s, expect in ((K.zero, False), (K.one, True), (i2, False),
                      (K.from_rational(2), True), (-K.one, True)):
        assert irreducible(trefoil_sl2_rep(s)) == expect
    # SL3 locus on the 5x5 integer grid, which meets all three lines
    for si in range(5):
        for ti in range(5):
            expect = not (si == 0 or ti == 0 or si + ti == 2)
            assert irreducible(trefoil_sl3_rep(si, ti)) == expect
    _report("criterion 10: trace plane (20 random points, fixed point, "
            "order-3 symmetry) and irreducibility loci on the grid")


def test_criterion_11_property_suites():
    rng = random.Random(99)
    # Fox fundamental identity, 100 random words
    for _ in range(100):
        w = Word(tuple((rng.randint(0, 1), rng.choice([1, -1]))
                       for _ in range(rng.randint(0, 10))))
        total = GroupRingElt.zero()
        for j in range(2):
            d = fox_derivative(w, j)
            xj = Word.generator(j)
            shifted = GroupRingElt({u * xj: c for u, c in d.coeffs.items()})
            total = total + shifted - d
        assert total == GroupRingElt({w: 1}) - \
            GroupRingElt({Word.identity(): 1})

    # Wada column independence on the catalog cases
    a1 = trefoil_sl2_rep(1)
    triv = trivial_rep(P, 1)
    for module in (triv.as_module(), a1.as_module(),
                   scalar_phi_rep(P, K.zeta()).as_module(),
                   build_tensor_dual(a1, triv),
                   build_tensor_dual(a1, trefoil_sl2_rep(2))):
        ok, count = wada_column_check(P, module)
        assert ok and count == 2

    # direct-sum multiplicativity on 5 random pairs
    pool = [a1, trefoil_sl2_rep(2), trefoil_sl2_rep(Fraction(3, 2)),
            triv, scalar_phi_rep(P, K.zeta(2)),
            scalar_phi_rep(P, K.zeta(5))]
    for _ in range(5):
        r1, r2 = rng.sample(pool, 2)
        d = alexander_data(P, r1.direct_sum(r2).as_module())
        d1 = alexander_data(P, r1.as_module())
        d2 = alexander_data(P, r2.as_module())
        assert associated(d.delta0, d1.delta0 * d2.delta0)
        assert associated(d.delta1, d1.delta1 * d2.delta1)

    # conjugation invariance with 5 random conjugators
    base = alexander_data(P, a1.as_module())
    for _ in range(5):
        n = 2
        lower = Mat.identity(K, n)
        upper = Mat.identity(K, n)
        for i in range(n):
            for j in range(n):
                v = K.from_rational(rng.randint(-2, 2))
                if i > j:
                    lower.entries[i * n + j] = v
                elif i < j:
                    upper.entries[i * n + j] = v
        C = lower * upper
        d = alexander_data(P, a1.conjugate(C).as_module())
        assert associated(base.delta0, d.delta0)
        assert associated(base.delta1, d.delta1)
    _report("criterion 11: Fox identity (100 words), Wada column "
            "independence, direct-sum multiplicativity, conjugation "
            "invariance")
