"""Twisted Alexander polynomials: frozen values, symmetry, multiplicativity."""

import random
from fractions import Fraction

import pytest

from twistalex.alexander import (alexander_data, delta0, duality_check,
                                 wada_column_check, wada_quotient)
from twistalex.cyclotomic import field
from twistalex.errors import NotDeficiencyOne
from twistalex.groups import Presentation, parse_word
from twistalex.laurent import LaurentPoly, associated, normalize_associate
from twistalex.linalg import Mat
from twistalex.reps import (build_tensor_dual, scalar_phi_rep,
                            torus_knot_presentation, trefoil_presentation,
                            trefoil_sl2_rep, trivial_rep)

K = field(12)
P = trefoil_presentation()
ONE = LaurentPoly.one(K)


def t(k=1):
    return LaurentPoly.t_power(K, k)


def poly(*pairs):
    return LaurentPoly(K, {e: K.from_rational(c) for e, c in pairs})


def test_trivial_rep_baseline():
    data = alexander_data(P, trivial_rep(P, 1).as_module())
    assert data.delta0 == t() - ONE
    assert data.wada_num == poly((2, 1), (1, -1), (0, 1))
    assert data.wada_den == t() - ONE
    assert data.delta1 == poly((2, 1), (1, -1), (0, 1))
    assert data.removed_generator == 0


def test_sl2_family_polynomials():
    for s in (1, 3, Fraction(1, 2)):
        data = alexander_data(P, trefoil_sl2_rep(s).as_module())
        assert data.delta0 == ONE
        assert data.delta1 == t(2) + ONE


def test_scalar_twist_polynomials():
    lam = K.zeta()
    data = alexander_data(P, scalar_phi_rep(P, lam).as_module())
    assert data.delta0 == normalize_associate(
        LaurentPoly(K, {1: K.one, 0: -lam.inverse()}))
    # reduced quotient pair is (lam^2 t^2 - lam t + 1, lam t - 1) up to units
    num_expect = LaurentPoly(K, {2: lam * lam, 1: -lam, 0: K.one})
    den_expect = LaurentPoly(K, {1: lam, 0: -K.one})
    assert associated(data.wada_num, num_expect)
    assert associated(data.wada_den, den_expect)
    d1_expect = LaurentPoly(K, {2: K.one, 1: -lam.inverse(),
                                0: lam.inverse() ** 2})
    assert data.delta1 == normalize_associate(d1_expect)


def test_wada_column_independence_catalog():
    lam = K.zeta()
    modules = [trivial_rep(P, 1).as_module(),
               trefoil_sl2_rep(1).as_module(),
               scalar_phi_rep(P, lam).as_module(),
               build_tensor_dual(trefoil_sl2_rep(1), trivial_rep(P, 1)),
               build_tensor_dual(trefoil_sl2_rep(1), trefoil_sl2_rep(2))]
    T52 = torus_knot_presentation(5, 2)
    for module in modules:
        ok, count = wada_column_check(P, module)
        assert ok and count == 2
    ok, count = wada_column_check(T52, trivial_rep(T52, 1).as_module())
    assert ok and count == 2


def test_wada_removed_generator_determinism():
    num, den, j0 = wada_quotient(P, trefoil_sl2_rep(1).as_module())
    assert j0 == 0  # first declared generator has nonzero denominator
    assert num == t(2) + ONE
    assert den == ONE


def test_kitano_relation_invariant():
    for module in (trivial_rep(P, 1).as_module(),
                   trefoil_sl2_rep(2).as_module()):
        data = alexander_data(P, module)
        lhs = normalize_associate(data.delta1 * data.wada_den)
        rhs = normalize_associate(data.delta0 * data.wada_num)
        assert lhs == rhs


def test_not_deficiency_one():
    r1 = parse_word("x^2*y^-3", ["x", "y"])
    r2 = parse_word("x*y*x^-1*y^-1", ["x", "y"])
    Q = Presentation("bad", ["x", "y"], [r1, r2])
    with pytest.raises(NotDeficiencyOne):
        wada_quotient(Q, trivial_rep(Q, 1).as_module())


def test_conjugation_invariance():
    rng = random.Random(51)
    base = trefoil_sl2_rep(1)
    d_base = alexander_data(P, base.as_module())
    for _ in range(5):
        C = _rand_invertible(rng, 2)
        conj = base.conjugate(C)
        d_conj = alexander_data(P, conj.as_module())
        assert associated(d_base.delta0, d_conj.delta0)
        assert associated(d_base.delta1, d_conj.delta1)


def _rand_invertible(rng, n):
    lower = Mat.identity(K, n)
    upper = Mat.identity(K, n)
    for i in range(n):
        for j in range(n):
            v = K.from_rational(rng.randint(-2, 2))
            if i > j:
                lower.entries[i * n + j] = v
            elif i < j:
                upper.entries[i * n + j] = v
    return lower * upper


def test_direct_sum_multiplicativity():
    rng = random.Random(52)
    pool = [trefoil_sl2_rep(1), trefoil_sl2_rep(2),
            trefoil_sl2_rep(Fraction(3, 2)), trivial_rep(P, 1),
            scalar_phi_rep(P, K.zeta(2))]
    for _ in range(5):
        r1, r2 = rng.sample(pool, 2)
        ds = r1.direct_sum(r2)
        d = alexander_data(P, ds.as_module())
        d1 = alexander_data(P, r1.as_module())
        d2 = alexander_data(P, r2.as_module())
        assert associated(d.delta0, d1.delta0 * d2.delta0)
        assert associated(d.delta1, d1.delta1 * d2.delta1)


def test_degree_zero_duality_for_sums_of_irreducibles():
    # completely reducible inputs: delta0 of the dual flips t -> 1/t
    reps = [trefoil_sl2_rep(1).direct_sum(trivial_rep(P, 1)),
            scalar_phi_rep(P, K.zeta()).direct_sum(
                scalar_phi_rep(P, K.zeta(5)))]
    for rep in reps:
        d = delta0(P, rep.as_module())
        dd = delta0(P, rep.dual().as_module())
        assert normalize_associate(d.subs_inverse()) == \
            normalize_associate(dd)


def test_sl2_self_duality():
    rng = random.Random(53)
    for _ in range(4):
        s = Fraction(rng.randint(-4, 4), rng.choice([1, 2]))
        rep = trefoil_sl2_rep(s)
        d = alexander_data(P, rep.as_module())
        dd = alexander_data(P, rep.dual().as_module())
        assert associated(d.delta0, dd.delta0)
        assert associated(d.delta1, dd.delta1)


def test_duality_check_reports():
    a1 = trefoil_sl2_rep(1)
    triv = trivial_rep(P, 1)
    rep = duality_check(a1, triv)
    assert rep.ok and rep.hypothesis_ok
    assert rep.plus.delta1 == t(2) + ONE
    rep2 = duality_check(triv, triv)
    assert rep2.ok and rep2.hypothesis_ok
    assert rep2.plus.delta0 == t() - ONE
    rep3 = duality_check(a1, trefoil_sl2_rep(2))
    assert rep3.ok and rep3.hypothesis_ok


def test_duality_check_flags_reducible():
    a0 = trefoil_sl2_rep(0)  # reducible
    rep = duality_check(a0, trivial_rep(P, 1))
    assert not rep.hypothesis_ok
    assert rep.notes


def test_torus_52_baseline():
    # classical polynomial of T(5,2): t^4 - t^3 + t^2 - t + 1
    T = torus_knot_presentation(5, 2)
    KT = field(12)
    data = alexander_data(T, trivial_rep(T, 1, fld=KT).as_module())
    expect = LaurentPoly(KT, {k: KT.from_rational((-1) ** k)
                              for k in range(5)})
    assert data.delta1 == normalize_associate(expect)
    assert data.delta0 == LaurentPoly.t_power(KT, 1) - LaurentPoly.one(KT)
