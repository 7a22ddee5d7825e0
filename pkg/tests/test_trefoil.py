"""The trefoil battery: trace plane, involutions, duality failure, suite."""

from fractions import Fraction

import pytest

from twistalex.cyclotomic import field
from twistalex.errors import BadParams
from twistalex.laurent import LaurentPoly, normalize_associate
from twistalex.trefoil import (coords_from_traces,
                               duality_failure_counterexample,
                               sl2_involution_check, suite_passed,
                               symmetry_step, trace_coordinates,
                               trefoil_suite)

K = field(12)


def test_fixed_point_traces():
    cc = trace_coordinates(Fraction(2, 3), Fraction(2, 3))
    assert cc.trace_m.is_zero() and cc.trace_m_inv.is_zero()


def test_origin_traces():
    cc = trace_coordinates(0, 0)
    assert cc.trace_m == K.from_rational(2)
    assert cc.trace_m_inv == K.from_rational(2)


def test_symmetry_orbit():
    om = K.zeta(4)
    c1 = trace_coordinates(Fraction(5, 2), -3)
    s2, t2 = symmetry_step(c1.s, c1.t)
    c2 = trace_coordinates(s2, t2)
    assert c2.trace_m == om.inverse() * c1.trace_m
    assert c2.trace_m_inv == om * c1.trace_m_inv
    s3, t3 = symmetry_step(s2, t2)
    s4, t4 = symmetry_step(s3, t3)
    assert (s4, t4) == (c1.s, c1.t)


def test_symmetry_unique_fixed_point():
    third = K.from_rational(Fraction(2, 3))
    assert symmetry_step(third, third) == (third, third)
    # any other sample point moves
    one = K.one
    assert symmetry_step(one, one) != (one, one)


def test_coords_roundtrip():
    for s, t in ((0, 0), (1, 2), (Fraction(2, 3), Fraction(2, 3)), (-3, 5)):
        cc = trace_coordinates(s, t)
        s2, t2 = coords_from_traces(cc.trace_m, cc.trace_m_inv)
        assert (s2, t2) == (cc.s, cc.t)


def test_involution_checks():
    assert sl2_involution_check(1, K.zeta())
    assert sl2_involution_check(0, K.zeta(5))
    assert sl2_involution_check(K.zeta(3) * 2, K.zeta())
    assert sl2_involution_check(Fraction(7, 2), K.zeta(7))


def test_duality_failure_counterexample():
    lam = K.zeta()
    df = duality_failure_counterexample(lam)
    assert df.nonabelian
    expect = normalize_associate(
        LaurentPoly(K, {1: K.one, 0: -lam.inverse()}))
    assert df.delta0 == expect
    assert normalize_associate(df.delta0_dual) == expect
    assert df.flipped == normalize_associate(
        LaurentPoly(K, {1: K.one, 0: -lam}))
    assert df.duality_fails


def test_duality_failure_other_root():
    # zeta^5 also has (zeta^5)^2 = zeta^10 a primitive sixth root
    df = duality_failure_counterexample(K.zeta(5))
    assert df.duality_fails and df.nonabelian


def test_duality_failure_preconditions():
    with pytest.raises(BadParams):
        duality_failure_counterexample(K.one)
    with pytest.raises(BadParams):
        duality_failure_counterexample(-K.one)
    with pytest.raises(BadParams):
        duality_failure_counterexample(K.zeta(3))  # square is -1


def test_full_suite_passes():
    records = trefoil_suite(seed=0)
    failures = [r.id for r in records if not r.status]
    assert suite_passed(records), f"failing items: {failures}"
    ids = [r.id for r in records]
    assert len(ids) == len(set(ids))
    assert "deformability-classification" in ids
    assert all(r.evidence for r in records)


def test_suite_deterministic():
    a = trefoil_suite(seed=0, fast=True)
    b = trefoil_suite(seed=0, fast=True)
    assert [(r.id, r.status, r.evidence) for r in a] == \
        [(r.id, r.status, r.evidence) for r in b]
