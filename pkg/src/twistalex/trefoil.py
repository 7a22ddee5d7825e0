"""Executable battery of trefoil computations.

Everything here runs in exact arithmetic over Q(zeta_12): the meridian
trace plane of the SL3 family, the order-three symmetry, the symmetric
square diagonal, the non-semisimple duality-failure construction, and
the full structured suite used by the command line front end.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .alexander import alexander_data, duality_check, wada_column_check
from .cohomology import (Cocycle, build_complex, cocycle_basis,
                         cohomology_dims, cup_product, restrict_module,
                         scalar_pairing)
from .cyclotomic import field
from .deform import (DEFORMABLE, NO_IRRED_DEFORMATION, build_rho_cocycle,
                     build_rho_lambda, classify_deformation, eq17_sides,
                     parabolic_subspace_basis, rho_plus,
                     torsion_jump_equivalence, character_sample)
from .errors import BadParams, NoCocycle
from .laurent import LaurentPoly, normalize_associate
from .linalg import Mat
from .reps import (Representation, _roots, build_adjoint,
                   build_tensor_dual, irreducible, scalar_phi_rep,
                   sym_square_rep, trefoil_presentation, trefoil_sl2_rep,
                   trefoil_sl3_rep, trivial_rep)


@dataclass
class CharCoords:
    s: object
    t: object
    trace_m: object
    trace_m_inv: object


def _trace_formula(fld, s, t):
    """Affine meridian-trace map of the SL3 family."""
    _, _, om = _roots(fld)
    om2 = om * om
    tr_m = fld.from_rational(2) + (om2 - fld.one) * s + (om - fld.one) * t
    tr_mi = fld.from_rational(2) + (om - fld.one) * s + (om2 - fld.one) * t
    return tr_m, tr_mi


def trace_coordinates(s, t, fld=None):
    """Meridian traces of the SL3 family, computed two ways.

    Direct matrix product against the closed affine formula; a mismatch
    is a transcription bug and raises immediately.
    """
    fld = fld or field(12)
    P = trefoil_presentation()
    rho = trefoil_sl3_rep(s, t, fld=fld, presentation=P)
    s = rho.images[0][1, 0]
    t = rho.images[0][2, 0]
    m = P.meridian
    direct_m = rho.trace_of(m)
    direct_mi = rho.trace_of(m.inverse())
    formula_m, formula_mi = _trace_formula(fld, s, t)
    if direct_m != formula_m or direct_mi != formula_mi:
        raise AssertionError("meridian trace formula mismatch")
    return CharCoords(s=s, t=t, trace_m=direct_m, trace_m_inv=direct_mi)


def coords_from_traces(tr_m, tr_mi, fld=None):
    """Invert the affine meridian-trace map."""
    fld = fld or field(12)
    _, _, om = _roots(fld)
    om2 = om * om
    a = om2 - fld.one
    b = om - fld.one
    det = a * a - b * b
    x = tr_m - fld.from_rational(2)
    y = tr_mi - fld.from_rational(2)
    s = (a * x - b * y) / det
    t = (a * y - b * x) / det
    return s, t


def symmetry_step(s, t, fld=None):
    """The order-three symmetry on coordinates: (s, t) -> (2-s-t, s)."""
    fld = fld or field(12)
    two = fld.from_rational(2)
    return two - s - t, s


def sl2_involution_check(s, lam, fld=None):
    """Character identities of the sign involution on the SL2 family.

    Verifies on a deterministic word sample that (a) twisting by the sign
    character before the SL3 embedding equals embedding at -lambda, and
    (b) the involution sends the parameter s to 2i - s.  Also certifies
    that the meridian trace is the exact affine function
    i*(eta^-1 - eta) + s*(eta - eta^-1) of s.
    """
    fld = fld or field(12)
    P = trefoil_presentation()
    i, eta, _ = _roots(fld)
    alpha = trefoil_sl2_rep(s, fld=fld, presentation=P)
    s = alpha.images[0][1, 0]
    triv = trivial_rep(P, 1, fld=fld)
    # sign involution: negate the image of x
    sigma_alpha = Representation(P, [-alpha.images[0], alpha.images[1]],
                                 label="sigma(alpha)")
    sample = character_sample(P)
    left = build_rho_lambda(sigma_alpha, triv, lam)
    right = build_rho_lambda(alpha, triv, -lam)
    embed_ok = all(left.trace_of(w) == right.trace_of(w) for w in sample)

    mirrored = trefoil_sl2_rep(i * 2 - s, fld=fld, presentation=P)
    char_ok = all(sigma_alpha.trace_of(w) == mirrored.trace_of(w)
                  for w in sample)

    eta_bar = eta.inverse()
    expected = i * (eta_bar - eta) + s * (eta - eta_bar)
    linear_ok = alpha.trace_of(P.meridian) == expected
    return embed_ok and char_ok and linear_ok


@dataclass
class DualityFailure:
    rho_images: list
    nonabelian: bool
    delta0: LaurentPoly
    delta0_dual: LaurentPoly
    flipped: LaurentPoly
    duality_fails: bool


def duality_failure_counterexample(lam, fld=None):
    """A non-semisimple SL2 representation whose degree-zero polynomial
    breaks the t -> 1/t symmetry.

    Requires lambda^2 to be a root of the untwisted degree-one polynomial
    t^2 - t + 1 (so a primitive sixth root of unity) and lambda != +-1.
    The diagonal part is diag(lambda^phi, lambda^-phi) bent by a
    non-principal crossed morphism, coupled so that the lambda^phi
    character survives into degree zero and the order is t - lambda^-1.
    """
    fld = fld or field(12)
    P = trefoil_presentation()
    lam2 = lam * lam
    if lam == fld.one or lam == -fld.one:
        raise BadParams("lambda must differ from +-1")
    if lam2 * lam2 - lam2 + fld.one != fld.zero:
        raise BadParams("lambda^2 must be a root of t^2 - t + 1")
    scalar = scalar_phi_rep(P, lam2.inverse())
    C = build_complex(P, scalar.as_module(tag="scalar-twist"))
    _, reps = cocycle_basis(C)
    if not reps:
        raise NoCocycle("no non-principal crossed morphism at this lambda")
    d = reps[0]
    phi = P.phi()
    images = []
    for j in range(P.num_generators):
        dj = d.values[j][0]
        lp = lam ** phi[j]
        lm = lam ** (-phi[j])
        images.append(Mat.from_rows(fld, [[lp, fld.zero], [dj * lp, lm]]))
    rho = Representation(P, images, label="nonsemisimple")
    x, y = rho.images
    nonabelian = (x * y != y * x)
    data = alexander_data(P, rho.as_module())
    dual = alexander_data(P, rho.dual().as_module())
    flipped = normalize_associate(data.delta0.subs_inverse())
    fails = flipped != normalize_associate(dual.delta0)
    return DualityFailure(rho_images=images, nonabelian=nonabelian,
                          delta0=data.delta0, delta0_dual=dual.delta0,
                          flipped=flipped, duality_fails=fails)


# ---------------------------------------------------------------------------
# structured suite

@dataclass
class CheckRecord:
    id: str
    label: str
    status: bool
    evidence: list = dc_field(default_factory=list)


def _rand_param(rng):
    return Fraction(rng.randint(-6, 6), rng.choice([1, 1, 2, 3]))


def trefoil_suite(seed=0, fast=False):
    """Run the whole battery; every item is an independent exact check."""
    fld = field(12)
    P = trefoil_presentation()
    rng = random.Random(seed)
    records = []

    def record(id_, label, status, evidence):
        records.append(CheckRecord(id_, label, bool(status),
                                   [str(e) for e in evidence]))

    one = LaurentPoly.one(fld)
    t_poly = LaurentPoly.t_power(fld, 1)
    triv = trivial_rep(P, 1, fld=fld)

    # 1. polynomials of the irreducible SL2 family
    ok = True
    ev = []
    for s in (1, 3):
        data = alexander_data(P, trefoil_sl2_rep(s, fld=fld,
                                                 presentation=P).as_module())
        expect1 = LaurentPoly(fld, {0: fld.one, 2: fld.one})
        ok &= data.delta0 == one and data.delta1 == expect1
        ev.append(f"s={s}: delta0={data.delta0}, delta1={data.delta1}")
    record("sl2-family-polynomials",
           "irreducible SL2 family: delta0 ~ 1 and delta1 ~ t^2 + 1",
           ok, ev)

    # 2. untwisted baseline
    data = alexander_data(P, triv.as_module())
    expect = LaurentPoly(fld, {0: fld.one, 1: -fld.one, 2: fld.one})
    ok = (data.delta0 == normalize_associate(t_poly - one)
          and data.delta1 == expect)
    record("untwisted-baseline",
           "trivial coefficients: delta0 ~ t - 1, delta1 ~ t^2 - t + 1",
           ok, [f"delta0={data.delta0}", f"delta1={data.delta1}"])

    # 3. scalar twist order
    lam = fld.zeta()
    data = alexander_data(P, scalar_phi_rep(P, lam).as_module())
    expected = normalize_associate(
        LaurentPoly(fld, {1: fld.one, 0: -lam.inverse()}))
    record("scalar-twist-order",
           "one-dimensional twist: delta0 ~ t - lambda^-1",
           data.delta0 == expected, [f"delta0={data.delta0}"])

    # 4. SL2 irreducibility locus
    two_i = fld.zeta(3) * 2
    verdicts = []
    ok = True
    for s, expect_irr in ((fld.zero, False), (fld.one, True),
                          (two_i, False), (fld.from_rational(2), True),
                          (-fld.one, True)):
        got = irreducible(trefoil_sl2_rep(s, fld=fld, presentation=P))
        ok &= got == expect_irr
        verdicts.append(f"s={s}: {'irr' if got else 'red'}")
    record("sl2-irreducibility-locus",
           "SL2 family reducible exactly at s in {0, 2i}", ok, verdicts)

    # 5. SL3 irreducibility locus on a 5x5 grid
    ok = True
    bad = []
    for si in range(5):
        for ti in range(5):
            s = fld.from_rational(si)
            t = fld.from_rational(ti)
            expect_irr = not (si == 0 or ti == 0 or si + ti == 2)
            got = irreducible(trefoil_sl3_rep(s, t, fld=fld,
                                              presentation=P))
            if got != expect_irr:
                ok = False
                bad.append(f"({si},{ti})")
    record("sl3-irreducibility-locus",
           "SL3 family reducible exactly on s=0, t=0, s+t=2 (5x5 grid)",
           ok, bad or ["all 25 grid verdicts match"])

    # 6. deformability classification
    a1 = trefoil_sl2_rep(1, fld=fld, presentation=P)
    ok = True
    ev = []
    for k in (1, 3, 5, 7, 9, 11):
        rep = classify_deformation(P, a1, triv, fld.zeta(k))
        ok &= rep.classification == DEFORMABLE
        ev.append(f"zeta^{k}: {rep.classification}")
    for lamv, name in ((fld.one, "1"), (fld.zeta(2), "zeta^2")):
        rep = classify_deformation(P, a1, triv, lamv)
        ok &= rep.classification == NO_IRRED_DEFORMATION
        ev.append(f"{name}: {rep.classification}")
    record("deformability-classification",
           "odd powers of zeta deformable; 1 and zeta^2 are not", ok, ev)

    # 7. twisted module dims
    Mplus = build_tensor_dual(a1, triv, lam, 3)
    Mminus = build_tensor_dual(triv, a1, lam.inverse(), 3)
    dp = cohomology_dims(build_complex(P, Mplus))
    dm = cohomology_dims(build_complex(P, Mminus))
    ok = tuple(dp) == (0, 1, 1) and tuple(dm) == (0, 1, 1)
    record("twisted-module-dims",
           "twisted tensor-dual modules have (h0,h1,h2) = (0,1,1)",
           ok, [f"plus {tuple(dp)}", f"minus {tuple(dm)}"])

    # 8. cup product obstruction
    Ctriv = build_complex(P, triv.as_module())
    phi_coc = Cocycle(Ctriv, [[fld.from_rational(v)] for v in P.phi()])
    Cp = build_complex(P, Mplus)
    _, h1_reps = cocycle_basis(Cp)
    _, is_cb = cup_product(phi_coc, h1_reps[0], scalar_pairing(Mplus))
    record("cup-product-obstruction",
           "abelianization cup generator class survives in degree two",
           not is_cb, [f"is_coboundary={is_cb}"])

    # 9. non-semisimple bend chain
    rp, _ = rho_plus(P, a1, triv, lam)
    ad_rp = build_adjoint(rp)
    d_ad = cohomology_dims(build_complex(P, ad_rp))
    restr = restrict_module(ad_rp, parabolic_subspace_basis(fld, 2, 1),
                            tag="parabolic")
    d_par = cohomology_dims(build_complex(P, restr))
    ok = d_ad.h1 == 2 and d_par.h0 == 0 and d_par.h1 == 1
    record("nonsemisimple-bend-chain",
           "bent representation: h1(adjoint)=2, h0(parabolic)=0, "
           "h1(parabolic)=1", ok,
           [f"h1(ad)={d_ad.h1}", f"h0(p)={d_par.h0}", f"h1(p)={d_par.h1}"])

    # 10. meridian trace plane
    ok = True
    ev = []
    cc = trace_coordinates(Fraction(2, 3), Fraction(2, 3), fld=fld)
    ok &= not cc.trace_m and not cc.trace_m_inv
    ev.append(f"fixed point traces ({cc.trace_m}, {cc.trace_m_inv})")
    cc0 = trace_coordinates(0, 0, fld=fld)
    ok &= cc0.trace_m == 2 and cc0.trace_m_inv == 2
    ev.append(f"origin traces ({cc0.trace_m}, {cc0.trace_m_inv})")
    _, _, om = _roots(fld)
    n_rand = 5 if fast else 20
    for _ in range(n_rand):
        s, t = _rand_param(rng), _rand_param(rng)
        c1 = trace_coordinates(s, t, fld=fld)   # asserts both routes agree
        s2, t2 = symmetry_step(c1.s, c1.t, fld=fld)
        c2 = trace_coordinates(s2, t2, fld=fld)
        # (s,t) -> (2-s-t, s) is the coordinate action of twisting by the
        # inverse third root: traces scale by (om^-1, om)
        ok &= c2.trace_m == om.inverse() * c1.trace_m
        ok &= c2.trace_m_inv == om * c1.trace_m_inv
        s3, t3 = symmetry_step(s2, t2, fld=fld)
        s4, t4 = symmetry_step(s3, t3, fld=fld)
        ok &= (s4, t4) == (c1.s, c1.t)
    third = fld.from_rational(Fraction(2, 3))
    fp = symmetry_step(third, third, fld=fld)
    ok &= fp == (third, third)
    ev.append(f"{n_rand} random symmetry orbits close")
    record("meridian-trace-plane",
           "meridian traces: formula agreement, fixed point, order-3 "
           "symmetry", ok, ev)

    # 11. symmetric square diagonal
    ok = True
    for _ in range(3 if fast else 6):
        s = _rand_param(rng)
        r3 = sym_square_rep(trefoil_sl2_rep(s, fld=fld, presentation=P))
        tr_m = r3.trace_of(P.meridian)
        tr_mi = r3.trace_of(P.meridian.inverse())
        sc, tc = coords_from_traces(tr_m, tr_mi, fld=fld)
        ok &= sc == tc
    record("sym-square-diagonal",
           "symmetric square characters land on the diagonal s = t",
           ok, ["coordinates agree on random parameters"])

    # 12. duality failure example
    df = duality_failure_counterexample(fld.zeta(), fld=fld)
    expected = normalize_associate(
        LaurentPoly(fld, {1: fld.one, 0: -fld.zeta().inverse()}))
    ok = (df.nonabelian and df.duality_fails
          and df.delta0 == expected
          and normalize_associate(df.delta0_dual) == expected)
    record("duality-failure-example",
           "non-semisimple representation breaks the t -> 1/t symmetry",
           ok, [f"delta0={df.delta0}", f"delta0*={df.delta0_dual}",
                f"flipped={df.flipped}", f"nonabelian={df.nonabelian}"])

    # 13. duality battery
    pairs = [(1, 2), (1, 3), (3, Fraction(1, 2))]
    if not fast:
        pairs += [(2, 2), (1, Fraction(5, 3))]
    ok = True
    ev = []
    for s1, s2 in pairs:
        repa = trefoil_sl2_rep(s1, fld=fld, presentation=P)
        repb = trefoil_sl2_rep(s2, fld=fld, presentation=P)
        rep = duality_check(repa, repb)
        ok &= rep.ok and rep.hypothesis_ok
        ev.append(f"(s={s1}, s'={s2}): deg0 {rep.degree0_ok}, "
                  f"deg1 {rep.degree1_ok}")
    record("duality-battery",
           "tensor-dual polynomial symmetry across SL2 parameter pairs",
           ok, ev)

    # 14. cocycle dimension identity
    ok = True
    ev = []
    for lamv, name in ((lam, "zeta"), (fld.zeta(2), "zeta^2")):
        lhs, rhs = eq17_sides(P, a1, triv, lamv)
        ok &= lhs == rhs
        ev.append(f"{name}: {lhs} = {rhs}")
    record("cocycle-dimension-identity",
           "adjoint cocycle dimension matches the twisted-module "
           "decomposition", ok, ev)

    # 15. torsion jump equivalence
    ok = True
    ev = []
    for lamv, name in ((lam, "zeta"), (fld.zeta(2), "zeta^2")):
        (pj, mv), (mj, pv) = torsion_jump_equivalence(P, a1, triv, lamv)
        ok &= (pj == mv) and (mj == pv)
        ev.append(f"{name}: plus ({pj},{mv}), minus ({mj},{pv})")
    record("torsion-jump-equivalence",
           "cohomology jump iff opposite-side polynomial root", ok, ev)

    # 16. bend candidate battery
    rl = build_rho_lambda(a1, triv, lam)
    Cp = build_complex(P, Mplus)
    zb, _ = cocycle_basis(Cp)
    mism = 0
    trials = 12 if fast else 24
    for trial in range(trials):
        kind = trial % 3
        if kind == 0:
            vals = [[fld.element([rng.randint(-2, 2) for _ in range(4)])
                     for _ in range(2)] for _ in range(2)]
        elif kind == 1:
            vals = [[fld.zero] * 2, [fld.zero] * 2]
            for z in zb:
                c = fld.from_rational(rng.randint(-2, 2))
                vals = [[a + c * b for a, b in zip(row, zrow)]
                        for row, zrow in zip(vals, z.values)]
        else:
            v = [fld.element([rng.randint(-2, 2) for _ in range(4)])
                 for _ in range(2)]
            vals = [[a - b for a, b in zip(Mplus.images[j].apply(v), v)]
                    for j in range(2)]
        repc = build_rho_cocycle(rl, vals, Mplus)
        coc = Cocycle(Cp, vals)
        if repc.is_representation != repc.cocycle_ok:
            mism += 1
        if repc.is_representation and \
                (repc.conjugating_witness is not None) != coc.is_coboundary():
            mism += 1
    record("bend-candidate-battery",
           "candidate is a representation iff cocycle; conjugate iff "
           "coboundary", mism == 0, [f"{trials} trials, {mism} mismatches"])

    # 17. Wada column independence
    ok = True
    ev = []
    cases = [("trivial", triv.as_module()),
             ("sl2 s=1", a1.as_module()),
             ("scalar twist", scalar_phi_rep(P, lam).as_module()),
             ("tensor-dual", build_tensor_dual(a1, triv))]
    for name, module in cases:
        good, count = wada_column_check(P, module)
        ok &= good
        ev.append(f"{name}: {count} admissible columns agree")
    record("wada-column-independence",
           "reduced quotients agree for every removed generator", ok, ev)

    return records


def suite_passed(records):
    return all(r.status for r in records)
