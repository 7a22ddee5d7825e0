"""Twisted Alexander polynomials from a deficiency-one presentation.

For a module M of dimension d over a presentation with generators x_j
and relators r_i, everything is assembled from the action tensored with
t^phi:

* the degree-zero polynomial is the gcd of the d x d minors of the block
  row [M(x_1)t^phi - 1 | ... | M(x_g)t^phi - 1];
* the Wada quotient is det(Fox Jacobian with one generator column
  removed) / det(M(x_j0)t^phi - 1), reduced to lowest terms;
* the degree-one polynomial is delta0 * numerator / denominator, which
  must divide exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .errors import (DegeneratePresentation, HypothesisViolation,
                     NonPolynomialQuotient, NotDeficiencyOne)
from .groups import fox_derivative
from .laurent import (LaurentPoly, laurent_exact_div, laurent_gcd,
                      normalize_associate)
from .linalg import MatL, det_laurent, gcd_of_minors
from .reps import build_tensor_dual, irreducible


def _symbolic_generator_block(M, j):
    """(M tensor t^phi)(x_j) - Id as a Laurent matrix."""
    P = M.presentation
    blk = MatL.lift(M.images[j], P.phi()[j])
    return blk - MatL.identity(M.field, M.dim)


def delta0(P, M):
    """Order of the degree-zero twisted module, normalized."""
    d = M.dim
    if d == 0:
        return LaurentPoly.one(M.field)
    row = _symbolic_generator_block(M, 0)
    for j in range(1, P.num_generators):
        row = row.hstack(_symbolic_generator_block(M, j))
    return gcd_of_minors(row, d)


def _fox_jacobian(P, M):
    """Block matrix of the symbolic Fox derivatives, ((r*d) x (g*d))."""
    blocks = []
    for i, r in enumerate(P.relators):
        brow = []
        for j in range(P.num_generators):
            brow.append(M.act_symbolic(fox_derivative(r, j)))
        blocks.append(brow)
    return blocks


def wada_quotient(P, M):
    """Reduced (numerator, denominator, removed generator index).

    The removed generator is the first (in declaration order) whose
    denominator det((M t^phi)(x_j) - Id) is nonzero.
    """
    if not P.deficiency_one():
        raise NotDeficiencyOne(
            f"{len(P.relators)} relators on {P.num_generators} generators")
    d = M.dim
    fld = M.field
    j0 = None
    den = None
    for j in range(P.num_generators):
        cand = det_laurent(_symbolic_generator_block(M, j))
        if not cand.is_zero():
            j0 = j
            den = cand
            break
    if j0 is None:
        raise DegeneratePresentation(
            "every candidate Wada denominator vanishes")
    blocks = _fox_jacobian(P, M)
    g = P.num_generators
    rows_of_blocks = []
    for i in range(len(P.relators)):
        row = None
        for j in range(g):
            if j == j0:
                continue
            row = blocks[i][j] if row is None else row.hstack(blocks[i][j])
        rows_of_blocks.append(row)
    jac = rows_of_blocks[0]
    for row in rows_of_blocks[1:]:
        rows = [jac.row(i) for i in range(jac.rows)] + \
               [row.row(i) for i in range(row.rows)]
        jac = MatL.from_rows(fld, rows)
    num = det_laurent(jac)
    g0 = laurent_gcd(num, den)
    if not (g0.is_zero() or (len(g0.terms) == 1 and 0 in g0.terms)):
        num_red = laurent_exact_div(num, g0)
        den_red = laurent_exact_div(den, g0)
        assert num_red is not None and den_red is not None
        num, den = num_red, den_red
    return normalize_associate(num), normalize_associate(den), j0


def wada_column_check(P, M):
    """All admissible removed generators give associated reduced quotients.

    Returns (ok, count) where count is the number of admissible columns.
    """
    if not P.deficiency_one():
        raise NotDeficiencyOne(
            f"{len(P.relators)} relators on {P.num_generators} generators")
    blocks = _fox_jacobian(P, M)
    fld = M.field
    g = P.num_generators
    quotients = []
    for j0 in range(g):
        den = det_laurent(_symbolic_generator_block(M, j0))
        if den.is_zero():
            continue
        rows_of_blocks = []
        for i in range(len(P.relators)):
            row = None
            for j in range(g):
                if j == j0:
                    continue
                row = blocks[i][j] if row is None else \
                    row.hstack(blocks[i][j])
            rows_of_blocks.append(row)
        jac = rows_of_blocks[0]
        for row in rows_of_blocks[1:]:
            rows = [jac.row(i) for i in range(jac.rows)] + \
                   [row.row(i) for i in range(row.rows)]
            jac = MatL.from_rows(fld, rows)
        num = det_laurent(jac)
        quotients.append((num, den))
    if not quotients:
        raise DegeneratePresentation(
            "every candidate Wada denominator vanishes")
    n0, d0 = quotients[0]
    ok = True
    for n1, d1 in quotients[1:]:
        if normalize_associate(n0 * d1) != normalize_associate(n1 * d0):
            ok = False
    return ok, len(quotients)


def delta1(P, M):
    """delta0 * wada numerator / wada denominator, exactly divisible."""
    d0 = delta0(P, M)
    if d0.is_zero():
        raise DegeneratePresentation(
            "degree-zero polynomial vanishes; the quotient method "
            "does not apply")
    num, den, _ = wada_quotient(P, M)
    q = laurent_exact_div(d0 * num, den)
    if q is None:
        raise NonPolynomialQuotient(
            "delta0 * numerator is not divisible by the denominator")
    return normalize_associate(q)


@dataclass
class AlexanderData:
    """All determinant evidence for one module, normalized throughout."""
    delta0: LaurentPoly
    wada_num: LaurentPoly
    wada_den: LaurentPoly
    delta1: Optional[LaurentPoly]
    removed_generator: int
    notes: list = dc_field(default_factory=list)


def alexander_data(P, M):
    d0 = delta0(P, M)
    num, den, j0 = wada_quotient(P, M)
    notes = []
    d1 = None
    if d0.is_zero():
        notes.append("degree-zero polynomial vanishes; delta1 skipped")
    else:
        q = laurent_exact_div(d0 * num, den)
        if q is None:
            raise NonPolynomialQuotient(
                "delta0 * numerator is not divisible by the denominator")
        d1 = normalize_associate(q)
        # internal consistency: delta1 * den and delta0 * num associated
        assert normalize_associate(d1 * den) == normalize_associate(d0 * num)
    return AlexanderData(d0, num, den, d1, j0, notes)


@dataclass
class DualityReport:
    degree0_ok: bool
    degree1_ok: bool
    hypothesis_ok: bool
    plus: AlexanderData
    minus: AlexanderData
    notes: list = dc_field(default_factory=list)

    @property
    def ok(self):
        return self.degree0_ok and self.degree1_ok


def duality_check(alpha, beta):
    """Associate-compare the polynomials of alpha(x)beta* and beta(x)alpha*
    after substituting t -> 1/t.

    Irreducibility of both inputs is the hypothesis that guarantees the
    symmetry; when it fails the check still runs, flagged advisory.
    """
    P = alpha.presentation
    notes = []
    hyp = True
    for rep, side in ((alpha, "alpha"), (beta, "beta")):
        if not irreducible(rep):
            hyp = False
            notes.append(f"{side} is reducible; symmetry is not guaranteed "
                         f"({HypothesisViolation.__name__})")
    plus = alexander_data(P, build_tensor_dual(alpha, beta))
    minus = alexander_data(P, build_tensor_dual(beta, alpha))

    def assoc_flip(p, q):
        return normalize_associate(p) == normalize_associate(q.subs_inverse())

    deg0 = assoc_flip(plus.delta0, minus.delta0)
    if plus.delta1 is None or minus.delta1 is None:
        deg1 = (plus.delta1 is None) == (minus.delta1 is None)
        notes.append("degree-one polynomials unavailable on a vanishing "
                     "degree-zero order")
    else:
        deg1 = assoc_flip(plus.delta1, minus.delta1)
    return DualityReport(deg0, deg1, hyp, plus, minus, notes)
