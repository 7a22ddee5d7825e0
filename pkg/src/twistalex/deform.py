"""Deformability of block-diagonal sums towards irreducible representations.

Given irreducible, infinitesimally regular alpha and beta and a scalar
lambda, the classifier evaluates the twisted Alexander polynomials of the
tensor-dual modules at lambda^n:

* a nonvanishing value of the degree-one polynomial rules out irreducible
  deformations (NO_IRRED_DEFORMATION);
* a simple root together with a nonvanishing degree-zero value certifies
  deformability (DEFORMABLE);
* anything else, including failed hypotheses, is INCONCLUSIVE.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .alexander import alexander_data
from .cohomology import (Cocycle, build_complex, cohomology_dims,
                         cocycle_basis)
from .errors import NoCocycle, ZeroArgument
from .laurent import (LaurentPoly, eval_and_multiplicity,
                      normalize_associate)
from .linalg import Mat, solve
from .reps import (Representation, algebra_dimension, build_adjoint,
                   build_rho_lambda, build_tensor_dual, irreducible)

NO_IRRED_DEFORMATION = "NO_IRRED_DEFORMATION"
DEFORMABLE = "DEFORMABLE"
INCONCLUSIVE = "INCONCLUSIVE"


def infinitesimally_regular(rep):
    """dim H^1 of the adjoint module equals dim - 1 (trivially met in
    dimension one, where the adjoint module is zero)."""
    if rep.dim == 1:
        return True
    dims = cohomology_dims(build_complex(rep.presentation,
                                         build_adjoint(rep)))
    return dims.h1 == rep.dim - 1


@dataclass
class DeformReport:
    alpha_label: str
    beta_label: str
    lam: object
    n: int
    alpha_irreducible: bool
    beta_irreducible: bool
    alpha_inf_regular: bool
    beta_inf_regular: bool
    delta0_plus: LaurentPoly
    delta1_plus: LaurentPoly
    delta0_plus_at: object
    delta1_plus_multiplicity: object
    duality_cross_check: bool
    classification: str
    notes: list = dc_field(default_factory=list)

    @property
    def hypotheses_ok(self):
        return (self.alpha_irreducible and self.beta_irreducible and
                self.alpha_inf_regular and self.beta_inf_regular)


def classify_deformation(P, alpha, beta, lam):
    """Decide deformability of the lambda-twisted sum of alpha and beta."""
    if not lam:
        raise ZeroArgument("lambda must be nonzero")
    n = alpha.dim + beta.dim
    mu = lam ** n

    plus = alexander_data(P, build_tensor_dual(alpha, beta))
    minus = alexander_data(P, build_tensor_dual(beta, alpha))

    val0 = plus.delta0.eval_at(mu)
    _, mult_plus = eval_and_multiplicity(plus.delta1, mu)

    # duality cross-check: both degrees agree under t -> 1/t, and the
    # multiplicity at lambda^-n on the minus side matches
    mu_inv = mu.inverse()
    dual0 = normalize_associate(plus.delta0) == \
        normalize_associate(minus.delta0.subs_inverse())
    dual1 = normalize_associate(plus.delta1) == \
        normalize_associate(minus.delta1.subs_inverse())
    _, mult_minus = eval_and_multiplicity(minus.delta1, mu_inv)
    duality_ok = dual0 and dual1 and (mult_plus == mult_minus)

    a_irr = irreducible(alpha)
    b_irr = irreducible(beta)
    a_reg = infinitesimally_regular(alpha)
    b_reg = infinitesimally_regular(beta)
    hyp = a_irr and b_irr and a_reg and b_reg

    notes = []
    if not a_irr:
        notes.append("alpha is reducible")
    if not b_irr:
        notes.append("beta is reducible")
    if not a_reg:
        notes.append("alpha is not infinitesimally regular")
    if not b_reg:
        notes.append("beta is not infinitesimally regular")
    if not duality_ok:
        notes.append("duality cross-check failed")

    if mult_plus == 0:
        classification = NO_IRRED_DEFORMATION
    elif val0 and mult_plus == 1 and hyp and duality_ok:
        classification = DEFORMABLE
    else:
        classification = INCONCLUSIVE
        if mult_plus not in (0, 1):
            notes.append(
                f"lambda^n is a root of multiplicity {mult_plus}; the "
                "simple-root criterion does not apply")
        if not val0:
            notes.append("degree-zero polynomial vanishes at lambda^n")

    return DeformReport(
        alpha_label=alpha.label, beta_label=beta.label, lam=lam, n=n,
        alpha_irreducible=a_irr, beta_irreducible=b_irr,
        alpha_inf_regular=a_reg, beta_inf_regular=b_reg,
        delta0_plus=plus.delta0, delta1_plus=plus.delta1,
        delta0_plus_at=val0, delta1_plus_multiplicity=mult_plus,
        duality_cross_check=duality_ok, classification=classification,
        notes=notes)


def nonsemisimple_locus(P, alpha, beta):
    """Normalized product delta1+ * delta0+.

    A reducible, non-semisimple representation with the character of the
    lambda-twisted sum exists exactly when lambda^n is a root.
    """
    plus = alexander_data(P, build_tensor_dual(alpha, beta))
    return normalize_associate(plus.delta1 * plus.delta0)


@dataclass
class CandidateReport:
    images: list
    is_representation: bool
    cocycle_ok: bool
    same_character: bool
    conjugating_witness: Optional[Mat]
    algebra_dim: Optional[int]


def character_sample(P, max_len=3):
    """Deterministic word sample: all reduced words of length <= max_len
    plus meridian powers m, m^2, m^-1 when a meridian is declared."""
    from .groups import Word
    g = P.num_generators
    alphabet = []
    for j in range(g):
        alphabet.append(Word.generator(j, 1))
        alphabet.append(Word.generator(j, -1))
    words = []
    seen = set()
    frontier = [Word.identity()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for a in alphabet:
                u = w * a
                if len(u) == len(w) + 1 and u.letters not in seen:
                    seen.add(u.letters)
                    words.append(u)
                    nxt.append(u)
        frontier = nxt
    if P.meridian is not None:
        m = P.meridian
        for extra in (m, m * m, m.inverse()):
            if extra.letters not in seen:
                seen.add(extra.letters)
                words.append(extra)
    return words


def build_rho_cocycle(rho_lambda, cochain_values, module_plus):
    """Candidate gamma -> [[Id, c(gamma)], [0, Id]] . rho_lambda(gamma).

    ``cochain_values`` holds one module_plus vector per generator (the
    vec of an a x b block, row-major).  The candidate is a representation
    exactly when the cochain is a cocycle; a conjugating witness to
    rho_lambda is produced when it is a coboundary.
    """
    P = rho_lambda.presentation
    fld = rho_lambda.field
    if rho_lambda.block_sizes is None:
        raise ZeroArgument("rho_lambda must carry its block sizes")
    a, b = rho_lambda.block_sizes
    n = a + b

    def upper_unipotent(vec):
        m = Mat.identity(fld, n)
        for i in range(a):
            for j in range(b):
                m.entries[i * n + (a + j)] = vec[i * b + j]
        return m

    images = [upper_unipotent(v) * rho_lambda.images[j]
              for j, v in enumerate(cochain_values)]

    ident = Mat.identity(fld, n)
    inverses = [m.inverse() for m in images]
    is_rep = True
    for rel in P.relators:
        img = ident
        for g, s in rel.letters:
            img = img * (images[g] if s == 1 else inverses[g])
        if img != ident:
            is_rep = False
            break

    complex_plus = build_complex(P, module_plus)
    c = Cocycle(complex_plus, list(cochain_values))
    cocycle_ok = c.is_cocycle()

    same_char = True
    if is_rep:
        cand = Representation(P, images, label="candidate",
                              special_linear=True, block_sizes=(a, b),
                              _checked=True)
        for w in character_sample(P):
            if cand.trace_of(w) != rho_lambda.trace_of(w):
                same_char = False
                break
    else:
        same_char = False

    witness = None
    if is_rep:
        v = solve(complex_plus.delta0, c.stacked())
        if v is not None:
            U = upper_unipotent([-e for e in v])
            Uinv = U.inverse()
            conj_ok = all(U * rho_lambda.images[j] * Uinv == images[j]
                          for j in range(P.num_generators))
            if conj_ok:
                witness = U

    alg_dim = algebra_dimension(
        Representation(P, images, label="candidate", special_linear=False,
                       _checked=True)) if is_rep else None

    return CandidateReport(images=images, is_representation=is_rep,
                           cocycle_ok=cocycle_ok, same_character=same_char,
                           conjugating_witness=witness, algebra_dim=alg_dim)


def rho_plus(P, alpha, beta, lam):
    """The non-semisimple bend of rho_lambda along a generator of H^1.

    Requires a nonvanishing H^1 of the lambda^n-twisted tensor-dual
    module; raises NoCocycle otherwise.
    """
    if not lam:
        raise ZeroArgument("lambda must be nonzero")
    n = alpha.dim + beta.dim
    module = build_tensor_dual(alpha, beta, lam, n)
    C = build_complex(P, module)
    _, reps = cocycle_basis(C)
    if not reps:
        raise NoCocycle("H^1 of the twisted tensor-dual module vanishes")
    d_plus = reps[0]
    rl = build_rho_lambda(alpha, beta, lam)
    a, b = rl.block_sizes
    fld = rl.field
    images = []
    for j, v in enumerate(d_plus.values):
        m = Mat.identity(fld, a + b)
        for i in range(a):
            for jj in range(b):
                m.entries[i * (a + b) + (a + jj)] = v[i * b + jj]
        images.append(m * rl.images[j])
    rep = Representation(P, images, label="rho_plus", special_linear=True,
                         block_sizes=(a, b))
    return rep, d_plus


def parabolic_subspace_basis(fld, a, b):
    """Basis vectors (in adjoint coordinates) of the traceless matrices
    preserving the flag C^a in C^(a+b): everything above the lower-left
    block."""
    n = a + b
    idx = []
    pos = 0
    for i in range(n):
        for j in range(n):
            if i != j:
                if not (i >= a and j < a):
                    idx.append(pos)
                pos += 1
    d = n * n - 1
    basis = []
    for k in idx:
        v = [fld.zero] * d
        v[k] = fld.one
        basis.append(v)
    for k in range(n - 1):
        v = [fld.zero] * d
        v[n * (n - 1) + k] = fld.one
        basis.append(v)
    return basis


def eq17_sides(P, alpha, beta, lam):
    """Both sides of the cocycle-dimension identity for the twisted sum.

    Left: dim Z^1 of the adjoint module of rho_lambda.  Right:
    n^2 + n - 3 + h1 - h0 of the lambda^(+-n)-twisted tensor-dual modules.
    """
    n = alpha.dim + beta.dim
    rl = build_rho_lambda(alpha, beta, lam)
    lhs = cohomology_dims(build_complex(P, build_adjoint(rl))).z1
    dplus = cohomology_dims(
        build_complex(P, build_tensor_dual(alpha, beta, lam, n)))
    dminus = cohomology_dims(
        build_complex(P, build_tensor_dual(beta, alpha, lam.inverse(), n)))
    rhs = (n * n + n - 3 + dplus.h1 - dplus.h0 + dminus.h1 - dminus.h0)
    return lhs, rhs


def torsion_jump_equivalence(P, alpha, beta, lam):
    """For each sign: h1 > h0 of the twisted module iff the opposite-side
    degree-one polynomial vanishes at the opposite evaluation point.

    Returns ((plus_jump, minus_vanishes), (minus_jump, plus_vanishes)).
    """
    n = alpha.dim + beta.dim
    mu = lam ** n
    plus_mod = build_tensor_dual(alpha, beta, lam, n)
    minus_mod = build_tensor_dual(beta, alpha, lam.inverse(), n)
    dp = cohomology_dims(build_complex(P, plus_mod))
    dm = cohomology_dims(build_complex(P, minus_mod))
    plus_poly = alexander_data(P, build_tensor_dual(alpha, beta)).delta1
    minus_poly = alexander_data(P, build_tensor_dual(beta, alpha)).delta1
    minus_vanishes = not minus_poly.eval_at(mu.inverse())
    plus_vanishes = not plus_poly.eval_at(mu)
    return ((dp.h1 > dp.h0, minus_vanishes), (dm.h1 > dm.h0, plus_vanishes))
