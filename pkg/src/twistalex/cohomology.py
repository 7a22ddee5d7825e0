"""Cochain complexes of presentation 2-complexes with twisted coefficients.

For a module M of dimension d over a presentation with g generators and
r relators the complex is

    M --delta0--> M^g --delta1--> M^r

with delta0 the stacked blocks M(x_j) - Id and delta1 the Fox Jacobian
blocks M(dr_i/dx_j).  H^0 and H^1 are always group cohomology; H^2 agrees
with group cohomology exactly when the presentation complex is aspherical,
which holds for one-relator presentations whose relator is not a proper
power; the flag records this.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotInvariant, PairingMismatch
from .groups import Word, fox_derivative
from .linalg import Mat, in_column_space, kernel_basis, rank, solve
from .reps import RepModule


class CochainComplex:
    def __init__(self, presentation, module):
        self.presentation = presentation
        self.module = module
        P, M = presentation, module
        d = M.dim
        g = P.num_generators
        r = len(P.relators)
        fld = M.field
        ident = Mat.identity(fld, d)
        # delta0: (g*d) x d, stacked generator blocks
        rows = []
        for j in range(g):
            blk = M.images[j] - ident
            rows.extend(blk.row(i) for i in range(d))
        self.delta0 = Mat.from_rows(fld, rows) if rows else Mat(fld, 0, d, [])
        # delta1: (r*d) x (g*d), Fox blocks
        rrows = []
        for rel in P.relators:
            blocks = [M.act_group_ring(fox_derivative(rel, j))
                      for j in range(g)]
            for i in range(d):
                row = []
                for blk in blocks:
                    row.extend(blk.row(i))
                rrows.append(row)
        self.delta1 = Mat.from_rows(fld, rrows) if rrows else \
            Mat(fld, 0, g * d, [])
        self.aspherical = (r == 1 and not P.relators[0].is_proper_power()) \
            or (r == 0)
        if d and r and g:
            prod = self.delta1 * self.delta0
            if any(e for e in prod.entries):
                raise AssertionError(
                    "delta1 . delta0 != 0: presentation complex is broken")

    @property
    def dim(self):
        return self.module.dim


@dataclass
class CohomDims:
    h0: int
    z1: int
    b1: int
    h1: int
    h2: int
    aspherical: bool

    def __iter__(self):
        return iter((self.h0, self.h1, self.h2))


def build_complex(P, M):
    return CochainComplex(P, M)


def cohomology_dims(C):
    d = C.dim
    g = C.presentation.num_generators
    r = len(C.presentation.relators)
    r0 = rank(C.delta0)
    r1 = rank(C.delta1)
    h0 = d - r0
    z1 = g * d - r1
    b1 = r0
    return CohomDims(h0=h0, z1=z1, b1=b1, h1=z1 - b1, h2=r * d - r1,
                     aspherical=C.aspherical)


@dataclass
class Cocycle:
    """Values on the generators of a crossed morphism (or a candidate)."""
    complex: CochainComplex
    values: list  # one module vector per generator

    @classmethod
    def from_stacked(cls, C, vec):
        d = C.dim
        vals = [vec[j * d:(j + 1) * d]
                for j in range(C.presentation.num_generators)]
        return cls(C, vals)

    def stacked(self):
        out = []
        for v in self.values:
            out.extend(v)
        return out

    def is_cocycle(self):
        img = self.complex.delta1.apply(self.stacked())
        return all(not e for e in img)

    def is_coboundary(self):
        return in_column_space(self.complex.delta0, self.stacked())


def cocycle_basis(C):
    """(basis of Z^1, chosen H^1 representatives).

    The Z^1 basis is the deterministic kernel basis of delta1; the H^1
    representatives are the echelon-first members independent modulo the
    column space of delta0.
    """
    fld = C.module.field
    z_basis = [Cocycle.from_stacked(C, v) for v in kernel_basis(C.delta1)]
    # greedy complement of B^1 inside Z^1
    d = C.dim
    g = C.presentation.num_generators
    span_cols = [C.delta0.col(j) for j in range(C.delta0.cols)]
    reps = []
    for z in z_basis:
        candidate = span_cols + [c.stacked() for c in reps] + [z.stacked()]
        m = Mat.from_rows(fld, candidate).transpose() if candidate else None
        before = Mat.from_rows(fld, candidate[:-1]).transpose() \
            if candidate[:-1] else None
        r_with = rank(m) if m else 0
        r_without = rank(before) if before else 0
        if r_with > r_without:
            reps.append(z)
    return z_basis, reps


def cocycle_extend(c, w):
    """Crossed-morphism value on a word: d(uv) = d(u) + u d(v), with
    d(x^-1) = -x^-1 d(x)."""
    M = c.complex.module
    fld = M.field
    acc = [fld.zero] * M.dim
    prefix = Mat.identity(fld, M.dim)
    for g, s in w.letters:
        if s == 1:
            dval = c.values[g]
            step = M.images[g]
        else:
            inv = M.inverses[g]
            dval = [-e for e in inv.apply(c.values[g])]
            step = inv
        move = prefix.apply(dval)
        acc = [a + b for a, b in zip(acc, move)]
        prefix = prefix * step
    return acc


class Pairing:
    """Group-invariant bilinear map between module coordinate spaces."""

    def __init__(self, dim_a, dim_b, target, func, name="pairing"):
        self.dim_a = dim_a
        self.dim_b = dim_b
        self.target = target  # RepModule
        self.func = func
        self.name = name

    def __call__(self, u, v):
        if len(u) != self.dim_a or len(v) != self.dim_b:
            raise PairingMismatch(
                f"{self.name} expects lengths {self.dim_a},{self.dim_b}; "
                f"got {len(u)},{len(v)}")
        out = self.func(u, v)
        if len(out) != self.target.dim:
            raise PairingMismatch(f"{self.name} returned a vector of length "
                                  f"{len(out)}, target dim {self.target.dim}")
        return out


def scalar_pairing(module):
    """C (x) M -> M, scalar multiplication into the given module."""
    return Pairing(1, module.dim, module,
                   lambda u, v: [u[0] * x for x in v],
                   name="scalar")


def transfer_two_cochain(P, f, target_module):
    """Evaluate a bar 2-cochain on the presentation 2-cells.

    ``f(prefix_word, letter_word) -> target vector``.  The comparison map
    sends the cell of a relator y_1...y_k to the sum of bar simplices
    [y_1...y_(i-1) | y_i] minus, for every inverse letter, the correction
    prefix . [y_i | y_i^-1]; the correction is what makes this a genuine
    chain map on freely written relators.
    """
    fld = target_module.field
    out = []
    for rel in P.relators:
        total = [fld.zero] * target_module.dim
        letters = rel.letters
        prefix = Word.identity()
        for i, (g, s) in enumerate(letters):
            letter = Word.generator(g, s)
            if i >= 1:
                val = f(prefix, letter)
                total = [a + b for a, b in zip(total, val)]
            if s == -1:
                corr = f(letter, letter.inverse())
                corr = target_module.act_word(prefix).apply(corr)
                total = [a - b for a, b in zip(total, corr)]
            prefix = prefix * letter
        out.append(total)
    return out


def cup_product(c1, c2, pairing):
    """Transferred cup product of two 1-cochains and its coboundary test.

    The bar 2-cochain is (g1, g2) -> pairing(c1(g1), g1 . c2(g2)); the
    result is its value on each relator 2-cell plus the verdict whether
    the stacked vector lies in the image of the target coboundary.
    """
    CA, CB = c1.complex, c2.complex
    if CA.presentation != CB.presentation:
        raise PairingMismatch("cup factors over different presentations")
    if pairing.dim_a != CA.dim or pairing.dim_b != CB.dim:
        raise PairingMismatch("pairing dimensions do not match the factors")
    P = CA.presentation
    B = CB.module

    def f(g1, g2):
        u = cocycle_extend(c1, g1)
        v = cocycle_extend(c2, g2)
        return pairing(u, B.act_word(g1).apply(v))

    values = transfer_two_cochain(P, f, pairing.target)
    target_complex = CochainComplex(P, pairing.target)
    stacked = [e for v in values for e in v]
    is_cb = in_column_space(target_complex.delta1, stacked)
    return values, is_cb


def restrict_module(M, basis_vectors, tag="restricted"):
    """The action of M on an invariant subspace, in the given basis.

    Raises NotInvariant when some generator image leaves the span.
    """
    fld = M.field
    if not basis_vectors:
        return RepModule(M.presentation,
                         [Mat(fld, 0, 0, []) for _ in M.images],
                         tag=tag, label=f"{M.label}|restricted")
    span = Mat.from_rows(fld, basis_vectors).transpose()
    images = []
    for j, G in enumerate(M.images):
        cols = []
        for vi, v in enumerate(basis_vectors):
            w = G.apply(v)
            x = solve(span, w)
            if x is None:
                raise NotInvariant(M.presentation.generators[j], vi)
            cols.append(x)
        m = len(basis_vectors)
        ent = [cols[c][r] for r in range(m) for c in range(m)]
        images.append(Mat(fld, m, m, ent))
    return RepModule(M.presentation, images, tag=tag,
                     label=f"{M.label}|restricted")
