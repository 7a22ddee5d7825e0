"""Representations of finitely presented groups over a cyclotomic field.

A ``Representation`` stores validated generator images (relators must map
to the identity); a ``RepModule`` is a matrix action together with the
basis semantics it was built in (raw, adjoint, tensor-dual, restricted or
scalar twist), which is what the homology and cohomology machinery
consumes.

The catalog provides the torus-knot presentations and the explicit
families of irreducible SL2/SL3 trefoil representations used throughout
the test batteries, instantiated exactly in Q(zeta_12) by default.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .cyclotomic import CycElt, field
from .errors import (BadParams, DeterminantNotOne, FieldMismatch, ParseError,
                     RelatorViolation, ZeroArgument)
from .groups import GroupRingElt, Presentation, Word, parse_word
from .linalg import Mat, MatL, block_diag


class Representation:
    """Generator images in GL_n over a cyclotomic field, relator-checked."""

    def __init__(self, presentation, images, label="rep",
                 special_linear=True, block_sizes=None, _checked=False):
        self.presentation = presentation
        self.images = list(images)
        self.label = label
        self.special_linear = special_linear
        self.block_sizes = block_sizes
        if not images:
            raise BadParams("a representation needs at least one generator")
        self.field = images[0].field
        self.dim = images[0].rows
        if not _checked:
            _validate(self)
        self.inverses = [m.inverse() for m in self.images]

    def image_of(self, w):
        out = Mat.identity(self.field, self.dim)
        for g, s in w.letters:
            out = out * (self.images[g] if s == 1 else self.inverses[g])
        return out

    def trace_of(self, w):
        return self.image_of(w).trace()

    def as_module(self, tag="raw"):
        return RepModule(self.presentation, self.images, tag=tag,
                         label=self.label)

    def dual(self):
        """Dual representation: gamma -> transpose(image(gamma)^-1)."""
        return Representation(self.presentation,
                              [m.transpose() for m in self.inverses],
                              label=f"{self.label}*",
                              special_linear=self.special_linear,
                              _checked=True)

    def conjugate(self, C):
        Cinv = C.inverse()
        return Representation(self.presentation,
                              [C * m * Cinv for m in self.images],
                              label=f"{self.label}^C",
                              special_linear=self.special_linear,
                              _checked=True)

    def direct_sum(self, other):
        if self.presentation != other.presentation:
            raise BadParams("direct sum needs a common presentation")
        images = [block_diag(self.field, [a, b])
                  for a, b in zip(self.images, other.images)]
        return Representation(self.presentation, images,
                              label=f"{self.label}+{other.label}",
                              special_linear=self.special_linear and
                              other.special_linear, _checked=True)

    def __repr__(self):
        return f"<rep {self.label}: dim {self.dim} over {self.field!r}>"


def _validate(rep):
    fld = rep.field
    for m in rep.images:
        if m.rows != m.cols or m.rows != rep.dim:
            raise BadParams("generator images must be square of equal size")
        if m.field.N != fld.N:
            raise FieldMismatch("generator images over different conductors")
    if rep.special_linear:
        for idx, m in enumerate(rep.images):
            if m.det() != fld.one:
                raise DeterminantNotOne(
                    f"generator {rep.presentation.generators[idx]} has "
                    f"determinant {m.det()}")
    ident = Mat.identity(fld, rep.dim)
    inverses = [m.inverse() for m in rep.images]
    for idx, r in enumerate(rep.presentation.relators):
        img = Mat.identity(fld, rep.dim)
        for g, s in r.letters:
            img = img * (rep.images[g] if s == 1 else inverses[g])
        if img != ident:
            raise RelatorViolation(idx, img - ident)


def check_representation(images, P, label="rep", special_linear=True):
    """Validate generator images against P; raises RelatorViolation or
    DeterminantNotOne on failure."""
    return Representation(P, images, label=label,
                          special_linear=special_linear)


class RepModule:
    """A matrix action of the group together with basis provenance."""

    def __init__(self, presentation, images, tag="raw", label="module"):
        self.presentation = presentation
        self.images = list(images)
        self.tag = tag
        self.label = label
        if images:
            self.field = images[0].field
            self.dim = images[0].rows
        else:
            raise BadParams("a module needs generator actions")
        self.inverses = [m.inverse() for m in self.images]

    def act_word(self, w):
        out = Mat.identity(self.field, self.dim)
        for g, s in w.letters:
            out = out * (self.images[g] if s == 1 else self.inverses[g])
        return out

    def act_group_ring(self, elt):
        out = Mat.zero(self.field, self.dim, self.dim)
        for w, c in elt.coeffs.items():
            out = out + self.act_word(w) * self.field.from_rational(c)
        return out

    def act_symbolic(self, x):
        """Image under the action tensored with t^phi, as a Laurent matrix."""
        P = self.presentation
        if isinstance(x, Word):
            return MatL.lift(self.act_word(x), P.phi_of(x))
        out = MatL.zero(self.field, self.dim, self.dim)
        for w, c in x.coeffs.items():
            out = out + MatL.lift(self.act_word(w) *
                                  self.field.from_rational(c), P.phi_of(w))
        return out

    def twist(self, lam, power):
        """Extra scalar twist lambda^(power*phi) on every generator."""
        if not lam:
            raise ZeroArgument("twist parameter must be nonzero")
        P = self.presentation
        images = []
        for j, m in enumerate(self.images):
            k = power * P.phi()[j]
            images.append(m * lam ** k)
        return RepModule(P, images, tag=f"{self.tag}|twist^{power}",
                         label=self.label)

    def __repr__(self):
        return f"<module {self.label} [{self.tag}]: dim {self.dim}>"


def rep_apply(target, x, twist=None):
    """Apply a Representation or RepModule to a Word or GroupRingElt.

    ``twist=None`` gives a field matrix; ``twist=(lam, c)`` multiplies by
    lambda^(c*phi); ``twist='t'`` tensors with t^phi and returns a
    Laurent matrix.
    """
    module = target.as_module() if isinstance(target, Representation) \
        else target
    if twist == "t":
        return module.act_symbolic(x)
    if twist is not None:
        lam, c = twist
        module = module.twist(lam, c)
    if isinstance(x, Word):
        return module.act_word(x)
    if isinstance(x, GroupRingElt):
        return module.act_group_ring(x)
    raise BadParams("rep_apply expects a Word or a GroupRingElt")


# ---------------------------------------------------------------------------
# module constructions

def build_tensor_dual(alpha, beta, lam=None, power=0):
    """The a*b-dimensional action A |-> lambda^(power*phi) alpha A beta^-1.

    Basis: matrix units E_kl in row-major order (vec convention), so a
    group element acts by kron(alpha(g), transpose(beta(g)^-1)) times the
    scalar twist.
    """
    if alpha.presentation != beta.presentation:
        raise BadParams("tensor-dual needs a common presentation")
    if alpha.field.N != beta.field.N:
        raise FieldMismatch("tensor-dual factors over different conductors")
    P = alpha.presentation
    phi = P.phi()
    images = []
    for j in range(P.num_generators):
        m = alpha.images[j].kron(beta.inverses[j].transpose())
        if lam is not None and power != 0:
            if not lam:
                raise ZeroArgument("tensor-dual twist must be nonzero")
            m = m * lam ** (power * phi[j])
        images.append(m)
    tag = f"tensor-dual({alpha.dim},{beta.dim},{power})"
    return RepModule(P, images, tag=tag,
                     label=f"{alpha.label}(x){beta.label}*")


def _sl_basis(fld, n):
    """Basis of sl_n: off-diagonal units (lexicographic), then diagonal
    differences E_kk - E_(k+1)(k+1)."""
    basis = []
    for i in range(n):
        for j in range(n):
            if i != j:
                m = Mat.zero(fld, n, n)
                m.entries[i * n + j] = fld.one
                basis.append(m)
    for k in range(n - 1):
        m = Mat.zero(fld, n, n)
        m.entries[k * n + k] = fld.one
        m.entries[(k + 1) * n + (k + 1)] = -fld.one
        basis.append(m)
    return basis


def _sl_coords(fld, m):
    """Coordinates of a traceless matrix in the _sl_basis order."""
    n = m.rows
    out = []
    for i in range(n):
        for j in range(n):
            if i != j:
                out.append(m[i, j])
    acc = fld.zero
    for k in range(n - 1):
        acc = acc + m[k, k]
        out.append(acc)
    return out


def build_adjoint(rho):
    """The (n^2-1)-dimensional adjoint action on traceless matrices."""
    fld = rho.field
    n = rho.dim
    P = rho.presentation
    if n == 1:
        # sl_1 = 0; a dimension-zero module is represented by 0x0 actions
        return RepModule(P, [Mat(fld, 0, 0, [])
                             for _ in range(P.num_generators)],
                         tag="adjoint", label=f"sl({n}) Ad {rho.label}")
    basis = _sl_basis(fld, n)
    d = len(basis)
    images = []
    for g in range(P.num_generators):
        A = rho.images[g]
        Ainv = rho.inverses[g]
        cols = []
        for b in basis:
            cols.append(_sl_coords(fld, A * b * Ainv))
        ent = [cols[j][i] for i in range(d) for j in range(d)]
        images.append(Mat(fld, d, d, ent))
    return RepModule(P, images, tag="adjoint",
                     label=f"sl({n}) Ad {rho.label}")


def build_rho_lambda(alpha, beta, lam):
    """Block-diagonal sum (lambda^(b*phi) (x) alpha) + (lambda^(-a*phi) (x) beta)."""
    if not lam:
        raise ZeroArgument("lambda must be nonzero")
    if alpha.presentation != beta.presentation:
        raise BadParams("summands need a common presentation")
    P = alpha.presentation
    a, b = alpha.dim, beta.dim
    phi = P.phi()
    images = []
    for j in range(P.num_generators):
        top = alpha.images[j] * lam ** (b * phi[j])
        bot = beta.images[j] * lam ** (-a * phi[j])
        images.append(block_diag(alpha.field, [top, bot]))
    return Representation(P, images, label=f"rho_lambda({alpha.label},{beta.label})",
                          special_linear=True, block_sizes=(a, b))


def irreducible(target):
    """Burnside test: the generated matrix algebra has dimension n^2.

    The span starts from the identity and the generator images and their
    inverses, and is closed under left multiplication by the images; the
    dimension strictly increases until stable, so at most n^2 rounds run.
    """
    if isinstance(target, Representation):
        images, inverses, n, fld = (target.images, target.inverses,
                                    target.dim, target.field)
    else:
        images, inverses, n, fld = (target.images, target.inverses,
                                    target.dim, target.field)
    if n == 0:
        return True
    gens = images + inverses
    basis_rows = []
    pivots = []

    def reduce_add(vec):
        v = list(vec)
        for (p, row) in zip(pivots, basis_rows):
            if v[p]:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        for idx, val in enumerate(v):
            if val:
                inv = val.inverse()
                v = [e * inv for e in v]
                pivots.append(idx)
                basis_rows.append(v)
                return True
        return False

    queue = [Mat.identity(fld, n)] + list(gens)
    frontier = []
    for m in queue:
        if reduce_add(m.entries):
            frontier.append(m)
    while frontier and len(basis_rows) < n * n:
        new_frontier = []
        for m in frontier:
            for g in gens:
                p = g * m
                if reduce_add(p.entries):
                    new_frontier.append(p)
                    if len(basis_rows) == n * n:
                        return True
        frontier = new_frontier
    return len(basis_rows) == n * n


def algebra_dimension(target):
    """Dimension of the matrix algebra generated by the image."""
    images, inverses, n, fld = (target.images, target.inverses,
                                target.dim, target.field)
    gens = images + inverses
    basis_rows = []
    pivots = []

    def reduce_add(vec):
        v = list(vec)
        for (p, row) in zip(pivots, basis_rows):
            if v[p]:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        for idx, val in enumerate(v):
            if val:
                inv = val.inverse()
                v = [e * inv for e in v]
                pivots.append(idx)
                basis_rows.append(v)
                return True
        return False

    frontier = []
    for m in [Mat.identity(fld, n)] + list(gens):
        if reduce_add(m.entries):
            frontier.append(m)
    while frontier and len(basis_rows) < n * n:
        new_frontier = []
        for m in frontier:
            for g in gens:
                p = g * m
                if reduce_add(p.entries):
                    new_frontier.append(p)
        frontier = new_frontier
    return len(basis_rows)


# ---------------------------------------------------------------------------
# catalog

def trefoil_presentation():
    gens = ["x", "y"]
    rel = parse_word("x^2*y^-3", gens)
    meridian = parse_word("x*y^-1", gens)
    return Presentation("trefoil", gens, [rel], meridian=meridian)


def torus_knot_presentation(p, q):
    """T(p,q) as <x, y | x^p = y^q> with a meridian from extended Euclid."""
    if p < 2 or q < 2 or math.gcd(p, q) != 1:
        raise BadParams("torus knot parameters must be coprime and >= 2")
    gens = ["x", "y"]
    rel = parse_word(f"x^{p}*y^-{q}", gens)
    # phi(x) = q, phi(y) = p; meridian x^u y^v with u*q + v*p = 1
    g, u, v = _xgcd(q, p)
    assert g == 1
    meridian = Word(tuple([(0, 1 if u > 0 else -1)] * abs(u) +
                          [(1, 1 if v > 0 else -1)] * abs(v)))
    return Presentation(f"torus({p},{q})", gens, [rel], meridian=meridian)


def _xgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def _as_field_elt(fld, value):
    if isinstance(value, CycElt):
        if value.field.N != fld.N:
            raise FieldMismatch("parameter lives in a different conductor")
        return value
    if isinstance(value, (int, Fraction)):
        return fld.from_rational(value)
    if isinstance(value, str):
        return fld.parse(value)
    raise BadParams(f"cannot coerce {value!r} into {fld!r}")


def _roots(fld):
    """i, a primitive sixth root and a primitive third root in Q(zeta_N)."""
    N = fld.N
    if N % 12 != 0:
        raise BadParams("the trefoil families need a conductor divisible by 12")
    return fld.zeta(N // 4), fld.zeta(N // 6), fld.zeta(N // 3)


def trefoil_sl2_rep(s, fld=None, presentation=None):
    """The standard family of SL2 trefoil representations.

    x maps to [[i, 0], [s, -i]] and y to [[eta, eta^-1 - eta], [0, eta^-1]]
    with eta a primitive sixth root of unity; irreducible iff s != 0, 2i.
    """
    fld = fld or field(12)
    P = presentation or trefoil_presentation()
    i, eta, _ = _roots(fld)
    s = _as_field_elt(fld, s)
    eta_bar = eta.inverse()
    X = Mat.from_rows(fld, [[i, fld.zero], [s, -i]])
    Y = Mat.from_rows(fld, [[eta, eta_bar - eta], [fld.zero, eta_bar]])
    return Representation(P, [X, Y], label=f"sl2[s={s}]")


def trefoil_sl3_rep(s, t, fld=None, presentation=None):
    """The two-parameter family of SL3 trefoil representations.

    Reducible exactly on the three lines s = 0, t = 0, s + t = 2.
    """
    fld = fld or field(12)
    P = presentation or trefoil_presentation()
    _, _, om = _roots(fld)
    s = _as_field_elt(fld, s)
    t = _as_field_elt(fld, t)
    one, zero = fld.one, fld.zero
    X = Mat.from_rows(fld, [[one, zero, zero],
                            [s, -one, zero],
                            [t, zero, -one]])
    Y = Mat.from_rows(fld, [[one, om - one, om * om - one],
                            [zero, om, zero],
                            [zero, zero, om * om]])
    return Representation(P, [X, Y], label=f"sl3[s={s},t={t}]")


def trivial_rep(P, n=1, fld=None):
    fld = fld or field(12)
    return Representation(P, [Mat.identity(fld, n)
                              for _ in range(P.num_generators)],
                          label=f"trivial({n})")


def scalar_phi_rep(P, lam):
    """The one-dimensional representation gamma -> lambda^phi(gamma)."""
    if not lam:
        raise ZeroArgument("lambda must be nonzero")
    fld = lam.field
    phi = P.phi()
    images = [Mat(fld, 1, 1, [lam ** phi[j]])
              for j in range(P.num_generators)]
    return Representation(P, images, label="lambda^phi",
                          special_linear=False)


def sym_square_rep(rho):
    """Symmetric square SL2 -> SL3 composed with a 2-dim representation."""
    if rho.dim != 2:
        raise BadParams("symmetric square needs a 2-dimensional input")
    fld = rho.field
    images = [_sym_square_matrix(fld, m) for m in rho.images]
    return Representation(rho.presentation, images,
                          label=f"sym2({rho.label})")


def _sym_square_matrix(fld, m):
    a, b, c, d = m.entries
    two = fld.from_rational(2)
    return Mat.from_rows(fld, [
        [a * a, a * b, b * b],
        [two * a * c, a * d + b * c, two * b * d],
        [c * c, c * d, d * d]])


def catalog(name, **params):
    """Named access to the presentations and representation families."""
    try:
        if name == "trefoil":
            return trefoil_presentation()
        if name == "torus_knot":
            return torus_knot_presentation(params["p"], params["q"])
        if name == "trefoil_sl2":
            return trefoil_sl2_rep(params["s"],
                                   fld=params.get("fld"),
                                   presentation=params.get("presentation"))
        if name == "trefoil_sl3":
            return trefoil_sl3_rep(params["s"], params["t"],
                                   fld=params.get("fld"),
                                   presentation=params.get("presentation"))
        if name == "trivial":
            return trivial_rep(params["presentation"],
                               params.get("n", 1), params.get("fld"))
        if name == "scalar_phi":
            return scalar_phi_rep(params["presentation"], params["lam"])
        if name == "sym_square":
            return sym_square_rep(params["rho"])
    except KeyError as e:
        raise BadParams(f"catalog entry {name!r} is missing parameter {e}")
    raise BadParams(f"unknown catalog entry {name!r}")


# ---------------------------------------------------------------------------
# file format

def parse_representation(text, P):
    """Representation file: ``field cyclotomic N`` / ``dim n`` /
    ``gl true`` (optional) / per generator ``gen <id>`` then ``row``
    lines with entries in the z syntax."""
    fld = None
    dim = None
    gl = False
    images = {}
    current = None
    rows = []

    def flush():
        nonlocal current, rows
        if current is not None:
            if len(rows) != dim:
                raise ParseError(f"generator {current!r} has {len(rows)} rows,"
                                 f" expected {dim}")
            images[current] = Mat.from_rows(fld, rows)
        current, rows = None, []

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split(None, 1)
        key = fields[0]
        rest = fields[1].strip() if len(fields) > 1 else ""
        if key == "field":
            m = re.fullmatch(r"cyclotomic\s+(\d+)", rest)
            if not m:
                raise ParseError(f"line {lineno}: expected 'cyclotomic N'")
            fld = field(int(m.group(1)))
        elif key == "dim":
            dim = int(rest)
        elif key == "gl":
            gl = rest.lower() in ("true", "1", "yes")
        elif key == "gen":
            if fld is None or dim is None:
                raise ParseError(f"line {lineno}: 'gen' before field/dim")
            flush()
            if rest not in P.generators:
                raise ParseError(f"line {lineno}: unknown generator {rest!r}")
            current = rest
        elif key == "row":
            if current is None:
                raise ParseError(f"line {lineno}: 'row' outside a generator")
            entries = _split_row(rest)
            if len(entries) != dim:
                raise ParseError(f"line {lineno}: expected {dim} entries")
            rows.append([fld.parse(e) for e in entries])
        else:
            raise ParseError(f"line {lineno}: unknown directive {key!r}")
    flush()
    missing = [g for g in P.generators if g not in images]
    if missing:
        raise ParseError(f"no image given for generator(s) {missing}")
    return Representation(P, [images[g] for g in P.generators],
                          label="file-rep", special_linear=not gl)


def _split_row(text):
    """Split a row line on whitespace outside parentheses; entries may be
    parenthesized z expressions with internal spaces."""
    out = []
    depth = 0
    cur = ""
    for ch in text:
        if ch == "(":
            depth += 1
            cur += ch
        elif ch == ")":
            depth -= 1
            cur += ch
        elif ch.isspace() and depth == 0:
            if cur:
                out.append(cur)
                cur = ""
        else:
            cur += ch
    if cur:
        out.append(cur)
    return [e[1:-1] if e.startswith("(") and e.endswith(")") else e
            for e in out]


def representation_to_str(rep):
    lines = [f"field cyclotomic {rep.field.N}", f"dim {rep.dim}"]
    if not rep.special_linear:
        lines.append("gl true")
    for name, m in zip(rep.presentation.generators, rep.images):
        lines.append(f"gen {name}")
        for i in range(rep.dim):
            cells = []
            for e in m.row(i):
                s = str(e)
                cells.append(f"({s})" if " " in s else s)
            lines.append("row " + " ".join(cells))
    return "\n".join(lines) + "\n"
