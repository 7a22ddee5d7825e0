"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, zeta, ..., zeta^(phi(N)-1)
modulo the N-th cyclotomic polynomial, with arbitrary-precision rational
coordinates.  All operations are exact; the numeric embedding exists for
display and sanity checks only and is never used in decisions.

The textual syntax for elements is a rational polynomial in the symbol
``z``, e.g. ``1/2*z^3 - z + 2``, where ``z`` denotes exp(2*pi*i/N).
"""

from __future__ import annotations

import cmath
import functools
import re
from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, ParseError

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# dense rational polynomials (ascending coefficient lists, trimmed)

def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_sub(a, b):
    out = [_ZERO] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return _trim(out)


def _poly_divmod(a, b):
    """Rational division with remainder; b must be nonzero."""
    a = list(a)
    if len(a) < len(b):
        return [], _trim(a)
    q = [_ZERO] * (len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        f = a[i + len(b) - 1] * inv_lead
        if f:
            q[i] = f
            for j, y in enumerate(b):
                a[i + j] -= f * y
    return _trim(q), _trim(a)


def cyclotomic_polynomial(N):
    """The N-th cyclotomic polynomial as an ascending Fraction list.

    Computed by exact division of x^N - 1 by the product of Phi_d over
    the proper divisors d of N.
    """
    if N < 1:
        raise ValueError("conductor must be a positive integer")
    return list(_cyclotomic_cached(N))


@functools.lru_cache(maxsize=None)
def _cyclotomic_cached(N):
    if N == 1:
        return (Fraction(-1), _ONE)
    xn_minus_1 = [Fraction(-1)] + [_ZERO] * (N - 1) + [_ONE]
    den = [_ONE]
    for d in range(1, N):
        if N % d == 0:
            den = _poly_mul(den, list(_cyclotomic_cached(d)))
    q, r = _poly_divmod(xn_minus_1, den)
    assert not r, "cyclotomic division must be exact"
    return tuple(q)


def euler_phi(N):
    return len(_cyclotomic_cached(N)) - 1


# ---------------------------------------------------------------------------

class CycField:
    """The cyclotomic field Q(zeta_N), fixed by its conductor N."""

    __slots__ = ("N", "modulus", "degree", "_red", "_zero", "_one")

    def __init__(self, N):
        if N < 1:
            raise ValueError("conductor must be a positive integer")
        self.N = N
        self.modulus = _cyclotomic_cached(N)
        self.degree = len(self.modulus) - 1
        # reduction rows: coordinates of zeta^(degree+k), 0 <= k <= degree-2
        self._red = []
        if self.degree >= 1:
            row = [-c for c in self.modulus[:-1]]
            self._red.append(tuple(row))
            for _ in range(self.degree - 2):
                row = [_ZERO] + row
                top = row.pop()
                if top:
                    row = [row[i] + top * self._red[0][i]
                           for i in range(self.degree)]
                self._red.append(tuple(row))
        self._zero = CycElt(self, (_ZERO,) * self.degree)
        one = [_ZERO] * self.degree
        one[0] = _ONE
        self._one = CycElt(self, tuple(one))

    def __eq__(self, other):
        return isinstance(other, CycField) and self.N == other.N

    def __hash__(self):
        return hash(("CycField", self.N))

    def __repr__(self):
        return f"Q(zeta_{self.N})"

    @property
    def zero(self):
        return self._zero

    @property
    def one(self):
        return self._one

    def from_rational(self, q):
        q = Fraction(q)
        coords = [_ZERO] * self.degree
        coords[0] = q
        return CycElt(self, tuple(coords))

    def zeta(self, k=1):
        """The root of unity zeta^k, reduced into the power basis."""
        k %= self.N
        coords = [_ZERO] * (k + 1)
        coords[k] = _ONE
        return self.element(coords)

    def element(self, coords):
        """Element from an arbitrary-length coordinate list (reduced)."""
        return CycElt(self, tuple(self.reduce([Fraction(c) for c in coords])))

    def reduce(self, coords):
        """Reduce an ascending coefficient list modulo the (monic) modulus."""
        deg = self.degree
        coords = list(coords)
        if len(coords) < deg:
            return coords + [_ZERO] * (deg - len(coords))
        mod = self.modulus
        for k in range(len(coords) - 1, deg - 1, -1):
            c = coords[k]
            if c:
                coords[k] = _ZERO
                for i in range(deg):
                    coords[k - deg + i] -= c * mod[i]
        return coords[:deg]

    def parse(self, text):
        """Parse the ``z`` syntax into an element."""
        return self.element(_parse_z(text))


@functools.lru_cache(maxsize=None)
def field(N):
    """Shared field instance for a given conductor."""
    return CycField(N)


class CycElt:
    """An element of Q(zeta_N), immutable, in reduced power-basis form."""

    __slots__ = ("field", "coords")

    def __init__(self, fld, coords):
        self.field = fld
        self.coords = coords

    def _coerce(self, other):
        if isinstance(other, CycElt):
            if other.field.N != self.field.N:
                raise FieldMismatch(
                    f"Q(zeta_{self.field.N}) vs Q(zeta_{other.field.N})")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return NotImplemented

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycElt(self.field,
                      tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycElt(self.field,
                      tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return CycElt(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        fld = self.field
        deg = fld.degree
        a, b = self.coords, other.coords
        out = [_ZERO] * (2 * deg - 1) if deg > 1 else [_ZERO]
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        res = out[:deg]
        res += [_ZERO] * (deg - len(res))
        for k in range(deg, len(out)):
            c = out[k]
            if c:
                row = fld._red[k - deg]
                for i in range(deg):
                    res[i] += c * row[i]
        return CycElt(fld, tuple(res))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        # extended Euclid of the representative against the modulus:
        # maintain s with s*self = r (mod Phi_N)
        r0, r1 = list(self.field.modulus), _trim(list(self.coords))
        s0, s1 = [], [_ONE]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        assert r1, "modulus must be irreducible over Q"
        inv_const = 1 / r1[0]
        return self.field.element([c * inv_const for c in s1])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, CycElt):
            return NotImplemented
        return self.field.N == other.field.N and self.coords == other.coords

    def __hash__(self):
        return hash((self.field.N, self.coords))

    def embed_numeric(self):
        """Double-precision value at zeta = exp(2*pi*i/N)."""
        z = cmath.exp(2j * cmath.pi / self.field.N)
        acc = 0j
        for c in reversed(self.coords):
            acc = acc * z + complex(c)
        return acc

    def as_rational(self):
        """The element as a Fraction, or None if it is not rational."""
        if any(self.coords[1:]):
            return None
        return self.coords[0]

    def __str__(self):
        return cyc_to_str(self)

    def __repr__(self):
        return f"CycElt({self.field.N}, {cyc_to_str(self)!r})"


# ---------------------------------------------------------------------------
# text syntax

def cyc_to_str(elt):
    """Render in the ``z`` syntax, descending powers."""
    parts = []
    for k in range(len(elt.coords) - 1, -1, -1):
        c = elt.coords[k]
        if c == 0:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            mag = abs(c)
            zpow = "z" if k == 1 else f"z^{k}"
            body = zpow if mag == 1 else f"{mag}*{zpow}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    if not parts:
        return "0"
    return " ".join(parts)


_Z_TOKEN = re.compile(r"(\d+/\d+|\d+|z|\^|\*|\+|-)")


def _parse_z(text):
    """Parse ``1/2*z^3 - z + 2`` into an ascending coefficient list."""
    raw = text.strip()
    if not raw:
        raise ParseError("empty element")
    tokens = []
    pos = 0
    while pos < len(raw):
        if raw[pos].isspace():
            pos += 1
            continue
        m = _Z_TOKEN.match(raw, pos)
        if not m:
            raise ParseError(f"bad element syntax near {raw[pos:]!r}")
        tokens.append(m.group(0))
        pos = m.end()

    coeffs = {}
    i = 0
    n = len(tokens)
    first = True
    while i < n:
        sign = 1
        # optional sign / separator
        while i < n and tokens[i] in "+-":
            if tokens[i] == "-":
                sign = -sign
            i += 1
            first = False
        if i >= n:
            raise ParseError("dangling operator")
        if not first and sign == 1 and tokens[i - 1] not in "+-":
            raise ParseError("missing operator between terms")
        first = False
        coeff = Fraction(1)
        power = 0
        saw_factor = False
        while True:
            tok = tokens[i]
            if tok == "z":
                p = 1
                if i + 1 < n and tokens[i + 1] == "^":
                    if i + 2 >= n:
                        raise ParseError("exponent expected after '^'")
                    exp_tok = tokens[i + 2]
                    neg = False
                    if exp_tok == "-":
                        raise ParseError("negative powers of z not allowed")
                    if not exp_tok.isdigit():
                        raise ParseError("exponent expected after '^'")
                    p = int(exp_tok)
                    i += 2
                power += p
                i += 1
                saw_factor = True
            elif re.fullmatch(r"\d+/\d+|\d+", tok):
                coeff *= Fraction(tok)
                i += 1
                saw_factor = True
            else:
                raise ParseError(f"unexpected token {tok!r}")
            if i < n and tokens[i] == "*":
                i += 1
                if i >= n:
                    raise ParseError("dangling '*'")
                continue
            break
        if not saw_factor:
            raise ParseError("empty term")
        coeffs[power] = coeffs.get(power, _ZERO) + sign * coeff

    top = max(coeffs)
    out = [_ZERO] * (top + 1)
    for k, v in coeffs.items():
        out[k] = v
    return out
