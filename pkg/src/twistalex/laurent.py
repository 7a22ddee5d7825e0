"""Laurent polynomials over a cyclotomic field.

A polynomial is a finite map exponent -> nonzero coefficient.  Twisted
Alexander polynomials are only defined up to units c*t^k, so equality of
invariants always goes through :func:`normalize_associate`, which picks
the unique associate with lowest exponent 0 and monic top coefficient.
"""

from __future__ import annotations

import math
import re

from .errors import FieldMismatch, ParseError, ZeroArgument
from .cyclotomic import CycElt, cyc_to_str

INF = math.inf


class LaurentPoly:
    __slots__ = ("field", "terms")

    def __init__(self, fld, terms=None):
        self.field = fld
        self.terms = {}
        if terms:
            for k, c in terms.items():
                if c:
                    self.terms[k] = c

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, fld):
        return cls(fld)

    @classmethod
    def one(cls, fld):
        return cls(fld, {0: fld.one})

    @classmethod
    def t_power(cls, fld, k=1, coeff=None):
        return cls(fld, {k: fld.one if coeff is None else coeff})

    @classmethod
    def constant(cls, c):
        return cls(c.field, {0: c})

    # -- structure -------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_unit(self):
        return len(self.terms) == 1

    def min_exp(self):
        return min(self.terms)

    def max_exp(self):
        return max(self.terms)

    def coeff(self, k):
        return self.terms.get(k, self.field.zero)

    def _check(self, other):
        if self.field.N != other.field.N:
            raise FieldMismatch("Laurent operands over different conductors")

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return LaurentPoly(self.field, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = -c if s is None else s - c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return LaurentPoly(self.field, out)

    def __neg__(self):
        return LaurentPoly(self.field, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            other = self.field.from_rational(other)
        if isinstance(other, CycElt):
            if not other:
                return LaurentPoly(self.field)
            return LaurentPoly(self.field,
                               {k: c * other for k, c in self.terms.items()})
        self._check(other)
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                p = c1 * c2
                s = out.get(k)
                s = p if s is None else s + p
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        return LaurentPoly(self.field, out)

    def scale(self, c):
        return self * c

    def shift(self, k):
        """Multiply by t^k."""
        if k == 0:
            return self
        return LaurentPoly(self.field,
                           {e + k: c for e, c in self.terms.items()})

    def subs_inverse(self):
        """Substitute t -> 1/t."""
        return LaurentPoly(self.field,
                           {-e: c for e, c in self.terms.items()})

    def derivative(self):
        out = {}
        for e, c in self.terms.items():
            if e != 0:
                out[e - 1] = c * e
        return LaurentPoly(self.field, out)

    def eval_at(self, mu):
        """Evaluate at a nonzero field element."""
        if not mu:
            raise ZeroArgument("cannot evaluate a Laurent polynomial at 0")
        acc = self.field.zero
        inv = None
        for e in sorted(self.terms):
            c = self.terms[e]
            if e >= 0:
                acc = acc + c * mu ** e
            else:
                if inv is None:
                    inv = mu.inverse()
                acc = acc + c * inv ** (-e)
        return acc

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.field.N == other.field.N and self.terms == other.terms

    def __hash__(self):
        return hash((self.field.N, tuple(sorted(self.terms.items(),
                                                key=lambda kv: kv[0]))))

    def __str__(self):
        return laurent_to_str(self)

    def __repr__(self):
        return f"LaurentPoly({laurent_to_str(self)!r})"


# ---------------------------------------------------------------------------

def normalize_associate(p):
    """Unique representative of the associate class of p.

    Lowest exponent shifted to 0, then divided by the top coefficient
    (monic leading term).  Zero maps to zero.
    """
    if p.is_zero():
        return p
    low = p.min_exp()
    top = p.terms[p.max_exp()]
    inv = top.inverse()
    return LaurentPoly(p.field,
                       {e - low: c * inv for e, c in p.terms.items()})


def associated(p, q):
    """True when p and q agree up to a unit c*t^k."""
    return normalize_associate(p) == normalize_associate(q)


def eval_and_multiplicity(p, mu):
    """Value p(mu) and the multiplicity of mu as a root.

    The multiplicity is the smallest k whose k-th derivative is nonzero
    at mu (so 0 when p(mu) != 0), and INF for the zero polynomial.
    """
    if not mu:
        raise ZeroArgument("root multiplicity is only defined at mu != 0")
    if p.is_zero():
        return p.field.zero, INF
    value = p.eval_at(mu)
    if value:
        return value, 0
    k = 1
    q = p.derivative()
    while not q.eval_at(mu):
        q = q.derivative()
        k += 1
        if q.is_zero():
            raise AssertionError("nonzero polynomial with vanishing jet")
    return value, k


# -- ordinary-polynomial helpers (dense ascending CycElt lists) -------------

def _to_dense(p):
    """Shift to lowest exponent 0 and return (dense coeff list, shift)."""
    if p.is_zero():
        return [], 0
    low = p.min_exp()
    out = [p.field.zero] * (p.max_exp() - low + 1)
    for e, c in p.terms.items():
        out[e - low] = c
    return out, low

def _from_dense(fld, coeffs, shift=0):
    return LaurentPoly(fld, {i + shift: c for i, c in enumerate(coeffs) if c})


def _dense_divmod(a, b):
    a = list(a)
    if len(a) < len(b):
        return [], a
    inv_lead = b[-1].inverse()
    q = [b[-1].field.zero] * (len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        f = a[i + len(b) - 1] * inv_lead
        if f:
            q[i] = f
            for j, y in enumerate(b):
                a[i + j] = a[i + j] - f * y
    while a and not a[-1]:
        a.pop()
    return q, a


def laurent_gcd(p, q):
    """Normalized gcd; gcd(x, 0) is normalize_associate(x)."""
    if p.is_zero() and q.is_zero():
        return LaurentPoly.zero(p.field)
    if p.is_zero():
        return normalize_associate(q)
    if q.is_zero():
        return normalize_associate(p)
    a, _ = _to_dense(p)
    b, _ = _to_dense(q)
    while b:
        _, r = _dense_divmod(a, b)
        a, b = b, r
    return normalize_associate(_from_dense(p.field, a))


def laurent_exact_div(p, q):
    """p / q when the division is exact; None otherwise."""
    if q.is_zero():
        raise ZeroArgument("division by the zero polynomial")
    if p.is_zero():
        return LaurentPoly.zero(p.field)
    a, sa = _to_dense(p)
    b, sb = _to_dense(q)
    quo, rem = _dense_divmod(a, b)
    if rem:
        return None
    return _from_dense(p.field, quo, sa - sb)


# ---------------------------------------------------------------------------
# text syntax: `c*t^k` terms, descending exponents, coefficients in z syntax

def laurent_to_str(p):
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p.terms, reverse=True):
        c = p.terms[e]
        cs = cyc_to_str(c)
        negated = False
        if cs.startswith("-") and "+" not in cs and "- " not in cs[1:]:
            # single-signed coefficient: pull the sign out front
            negated = True
            cs = cyc_to_str(-c)
        composite = (" " in cs)
        if e == 0:
            body = f"({cs})" if composite else cs
        else:
            tpow = "t" if e == 1 else f"t^{e}"
            if cs == "1":
                body = tpow
            elif composite:
                body = f"({cs})*{tpow}"
            else:
                body = f"{cs}*{tpow}"
        if not parts:
            parts.append("-" + body if negated else body)
        else:
            parts.append(("- " if negated else "+ ") + body)
    return " ".join(parts)


def parse_laurent(fld, text):
    """Parse the output of :func:`laurent_to_str` (and close variants)."""
    text = text.strip()
    if text == "0":
        return LaurentPoly.zero(fld)
    # split into top-level terms at +/- that are not inside parentheses
    terms = []
    depth = 0
    cur = ""
    sign = 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and cur.strip() and \
                not cur.rstrip().endswith(("^", "*", "/")):
            terms.append((sign, cur))
            sign = 1 if ch == "+" else -1
            cur = ""
        else:
            cur += ch
        i += 1
    if cur.strip():
        terms.append((sign, cur))
    out = LaurentPoly.zero(fld)
    for sgn, term in terms:
        term = term.strip()
        if not term:
            raise ParseError("empty term in polynomial")
        exp = 0
        m = re.search(r"t(?:\^(-?\d+))?\s*$", term)
        if m:
            exp = int(m.group(1)) if m.group(1) else 1
            term = term[:m.start()].rstrip().rstrip("*").strip()
        if term.startswith("(") and term.endswith(")"):
            term = term[1:-1]
        if not term:
            coeff = fld.one
        else:
            coeff = fld.parse(term)
        if sgn < 0:
            coeff = -coeff
        out = out + LaurentPoly(fld, {exp: coeff})
    return out
