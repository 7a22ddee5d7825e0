"""Finitely presented groups, free words and Fox free differential calculus.

Words are stored freely reduced at all times and compared as reduced
words; nothing here attempts a word problem, all downstream use goes
through matrix representations.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import NotInfiniteCyclicAbelianization, ParseError


class Word:
    """Freely reduced word: a tuple of (generator index, +1/-1) letters."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        self.letters = _reduce_letters(letters)

    @classmethod
    def generator(cls, j, sign=1):
        return cls(((j, sign),))

    @classmethod
    def identity(cls):
        return cls(())

    def is_identity(self):
        return not self.letters

    def __mul__(self, other):
        return Word(self.letters + other.letters)

    def inverse(self):
        return Word(tuple((g, -s) for g, s in reversed(self.letters)))

    def __pow__(self, n):
        if n == 0:
            return Word.identity()
        base = self if n > 0 else self.inverse()
        out = Word.identity()
        for _ in range(abs(n)):
            out = out * base
        return out

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def cyclically_reduced(self):
        ls = list(self.letters)
        while len(ls) >= 2 and ls[0] == (ls[-1][0], -ls[-1][1]):
            ls = ls[1:-1]
        return Word(tuple(ls))

    def is_proper_power(self):
        """True when the cyclically reduced word is u^k for some k >= 2."""
        w = self.cyclically_reduced().letters
        n = len(w)
        if n == 0:
            return False
        for k in range(2, n + 1):
            if n % k == 0:
                block = w[:n // k]
                if block * k == w:
                    return True
        return False

    def exponent_sums(self, num_gens):
        out = [0] * num_gens
        for g, s in self.letters:
            out[g] += s
        return out

    def __repr__(self):
        return f"Word({self.letters})"


def _reduce_letters(letters):
    out = []
    for g, s in letters:
        if s not in (1, -1):
            raise ValueError("letter signs must be +1 or -1")
        if out and out[-1] == (g, -s):
            out.pop()
        else:
            out.append((g, s))
    return tuple(out)


class GroupRingElt:
    """Integer formal sum of words (an element of Z[F])."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for w, c in coeffs.items():
                if c:
                    self.coeffs[w] = c

    @classmethod
    def from_word(cls, w, c=1):
        return cls({w: c})

    @classmethod
    def zero(cls):
        return cls()

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            elif w in out:
                del out[w]
        return GroupRingElt(out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            s = out.get(w, 0) - c
            if s:
                out[w] = s
            elif w in out:
                del out[w]
        return GroupRingElt(out)

    def __neg__(self):
        return GroupRingElt({w: -c for w, c in self.coeffs.items()})

    def left_mul(self, word):
        return GroupRingElt({word * w: c for w, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, GroupRingElt):
            return NotImplemented
        return self.coeffs == other.coeffs

    def augmentation(self):
        return sum(self.coeffs.values())

    def __repr__(self):
        return f"GroupRingElt({self.coeffs})"


def fox_derivative(w, j):
    """Fox derivative d(w)/d(x_j) in the integer group ring.

    Rules: d(x_j)/d(x_j) = 1, d(x_j^-1)/d(x_j) = -x_j^-1 and the product
    rule d(uv) = d(u) + u d(v).
    """
    out = {}
    prefix = Word.identity()
    for g, s in w.letters:
        letter = Word.generator(g, s)
        if g == j:
            if s == 1:
                key = prefix
            else:
                key = prefix * letter  # prefix * x_j^-1
            c = out.get(key, 0) + (1 if s == 1 else -1)
            if c:
                out[key] = c
            elif key in out:
                del out[key]
        prefix = prefix * letter
    return GroupRingElt(out)


class Presentation:
    """A finite presentation with optional meridian and declared phi."""

    def __init__(self, name, generators, relators, meridian=None,
                 declared_phi=None):
        self.name = name
        self.generators = tuple(generators)
        self.relators = tuple(relators)
        self.meridian = meridian
        self.declared_phi = tuple(declared_phi) if declared_phi else None
        self._phi = None
        for r in self.relators:
            for g, _ in r.letters:
                if g >= len(self.generators):
                    raise ParseError("relator uses an unknown generator")

    @property
    def num_generators(self):
        return len(self.generators)

    def deficiency_one(self):
        return len(self.relators) == len(self.generators) - 1

    def generator_word(self, name_or_index, sign=1):
        if isinstance(name_or_index, str):
            name_or_index = self.generators.index(name_or_index)
        return Word.generator(name_or_index, sign)

    def word(self, text):
        return parse_word(text, self.generators)

    def word_str(self, w):
        return word_to_str(w, self.generators)

    def phi(self):
        """The abelianization morphism Gamma -> Z as one integer per
        generator; requires corank-one abelianized relators."""
        if self._phi is None:
            self._phi = abelianization(self)
        return self._phi

    def phi_of(self, w):
        phi = self.phi()
        return sum(phi[g] * s for g, s in w.letters)

    def __eq__(self, other):
        if not isinstance(other, Presentation):
            return NotImplemented
        return (self.generators == other.generators and
                self.relators == other.relators)

    def __hash__(self):
        return hash((self.generators, self.relators))

    def __repr__(self):
        rels = ", ".join(self.word_str(r) for r in self.relators)
        return f"<{self.name}: gens {' '.join(self.generators)} | {rels}>"


def abelianization(P):
    """Primitive integer vector phi with phi(relator) = 0 for all relators.

    The abelianized relator matrix must have rank (generators - 1); the
    sign is fixed so the first nonzero image is positive.  A declared phi
    is verified and returned unchanged.
    """
    g = P.num_generators
    rows = [r.exponent_sums(g) for r in P.relators]

    if P.declared_phi is not None:
        phi = list(P.declared_phi)
        if len(phi) != g:
            raise NotInfiniteCyclicAbelianization("declared phi has wrong length")
        gcd = 0
        for v in phi:
            gcd = math.gcd(gcd, abs(v))
        if gcd != 1:
            raise NotInfiniteCyclicAbelianization("declared phi is not primitive")
        for row in rows:
            if sum(a * b for a, b in zip(row, phi)) != 0:
                raise NotInfiniteCyclicAbelianization(
                    "declared phi does not kill every relator")
        _check_meridian(P, phi)
        return tuple(phi)

    # rational kernel of the exponent matrix
    frows = [[Fraction(v) for v in row] for row in rows]
    pivots = []
    r = 0
    for c in range(g):
        piv = None
        for i in range(r, len(frows)):
            if frows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        frows[r], frows[piv] = frows[piv], frows[r]
        inv = 1 / frows[r][c]
        frows[r] = [e * inv for e in frows[r]]
        for i in range(len(frows)):
            if i != r and frows[i][c]:
                f = frows[i][c]
                frows[i] = [a - f * b for a, b in zip(frows[i], frows[r])]
        pivots.append(c)
        r += 1
    if g - len(pivots) != 1:
        raise NotInfiniteCyclicAbelianization(
            f"abelianized relators have corank {g - len(pivots)}, need 1")
    free_col = next(c for c in range(g) if c not in pivots)
    vec = [Fraction(0)] * g
    vec[free_col] = Fraction(1)
    for i, pcol in enumerate(pivots):
        vec[pcol] = -frows[i][free_col]
    lcm = 1
    for v in vec:
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    ints = [int(v * lcm) for v in vec]
    gcd = 0
    for v in ints:
        gcd = math.gcd(gcd, abs(v))
    ints = [v // gcd for v in ints]
    first = next(v for v in ints if v != 0)
    if first < 0:
        ints = [-v for v in ints]
    _check_meridian(P, ints)
    return tuple(ints)


def _check_meridian(P, phi):
    if P.meridian is not None:
        val = sum(phi[g] * s for g, s in P.meridian.letters)
        if val != 1:
            raise NotInfiniteCyclicAbelianization(
                f"declared meridian has phi = {val}, expected 1")


# ---------------------------------------------------------------------------
# text formats

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def parse_word(text, generators):
    """Grammar: word := term (('*'|space) term)*, term := ident('^'int)?."""
    index = {name: i for i, name in enumerate(generators)}
    pos = 0
    text = text.strip()
    letters = []
    n = len(text)
    while pos < n:
        while pos < n and (text[pos].isspace() or text[pos] == "*"):
            pos += 1
        if pos >= n:
            break
        m = _IDENT.match(text, pos)
        if not m:
            raise ParseError(f"expected a generator name near {text[pos:]!r}")
        name = m.group(0)
        if name not in index:
            raise ParseError(f"unknown generator {name!r}")
        pos = m.end()
        exp = 1
        if pos < n and text[pos] == "^":
            m2 = re.match(r"-?\d+", text[pos + 1:])
            if not m2:
                raise ParseError(f"exponent expected near {text[pos:]!r}")
            exp = int(m2.group(0))
            pos += 1 + m2.end()
        sign = 1 if exp > 0 else -1
        letters.extend([(index[name], sign)] * abs(exp))
    return Word(tuple(letters))


def word_to_str(w, generators):
    if not w.letters:
        return "1"
    parts = []
    i = 0
    ls = w.letters
    while i < len(ls):
        g, s = ls[i]
        j = i
        while j < len(ls) and ls[j] == (g, s):
            j += 1
        count = (j - i) * s
        parts.append(generators[g] if count == 1 else
                     f"{generators[g]}^{count}")
        i = j
    return "*".join(parts)


def parse_presentation(text, name_hint="group"):
    """Line-oriented file format:

    group <name> / gens <id> ... / rel <word> (repeatable)
    / meridian <word> (optional) / phi <int> ... (optional); # comments.
    """
    name = name_hint
    gens = None
    relators = []
    meridian_text = None
    phi = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split(None, 1)
        key = fields[0]
        rest = fields[1].strip() if len(fields) > 1 else ""
        if key == "group":
            name = rest or name
        elif key == "gens":
            gens = rest.split()
            if not gens:
                raise ParseError(f"line {lineno}: no generators listed")
        elif key == "rel":
            if gens is None:
                raise ParseError(f"line {lineno}: 'rel' before 'gens'")
            relators.append(parse_word(rest, gens))
        elif key == "meridian":
            meridian_text = rest
        elif key == "phi":
            try:
                phi = [int(v) for v in rest.split()]
            except ValueError:
                raise ParseError(f"line {lineno}: phi must be integers")
        else:
            raise ParseError(f"line {lineno}: unknown directive {key!r}")
    if gens is None:
        raise ParseError("presentation file declares no generators")
    meridian = parse_word(meridian_text, gens) if meridian_text else None
    return Presentation(name, gens, relators, meridian=meridian,
                        declared_phi=phi)


def presentation_to_str(P):
    lines = [f"group {P.name}", "gens " + " ".join(P.generators)]
    for r in P.relators:
        lines.append("rel " + P.word_str(r))
    if P.meridian is not None:
        lines.append("meridian " + P.word_str(P.meridian))
    if P.declared_phi is not None:
        lines.append("phi " + " ".join(str(v) for v in P.declared_phi))
    return "\n".join(lines) + "\n"
