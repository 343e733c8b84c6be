"""Graded bivariate polynomials over S = k[x, y] and its monomial quotients.

The grading is deg(x) = 1, deg(y) = -1.  The two quotient rings of interest are
cut out by a single monomial, so every ring here has a monomial k-basis and
normal forms are obtained by discarding monomials divisible by the defining
monomial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple

from .fields import QQ


class Monomial(NamedTuple):
    a: int  # exponent of x
    b: int  # exponent of y

    @property
    def degree(self) -> int:
        return self.a - self.b

    def __mul__(self, other: "Monomial") -> "Monomial":  # type: ignore[override]
        return Monomial(self.a + other.a, self.b + other.b)

    def divides(self, other: "Monomial") -> bool:
        return self.a <= other.a and self.b <= other.b


ONE = Monomial(0, 0)


# kind -> (defining monomial or None, printable name)
_RINGS = {
    "S": (None, "k[x,y]"),
    "Dinf": (Monomial(2, 1), "k[x,y]/(x^2*y)"),
    "Ainf": (Monomial(2, 0), "k[x,y]/(x^2)"),
}


@dataclass(frozen=True)
class RingSpec:
    kind: str
    field: object = QQ

    def __post_init__(self):
        if self.kind not in _RINGS:
            raise ValueError("unknown ring %r" % self.kind)

    @property
    def f(self) -> Optional[Monomial]:
        """Defining monomial of the hypersurface, None for S itself."""
        return _RINGS[self.kind][0]

    @property
    def deg_f(self) -> int:
        if self.f is None:
            raise ValueError("S has no defining polynomial")
        return self.f.degree

    @property
    def ambient(self) -> "RingSpec":
        return RingSpec("S", self.field)

    def is_zero_monomial(self, m: Monomial) -> bool:
        f = self.f
        return f is not None and m.a >= f.a and m.b >= f.b

    def defining_polynomial(self) -> "GradedPoly":
        return GradedPoly(self.ambient, {self.f: self.field.one})

    def __str__(self):
        return _RINGS[self.kind][1]


def Dinf(field=QQ) -> RingSpec:
    return RingSpec("Dinf", field)


def Ainf(field=QQ) -> RingSpec:
    return RingSpec("Ainf", field)


def S(field=QQ) -> RingSpec:
    return RingSpec("S", field)


class GradedPoly:
    """Sparse polynomial in normal form for its ambient ring.  Treat as immutable."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingSpec, terms: Optional[Dict[Monomial, object]] = None):
        self.ring = ring
        clean: Dict[Monomial, object] = {}
        if terms:
            for m, c in terms.items():
                if c and not ring.is_zero_monomial(m):
                    clean[Monomial(*m)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, ring: RingSpec, a: int, b: int = 0, coeff=1) -> "GradedPoly":
        return cls(ring, {Monomial(a, b): ring.field(coeff)})

    @classmethod
    def zero(cls, ring: RingSpec) -> "GradedPoly":
        return cls(ring)

    def is_zero(self) -> bool:
        return not self.terms

    __bool__ = lambda self: bool(self.terms)

    def degree(self) -> Optional[int]:
        """The common degree of all monomials, or None if not homogeneous (or zero)."""
        degs = {m.degree for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_homogeneous(self) -> bool:
        return len({m.degree for m in self.terms}) <= 1

    def _check(self, other: "GradedPoly"):
        if other.ring != self.ring:
            raise ValueError("ambient mismatch: %s vs %s" % (self.ring, other.ring))

    def __add__(self, other: "GradedPoly") -> "GradedPoly":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return GradedPoly(self.ring, out)

    def __neg__(self) -> "GradedPoly":
        return GradedPoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "GradedPoly") -> "GradedPoly":
        return self + (-other)

    def scale(self, c) -> "GradedPoly":
        if not c:
            return GradedPoly(self.ring)
        return GradedPoly(self.ring, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other) -> "GradedPoly":
        if not isinstance(other, GradedPoly):
            return self.scale(other)
        self._check(other)
        out: Dict[Monomial, object] = {}
        zero_mono = self.ring.is_zero_monomial
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = Monomial(m1.a + m2.a, m1.b + m2.b)
                if zero_mono(m):
                    continue
                out[m] = out.get(m, 0) + c1 * c2
        return GradedPoly(self.ring, out)

    def __rmul__(self, c) -> "GradedPoly":
        return self.scale(c)

    def pow(self, n: int) -> "GradedPoly":
        out = GradedPoly(self.ring, {ONE: self.ring.field.one})
        for _ in range(n):
            out = out * self
        return out

    def in_ring(self, ring: RingSpec) -> "GradedPoly":
        """Reinterpret over another ring with the same field (reducing if needed)."""
        return GradedPoly(ring, self.terms)

    def divide_by_monomial(self, m: Monomial) -> "GradedPoly":
        out = {}
        for t, c in self.terms.items():
            if not m.divides(t):
                raise ArithmeticError("%s is not divisible by x^%d*y^%d" % (self, m.a, m.b))
            out[Monomial(t.a - m.a, t.b - m.b)] = c
        return GradedPoly(self.ring, out)

    def leading(self):
        """(monomial, coefficient) of the first term in printing order."""
        if not self.terms:
            return None
        m = min(self.terms, key=_term_key)
        return m, self.terms[m]

    def __eq__(self, other):
        if not isinstance(other, GradedPoly):
            if other == 0:
                return not self.terms
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return "GradedPoly(%s, %r)" % (self.ring.kind, format_poly(self))


def normal_form(p: GradedPoly, ring: RingSpec) -> GradedPoly:
    """Reduce ``p`` modulo the defining monomial of ``ring``."""
    return p.in_ring(ring)


def ring_piece_basis(ring: RingSpec, d: int) -> List[Monomial]:
    """Reduced monomials spanning the degree-``d`` component of ``ring``.

    Monomials of degree d are x^a y^(a-d); the survivors of the reduction modulo
    x^fa y^fb are those with a < fa or b < fb, which is a finite set.
    """
    f = ring.f
    if f is None:
        raise ValueError("graded pieces of S are infinite-dimensional")
    candidates = set(range(max(0, d), f.a))
    candidates.update(d + b for b in range(f.b) if d + b >= 0)
    out = []
    for a in sorted(candidates):
        b = a - d
        if b < 0:
            continue
        m = Monomial(a, b)
        if not ring.is_zero_monomial(m):
            out.append(m)
    return out


# --- text I/O -------------------------------------------------------------

def _term_key(m: Monomial):
    return (-m.degree, -m.a)


def _mono_str(m: Monomial) -> str:
    parts = []
    if m.a:
        parts.append("x" if m.a == 1 else "x^%d" % m.a)
    if m.b:
        parts.append("y" if m.b == 1 else "y^%d" % m.b)
    return "*".join(parts)


def format_poly(p: GradedPoly) -> str:
    if not p.terms:
        return "0"
    field = p.ring.field
    out = []
    for m in sorted(p.terms, key=_term_key):
        c = field.to_str(p.terms[m])
        neg = c.startswith("-")
        if neg:
            c = c[1:]
        mono = _mono_str(m)
        if not mono:
            body = c
        elif c == "1":
            body = mono
        else:
            body = "%s*%s" % (c, mono)
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


_FACTOR = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([xy])(?:\s*\^\s*(\d+))?)\s*")


def _parse_term(text: str, field) -> Tuple[Monomial, object]:
    pos, coeff, a, b = 0, field.one, 0, 0
    seen = False
    while pos < len(text):
        if seen and text[pos] == "*":
            pos += 1
        mt = _FACTOR.match(text, pos)
        if not mt or mt.end() == pos:
            raise ValueError("cannot parse term %r" % text)
        num, var, exp = mt.groups()
        if num is not None:
            coeff = coeff * field(num)
        else:
            e = int(exp) if exp else 1
            if var == "x":
                a += e
            else:
                b += e
        seen = True
        pos = mt.end()
    if not seen:
        raise ValueError("empty term")
    return Monomial(a, b), coeff


def parse_poly(text: str, ring: RingSpec) -> GradedPoly:
    """Parse ``c*x^a*y^b`` terms joined by ``+``/``-`` (juxtaposed ``xy`` allowed)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    terms: Dict[Monomial, object] = {}
    chunks = re.findall(r"[+-]?[^+-]+", s)
    if "".join(chunks) != s:
        raise ValueError("cannot parse polynomial %r" % text)
    field = ring.field
    for ch in chunks:
        sign = -1 if ch[0] == "-" else 1
        body = ch.lstrip("+-")
        m, c = _parse_term(body, field)
        terms[m] = terms.get(m, field.zero) + c * sign
    return GradedPoly(ring, terms)


def x(ring: RingSpec, n: int = 1) -> GradedPoly:
    return GradedPoly.monomial(ring, n, 0)


def y(ring: RingSpec, n: int = 1) -> GradedPoly:
    return GradedPoly.monomial(ring, 0, n)


def const(ring: RingSpec, c=1) -> GradedPoly:
    return GradedPoly(ring, {ONE: ring.field(c)})


def monomials_of(polys: Iterable[GradedPoly]) -> List[Monomial]:
    seen = set()
    for p in polys:
        seen.update(p.terms)
    return sorted(seen, key=_term_key)
