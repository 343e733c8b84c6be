"""Indecomposable graded MCM modules over D-infinity and A-infinity as matrix factorizations.

Every object is a 2-periodic complete resolution

    ... -> P_1 --d1--> P_0 --d0--> P_{-1} --d1(deg f)--> P_{-2} -> ...

with P_{n-2} = P_n(deg f); the module is coker(d1).  Labels are symbolic names
closed under twist and syzygy; :func:`resolve` turns a label into its
factorization.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .algebra import GradedPoly, Monomial, RingSpec, const, x, y
from .fields import QQ
from .linalg import GradedFreeModule, GradedMatrix, ModulePresentation

DINF_FAMILIES = {"A": 1, "B": 1, "C": 1, "D": 1, "E": 2, "F": 2, "G": 2, "H": 2, "R": 1}
AINF_FAMILIES = {"Ky": 1, "I": 2, "R": 1}
FAMILIES = {"Dinf": DINF_FAMILIES, "Ainf": AINF_FAMILIES}


class LabelError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Label:
    """An indecomposable (or free) object: ring, family name and integer indices.

    ``R(t)`` is the free module of rank one twisted by t.  ``I(m, s)`` is the
    ideal <x, y^m>(s) over A-infinity.
    """

    ring: str
    family: str
    indices: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))
        fams = FAMILIES.get(self.ring)
        if fams is None:
            raise LabelError("unknown ring %r" % self.ring)
        if self.family not in fams:
            raise LabelError("family %r does not exist over %s" % (self.family, self.ring))
        if len(self.indices) != fams[self.family]:
            raise LabelError("%s takes %d indices" % (self.family, fams[self.family]))
        if self.family in ("E", "F", "G"):
            i, j = self.indices
            if j < i + 1:
                raise LabelError("%s(i,j) needs j >= i+1, got %s" % (self.family, self.indices))
        elif self.family == "H":
            i, j = self.indices
            if j < i:
                raise LabelError("H(i,j) needs j >= i, got %s" % (self.indices,))
        elif self.family == "I" and self.indices[0] < 1:
            raise LabelError("I(m,s) needs m >= 1")

    @property
    def is_free(self) -> bool:
        return self.family == "R"

    def __str__(self):
        return "%s(%s)" % (self.family, ",".join(str(i) for i in self.indices))


@dataclass(frozen=True)
class LabelSum:
    """Formal finite direct sum of labels (the empty sum is the zero object)."""

    terms: Tuple[Label, ...]
    ring: str = "Dinf"

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if any(t.ring != self.ring for t in self.terms):
            raise LabelError("direct sum mixes rings")

    def __str__(self):
        return " + ".join(str(t) for t in self.terms) if self.terms else "0"


ObjectLabel = Union[Label, LabelSum]


def as_sum(obj: ObjectLabel) -> LabelSum:
    return obj if isinstance(obj, LabelSum) else LabelSum((obj,), obj.ring)


def ring_of(obj: ObjectLabel) -> str:
    return obj.ring


# --- label grammar --------------------------------------------------------

_LABEL_RE = re.compile(r"^(Ky|I|[A-HR])\((-?\d+)(?:,(-?\d+))?\)$")


def parse_label(text: str, ring: Optional[str] = None) -> ObjectLabel:
    """Parse ``C(2)``, ``E(0,2)``, ``Ky(-3)``, ``I(2,5)``, ``R(4)``, sums with ``+``.

    ``ring`` is needed to interpret a bare free module ``R(t)``; otherwise it is
    inferred from the families present.
    """
    s = re.sub(r"\s+", "", text)
    if not s:
        raise LabelError("empty label")
    parts = s.split("+")
    parsed = []
    for p in parts:
        mt = _LABEL_RE.match(p)
        if not mt:
            raise LabelError("cannot parse label %r" % p)
        fam, i1, i2 = mt.groups()
        idx = (int(i1),) if i2 is None else (int(i1), int(i2))
        parsed.append((fam, idx))
    fams = {f for f, _ in parsed if f != "R"}
    inferred = None
    if fams & {"Ky", "I"}:
        inferred = "Ainf"
    if fams - {"Ky", "I"}:
        if inferred == "Ainf":
            raise LabelError("label %r mixes D-infinity and A-infinity families" % text)
        inferred = "Dinf"
    if ring is not None and inferred is not None and ring != inferred:
        raise LabelError("label %r lives over %s, not %s" % (text, inferred, ring))
    ring = ring or inferred or "Dinf"
    labels = [Label(ring, f, idx) for f, idx in parsed]
    if len(labels) == 1:
        return labels[0]
    return LabelSum(tuple(labels), ring)


# --- label operations -----------------------------------------------------


def twist_label(l: ObjectLabel, t: int) -> ObjectLabel:
    if isinstance(l, LabelSum):
        return LabelSum(tuple(twist_label(x, t) for x in l.terms), l.ring)
    if l.family == "I":
        m, s = l.indices
        return Label(l.ring, "I", (m, s + t))
    return Label(l.ring, l.family, tuple(i + t for i in l.indices))


_SYZYGY = {
    "A": lambda i: ("B", (i + 1,)),
    "B": lambda i: ("A", (i - 2,)),
    "C": lambda i: ("D", (i,)),
    "D": lambda i: ("C", (i - 1,)),
    "E": lambda i, j: ("F", (i, j)),
    "F": lambda i, j: ("E", (i - 1, j - 1)),
    "G": lambda i, j: ("H", (i, j - 1)),
    "H": lambda i, j: ("G", (i - 1, j)),
    "Ky": lambda s: ("Ky", (s - 1,)),
    "I": lambda m, s: ("I", (m, s - 1)),
}

_SUSPENSION = {
    "B": lambda i: ("A", (i - 1,)),
    "A": lambda i: ("B", (i + 2,)),
    "D": lambda i: ("C", (i,)),
    "C": lambda i: ("D", (i + 1,)),
    "F": lambda i, j: ("E", (i, j)),
    "E": lambda i, j: ("F", (i + 1, j + 1)),
    "H": lambda i, j: ("G", (i, j + 1)),
    "G": lambda i, j: ("H", (i + 1, j)),
    "Ky": lambda s: ("Ky", (s + 1,)),
    "I": lambda m, s: ("I", (m, s + 1)),
}


def _apply_table(table, l: ObjectLabel) -> ObjectLabel:
    if isinstance(l, LabelSum):
        out = []
        for t in l.terms:
            v = _apply_table(table, t)
            out.extend(as_sum(v).terms)
        return LabelSum(tuple(out), l.ring)
    if l.is_free:
        return LabelSum((), l.ring)  # projectives are stably zero
    fam, idx = table[l.family](*l.indices)
    return Label(l.ring, fam, idx)


def syzygy_label(l: ObjectLabel) -> ObjectLabel:
    return _apply_table(_SYZYGY, l)


def suspend_label(l: ObjectLabel) -> ObjectLabel:
    return _apply_table(_SUSPENSION, l)


def normalize_label(l: ObjectLabel) -> LabelSum:
    """Rewrite boundary-index labels as sums of catalogue labels and free modules."""
    out: List[Label] = []
    for t in as_sum(l).terms:
        fam, idx = t.family, t.indices
        if fam == "E" and idx[1] == idx[0] + 1:
            out += [Label(t.ring, "A", (idx[0],)), Label(t.ring, "R", (idx[0] + 1,))]
        elif fam == "F" and idx[1] == idx[0] + 1:
            out.append(Label(t.ring, "B", (idx[0] + 1,)))
        elif fam == "G" and idx[1] == idx[0] + 1:
            out.append(Label(t.ring, "R", (idx[0] + 1,)))
        elif fam == "H" and idx[1] == idx[0]:
            out.append(Label(t.ring, "R", (idx[0],)))
        else:
            out.append(t)
    return LabelSum(tuple(out), l.ring)


def strip_free(l: ObjectLabel) -> LabelSum:
    s = normalize_label(l)
    return LabelSum(tuple(t for t in s.terms if not t.is_free), s.ring)


def is_degenerate(l: Label) -> bool:
    return normalize_label(l).terms != (l,)


# --- complete resolutions -------------------------------------------------


@dataclass(frozen=True)
class CompleteResolutionSpec:
    d1: GradedMatrix
    d0: GradedMatrix
    label: Optional[str] = field(default=None, compare=False)

    @property
    def ring(self) -> RingSpec:
        return self.d1.ring

    def P(self, n: int) -> GradedFreeModule:
        """The free module in homological position n."""
        return self.differential(n).src

    def differential(self, n: int) -> GradedMatrix:
        """d_n : P_n -> P_{n-1}, with d_1 = d1, d_0 = d0 and d_{n-2} = d_n(deg f)."""
        k = self.ring.deg_f
        if n % 2:
            m = (1 - n) // 2
            return self.d1 if m == 0 else self.d1.twist(m * k)
        m = -n // 2
        return self.d0 if m == 0 else self.d0.twist(m * k)

    @cached_property
    def module(self) -> ModulePresentation:
        return presentation(self.d1)

    def shift(self, k: int) -> "CompleteResolutionSpec":
        """Omega^k of this object: the complex reindexed so position n is old position n + k."""
        if k == 0:
            return self
        return CompleteResolutionSpec(self.differential(k + 1), self.differential(k))

    def twist(self, t: int) -> "CompleteResolutionSpec":
        return CompleteResolutionSpec(self.d1.twist(t), self.d0.twist(t))

    def is_zero(self) -> bool:
        return self.d1.src.rank == 0 and self.d1.tgt.rank == 0

    def direct_sum(self, other: "CompleteResolutionSpec") -> "CompleteResolutionSpec":
        return CompleteResolutionSpec(self.d1.block_sum(other.d1), self.d0.block_sum(other.d0))

    def twists(self) -> List[int]:
        return list(self.P(1).twists + self.P(0).twists + self.P(-1).twists)

    def __str__(self):
        if self.label:
            return self.label
        return "CR(d1=%s)" % [[str(e) for e in r] for r in self.d1.entries]


@lru_cache(maxsize=None)
def presentation(d1: GradedMatrix) -> ModulePresentation:
    return ModulePresentation(d1)


def syzygy_cr(cr: CompleteResolutionSpec) -> CompleteResolutionSpec:
    """Omega: d1' = d0(-deg f), d0' = d1."""
    return cr.shift(1)


def zero_object(ring: RingSpec) -> CompleteResolutionSpec:
    z = GradedFreeModule(ring, ())
    return CompleteResolutionSpec(GradedMatrix.zero(z, z), GradedMatrix.zero(z, z), label="0")


def _mat(ring, src, tgt, rows) -> GradedMatrix:
    return GradedMatrix(GradedFreeModule(ring, tuple(src)), GradedFreeModule(ring, tuple(tgt)), rows)


def _ring_for(label: Label, field) -> RingSpec:
    return RingSpec(label.ring, field)


@lru_cache(maxsize=None)
def resolve(l: Label, field=QQ) -> CompleteResolutionSpec:
    """The catalogue factorization of a non-free label."""
    if isinstance(l, LabelSum):
        raise LabelError("resolve takes a single label; use resolve_object for sums")
    if l.is_free:
        raise LabelError("free module %s is stably zero and has no complete resolution here" % l)
    R = _ring_for(l, field)
    z = GradedPoly(R)
    X, Y = x(R), y(R)
    XY = X * Y
    fam, idx = l.family, l.indices
    if fam == "C":
        (i,) = idx
        d1, d0 = _mat(R, [i], [i], [[XY]]), _mat(R, [i], [i + 1], [[X]])
    elif fam == "D":
        (i,) = idx
        d1, d0 = _mat(R, [i - 1], [i], [[X]]), _mat(R, [i], [i], [[XY]])
    elif fam == "A":
        (i,) = idx
        d1, d0 = _mat(R, [i + 1], [i], [[Y]]), _mat(R, [i], [i + 2], [[x(R, 2)]])
    elif fam == "B":
        (i,) = idx
        d1, d0 = _mat(R, [i - 2], [i], [[x(R, 2)]]), _mat(R, [i], [i - 1], [[Y]])
    elif fam == "E":
        i, j = idx
        n = j - i
        d1 = _mat(R, [i, j], [i, j], [[XY, y(R, n)], [z, -XY]])
        d0 = _mat(R, [i, j], [i + 1, j + 1], [[X, y(R, n - 1)], [z, -X]])
    elif fam == "F":
        i, j = idx
        n = j - i
        d1 = _mat(R, [i - 1, j - 1], [i, j], [[X, y(R, n - 1)], [z, -X]])
        d0 = _mat(R, [i, j], [i, j], [[XY, y(R, n)], [z, -XY]])
    elif fam == "G":
        i, j = idx
        n = j - i - 1
        d1 = _mat(R, [i, j - 1], [i, j], [[XY, y(R, n)], [z, -X]])
        d0 = _mat(R, [i, j], [i + 1, j], [[X, y(R, n)], [z, -XY]])
    elif fam == "H":
        i, j = idx
        n = j - i
        d1 = _mat(R, [i - 1, j], [i, j], [[X, y(R, n)], [z, -XY]])
        d0 = _mat(R, [i, j], [i, j + 1], [[XY, y(R, n)], [z, -X]])
    elif fam == "Ky":
        (s,) = idx
        d1, d0 = _mat(R, [s - 1], [s], [[X]]), _mat(R, [s], [s + 1], [[X]])
    elif fam == "I":
        m, s = idx
        rows = [[X, y(R, m)], [z, -X]]
        d1 = _mat(R, [s - 2, s + m - 1], [s - 1, s + m], rows)
        d0 = _mat(R, [s - 1, s + m], [s, s + m + 1], rows)
    else:  # pragma: no cover - guarded by Label validation
        raise LabelError("no resolution for %s" % l)
    return CompleteResolutionSpec(d1, d0, label=str(l))


def resolve_object(obj, field=QQ) -> CompleteResolutionSpec:
    """Resolution of a label, sum or CR; free summands are dropped (stably zero)."""
    if isinstance(obj, CompleteResolutionSpec):
        return obj
    s = strip_free(obj)
    if not s.terms:
        return zero_object(RingSpec(s.ring, field))
    crs = [resolve(t, field) for t in s.terms]
    if len(crs) == 1:
        return crs[0]
    out = crs[0]
    for c in crs[1:]:
        out = out.direct_sum(c)
    return CompleteResolutionSpec(out.d1, out.d0, label=str(s))


# --- factorization checks -------------------------------------------------


def factorization_defect(cr: CompleteResolutionSpec) -> List[str]:
    """Failed identities among: homogeneity, twist periodicity, d0 d1 = f = d1 d0 over S."""
    problems = []
    R = cr.ring
    if not cr.d1.check_homogeneous():
        problems.append("d1 not homogeneous")
    if not cr.d0.check_homogeneous():
        problems.append("d0 not homogeneous")
    if cr.d1.tgt.twists != cr.d0.src.twists:
        problems.append("d1 target differs from d0 source")
    if cr.d0.tgt.twists != cr.d1.src.twist(R.deg_f).twists:
        problems.append("d0 target is not d1 source twisted by deg f")
    if problems:
        return problems
    Sr = R.ambient
    phi, psi = cr.d1.over(Sr), cr.d0.over(Sr)
    f = R.defining_polynomial()
    n = phi.src.rank
    if phi.tgt.rank != n:
        return problems + ["factorization matrices are not square"]
    for name, prod in (("d0*d1", psi @ phi), ("d1*d0", phi.twist(R.deg_f) @ psi)):
        for r in range(n):
            for c in range(n):
                want = f if r == c else GradedPoly(Sr)
                if prod.entries[r][c] != want:
                    problems.append("%s != f*id at entry (%d,%d)" % (name, r, c))
    return problems


def exactness_failures(cr: CompleteResolutionSpec, degrees: Iterable[int]) -> List[Tuple[int, int]]:
    """(position, degree) pairs where the periodic complex is not exact over R."""
    bad = []
    d1, d0, dm1 = cr.differential(1), cr.differential(0), cr.differential(-1)
    for d in degrees:
        if cr.P(0).dim(d) != d1.rank_in_degree(d) + d0.rank_in_degree(d):
            bad.append((0, d))
        if cr.P(-1).dim(d) != d0.rank_in_degree(d) + dm1.rank_in_degree(d):
            bad.append((-1, d))
    return bad


def auto_degree_window(twists: Sequence[int], margin: int = 10) -> range:
    """Degrees covering every distinct behaviour of R(a)_d for a in twists, plus a margin.

    dim R(a)_d = dim R_{a+d} only changes for a + d in [-2, 2]-ish, so the
    interesting band is d in [-max(a) - 2, -min(a) + 2].
    """
    if not twists:
        return range(0)
    return range(-max(twists) - 2 - margin, -min(twists) + 2 + margin + 1)


# --- unit splitting -------------------------------------------------------


def split_units(cr: CompleteResolutionSpec):
    """Remove trivial summands (1, f) / (f, 1) from a factorization by row/column ops over S.

    Returns (reduced CR, twists of free summands R(a) split off coker(d1)).
    A unit in d0 leaves a free summand in coker(d1); a unit in d1 leaves none.
    """
    R = cr.ring
    Sr = R.ambient
    phi = [list(r) for r in cr.d1.over(Sr).entries]  # P0 x P1
    psi = [list(r) for r in cr.d0.over(Sr).entries]  # P-1 x P0 (same index set as P1)
    p1 = list(cr.d1.src.twists)
    p0 = list(cr.d1.tgt.twists)
    free: List[int] = []

    def find_unit(mat):
        for r, row in enumerate(mat):
            for c, e in enumerate(row):
                if e.terms and e.degree() == 0 and list(e.terms) == [Monomial(0, 0)]:
                    return r, c
        return None

    while True:
        hit = find_unit(psi)
        if hit is not None:
            r, c = hit  # psi: rows indexed by P1-like set, cols by P0
            u = psi[r][c].terms[Monomial(0, 0)]
            for r2 in range(len(psi)):
                if r2 != r and psi[r2][c].terms:
                    a = psi[r2][c].scale(1 / u)
                    psi[r2] = [e2 - e * a for e2, e in zip(psi[r2], psi[r])]
                    for k in range(len(phi)):  # phi column r += a * phi column r2
                        phi[k][r] = phi[k][r] + phi[k][r2] * a
            for c2 in range(len(psi[0])):
                if c2 != c and psi[r][c2].terms:
                    b = psi[r][c2].scale(1 / u)
                    for k in range(len(psi)):  # psi column c2 -= b * psi column c
                        psi[k][c2] = psi[k][c2] - psi[k][c] * b
                    phi[c] = [e + e2 * b for e, e2 in zip(phi[c], phi[c2])]  # phi row c += b * row c2
            free.append(p0[c])
            phi = [row[:r] + row[r + 1:] for k, row in enumerate(phi) if k != c]
            psi = [row[:c] + row[c + 1:] for k, row in enumerate(psi) if k != r]
            del p0[c]
            del p1[r]
            continue
        hit = find_unit(phi)
        if hit is not None:
            r, c = hit  # phi: rows P0, cols P1
            u = phi[r][c].terms[Monomial(0, 0)]
            for r2 in range(len(phi)):
                if r2 != r and phi[r2][c].terms:
                    a = phi[r2][c].scale(1 / u)
                    phi[r2] = [e2 - e * a for e2, e in zip(phi[r2], phi[r])]
                    for k in range(len(psi)):  # psi column r += a * psi column r2
                        psi[k][r] = psi[k][r] + psi[k][r2] * a
            for c2 in range(len(phi[0])):
                if c2 != c and phi[r][c2].terms:
                    b = phi[r][c2].scale(1 / u)
                    for k in range(len(phi)):
                        phi[k][c2] = phi[k][c2] - phi[k][c] * b
                    psi[c] = [e + e2 * b for e, e2 in zip(psi[c], psi[c2])]
            phi = [row[:c] + row[c + 1:] for k, row in enumerate(phi) if k != r]
            psi = [row[:r] + row[r + 1:] for k, row in enumerate(psi) if k != c]
            del p0[r]
            del p1[c]
            continue
        break
    k = R.deg_f
    d1 = _mat(R, p1, p0, [[e.in_ring(R) for e in row] for row in phi])
    d0 = _mat(R, p0, [a + k for a in p1], [[e.in_ring(R) for e in row] for row in psi])
    return CompleteResolutionSpec(d1, d0), free


def equal_up_to_units(a: CompleteResolutionSpec, b: CompleteResolutionSpec) -> bool:
    """Same twists and same entries up to nonzero scalars entrywise."""
    for m1, m2 in ((a.d1, b.d1), (a.d0, b.d0)):
        if m1.src.twists != m2.src.twists or m1.tgt.twists != m2.tgt.twists:
            return False
        for r1, r2 in zip(m1.entries, m2.entries):
            for e1, e2 in zip(r1, r2):
                if set(e1.terms) != set(e2.terms):
                    return False
                if len(e1.terms) > 1:
                    ratios = {e1.terms[m] / e2.terms[m] for m in e1.terms}
                    if len(ratios) != 1:
                        return False
    return True


# --- label enumeration ----------------------------------------------------


def labels_in_window(family: str, lo: int, hi: int, ring: Optional[str] = None,
                     include_degenerate: bool = True, m_range: Optional[Tuple[int, int]] = None) -> List[Label]:
    """All valid labels of a family with every index in [lo, hi] (I: s in window, m in m_range)."""
    if ring is None:
        ring = "Ainf" if family in ("Ky", "I") else "Dinf"
    out = []
    if family in ("A", "B", "C", "D", "Ky", "R"):
        out = [Label(ring, family, (i,)) for i in range(lo, hi + 1)]
    elif family in ("E", "F", "G"):
        out = [Label(ring, family, (i, j)) for i in range(lo, hi + 1) for j in range(i + 1, hi + 1)]
    elif family == "H":
        out = [Label(ring, family, (i, j)) for i in range(lo, hi + 1) for j in range(i, hi + 1)]
    elif family == "I":
        mlo, mhi = m_range or (1, 8)
        out = [Label(ring, "I", (m, s)) for m in range(mlo, mhi + 1) for s in range(lo, hi + 1)]
    if not include_degenerate:
        out = [l for l in out if not is_degenerate(l)]
    return out


def dinf_catalogue(lo: int, hi: int, include_degenerate: bool = False) -> List[Label]:
    out = []
    for fam in "ABCDEFGH":
        out += labels_in_window(fam, lo, hi, "Dinf", include_degenerate)
    return out


def ainf_catalogue(lo: int, hi: int, m_range: Tuple[int, int] = (1, 8)) -> List[Label]:
    return labels_in_window("Ky", lo, hi) + labels_in_window("I", lo, hi, m_range=m_range)


# --- whole-catalogue validation -------------------------------------------


@dataclass
class CatalogueReport:
    ring: str
    window: Tuple[int, int]
    checked: int = 0
    failures: List[dict] = field(default_factory=list)
    sequences_checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"ring": self.ring, "window": list(self.window), "labels_checked": self.checked,
                "sequences_checked": self.sequences_checked, "failures": self.failures,
                "passed": self.passed}


# Short exact sequences 0 -> sub(i) -> mid(i, j) -> quot(j) -> 0 with inclusion (1,0)^t and projection (0,1).
SES_FAMILIES = (("C", "E", "C", 1), ("D", "F", "D", 1), ("C", "G", "D", 1), ("D", "H", "C", 0))


def validate_catalogue(lo: int = -4, hi: int = 4, ring: str = "Dinf", field=QQ,
                       m_range: Tuple[int, int] = (1, 8), sequences: bool = True,
                       exactness_margin: int = 10) -> CatalogueReport:
    """Factorization identities, exactness, syzygy agreement and (Dinf) the generation sequences."""
    from .stable_hom import is_stably_iso, verify_ses

    rep = CatalogueReport(ring, (lo, hi))
    if ring == "Dinf":
        labels = dinf_catalogue(lo, hi, include_degenerate=True)
    else:
        labels = ainf_catalogue(lo, hi, m_range)
    for l in labels:
        cr = resolve(l, field)
        rep.checked += 1
        for p in factorization_defect(cr):
            rep.failures.append({"label": str(l), "check": p, "degree": None})
        for pos, d in exactness_failures(cr, auto_degree_window(cr.twists(), exactness_margin)):
            rep.failures.append({"label": str(l), "check": "not exact at position %d" % pos, "degree": d})
        if is_degenerate(l):
            continue
        if not is_stably_iso(syzygy_cr(cr), syzygy_label(l), field):
            rep.failures.append({"label": str(l), "check": "syzygy differs from %s" % syzygy_label(l),
                                 "degree": None})
    if ring == "Dinf" and sequences:
        for sub, mid, quot, gap in SES_FAMILIES:
            for i in range(lo, hi + 1):
                for j in range(i + gap, hi + 1):
                    r = verify_ses(Label(ring, sub, (i,)), Label(ring, mid, (i, j)), Label(ring, quot, (j,)),
                                   field=field)
                    rep.sequences_checked += 1
                    for f in r.failures:
                        rep.failures.append({"label": r.sequence, "check": f["check"], "degree": f["degree"]})
    return rep
