"""Exact linear algebra over a field and graded free modules / matrices over R.

Twist convention: M(a)_d = M_{a+d}.  A degree-0 map R(a) -> R(b) is
multiplication by a homogeneous element of degree b - a, and matrix entry
(r, c) of a map src -> tgt has degree tgt[r] - src[c].
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .algebra import GradedPoly, Monomial, RingSpec, parse_poly, ring_piece_basis

# --- dense elimination ----------------------------------------------------


def rref(rows: List[list], ncols: int, zero) -> Tuple[List[list], List[int]]:
    """Reduced row echelon form with first-nonzero pivoting (row-major order).

    Returns the nonzero reduced rows and their pivot columns.  Input rows are
    not modified.
    """
    m = [list(r) for r in rows]
    pivots: List[int] = []
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(m)):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        inv = 1 / prow[col]
        if prow[col] != 1:
            prow = [v * inv for v in prow]
            m[rank] = prow
        for i in range(len(m)):
            if i != rank and m[i][col]:
                c = m[i][col]
                row = m[i]
                m[i] = [row[k] - c * prow[k] if prow[k] else row[k] for k in range(ncols)]
        pivots.append(col)
        rank += 1
        if rank == len(m):
            break
    return m[:rank], pivots


def rank_of(rows: List[list], ncols: int, zero) -> int:
    return len(rref(rows, ncols, zero)[1])


def kernel_of(rows: List[list], ncols: int, zero, one) -> List[list]:
    """Basis of {v : A v = 0} for A given by ``rows`` (deterministic)."""
    red, pivots = rref(rows, ncols, zero)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [zero] * ncols
        v[free] = one
        for r, p in zip(red, pivots):
            v[p] = -r[free]
        basis.append(v)
    return basis


def solve_linear(rows: List[list], rhs: list, ncols: int, zero, one) -> Optional[list]:
    """One solution of A v = rhs with free variables set to zero, or None."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1, zero)
    if pivots and pivots[-1] == ncols:
        return None
    v = [zero] * ncols
    for r, p in zip(red, pivots):
        v[p] = r[ncols]
    return v


def transpose(rows: List[list], nrows: int, ncols: int, zero) -> List[list]:
    if not rows:
        return [[] for _ in range(ncols)] if nrows == 0 else [[zero] * nrows for _ in range(ncols)]
    return [list(col) for col in zip(*rows)]


class Echelon:
    """Incrementally built subspace of k^n kept in reduced echelon form."""

    def __init__(self, n: int, zero, one):
        self.n = n
        self.zero = zero
        self.one = one
        self.rows: Dict[int, list] = {}  # pivot column -> row with 1 at pivot

    def reduce(self, v: list) -> list:
        v = list(v)
        for p, row in self.rows.items():
            c = v[p]
            if c:
                v = [a - c * b if b else a for a, b in zip(v, row)]
        return v

    def add(self, v: list) -> bool:
        v = self.reduce(v)
        for p, c in enumerate(v):
            if c:
                inv = self.one / c
                v = [a * inv for a in v]
                for q, row in list(self.rows.items()):
                    if row[p]:
                        cc = row[p]
                        self.rows[q] = [a - cc * b for a, b in zip(row, v)]
                self.rows[p] = v
                return True
        return False

    def contains(self, v: list) -> bool:
        return not any(self.reduce(v))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> List[int]:
        return sorted(self.rows)


# --- graded free modules and homogeneous matrices -------------------------


@dataclass(frozen=True)
class GradedFreeModule:
    ring: RingSpec
    twists: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(self.twists))

    @property
    def rank(self) -> int:
        return len(self.twists)

    def piece_coords(self, d: int) -> List[Tuple[int, Monomial]]:
        """k-basis of the degree-d component as (summand, monomial) pairs."""
        return [(c, m) for c, a in enumerate(self.twists) for m in ring_piece_basis(self.ring, a + d)]

    def dim(self, d: int) -> int:
        return sum(len(ring_piece_basis(self.ring, a + d)) for a in self.twists)

    def twist(self, t: int) -> "GradedFreeModule":
        return GradedFreeModule(self.ring, tuple(a + t for a in self.twists))

    def __add__(self, other: "GradedFreeModule") -> "GradedFreeModule":
        return GradedFreeModule(self.ring, self.twists + other.twists)

    def __str__(self):
        if not self.twists:
            return "0"
        return " + ".join("R(%d)" % a for a in self.twists)


class GradedMatrix:
    """Matrix of ring elements defining a map of graded free modules src -> tgt."""

    __slots__ = ("ring", "src", "tgt", "entries", "_hash", "_deg_cache")

    def __init__(self, src: GradedFreeModule, tgt: GradedFreeModule, entries: Sequence[Sequence[GradedPoly]]):
        ring = tgt.ring
        if src.ring != ring:
            raise ValueError("source and target over different rings")
        if len(entries) != tgt.rank or any(len(row) != src.rank for row in entries):
            raise ValueError("matrix shape does not match %d x %d" % (tgt.rank, src.rank))
        self.ring = ring
        self.src = src
        self.tgt = tgt
        self.entries = tuple(tuple(e if e.ring == ring else e.in_ring(ring) for e in row) for row in entries)
        self._hash = None
        self._deg_cache: Dict[int, list] = {}

    @classmethod
    def from_lists(cls, ring: RingSpec, src: Iterable[int], tgt: Iterable[int], rows) -> "GradedMatrix":
        """Build from nested lists of strings / polys / ints."""
        src_m = GradedFreeModule(ring, tuple(src))
        tgt_m = GradedFreeModule(ring, tuple(tgt))
        entries = []
        for row in rows:
            out = []
            for e in row:
                if isinstance(e, GradedPoly):
                    out.append(e.in_ring(ring))
                elif isinstance(e, str):
                    out.append(parse_poly(e, ring))
                else:
                    out.append(parse_poly(str(e), ring))
            entries.append(out)
        return cls(src_m, tgt_m, entries)

    @classmethod
    def zero(cls, src: GradedFreeModule, tgt: GradedFreeModule) -> "GradedMatrix":
        return cls(src, tgt, [[GradedPoly(tgt.ring) for _ in src.twists] for _ in tgt.twists])

    @classmethod
    def identity(cls, mod: GradedFreeModule) -> "GradedMatrix":
        ring = mod.ring
        one = GradedPoly.monomial(ring, 0, 0)
        return cls(mod, mod, [[one if r == c else GradedPoly(ring) for c in range(mod.rank)] for r in range(mod.rank)])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.tgt.rank, self.src.rank

    def __getitem__(self, rc: Tuple[int, int]) -> GradedPoly:
        return self.entries[rc[0]][rc[1]]

    def entry_degree(self, r: int, c: int) -> int:
        return self.tgt.twists[r] - self.src.twists[c]

    def check_homogeneous(self) -> bool:
        for r, row in enumerate(self.entries):
            for c, e in enumerate(row):
                if e.is_zero():
                    continue
                if e.degree() != self.entry_degree(r, c):
                    return False
        return True

    def __matmul__(self, other: "GradedMatrix") -> "GradedMatrix":
        """self after other."""
        if other.tgt.twists != self.src.twists or other.ring != self.ring:
            raise ValueError("cannot compose: %s -> %s after %s -> %s" % (self.src, self.tgt, other.src, other.tgt))
        n = self.src.rank
        zero = GradedPoly(self.ring)
        rows = []
        for r in range(self.tgt.rank):
            row = []
            for c in range(other.src.rank):
                acc = zero
                for k in range(n):
                    a, b = self.entries[r][k], other.entries[k][c]
                    if a.terms and b.terms:
                        acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return GradedMatrix(other.src, self.tgt, rows)

    def __add__(self, other: "GradedMatrix") -> "GradedMatrix":
        if other.src != self.src or other.tgt != self.tgt:
            raise ValueError("shape/twist mismatch in matrix sum")
        return GradedMatrix(self.src, self.tgt, [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other: "GradedMatrix") -> "GradedMatrix":
        return self + other.scale(-1)

    def scale(self, c) -> "GradedMatrix":
        c = self.ring.field(c) if isinstance(c, int) else c
        return GradedMatrix(self.src, self.tgt, [[e.scale(c) for e in row] for row in self.entries])

    def twist(self, t: int) -> "GradedMatrix":
        return GradedMatrix(self.src.twist(t), self.tgt.twist(t), self.entries)

    def over(self, ring: RingSpec) -> "GradedMatrix":
        """Same entries viewed over another ring (e.g. lift to S or reduce to R)."""
        return GradedMatrix(GradedFreeModule(ring, self.src.twists), GradedFreeModule(ring, self.tgt.twists),
                            [[e.in_ring(ring) for e in row] for row in self.entries])

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def block_sum(self, other: "GradedMatrix") -> "GradedMatrix":
        zero = GradedPoly(self.ring)
        rows = [list(r) + [zero] * other.src.rank for r in self.entries]
        rows += [[zero] * self.src.rank + list(r) for r in other.entries]
        return GradedMatrix(self.src + other.src, self.tgt + other.tgt, rows)

    def degree_matrix(self, d: int) -> Tuple[List[list], list, list]:
        """The induced k-linear map in degree d as (rows, src coords, tgt coords)."""
        if d in self._deg_cache:
            return self._deg_cache[d]
        src_c = self.src.piece_coords(d)
        tgt_c = self.tgt.piece_coords(d)
        index = {k: i for i, k in enumerate(tgt_c)}
        zero = self.ring.field.zero
        cols = []
        for c, m in src_c:
            col = [zero] * len(tgt_c)
            for r in range(self.tgt.rank):
                e = self.entries[r][c]
                for mm, coeff in e.terms.items():
                    prod = Monomial(mm.a + m.a, mm.b + m.b)
                    if self.ring.is_zero_monomial(prod):
                        continue
                    pos = index.get((r, prod))
                    if pos is None:
                        raise ValueError("matrix entry (%d, %d) is not homogeneous of degree %d"
                                         % (r, c, self.entry_degree(r, c)))
                    col[pos] += coeff
            cols.append(col)
        rows = [[cols[j][i] for j in range(len(src_c))] for i in range(len(tgt_c))]
        out = (rows, src_c, tgt_c)
        self._deg_cache[d] = out
        return out

    def kernel_basis(self, d: int) -> List[list]:
        rows, src_c, _ = self.degree_matrix(d)
        f = self.ring.field
        if not rows:
            return [[f.one if i == j else f.zero for j in range(len(src_c))] for i in range(len(src_c))]
        return kernel_of(rows, len(src_c), f.zero, f.one)

    def image_basis(self, d: int) -> List[list]:
        rows, src_c, tgt_c = self.degree_matrix(d)
        f = self.ring.field
        cols = transpose(rows, len(tgt_c), len(src_c), f.zero)
        red, _ = rref(cols, len(tgt_c), f.zero)
        return red

    def rank_in_degree(self, d: int) -> int:
        rows, src_c, _ = self.degree_matrix(d)
        return rank_of(rows, len(src_c), self.ring.field.zero)

    def __eq__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return self.src == other.src and self.tgt == other.tgt and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.src, self.tgt, self.entries))
        return self._hash

    def __repr__(self):
        return "GradedMatrix(%s -> %s, %s)" % (self.src, self.tgt, [[str(e) for e in r] for r in self.entries])

    # --- text / JSON formats ---

    def to_text(self) -> str:
        lines = ["src: " + " ".join(str(a) for a in self.src.twists),
                 "tgt: " + " ".join(str(a) for a in self.tgt.twists)]
        for row in self.entries:
            lines.append(" ; ".join(str(e) for e in row))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "ring": self.ring.kind,
            "src": list(self.src.twists),
            "tgt": list(self.tgt.twists),
            "rows": [[str(e) for e in row] for row in self.entries],
        }


def parse_matrix(text: str, ring: RingSpec) -> GradedMatrix:
    """Inverse of :meth:`GradedMatrix.to_text`."""
    src = tgt = None
    rows = []
    for line in text.strip().splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("src:"):
            src = [int(t) for t in line[4:].split()]
        elif line.startswith("tgt:"):
            tgt = [int(t) for t in line[4:].split()]
        else:
            rows.append([e.strip() for e in line.split(";")])
    if src is None or tgt is None:
        raise ValueError("matrix text needs 'src:' and 'tgt:' twist lines")
    return GradedMatrix.from_lists(ring, src, tgt, rows)


def matrix_from_json(data, ring: Optional[RingSpec] = None) -> GradedMatrix:
    if isinstance(data, str):
        data = json.loads(data)
    if ring is None:
        ring = RingSpec(data["ring"])
    return GradedMatrix.from_lists(ring, data["src"], data["tgt"], data["rows"])


# --- finitely presented modules ------------------------------------------


class ModulePiece:
    """Degree-d component of coker(pres): ambient coords, image echelon, quotient basis."""

    def __init__(self, pres: GradedMatrix, d: int):
        field = pres.ring.field
        self.degree = d
        rows, src_c, tgt_c = pres.degree_matrix(d)
        self.coords = tgt_c
        self.index = {k: i for i, k in enumerate(tgt_c)}
        self.image = Echelon(len(tgt_c), field.zero, field.one)
        for col in transpose(rows, len(tgt_c), len(src_c), field.zero):
            self.image.add(col)
        pivs = set(self.image.pivots)
        self.quotient = [i for i in range(len(tgt_c)) if i not in pivs]
        self.zero = field.zero

    @property
    def dim(self) -> int:
        return len(self.quotient)

    def dense(self, sparse: Dict[Tuple[int, Monomial], object]) -> list:
        v = [self.zero] * len(self.coords)
        for k, c in sparse.items():
            v[self.index[k]] += c
        return v

    def reduce(self, sparse: Dict[Tuple[int, Monomial], object]) -> list:
        """Quotient coordinates of a lifted element given sparsely."""
        v = self.image.reduce(self.dense(sparse))
        return [v[i] for i in self.quotient]

    def lift(self, q: int) -> Tuple[int, Monomial]:
        """Ambient coordinate representing quotient basis vector q."""
        return self.coords[self.quotient[q]]


class ModulePresentation:
    """The graded module coker(pres: Q1 -> Q0), with per-degree pieces cached."""

    def __init__(self, pres: GradedMatrix):
        self.pres = pres
        self.ring = pres.ring
        self._pieces: Dict[int, ModulePiece] = {}

    def piece(self, d: int) -> ModulePiece:
        p = self._pieces.get(d)
        if p is None:
            p = ModulePiece(self.pres, d)
            # idempotent fill; concurrent writers compute identical pieces
            p = self._pieces.setdefault(d, p)
        return p

    def dim(self, d: int) -> int:
        return self.piece(d).dim

    def module_piece(self, d: int) -> List["GradedVector"]:
        p = self.piece(d)
        field = self.ring.field
        basis = []
        for q in range(p.dim):
            coords = [field.zero] * p.dim
            coords[q] = field.one
            basis.append(GradedVector(self, d, tuple(coords)))
        return basis

    def multiply(self, poly: GradedPoly, d: int, coords: Sequence) -> list:
        """Quotient coordinates of poly * v for v in degree d given by quotient coords."""
        src = self.piece(d)
        dg = poly.degree()
        if dg is None:
            if poly.is_zero():
                raise ValueError("zero multiplier has no degree")
            raise ValueError("multiplier must be homogeneous")
        tgt = self.piece(d + dg)
        sparse: Dict[Tuple[int, Monomial], object] = {}
        zero_mono = self.ring.is_zero_monomial
        for q, c in enumerate(coords):
            if not c:
                continue
            r, m = src.lift(q)
            for pm, pc in poly.terms.items():
                prod = Monomial(pm.a + m.a, pm.b + m.b)
                if zero_mono(prod):
                    continue
                key = (r, prod)
                sparse[key] = sparse.get(key, 0) + pc * c
        return tgt.reduce(sparse)


@dataclass(frozen=True)
class GradedVector:
    module: ModulePresentation
    degree: int
    coords: tuple

    def __eq__(self, other):
        return (isinstance(other, GradedVector) and other.module is self.module
                and other.degree == self.degree and tuple(other.coords) == tuple(self.coords))

    def __hash__(self):
        return hash((id(self.module), self.degree, tuple(self.coords)))


def module_piece(p: ModulePresentation, d: int) -> List[GradedVector]:
    return p.module_piece(d)


def hom_space_basis(P: GradedFreeModule, N: ModulePresentation) -> List[Tuple[int, int]]:
    """Basis of degree-0 maps P -> N as (summand c, quotient basis index in N_{-a_c})."""
    return [(c, q) for c, a in enumerate(P.twists) for q in range(N.dim(-a))]


# --- solving homogeneous matrix equations over R --------------------------


def _unknown_basis(src: GradedFreeModule, tgt: GradedFreeModule):
    ring = tgt.ring
    return [(r, c, m) for r in range(tgt.rank) for c in range(src.rank)
            for m in ring_piece_basis(ring, tgt.twists[r] - src.twists[c])]


def _solve_matrix_equation(unknowns, image_of, target: GradedMatrix, src, tgt) -> Optional[GradedMatrix]:
    ring = target.ring
    field = ring.field
    keys: Dict[Tuple[int, int, Monomial], int] = {}
    cols = []
    for u in unknowns:
        col = {}
        for (r, c, m), v in image_of(u).items():
            col[(r, c, m)] = v
            keys.setdefault((r, c, m), len(keys))
        cols.append(col)
    rhs_sp = {}
    for r, row in enumerate(target.entries):
        for c, e in enumerate(row):
            for m, v in e.terms.items():
                rhs_sp[(r, c, m)] = v
                keys.setdefault((r, c, m), len(keys))
    n = len(unknowns)
    rows = [[field.zero] * n for _ in keys]
    for j, col in enumerate(cols):
        for k, v in col.items():
            rows[keys[k]][j] += v
    rhs = [field.zero] * len(keys)
    for k, v in rhs_sp.items():
        rhs[keys[k]] += v
    if not keys:
        sol = [field.zero] * n
    else:
        sol = solve_linear(rows, rhs, n, field.zero, field.one)
    if sol is None:
        return None
    out = [[GradedPoly(ring) for _ in src.twists] for _ in tgt.twists]
    for (r, c, m), v in zip(unknowns, sol):
        if v:
            out[r][c] = out[r][c] + GradedPoly(ring, {m: v})
    return GradedMatrix(src, tgt, out)


def solve_left(A: GradedMatrix, B: GradedMatrix) -> Optional[GradedMatrix]:
    """Find U with A @ U == B (U: B.src -> A.src), or None."""
    ring = A.ring
    unknowns = _unknown_basis(B.src, A.src)

    def image_of(u):
        r0, c0, m0 = u
        out = {}
        for r in range(A.tgt.rank):
            for mm, v in A.entries[r][r0].terms.items():
                prod = Monomial(mm.a + m0.a, mm.b + m0.b)
                if ring.is_zero_monomial(prod):
                    continue
                k = (r, c0, prod)
                out[k] = out.get(k, 0) + v
        return out

    return _solve_matrix_equation(unknowns, image_of, B, B.src, A.src)


def solve_right(A: GradedMatrix, B: GradedMatrix) -> Optional[GradedMatrix]:
    """Find U with U @ A == B (U: A.tgt -> B.tgt), or None."""
    ring = A.ring
    unknowns = _unknown_basis(A.tgt, B.tgt)

    def image_of(u):
        r0, c0, m0 = u
        out = {}
        for c in range(A.src.rank):
            for mm, v in A.entries[c0][c].terms.items():
                prod = Monomial(mm.a + m0.a, mm.b + m0.b)
                if ring.is_zero_monomial(prod):
                    continue
                k = (r0, c, prod)
                out[k] = out.get(k, 0) + v
        return out

    return _solve_matrix_equation(unknowns, image_of, B, A.tgt, B.tgt)
