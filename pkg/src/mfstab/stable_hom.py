"""Stable Hom spaces as H^0 of Hom_R(CR(X), Y), with chain-map lifts and composition.

For objects X, Y with complete resolutions CR(X) and CR(Y), a degree-0 map
phi: P_0(X) -> Y is a cocycle when phi o d1 = 0 and a coboundary when it is
h o d0 for some h: P_{-1}(X) -> Y.  Everything lives in finitely many graded
pieces of Y = coker(d1 of Y), selected by the twists of P_0(X) and P_{-1}(X).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .algebra import GradedPoly, Monomial
from .catalogue import (CompleteResolutionSpec, Label, LabelSum, ObjectLabel, labels_in_window,
                        parse_label, resolve, resolve_object, syzygy_label)
from .fields import QQ
from .linalg import (Echelon, GradedFreeModule, GradedMatrix, kernel_of, solve_left, solve_linear, transpose)


class RingMismatch(ValueError):
    pass


class InconclusiveIsoError(RuntimeError):
    """A finite search could not decide whether two objects are stably isomorphic."""


class ChainLiftError(RuntimeError):
    pass


# --- Hom spaces -----------------------------------------------------------


class StableHomSpace:
    """Hom from X to Y in the stable category, with a basis of cocycle representatives."""

    def __init__(self, source: CompleteResolutionSpec, target: CompleteResolutionSpec):
        if source.ring != target.ring:
            raise RingMismatch("objects over %s and %s" % (source.ring, target.ring))
        self.source = source
        self.target = target
        self.ring = source.ring
        f = self.ring.field
        self._zero, self._one = f.zero, f.one
        N = target.module
        self.N = N
        P1, P0, Pm1 = source.P(1), source.P(0), source.P(-1)
        self.blocks0 = _blocks(N, P0)
        self.n0 = sum(n for _, n in self.blocks0)
        blocks1 = _blocks(N, P1)
        n1 = sum(n for _, n in blocks1)
        blocksm1 = _blocks(N, Pm1)
        nm1 = sum(n for _, n in blocksm1)

        # cocycle condition: phi o d1 = 0
        d1 = source.differential(1)
        A_cols = _precompose_columns(N, d1, self.blocks0, blocks1, self._zero)
        rows = transpose(A_cols, n1, self.n0, self._zero) if A_cols else []
        if n1 == 0:
            cocycles = [_unit(self.n0, k, self._zero, self._one) for k in range(self.n0)]
        else:
            cocycles = kernel_of(rows, self.n0, self._zero, self._one)
        # coboundaries: h o d0
        d0 = source.differential(0)
        self.coboundaries = _precompose_columns(N, d0, blocksm1, self.blocks0, self._zero)
        ech = Echelon(self.n0, self._zero, self._one)
        for b in self.coboundaries:
            ech.add(b)
        self._cobound_dim = ech.dim
        reps = []
        for z in cocycles:
            if ech.add(z):
                reps.append(z)
        self.n_cocycles = len(cocycles)
        self.representatives = [self._normalize(r) for r in reps]
        self._n1_blocks = blocks1

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def _normalize(self, v: list) -> list:
        m = self.rep_matrix(v)
        for row in m.entries:
            for e in row:
                lead = e.leading()
                if lead is not None:
                    inv = self._one / lead[1]
                    return [c * inv for c in v]
        return v

    def is_cocycle(self, v: Sequence) -> bool:
        d1 = self.source.differential(1)
        img = _apply_precompose(self.N, d1, self.blocks0, self._n1_blocks, v, self._zero)
        return not any(img)

    def coordinates(self, v: Sequence) -> List:
        """Coefficients of a cocycle in the representative basis, modulo coboundaries."""
        if not self.is_cocycle(v):
            raise ValueError("not a cocycle")
        if self.n0 == 0:
            return []
        cols = list(self.representatives) + list(self.coboundaries)
        if not cols:
            return []
        rows = transpose(cols, self.n0, len(cols), self._zero)
        sol = solve_linear(rows, list(v), len(cols), self._zero, self._one)
        if sol is None:  # pragma: no cover - cocycles always lie in the span
            raise ArithmeticError("cocycle outside span of representatives and coboundaries")
        return sol[: self.dim]

    def element(self, coeffs: Sequence) -> "HomElement":
        return HomElement(self, tuple(coeffs))

    def basis(self) -> List["HomElement"]:
        return [self.element([self._one if i == k else self._zero for i in range(self.dim)])
                for k in range(self.dim)]

    def zero(self) -> "HomElement":
        return self.element([self._zero] * self.dim)

    def cocycle_of(self, coeffs: Sequence) -> list:
        v = [self._zero] * self.n0
        for c, rep in zip(coeffs, self.representatives):
            if c:
                v = [a + c * b for a, b in zip(v, rep)]
        return v

    def rep_matrix(self, v: Sequence) -> GradedMatrix:
        """Lift a cocycle vector to a matrix P_0(X) -> P_0(Y) (entries in normal form)."""
        P0 = self.source.P(0)
        Q0 = self.target.d1.tgt
        R = self.ring
        rows = [[GradedPoly(R) for _ in P0.twists] for _ in Q0.twists]
        pos = 0
        for c, n in self.blocks0:
            a = P0.twists[c]
            piece = self.N.piece(-a)
            for q in range(n):
                coeff = v[pos + q]
                if coeff:
                    r, m = piece.lift(q)
                    rows[r][c] = rows[r][c] + GradedPoly(R, {m: coeff})
            pos += n
        return GradedMatrix(P0, Q0, rows)

    def cocycle_from_matrix(self, M: GradedMatrix) -> list:
        """Project a matrix P_0(X) -> P_0(Y) to a cocycle vector in N = coker(d1 of Y)."""
        P0 = self.source.P(0)
        if M.src.twists != P0.twists or M.tgt.twists != self.target.d1.tgt.twists:
            raise ValueError("matrix does not go P_0(source) -> P_0(target)")
        out = []
        for c, n in self.blocks0:
            a = P0.twists[c]
            piece = self.N.piece(-a)
            sparse = {}
            for r in range(M.tgt.rank):
                for m, coeff in M.entries[r][c].terms.items():
                    sparse[(r, m)] = sparse.get((r, m), 0) + coeff
            out.extend(piece.reduce(sparse))
        return out

    def identity(self) -> "HomElement":
        if self.source != self.target:
            raise ValueError("identity needs source == target")
        ident = GradedMatrix.identity(self.source.P(0))
        return self.element(self.coordinates(self.cocycle_from_matrix(ident)))

    def to_json(self) -> dict:
        return {
            "ring": self.ring.kind,
            "source": str(self.source),
            "target": str(self.target),
            "dim": self.dim,
            "representatives": [self.rep_matrix(r).to_text() for r in self.representatives],
            "convention": {"twist": "M(a)_d = M_{a+d}", "ext1": "Ext^1(X,Y) = Hom(Omega X, Y)"},
        }

    def __repr__(self):
        return "StableHomSpace(%s -> %s, dim=%d)" % (self.source, self.target, self.dim)


def _unit(n, k, zero, one):
    v = [zero] * n
    v[k] = one
    return v


def _blocks(N, P: GradedFreeModule) -> List[Tuple[int, int]]:
    return [(c, N.dim(-a)) for c, a in enumerate(P.twists)]


def _precompose_columns(N, d: GradedMatrix, src_blocks, tgt_blocks, zero) -> List[list]:
    """Matrix of phi -> phi o d, from Hom(tgt(d), N) to Hom(src(d), N), as columns."""
    n_src = sum(n for _, n in src_blocks)
    cols = []
    for c, n in src_blocks:
        for q in range(n):
            v = [zero] * n_src
            pos = 0
            for c2, n2 in src_blocks:
                if c2 == c:
                    v[pos + q] = N.ring.field.one
                pos += n2
            cols.append(_apply_precompose(N, d, src_blocks, tgt_blocks, v, zero))
    return cols


def _apply_precompose(N, d: GradedMatrix, phi_blocks, out_blocks, v, zero) -> list:
    """phi o d where phi: tgt(d) -> N is given by quotient coords v (blocks over tgt(d))."""
    tgt_tw = d.tgt.twists
    src_tw = d.src.twists
    out = []
    starts = {}
    pos = 0
    for c, n in phi_blocks:
        starts[c] = (pos, n)
        pos += n
    for c2, n2 in out_blocks:
        acc = [zero] * n2
        for r in range(d.tgt.rank):
            e = d.entries[r][c2]
            if not e.terms:
                continue
            s, n = starts[r]
            block = v[s:s + n]
            if not any(block):
                continue
            img = N.multiply(e, -tgt_tw[r], block)
            acc = [a + b for a, b in zip(acc, img)]
        out.extend(acc)
    return out


@dataclass(frozen=True)
class HomElement:
    space: StableHomSpace
    coeffs: tuple

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def cocycle(self) -> list:
        return self.space.cocycle_of(self.coeffs)

    def matrix(self) -> GradedMatrix:
        return self.space.rep_matrix(self.cocycle())

    def __add__(self, other: "HomElement") -> "HomElement":
        return HomElement(self.space, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> "HomElement":
        return HomElement(self.space, tuple(c * a for a in self.coeffs))


@lru_cache(maxsize=200000)
def _hom_cached(X: CompleteResolutionSpec, Y: CompleteResolutionSpec) -> StableHomSpace:
    return StableHomSpace(X, Y)


def stable_hom(X, Y, field=QQ) -> StableHomSpace:
    """Stable Hom between labels (free summands stripped) or complete resolutions."""
    Xr, Yr = resolve_object(_coerce(X), field), resolve_object(_coerce(Y), field)
    if Xr.ring.kind != Yr.ring.kind:
        raise RingMismatch("cannot compare objects over %s and %s" % (Xr.ring.kind, Yr.ring.kind))
    return _hom_cached(Xr, Yr)


def hom_dim(X, Y, field=QQ) -> int:
    return stable_hom(X, Y, field).dim


def ext1_dim(X, Y, field=QQ) -> int:
    """dim Ext^1(X, Y) = dim Hom(Omega X, Y)."""
    Xr = resolve_object(_coerce(X), field)
    return stable_hom(Xr.shift(1), Y, field).dim


def _coerce(obj):
    if isinstance(obj, str):
        return parse_label(obj)
    return obj


def clear_caches():
    _hom_cached.cache_clear()


# --- chain maps -----------------------------------------------------------


@dataclass
class ChainMap:
    """Periodic chain map CR(X) -> CR(Y) stored by its positions 0 and 1 over S.

    The two stored matrices satisfy d1_Y phi1 = phi0 d1_X and
    d0_Y phi0 = phi1(deg f) d0_X exactly over S; every other component follows
    from phi_{n-2} = phi_n(deg f).
    """

    source: CompleteResolutionSpec
    target: CompleteResolutionSpec
    phi0: GradedMatrix  # over S
    phi1: GradedMatrix  # over S

    def component(self, n: int) -> GradedMatrix:
        """phi_n : P_n(X) -> P_n(Y), over the quotient ring."""
        R = self.source.ring
        k = R.deg_f
        if n % 2:
            base, m = self.phi1, (1 - n) // 2
        else:
            base, m = self.phi0, -n // 2
        return base.twist(m * k).over(R)

    def check(self, window: Iterable[int] = range(-3, 4)) -> bool:
        for n in window:
            dX, dY = self.source.differential(n), self.target.differential(n)
            lhs = dY @ self.component(n)
            rhs = self.component(n - 1) @ dX
            if lhs.entries != rhs.entries:
                return False
        return True


def lift_to_chain_map(space: StableHomSpace, v: Sequence) -> ChainMap:
    """Lift a cocycle P_0(X) -> Y to a periodic chain map CR(X) -> CR(Y)."""
    X, Y = space.source, space.target
    R = space.ring
    Sr = R.ambient
    phi0 = space.rep_matrix(v)
    rhs = phi0 @ X.differential(1)
    phi1 = solve_left(Y.differential(1), rhs)
    if phi1 is None:
        raise ChainLiftError("cannot lift: vector is not a cocycle for %s -> %s" % (X, Y))
    # Correct phi1 over S so that the square commutes on the nose, not just mod f.
    PhiX, PhiY = X.d1.over(Sr), Y.d1.over(Sr)
    PsiY = Y.d0.over(Sr)
    phi0S, phi1S = phi0.over(Sr), phi1.over(Sr)
    diff = PhiY @ phi1S - phi0S @ PhiX
    fm = R.f
    H_rows = [[e.divide_by_monomial(fm) for e in row] for row in diff.entries]
    H = GradedMatrix(diff.src, diff.tgt.twist(-R.deg_f), H_rows)
    phi1S = phi1S - PsiY.twist(-R.deg_f) @ H
    cm = ChainMap(X, Y, phi0S, phi1S)
    if (PhiY @ phi1S).entries != (phi0S @ PhiX).entries:  # pragma: no cover
        raise ChainLiftError("S-level square failed after correction")
    if (PsiY @ phi0S).entries != (phi1S.twist(R.deg_f) @ X.d0.over(Sr)).entries:  # pragma: no cover
        raise ChainLiftError("second square failed over S")
    return cm


def lift_element(e: HomElement) -> ChainMap:
    return lift_to_chain_map(e.space, e.cocycle())


# --- composition ----------------------------------------------------------


def compose(f: HomElement, g: HomElement, target_space: Optional[StableHomSpace] = None) -> HomElement:
    """g o f for f: X -> Y and g: Y -> Z."""
    if f.space.target != g.space.source:
        raise ValueError("cannot compose: target of f is not the source of g")
    space = target_space or _hom_cached(f.space.source, g.space.target)
    M = g.matrix() @ f.matrix()
    return space.element(space.coordinates(space.cocycle_from_matrix(M)))


def shifted_compose(f: HomElement, g: HomElement, a: int, target_space: StableHomSpace) -> HomElement:
    """Sigma^a(g) o f, where f: X -> Sigma^a X' and g: X' -> Z with Sigma^a X' == target of f.

    Uses the chain lift of g: Sigma^a(g) has position-0 component g_{-a}.
    """
    if f.space.target != g.space.source.shift(-a):
        raise ValueError("target of f is not Sigma^a of the source of g")
    gm = lift_element(g).component(-a)
    M = gm @ f.matrix()
    return target_space.element(target_space.coordinates(target_space.cocycle_from_matrix(M)))


# --- graded endomorphism algebra ------------------------------------------


@dataclass
class EndoAlgebra:
    object: str
    degrees: List[int]
    dims: List[int]
    # (a, b) -> scalar c with t^a * t^b = c * t^(a+b); only for 1-dim pieces
    products: Dict[Tuple[int, int], object] = field(default_factory=dict)

    def is_polynomial_ring(self, generator_degree: int = -1) -> bool:
        """Dims are 1 exactly at multiples n = k * generator_degree (k >= 0) and all products nonzero."""
        g = generator_degree
        for n, d in zip(self.degrees, self.dims):
            want = 1 if (n % g == 0 and n // g >= 0) else 0
            if d != want:
                return False
        return all(c != 0 for c in self.products.values())


def endo_algebra(X, n_range: Iterable[int], field=QQ) -> EndoAlgebra:
    """Graded pieces Hom(X, Sigma^n X) and products of the chosen generators."""
    Xr = resolve_object(_coerce(X), field)
    degrees = list(n_range)
    spaces = {n: _hom_cached(Xr, Xr.shift(-n)) for n in degrees}
    dims = [spaces[n].dim for n in degrees]
    alg = EndoAlgebra(str(Xr), degrees, dims)
    gens = {n: spaces[n].basis()[0] for n in degrees if spaces[n].dim == 1}
    for a in gens:
        for b in gens:
            if a + b not in spaces or spaces[a + b].dim != 1:
                continue
            # t^a * t^b := Sigma^a(t^b) o t^a
            prod = shifted_compose(gens[a], gens[b], a, spaces[a + b])
            alg.products[(a, b)] = prod.coeffs[0]
    return alg


# --- stable isomorphism ---------------------------------------------------


def _is_identity(e: HomElement) -> bool:
    ident = e.space.identity()
    return tuple(ident.coeffs) == tuple(e.coeffs)


def _try_inverse(f: HomElement, hYX: StableHomSpace, hXX: StableHomSpace, hYY: StableHomSpace) -> bool:
    """Decide whether f is invertible by solving g o f = id_X, then checking f o g = id_Y."""
    zero, one = f.space._zero, f.space._one
    basis = hYX.basis()
    if not basis:
        return False
    cols = [compose(f, g, hXX).coeffs for g in basis]
    target = hXX.identity().coeffs
    if hXX.dim == 0:
        return False
    rows = transpose([list(c) for c in cols], hXX.dim, len(cols), zero)
    sol = solve_linear(rows, list(target), len(cols), zero, one)
    if sol is None:
        return False
    g = hYX.element(sol)
    return compose(g, f, hYY).coeffs == hYY.identity().coeffs


def is_stably_iso(X, Y, field=QQ, tries: int = 12) -> bool:
    """True iff X and Y are isomorphic in the stable category.

    Raises InconclusiveIsoError when Hom(X, Y) has dimension > 1 and none of the
    tried candidates is invertible.
    """
    Xr, Yr = resolve_object(_coerce(X), field), resolve_object(_coerce(Y), field)
    hXX, hYY = _hom_cached(Xr, Xr), _hom_cached(Yr, Yr)
    if hXX.dim == 0 or hYY.dim == 0:
        return hXX.dim == 0 and hYY.dim == 0
    hXY, hYX = _hom_cached(Xr, Yr), _hom_cached(Yr, Xr)
    if hXY.dim == 0 or hYX.dim == 0:
        return False
    # an isomorphism identifies all four Hom spaces
    if not hXX.dim == hYY.dim == hXY.dim == hYX.dim:
        return False
    candidates = hXY.basis()
    if hXY.dim > 1:
        rng = random.Random(20240601)
        fz = Xr.ring.field
        candidates.append(hXY.element([fz.one] * hXY.dim))
        for _ in range(tries):
            candidates.append(hXY.element([fz(rng.randint(-7, 7)) for _ in range(hXY.dim)]))
    for f in candidates:
        if not f.is_zero() and _try_inverse(f, hYX, hXX, hYY):
            return True
    if hXY.dim == 1:
        return False
    raise InconclusiveIsoError("no invertible map found among %d candidates in Hom(%s, %s) of dim %d"
                               % (len(candidates), Xr, Yr, hXY.dim))


# --- tables ---------------------------------------------------------------


@dataclass
class HomTable:
    src_family: str
    tgt_family: str
    ring: str
    rows: List[dict]

    @property
    def index_columns(self) -> List[str]:
        return _index_names(self.src_family, "X") + _index_names(self.tgt_family, "Y")

    def to_csv(self) -> str:
        cols = self.index_columns + ["hom", "ext1"]
        lines = [",".join(cols)]
        for r in self.rows:
            lines.append(",".join(str(r[c]) for c in cols))
        return "\n".join(lines) + "\n"

    def to_markdown(self) -> str:
        cols = self.index_columns + ["hom", "ext1"]
        lines = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
        for r in self.rows:
            lines.append("| " + " | ".join(str(r[c]) for c in cols) + " |")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {"ring": self.ring, "source_family": self.src_family, "target_family": self.tgt_family,
                "rows": self.rows}


def _index_names(family: str, prefix: str) -> List[str]:
    if family in ("A", "B", "C", "D", "Ky"):
        return [prefix + "_i"]
    if family == "I":
        return [prefix + "_m", prefix + "_s"]
    return [prefix + "_i", prefix + "_j"]


def hom_table(src_family: str, tgt_family: str, window: Tuple[int, int], field=QQ,
              include_degenerate: bool = True, m_range: Tuple[int, int] = (1, 8)) -> HomTable:
    """dim Hom(X, Y) and dim Ext^1(X, Y) for all labels of the two families in the window."""
    lo, hi = window
    xs = labels_in_window(src_family, lo, hi, include_degenerate=include_degenerate, m_range=m_range)
    ys = labels_in_window(tgt_family, lo, hi, include_degenerate=include_degenerate, m_range=m_range)
    if not xs or not ys:
        raise ValueError("no labels for families %s, %s" % (src_family, tgt_family))
    if xs[0].ring != ys[0].ring:
        raise RingMismatch("families over different rings")
    rows = []
    xn, yn = _index_names(src_family, "X"), _index_names(tgt_family, "Y")
    for X in xs:
        for Y in ys:
            row = dict(zip(xn, X.indices))
            row.update(zip(yn, Y.indices))
            row["hom"] = hom_dim(X, Y, field)
            row["ext1"] = ext1_dim(X, Y, field)
            rows.append(row)
    return HomTable(src_family, tgt_family, xs[0].ring, rows)


# --- short exact sequences ------------------------------------------------


@dataclass
class SesReport:
    sequence: str
    degrees: Tuple[int, int]
    failures: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def standard_ses_maps(sub: CompleteResolutionSpec, mid: CompleteResolutionSpec,
                      quot: CompleteResolutionSpec) -> Tuple[GradedMatrix, GradedMatrix]:
    """The inclusion (1,0)^t and projection (0,1) between target free modules."""
    R = mid.ring
    one, z = GradedPoly.monomial(R, 0, 0), GradedPoly(R)
    Q_sub, Q_mid, Q_quot = sub.d1.tgt, mid.d1.tgt, quot.d1.tgt
    n_sub = Q_sub.rank
    iota = GradedMatrix(Q_sub, Q_mid, [[one if r == c else z for c in range(n_sub)] for r in range(Q_mid.rank)])
    pi = GradedMatrix(Q_mid, Q_quot, [[one if c == r + n_sub else z for c in range(Q_mid.rank)]
                                      for r in range(Q_quot.rank)])
    return iota, pi


def _induced_map(M: GradedMatrix, A, B, d: int) -> List[list]:
    """Matrix of coker(A)_d -> coker(B)_d induced by M: tgt(A) -> tgt(B), columns = quotient basis of A_d."""
    pa, pb = A.piece(d), B.piece(d)
    cols = []
    for q in range(pa.dim):
        r0, m0 = pa.lift(q)
        sparse = {}
        for r in range(M.tgt.rank):
            for mm, c in M.entries[r][r0].terms.items():
                prod = Monomial(mm.a + m0.a, mm.b + m0.b)
                if M.ring.is_zero_monomial(prod):
                    continue
                sparse[(r, prod)] = sparse.get((r, prod), 0) + c
        cols.append(pb.reduce(sparse))
    return cols


def verify_ses(sub, mid, quot, degrees: Optional[Iterable[int]] = None, field=QQ,
               iota: Optional[GradedMatrix] = None, pi: Optional[GradedMatrix] = None) -> SesReport:
    """Check 0 -> sub -> mid -> quot -> 0 is a short exact sequence of graded modules.

    The maps default to (1,0)^t and (0,1).  Degreewise: injective, surjective,
    composite zero, and dimensions add up (exactness in the middle).
    """
    from .catalogue import auto_degree_window

    A, B, C = (_module_resolution(o, field) for o in (sub, mid, quot))
    if iota is None or pi is None:
        i0, p0 = standard_ses_maps(A, B, C)
        iota = iota or i0
        pi = pi or p0
    if degrees is None:
        degrees = auto_degree_window(A.twists() + B.twists() + C.twists())
    degrees = list(degrees)
    rep = SesReport("0 -> %s -> %s -> %s -> 0" % (A, B, C), (degrees[0], degrees[-1]) if degrees else (0, -1))
    for name, M in (("inclusion", iota), ("projection", pi)):
        if not M.check_homogeneous():
            rep.failures.append({"check": "%s is not a degree-0 map" % name, "degree": None})
    if rep.failures:
        return rep
    # well-defined on cokernels: M o pres_src factors through pres_tgt
    for name, M, src, tgt in (("inclusion", iota, A, B), ("projection", pi, B, C)):
        if solve_left(tgt.d1, M @ src.d1) is None:
            rep.failures.append({"check": "%s does not descend to cokernels" % name, "degree": None})
    if rep.failures:
        return rep
    zero = A.ring.field.zero
    MA, MB, MC = A.module, B.module, C.module
    from .linalg import rank_of
    for d in degrees:
        da, db, dc = MA.dim(d), MB.dim(d), MC.dim(d)
        I = _induced_map(iota, MA, MB, d)
        P = _induced_map(pi, MB, MC, d)
        rI = rank_of(transpose(I, db, da, zero), da, zero) if da and db else 0
        rP = rank_of(transpose(P, dc, db, zero), db, zero) if db and dc else 0
        if rI != da:
            rep.failures.append({"check": "inclusion not injective", "degree": d})
        if rP != dc:
            rep.failures.append({"check": "projection not surjective", "degree": d})
        if db != da + dc:
            rep.failures.append({"check": "not exact in the middle", "degree": d})
        for col in I:
            img = _apply_dense(P, col, dc, zero)
            if any(img):
                rep.failures.append({"check": "composite not zero", "degree": d})
                break
    return rep


def _module_resolution(obj, field) -> CompleteResolutionSpec:
    """Resolution whose cokernel is the module itself, boundary labels included (no stripping)."""
    obj = _coerce(obj)
    if isinstance(obj, Label) and not obj.is_free:
        return resolve(obj, field)
    return resolve_object(obj, field)


def _apply_dense(cols: List[list], v: list, n_out: int, zero) -> list:
    out = [zero] * n_out
    for c, col in zip(v, cols):
        if c:
            out = [a + c * b for a, b in zip(out, col)]
    return out
