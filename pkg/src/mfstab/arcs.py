"""Arcs in the completed infinity-gon as a combinatorial model for Ext^1.

Objects over A-infinity (and D-infinity objects through F) are sent to arcs
with endpoints in Z or at the accumulation point.  The endpoint map and the
rule for two arcs meeting at infinity are parameters; :func:`fit_arc_model`
picks them by matching crossings against Ext^1 = Hom(Omega X, Y) computed by
the engine.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .catalogue import Label, ObjectLabel, ainf_catalogue, as_sum, dinf_catalogue, normalize_label
from .fields import QQ
from .stable_hom import ext1_dim

INF = "inf"
Endpoint = Union[int, str]


class ArcError(ValueError):
    pass


@dataclass(frozen=True)
class Arc:
    """Unordered chord {p, q}; q may be INF.  Stored with p < q (INF sorts last)."""

    p: Endpoint
    q: Endpoint

    def __post_init__(self):
        p, q = self.p, self.q
        if p == INF and q == INF:
            raise ArcError("at most one endpoint can be the accumulation point")
        if p == INF or (q != INF and q < p):
            p, q = q, p
        if p == q:
            raise ArcError("arc endpoints must differ")
        if q != INF and q - p < 2:
            raise ArcError("finite arcs need length at least 2, got {%s, %s}" % (p, q))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def is_infinite(self) -> bool:
        return self.q == INF

    @property
    def length(self) -> Optional[int]:
        return None if self.is_infinite else self.q - self.p

    def __str__(self):
        return "{%s, %s}" % (self.p, "∞" if self.is_infinite else self.q)


@dataclass(frozen=True)
class ArcModel:
    """Ky(s) -> {s + ky_shift, inf}; I(m, s) -> {s + lo_shift, s + m + hi_shift}."""

    ky_shift: int = 0
    lo_shift: int = -1
    hi_shift: int = 0
    infinite_arcs_cross: bool = True  # {p, inf} and {q, inf} cross iff p != q

    def to_json(self) -> dict:
        return {"ky_shift": self.ky_shift, "lo_shift": self.lo_shift, "hi_shift": self.hi_shift,
                "infinite_arcs_cross": self.infinite_arcs_cross}


FITTED_MODEL = ArcModel()


def crosses(a: Arc, b: Arc, model: ArcModel = FITTED_MODEL) -> bool:
    """Strict interleaving; the accumulation point sits after every integer."""
    if a.is_infinite and b.is_infinite:
        return model.infinite_arcs_cross and a.p != b.p
    if a.is_infinite:
        a, b = b, a
    if b.is_infinite:
        return a.p < b.p < a.q
    return a.p < b.p < a.q < b.q or b.p < a.p < b.q < a.q


def arc_of(l: ObjectLabel, model: ArcModel = FITTED_MODEL) -> Arc:
    from .equivalence import functor_label

    if isinstance(l, Label) and l.ring == "Dinf":
        terms = [t for t in normalize_label(l).terms if not t.is_free]
        if not terms:
            raise ArcError("%s is stably zero and has no arc" % l)
        if len(terms) > 1:
            raise ArcError("%s is decomposable" % l)
        l = functor_label(l)
    terms = as_sum(l).terms
    if len(terms) != 1:
        raise ArcError("arcs are assigned to single indecomposables, got %s" % l)
    (t,) = terms
    if t.is_free:
        raise ArcError("%s is stably zero and has no arc" % t)
    if t.family == "Ky":
        return Arc(t.indices[0] + model.ky_shift, INF)
    m, s = t.indices
    return Arc(s + model.lo_shift, s + m + model.hi_shift)


# --- oracle comparison ------------------------------------------------------


@dataclass
class ArcReport:
    model: ArcModel
    labels: int
    pairs: int
    mismatches: List[dict] = field(default_factory=list)
    directed_mismatches: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {"model": self.model.to_json(), "labels": self.labels, "pairs": self.pairs,
                "mismatches": self.mismatches, "directed_mismatch_count": len(self.directed_mismatches),
                "directed_mismatches": self.directed_mismatches, "passed": self.passed}


def _ext_table(labels: Sequence[Label], field) -> Dict[Tuple[Label, Label], int]:
    return {(X, Y): ext1_dim(X, Y, field) for X in labels for Y in labels}


def verify_arc_oracle(labels: Sequence[Label], model: ArcModel = FITTED_MODEL, field=QQ,
                      ext: Optional[Dict] = None) -> ArcReport:
    """Crossing versus Ext^1 in either direction; directed disagreements reported separately."""
    ext = ext if ext is not None else _ext_table(labels, field)
    arcs = {l: arc_of(l, model) for l in labels}
    rep = ArcReport(model, len(labels), len(labels) ** 2)
    for X in labels:
        for Y in labels:
            c = crosses(arcs[X], arcs[Y], model)
            e, e_rev = ext[X, Y], ext[Y, X]
            row = {"X": str(X), "Y": str(Y), "arcs": [str(arcs[X]), str(arcs[Y])], "crosses": c,
                   "ext1": e, "ext1_reverse": e_rev}
            if c != bool(e or e_rev):
                rep.mismatches.append(row)
            if c != bool(e):
                rep.directed_mismatches.append(row)
    return rep


def fit_arc_model(labels: Optional[Sequence[Label]] = None, field=QQ,
                  shifts: Iterable[int] = range(-2, 3)) -> Tuple[Optional[ArcModel], List[ArcModel]]:
    """Search endpoint shifts and the infinity rule; return (canonical fit, all zero-mismatch fits).

    Fits differing by a common translation of every endpoint are the same
    model; the canonical one has ky_shift = 0.
    """
    labels = list(labels) if labels is not None else ainf_catalogue(-3, 3, (1, 6))
    ext = _ext_table(labels, field)
    shifts = list(shifts)
    good = []
    for ky, lo, hi, rule in itertools.product(shifts, shifts, shifts, (False, True)):
        model = ArcModel(ky, lo, hi, rule)
        try:
            rep = verify_arc_oracle(labels, model, field, ext)
        except ArcError:
            continue
        if rep.passed:
            good.append(model)
    canon = [m for m in good if m.ky_shift == 0]
    return (canon[0] if len(canon) == 1 else None), good


def parity_pattern(lo: int = -4, hi: int = 4, model: ArcModel = FITTED_MODEL) -> List[str]:
    """Violations of: C ends even, D ends odd, E/F even length, G/H odd length (via F)."""
    problems = []
    for l in dinf_catalogue(lo, hi):
        a = arc_of(l, model)
        fam = l.family
        if fam == "C" and not (a.is_infinite and a.p % 2 == 0):
            problems.append("%s -> %s does not end in an even label" % (l, a))
        elif fam == "D" and not (a.is_infinite and a.p % 2 == 1):
            problems.append("%s -> %s does not end in an odd label" % (l, a))
        elif fam in ("A", "B", "E", "F") and (a.is_infinite or a.length % 2):
            problems.append("%s -> %s is not of even length" % (l, a))
        elif fam in ("G", "H") and (a.is_infinite or a.length % 2 == 0):
            problems.append("%s -> %s is not of odd length" % (l, a))
    return problems


# --- drawing ------------------------------------------------------------------


_EVEN, _ODD, _INF = "#1f5fa8", "#c0392b", "#555555"


def render_svg(arcs: Sequence[Arc], annotations: Optional[Sequence[str]] = None) -> str:
    """Vertices on a horizontal line, arcs as upper semicircles, infinity at the right end."""
    annotations = list(annotations or [])
    finite = [e for a in arcs for e in (a.p, a.q) if e != INF]
    lo, hi = (min(finite), max(finite)) if finite else (0, 0)
    lo, hi = lo - 1, hi + 1
    step = 40
    margin = 30
    x_inf = margin + (hi - lo + 2) * step
    width = x_inf + margin
    max_span = max([((a.q if a.q != INF else hi + 2) - a.p) for a in arcs] or [1])
    base_y = margin + max_span * step // 2 + 10
    height = base_y + 50 + 16 * len(annotations)

    def px(e):
        return x_inf if e == INF else margin + (e - lo) * step

    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="%d" height="%d" viewBox="0 0 %d %d">'
           % (width, height, width, height),
           '<rect x="0" y="0" width="%d" height="%d" fill="white"/>' % (width, height),
           '<line x1="%d" y1="%d" x2="%d" y2="%d" stroke="black" stroke-width="1"/>'
           % (margin, base_y, x_inf, base_y)]
    for v in range(lo, hi + 1):
        color = _EVEN if v % 2 == 0 else _ODD
        out.append('<circle cx="%d" cy="%d" r="3" fill="%s"/>' % (px(v), base_y, color))
        out.append('<text x="%d" y="%d" font-size="11" text-anchor="middle" fill="%s">%d</text>'
                   % (px(v), base_y + 16, color, v))
    out.append('<circle cx="%d" cy="%d" r="5" fill="none" stroke="%s" stroke-width="2"/>' % (x_inf, base_y, _INF))
    out.append('<text x="%d" y="%d" font-size="12" text-anchor="middle" fill="%s">∞</text>'
               % (x_inf, base_y + 18, _INF))
    for k, a in enumerate(arcs):
        x1, x2 = px(a.p), px(a.q)
        r = (x2 - x1) / 2
        color = _INF if a.is_infinite else (_EVEN if a.length % 2 == 0 else _ODD)
        out.append('<path d="M %d %d A %s %s 0 0 1 %d %d" fill="none" stroke="%s" stroke-width="1.5"/>'
                   % (x1, base_y, _num(r), _num(r), x2, base_y, color))
        label = annotations[k] if k < len(annotations) else None
        if label:
            out.append('<text x="%s" y="%s" font-size="10" text-anchor="middle">%s</text>'
                       % (_num((x1 + x2) / 2), _num(base_y - r - 4), _escape(label)))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _num(v: float) -> str:
    return ("%.1f" % v).rstrip("0").rstrip(".")


def _escape(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
