"""Command-line front end: ``mfstab hom|table|verify|arcs``."""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import List, Optional, Sequence, Tuple

from . import __version__
from .arcs import FITTED_MODEL, ArcError, arc_of, fit_arc_model, parity_pattern, render_svg, verify_arc_oracle
from .catalogue import (LabelError, SES_FAMILIES, Label, ainf_catalogue, dinf_catalogue, parse_label,
                        validate_catalogue)
from .equivalence import (certificate_json, verify_grading_nonpreservation, verify_hom_bijection,
                          verify_injective, verify_twist_compat)
from .fields import CharacteristicError, parse_field
from .stable_hom import RingMismatch, StableHomSpace, endo_algebra, hom_table, stable_hom, verify_ses

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_SEMANTIC = 0, 1, 2, 3

_RANGE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")
RINGS = {"dinf": "Dinf", "ainf": "Ainf"}


class UsageError(ValueError):
    pass


def parse_range(text: str) -> Tuple[int, int]:
    """``A..B`` or ``N`` (meaning -N..N)."""
    mt = _RANGE.match(text)
    if mt:
        lo, hi = int(mt.group(1)), int(mt.group(2))
    else:
        try:
            n = int(text.strip())
        except ValueError:
            raise UsageError("bad range %r (expected A..B or N)" % text)
        lo, hi = -abs(n), abs(n)
    if lo > hi:
        raise UsageError("empty range %r" % text)
    return lo, hi


def split_labels(text: str) -> List[str]:
    """Split a comma-separated label list, ignoring commas inside parentheses."""
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return [s.strip() for s in out if s.strip()]


def _protect_ranges(argv: Sequence[str]) -> List[str]:
    # argparse would read "-6..6" as an option; a leading space keeps it a value
    return [" " + a if _RANGE.match(a) and a.startswith("-") else a for a in argv]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mfstab", description="Stable categories of graded matrix factorizations "
                                "over k[x,y]/(x^2 y) and k[x,y]/(x^2).")
    p.add_argument("--version", action="version", version="mfstab " + __version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="q", help="q or fp:P with P an odd prime")
    common.add_argument("--out", help="write the result here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("hom", parents=[common], help="stable Hom between two labels")
    h.add_argument("--ring", choices=sorted(RINGS), default=None)
    h.add_argument("--ext1", action="store_true", help="compute Ext^1 = Hom(Omega X, Y) instead")
    h.add_argument("source")
    h.add_argument("target")

    t = sub.add_parser("table", parents=[common], help="Hom / Ext^1 dimension table for two families")
    t.add_argument("src_family")
    t.add_argument("tgt_family")
    t.add_argument("range", nargs="?", default=None, help="index window A..B")
    t.add_argument("fmt", nargs="?", default=None, choices=["json", "csv", "md"])
    t.add_argument("--index", default=None)
    t.add_argument("--format", dest="format_opt", choices=["json", "csv", "md"], default=None)
    t.add_argument("--m-range", default="1..8", help="m window for the I family")

    v = sub.add_parser("verify", parents=[common], help="run a verification and write a JSON certificate")
    v.add_argument("what", choices=["catalogue", "ses", "endo", "equivalence", "arcs"])
    v.add_argument("--ring", choices=sorted(RINGS), default=None)
    v.add_argument("--index", default="4")
    v.add_argument("--twist", default="8")
    v.add_argument("--window", default="auto", help="degree window N (meaning -N..N) or auto")
    v.add_argument("--object", default="C(0)")
    v.add_argument("--range", dest="nrange", default="-5..5")
    v.add_argument("--m-range", default="1..8")
    v.add_argument("--literal-table", action="store_true", help="use the unfitted functor table")

    a = sub.add_parser("arcs", parents=[common], help="draw the arcs of a list of labels")
    a.add_argument("objects", help='comma-separated labels, e.g. "C(0),D(0),E(0,2)"')
    a.add_argument("--svg", default=None, help="SVG output path")
    a.add_argument("--refit", action="store_true", help="refit the arc model before drawing")
    return p


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _label(text: str, ring: Optional[str]):
    return parse_label(text, RINGS[ring] if ring else None)


def cmd_hom(args, field) -> int:
    X, Y = _label(args.source, args.ring), _label(args.target, args.ring)
    if X.ring != Y.ring:
        raise RingMismatch("%s lives over %s but %s over %s" % (args.source, X.ring, args.target, Y.ring))
    if args.ext1:
        from .catalogue import resolve_object
        space = StableHomSpace(resolve_object(X, field).shift(1), resolve_object(Y, field))
        payload = space.to_json()
        payload["source"] = "Omega " + str(X)
    else:
        payload = stable_hom(X, Y, field).to_json()
    payload["field"] = field.name
    _emit(_dumps(payload), args.out)
    return EXIT_OK


def cmd_table(args, field) -> int:
    window = parse_range(args.index or args.range or "-4..4")
    fmt = args.format_opt or args.fmt or "csv"
    fams = {"A", "B", "C", "D", "E", "F", "G", "H", "Ky", "I"}
    for f in (args.src_family, args.tgt_family):
        if f not in fams:
            raise UsageError("unknown family %r" % f)
    tab = hom_table(args.src_family, args.tgt_family, window, field, m_range=parse_range(args.m_range))
    if fmt == "csv":
        text = tab.to_csv()
    elif fmt == "md":
        text = tab.to_markdown()
    else:
        data = tab.to_json()
        data["field"] = field.name
        text = _dumps(data)
    _emit(text, args.out)
    return EXIT_OK


def _degrees(window: str, twists: Sequence[int]):
    from .catalogue import auto_degree_window
    if window == "auto":
        return auto_degree_window(twists)
    lo, hi = parse_range(window)
    return range(lo, hi + 1)


def cmd_verify(args, field) -> int:
    lo, hi = parse_range(args.index)
    cert = {"mode": args.what, "engine_version": __version__, "field": field.name}
    ok = True
    if args.what == "catalogue":
        rings = [RINGS[args.ring]] if args.ring else ["Dinf", "Ainf"]
        cert["reports"] = []
        for r in rings:
            rep = validate_catalogue(lo, hi, r, field, parse_range(args.m_range))
            cert["reports"].append(rep.to_json())
            ok &= rep.passed
    elif args.what == "ses":
        from .catalogue import resolve
        results = []
        for sub, mid, quot, gap in SES_FAMILIES:
            fails, count = [], 0
            for i in range(lo, hi + 1):
                for j in range(i + gap, hi + 1):
                    labs = [Label("Dinf", sub, (i,)), Label("Dinf", mid, (i, j)), Label("Dinf", quot, (j,))]
                    tw = [t for l in labs for t in resolve(l, field).twists()]
                    rep = verify_ses(*labs, degrees=_degrees(args.window, tw), field=field)
                    count += 1
                    fails += [dict(f, sequence=rep.sequence) for f in rep.failures]
            results.append({"family": "0 -> %s_i -> %s_ij -> %s_j -> 0" % (sub, mid, quot),
                            "sequences": count, "failures": fails})
            ok &= not fails
        cert["windows"] = {"index": [lo, hi], "degree": args.window}
        cert["families"] = results
    elif args.what == "endo":
        n_lo, n_hi = parse_range(args.nrange)
        X = parse_label(args.object)
        alg = endo_algebra(X, range(n_lo, n_hi + 1), field)
        cert.update({
            "object": str(X),
            "grading": "piece n is Hom(X, Sigma^n X); t has degree -1, so t^k sits at n = -k",
            "degrees": alg.degrees, "dims": alg.dims,
            "dims_by_t_power": [{"t_power": -n, "dim": d} for n, d in sorted(zip(alg.degrees, alg.dims), reverse=True)],
            "products": [{"a": a, "b": b, "coefficient": field.to_str(c)} for (a, b), c in sorted(alg.products.items())],
        })
        ok = alg.is_polynomial_ring(-1)
        cert["polynomial_ring_generator_degree_minus_1"] = ok
    elif args.what == "equivalence":
        tw = parse_range(args.twist)
        eq = verify_hom_bijection((lo, hi), tw, field, "literal" if args.literal_table else "fitted")
        table = None
        if args.literal_table:
            from .equivalence import LITERAL_TABLE
            table = LITERAL_TABLE
        extra = [verify_twist_compat(lo, hi, table), verify_grading_nonpreservation(table=table),
                 verify_injective(lo, hi, table)]
        cert.update(eq)
        cert["mode"] = "equivalence"
        cert["label_checks"] = [r.to_json() for r in extra]
        ok = eq["passed"] and all(r.passed for r in extra)
    elif args.what == "arcs":
        labels = ainf_catalogue(lo, hi, parse_range(args.m_range))
        rep = verify_arc_oracle(labels, FITTED_MODEL, field)
        drep = verify_arc_oracle(dinf_catalogue(lo, hi), FITTED_MODEL, field)
        parity = parity_pattern(lo, hi)
        cert.update({"windows": {"index": [lo, hi], "m": list(parse_range(args.m_range))},
                     "ainf": rep.to_json(), "dinf_via_F": drep.to_json(), "parity_violations": parity,
                     "crossing_rule": "crossing iff Ext^1 nonzero in at least one direction"})
        ok = rep.passed and drep.passed and not parity
    cert["passed"] = bool(ok)
    _emit(certificate_json(cert), args.out)
    if args.out:
        sys.stderr.write("%s: %s (certificate written to %s)\n" % (args.what, "pass" if ok else "FAIL", args.out))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_arcs(args, field) -> int:
    model = FITTED_MODEL
    if args.refit:
        model, _ = fit_arc_model(field=field)
        if model is None:
            raise ArcError("no unique arc model fits the Ext^1 data")
    names = split_labels(args.objects)
    labels = [parse_label(n) for n in names]
    arcs = [arc_of(l, model) for l in labels]
    svg = render_svg(arcs, [str(l) for l in labels])
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(svg)
    payload = {"model": model.to_json(), "arcs": [{"label": str(l), "arc": str(a)} for l, a in zip(labels, arcs)]}
    if args.svg:
        payload["svg"] = args.svg
    _emit(_dumps(payload), args.out)
    return EXIT_OK


COMMANDS = {"hom": cmd_hom, "table": cmd_table, "verify": cmd_verify, "arcs": cmd_arcs}


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_ranges(argv))
    except SystemExit as exc:  # argparse exits 2 on usage errors already
        return int(exc.code or 0)
    try:
        field = parse_field(args.field)
    except CharacteristicError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_SEMANTIC
    except ValueError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_PARSE
    try:
        return COMMANDS[args.command](args, field)
    except (LabelError, UsageError) as exc:
        sys.stderr.write("parse error: %s\n" % exc)
        return EXIT_PARSE
    except (RingMismatch, ArcError, CharacteristicError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_SEMANTIC
    except ValueError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
