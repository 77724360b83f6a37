"""Command-line front end.

Exit codes: 0 success, 1 comparison mismatch or ``--require-finite`` unmet,
2 parse/validation error, 3 not reflectable, 4 oracle cutoff insufficient.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import braiding as br
from .cartan import is_finite_type
from .errors import (
    AmbiguousFactorization,
    CapExceeded,
    MixedSignRoot,
    NegativeDiscrepancy,
    NotReflectable,
    ParseError,
)
from .groupoid import (
    Caps,
    build_groupoid,
    check_brandt_axioms,
    export_dot,
    real_roots,
    weyl_brandt_elements,
)
from .oracle import hilbert_data, pbw_infer
from .reflection import reflect_braiding

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_NOT_REFLECTABLE = 3
EXIT_CUTOFF = 4


def _load(path: str) -> br.BraidingMatrix:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return br.parse(text)


def _vec(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _caps(args) -> Caps:
    return Caps(max_objects=args.max_objects, max_depth=args.max_depth)


# ---------------------------------------------------------------------------
# analysis


def analyze(q: br.BraidingMatrix, caps: Caps) -> dict[str, Any]:
    """Groupoid-side report as an ordered dict (never runs the oracle)."""
    report: dict[str, Any] = {"input": br.serialize(q)}
    C = br.is_cartan_type(q)
    report["cartan_matrix"] = [list(r) for r in C] if C is not None else None
    if C is not None:
        ft = is_finite_type(C)
        report["finite_type"] = {
            "finite": ft.finite,
            "label": ft.label(),
            "components": [
                {"indices": [i + 1 for i in comp], "type": lbl} for comp, lbl in ft.components
            ],
            "symmetrizer": list(ft.symmetrizer) if ft.symmetrizer is not None else None,
        }
    else:
        report["finite_type"] = None

    g = build_groupoid(q, caps, strict=False)
    report["_groupoid"] = g
    report["groupoid"] = {
        "states": len(g.states),
        "arrows": len(g.arrows),
        "obstructions": [
            {"state": o.state, "index": o.label + 1, "j": o.j + 1} for o in g.obstructions
        ],
        "complete": g.complete,
    }
    report["status"] = "finite"
    report["positive_roots"] = None
    report["weyl_groupoid"] = None
    if not g.complete:
        report["status"] = "cap exceeded, not shown finite"
        return report
    try:
        roots = real_roots(q, caps, groupoid=g)
    except CapExceeded:
        report["status"] = "cap exceeded, not shown finite"
        return report
    except MixedSignRoot as exc:
        report["status"] = f"mixed-sign root {_vec(exc.vector)}"
        return report
    report["positive_roots"] = [list(r) for r in roots.positive]
    if g.obstructions:
        report["status"] = "finite, with obstructions"
    try:
        elements = weyl_brandt_elements(q, caps, groupoid=g)
    except CapExceeded:
        report["weyl_groupoid"] = {"size": None, "brandt_axioms": "not checked (cap exceeded)"}
        return report
    res = check_brandt_axioms(elements)
    report["weyl_groupoid"] = {
        "size": len(elements),
        "brandt_axioms": "pass" if res.ok else "fail " + ",".join(map(str, res.failed_axioms)),
    }
    return report


def _format_analysis(rep: dict) -> str:
    lines = ["input:"]
    lines += ["  " + ln for ln in rep["input"].splitlines()]
    C = rep["cartan_matrix"]
    if C is None:
        lines.append("cartan matrix: not Cartan type")
    else:
        lines.append("cartan matrix: " + " ".join("[" + " ".join(map(str, r)) + "]" for r in C))
        ft = rep["finite_type"]
        lines.append(f"finite type: {'yes' if ft['finite'] else 'no'} ({ft['label']})")
        if ft["symmetrizer"] is not None:
            lines.append("symmetrizer: " + " ".join(map(str, ft["symmetrizer"])))
    gr = rep["groupoid"]
    lines.append(f"groupoid: {gr['states']} states, {gr['arrows']} arrows")
    for o in gr["obstructions"]:
        lines.append(f"  obstruction: state {o['state']}, index {o['index']} (m_{o['index']},{o['j']} undefined)")
    lines.append(f"status: {rep['status']}")
    if rep["positive_roots"] is not None:
        roots = rep["positive_roots"]
        lines.append(f"positive real roots ({len(roots)}): " + " ".join(_vec(r) for r in roots))
    if rep["weyl_groupoid"] is not None:
        wg = rep["weyl_groupoid"]
        size = "unknown" if wg["size"] is None else wg["size"]
        lines.append(f"|W(V)|: {size}")
        lines.append(f"brandt axioms: {wg['brandt_axioms']}")
    return "\n".join(lines) + "\n"


def _public(rep: dict) -> dict:
    return {k: v for k, v in rep.items() if not k.startswith("_")}


def cmd_analyze(args) -> int:
    q = _load(args.file)
    rep = analyze(q, _caps(args))
    if args.dot:
        g = rep["_groupoid"]
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(export_dot(g))
    if args.json:
        sys.stdout.write(json.dumps(_public(rep), indent=2) + "\n")
    else:
        sys.stdout.write(_format_analysis(rep))
    if args.require_finite and rep["status"] != "finite":
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_reflect(args) -> int:
    q = _load(args.file)
    if not 1 <= args.index <= q.rank:
        raise ParseError(f"index {args.index} out of range 1..{q.rank}")
    sys.stdout.write(br.serialize(reflect_braiding(q, args.index - 1)))
    return EXIT_OK


# ---------------------------------------------------------------------------
# oracle


def _oracle(q: br.BraidingMatrix, D: int, threads: int) -> dict[str, Any]:
    table = hilbert_data(q, D, threads=threads)
    pbw = pbw_infer(table, D)
    return {
        "max_degree": D,
        "hilbert": [{"degree": list(d), "dimension": k} for d, k in table.items()],
        "total_dimension_up_to_D": sum(table.values()),
        "pbw": [
            {
                "root": list(p.root),
                "multiplicity": p.multiplicity,
                "height": p.height,
                "height_at_least": p.height_bound,
            }
            for p in pbw
        ],
    }


def _format_oracle(rep: dict) -> str:
    lines = [f"hilbert table (total degree <= {rep['max_degree']}):"]
    for row in rep["hilbert"]:
        lines.append(f"  {_vec(row['degree'])}: {row['dimension']}")
    lines.append(f"total dimension up to degree {rep['max_degree']}: {rep['total_dimension_up_to_D']}")
    lines.append("pbw data:")
    for p in rep["pbw"]:
        h = str(p["height"]) if p["height"] is not None else f">={p['height_at_least']}"
        lines.append(f"  root {_vec(p['root'])} multiplicity {p['multiplicity']} height {h}")
    return "\n".join(lines) + "\n"


def cmd_oracle(args) -> int:
    q = _load(args.file)
    rep = _oracle(q, args.max_degree, args.threads)
    if args.json:
        sys.stdout.write(json.dumps(rep, indent=2) + "\n")
    else:
        sys.stdout.write(_format_oracle(rep))
    return EXIT_OK


def compare(q: br.BraidingMatrix, D: int, caps: Caps, threads: int = 1) -> dict[str, Any]:
    """Groupoid real roots vs oracle PBW roots, both up to total degree ``D``."""
    orc = _oracle(q, D, threads)
    oracle_roots = {tuple(p["root"]): p["multiplicity"] for p in orc["pbw"]}
    rep = analyze(q, caps)
    out: dict[str, Any] = {"max_degree": D, "groupoid_status": rep["status"]}
    if rep["positive_roots"] is None:
        groupoid_roots = None
    else:
        groupoid_roots = sorted(tuple(r) for r in rep["positive_roots"] if sum(r) <= D)
    key = lambda r: (sum(r), tuple(-x for x in r))  # noqa: E731
    out["groupoid_roots"] = None if groupoid_roots is None else [list(r) for r in sorted(groupoid_roots, key=key)]
    out["oracle_roots"] = [
        {"root": list(r), "multiplicity": m} for r, m in sorted(oracle_roots.items(), key=lambda kv: key(kv[0]))
    ]
    if groupoid_roots is None:
        out["only_in_groupoid"] = []
        out["only_in_oracle"] = [list(r) for r in sorted(oracle_roots, key=key)]
        out["non_unit_multiplicity"] = []
        out["match"] = False
        return out
    gs, os_ = set(groupoid_roots), set(oracle_roots)
    out["only_in_groupoid"] = [list(r) for r in sorted(gs - os_, key=key)]
    out["only_in_oracle"] = [list(r) for r in sorted(os_ - gs, key=key)]
    out["non_unit_multiplicity"] = [list(r) for r in sorted(os_, key=key) if oracle_roots[r] != 1]
    out["match"] = gs == os_ and not out["non_unit_multiplicity"]
    return out


def _format_compare(rep: dict) -> str:
    lines = [f"max degree: {rep['max_degree']}", f"groupoid: {rep['groupoid_status']}"]
    if rep["groupoid_roots"] is not None:
        lines.append("groupoid roots: " + " ".join(_vec(r) for r in rep["groupoid_roots"]))
    lines.append(
        "oracle roots: "
        + " ".join(_vec(r["root"]) + (f"x{r['multiplicity']}" if r["multiplicity"] != 1 else "") for r in rep["oracle_roots"])
    )
    if rep["match"]:
        lines.append("verdict: match")
    else:
        lines.append("verdict: MISMATCH")
        for name in ("only_in_groupoid", "only_in_oracle", "non_unit_multiplicity"):
            if rep[name]:
                lines.append(f"  {name.replace('_', ' ')}: " + " ".join(_vec(r) for r in rep[name]))
    return "\n".join(lines) + "\n"


def cmd_compare(args) -> int:
    q = _load(args.file)
    rep = compare(q, args.max_degree, _caps(args), args.threads)
    if args.json:
        sys.stdout.write(json.dumps(rep, indent=2) + "\n")
    else:
        sys.stdout.write(_format_compare(rep))
    return EXIT_OK if rep["match"] else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# entry point


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="nichols", description="Weyl groupoids and Nichols algebras of diagonal braidings."
    )
    sub = p.add_subparsers(dest="command", required=True)

    def caps_flags(sp):
        sp.add_argument("--max-objects", type=_positive, default=Caps().max_objects)
        sp.add_argument("--max-depth", type=_positive, default=Caps().max_depth)

    a = sub.add_parser("analyze", help="Cartan type, groupoid, real roots, W(V)")
    a.add_argument("file")
    caps_flags(a)
    a.add_argument("--json", action="store_true")
    a.add_argument("--dot", metavar="PATH", help="write the object graph in DOT format")
    a.add_argument("--require-finite", action="store_true")
    a.set_defaults(func=cmd_analyze)

    r = sub.add_parser("reflect", help="reflect the braiding at a 1-based index")
    r.add_argument("file")
    r.add_argument("index", type=int)
    r.set_defaults(func=cmd_reflect)

    o = sub.add_parser("oracle", help="Hilbert table and PBW data by brute force")
    o.add_argument("file")
    o.add_argument("--max-degree", type=_positive, required=True)
    o.add_argument("--threads", type=_positive, default=1)
    o.add_argument("--json", action="store_true")
    o.set_defaults(func=cmd_oracle)

    c = sub.add_parser("compare", help="groupoid roots vs oracle roots")
    c.add_argument("file")
    c.add_argument("--max-degree", type=_positive, required=True)
    caps_flags(c)
    c.add_argument("--threads", type=_positive, default=1)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_compare)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotReflectable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_REFLECTABLE
    except (NegativeDiscrepancy, AmbiguousFactorization) as exc:
        print(f"error: {exc}; try a larger --max-degree", file=sys.stderr)
        return EXIT_CUTOFF


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
