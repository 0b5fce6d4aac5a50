"""Command-line front door.

Exit status 0 on success, 1 when the input is rejected, 2 when an internal
invariant fails.  Diagnostics go to stderr as one JSON object per line.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .atlas import classify_hausdorff
from .errors import InternalError, NonHausError, NotApplicable, ParseError
from .export import quotient_to_dot, quotient_to_json
from .foliation import compile_obstacles, parse_obstacles
from .groupoid import DEFAULT_DEPTH_LIMIT, saturate
from .oracle import DEFAULT_DEPTH, insep_semidecide, oracle_disagreements
from .presentation import (
    PointRef,
    Presentation,
    dump_presentation,
    parse_presentation,
    symmetrize,
)
from .quotient import analyse, build_quotient


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def load_presentation(path: str) -> Presentation:
    """Read a ``.mfd`` presentation, or compile a ``.obs`` obstacle file."""
    text = _read(path)
    if path.endswith(".obs"):
        return compile_obstacles(parse_obstacles(text))
    return parse_presentation(text)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_validate(args) -> None:
    p = symmetrize(load_presentation(args.input))
    g = saturate(p, args.depth_limit)
    counts = [{"from": s, "to": t, "maps": n} for (s, t), n in g.counts().items()]
    _emit(_dumps({"charts": len(p.charts), "generators": len(p.gluings),
                  "rounds": g.rounds, "map_counts": counts}), args.out)


def cmd_branch_points(args) -> None:
    st = analyse(load_presentation(args.input), args.depth_limit)
    doc = {
        "pairs": [[pr.a.to_dict(), pr.b.to_dict()] for pr in st.pairs],
        "classes": [[m.to_dict() for m in cls] for cls in st.partition.classes],
    }
    _emit(_dumps(doc), args.out)


def cmd_quotient(args) -> None:
    qg = build_quotient(load_presentation(args.input), args.depth_limit)
    if args.oracle_check:
        bad = oracle_disagreements(qg)
        if bad:
            raise InternalError(
                f"oracle disagrees on {len(bad)} candidate pairs",
                pairs=[(str(a), str(b), str(v)) for a, b, v in bad],
            )
    if args.format == "dot":
        _emit(quotient_to_dot(qg), args.out)
    else:
        _emit(quotient_to_json(qg), args.out)


def cmd_classify(args) -> None:
    qg = build_quotient(load_presentation(args.input), args.depth_limit)
    out = []
    for i, comp in enumerate(qg.components):
        try:
            kind = classify_hausdorff(qg, i).value
        except NotApplicable:
            kind = "not-hausdorff"
        out.append({"charts": list(comp.charts), "type": kind})
    _emit(_dumps({"components": out}), args.out)


def cmd_foliation_compile(args) -> None:
    q = parse_obstacles(_read(args.input))
    _emit(dump_presentation(compile_obstacles(q)), args.out)


def cmd_oracle(args) -> None:
    p = symmetrize(load_presentation(args.input))
    g = saturate(p, args.depth_limit)
    a, b = (PointRef.parse(s) for s in args.pair)
    try:
        verdict = insep_semidecide(p, g, a, b, args.depth)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    _emit(_dumps({"a": str(a), "b": str(b), "separated": verdict.separated,
                  "k": verdict.k, "verdict": str(verdict)}), args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nonhaus", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--in", dest="input", required=True, help="input file ('-' for stdin)")
        sp.add_argument("--out", default=None, help="output file (default stdout)")
        sp.add_argument("--depth-limit", type=int, default=DEFAULT_DEPTH_LIMIT)
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "saturate the gluings and report transition counts")
    add("branch-points", cmd_branch_points, "inseparable pairs and chain classes")
    sp = add("quotient", cmd_quotient, "build the quotient graph")
    sp.add_argument("--format", choices=("json", "dot"), default="json")
    sp.add_argument("--oracle-check", action="store_true",
                    help="cross-check candidate pairs with the neighbourhood oracle")
    add("classify", cmd_classify, "classify Hausdorff components")
    add("foliation-compile", cmd_foliation_compile, "compile an obstacle file to a presentation")
    sp = add("oracle", cmd_oracle, "semi-decide inseparability of two points")
    sp.add_argument("--pair", nargs=2, metavar=("A", "B"), required=True,
                    help="points as CHART:PARAM")
    sp.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        args.func(args)
    except NonHausError as exc:
        sys.stderr.write(json.dumps(exc.as_dict()) + "\n")
        return exc.exit_status
    except Exception as exc:  # an escaped bug is an internal failure, not a rejection
        sys.stderr.write(json.dumps({"error": InternalError.code,
                                     "message": f"{type(exc).__name__}: {exc}"}) + "\n")
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
