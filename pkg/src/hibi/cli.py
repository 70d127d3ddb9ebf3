"""Command line interface: ``hibi analyze``, ``hibi export-dot``, ``hibi export-spec``.

Exit codes: 0 success, 2 invalid input, 3 limit exceeded, 4 internal
invariant violation (including oracle disagreement).
"""
import argparse
import json
import sys

from hibi.errors import HibiError, InvalidInput
from hibi.lattice import builtin_family
from hibi.reports import (
    OracleDisagreement,
    analysis_report,
    dumps,
    export_dot,
    lattice_document,
    load_document,
    read_dot,
    render_text,
)


def _load(args):
    if (args.spec is None) == (args.family is None):
        raise InvalidInput("give exactly one of a spec file or --family")
    if args.family is not None:
        return builtin_family(args.family)
    try:
        with open(args.spec, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InvalidInput(f"cannot read {args.spec}: {exc.strerror}") from exc
    if args.spec.endswith(".dot"):
        return read_dot(text)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{args.spec}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    return load_document(doc)


def _json_list(raw, flag):
    try:
        value = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{flag} expects a JSON list") from exc
    if not isinstance(value, list):
        raise InvalidInput(f"{flag} expects a JSON list")
    return value


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args):
    l = _load(args)
    face = _json_list(args.face, "--face") if args.face else None
    gamma = _json_list(args.gamma, "--gamma") if args.gamma else None
    if gamma is not None and face is None:
        raise InvalidInput("--gamma requires --face")
    point = None
    if args.point:
        point = [str(v) for v in _json_list(args.point, "--point")]
        try:
            from fractions import Fraction
            point = [Fraction(v) for v in point]
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInput(f"--point coordinates must be rationals ({exc})") from exc
    kwargs = dict(faces=args.faces, max_faces=args.max_faces, singular=args.singular,
                  oracle=args.oracle, face=face, gamma=gamma, point=point, jobs=args.jobs)
    try:
        doc = analysis_report(l, **kwargs)
    except OracleDisagreement as exc:
        _emit(dumps(exc.report) if args.format == "json" else render_text(exc.report), args.out)
        raise
    _emit(dumps(doc) if args.format == "json" else render_text(doc), args.out)


def cmd_export_dot(args):
    l = _load(args)
    _emit(export_dot(l, highlight_singular=args.highlight_singular, cap=args.max_faces), args.out)


def cmd_export_spec(args):
    l = _load(args)
    _emit(dumps(lattice_document(l)), args.out)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hibi",
        description="Faces, cotangent bases and singular loci of Hibi toric varieties.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("spec", nargs="?", help="LatticeSpec JSON file (or a .dot from export-dot)")
        p.add_argument("--family", help="chain:n | boolean:n | grid:AxB | subsets:d,n")
        p.add_argument("--out", help="write output here instead of stdout")
        p.add_argument("--max-faces", type=int, default=None, metavar="N",
                       help="fail with exit code 3 beyond N faces")

    p = sub.add_parser("analyze", help="lattice summary, cone data, faces, singular locus")
    common(p)
    p.add_argument("--faces", action="store_true", help="enumerate all faces")
    p.add_argument("--singular", action="store_true", help="compute the singular locus")
    p.add_argument("--oracle", action="store_true", help="cross-check every face with the Jacobian")
    p.add_argument("--face", help="JSON list of elements: cotangent report for that face")
    p.add_argument("--gamma", help="JSON list: maximal chain of --face to use")
    p.add_argument("--point", help="JSON list of rational coordinates to classify")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for per-face analysis")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("export-dot", help="Hasse diagram in DOT")
    common(p)
    p.add_argument("--highlight-singular", action="store_true",
                   help="mark nodes of singular-locus components")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("export-spec", help="lattice as an elements+covers LatticeSpec")
    common(p)
    p.set_defaults(func=cmd_export_spec)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except HibiError as exc:
        print(f"hibi: error: {exc}", file=sys.stderr)
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
