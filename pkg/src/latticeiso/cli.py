"""``latticeiso`` command-line interface.

Exit status: 0 on success, 1 for bad input, 2 when two independent
computations disagree (a bug, never a user error).
"""

import argparse
import json
import sys
from dataclasses import asdict

from . import kernels
from .boxes import (
    box_boundary_size,
    box_excess,
    box_size,
    box_to_set,
    corners,
    parse_box,
    standard_form,
)
from .classify import is_dead, is_efficient, minimality_certificate
from .errors import ConsistencyError, HypothesisFailed, LatticeError
from .graphmin import (
    build_graph,
    classify_component_of_box,
    component_of,
    default_workers,
    enumerate_minimal_classes,
)
from .oracle import DEFAULT_CAP, brute_minimal_classes, verify_characterization
from .render import graph_to_dot, graph_to_json, parse_set, render_ascii, render_svg, serialize_set
from .wangwang import ww


class InputError(LatticeError, ValueError):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _emit_set(A, args) -> str:
    if getattr(args, "svg", False):
        return render_svg(A, getattr(args, "show_enc", False))
    if getattr(args, "ascii", False):
        return render_ascii(A, getattr(args, "show_enc", False))
    return serialize_set(A) + "\n"


def cmd_ww(args) -> int:
    sys.stdout.write(_emit_set(ww(args.n), args))
    return 0


def cmd_check(args) -> int:
    cert = minimality_certificate(parse_set(_read(args.file)))
    if args.certificate:
        data = asdict(cert)
        data["enc"] = [cert.enc.a, cert.enc.b, cert.enc.c, cert.enc.d]
        print(json.dumps(data, separators=(",", ":")))
    elif cert.verdict:
        print("minimal")
    else:
        print(f"not minimal (E = {cert.enc_excess})")
    return 0


def cmd_box(args) -> int:
    B = parse_box(args.box)
    exc = box_excess(B)
    A = box_to_set(B) if exc >= 0 else None
    print(f"box: {B}")
    print(f"standard form: {standard_form(B)}")
    print(f"size: {box_size(B)}")
    print(f"boundary size: {box_boundary_size(B)}")
    print(f"excess: {exc}")
    print(f"corners: {len(corners(B))}")
    print(f"minimal: {str(exc >= 0).lower()}")
    print(f"efficient: {str(is_efficient(box_to_set(B))).lower()}")
    print(f"dead: {str(A is not None and is_dead(A)).lower()}")
    return 0


def cmd_enum(args) -> int:
    classes = enumerate_minimal_classes(args.n, workers=args.workers)
    if args.count_only:
        print(len(classes))
        return 0
    for c in classes:
        flags = ",".join(k for k, v in asdict(c.flags).items() if v) or "-"
        print(f"{c.id} {c.enc_standard} {flags} {serialize_set(c.canonical)}")
    return 0


def cmd_graph(args) -> int:
    G = build_graph(args.n_max, workers=args.workers)
    if args.dot:
        text = graph_to_dot(G)
    else:
        text = graph_to_json(G) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_component(args) -> int:
    B = parse_box(args.box)
    try:
        summary = classify_component_of_box(B, with_members=args.members)
    except HypothesisFailed as exc:
        if args.build is None:
            print(f"error: {exc}; pass --build N to search the graph up to grading N", file=sys.stderr)
            return 1
        try:
            summary = component_of(build_graph(args.build, workers=args.workers), box_to_set(B))
        except KeyError:
            print(f"error: {B} is not minimal or lies above grading {args.build}", file=sys.stderr)
            return 1
    print(summary.describe())
    return 0


def cmd_oracle(args) -> int:
    report = brute_minimal_classes(args.n, cap=args.cap)
    print(f"n = {report.n}: minimum boundary {report.min_boundary}, "
          f"{len(report.classes)} classes, {report.candidates_examined} candidates")
    if not report.certified:
        print(f"warning: {report.note}")
    if args.verify:
        result = verify_characterization(args.n, cap=args.cap, workers=args.workers)
        print(f"{len(result.discrepancies)} discrepancies")
        for d in result.discrepancies[:20]:
            print(f"  {serialize_set(d.canonical)} truth={d.truth} boundary={d.route_boundary} "
                  f"cones={d.route_cones} excess={d.route_excess}")
        if not result.ok:
            return 2
    return 0


def cmd_render(args) -> int:
    A = parse_set(_read(args.file))
    if args.svg:
        sys.stdout.write(render_svg(A, args.show_enc))
    else:
        sys.stdout.write(render_ascii(A, args.show_enc))
    return 0


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="latticeiso", description="Minimal vertex-boundary sets in the integer lattice.")
    parser.add_argument("--workers", type=_positive, default=None,
                        help="worker processes (default: $LATTICEISO_THREADS or 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ww", help="print a Wang-Wang set")
    p.add_argument("n", type=_positive)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="set JSON (default)")
    fmt.add_argument("--ascii", action="store_true")
    fmt.add_argument("--svg", action="store_true")
    p.add_argument("--show-enc", action="store_true", help="also draw the enclosing box")
    p.set_defaults(func=cmd_ww)

    p = sub.add_parser("check", help="decide minimality of a set file ('-' for stdin)")
    p.add_argument("file")
    p.add_argument("--certificate", action="store_true", help="print the full certificate as JSON")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("box", help="describe a box: B:a,b, Bhat:a,b or a,b,c,d")
    p.add_argument("box")
    p.set_defaults(func=cmd_box)

    p = sub.add_parser("enum", help="list the classes of minimal sets of size n")
    p.add_argument("n", type=_positive)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("graph", help="export the graph of minimal sets up to grading n_max")
    p.add_argument("n_max", type=_positive)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON export (default)")
    fmt.add_argument("--dot", action="store_true", help="Graphviz DOT")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("component", help="describe the graph component of a dead box")
    p.add_argument("box")
    p.add_argument("--members", action="store_true", help="also count the classes in the component")
    p.add_argument("--build", type=_positive, metavar="N",
                   help="if the direct criterion does not apply, build the graph up to grading N")
    p.set_defaults(func=cmd_component)

    p = sub.add_parser("oracle", help="brute-force minimum boundary and classes of size n")
    p.add_argument("n", type=_positive)
    p.add_argument("--verify", action="store_true", help="check every candidate against the classifier")
    p.add_argument("--cap", type=_positive, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("render", help="draw a set file as ASCII or SVG")
    p.add_argument("file")
    p.add_argument("--svg", action="store_true")
    p.add_argument("--show-enc", action="store_true", help="outline the rest of the enclosing box")
    p.set_defaults(func=cmd_render)

    parser.add_argument("--version", action="version", version=f"%(prog)s ({kernels.BACKEND} kernels)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; 2 is reserved for consistency failures
        return 0 if exc.code == 0 else 1
    if args.workers is None:
        args.workers = default_workers()
    try:
        return args.func(args)
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return 2
    except (LatticeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
