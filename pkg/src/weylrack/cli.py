"""Command line interface.

Exit codes: 0 when every check passes, 1 when any check fails, 2 on usage
errors (bad arguments, unparseable elements, elements outside the group).

Matrix export format (``braiding-check --export``): one nonzero entry per
line, ``i j value_exponent order``, meaning entry (i, j) of the d^2 x d^2
braiding equals exp(2 pi i value_exponent / order).  Basis pair (x, y) has
index x * d + y, with x, y positions in the class listing order.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .braiding import (
    Cocycle,
    centralizer_characters,
    check_braid_equation,
    rack_braiding,
    yd_braiding,
)
from .classes import class_listing, class_of
from .core import GroupKind, WeylError, format_element, parse_element
from .rack import check_type_d, conj_rack, search_type_d, sq, sq_closed_form
from .report import Report
from .verify import describe_class, verify_paper


class UsageError(Exception):
    pass


def _kind(args, x=None) -> GroupKind:
    n = x.n if x is not None else args.n
    if n is None:
        raise UsageError("--n is required")
    kind = GroupKind(args.kind, n)
    if x is not None:
        kind.check(x)
    return kind


def _parse(text):
    try:
        return parse_element(text)
    except WeylError as exc:
        raise UsageError(str(exc)) from None


def _emit(payload: dict, path) -> None:
    text = json.dumps(payload, indent=2)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    print(text)


def _parse_range(text: str) -> tuple[int, ...]:
    out: set[int] = set()
    for part in text.split(","):
        if "-" in part:
            lo, hi = part.split("-")
            out.update(range(int(lo), int(hi) + 1))
        else:
            out.add(int(part))
    return tuple(sorted(out))


def cmd_class_info(args) -> int:
    x = _parse(args.element)
    kind = _kind(args, x)
    info = describe_class(x, kind)
    report = Report("class-info", groups=[{"kind": kind.kind, "n": kind.n}])
    report.add("class-info", "plumbing", True, info)
    for key, value in info.items():
        print(f"{key}: {value}")
    if args.json:
        report.dump(args.json)
    return 0


def cmd_sq(args) -> int:
    x, y = _parse(args.x), _parse(args.y)
    if x.n != y.n:
        raise UsageError("elements have different rank")
    value = sq(x, y)
    print(f"sq = {format_element(value)}")
    print(f"fixed-point = {'yes' if value == y else 'no'}")
    if args.closed_form:
        closed = sq_closed_form(x, y)
        print(f"closed-form = {format_element(closed)}")
        if closed != value:
            print("MISMATCH between closed form and triple conjugation", file=sys.stderr)
            return 1
    return 0


def cmd_search(args) -> int:
    x = _parse(args.element)
    kind = _kind(args, x)
    c = class_of(x, kind)
    try:
        w = search_type_d(c, args.bound)
    except WeylError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if w is None:
        print("none found")
        return 0
    checks = None
    status = 0
    if args.recheck:
        verdict = check_type_d(w, conj_rack(c))
        checks = verdict.clauses
        status = 0 if verdict.ok else 1
    _emit(w.to_json(checks), args.json)
    return status


def cmd_classes(args) -> int:
    kind = _kind(args)
    _emit(class_listing(kind, args.cap), args.json)
    return 0


def cmd_braiding_check(args) -> int:
    x = _parse(args.element)
    kind = _kind(args, x)
    c = class_of(x, kind)
    report = Report("braiding-check", groups=[{"kind": kind.kind, "n": kind.n}])
    rack = conj_rack(c)
    matrices = {}
    for q in (1, -1):
        b = rack_braiding(rack, Cocycle.constant(c.size, 0 if q == 1 else 1))
        matrices[f"rack/q={q}"] = b
        report.add(f"braid/rack/q={q}", "plumbing", check_braid_equation(b), {"dimension": c.size})
    if args.yd:
        for i, chi in enumerate(centralizer_characters(c)):
            b = yd_braiding(c, chi)
            matrices[f"yd/chi{i}"] = b
            details = {"dimension": c.size, "trivial_character": chi.is_trivial}
            if chi.is_trivial:
                details["equals_rack_q1"] = b == matrices["rack/q=1"]
            ok = check_braid_equation(b)
            report.add(f"braid/yd/chi{i}", "braiding of M(O, rho), one-dimensional rho", ok, details)
    for line in report.format_lines():
        print(line)
    if args.export:
        chosen = matrices[args.matrix]
        with open(args.export, "w") as fh:
            fh.write("\n".join(chosen.coordinate_lines()) + "\n")
    if args.json:
        report.dump(args.json)
    return 0 if report.ok else 1


def cmd_verify_paper(args) -> int:
    ns = _parse_range(args.n) if args.n else (4, 5)
    kinds = tuple(k.strip() for k in args.kinds.split(",")) if args.kinds else ("B", "D")
    for k in kinds:
        if k not in ("B", "D"):
            raise UsageError(f"unknown kind {k!r}")
    report = verify_paper(ns, kinds, parallel=args.parallel, random_pairs=args.random_pairs)
    for line in report.format_lines():
        print(line)
    if args.json:
        report.dump(args.json)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylrack",
        description="Signed permutation groups, conjugation racks and type D witnesses.",
        epilog=__doc__.split("\n\n", 1)[1],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"weylrack {__version__}")
    parser.add_argument("--cap", type=int, default=None, help="largest rank to enumerate (env WEYLRACK_CAP)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, element=True):
        if element:
            p.add_argument("element", help="element such as '10001;(1 2 3)(4 5)'")
        p.add_argument("--kind", choices=("B", "D"), default="B")
        p.add_argument("--json", metavar="PATH")
        return p

    p = common(sub.add_parser("class-info", help="signed cycle type, class and centralizer sizes"))
    p.set_defaults(func=cmd_class_info)

    p = sub.add_parser("sq", help="sq(x, y) = x |> (y |> (x |> y))")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--closed-form", action="store_true", help="also evaluate the component formula")
    p.set_defaults(func=cmd_sq)

    p = common(sub.add_parser("search", help="search the class of an element for a type D witness"))
    p.add_argument("--bound", type=int, default=20000)
    p.add_argument("--recheck", action="store_true", help="re-verify the witness found")
    p.set_defaults(func=cmd_search)

    p = common(sub.add_parser("classes", help="list conjugacy classes"), element=False)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_classes)

    p = common(sub.add_parser("braiding-check", help="braid equation for braidings on a class"))
    p.add_argument("--yd", action="store_true", help="also check Yetter-Drinfeld braidings for Z_2 characters")
    p.add_argument("--export", metavar="PATH", help="write one braiding in coordinate-list format")
    p.add_argument("--matrix", default="rack/q=-1", help="which braiding to export (default rack/q=-1)")
    p.set_defaults(func=cmd_braiding_check)

    p = sub.add_parser("verify-paper", help="replay every construction and the type D sweep")
    p.add_argument("--n", help="ranks, e.g. '5' or '4-5' (default 4-5)")
    p.add_argument("--kinds", help="comma separated kinds (default B,D)")
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--parallel", type=int, default=1)
    p.add_argument("--random-pairs", type=int, default=100_000)
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    saved = os.environ.get("WEYLRACK_CAP")
    if args.cap is not None:
        os.environ["WEYLRACK_CAP"] = str(args.cap)
    try:
        return args.func(args)
    except (UsageError, WeylError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        # in-process callers should not inherit --cap
        if saved is None:
            os.environ.pop("WEYLRACK_CAP", None)
        else:
            os.environ["WEYLRACK_CAP"] = saved


if __name__ == "__main__":
    sys.exit(main())
