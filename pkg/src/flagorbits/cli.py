"""Command-line front end.

Words on the command line are comma-separated simple indices; the empty
string or "e" is the identity.  Exit status is 0 on success, 1 on a domain
error (bad data, violated axiom) with a one-line diagnostic on stderr, and
2 on usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from .errors import FlagOrbitsError, InvalidTwist, ParseError
from .kgb import (
    builtin_fixtures,
    load_kgb,
    save_kgb,
    to_orbit_poset,
    ascent_consistency_check,
    minimal_w_uniqueness_check,
)
from .kgp import class_hasse, i_equivalence_classes
from .orbit_poset import (
    from_parabolic,
    from_weyl,
    hasse_dot,
    load_orbit_graph,
    property_z_check,
    validate as validate_poset,
)
from .parabolic import enumerate_cosets, p_length
from .root_datum import build_root_datum, parse_root_datum
from .weyl import (
    bruhat_leq,
    enumerate_elements,
    format_word,
    from_word,
    parse_word,
    reduced_word,
)


def _flip_twist(type_name: str) -> tuple[int, ...]:
    if "x" in type_name or len(type_name) < 2 or not type_name[1:].isdigit():
        raise InvalidTwist(f"no diagram flip for type {type_name!r}")
    letter = type_name[0].upper()
    n = int(type_name[1:])
    if letter == "A" and n >= 2:
        return tuple(range(n, 0, -1))
    if letter == "D" and n >= 3:
        return tuple(range(1, n - 1)) + (n, n - 1)
    if letter == "E" and n == 6:
        return (6, 2, 5, 4, 3, 1)
    raise InvalidTwist(f"no diagram flip for type {type_name!r}")


def _datum_from_args(args):
    isogeny = "adjoint" if args.adjoint else "simply_connected"
    twist = _flip_twist(args.type) if args.twist == "flip" else None
    return build_root_datum(args.type, isogeny=isogeny, twist=twist)


def _parse_levi(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    out = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece.lstrip("-").isdigit():
            raise ParseError(f"bad levi index {piece!r}")
        out.append(int(piece))
    return tuple(out)


def _add_datum_options(sub):
    sub.add_argument("--type", required=True, help="built-in type name, e.g. A2 or B3")
    sub.add_argument("--adjoint", action="store_true", help="adjoint instead of simply connected")
    sub.add_argument("--twist", choices=["flip"], help="enable the diagram involution")


def _cmd_enumerate(args) -> int:
    datum = _datum_from_args(args)
    for w in enumerate_elements(datum):
        print(format_word(reduced_word(w)))
    return 0


def _cmd_order(args) -> int:
    datum = _datum_from_args(args)
    u = from_word(datum, parse_word(datum, args.left))
    v = from_word(datum, parse_word(datum, args.right))
    below = bruhat_leq(u, v)
    above = bruhat_leq(v, u)
    if below and above:
        print("equal")
    elif below:
        print("leq")
    elif above:
        print("geq")
    else:
        print("incomparable")
    return 0


def _cmd_reduce(args) -> int:
    datum = _datum_from_args(args)
    w = from_word(datum, parse_word(datum, args.word))
    print(format_word(reduced_word(w)))
    return 0


def _cmd_cosets(args) -> int:
    datum = _datum_from_args(args)
    levi = _parse_levi(args.levi)
    for coset in enumerate_cosets(datum, levi):
        minw = format_word(reduced_word(coset.min_rep))
        maxw = format_word(reduced_word(coset.max_rep))
        print(f"min={minw} max={maxw} plen={p_length(coset)}")
    return 0


def _cmd_classes(args) -> int:
    g = load_kgb(args.graph)
    levi = _parse_levi(args.levi)
    for k, cls in enumerate(i_equivalence_classes(g, levi)):
        print(f"class {k}: top={cls.top} members={','.join(cls.members)}")
    return 0


def _cmd_kgp_order(args) -> int:
    g = load_kgb(args.graph)
    levi = _parse_levi(args.levi)
    for a, b in class_hasse(g, levi):
        print(f"{a} < {b}")
    return 0


def _collect_violations(path: str) -> tuple[str, list[str]]:
    """Returns (success line, violations) for any of the three formats."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    stripped = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]
    header = stripped[0] if stripped else ""
    if header == "rootdatum v1":
        datum = parse_root_datum(text)
        return f"ok: rank {datum.rank}, 0 violations", []
    if header == "orbitgraph v1":
        g = load_orbit_graph(path)
        violations = validate_poset(g)
        if not violations:
            violations = property_z_check(g)
        return f"ok: {len(g.nodes)} nodes, 0 violations", violations
    if header == "kgbgraph v1":
        g = load_kgb(path)  # structural axioms enforced here
        poset = to_orbit_poset(g)
        violations = (
            validate_poset(poset)
            + property_z_check(poset)
            + ascent_consistency_check(g)
            + minimal_w_uniqueness_check(g)
        )
        return f"ok: {len(g.nodes)} nodes, 0 violations", violations
    raise ParseError(f"unrecognized format header {header!r}")


def _cmd_validate(args) -> int:
    line, violations = _collect_violations(args.file)
    if violations:
        more = f" (+{len(violations) - 1} more)" if len(violations) > 1 else ""
        print(f"error: {violations[0]}{more}", file=sys.stderr)
        return 1
    print(line)
    return 0


def _cmd_hasse(args) -> int:
    if args.kgb:
        graph = to_orbit_poset(load_kgb(args.kgb))
    else:
        datum = _datum_from_args(args)
        if args.levi is not None:
            graph = from_parabolic(datum, _parse_levi(args.levi))
        else:
            graph = from_weyl(datum)
    sys.stdout.write(hasse_dot(graph))
    return 0


def _cmd_fixtures(args) -> int:
    fixtures = builtin_fixtures()
    if args.write is None:
        for name, g in fixtures.items():
            print(f"{name}: {len(g.nodes)} nodes")
        return 0
    os.makedirs(args.write, exist_ok=True)
    for name, g in fixtures.items():
        path = os.path.join(args.write, f"{name}.kgb")
        save_kgb(g, path)
        print(f"wrote {path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagorbits",
        description="Bruhat order on orbit posets of flag varieties",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list group elements as reduced words")
    _add_datum_options(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("order", help="compare two elements in Bruhat order")
    _add_datum_options(p)
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=_cmd_order)

    p = sub.add_parser("reduce", help="canonical reduced word of a product")
    _add_datum_options(p)
    p.add_argument("word")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("cosets", help="parabolic quotient representatives")
    _add_datum_options(p)
    p.add_argument("--levi", required=True, help="comma-separated simple indices")
    p.set_defaults(func=_cmd_cosets)

    p = sub.add_parser("classes", help="equivalence classes of a graph file")
    p.add_argument("graph", help="kgbgraph file")
    p.add_argument("--levi", required=True, help="comma-separated simple indices")
    p.set_defaults(func=_cmd_classes)

    p = sub.add_parser("kgp-order", help="Hasse edges of the class poset")
    p.add_argument("graph", help="kgbgraph file")
    p.add_argument("--levi", required=True, help="comma-separated simple indices")
    p.set_defaults(func=_cmd_kgp_order)

    p = sub.add_parser("validate", help="validate a data file, any format")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("hasse", help="emit the cover graph in DOT form")
    p.add_argument("--type", help="built-in type name")
    p.add_argument("--adjoint", action="store_true")
    p.add_argument("--twist", choices=["flip"])
    p.add_argument("--levi", help="quotient by this Levi set")
    p.add_argument("--kgb", help="kgbgraph file instead of --type")
    p.set_defaults(func=_cmd_hasse)

    p = sub.add_parser("fixtures", help="list or write the built-in graphs")
    p.add_argument("--write", metavar="DIR", help="write fixture files here")
    p.set_defaults(func=_cmd_fixtures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "hasse":
        if bool(args.kgb) == bool(args.type):
            parser.error("hasse needs exactly one of --type or --kgb")
        if args.kgb and (args.levi or args.adjoint or args.twist):
            parser.error("--kgb cannot be combined with datum options")
    try:
        return args.func(args)
    except FlagOrbitsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
