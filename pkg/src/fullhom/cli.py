"""Command-line interface.

One subcommand per library operation, file or inline inputs, human or
json-lines output.  Everything is deterministic: identical inputs produce
byte-identical output.  Exit codes: 0 success (predicate true / witness
found), 1 predicate false, 2 no witness, 64 parse or usage error, 65 cost
guard, 70 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import dualities, enumeration, formats, gaps, homs, relstruct
from .errors import CostGuardError, InvariantError, ParseError, UnsupportedArityError
from .graphs import is_point_determining, pd_quotient

EXIT_FALSE = 1
EXIT_NO_WITNESS = 2
EXIT_PARSE = 64
EXIT_COST = 65
EXIT_INVARIANT = 70


def _read_source(arg, inline):
    if inline:
        return arg
    return Path(arg).read_text(encoding="utf-8")


def _load_graph(args, arg):
    text = _read_source(arg, args.inline)
    if args.inline:
        return formats.parse_inline(text)
    if args.format == "graph6":
        for line in text.splitlines():
            if line.strip():
                return formats.parse_graph6(line)
        raise ParseError("no graph6 data found")
    if args.format == "json":
        raise ParseError("json input applies to structure commands only")
    return formats.parse_graph_text(text)


def _load_structure(args, arg):
    return relstruct.parse_structure_json(_read_source(arg, args.inline))


def _emit(args, human_lines, json_objs):
    if args.output == "jsonl":
        for obj in json_objs:
            print(json.dumps(obj, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def _map_str(mapping):
    return " ".join(f"{v}->{w}" for v, w in enumerate(mapping.image))


def cmd_core(args):
    g = _load_graph(args, args.graph)
    q, m = pd_quotient(g)
    _emit(
        args,
        [formats.graph_to_text(q).rstrip("\n"), f"map: {_map_str(m)}"],
        [{"graph": formats.graph_to_text(q), "map": list(m.image)}],
    )
    return 0


def cmd_is_core(args):
    g = _load_graph(args, args.graph)
    result = homs.is_f_core(g)
    _emit(args, ["true" if result else "false"], [{"is_core": result}])
    return 0 if result else EXIT_FALSE


def cmd_hom(args):
    g = _load_graph(args, args.graph)
    h = _load_graph(args, args.other)
    witness = homs.find_full_hom(g, h)
    if witness is None:
        _emit(args, ["none"], [{"witness": None, "kind": None}])
        return EXIT_NO_WITNESS
    _emit(
        args,
        [f"kind: {witness.kind}", f"map: {_map_str(witness.mapping)}"],
        [{"witness": list(witness.mapping.image), "kind": witness.kind}],
    )
    return 0


def cmd_equiv(args):
    g = _load_graph(args, args.graph)
    h = _load_graph(args, args.other)
    result = homs.fhom_equivalent(g, h)
    _emit(args, ["true" if result else "false"], [{"equivalent": result}])
    return 0 if result else EXIT_FALSE


def cmd_removable(args):
    g = _load_graph(args, args.graph)
    out = sorted(gaps.removable_vertices(g))
    _emit(args, [" ".join(map(str, out))], [{"removable": out}])
    return 0


def cmd_chain(args):
    g = _load_graph(args, args.graph)
    chain = gaps.core_chain(g)
    _emit(
        args,
        [formats.graph_to_inline(c) for c in chain],
        [{"chain": [formats.graph_to_text(c) for c in chain]}],
    )
    return 0


def cmd_gap(args):
    g = _load_graph(args, args.graph)
    h = _load_graph(args, args.other)
    cert = gaps.is_gap(g, h)
    if cert is None:
        _emit(args, ["not a gap"], [{"gap": False, "embedding": None, "removed_vertex": None}])
        return EXIT_NO_WITNESS
    _emit(
        args,
        [
            f"removed vertex: {cert.removed_vertex}",
            f"embedding: {_map_str(cert.embedding)}",
        ],
        [
            {
                "gap": True,
                "embedding": list(cert.embedding.image),
                "removed_vertex": cert.removed_vertex,
            }
        ],
    )
    return 0


def cmd_extend(args):
    g = _load_graph(args, args.graph)
    exts = gaps.gap_extensions(g)
    _emit(
        args,
        [formats.graph_to_inline(h) for h in exts],
        [{"graph": formats.graph_to_text(h)} for h in exts],
    )
    return 0


def cmd_duality(args):
    targets = [_load_graph(args, t) for t in args.targets]
    pair = dualities.duality_frontier(targets)
    if args.verify_up_to is not None:
        pair, bad = dualities.verify(pair, args.verify_up_to)
        if bad is not None:
            raise InvariantError(
                f"constructed frontier fails verification at "
                f"{formats.graph_to_inline(bad)!r}"
            )
    doc = {
        "targets": [formats.graph_to_text(t) for t in pair.targets],
        "frontier": [formats.graph_to_text(f) for f in pair.frontier],
        "verified_up_to": pair.verified_up_to,
    }
    if args.output == "jsonl":
        print(json.dumps(doc, sort_keys=True))
    else:
        print(json.dumps(doc, sort_keys=True, indent=2))
    return 0


def cmd_enumerate(args):
    if args.hasse and not args.pd:
        raise ParseError("--hasse requires --pd (covers are defined between cores)")
    fetch = enumeration.enumerate_pd_graphs if args.pd else enumeration.enumerate_graphs
    if args.hasse:
        catalogs = [fetch(k) for k in range(1, args.n + 1)]
        members = [g for cat in catalogs for g in cat.members]
        lines = ["digraph hasse {"]
        objs = []
        for g in members:
            for h in gaps.gap_extensions(g):
                if h.n > args.n:
                    continue
                src, dst = formats.graph_to_inline(g), formats.graph_to_inline(h)
                lines.append(f'  "{src}" -> "{dst}";')
                objs.append({"source": src, "target": dst})
        lines.append("}")
        _emit(args, lines, objs)
        return 0
    cat = fetch(args.n)
    if args.output == "jsonl":
        print(json.dumps({"n": cat.n, "count": cat.count}, sort_keys=True))
        for g in cat.members:
            print(json.dumps({"graph": formats.graph_to_text(g)}, sort_keys=True))
    else:
        print(enumeration.catalog_export(cat), end="")
    return 0


def cmd_rel_core(args):
    a = _load_structure(args, args.structure)
    q, m = relstruct.rel_pd_quotient(a)
    _emit(
        args,
        [relstruct.structure_to_json(q), f"map: {_map_str(m)}"],
        [{"structure": json.loads(relstruct.structure_to_json(q)), "map": list(m.image)}],
    )
    return 0


def cmd_rel_is_core(args):
    a = _load_structure(args, args.structure)
    result = relstruct.rel_is_point_determining(a)
    _emit(args, ["true" if result else "false"], [{"is_core": result}])
    return 0 if result else EXIT_FALSE


def cmd_rel_hom(args):
    a = _load_structure(args, args.structure)
    b = _load_structure(args, args.other)
    witness = relstruct.rel_find_full_hom(a, b)
    if witness is None:
        _emit(args, ["none"], [{"witness": None}])
        return EXIT_NO_WITNESS
    _emit(args, [f"map: {_map_str(witness)}"], [{"witness": list(witness.image)}])
    return 0


def cmd_rel_gap(args):
    a = _load_structure(args, args.structure)
    b = _load_structure(args, args.other)
    cert = relstruct.rel_is_gap(a, b)
    if cert is None:
        _emit(args, ["not a gap"], [{"gap": False, "embedding": None, "removed_vertex": None}])
        return EXIT_NO_WITNESS
    _emit(
        args,
        [
            f"removed vertex: {cert.removed_vertex}",
            f"embedding: {_map_str(cert.embedding)}",
        ],
        [
            {
                "gap": True,
                "embedding": list(cert.embedding.image),
                "removed_vertex": cert.removed_vertex,
            }
        ],
    )
    return 0


def cmd_rel_enumerate(args):
    try:
        arities = json.loads(args.language)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad language JSON: {exc.msg}") from None
    if not isinstance(arities, dict) or not arities:
        raise ParseError("language must be a non-empty JSON object of name -> arity")
    for name, arity in arities.items():
        if not isinstance(arity, int) or arity < 1:
            raise ParseError(f"arity of {name!r} must be a positive integer")
    lang = relstruct.Language.make(arities)
    fetch = (
        enumeration.enumerate_pd_rel_structures
        if args.pd
        else enumeration.enumerate_rel_structures
    )
    cat = fetch(lang, args.n)
    if args.output == "jsonl":
        print(json.dumps({"n": cat.n, "count": cat.count}, sort_keys=True))
        for a in cat.members:
            print(relstruct.structure_to_json(a))
    else:
        print(enumeration.catalog_export(cat), end="")
    return 0


def cmd_counterexample_ternary(args):
    a = relstruct.ternary_counterexample()
    pd = relstruct.rel_is_point_determining(a)
    subs = [
        relstruct.rel_is_point_determining(
            relstruct.rel_induced_substructure(a, pair)
        )
        for pair in ((0, 1), (0, 2), (1, 2))
    ]
    _emit(
        args,
        [
            relstruct.structure_to_json(a),
            f"point-determining: {str(pd).lower()}",
            "two-vertex substructures point-determining: "
            + " ".join(str(s).lower() for s in subs),
        ],
        [
            {
                "structure": json.loads(relstruct.structure_to_json(a)),
                "point_determining": pd,
                "two_vertex_pd": subs,
            }
        ],
    )
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fullhom",
        description="Full-homomorphism order toolkit: cores, gaps, dualities.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "graph6", "json"),
        default="text",
        help="graph input format (structures always use JSON)",
    )
    common.add_argument(
        "--output", choices=("human", "jsonl"), default="human", help="output mode"
    )
    common.add_argument(
        "-e",
        "--inline",
        action="store_true",
        help="treat graph arguments as inline literals 'n; u-v,...' "
        "(structure arguments as JSON text)",
    )
    common.add_argument(
        "--jobs",
        type=int,
        default=1,
        metavar="K",
        help="parallelism hint; results never depend on it",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, graph_args=(), extra=None):
        p = sub.add_parser(name, parents=[common], help=help_text)
        for ga in graph_args:
            p.add_argument(ga)
        if extra:
            extra(p)
        p.set_defaults(func=func)
        return p

    add("core", cmd_core, "point-determining quotient and merge map", ["graph"])
    add("is-core", cmd_is_core, "is the graph point-determining (exit 0/1)", ["graph"])
    add("hom", cmd_hom, "full-homomorphism witness or 'none' (exit 0/2)", ["graph", "other"])
    add("equiv", cmd_equiv, "full-homomorphism equivalence (exit 0/1)", ["graph", "other"])
    add("removable", cmd_removable, "vertices whose removal keeps the core", ["graph"])
    add("chain", cmd_chain, "chain of cores from one vertex up to the input", ["graph"])
    add("gap", cmd_gap, "gap certificate or 'not a gap' (exit 0/2)", ["graph", "other"])
    add("extend", cmd_extend, "all one-vertex core extensions", ["graph"])

    p = sub.add_parser("duality", parents=[common], help="duality pair for the targets")
    p.add_argument("targets", nargs="+")
    p.add_argument("--verify-up-to", type=int, default=None, metavar="N")
    p.set_defaults(func=cmd_duality)

    p = sub.add_parser("enumerate", parents=[common], help="isomorphism-class catalog")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--pd", action="store_true", help="point-determining classes only")
    p.add_argument(
        "--hasse",
        action="store_true",
        help="emit DOT cover edges over all sizes up to n (requires --pd)",
    )
    p.set_defaults(func=cmd_enumerate)

    add("rel-core", cmd_rel_core, "structure quotient and merge map", ["structure"])
    add("rel-is-core", cmd_rel_is_core, "is the structure point-determining", ["structure"])
    add("rel-hom", cmd_rel_hom, "structure full-homomorphism witness", ["structure", "other"])
    add("rel-gap", cmd_rel_gap, "structure gap certificate (arity <= 2 only)", ["structure", "other"])

    p = sub.add_parser("rel-enumerate", parents=[common], help="structure catalog")
    p.add_argument("--language", required=True, help='JSON object, e.g. \'{"E": 2}\'')
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--pd", action="store_true")
    p.set_defaults(func=cmd_rel_enumerate)

    p = sub.add_parser(
        "counterexample-ternary",
        parents=[common],
        help="the ternary structure breaking the one-vertex gap law",
    )
    p.set_defaults(func=cmd_counterexample_ternary)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CostGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COST
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (UnsupportedArityError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()
