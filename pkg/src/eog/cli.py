"""Command-line front end: ``eog <subcommand> ...``.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
Patterns use a small mini-language::

    path:1342      path whose i-th edge has the i-th rank
    cycle:1243     cycle, same convention
    file:G.eog     read from a .eog file
    d4, d5, ...    D_n
    k9             the 9-vertex certificate labeling
    knncan:3       canonical K_{3,3}
    clique:6:max   canonical labeling of K_6 (min, max, inv_min, inv_max)
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from . import canonical, constructions, dsword, matrix, orderchrom, search, verify
from .containment import contains
from .core import (BudgetExceeded, EdgeOrderedGraph, InvalidGraphError, cycle_pattern, is_star_forest,
                   path_pattern)
from .formats import EogFormatError, read_eog, serialize_eog, write_eog


class UsageError(Exception):
    pass


def parse_pattern(text: str) -> EdgeOrderedGraph:
    kind, _, arg = text.partition(":")
    try:
        if kind == "path":
            return path_pattern([int(c) for c in arg])
        if kind == "cycle":
            return cycle_pattern([int(c) for c in arg])
        if kind == "file":
            return read_eog(arg)
        if kind == "knncan":
            return canonical.knn_can(int(arg)).graph
        if kind == "clique":
            n, _, which = arg.partition(":")
            return canonical.canonical_clique(int(n), which or "min")
        if kind == "k9":
            return constructions.k9_labeling()
        m = re.fullmatch(r"d(\d+)", kind)
        if m and not arg:
            return constructions.d_graph(int(m.group(1)))
    except (ValueError, OSError) as exc:
        raise UsageError(f"bad pattern {text!r}: {exc}") from None
    raise UsageError(f"unknown pattern {text!r}")


def _emit(args, payload: dict, lines: list[str]):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for ln in lines:
            print(ln)


def _graph_json(g: EdgeOrderedGraph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def cmd_lex(args) -> int:
    family = [parse_pattern(p) for p in args.pattern]
    budget = search.Budget(seconds=args.budget_secs) if args.budget_secs else search.Budget()
    res = search.lex_exact(args.n, family, budget)
    if args.out:
        write_eog(res.witness, args.out)
    lines = [str(res.value)]
    if not res.exact:
        lines.append(f"status=budget_exceeded lower_bound={res.value}")
    lines.append(args.out if args.out else serialize_eog(res.witness).rstrip())
    _emit(args, {"value": res.value, "status": res.status, "nodes": res.nodes,
                 "witness": _graph_json(res.witness)}, lines)
    return 0


def cmd_contains(args) -> int:
    host, pat = parse_pattern(args.host), parse_pattern(args.pattern)
    emb = contains(host, pat)
    if emb is None:
        _emit(args, {"contains": False}, ["avoids"])
    else:
        vm = [emb.vertex_map[a] for a in range(pat.n)]
        _emit(args, {"contains": True, "vertex_map": vm, "edge_map": list(emb.edge_map)},
              ["contains", "vertex_map " + " ".join(map(str, vm)),
               "edge_map " + " ".join(map(str, emb.edge_map))])
    return 0


def cmd_can_avoid(args) -> int:
    g = parse_pattern(args.graph)
    family = [parse_pattern(p) for p in args.pattern]
    lab = search.can_avoid(g, family)
    if lab is None:
        _emit(args, {"avoidable": False}, ["none"])
    else:
        _emit(args, {"avoidable": True, "labeling": _graph_json(lab)}, serialize_eog(lab).splitlines())
    return 0


def cmd_chi(args) -> int:
    family = [parse_pattern(p) for p in args.pattern]
    res = orderchrom.order_chromatic(family, args.kmax)
    _emit(args, {"kind": res.kind, "value": res.value}, [str(res)])
    return 0


_CONSTRUCTIONS = {
    "star-matching": lambda a: constructions.star_plus_matching(a.n),
    "disjoint-k4": lambda a: constructions.disjoint_k4(a.c),
    "recursive-g": lambda a: constructions.recursive_g(a.i),
    "recursive-g-prime": lambda a: constructions.recursive_g_prime(a.i),
    "rightright": lambda a: constructions.rightright(a.i).graph,
    "d": lambda a: constructions.d_graph(a.n),
    "k9": lambda a: constructions.k9_labeling(),
    "explower": lambda a: constructions.explower_order(a.n),
    "clique": lambda a: canonical.canonical_clique(a.n, a.kind),
    "knncan": lambda a: canonical.knn_can(a.n).graph,
}


def cmd_construct(args) -> int:
    if args.name == "turan":
        if not args.pattern:
            raise UsageError("turan needs --pattern")
        g = constructions.turan_witness(args.n, args.r, [parse_pattern(p) for p in args.pattern])
    else:
        g = _CONSTRUCTIONS[args.name](args)
    if args.out:
        write_eog(g, args.out)
    _emit(args, _graph_json(g), [args.out] if args.out else serialize_eog(g).splitlines())
    return 0


def cmd_canonical(args) -> int:
    if args.count:
        c = canonical.count_canonical(args.k, args.n)
        _emit(args, c, [f"total={c['total']} iso={c['iso']}"])
        return 0
    specs = [s.to_text() for s in canonical.enumerate_specs(args.k, args.n)]
    _emit(args, {"specs": specs}, specs)
    return 0


def cmd_ds(args) -> int:
    if args.ds_cmd == "contains":
        hit = dsword.contains_word(dsword.parse_word(args.u), dsword.parse_word(args.f))
        _emit(args, {"contains": hit}, ["contains" if hit else "avoids"])
    elif args.ds_cmd == "max":
        try:
            value = dsword.ds_bruteforce(args.n, dsword.parse_word(args.f), args.max_len)
        except BudgetExceeded as exc:
            _emit(args, {"value": exc.lower_bound, "status": "budget_exceeded"},
                  [f">={exc.lower_bound}", "status=budget_exceeded"])
            return 0
        _emit(args, {"value": value, "status": "exact"}, [str(value)])
    else:
        g = parse_pattern(args.pattern)
        out = {"u": dsword.format_word(dsword.u_of(g))}
        lines = [f"u {out['u']}"]
        if is_star_forest(g):
            out["w"] = dsword.format_word(dsword.w_of(g))
            out["w_prime"] = dsword.format_word(dsword.w_prime_of(g))
            lines = [f"w {out['w']}", f"w' {out['w_prime']}"] + lines
        _emit(args, out, lines)
    return 0


def cmd_matrix(args) -> int:
    if args.matrix_cmd == "contains":
        hit = matrix.contains_pattern(matrix.read_mat(args.m), matrix.read_mat(args.p))
        _emit(args, {"contains": hit}, ["contains" if hit else "avoids"])
    else:
        g = matrix.graph_from_matrix_rowcol(matrix.read_mat(args.m)).graph
        if args.out:
            write_eog(g, args.out)
        _emit(args, _graph_json(g), [args.out] if args.out else serialize_eog(g).splitlines())
    return 0


def cmd_verify(args) -> int:
    wanted = sorted(verify.CLAIMS) if args.which in ([], ["all"]) else [int(x) for x in args.which]
    unknown = [k for k in wanted if k not in verify.CLAIMS]
    if unknown:
        raise UsageError(f"unknown claim numbers {unknown}")
    failed = 0
    results = []
    for k in wanted:
        r = verify.run_claim(k)
        failed += not r.ok
        results.append(r)
        if not args.json:
            print(r.line(), flush=True)
    if args.json:
        print(json.dumps([{"number": r.number, "ok": r.ok, "detail": r.detail,
                           "seconds": round(r.seconds, 3)} for r in results]))
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a subparser from resetting a flag given before the subcommand
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON instead of text")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="parallelism hint (accepted; runs single-threaded)")

    p = argparse.ArgumentParser(prog="eog", description="Turan problems for edge-ordered graphs.",
                                parents=[common])
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("lex", parents=[common], help="exact lex(n, family) with a witness")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--pattern", action="append", required=True)
    s.add_argument("--budget-secs", type=float)
    s.add_argument("-o", "--out", help="write the witness to this .eog file")
    s.set_defaults(func=cmd_lex)

    s = sub.add_parser("contains", parents=[common], help="pattern containment with a witness")
    s.add_argument("--host", required=True)
    s.add_argument("--pattern", required=True)
    s.set_defaults(func=cmd_contains)

    s = sub.add_parser("can-avoid", parents=[common], help="search for an avoiding labeling")
    s.add_argument("--graph", required=True)
    s.add_argument("--pattern", action="append", required=True)
    s.set_defaults(func=cmd_can_avoid)

    s = sub.add_parser("chi", parents=[common], help="order chromatic number of a family")
    s.add_argument("--pattern", action="append", required=True)
    s.add_argument("--kmax", type=int, default=3)
    s.set_defaults(func=cmd_chi)

    s = sub.add_parser("construct", parents=[common], help="emit an explicit construction")
    s.add_argument("name", choices=sorted(_CONSTRUCTIONS) + ["turan"])
    s.add_argument("--n", type=int, default=4)
    s.add_argument("--i", type=int, default=3)
    s.add_argument("--c", type=int, default=2)
    s.add_argument("--r", type=int, default=2)
    s.add_argument("--kind", default="min", choices=canonical.CLIQUE_KINDS)
    s.add_argument("--pattern", action="append")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("canonical", parents=[common], help="canonical edge-orders of K_(k x n)")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--count", action="store_true", help="print counts instead of the specs")
    s.set_defaults(func=cmd_canonical)

    s = sub.add_parser("ds", parents=[common], help="word containment and encodings")
    dsub = s.add_subparsers(dest="ds_cmd", required=True)
    d = dsub.add_parser("contains", parents=[common])
    d.add_argument("u")
    d.add_argument("f")
    d = dsub.add_parser("max", parents=[common], help="longest ||f||-regular word avoiding f")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("f")
    d.add_argument("--max-len", type=int, default=64)
    d = dsub.add_parser("words", parents=[common], help="u(G), and w(F), w'(F) for star forests")
    d.add_argument("pattern")
    s.set_defaults(func=cmd_ds)

    s = sub.add_parser("matrix", parents=[common], help="0-1 matrix patterns")
    msub = s.add_subparsers(dest="matrix_cmd", required=True)
    d = msub.add_parser("contains", parents=[common])
    d.add_argument("m", help=".mat file of the host matrix")
    d.add_argument("p", help=".mat file of the pattern")
    d = msub.add_parser("to-graph", parents=[common])
    d.add_argument("m")
    d.add_argument("-o", "--out")
    s.set_defaults(func=cmd_matrix)

    s = sub.add_parser("verify", parents=[common], help="replay the verification claims")
    s.add_argument("which", nargs="*", help="'all' or claim numbers")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.json = getattr(args, "json", False)
    try:
        return args.func(args)
    except (UsageError, InvalidGraphError, EogFormatError, ValueError, OSError) as exc:
        print(f"eog: error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"eog: budget exceeded: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
