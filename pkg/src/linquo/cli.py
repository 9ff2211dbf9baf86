"""Command-line interface.

Exit codes: 0 success or verified pass; 1 verified failure or rejection;
2 usage error or malformed input; 3 budget or cap exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import fixtures, harness
from .graphs import format_graph, duplicate_vertex, expand_vertex
from .linquot import (
    NotGapfree,
    OrderingPreconditionError,
    duplication_order,
    expansion_order,
    find_lq_order,
    verify_linear_quotients,
)
from .orderings import admissible_order, compatible_orders, efficient_ordering, is_admissible
from .power_ideals import CapExceeded, edge_ideal, power_generators

PASS, FAIL, USAGE, BUDGET = 0, 1, 2, 3


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="linquo",
        description="Edge ideal powers and linear-quotients orderings of finite simple graphs.",
    )
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--seed", type=int, default=harness.DEFAULT_SEED, help="seed for randomized subcommands")
    p.add_argument("--budget", type=int, default=harness.DEFAULT_BUDGET, help="search node budget")
    p.add_argument("--cap", type=int, default=None, help="enumeration cap on edge multisets")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_arg(sp):
        sp.add_argument("--graph", required=True, help="graph file or fixture name")

    sp = sub.add_parser("powers", help="enumerate generators of a power")
    graph_arg(sp)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--list", action="store_true", help="include generators in the output")
    sp.add_argument("--count-only", action="store_true")

    sp = sub.add_parser("verify", help="verify a generator order")
    graph_arg(sp)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--order", required=True, help="order file or builtin:<name>")

    sp = sub.add_parser("find-order", help="search for a linear-quotients order")
    graph_arg(sp)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--emit", help="write the found order to this file")

    sp = sub.add_parser("efficient-order", help="recursive pure-power order from a base order")
    graph_arg(sp)
    sp.add_argument("--base-order", required=True)
    sp.add_argument("--base-q", type=int, default=2)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--emit")

    sp = sub.add_parser("admissible-order", help="construct an admissible edge order")
    graph_arg(sp)

    sp = sub.add_parser("compatible-orders", help="compatible order of a power from a square order")
    graph_arg(sp)
    sp.add_argument("--edge-order", default="auto", help="order file, 'auto', or comma-separated edge indices")
    sp.add_argument("--i2-order", default="auto", help="order file, builtin:<name>, or 'auto'")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--emit")

    sp = sub.add_parser("duplicate", help="duplicate a vertex; optionally transport an order")
    graph_arg(sp)
    sp.add_argument("--vertex", required=True)
    sp.add_argument("--q", type=int)
    sp.add_argument("--order")
    sp.add_argument("--emit")

    sp = sub.add_parser("expand", help="expand a vertex; optionally transport an order")
    graph_arg(sp)
    sp.add_argument("--vertex", required=True)
    sp.add_argument("--q", type=int)
    sp.add_argument("--order")
    sp.add_argument("--b-order", help="comma-separated vertex indices ordering B")
    sp.add_argument("--emit")

    sp = sub.add_parser("classify", help="graph classifiers and invariants")
    graph_arg(sp)

    sp = sub.add_parser("scan", help="classify and search all small graphs")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q-max", type=int, default=2)
    sp.add_argument("--no-dedup", action="store_true", help="scan labeled graphs without isomorphism dedup")

    sp = sub.add_parser("thm64", help="verify the bounded tower of compatible orders")
    graph_arg(sp)
    sp.add_argument("--q-through", type=int, default=7)
    sp.add_argument("--i2-order", help="order file or builtin:<name> (searched when omitted)")

    sp = sub.add_parser("repro", help="run the acceptance reproductions")
    sp.add_argument("names", nargs="*", help=f"subset of: {', '.join(harness.REPRO_SUITE)}")

    return p


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _vertex(g, token: str) -> int:
    if token.isdigit():
        v = int(token)
    else:
        names = g.vertex_names()
        if token not in names:
            raise ValueError(f"unknown vertex {token!r} (labels: {', '.join(names)})")
        v = names.index(token)
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return v


def _witness_json(report, names) -> dict | None:
    if report.witness is None:
        return None
    w = report.witness
    return {"t": w.t, "i": w.i, "colon": w.colon.format(names), "colon_exps": list(w.colon.exps)}


def _print_order(o, as_json: bool, emit: str | None) -> None:
    if as_json:
        _emit(json.dumps({"order": [list(ms) for ms in o.multisets()]}, indent=2) + "\n", emit)
    else:
        _emit(fixtures.format_order(o), emit)


def _cap(args) -> int:
    from .power_ideals import DEFAULT_CAP

    return args.cap if args.cap is not None else DEFAULT_CAP


def _cmd_powers(args) -> int:
    g = fixtures.resolve_graph(args.graph)
    pg = power_generators(edge_ideal(g), args.q, _cap(args))
    out: dict = {"q": args.q, "count": pg.count}
    if args.list and not args.count_only:
        names = g.vertex_names()
        out["gens"] = [
            {
                "monomial": pg.gens[i].format(names),
                "exps": list(pg.gens[i].exps),
                "factorizations": [list(ms) for ms in pg.factorizations[i]],
            }
            for i in range(pg.count)
        ]
    print(json.dumps(out, indent=2))
    return PASS


def _cmd_verify(args) -> int:
    g = fixtures.resolve_graph(args.graph)
    pg = power_generators(edge_ideal(g), args.q, _cap(args))
    o = fixtures.resolve_order(args.order, pg)
    t0 = time.time()
    report = verify_linear_quotients(o)
    out = {
        "pass": report.passed,
        "witness": _witness_json(report, g.vertex_names()),
        "elapsed_ms": round((time.time() - t0) * 1000, 3),
    }
    print(json.dumps(out, indent=2))
    return PASS if report.passed else FAIL


def _cmd_find_order(args) -> int:
    g = fixtures.resolve_graph(args.graph)
    pg = power_generators(edge_ideal(g), args.q, _cap(args))
    res = find_lq_order(pg, args.budget)
    if args.json:
        out = {"status": res.status, "nodes": res.nodes, "backtracks": res.backtracks}
        if res.found:
            out["order"] = [list(ms) for ms in res.ordering.multisets()]
        print(json.dumps(out, indent=2))
    elif res.found:
        _emit(fixtures.format_order(res.ordering), args.emit)
    else:
        print(f"{res.status} after {res.nodes} nodes", file=sys.stderr)
    if res.status == "found":
        return PASS
    return FAIL if res.status == "none" else BUDGET


def _cmd_efficient_order(args) -> int:
    g = fixtures.resolve_graph(args.graph)
    pg = power_generators(edge_ideal(g), args.base_q, _cap(args))
    base = fixtures.resolve_order(args.base_order, pg)
    o = efficient_ordering(base, args.s, _cap(args))
    ok = verify_linear_quotients(o).passed
    _print_order(o, args.json, args.emit)
    return PASS if ok else FAIL


def _cmd_admissible_order(args) -> int:
    g = fixtures.resolve_graph(args.graph)
    eo = admissible_order(g)
    assert is_admissible(g, eo)
    if args.json:
        print(json.dumps({"edge_order": list(eo), "edges": [list(g.edges[j]) for j in eo]}))
    else:
        print(" ".join(str(j) for j in eo))
    return PASS


def _resolve_edge_order(g, token: str, o2) -> tuple[int, ...]:
    from .orderings import pure_power_edge_sequence

    if token == "auto":
        eo = pure_power_edge_sequence(o2)
        if not is_admissible(g, eo):
            eo = admissible_order(g)
        return eo
    if "," in token or token.strip().isdigit():
        return tuple(int(t) for t in token.replace(",", " ").split())
    with open(token) as fh:
        return tuple(int(t) for t in fh.read().split())


def _cmd_compatible_orders(args) -> int:
    g = fixtures.resolve_graph(args.graph)
    pg2 = power_generators(edge_ideal(g), 2, _cap(args))
    if args.i2_order == "auto":
        res = find_lq_order(pg2, args.budget)
        if not res.found:
            print(f"no square order: {res.status}", file=sys.stderr)
            return FAIL if res.status == "none" else BUDGET
        o2 = res.ordering
    else:
        o2 = fixtures.resolve_order(args.i2_order, pg2)
    eo = _resolve_edge_order(g, args.edge_order, o2)
    o = compatible_orders(g, eo, o2, args.q, _cap(args))
    ok = verify_linear_quotients(o).passed
    _print_order(o, args.json, args.emit)
    return PASS if ok else FAIL


def _cmd_duplicate(args) -> int:
    g = fixtures.resolve_graph(args.graph)
    x = _vertex(g, args.vertex)
    if args.order is None:
        _emit(format_graph(duplicate_vertex(g, x)), args.emit)
        return PASS
    if args.q is None:
        raise ValueError("--order needs --q")
    pg = power_generators(edge_ideal(g), args.q, _cap(args))
    o = fixtures.resolve_order(args.order, pg)
    out = duplication_order(o, x, _cap(args))
    ok = verify_linear_quotients(out).passed
    _print_order(out, args.json, args.emit)
    return PASS if ok else FAIL


def _cmd_expand(args) -> int:
    g = fixtures.resolve_graph(args.graph)
    x = _vertex(g, args.vertex)
    if args.order is None:
        _emit(format_graph(expand_vertex(g, x)), args.emit)
        return PASS
    if args.q is None:
        raise ValueError("--order needs --q")
    pg = power_generators(edge_ideal(g), args.q, _cap(args))
    o = fixtures.resolve_order(args.order, pg)
    b_order = None
    if args.b_order:
        b_order = tuple(int(t) for t in args.b_order.replace(",", " ").split())
    out = expansion_order(o, x, b_order, _cap(args))
    ok = verify_linear_quotients(out).passed
    _print_order(out, args.json, args.emit)
    return PASS if ok else FAIL


def _cmd_classify(args) -> int:
    g = fixtures.resolve_graph(args.graph)
    print(json.dumps(harness.classify_graph(g), indent=2))
    return PASS


def _cmd_scan(args) -> int:
    records = harness.scan_small_graphs(
        args.n, args.q_max, args.budget, dedup=not args.no_dedup, cap=_cap(args)
    )
    print(json.dumps(records, indent=2))
    return PASS


def _cmd_thm64(args) -> int:
    g = fixtures.resolve_graph(args.graph)
    o2 = None
    if args.i2_order:
        pg2 = power_generators(edge_ideal(g), 2, _cap(args))
        o2 = fixtures.resolve_order(args.i2_order, pg2)
    report = harness.check_theorem64_premises(
        g, args.budget, args.q_through, _cap(args), o2
    )
    print(json.dumps(report, indent=2))
    if report["holds_through"] == args.q_through:
        return PASS
    computed = report["computed"]
    if any(v.get("verdict") == "unknown" for v in computed.values()):
        return BUDGET
    return FAIL


def _cmd_repro(args) -> int:
    reports, ok = harness.run_repro(args.names or None, args.budget, _cap(args))
    if args.json:
        print(json.dumps(reports, indent=2))
    else:
        for rep in reports:
            status = "PASS" if rep["passed"] else "FAIL"
            print(f"{status} {rep['name']} ({rep['elapsed_s']}s)")
            if not rep["passed"]:
                for c in rep["checks"]:
                    if not c["ok"]:
                        print(f"  failed: {c['check']}")
    return PASS if ok else FAIL


_COMMANDS = {
    "powers": _cmd_powers,
    "verify": _cmd_verify,
    "find-order": _cmd_find_order,
    "efficient-order": _cmd_efficient_order,
    "admissible-order": _cmd_admissible_order,
    "compatible-orders": _cmd_compatible_orders,
    "duplicate": _cmd_duplicate,
    "expand": _cmd_expand,
    "classify": _cmd_classify,
    "scan": _cmd_scan,
    "thm64": _cmd_thm64,
    "repro": _cmd_repro,
}


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (NotGapfree, OrderingPreconditionError) as e:
        print(f"rejected: {e}", file=sys.stderr)
        return FAIL
    except CapExceeded as e:
        print(f"cap exceeded: {e}", file=sys.stderr)
        return BUDGET
    except (ValueError, KeyError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
