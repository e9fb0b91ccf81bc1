"""Command line interface.

Exit codes: 0 success or verified, 1 refuted or failed, 2 usage, parse,
or domain errors, 3 retry or search budget exhausted.

Graph arguments accept a small spec language (path:N, star:M, dstar:N,M,
cycle:N, complete:N, biclique:A,B, empty:N, g6:STRING), a file path, or a
raw graph6 string; --format selects the file format.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
from fractions import Fraction

from .colorings import (
    STRATEGIES,
    certify,
    lower_bound_value,
    strategy_bound,
)
from .embed import embed_host, embed_host_sides, ramsey_embed_test, upper_bound_value
from .errors import (
    BudgetError,
    CapacityError,
    CertificateValidationError,
    ConstructionError,
    DomainError,
    EdgeListError,
    Graph6Error,
    LasVegasError,
)
from .expander import ExpanderParams, appendix_trial
from .geometry import make_affine_plane, q_for_ramsey
from .graphs import (
    Graph,
    beta,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    emit_graph6,
    is_bipartite,
    is_connected,
    is_double_star,
    is_star,
    is_tree,
    make_double_star,
    parse_edge_list,
    parse_graph6,
    path_graph,
    profile,
    star,
)
from .oracle import cross_check_bounds, size_ramsey_exact

__all__ = ["main", "parse_graph_spec"]


def _ints(text: str, count: int, what: str) -> list[int]:
    parts = text.split(",")
    if len(parts) != count:
        raise DomainError(f"{what} needs {count} comma-separated integers, got {text!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise DomainError(f"{what} needs integers, got {text!r}")


def parse_graph_spec(spec: str, fmt: str = "graph6") -> Graph:
    """Build a graph from a spec string, a file path, or raw graph6."""
    if ":" in spec:
        head, _, rest = spec.partition(":")
        if head == "path":
            return path_graph(_ints(rest, 1, "path")[0])
        if head == "star":
            return star(_ints(rest, 1, "star")[0])
        if head == "dstar":
            n, m = _ints(rest, 2, "dstar")
            return make_double_star(n, m)
        if head == "cycle":
            return cycle_graph(_ints(rest, 1, "cycle")[0])
        if head == "complete":
            return complete_graph(_ints(rest, 1, "complete")[0])
        if head == "biclique":
            a, b = _ints(rest, 2, "biclique")
            return complete_bipartite(a, b)
        if head == "empty":
            return empty_graph(_ints(rest, 1, "empty")[0])
        if head == "g6":
            return parse_graph6(rest)
        raise DomainError(
            f"unknown graph spec {spec!r}; use path:N, star:M, dstar:N,M, "
            "cycle:N, complete:N, biclique:A,B, empty:N, g6:STRING, or a file path"
        )
    import os

    if os.path.exists(spec):
        with open(spec, "r", encoding="utf-8") as fh:
            text = fh.read()
        if fmt == "edgelist":
            return parse_edge_list(text)
        return parse_graph6(text.strip().splitlines()[0])
    try:
        return parse_graph6(spec)
    except Graph6Error:
        raise DomainError(
            f"{spec!r} is neither a graph spec, an existing file, nor valid graph6"
        )


def _emit_json(doc: dict, path: str | None) -> None:
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_analyze(args) -> int:
    g = parse_graph_spec(args.target, args.format)
    r = args.r
    doc: dict = {
        "vertices": g.vertex_count,
        "edges": g.edge_count,
        "max_degree": g.max_degree(),
        "connected": is_connected(g),
        "bipartite": is_bipartite(g),
        "tree": is_tree(g),
        "r": r,
    }
    if args.beta:
        doc["beta"] = beta(g)  # raises DomainError on non-bipartite targets
    print(f"vertices: {doc['vertices']}")
    print(f"edges: {doc['edges']}")
    print(f"max degree: {doc['max_degree']}")
    print(f"connected: {'yes' if doc['connected'] else 'no'}")
    print(f"bipartite: {'yes' if doc['bipartite'] else 'no'}")
    print(f"tree: {'yes' if doc['tree'] else 'no'}")
    if doc["bipartite"] and doc["connected"] and g.edge_count >= 1:
        p = profile(g)
        doc["profile"] = {"n1": p.n1, "delta1": p.delta1,
                          "n2": p.n2, "delta2": p.delta2}
        doc["beta"] = p.n1 * p.delta1 + p.n2 * p.delta2
        print(f"profile: n1={p.n1} delta1={p.delta1}  n2={p.n2} delta2={p.delta2}")
        print(f"beta: {doc['beta']}")
        if is_star(g):
            print(f"star with {g.edge_count} edges: exact value r*(m-1)+1 applies")
        ds = is_double_star(g)
        if ds is not None:
            doc["double_star"] = list(ds)
            print(f"double star S_{{{ds[0]},{ds[1]}}}")
    if doc["connected"] and g.edge_count >= 1:
        value, tag = lower_bound_value(g, r)
        doc["lower_bound"] = {"num": value.numerator, "den": value.denominator,
                              "tag": tag}
        shown = str(value) if value.denominator > 1 else str(value.numerator)
        print(f"lower bound (r={r}): {shown} via {tag}")
        if doc["tree"]:
            ub = upper_bound_value(g, r)
            a, b = embed_host_sides(g, r)
            doc["upper_bound"] = ub
            doc["upper_bound_host"] = [a, b]
            print(f"upper bound (r={r}): {ub} via the complete bipartite host "
                  f"on {a}+{b} vertices")
    if args.json_out is not None:
        _emit_json(doc, args.json_out)
    return 0


def _auto_host(strategy: str, target: Graph, r: int, seed: int) -> Graph:
    """A host at the edge threshold: ceil(bound)-1 edges, dense enough to
    be connected, resampled until it is (affine gets the capacity clique)."""
    if strategy == "affine":
        q = q_for_ramsey(r)
        s = (target.vertex_count - 1) // q
        capacity = q * q * s
        if capacity < 2:
            raise DomainError(
                f"target on {target.vertex_count} vertices is too small for an "
                f"affine host at r={r}"
            )
        return complete_graph(capacity)
    bound = strategy_bound(strategy, target, r)
    e_host = math.ceil(bound) - 1
    if e_host < 1:
        raise DomainError(f"the bound {bound} admits no host with edges")
    n = max(4, math.isqrt(4 * e_host))
    while n * (n - 1) // 2 < e_host:
        n += 1
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    g = Graph(n, rng.sample(pairs, e_host))
    for _ in range(1000):
        if is_connected(g):
            break
        g = Graph(n, rng.sample(pairs, e_host))
    return g


def _cmd_certify(args) -> int:
    target = parse_graph_spec(args.target, args.format)
    if args.host is not None:
        host = parse_graph_spec(args.host, args.format)
    else:
        host = _auto_host(args.strategy, target, args.r, args.seed)
    cert = certify(args.strategy, host, target, args.r, seed=args.seed,
                   max_retries=args.max_retries, case3_split=args.case3_split)
    from .verify import certificate_to_json

    text = certificate_to_json(cert)
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"strategy: {cert.theorem_tag}", file=sys.stderr)
    print(f"host: {cert.host.vertex_count} vertices, {cert.host.edge_count} edges "
          f"(bound {cert.claimed_bound})", file=sys.stderr)
    print(f"palette: {cert.r}", file=sys.stderr)
    print(f"verdict: {cert.verdict}", file=sys.stderr)
    return 0 if cert.verdict == "verified" else 1


def _cmd_verify(args) -> int:
    from .verify import certificate_from_json, verify_certificate

    with open(args.certificate, "r", encoding="utf-8") as fh:
        text = fh.read()
    cert = certificate_from_json(text)
    fresh = verify_certificate(cert)
    stored = cert.verdict
    print(f"stored verdict: {stored}")
    print(f"recomputed verdict: {fresh.verdict}")
    if stored not in ("unverified", fresh.verdict):
        print("warning: stored verdict is stale", file=sys.stderr)
    if fresh.verdict == "verified":
        return 0
    if fresh.witness is not None:
        print(f"witness: {json.dumps(fresh.witness, sort_keys=True)}")
    return 1


def _cmd_embed(args) -> int:
    tree = parse_graph_spec(args.tree, args.format)
    if not is_tree(tree) or tree.edge_count == 0:
        raise DomainError("embed needs a tree target with at least one edge")
    r = args.r
    if args.host is not None:
        host = parse_graph_spec(args.host, args.format)
    else:
        host = embed_host(tree, r)
    rng = random.Random(args.seed)
    colors = {e: rng.randint(1, r) for e in host.sorted_edges()}
    from .verify import EdgeColoring

    coloring = EdgeColoring(host, r, colors)
    color, mapping = ramsey_embed_test(coloring, tree)
    print(f"host: {host.vertex_count} vertices, {host.edge_count} edges")
    print(f"monochromatic copy in color {color}")
    print("mapping: " + " ".join(f"{t}->{h}" for t, h in sorted(mapping.items())))
    if args.json_out is not None:
        _emit_json({
            "host_graph6": emit_graph6(host),
            "tree_graph6": emit_graph6(tree),
            "r": r,
            "seed": args.seed,
            "color": color,
            "mapping": {str(k): v for k, v in sorted(mapping.items())},
        }, args.json_out)
    return 0


def _cmd_exact(args) -> int:
    target = parse_graph_spec(args.target, args.format)
    if args.cross_check:
        report = cross_check_bounds(target, args.r, args.emax, args.vmax,
                                    args.budget)
        exact = report["exact"]
        lb = report["lower_bound"]
        lb_val = Fraction(lb["num"], lb["den"])
        print(f"lower bound: {lb_val} via {lb['tag']}")
        if report["upper_bound"] is not None:
            print(f"upper bound: {report['upper_bound']}")
        if exact["status"] == "exact":
            print(f"exact value: {exact['value']}")
        else:
            print(f"bracket: lower {exact['lower']}, upper {exact['upper']}")
        for v in report["violations"]:
            print(f"VIOLATION: {v}")
        if args.json_out is not None:
            _emit_json(report, args.json_out)
        if report["violations"]:
            return 1
        return 0 if exact["status"] == "exact" else 3
    res = size_ramsey_exact(target, args.r, args.emax, args.vmax, args.budget)
    if res.status == "exact":
        print(f"exact value: {res.value} (search nodes: {res.nodes})")
        print(f"minimal arrowing host: {res.arrowing_host_graph6}")
    else:
        up = res.upper if res.upper is not None else "none found"
        print(f"open: lower {res.lower}, upper {up} "
              f"({len(res.unknown_hosts)} hosts hit the budget)")
    if args.json_out is not None:
        _emit_json(res.to_dict(), args.json_out)
    return 0 if res.status == "exact" else 3


def _parse_seed_range(text: str) -> list[int]:
    if ":" in text:
        lo, _, hi = text.partition(":")
        try:
            start, stop = int(lo), int(hi)
        except ValueError:
            raise DomainError(f"seed range must be START:STOP, got {text!r}")
        if stop <= start:
            raise DomainError(f"empty seed range {text!r}")
        return list(range(start, stop))
    try:
        return [int(text)]
    except ValueError:
        raise DomainError(f"seeds must be an integer or START:STOP, got {text!r}")


def _cmd_simulate(args) -> int:
    tree = parse_graph_spec(args.tree, args.format)
    if not is_tree(tree) or tree.edge_count == 0:
        raise DomainError("simulate needs a tree target with at least one edge")
    params = ExpanderParams.from_constants(args.a_const, args.b_const, args.r,
                                           tree.vertex_count)
    seeds = _parse_seed_range(args.seeds)
    print(f"N={params.N} p={params.p:.6f} c1={params.c1:.4f} "
          f"c2={params.c2:.4f} delta={params.delta:.6g}")
    lines = []
    good = 0
    for seed in seeds:
        report = appendix_trial(params, tree, seed, adversary=args.adversary,
                                k=args.k)
        lines.append(report.to_json())
        flag = "ok" if report.verified else "MISS"
        print(f"seed {seed}: majority color {report.majority_color} "
              f"({report.majority_edges} edges), core {report.core_size}, "
              f"{flag}")
        if report.verified:
            good += 1
    frac = good / len(seeds)
    print(f"verified {good}/{len(seeds)} trials ({frac:.1%})")
    if args.json_out is not None:
        text = "\n".join(lines) + "\n"
        if args.json_out == "-":
            sys.stdout.write(text)
        else:
            with open(args.json_out, "w", encoding="utf-8") as fh:
                fh.write(text)
    return 0 if frac >= 0.9 else 1


def _cmd_plane_dump(args) -> int:
    plane = make_affine_plane(args.q)
    doc = {
        "q": plane.q,
        "points": plane.point_count,
        "lines": [sorted(line) for line in plane.lines],
        "classes": [list(cls) for cls in plane.classes],
    }
    print(f"AG(2, {plane.q}): {doc['points']} points, "
          f"{len(plane.lines)} lines, {len(plane.classes)} parallel classes")
    for i, cls in enumerate(plane.classes):
        label = f"slope {i}" if i < plane.q else "vertical"
        print(f"class {i} ({label}): lines {list(cls)}")
    if args.json_out is not None:
        _emit_json(doc, args.json_out)
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sizeramsey",
        description="size-Ramsey lower-bound colorings, tree embeddings, "
                    "and exact small-case search",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=["graph6", "edgelist"],
                       default="graph6", help="file format for graph paths")
        p.add_argument("--json-out", default=None, metavar="FILE",
                       help="write a JSON report to FILE ('-' for stdout)")

    p = sub.add_parser("analyze", help="profile, bounds, and shape of a target")
    p.add_argument("target")
    p.add_argument("-r", type=int, default=2)
    p.add_argument("--beta", action="store_true",
                   help="insist on the bipartite weight; errors on "
                        "non-bipartite targets")
    common(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("certify", help="construct and verify a lower-bound coloring")
    p.add_argument("--strategy", choices=list(STRATEGIES), required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--host", default=None,
                   help="host graph spec; omit to auto-build one at the bound")
    p.add_argument("-r", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-retries", type=int, default=1000)
    p.add_argument("--case3-split", choices=["3.1", "3.2"], default=None)
    p.add_argument("--out", default=None, metavar="FILE",
                   help="write the certificate JSON here instead of stdout")
    common(p)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("verify", help="re-verify a certificate file")
    p.add_argument("certificate")
    common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("embed", help="find a monochromatic tree in a colored "
                                     "complete bipartite host")
    p.add_argument("--tree", required=True)
    p.add_argument("--host", default=None,
                   help="complete bipartite host spec; omit for the bound host")
    p.add_argument("-r", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("exact", help="brute-force the size-Ramsey number")
    p.add_argument("--target", required=True)
    p.add_argument("-r", type=int, default=2)
    p.add_argument("--emax", type=int, default=8)
    p.add_argument("--vmax", type=int, default=None)
    p.add_argument("--budget", type=int, default=2_000_000,
                   help="search nodes per host")
    p.add_argument("--cross-check", action="store_true",
                   help="compare the exact value against the package bounds")
    common(p)
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("simulate", help="random sparse host trials for a tree")
    p.add_argument("--tree", required=True)
    p.add_argument("-A", dest="a_const", type=float, required=True)
    p.add_argument("-B", dest="b_const", type=float, required=True)
    p.add_argument("-r", type=int, default=2)
    p.add_argument("--seeds", default="0:10",
                   help="single seed or START:STOP range")
    p.add_argument("--adversary", choices=["random", "worst_of_k"],
                   default="random")
    p.add_argument("-k", type=int, default=32,
                   help="candidate colorings for worst_of_k")
    common(p)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("plane-dump", help="lines and parallel classes of AG(2, q)")
    p.add_argument("-q", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_plane_dump)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except (DomainError, Graph6Error, EdgeListError,
            CertificateValidationError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (LasVegasError, BudgetError) as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return 3
    except ConstructionError as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
