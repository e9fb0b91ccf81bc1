"""Brute-force size-Ramsey ground truth for small targets.

Hosts are enumerated by edge count up to isomorphism (a minimal arrowing
host is connected, since a monochromatic copy of a connected target lies
inside one component), each host is tested by exhaustive coloring search,
and the resulting exact values are compared against the package's own
lower and upper bounds.  Disagreements are reported, never patched over.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import permutations, product

from .colorings import lower_bound_value
from .embed import upper_bound_value
from .errors import DomainError
from .graphs import Graph, emit_graph6, is_connected, is_tree
from .verify import EdgeColoring, mono_copy, search_h_free_coloring

__all__ = [
    "canonical_form",
    "enumerate_connected_graphs",
    "ArrowingResult",
    "arrows",
    "ExactResult",
    "size_ramsey_exact",
    "cross_check_bounds",
]


# ---------------------------------------------------------------------------
# canonical forms (complete isomorphism invariant)


def _wl_colors(n: int, adj, colors: tuple[int, ...]) -> tuple[int, ...]:
    """Color refinement with rank-compressed labels.

    Each round's label of v is the rank of (old label, sorted neighbor
    labels) among all vertices, which is isomorphism-invariant; rounds
    strictly refine the partition until the class count stabilizes.
    """
    nclasses = len(set(colors))
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[w] for w in adj[v])))
            for v in range(n)
        ]
        uniq = sorted(set(keys))
        rank = {k: i for i, k in enumerate(uniq)}
        new = tuple(rank[k] for k in keys)
        if len(uniq) == nclasses:
            return new
        colors, nclasses = new, len(uniq)


def _adjacency_code(n: int, adj, ordering: list[int]) -> int:
    code = 0
    for i in range(n):
        ai = adj[ordering[i]]
        for j in range(i + 1, n):
            code = (code << 1) | (1 if ordering[j] in ai else 0)
    return code


_BRUTE_LIMIT = 5040


def _canon_code(n: int, adj, colors: tuple[int, ...]) -> int:
    classes: dict[int, list[int]] = defaultdict(list)
    for v, c in enumerate(colors):
        classes[c].append(v)
    ordered = [classes[c] for c in sorted(classes)]
    total = 1
    for cl in ordered:
        total *= math.factorial(len(cl))
        if total > _BRUTE_LIMIT:
            break
    if total <= _BRUTE_LIMIT:
        best = None
        for perms in product(*(permutations(cl) for cl in ordered)):
            ordering = [v for p in perms for v in p]
            code = _adjacency_code(n, adj, ordering)
            if best is None or code < best:
                best = code
        return best
    # individualize each member of the first non-singleton class; the class
    # is canonical, and the minimum over its members is order-independent,
    # so the result stays a complete invariant
    pivot = next(cl for cl in ordered if len(cl) >= 2)
    best = None
    for v in pivot:
        seeded = tuple(
            (colors[u], 1 if u == v else 0) for u in range(n)
        )
        uniq = sorted(set(seeded))
        rank = {k: i for i, k in enumerate(uniq)}
        refined = _wl_colors(n, adj, tuple(rank[k] for k in seeded))
        code = _canon_code(n, adj, refined)
        if best is None or code < best:
            best = code
    return best


def canonical_form(g: Graph) -> tuple[int, int]:
    """A complete isomorphism invariant: (n, canonical adjacency code).

    Two graphs get equal forms iff they are isomorphic: equality exhibits
    an explicit ordering pair realizing an isomorphism, and the orderings
    examined are chosen isomorphism-invariantly.
    """
    n = g.vertex_count
    if n == 0:
        return (0, 0)
    colors = _wl_colors(n, g.adj, (0,) * n)
    return (n, _canon_code(n, g.adj, colors))


# ---------------------------------------------------------------------------
# connected host enumeration by edge count


def _grow_levels(emax: int, vmax: int | None):
    """Yield (e, [graphs]) for e = 1..emax, one representative per
    isomorphism class of connected graphs with e edges and no isolated
    vertices (at most vmax vertices when given).

    Every connected graph with e+1 edges yields a connected predecessor
    with e edges: remove a cycle edge if one exists, otherwise remove a
    leaf; so edge-additions between existing vertices plus pendant
    attachments reach everything.
    """
    if emax < 1:
        return
    k2 = Graph(2, [(0, 1)])
    level = {canonical_form(k2): k2}
    yield 1, [k2]
    for e in range(2, emax + 1):
        nxt: dict[tuple[int, int], Graph] = {}
        for g in level.values():
            n = g.vertex_count
            for u in range(n):
                for v in range(u + 1, n):
                    if not g.has_edge(u, v):
                        g2 = Graph(n, list(g.edges) + [(u, v)])
                        nxt.setdefault(canonical_form(g2), g2)
            if vmax is None or n + 1 <= vmax:
                for u in range(n):
                    g2 = Graph(n + 1, list(g.edges) + [(u, n)])
                    nxt.setdefault(canonical_form(g2), g2)
        level = nxt
        yield e, sorted(level.values(), key=lambda g: (g.vertex_count, g.sorted_edges()))


def enumerate_connected_graphs(edge_count: int, max_vertices: int | None = None
                               ) -> list[Graph]:
    """All connected graphs with exactly edge_count edges, one per
    isomorphism class, no isolated vertices."""
    if edge_count < 1:
        raise DomainError(f"edge_count must be >= 1, got {edge_count}")
    out: list[Graph] = []
    for e, graphs in _grow_levels(edge_count, max_vertices):
        if e == edge_count:
            out = graphs
    return out


# ---------------------------------------------------------------------------
# arrowing


@dataclass(frozen=True)
class ArrowingResult:
    """Outcome of deciding g -> (h)_r by exhaustive coloring search."""

    status: str  # "arrows" | "free" | "unknown"
    nodes: int
    witness: dict[tuple[int, int], int] | None = None


def arrows(g: Graph, h: Graph, r: int, node_budget: int | None = None
           ) -> ArrowingResult:
    """Decide whether every r-coloring of g contains a monochromatic h.

    A "free" answer carries the witness coloring, re-verified here against
    the independent monochromatic-copy search before being returned.
    """
    if r < 1:
        raise DomainError(f"need r >= 1, got {r}")
    status, colors, nodes = search_h_free_coloring(g, h, r, node_budget)
    if status == "free":
        witness = EdgeColoring(g, r, colors)
        if mono_copy(witness, h) is not None:
            raise AssertionError(
                "free witness contains a monochromatic copy; searcher bug"
            )
        return ArrowingResult("free", nodes, dict(colors))
    return ArrowingResult(status, nodes)


@dataclass
class ExactResult:
    """Exact value or bracket for the r-color size-Ramsey number of target.

    status "exact" means lower == upper == value.  Otherwise "open":
    lower is the least edge count not yet ruled out, upper the least edge
    count of a proven arrowing host (None if none found up to emax).
    """

    target_graph6: str
    r: int
    status: str
    value: int | None
    lower: int
    upper: int | None
    emax: int
    nodes: int
    unknown_hosts: list[str] = field(default_factory=list)
    arrowing_host_graph6: str | None = None

    def to_dict(self) -> dict:
        return {
            "target_graph6": self.target_graph6,
            "r": self.r,
            "status": self.status,
            "value": self.value,
            "lower": self.lower,
            "upper": self.upper,
            "emax": self.emax,
            "nodes": self.nodes,
            "unknown_hosts": list(self.unknown_hosts),
            "arrowing_host_graph6": self.arrowing_host_graph6,
        }


def size_ramsey_exact(h: Graph, r: int, emax: int,
                      vmax: int | None = None,
                      node_budget: int | None = 2_000_000) -> ExactResult:
    """Smallest edge count of a host arrowing h with r colors, by complete
    enumeration of connected hosts (vertex counts never exceed e+1, or
    vmax when given).

    Budget-limited hosts are collected rather than guessed at: the result
    is only "exact" when every smaller host was definitively shown not to
    arrow.
    """
    if not is_connected(h) or h.edge_count == 0:
        raise DomainError("the target must be connected with at least one edge")
    if r < 1:
        raise DomainError(f"need r >= 1, got {r}")
    if emax < 1:
        raise DomainError(f"need emax >= 1, got {emax}")
    total_nodes = 0
    unknown: list[tuple[int, str]] = []
    found_e: int | None = None
    found_host: str | None = None
    for e, graphs in _grow_levels(emax, vmax):
        if e < h.edge_count:
            continue
        for g in graphs:
            res = arrows(g, h, r, node_budget)
            total_nodes += res.nodes
            if res.status == "arrows":
                found_e = e
                found_host = emit_graph6(g)
                break
            if res.status == "unknown":
                unknown.append((e, emit_graph6(g)))
        if found_e is not None:
            break
    lower = found_e if found_e is not None else emax + 1
    if unknown:
        lower = min(lower, min(e for e, _ in unknown))
    status = "exact" if found_e is not None and lower == found_e else "open"
    return ExactResult(
        target_graph6=emit_graph6(h),
        r=r,
        status=status,
        value=found_e if status == "exact" else None,
        lower=lower,
        upper=found_e,
        emax=emax,
        nodes=total_nodes,
        unknown_hosts=[g6 for _, g6 in unknown],
        arrowing_host_graph6=found_host,
    )


# ---------------------------------------------------------------------------
# cross-checking bounds against ground truth


def cross_check_bounds(h: Graph, r: int, emax: int,
                       vmax: int | None = None,
                       node_budget: int | None = 2_000_000) -> dict:
    """Compare the package's bounds for h against the brute-force value.

    Returns a report dict with a "violations" list; an inconsistency is
    reported, never raised, so a falsified bound surfaces in test output
    with its full context.
    """
    lower, tag = lower_bound_value(h, r)
    upper = upper_bound_value(h, r) if is_tree(h) else None
    exact = size_ramsey_exact(h, r, emax, vmax, node_budget)
    violations: list[str] = []
    need = math.ceil(lower)
    if exact.status == "exact":
        assert exact.value is not None
        if exact.value < need:
            violations.append(
                f"exact value {exact.value} is below the {tag} lower bound {lower}"
            )
        if upper is not None and exact.value > upper:
            violations.append(
                f"exact value {exact.value} exceeds the tree upper bound {upper}"
            )
    else:
        if exact.upper is not None and exact.upper < need:
            violations.append(
                f"an arrowing host with {exact.upper} edges beats the "
                f"{tag} lower bound {lower}"
            )
        if upper is not None and exact.lower > upper:
            violations.append(
                f"all hosts up to {exact.lower - 1} edges were eliminated, "
                f"contradicting the tree upper bound {upper}"
            )
    return {
        "target_graph6": emit_graph6(h),
        "r": r,
        "lower_bound": {"num": lower.numerator, "den": lower.denominator,
                        "tag": tag},
        "upper_bound": upper,
        "exact": exact.to_dict(),
        "violations": violations,
    }
