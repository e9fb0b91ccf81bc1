"""Exact verification: subgraph search, edge colorings, and certificates.

Everything a coloring construction claims is re-checked here by explicit
search, never by trusting the construction.  The embedding search is a
plain backtracking algorithm over a connectivity-preserving vertex order
with degree pruning; it is exact and is itself cross-checked against a
brute-force oracle in the test suite.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import CertificateValidationError, DomainError
from .graphs import Graph, emit_graph6, is_connected, parse_graph6

__all__ = [
    "Embedding",
    "find_subgraph",
    "EdgeColoring",
    "ColoringPlan",
    "mono_copy",
    "max_mono_component",
    "fits_bipartite",
    "Certificate",
    "verify_certificate",
    "certificate_to_json",
    "certificate_from_json",
    "search_h_free_coloring",
]

Embedding = dict[int, int]

_EMPTY: frozenset[int] = frozenset()


# ---------------------------------------------------------------------------
# embedding search


def _search_order(target: Graph, seed: tuple[int, ...] = ()) -> list[int]:
    """Vertex order that keeps every later vertex attached to an earlier one.

    Starts from the given seed vertices (used by the anchored search),
    otherwise from a maximum-degree vertex, and greedily appends the
    highest-degree attached vertex.  For connected targets every position
    after the first has at least one earlier neighbor.
    """
    n = target.vertex_count
    degs = target.degrees()
    order = list(seed)
    placed = set(order)
    while len(order) < n:
        best_key = None
        best_v = -1
        for v in range(n):
            if v in placed:
                continue
            attached = any(w in placed for w in target.adj[v])
            key = (attached, degs[v], -v)
            if best_key is None or key > best_key:
                best_key = key
                best_v = v
        order.append(best_v)
        placed.add(best_v)
    return order


def _backtrack_embed(
    target: Graph,
    order: Sequence[int],
    adj_of,
    host_vertices: Sequence[int],
    pre: Mapping[int, int],
) -> Embedding | None:
    n = len(order)
    if n == 0:
        return {}
    tadj = target.adj
    tdeg = target.degrees()
    pos = {v: i for i, v in enumerate(order)}
    parents: list[list[int]] = []
    for i, tv in enumerate(order):
        parents.append([pos[w] for w in tadj[tv] if pos[w] < i])
    images: list[int] = [-1] * n
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == n:
            return True
        tv = order[i]
        if tv in pre:
            cands: Iterable[int] = (pre[tv],)
        elif parents[i]:
            pool = set(adj_of(images[parents[i][0]]))
            for p in parents[i][1:]:
                pool &= adj_of(images[p])
            cands = sorted(pool)
        else:
            cands = host_vertices
        need = tdeg[tv]
        for hv in cands:
            if hv in used or len(adj_of(hv)) < need:
                continue
            if tv in pre and any(images[p] not in adj_of(hv) for p in parents[i]):
                continue
            images[i] = hv
            used.add(hv)
            if extend(i + 1):
                return True
            used.remove(hv)
        return False

    if extend(0):
        return {order[i]: images[i] for i in range(n)}
    return None


def _adj_accessor(host_adj):
    if isinstance(host_adj, dict):
        return lambda v: host_adj.get(v, _EMPTY)
    return lambda v: host_adj[v]


def _embed_in_adjacency(
    host_adj,
    host_vertices: Sequence[int],
    target: Graph,
    require_edge: tuple[int, int] | None = None,
) -> Embedding | None:
    """Search for an injective edge-preserving map of target into a host
    given as an adjacency structure.  With require_edge=(u, v) only
    embeddings whose image uses that host edge are accepted; every target
    edge is tried against it in both orientations.
    """
    adj_of = _adj_accessor(host_adj)
    if require_edge is None:
        order = _search_order(target)
        return _backtrack_embed(target, order, adj_of, host_vertices, {})
    hu, hv = require_edge
    for a, b in target.sorted_edges():
        for x, y in ((a, b), (b, a)):
            order = _search_order(target, seed=(x, y))
            emb = _backtrack_embed(
                target, order, adj_of, host_vertices, {x: hu, y: hv}
            )
            if emb is not None:
                return emb
    return None


def find_subgraph(host: Graph, target: Graph) -> Embedding | None:
    """First injective edge-preserving embedding of target into host, or None.

    The copy need not be induced.  The target must be connected; the host
    may be anything.  Exactness of this search is what every certificate
    verdict in the package rests on.
    """
    if target.vertex_count > 0 and not is_connected(target):
        raise DomainError("find_subgraph requires a connected target")
    if target.vertex_count > host.vertex_count:
        return None
    if target.edge_count > host.edge_count:
        return None
    if target.max_degree() > host.max_degree():
        return None
    return _embed_in_adjacency(host.adj, range(host.vertex_count), target)


# ---------------------------------------------------------------------------
# edge colorings


class EdgeColoring:
    """A (possibly partial) assignment of colors 1..r to host edges."""

    __slots__ = ("host", "r", "colors")

    def __init__(
        self,
        host: Graph,
        r: int,
        colors: Mapping[tuple[int, int], int] | None = None,
    ):
        if r < 1:
            raise DomainError(f"palette size must be >= 1, got {r}")
        self.host = host
        self.r = r
        self.colors: dict[tuple[int, int], int] = {}
        if colors:
            for (u, v), c in colors.items():
                self.set(u, v, c)

    def set(self, u: int, v: int, c: int) -> None:
        e = (u, v) if u < v else (v, u)
        if e not in self.host.edges:
            raise DomainError(f"edge {e} not in host")
        if not 1 <= c <= self.r:
            raise DomainError(f"color {c} outside palette 1..{self.r}")
        self.colors[e] = c

    def get(self, u: int, v: int) -> int | None:
        return self.colors.get((u, v) if u < v else (v, u))

    def is_total(self) -> bool:
        return len(self.colors) == self.host.edge_count

    def used_colors(self) -> list[int]:
        return sorted(set(self.colors.values()))

    def classes(self) -> dict[int, list[tuple[int, int]]]:
        out: dict[int, list[tuple[int, int]]] = {c: [] for c in range(1, self.r + 1)}
        for e, c in self.colors.items():
            out[c].append(e)
        for c in out:
            out[c].sort()
        return out

    def class_adjacency(self, c: int) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {}
        for (u, v), cc in self.colors.items():
            if cc == c:
                adj.setdefault(u, set()).add(v)
                adj.setdefault(v, set()).add(u)
        return adj

    def copy(self) -> "EdgeColoring":
        return EdgeColoring(self.host, self.r, dict(self.colors))

    def __repr__(self) -> str:
        return f"EdgeColoring(r={self.r}, colored={len(self.colors)}/{self.host.edge_count})"


@dataclass
class ColoringPlan:
    """How a coloring was produced: strategy name, vertex parts, parameters.

    aux holds non-serialized working data (e.g. the proper edge coloring
    underlying a bucketed one) for tests and diagnostics.
    """

    strategy: str
    parts: dict[str, tuple[int, ...]] = field(default_factory=dict)
    parameters: dict[str, object] = field(default_factory=dict)
    retries: int = 0
    aux: dict = field(default_factory=dict, repr=False, compare=False)


def mono_copy(coloring: EdgeColoring, target: Graph) -> tuple[int, Embedding] | None:
    """First (color, embedding) of a monochromatic copy of target, or None.

    Colors are scanned in increasing order; classes that are too small in
    edges, vertices, or max degree are skipped without search.
    """
    if target.vertex_count > 0 and not is_connected(target):
        raise DomainError("mono_copy requires a connected target")
    et = target.edge_count
    nt = target.vertex_count
    dt = target.max_degree()
    if et == 0:
        # a copy of an edgeless target exists in every color class iff the
        # host has enough vertices; color 1 is reported by convention
        if nt <= coloring.host.vertex_count:
            return 1, {i: i for i in range(nt)}
        return None
    for c, edges in sorted(coloring.classes().items()):
        if len(edges) < et:
            continue
        adj: dict[int, set[int]] = {}
        for u, v in edges:
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        if len(adj) < nt:
            continue
        if max(len(s) for s in adj.values()) < dt:
            continue
        # a connected target lies inside one component of the class, so
        # search component by component; classes built to keep every
        # component small are dismissed here without any backtracking
        seen: set[int] = set()
        for start in sorted(adj):
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            if len(comp) < nt:
                continue
            if sum(len(adj[v]) for v in comp) // 2 < et:
                continue
            if max(len(adj[v]) for v in comp) < dt:
                continue
            emb = _embed_in_adjacency(adj, sorted(comp), target)
            if emb is not None:
                return c, emb
    return None


class _UnionFind:
    __slots__ = ("parent", "size")

    def __init__(self):
        self.parent: dict[int, int] = {}
        self.size: dict[int, int] = {}

    def find(self, x: int) -> int:
        root = x
        parent = self.parent
        while parent.setdefault(root, root) != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        sa = self.size.get(ra, 1)
        sb = self.size.get(rb, 1)
        if sa < sb:
            ra, rb = rb, ra
            sa, sb = sb, sa
        self.parent[rb] = ra
        self.size[ra] = sa + sb

    def max_size(self) -> int:
        if not self.parent:
            return 0
        return max(self.size.get(r, 1) for r in self.parent if self.parent[r] == r)


def max_mono_component(coloring: EdgeColoring) -> dict[int, int]:
    """Largest connected component size per color class, isolated vertices
    counting as 1.  Every palette color appears in the result."""
    base = 1 if coloring.host.vertex_count >= 1 else 0
    out: dict[int, int] = {c: base for c in range(1, coloring.r + 1)}
    per_color: dict[int, _UnionFind] = {}
    for (u, v), c in coloring.colors.items():
        uf = per_color.setdefault(c, _UnionFind())
        uf.union(u, v)
    for c, uf in per_color.items():
        out[c] = max(base, uf.max_size())
    return out


def fits_bipartite(x_stats, y_stats, prof) -> bool:
    """Could a copy of H (given by its profile) lie in a bipartite graph
    whose sides have the given sizes and max degrees?

    Returns False exactly when one of the four size/degree comparisons
    rules every copy out: a part of H must fit in each side, and each
    side must offer the max degree the matching part of H needs.
    """
    sizes = sorted((x_stats.size, y_stats.size))
    ns = sorted((prof.n1, prof.n2))
    if sizes[0] < ns[0] or sizes[1] < ns[1]:
        return False
    degs = sorted((x_stats.max_degree, y_stats.max_degree))
    ds = sorted((prof.delta1, prof.delta2))
    if degs[0] < ds[0] or degs[1] < ds[1]:
        return False
    return True


# ---------------------------------------------------------------------------
# certificates


@dataclass
class Certificate:
    """A host coloring together with the claim it certifies.

    claimed_bound is the edge threshold of the construction that produced
    the coloring: the host must have strictly fewer edges, and the
    coloring must contain no monochromatic copy of the target.
    """

    host: Graph
    target: Graph
    r: int
    coloring: EdgeColoring
    plan: ColoringPlan
    claimed_bound: Fraction
    theorem_tag: str
    seed: int | None = None
    verdict: str = "unverified"
    witness: dict | None = None


def _structural_violations(cert: Certificate) -> list[str]:
    problems: list[str] = []
    if cert.r < 1:
        problems.append(f"r must be >= 1, got {cert.r}")
    if cert.claimed_bound <= 0:
        problems.append(f"claimed_bound must be positive, got {cert.claimed_bound}")
    if cert.coloring.host != cert.host:
        problems.append("coloring host differs from certificate host")
    for (u, v), c in sorted(cert.coloring.colors.items()):
        if not 1 <= c <= cert.r:
            problems.append(f"edge ({u}, {v}) has color {c} outside 1..{cert.r}")
    if not cert.coloring.is_total():
        missing = sorted(cert.host.edges - set(cert.coloring.colors))
        problems.append(f"coloring is partial; {len(missing)} uncolored edges, e.g. {missing[:3]}")
    if cert.coloring.r > cert.r:
        problems.append(f"coloring palette {cert.coloring.r} exceeds certificate r {cert.r}")
    if not (cert.host.edge_count < cert.claimed_bound):
        problems.append(
            f"host has {cert.host.edge_count} edges, not below the claimed bound "
            f"{cert.claimed_bound}"
        )
    if cert.target.vertex_count == 0:
        problems.append("target graph is empty")
    elif not is_connected(cert.target):
        problems.append("target graph is disconnected")
    return problems


def verify_certificate(cert: Certificate) -> Certificate:
    """Recompute the verdict of a certificate from scratch.

    Structural defects raise CertificateValidationError listing every
    violation found.  Otherwise the returned copy carries verdict
    'verified', or 'refuted' together with a witness.  The function is
    pure: identical input yields an identical verdict.
    """
    problems = _structural_violations(cert)
    if problems:
        raise CertificateValidationError(problems)
    hit = mono_copy(cert.coloring, cert.target)
    if hit is not None:
        color, emb = hit
        witness = {"kind": "mono_copy", "color": color,
                   "mapping": {int(k): int(v) for k, v in sorted(emb.items())}}
        return replace(cert, verdict="refuted", witness=witness)
    if cert.plan.strategy == "affine":
        n_bound = cert.plan.parameters.get("n")
        if isinstance(n_bound, int):
            comp = max_mono_component(cert.coloring)
            for c in sorted(comp):
                if comp[c] >= n_bound:
                    witness = {"kind": "component", "color": c, "size": comp[c],
                               "bound": n_bound}
                    return replace(cert, verdict="refuted", witness=witness)
    return replace(cert, verdict="verified", witness=None)


_SCHEMA_VERSION = 1


def certificate_to_json(cert: Certificate) -> str:
    """Deterministic JSON encoding: sorted keys, no timestamps, so identical
    certificates serialize to identical bytes."""
    doc = {
        "schema_version": _SCHEMA_VERSION,
        "host_graph6": emit_graph6(cert.host),
        "target_graph6": emit_graph6(cert.target),
        "r": cert.r,
        "strategy": cert.plan.strategy,
        "parameters": _jsonable(cert.plan.parameters),
        "plan_parts": {k: list(v) for k, v in sorted(cert.plan.parts.items())},
        "seed": cert.seed,
        "coloring": [[u, v, c] for (u, v), c in sorted(cert.coloring.colors.items())],
        "claimed_bound": {
            "num": cert.claimed_bound.numerator,
            "den": cert.claimed_bound.denominator,
        },
        "theorem_tag": cert.theorem_tag,
        "verdict": cert.verdict,
    }
    if cert.witness is not None:
        doc["witness"] = _jsonable(cert.witness)
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _jsonable(value):
    if isinstance(value, Fraction):
        return {"num": value.numerator, "den": value.denominator}
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (int, float, str, bool)) or value is None:
        return value
    return str(value)


def certificate_from_json(text: str) -> Certificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateValidationError([f"malformed JSON: {exc}"])
    problems: list[str] = []
    if not isinstance(doc, dict):
        raise CertificateValidationError(["certificate document must be an object"])
    if doc.get("schema_version") != _SCHEMA_VERSION:
        problems.append(f"unsupported schema_version {doc.get('schema_version')!r}")
    required = ["host_graph6", "target_graph6", "r", "strategy", "coloring",
                "claimed_bound", "theorem_tag"]
    for key in required:
        if key not in doc:
            problems.append(f"missing field {key!r}")
    if problems:
        raise CertificateValidationError(problems)
    try:
        host = parse_graph6(doc["host_graph6"])
    except Exception as exc:
        problems.append(f"host_graph6: {exc}")
    try:
        target = parse_graph6(doc["target_graph6"])
    except Exception as exc:
        problems.append(f"target_graph6: {exc}")
    if problems:
        raise CertificateValidationError(problems)
    r = doc["r"]
    if not isinstance(r, int) or r < 1:
        raise CertificateValidationError([f"r must be a positive integer, got {r!r}"])
    coloring = EdgeColoring(host, r)
    for item in doc["coloring"]:
        if (not isinstance(item, list)) or len(item) != 3:
            problems.append(f"coloring entry {item!r} is not [u, v, c]")
            continue
        u, v, c = item
        try:
            coloring.set(u, v, c)
        except DomainError as exc:
            problems.append(str(exc))
    bound = doc["claimed_bound"]
    try:
        claimed = Fraction(bound["num"], bound["den"])
    except Exception:
        problems.append(f"claimed_bound {bound!r} is not a num/den object")
        claimed = Fraction(1)
    if problems:
        raise CertificateValidationError(problems)
    plan = ColoringPlan(
        strategy=doc["strategy"],
        parts={k: tuple(v) for k, v in doc.get("plan_parts", {}).items()},
        parameters=doc.get("parameters", {}),
    )
    return Certificate(
        host=host,
        target=target,
        r=r,
        coloring=coloring,
        plan=plan,
        claimed_bound=claimed,
        theorem_tag=doc["theorem_tag"],
        seed=doc.get("seed"),
        verdict=doc.get("verdict", "unverified"),
        witness=doc.get("witness"),
    )


# ---------------------------------------------------------------------------
# exhaustive search for target-free colorings (shared by the oracle and the
# constructions' last-resort fallbacks)


def search_h_free_coloring(
    g: Graph,
    target: Graph,
    r: int,
    node_budget: int | None = None,
) -> tuple[str, dict[tuple[int, int], int] | None, int]:
    """Backtracking search for an r-coloring of g with no monochromatic target.

    Returns (status, coloring, nodes) where status is 'free' (witness
    found), 'arrows' (search space exhausted, none exists), or 'unknown'
    (node budget hit).  Color symmetry is broken by only allowing each new
    color once all smaller ones have appeared.
    """
    if target.edge_count == 0:
        raise DomainError("search needs a target with at least one edge")
    if not is_connected(target):
        raise DomainError("search needs a connected target")
    edges = g.sorted_edges()
    m = len(edges)
    if m == 0:
        return "free", {}, 0
    class_adj: list[dict[int, set[int]]] = [dict() for _ in range(r + 1)]
    assignment: dict[tuple[int, int], int] = {}
    nodes = 0
    exhausted = True

    def place(i: int, used: int) -> bool:
        nonlocal nodes, exhausted
        if i == m:
            return True
        u, v = edges[i]
        limit = min(used + 1, r)
        for c in range(1, limit + 1):
            nodes += 1
            if node_budget is not None and nodes > node_budget:
                exhausted = False
                return False
            adj = class_adj[c]
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
            hit = _embed_in_adjacency(adj, sorted(adj), target, require_edge=(u, v))
            if hit is None:
                assignment[edges[i]] = c
                if place(i + 1, max(used, c)):
                    return True
                if not exhausted:
                    return False
                del assignment[edges[i]]
            adj[u].discard(v)
            adj[v].discard(u)
            if not adj[u]:
                del adj[u]
            if not adj[v]:
                del adj[v]
        return False

    if place(0, 0):
        return "free", dict(assignment), nodes
    if exhausted:
        return "arrows", None, nodes
    return "unknown", None, nodes
