"""Adversary edge colorings that certify size-Ramsey lower bounds.

Each constructor colors a host graph whose edge count is below the
threshold of the corresponding bound, in a way that provably leaves no
monochromatic copy of the target.  Constructions never self-certify:
`certify` runs the exact verifier over the finished coloring and only a
verifier pass yields the verdict "verified".

Randomized steps are Las Vegas: partitions are resampled under a seeded
RNG until the exact success condition holds, so a returned coloring is
always sound and only the retry count varies with the seed.
"""

from __future__ import annotations

import random
import warnings
from collections import defaultdict
from fractions import Fraction
from math import comb

from .errors import (
    CapacityError,
    ConstructionError,
    DomainError,
    LasVegasError,
)
from .geometry import make_affine_plane, q_for_partition, q_for_ramsey
from .graphs import (
    BipartiteProfile,
    Graph,
    beta,
    complete_graph,
    edges_within,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_double_star,
    is_star,
    make_double_star,
    profile,
)
from .verify import (
    Certificate,
    ColoringPlan,
    EdgeColoring,
    mono_copy,
    search_h_free_coloring,
    verify_certificate,
)

__all__ = [
    "vizing_bucket_coloring",
    "affine_component_coloring",
    "beck_coloring",
    "chi3_coloring",
    "weakbip_coloring",
    "gen2_coloring",
    "double_star_coloring",
    "double_star_2coloring",
    "scaled_nonstar_coloring",
    "scaled_bipartite_coloring",
    "lower_bound_value",
    "strategy_bound",
    "certify",
    "STRATEGIES",
]


# ---------------------------------------------------------------------------
# proper edge coloring (fan recoloring), the engine behind the bucket lemma


class _PaletteStuck(Exception):
    def __init__(self, vertex: int):
        super().__init__(f"no free color at vertex {vertex}")
        self.vertex = vertex


class _ProperState:
    __slots__ = ("palette", "at", "colors")

    def __init__(self, palette: int):
        self.palette = palette
        self.at: dict[int, dict[int, int]] = defaultdict(dict)
        self.colors: dict[tuple[int, int], int] = {}

    def first_free(self, v: int) -> int | None:
        row = self.at[v]
        for c in range(1, self.palette + 1):
            if c not in row:
                return c
        return None

    def set(self, u: int, v: int, c: int) -> None:
        e = (u, v) if u < v else (v, u)
        self.colors[e] = c
        self.at[u][c] = v
        self.at[v][c] = u

    def unset(self, u: int, v: int) -> int:
        e = (u, v) if u < v else (v, u)
        c = self.colors.pop(e)
        del self.at[u][c]
        del self.at[v][c]
        return c

    def color_of(self, u: int, v: int) -> int | None:
        return self.colors.get((u, v) if u < v else (v, u))


def _mg_insert(st: _ProperState, u: int, v: int) -> None:
    """Color edge (u, v) by the fan/path recoloring step.

    Always succeeds when the palette exceeds the max degree; with a tight
    palette it may raise _PaletteStuck, which callers turn into an
    exhaustive fallback.
    """
    # maximal fan of u starting at v
    fan = [v]
    fan_set = {v}
    while True:
        last = fan[-1]
        nxt = None
        for c in range(1, st.palette + 1):
            if c in st.at[last]:
                continue
            w = st.at[u].get(c)
            if w is not None and w not in fan_set:
                nxt = w
                break
        if nxt is None:
            break
        fan.append(nxt)
        fan_set.add(nxt)
    c = st.first_free(u)
    if c is None:
        raise _PaletteStuck(u)
    d = st.first_free(fan[-1])
    if d is None:
        raise _PaletteStuck(fan[-1])
    if d not in st.at[u]:
        _rotate_and_set(st, u, fan, len(fan) - 1, d)
        return
    # invert the maximal cd-alternating path starting at u along color d
    path: list[tuple[int, int, int]] = []
    cur, expect = u, d
    while True:
        nxt = st.at[cur].get(expect)
        if nxt is None:
            break
        path.append((cur, nxt, expect))
        cur = nxt
        expect = c if expect == d else d
    for x, y, _ in path:
        st.unset(x, y)
    for x, y, col in path:
        st.set(x, y, c if col == d else d)
    # first fan prefix that is still a fan and ends where d is free
    for i, w in enumerate(fan):
        if d in st.at[w]:
            continue
        ok = True
        for j in range(1, i + 1):
            cc = st.color_of(u, fan[j])
            if cc is None or cc in st.at[fan[j - 1]]:
                ok = False
                break
        if ok:
            _rotate_and_set(st, u, fan, i, d)
            return
    # only reachable when the palette equals the max degree; the caller
    # falls back to an exhaustive search
    raise _PaletteStuck(u)


def _rotate_and_set(st: _ProperState, u: int, fan: list[int], i: int, d: int) -> None:
    shifted = [st.color_of(u, fan[j]) for j in range(1, i + 1)]
    for j in range(1, i + 1):
        st.unset(u, fan[j])
    for j, col in enumerate(shifted):
        st.set(u, fan[j], col)
    st.set(u, fan[i], d)


def _exhaustive_proper(edges: list[tuple[int, int]], palette: int,
                       max_edges: int = 24) -> dict[tuple[int, int], int] | None:
    """Complete search for a proper edge coloring; None when impossible.

    Only attempted on tiny edge sets, as a fallback when the fan algorithm
    stalls on a palette equal to the max degree.
    """
    if len(edges) > max_edges:
        return None
    at: dict[int, set[int]] = defaultdict(set)
    out: dict[tuple[int, int], int] = {}

    def rec(i: int, used: int) -> bool:
        if i == len(edges):
            return True
        u, v = edges[i]
        for c in range(1, min(used + 1, palette) + 1):
            if c in at[u] or c in at[v]:
                continue
            at[u].add(c)
            at[v].add(c)
            out[edges[i]] = c
            if rec(i + 1, max(used, c)):
                return True
            at[u].discard(c)
            at[v].discard(c)
            del out[edges[i]]
        return False

    return dict(out) if rec(0, 0) else None


def _proper_coloring(edges: list[tuple[int, int]], palette: int) -> _ProperState:
    st = _ProperState(palette)
    try:
        for u, v in edges:
            _mg_insert(st, u, v)
    except _PaletteStuck as exc:
        found = _exhaustive_proper(edges, palette)
        if found is None:
            raise ConstructionError(
                f"no proper edge coloring with {palette} colors exists or was found "
                f"(stuck near vertex {exc.vertex})"
            )
        st = _ProperState(palette)
        for (u, v), c in found.items():
            st.set(u, v, c)
    return st


# ---------------------------------------------------------------------------
# the bucket lemma: rk proper colors grouped into r buckets of width k


def vizing_bucket_coloring(g: Graph, x_set, r: int, k: int
                           ) -> tuple[EdgeColoring, ColoringPlan]:
    """Color every edge incident with X using r colors so that each vertex
    of X has degree at most k in every color.

    Method: a proper coloring of G[X] with rk colors, extended over the
    X-leaving edges by giving each X endpoint pairwise distinct unused
    colors, then grouping color (i-1)k+1 .. ik into bucket i.  Vertices of
    X with degree above rk make the guarantee impossible and raise a
    ConstructionError naming the vertex.
    """
    if r < 1 or k < 1:
        raise DomainError(f"need r >= 1 and k >= 1, got r={r}, k={k}")
    x = frozenset(x_set)
    for v in x:
        if not 0 <= v < g.vertex_count:
            raise DomainError(f"X contains vertex {v} outside the host")
    palette = r * k
    for v in sorted(x):
        if g.degree(v) > palette:
            raise ConstructionError(
                f"vertex {v} has degree {g.degree(v)} > r*k = {palette}; "
                "the per-color degree bound cannot hold"
            )
    inner = edges_within(g, x)
    st = _proper_coloring(inner, palette)
    # extension: leaving edges take colors unused at their X endpoint
    leaving = sorted(
        e for e in g.edges if (e[0] in x) != (e[1] in x)
    )
    for u, v in leaving:
        xe = u if u in x else v
        c = st.first_free(xe)
        if c is None:
            raise ConstructionError(
                f"vertex {xe} ran out of colors during extension"
            )
        # record only at the X endpoint; the outside endpoint is unconstrained
        st.colors[(u, v)] = c
        st.at[xe][c] = v if xe == u else u
    bucketed = {e: (c - 1) // k + 1 for e, c in st.colors.items()}
    coloring = EdgeColoring(g, r, bucketed)
    soft = [v for v in sorted(x) if g.degree(v) == palette]
    plan = ColoringPlan(
        strategy="vizing_bucket",
        parts={"X": tuple(sorted(x))},
        parameters={"r": r, "k": k, "palette": palette,
                    "tight_degree_vertices": soft},
        aux={"proper": dict(st.colors), "inner_edges": list(inner)},
    )
    return coloring, plan


def _distinct_cross_colors(cross: list[tuple[tuple[int, int], int]],
                           buckets: int, k: int, first_color: int
                           ) -> dict[tuple[int, int], int]:
    """Give the edges at each anchor vertex pairwise distinct colors from a
    fresh palette of buckets*k, bucketed to first_color..first_color+buckets-1.

    Per-anchor degree in each bucket is then at most k.  Anchors needing
    more than buckets*k edges raise ConstructionError.
    """
    palette = buckets * k
    used: dict[int, int] = defaultdict(int)
    out: dict[tuple[int, int], int] = {}
    for e, anchor in sorted(cross):
        c = used[anchor] + 1
        if c > palette:
            raise ConstructionError(
                f"vertex {anchor} has more than {palette} edges to color"
            )
        used[anchor] = c
        out[e] = first_color + (c - 1) // k
    return out


# ---------------------------------------------------------------------------
# coloring the small leftover part (Y or V0) with a fresh palette


def _component_bounded_search(edges: list[tuple[int, int]], num_colors: int,
                              n_bound: int, node_budget: int = 200_000
                              ) -> dict[tuple[int, int], int] | None:
    """Exhaustively color edges with num_colors so every monochromatic
    component stays below n_bound vertices; None if impossible or budget hit."""
    adj: list[dict[int, set[int]]] = [dict() for _ in range(num_colors + 1)]
    out: dict[tuple[int, int], int] = {}
    nodes = 0

    def component_small(c: int, start: int) -> bool:
        seen = {start}
        stack = [start]
        a = adj[c]
        while stack:
            x = stack.pop()
            for y in a.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    if len(seen) >= n_bound:
                        return False
                    stack.append(y)
        return True

    def rec(i: int, used: int) -> bool:
        nonlocal nodes
        if i == len(edges):
            return True
        u, v = edges[i]
        for c in range(1, min(used + 1, num_colors) + 1):
            nodes += 1
            if nodes > node_budget:
                return False
            adj[c].setdefault(u, set()).add(v)
            adj[c].setdefault(v, set()).add(u)
            if component_small(c, u):
                out[edges[i]] = c
                if rec(i + 1, max(used, c)):
                    return True
                del out[edges[i]]
            adj[c][u].discard(v)
            adj[c][v].discard(u)
        return False

    return dict(out) if rec(0, 0) else None


def _color_small_part(g: Graph, vertices, n_bound: int, first_color: int,
                      num_colors: int, target: Graph | None = None
                      ) -> tuple[dict[tuple[int, int], int], str]:
    """Color the edges inside `vertices` with a fresh palette so that no
    color class has a connected component on n_bound or more vertices.

    Tries, in order: nothing to do; a single color (valid when the part is
    smaller than n_bound); an affine blow-up; a small exhaustive search;
    and, when a target is supplied, a target-free coloring search whose
    result is sound for the certificate even without the component bound.
    """
    vs = sorted(set(vertices))
    edges = edges_within(g, vs)
    if not edges:
        return {}, "empty"
    if len(vs) < n_bound:
        return {e: first_color for e in edges}, "single"
    if num_colors >= 3:
        q = q_for_ramsey(num_colors)
        s = (n_bound - 1) // q
        if s >= 1 and len(vs) <= q * q * s:
            plane = make_affine_plane(q)
            rank = {v: i for i, v in enumerate(vs)}
            out = {}
            for u, v in edges:
                cu, cv = rank[u] // s, rank[v] // s
                if cu == cv:
                    out[(u, v)] = first_color
                else:
                    out[(u, v)] = first_color + plane.class_of_pair(cu, cv)
            return out, "affine"
    if len(edges) <= 30:
        found = _component_bounded_search(edges, num_colors, n_bound)
        if found is not None:
            return ({e: first_color + c - 1 for e, c in found.items()},
                    "exhaustive")
    if target is not None:
        sub, mapping = induced_subgraph(g, vs)
        status, colors, _ = search_h_free_coloring(sub, target, num_colors,
                                                   node_budget=2_000_000)
        if status == "free" and colors is not None:
            out = {}
            for (a, b), c in colors.items():
                u, v = mapping[a], mapping[b]
                e = (u, v) if u < v else (v, u)
                out[e] = first_color + c - 1
            return out, "h_free"
    raise ConstructionError(
        f"cannot color a part of {len(vs)} vertices and {len(edges)} edges "
        f"with {num_colors} colors under component bound {n_bound}"
    )


# ---------------------------------------------------------------------------
# affine blow-up coloring of complete hosts


def affine_component_coloring(N: int, n: int, r: int
                              ) -> tuple[EdgeColoring, ColoringPlan]:
    """r-color K_N so every monochromatic component has fewer than n vertices.

    Points of AG(2, q) become cells of floor((n-1)/q) consecutive vertices;
    an edge between distinct cells takes the parallel class of the line
    through them, and edges inside a cell join the slope-0 class.  Every
    monochromatic component then lies inside one line's cell union, which
    has at most q*floor((n-1)/q) <= n-1 vertices.
    """
    if r < 3:
        raise DomainError(f"affine coloring needs r >= 3, got {r}")
    if n < 2:
        raise DomainError(f"component bound n must be >= 2, got {n}")
    q = q_for_ramsey(r)
    s = (n - 1) // q
    capacity = q * q * s
    host = complete_graph(N)
    plan = ColoringPlan(
        strategy="affine",
        parameters={"q": q, "cell_size": s, "capacity": capacity,
                    "n": n, "r": r},
    )
    if n < r * r:
        plan.parameters["below_recommended_n"] = True
        warnings.warn(
            f"affine coloring called with n={n} below the guidance n >= r^2 = {r * r}",
            RuntimeWarning,
            stacklevel=2,
        )
    if N <= 1:
        return EdgeColoring(host, r), plan
    if N > capacity:
        raise CapacityError(
            f"K_{N} exceeds the blow-up of AG(2, {q}) with cells of {s}",
            max_value=capacity,
        )
    plane = make_affine_plane(q)
    colors = {}
    for u, v in host.edges:
        cu, cv = u // s, v // s
        if cu == cv:
            colors[(u, v)] = 1
        else:
            colors[(u, v)] = 1 + plane.class_of_pair(cu, cv)
    cells: dict[str, tuple[int, ...]] = {}
    for p in range((N + s - 1) // s):
        members = tuple(range(p * s, min((p + 1) * s, N)))
        if members:
            cells[f"cell_{p}"] = members
    plan.parts = cells
    return EdgeColoring(host, r, colors), plan


# ---------------------------------------------------------------------------
# the 2-color split construction


def beck_coloring(g: Graph, prof: BipartiteProfile
                  ) -> tuple[EdgeColoring, ColoringPlan]:
    """Red/blue coloring leaving no monochromatic H when e(g) < beta(H)/4.

    X collects the vertices of degree below delta1; edges across the X/Y
    split go red (1), edges inside either side go blue (2).  Requires the
    canonical profile orientation n1*delta1 >= n2*delta2, on which the
    counting argument depends.
    """
    if prof.n1 * prof.delta1 < prof.n2 * prof.delta2:
        raise DomainError("profile must be canonically oriented")
    x = frozenset(v for v in g.vertices() if g.degree(v) < prof.delta1)
    colors = {}
    for u, v in g.edges:
        cross = (u in x) != (v in x)
        colors[(u, v)] = 1 if cross else 2
    plan = ColoringPlan(
        strategy="beck",
        parts={"X": tuple(sorted(x)),
               "Y": tuple(sorted(set(g.vertices()) - x))},
        parameters={"delta1": prof.delta1,
                    "beta": prof.n1 * prof.delta1 + prof.n2 * prof.delta2},
    )
    return EdgeColoring(g, 2, colors), plan


# ---------------------------------------------------------------------------
# coloring against non-bipartite targets


def chi3_coloring(g: Graph, h: Graph, r: int, seed: int = 0,
                  max_retries: int = 1000) -> tuple[EdgeColoring, ColoringPlan]:
    """Color g with at most 3r colors leaving no monochromatic copy of a
    non-bipartite h, provided e(g) < r^2 e(h) / 4.

    High-degree vertices V0 are handled separately; one color isolates the
    bipartite V0/rest interface (no odd cycle fits there); the rest is
    randomly partitioned into q^2 cells of an affine plane and resampled
    until every line's cell union spans fewer than e(h) edges, after which
    coloring cross-cell edges by parallel class confines every
    monochromatic component to one such union.
    """
    if r < 2:
        raise DomainError(f"chi3 coloring needs r >= 2, got {r}")
    if not is_connected(h) or h.edge_count == 0:
        raise DomainError("target must be connected with at least one edge")
    if is_bipartite(h):
        raise DomainError("target must be non-bipartite; use a bipartite construction")
    m = h.edge_count
    bound = Fraction(r * r * m, 4)
    if g.edge_count >= bound:
        raise DomainError(
            f"host has {g.edge_count} edges; the construction needs fewer than {bound}"
        )
    v0 = sorted(v for v in g.vertices() if g.degree(v) ** 2 > r * r * m)
    rest = sorted(set(g.vertices()) - set(v0))
    colors: dict[tuple[int, int], int] = {}
    inner, inner_method = _color_small_part(
        g, v0, n_bound=h.vertex_count, first_color=1, num_colors=r, target=h
    )
    colors.update(inner)
    v0set = set(v0)
    for u, v in g.edges:
        if (u in v0set) != (v in v0set):
            colors[(u, v)] = r + 1
    # Las Vegas cell partition of the remaining vertices
    q = q_for_partition(r)
    assert r + q + 2 <= 3 * r, "partition palette exceeds the 3r budget"
    plane = make_affine_plane(q)
    lines_through: list[list[int]] = [[] for _ in range(q * q)]
    for lid, pts in enumerate(plane.lines):
        for p in pts:
            lines_through[p].append(lid)
    rest_edges = edges_within(g, rest)
    rng = random.Random(seed)
    cell: dict[int, int] = {}
    attempt = 0
    best_load = None
    ok = False
    while attempt < max_retries:
        attempt += 1
        cell = {v: rng.randrange(q * q) for v in rest}
        loads = [0] * len(plane.lines)
        for u, v in rest_edges:
            cu, cv = cell[u], cell[v]
            if cu == cv:
                for lid in lines_through[cu]:
                    loads[lid] += 1
            else:
                lid, _ = plane.line_through(cu, cv)
                loads[lid] += 1
        peak = max(loads, default=0)
        if best_load is None or peak < best_load:
            best_load = peak
        if peak < m:
            ok = True
            break
    if not ok:
        raise LasVegasError(
            f"no cell partition with all line loads below {m}",
            retries=max_retries,
            best=f"best peak line load {best_load}",
        )
    for u, v in rest_edges:
        cu, cv = cell[u], cell[v]
        if cu == cv:
            colors[(u, v)] = r + 2
        else:
            colors[(u, v)] = r + 2 + plane.class_of_pair(cu, cv)
    parts: dict[str, tuple[int, ...]] = {"V0": tuple(v0)}
    by_cell: dict[int, list[int]] = defaultdict(list)
    for v, c in cell.items():
        by_cell[c].append(v)
    for c in sorted(by_cell):
        parts[f"cell_{c}"] = tuple(sorted(by_cell[c]))
    plan = ColoringPlan(
        strategy="chi3",
        parts=parts,
        parameters={"q": q, "m": m, "r": r, "v0_method": inner_method,
                    "max_line_load": best_load},
        retries=attempt - 1,
    )
    return EdgeColoring(g, 3 * r, colors), plan


# ---------------------------------------------------------------------------
# bipartite constructions


def _oriented_delta_first(prof: BipartiteProfile) -> BipartiteProfile:
    return prof if prof.delta1 >= prof.delta2 else prof.swapped()


def _self_verify_or_fallback(g: Graph, coloring: EdgeColoring,
                             plan: ColoringPlan, target: Graph | None,
                             palette: int) -> EdgeColoring:
    """Check the finished coloring against the target and fall back to an
    exhaustive target-free coloring if a monochromatic copy slipped in.

    The primary constructions have narrow unsound regimes (mixed-role color
    classes); certificates stay sound because this check runs before any
    verdict is claimed.
    """
    if target is None:
        return coloring
    hit = mono_copy(coloring, target)
    if hit is None:
        return coloring
    plan.parameters["primary_witness_color"] = hit[0]
    status, colors, nodes = search_h_free_coloring(
        g, target, palette, node_budget=3_000_000
    )
    if status == "free" and colors is not None:
        plan.parameters["fallback"] = "h_free_search"
        return EdgeColoring(g, palette, colors)
    raise ConstructionError(
        f"construction left a monochromatic copy (color {hit[0]}) and the "
        f"exhaustive fallback ended with status {status!r} after {nodes} nodes"
    )


def weakbip_coloring(g: Graph, prof: BipartiteProfile, r: int, seed: int = 0,
                     max_retries: int = 1000, target: Graph | None = None
                     ) -> tuple[EdgeColoring, ColoringPlan]:
    """Color g with at most 2r colors against a bipartite non-star H,
    provided e(g) < r^2 (delta2 - 1)(n1 + n2) / 4 with delta2 = min degree.

    Low-degree vertices X get the bucket lemma over all their edges with
    width delta2 - 1; the few remaining vertices Y span few edges and get a
    fresh palette under the component bound n1 + n2.
    """
    if r < 2:
        raise DomainError(f"weakbip coloring needs r >= 2, got {r}")
    p = _oriented_delta_first(prof)
    if p.delta2 < 2:
        raise DomainError("target is a star; the star bound is exact instead")
    k = p.delta2 - 1
    bound = Fraction(r * r * k * (p.n1 + p.n2), 4)
    if g.edge_count >= bound:
        raise DomainError(
            f"host has {g.edge_count} edges; the construction needs fewer than {bound}"
        )
    x = frozenset(v for v in g.vertices() if g.degree(v) <= r * k - 1)
    y = sorted(set(g.vertices()) - x)
    if not Fraction(len(y)) < Fraction(r * (p.n1 + p.n2), 2):
        raise ConstructionError(
            f"{len(y)} high-degree vertices contradict the edge precondition"
        )
    bucket_col, bucket_plan = vizing_bucket_coloring(g, x, r, k)
    colors = dict(bucket_col.colors)
    y_colors, y_method = _color_small_part(
        g, y, n_bound=p.n1 + p.n2, first_color=r + 1, num_colors=r, target=target
    )
    colors.update(y_colors)
    coloring = EdgeColoring(g, 2 * r, colors)
    plan = ColoringPlan(
        strategy="weakbip",
        parts={"X": tuple(sorted(x)), "Y": tuple(y)},
        parameters={"k": k, "r": r, "y_method": y_method},
        aux={"bucket_plan": bucket_plan},
    )
    coloring = _self_verify_or_fallback(g, coloring, plan, target, 2 * r)
    return coloring, plan


def _chunk_partition(items: list[int], parts: int) -> list[list[int]]:
    """Deterministic split into `parts` consecutive chunks of near-equal size."""
    out: list[list[int]] = [[] for _ in range(parts)]
    for i, v in enumerate(items):
        out[i % parts].append(v)
    return out


def gen2_coloring(g: Graph, prof: BipartiteProfile, r: int, seed: int = 0,
                  max_retries: int = 1000, target: Graph | None = None,
                  case3_split: str | None = None
                  ) -> tuple[EdgeColoring, ColoringPlan]:
    """Color g with at most 8r colors against a bipartite non-star H,
    provided e(g) < r^2 (delta1 - 1) n1 / 4 in canonical orientation.

    Each edge role gets its own palette: intra-X buckets (1..r), the
    leftover Y part (r+1..2r), the X-to-Y interface (2r+1 up), and in the
    hardest case randomized block pairs (4r+1..8r) colored by the 2-color
    split, with the blocks of one matching pairwise vertex-disjoint so a
    connected monochromatic subgraph stays inside a single block.

    case3_split forces the subcase ("3.1" or "3.2") for testing; the
    natural dispatch picks 3.1 whenever 64 r^4 delta1^2 >= n1.
    """
    if r < 2:
        raise DomainError(f"gen2 coloring needs r >= 2, got {r}")
    if prof.n1 * prof.delta1 < prof.n2 * prof.delta2:
        raise DomainError("profile must be canonically oriented")
    if min(prof.delta1, prof.delta2) < 2 or min(prof.n1, prof.n2) < 2:
        raise DomainError("target is a star; the star bound is exact instead")
    n1, n2, d1, d2 = prof.n1, prof.n2, prof.delta1, prof.delta2
    k1 = d1 - 1
    bound = Fraction(r * r * k1 * n1, 4)
    if g.edge_count >= bound:
        raise DomainError(
            f"host has {g.edge_count} edges; the construction needs fewer than {bound}"
        )
    x = frozenset(v for v in g.vertices() if g.degree(v) <= r * k1 - 1)
    y = sorted(set(g.vertices()) - x)
    if not Fraction(len(y)) < Fraction(r * n1, 2):
        raise ConstructionError(
            f"{len(y)} high-degree vertices contradict the edge precondition"
        )
    colors: dict[tuple[int, int], int] = {}
    # intra-X buckets, colors 1..r
    inner_edges = edges_within(g, x)
    st = _proper_coloring(inner_edges, r * k1)
    for e, c in st.colors.items():
        colors[e] = (c - 1) // k1 + 1
    # inside Y, colors r+1..2r
    y_colors, y_method = _color_small_part(
        g, y, n_bound=n1 + n2, first_color=r + 1, num_colors=r, target=target
    )
    colors.update(y_colors)
    yset = set(y)
    cross = sorted(
        (e, e[0] if e[0] in x else e[1])
        for e in g.edges
        if (e[0] in x) != (e[1] in x)
    )
    parts: dict[str, tuple[int, ...]] = {
        "X": tuple(sorted(x)),
        "Y": tuple(y),
    }
    params: dict[str, object] = {"k": k1, "r": r, "y_method": y_method}
    retries = 0
    rng = random.Random(seed)
    if d1 <= d2:
        # Case 1: bucket the interface at width delta1 - 1, colors 2r+1..3r
        params["case"] = "1"
        colors.update(_distinct_cross_colors(cross, r, k1, 2 * r + 1))
    elif n1 <= n2:
        # Case 2: split Y into r parts below n1, color interface by part
        params["case"] = "2"
        chunks = _chunk_partition(y, r)
        if any(len(ch) > n1 - 1 for ch in chunks):
            raise ConstructionError("Y cannot be split into parts below n1")
        part_of = {v: i for i, ch in enumerate(chunks) for v in ch}
        for (u, v), anchor in cross:
            other = v if anchor == u else u
            colors[(u, v)] = 2 * r + 1 + part_of[other]
        for i, ch in enumerate(chunks):
            parts[f"Y_{i}"] = tuple(ch)
    else:
        # Case 3: delta1 > delta2 and n1 > n2
        k0 = d2 - 1
        x0 = frozenset(
            v for v in x
            if sum(1 for w in g.neighbors(v) if w in yset) <= r * k0 - 1
        )
        x1 = sorted(x - x0)
        parts["X0"] = tuple(sorted(x0))
        parts["X1"] = tuple(x1)
        cross_x0 = [(e, a) for e, a in cross if a in x0]
        cross_x1 = [(e, a) for e, a in cross if a not in x0]
        colors.update(_distinct_cross_colors(cross_x0, r, k0, 2 * r + 1))
        split = case3_split
        if split is None:
            split = "3.1" if 64 * r ** 4 * d1 * d1 >= n1 else "3.2"
        if split not in ("3.1", "3.2"):
            raise DomainError(f"case3_split must be '3.1' or '3.2', got {split!r}")
        params["case"] = split
        x1set = set(x1)
        if split == "3.1":
            # randomized 2r-partition of Y; every part below n1 and every
            # X1 vertex with below delta1 neighbors in each part
            ok = False
            best = None
            while retries < max_retries:
                retries += 1
                assign = {v: rng.randrange(2 * r) for v in y}
                sizes = [0] * (2 * r)
                for v in y:
                    sizes[assign[v]] += 1
                worst = max(sizes, default=0)
                good = worst <= n1 - 1
                if good:
                    for v in x1set:
                        counts = [0] * (2 * r)
                        for w in g.neighbors(v):
                            if w in yset:
                                counts[assign[w]] += 1
                        if max(counts, default=0) > d1 - 1:
                            good = False
                            worst = max(worst, max(counts))
                            break
                if best is None or worst < best:
                    best = worst
                if good:
                    ok = True
                    break
            if not ok:
                raise LasVegasError(
                    "no balanced Y partition found for the interface",
                    retries=max_retries,
                    best=f"best worst-part statistic {best}",
                )
            for (u, v), anchor in cross_x1:
                other = v if anchor == u else u
                colors[(u, v)] = 3 * r + 1 + assign[other]
            groups: dict[int, list[int]] = defaultdict(list)
            for v in y:
                groups[assign[v]].append(v)
            for i in sorted(groups):
                parts[f"Y_{i}"] = tuple(sorted(groups[i]))
        else:
            # Case 3.2: heavy Y0 toward X1 handled by an r-way split, the
            # remainder by 2r x 2r random blocks, one 2-color pair per
            # block matching
            b = n1 * d1 + n2 * d2
            thresh = Fraction(r, 2) * Fraction(d1 * n1, n2)
            y0 = sorted(
                v for v in y
                if sum(1 for w in g.neighbors(v) if w in x1set) >= thresh
            )
            y1 = sorted(set(y) - set(y0))
            parts["Y0"] = tuple(y0)
            parts["Y1"] = tuple(y1)
            if not Fraction(len(y0)) < Fraction(r * n2, 2):
                raise ConstructionError(
                    f"{len(y0)} heavy vertices contradict the edge precondition"
                )
            chunks = _chunk_partition(y0, r)
            if any(len(ch) > n2 - 1 for ch in chunks):
                raise ConstructionError("Y0 cannot be split into parts below n2")
            part_of = {v: i for i, ch in enumerate(chunks) for v in ch}
            y0set = set(y0)
            y1set = set(y1)
            block_edges = []
            for (u, v), anchor in cross_x1:
                other = v if anchor == u else u
                if other in y0set:
                    colors[(u, v)] = 3 * r + 1 + part_of[other]
                else:
                    block_edges.append(((u, v), anchor, other))
            # Las Vegas double partition: every block spans < beta/4 edges
            quarter = Fraction(b, 4)
            ok = False
            best = None
            ax: dict[int, int] = {}
            ay: dict[int, int] = {}
            while retries < max_retries:
                retries += 1
                ax = {v: rng.randrange(2 * r) for v in x1}
                ay = {v: rng.randrange(2 * r) for v in y1}
                loads: dict[tuple[int, int], int] = defaultdict(int)
                for _, anchor, other in block_edges:
                    loads[(ax[anchor], ay[other])] += 1
                peak = max(loads.values(), default=0)
                if best is None or peak < best:
                    best = peak
                if Fraction(peak) < quarter:
                    ok = True
                    break
            if not ok:
                raise LasVegasError(
                    "no block partition with all block loads below beta/4",
                    retries=max_retries,
                    best=f"best peak block load {best}",
                )
            # per-block degree-split 2-coloring on the pair owned by the
            # block's matching index
            deg_in_block: dict[tuple[int, int, int], int] = defaultdict(int)
            for (u, v), anchor, other in block_edges:
                key = (ax[anchor], ay[other])
                deg_in_block[(key[0], key[1], anchor)] += 1
                deg_in_block[(key[0], key[1], other)] += 1
            for (u, v), anchor, other in block_edges:
                i, j = ax[anchor], ay[other]
                mu = (i + j) % (2 * r)
                base = 4 * r + 2 * mu
                low_anchor = deg_in_block[(i, j, anchor)] < d1
                low_other = deg_in_block[(i, j, other)] < d1
                cross_split = low_anchor != low_other
                colors[(u, v)] = base + 1 if cross_split else base + 2
            for i in range(2 * r):
                parts[f"X1_{i}"] = tuple(sorted(v for v in x1 if ax.get(v) == i))
                parts[f"Y1_{i}"] = tuple(sorted(v for v in y1 if ay.get(v) == i))
    coloring = EdgeColoring(g, 8 * r, colors)
    plan = ColoringPlan(
        strategy="gen2",
        parts=parts,
        parameters=params,
        retries=retries if "case" in params and params["case"] in ("3.1", "3.2")
        else 0,
        aux={"proper_inner": dict(st.colors)},
    )
    coloring = _self_verify_or_fallback(g, coloring, plan, target, 8 * r)
    return coloring, plan


# ---------------------------------------------------------------------------
# double stars


def double_star_coloring(g: Graph, n: int, m: int, r: int, seed: int = 0,
                         max_retries: int = 1000
                         ) -> tuple[EdgeColoring, ColoringPlan]:
    """r-color g against the double star S_{n,m}, provided
    e(g) < (r^2 - 1)(nm + m^2)/16.

    Edges at low-degree vertices are bucketed at width m with floor(r/2)
    colors: any copy would need a center of per-color degree m+1 inside X,
    or its central edge entirely among the few high-degree vertices, whose
    span is colored with the remaining ceil(r/2) colors under the
    component bound n + m + 2.  Both exclusions are unconditional.
    """
    if not (n >= m >= 1):
        raise DomainError(f"double star needs n >= m >= 1, got ({n}, {m})")
    if r < 2:
        raise DomainError(f"double star coloring needs r >= 2, got {r}")
    bound = Fraction((r * r - 1) * (n * m + m * m), 16)
    if g.edge_count >= bound:
        raise DomainError(
            f"host has {g.edge_count} edges; the construction needs fewer than {bound}"
        )
    r_low = r // 2
    r_high = r - r_low
    x = frozenset(v for v in g.vertices() if g.degree(v) <= r_low * m - 1)
    y = sorted(set(g.vertices()) - x)
    assert Fraction(len(y)) < Fraction(r_high, 2) * (n + m), (
        "high-degree part larger than the edge count permits"
    )
    bucket_col, bucket_plan = vizing_bucket_coloring(g, x, r_low, m)
    colors = dict(bucket_col.colors)
    y_colors, y_method = _color_small_part(
        g, y, n_bound=n + m + 2, first_color=r_low + 1, num_colors=r_high,
        target=make_double_star(n, m),
    )
    colors.update(y_colors)
    plan = ColoringPlan(
        strategy="double_star",
        parts={"X": tuple(sorted(x)), "Y": tuple(y)},
        parameters={"n": n, "m": m, "r": r, "y_method": y_method},
        aux={"bucket_plan": bucket_plan},
    )
    return EdgeColoring(g, r, colors), plan


def double_star_2coloring(g: Graph, n: int, m: int
                          ) -> tuple[EdgeColoring, ColoringPlan]:
    """Red/blue coloring of g leaving no monochromatic S_{n,m}, provided
    e(g) < (n+1)(m+1)/2 + (m+1)^2/2.

    X holds the vertices of degree at most m.  Red crossing edges force a
    center into X with total degree at most m; blue components containing
    a central edge live inside Y, which the edge bound keeps below
    n + m + 2 vertices.
    """
    if not (n >= m >= 1):
        raise DomainError(f"double star needs n >= m >= 1, got ({n}, {m})")
    bound = Fraction((n + 1) * (m + 1), 2) + Fraction((m + 1) ** 2, 2)
    if g.edge_count >= bound:
        raise DomainError(
            f"host has {g.edge_count} edges; the construction needs fewer than {bound}"
        )
    x = frozenset(v for v in g.vertices() if g.degree(v) <= m)
    y = sorted(set(g.vertices()) - x)
    assert len(y) < n + m + 2, "high-degree part larger than the edge count permits"
    colors = {}
    for u, v in g.edges:
        cross = (u in x) != (v in x)
        colors[(u, v)] = 1 if cross else 2
    plan = ColoringPlan(
        strategy="double_star_2col",
        parts={"X": tuple(sorted(x)), "Y": tuple(y)},
        parameters={"n": n, "m": m},
    )
    return EdgeColoring(g, 2, colors), plan


# ---------------------------------------------------------------------------
# theorem-level wrappers that split r into the inner palette


def scaled_nonstar_coloring(g: Graph, h: Graph, r: int, seed: int = 0,
                            max_retries: int = 1000
                            ) -> tuple[EdgeColoring, ColoringPlan]:
    """At most r colors against any connected non-star h for r >= 6, via
    floor(r/3) inner colors (non-bipartite) or floor(r/2) (bipartite)."""
    if r < 6:
        raise DomainError(f"the scaled non-star coloring needs r >= 6, got {r}")
    if not is_connected(h) or h.edge_count == 0:
        raise DomainError("target must be connected with at least one edge")
    if is_bipartite(h):
        if is_star(h):
            raise DomainError("target is a star; the star bound is exact instead")
        inner = r // 2
        coloring, plan = weakbip_coloring(g, profile(h), inner, seed,
                                          max_retries, target=h)
    else:
        inner = r // 3
        coloring, plan = chi3_coloring(g, h, inner, seed, max_retries)
    plan.parameters["scaled_from_r"] = r
    plan.parameters["inner_r"] = inner
    return coloring, plan


def scaled_bipartite_coloring(g: Graph, h: Graph, r: int, seed: int = 0,
                              max_retries: int = 1000
                              ) -> tuple[EdgeColoring, ColoringPlan]:
    """At most r colors against a connected bipartite non-star h for
    r >= 16, via floor(r/8) inner colors in the general construction."""
    if r < 16:
        raise DomainError(f"the scaled bipartite coloring needs r >= 16, got {r}")
    if not is_connected(h) or not is_bipartite(h) or h.edge_count == 0:
        raise DomainError("target must be connected and bipartite")
    if is_star(h):
        raise DomainError("target is a star; the star bound is exact instead")
    inner = r // 8
    coloring, plan = gen2_coloring(g, profile(h), inner, seed, max_retries,
                                   target=h)
    plan.parameters["scaled_from_r"] = r
    plan.parameters["inner_r"] = inner
    return coloring, plan


# ---------------------------------------------------------------------------
# lower bounds


def lower_bound_value(h: Graph, r: int) -> tuple[Fraction, str]:
    """The best applicable size-Ramsey lower bound for h with r colors,
    as (exact fraction, tag).

    Stars get their exact formula.  Otherwise the maximum over every
    bound whose hypotheses h and r satisfy is returned, including the
    trivial edge count, with ties resolved toward the earlier tag in the
    candidate order.
    """
    if r < 1:
        raise DomainError(f"need r >= 1, got {r}")
    if h.edge_count == 0 or not is_connected(h):
        raise DomainError("lower bounds require a connected target with edges")
    m = h.edge_count
    bip = is_bipartite(h)
    if bip and is_star(h):
        return Fraction(r * (m - 1) + 1), "star_exact"
    cands: list[tuple[Fraction, str]] = [(Fraction(m), "trivial_edges")]
    if r >= 6:
        cands.append((Fraction(r * r * m, 64), "nonstar_edges"))
    if bip:
        b = beta(h)
        if r == 2:
            cands.append((Fraction(b, 4), "beck"))
        if r >= 16:
            cands.append((Fraction(r * r * b, 2048), "nonstar_beta"))
        ds = is_double_star(h)
        if ds is not None:
            n, mm = ds
            cands.append(
                (Fraction((r * r - 1) * (n * mm + mm * mm), 16), "double_star")
            )
            if r == 2:
                cands.append(
                    (Fraction(b, 4) + Fraction((mm + 1) ** 2, 2),
                     "double_star_2col")
                )
    best = cands[0]
    for cand in cands[1:]:
        if cand[0] > best[0]:
            best = cand
    return best


# ---------------------------------------------------------------------------
# certification entry points


STRATEGIES = (
    "beck",
    "weakbip",
    "gen2",
    "double_star",
    "double_star_2col",
    "chi3",
    "affine",
)


def strategy_bound(strategy: str, target: Graph, r: int) -> Fraction:
    """Edge threshold of a construction: hosts must stay strictly below it."""
    if strategy == "beck":
        return Fraction(beta(target), 4)
    if strategy == "double_star_2col":
        ds = is_double_star(target)
        if ds is None:
            raise DomainError("target is not a double star")
        n, m = ds
        return Fraction((n + 1) * (m + 1), 2) + Fraction((m + 1) ** 2, 2)
    if strategy == "double_star":
        ds = is_double_star(target)
        if ds is None:
            raise DomainError("target is not a double star")
        n, m = ds
        return Fraction((r * r - 1) * (n * m + m * m), 16)
    if strategy == "chi3":
        return Fraction(r * r * target.edge_count, 4)
    if strategy == "weakbip":
        p = _oriented_delta_first(profile(target))
        if p.delta2 < 2:
            raise DomainError("target is a star; the star bound is exact instead")
        return Fraction(r * r * (p.delta2 - 1) * (p.n1 + p.n2), 4)
    if strategy == "gen2":
        p = profile(target)
        if min(p.delta1, p.delta2) < 2:
            raise DomainError("target is a star; the star bound is exact instead")
        return Fraction(r * r * (p.delta1 - 1) * p.n1, 4)
    if strategy == "affine":
        q = q_for_ramsey(r)
        s = (target.vertex_count - 1) // q
        return Fraction(comb(q * q * s, 2) + 1)
    raise DomainError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")


def certify(strategy: str, host: Graph, target: Graph, r: int, seed: int = 0,
            max_retries: int = 1000, case3_split: str | None = None
            ) -> Certificate:
    """Run a construction on the host and verify the result exactly.

    The returned certificate's verdict is written only by the verifier;
    "verified" therefore always means an exact search found no
    monochromatic copy of the target.
    """
    if not is_connected(target) or target.edge_count == 0:
        raise DomainError("target must be connected with at least one edge")
    if strategy == "beck":
        coloring, plan = beck_coloring(host, profile(target))
        palette = 2
    elif strategy == "double_star_2col":
        ds = is_double_star(target)
        if ds is None:
            raise DomainError("target is not a double star")
        n, m = ds
        coloring, plan = double_star_2coloring(host, n, m)
        palette = 2
    elif strategy == "double_star":
        ds = is_double_star(target)
        if ds is None:
            raise DomainError("target is not a double star")
        n, m = ds
        coloring, plan = double_star_coloring(host, n, m, r, seed, max_retries)
        palette = r
    elif strategy == "chi3":
        coloring, plan = chi3_coloring(host, target, r, seed, max_retries)
        palette = 3 * r
    elif strategy == "weakbip":
        coloring, plan = weakbip_coloring(host, profile(target), r, seed,
                                          max_retries, target=target)
        palette = 2 * r
    elif strategy == "gen2":
        coloring, plan = gen2_coloring(host, profile(target), r, seed,
                                       max_retries, target=target,
                                       case3_split=case3_split)
        palette = 8 * r
    elif strategy == "affine":
        if host.edge_count != comb(host.vertex_count, 2):
            raise DomainError("the affine strategy requires a complete host")
        coloring, plan = affine_component_coloring(
            host.vertex_count, target.vertex_count, r
        )
        palette = r
    else:
        raise DomainError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    bound = strategy_bound(strategy, target, r)
    cert = Certificate(
        host=coloring.host,
        target=target,
        r=palette,
        coloring=coloring,
        plan=plan,
        claimed_bound=bound,
        theorem_tag=strategy,
        seed=seed,
    )
    return verify_certificate(cert)
