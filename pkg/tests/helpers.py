"""Shared test utilities: networkx bridges, a vectorized brute-force
embedding oracle, and random instance generators for the coloring
constructions.

The oracle here is deliberately independent of the package's own search:
it materializes every injective vertex map as a numpy array and checks all
target edges at once, so agreement between the two is meaningful evidence.
"""

import itertools
import warnings
from fractions import Fraction
from functools import lru_cache

import numpy as np

from sizeramsey import (
    Graph,
    certify,
    complete_bipartite,
    cycle_graph,
    make_double_star,
    path_graph,
    q_for_ramsey,
    star,
    strategy_bound,
)


def to_networkx(g: Graph):
    import networkx as nx

    out = nx.Graph()
    out.add_nodes_from(range(g.vertex_count))
    out.add_edges_from(g.edges)
    return out


def from_networkx(nxg) -> Graph:
    nodes = sorted(nxg.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph(len(nodes), [(index[u], index[v]) for u, v in nxg.edges()])


def adjacency_matrix(g: Graph) -> np.ndarray:
    mat = np.zeros((g.vertex_count, g.vertex_count), dtype=bool)
    for u, v in g.edges:
        mat[u, v] = mat[v, u] = True
    return mat


@lru_cache(maxsize=None)
def injection_table(n_host: int, n_target: int) -> np.ndarray:
    """All injections [n_target] -> [n_host] as an array of rows."""
    perms = list(itertools.permutations(range(n_host), n_target))
    return np.array(perms, dtype=np.intp).reshape(len(perms), n_target)


def has_injection(host_mat: np.ndarray, target: Graph) -> bool:
    """Ground truth for subgraph containment by exhaustive injective maps."""
    n_host = host_mat.shape[0]
    if target.vertex_count > n_host:
        return False
    if target.edge_count == 0:
        return True
    rows = injection_table(n_host, target.vertex_count)
    alive = np.ones(len(rows), dtype=bool)
    for a, b in target.sorted_edges():
        alive &= host_mat[rows[:, a], rows[:, b]]
        if not alive.any():
            return False
    return True


def check_plane_axioms(plane) -> None:
    """Full incidence-axiom suite for an affine plane of order q."""
    q = plane.q
    points = range(plane.point_count)
    assert plane.point_count == q * q
    assert len(plane.lines) == q * q + q
    assert len(plane.classes) == q + 1
    for line in plane.lines:
        assert len(line) == q
    # every pair of distinct points lies on exactly one common line
    on_lines = [set() for _ in points]
    for lid, line in enumerate(plane.lines):
        for p in line:
            on_lines[p].add(lid)
    for p1, p2 in itertools.combinations(points, 2):
        common = on_lines[p1] & on_lines[p2]
        assert len(common) == 1, (p1, p2, sorted(common))
        lid = next(iter(common))
        assert plane.line_through(p1, p2)[0] == lid
    # each parallel class partitions the point set
    for cls in plane.classes:
        assert len(cls) == q
        covered = sorted(p for lid in cls for p in plane.lines[lid])
        assert covered == list(points)
    # the classes partition the line set
    all_lines = sorted(lid for cls in plane.classes for lid in cls)
    assert all_lines == list(range(len(plane.lines)))


def check_embedding(host: Graph, target: Graph, emb: dict) -> None:
    assert sorted(emb) == list(range(target.vertex_count))
    assert len(set(emb.values())) == target.vertex_count
    for u, v in target.edges:
        assert host.has_edge(emb[u], emb[v]), (u, v, emb)


# ---------------------------------------------------------------------------
# random graphs


def strict_floor(bound: Fraction) -> int:
    """Largest integer strictly below a positive fraction."""
    return (bound.numerator - 1) // bound.denominator


def random_graph(rng, n: int, e: int) -> Graph:
    pool = list(itertools.combinations(range(n), 2))
    return Graph(n, rng.sample(pool, min(e, len(pool))))


def random_gnp(rng, n: int, p: float) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)


def random_connected(rng, n: int, p: float, tries: int = 200) -> Graph:
    from sizeramsey import is_connected

    for _ in range(tries):
        g = random_gnp(rng, n, p)
        if is_connected(g):
            return g
    # fall back to a random tree plus noise; still a fair sample of the
    # connected population, just with a different density profile
    g = random_tree(rng, n)
    extra = [e for e in itertools.combinations(range(n), 2)
             if rng.random() < p and e not in g.edges]
    return Graph(n, list(g.edges) + extra)


def random_tree(rng, n: int) -> Graph:
    if n <= 1:
        return Graph(n)
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return Graph(n, edges)


def wheel_graph(n: int) -> Graph:
    """Hub n-1 joined to every vertex of the cycle 0..n-2."""
    rim = [(i, (i + 1) % (n - 1)) for i in range(n - 1)]
    return Graph(n, rim + [(i, n - 1) for i in range(n - 1)])


# the 9-vertex bipartite target whose profile has delta1 > delta2 and
# n1 > n2 in canonical orientation, exercising the hardest split case
CASE3_TARGET = Graph(
    9,
    [(0, 5), (0, 6), (0, 7), (0, 8),
     (1, 5), (1, 6),
     (2, 7), (2, 8),
     (3, 5), (3, 7),
     (4, 6), (4, 8)],
)


# ---------------------------------------------------------------------------
# instance generators for the coloring constructions


BIPARTITE_POOL = [
    path_graph(4),
    path_graph(6),
    cycle_graph(4),
    cycle_graph(6),
    complete_bipartite(2, 3),
    complete_bipartite(3, 3),
    complete_bipartite(3, 4),
    make_double_star(2, 2),
    make_double_star(3, 3),
    make_double_star(4, 4),
    make_double_star(5, 3),
    CASE3_TARGET,
]

NONSTAR_BIPARTITE_POOL = [g for g in BIPARTITE_POOL]

NONBIPARTITE_POOL = [
    cycle_graph(3),
    cycle_graph(5),
    cycle_graph(7),
    Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    wheel_graph(5),
    wheel_graph(6),
]

BECK_POOL = BIPARTITE_POOL + [star(4), star(6), make_double_star(5, 5)]


def coloring_instance(strategy: str, rng) -> dict:
    """One random (host, target, r, ...) tuple satisfying the preconditions
    of the named construction, as kwargs for certify()."""
    if strategy == "beck":
        target = rng.choice(BECK_POOL)
        r = 2
    elif strategy == "weakbip":
        target = rng.choice(NONSTAR_BIPARTITE_POOL)
        r = rng.randint(2, 4)
    elif strategy == "gen2":
        target = rng.choice(NONSTAR_BIPARTITE_POOL)
        r = rng.randint(2, 4)
    elif strategy == "double_star":
        n, m = rng.randint(1, 5), rng.randint(1, 5)
        r = rng.randint(3, 6)
        target = make_double_star(n, m)
    elif strategy == "double_star_2col":
        n, m = rng.randint(1, 6), rng.randint(1, 6)
        r = 2
        target = make_double_star(n, m)
    elif strategy == "chi3":
        target = rng.choice(NONBIPARTITE_POOL)
        r = rng.randint(2, 4)
    elif strategy == "affine":
        r = rng.randint(3, 6)
        q = q_for_ramsey(r)
        n = rng.randint(q + 1, 14)
        cap = q * q * ((n - 1) // q)
        big = rng.randint(2, min(cap, 18))
        from sizeramsey import complete_graph

        return {
            "strategy": "affine",
            "host": complete_graph(big),
            "target": path_graph(n),
            "r": r,
            "seed": rng.randrange(2**30),
        }
    else:
        raise ValueError(strategy)
    bound = strategy_bound(strategy, target, r)
    e_cap = strict_floor(bound)
    n_host = rng.randint(3, 12)
    host = random_graph(rng, n_host, rng.randint(0, e_cap))
    return {
        "strategy": strategy,
        "host": host,
        "target": target,
        "r": r,
        "seed": rng.randrange(2**30),
    }


def run_instance(kwargs: dict):
    """certify() with the affine small-n guidance warning silenced."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        return certify(**kwargs)
