"""The lower-bound constructions and their certificates."""

import random
import warnings
from fractions import Fraction

import pytest

from sizeramsey import (
    CapacityError,
    ConstructionError,
    DomainError,
    EdgeColoring,
    Graph,
    STRATEGIES,
    affine_component_coloring,
    beck_coloring,
    certify,
    chi3_coloring,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    double_star_2coloring,
    double_star_coloring,
    gen2_coloring,
    lower_bound_value,
    make_double_star,
    max_mono_component,
    mono_copy,
    path_graph,
    profile,
    scaled_bipartite_coloring,
    scaled_nonstar_coloring,
    star,
    strategy_bound,
    vizing_bucket_coloring,
    weakbip_coloring,
)

import helpers


# ---------------------------------------------------------------------------
# bucket lemma


def per_color_degrees(coloring: EdgeColoring, v: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for (a, b), c in coloring.colors.items():
        if v in (a, b):
            out[c] = out.get(c, 0) + 1
    return out


def proper_on(colors: dict, edges) -> bool:
    at: dict[tuple[int, int], set] = {}
    for u, v in edges:
        c = colors[(u, v)]
        for w in (u, v):
            key = (w, c)
            if key in at:
                return False
            at[key] = {(u, v)}
    return True


def test_vizing_bucket_random_instances():
    rng = random.Random(20)
    for _ in range(100):
        n = rng.randint(3, 12)
        g = helpers.random_gnp(rng, n, rng.uniform(0.2, 0.8))
        r, k = rng.randint(1, 4), rng.randint(1, 3)
        x = frozenset(v for v in g.vertices() if g.degree(v) <= r * k - 1)
        coloring, plan = vizing_bucket_coloring(g, x, r, k)
        # every X-incident edge colored, nothing else
        for e in g.edges:
            touched = e[0] in x or e[1] in x
            assert (coloring.get(*e) is not None) == touched
        for v in x:
            for c, d in per_color_degrees(coloring, v).items():
                assert d <= k, (v, c, d)
        assert proper_on(plan.aux["proper"], plan.aux["inner_edges"])


def test_vizing_bucket_rejects_high_degree():
    g = star(5)
    with pytest.raises(ConstructionError) as err:
        vizing_bucket_coloring(g, {0}, 2, 2)  # degree 5 > 4
    assert "vertex 0" in str(err.value)
    with pytest.raises(DomainError):
        vizing_bucket_coloring(g, {9}, 2, 2)
    with pytest.raises(DomainError):
        vizing_bucket_coloring(g, {0}, 0, 2)


def test_vizing_bucket_tight_degree_fallback():
    # degree exactly r*k leaves no slack; the exhaustive fallback must
    # still deliver the bucket guarantee on small graphs
    g = complete_graph(4)
    x = frozenset(range(4))  # all degrees 3 = r*k
    coloring, plan = vizing_bucket_coloring(g, x, 3, 1)
    for v in x:
        for c, d in per_color_degrees(coloring, v).items():
            assert d <= 1
    assert plan.parameters["tight_degree_vertices"] == [0, 1, 2, 3]


def test_vizing_bucket_is_deterministic():
    g = helpers.random_gnp(random.Random(4), 10, 0.5)
    x = frozenset(v for v in g.vertices() if g.degree(v) <= 5)
    a, _ = vizing_bucket_coloring(g, x, 3, 2)
    b, _ = vizing_bucket_coloring(g, x, 3, 2)
    assert a.colors == b.colors


# ---------------------------------------------------------------------------
# affine blow-up


def test_affine_component_bound_base_case():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        coloring, plan = affine_component_coloring(8, 5, 3)
    comp = max_mono_component(coloring)
    assert set(comp) == {1, 2, 3}
    assert all(size < 5 for size in comp.values()), comp
    assert coloring.is_total()
    assert plan.parameters["q"] == 2


def test_affine_capacity_error():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        with pytest.raises(CapacityError) as err:
            affine_component_coloring(17, 5, 3)  # capacity 2^2 * 2 = 8
    assert err.value.max_value == 8


def test_affine_warns_below_guidance():
    with pytest.warns(RuntimeWarning):
        affine_component_coloring(4, 5, 3)  # n = 5 < r^2 = 9


def test_affine_trivial_and_domain_cases():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        coloring, _ = affine_component_coloring(1, 4, 3)
    assert coloring.host.vertex_count == 1
    with pytest.raises(DomainError):
        affine_component_coloring(5, 4, 2)  # r < 3
    with pytest.raises(DomainError):
        affine_component_coloring(5, 1, 3)  # n < 2


def test_affine_random_component_bounds():
    rng = random.Random(8)
    from sizeramsey import q_for_ramsey

    for _ in range(30):
        r = rng.randint(3, 8)
        q = q_for_ramsey(r)
        n = rng.randint(q + 1, 20)
        cap = q * q * ((n - 1) // q)
        big = rng.randint(2, min(cap, 24))
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RuntimeWarning)
            coloring, _ = affine_component_coloring(big, n, r)
        assert max(max_mono_component(coloring).values()) < n


# ---------------------------------------------------------------------------
# the individual constructions, spot checks


def test_beck_requires_canonical_orientation():
    # P5 has part products 6 and 4, so the swapped profile is rejected;
    # a complete bipartite profile would tie and stay legal either way
    prof = profile(path_graph(5))
    g = helpers.random_graph(random.Random(0), 6, 5)
    beck_coloring(g, prof)
    with pytest.raises(DomainError):
        beck_coloring(g, prof.swapped())


def test_beck_split_semantics():
    prof = profile(make_double_star(3, 3))  # delta1 = 4
    g = complete_bipartite(2, 3)
    coloring, plan = beck_coloring(g, prof)
    x = set(plan.parts["X"])
    assert x == set(g.vertices())  # all degrees below 4
    for e in g.edges:
        assert coloring.get(*e) == 2  # nothing crosses out of X
    assert coloring.r == 2


def test_chi3_rejects_bipartite_and_fat_hosts():
    with pytest.raises(DomainError):
        chi3_coloring(path_graph(4), cycle_graph(4), 3)
    with pytest.raises(DomainError):
        chi3_coloring(complete_graph(8), cycle_graph(3), 2)  # 28 >= 9


def test_chi3_is_seed_deterministic():
    g = helpers.random_graph(random.Random(1), 10, 10)
    a, plan_a = chi3_coloring(g, cycle_graph(3), 4, seed=7)
    b, plan_b = chi3_coloring(g, cycle_graph(3), 4, seed=7)
    assert a.colors == b.colors
    assert plan_a.retries == plan_b.retries
    assert a.r == 12


def test_weakbip_rejects_stars_and_fat_hosts():
    with pytest.raises(DomainError):
        weakbip_coloring(path_graph(3), profile(star(3)), 3)
    big = complete_graph(10)
    with pytest.raises(DomainError):
        weakbip_coloring(big, profile(cycle_graph(4)), 2)


def test_gen2_case_dispatch():
    rng = random.Random(2)
    # delta1 <= delta2 after canonical orientation: C6
    g = helpers.random_graph(rng, 8, helpers.strict_floor(
        strategy_bound("gen2", cycle_graph(6), 3)))
    _, plan = gen2_coloring(g, profile(cycle_graph(6)), 3,
                            target=cycle_graph(6))
    assert plan.parameters["case"] == "1"
    # delta1 > delta2, n1 <= n2: S_{4,2} orients to (3, 5, 5, 3)
    ds = make_double_star(4, 2)
    g2 = helpers.random_graph(rng, 9, helpers.strict_floor(
        strategy_bound("gen2", ds, 3)))
    _, plan2 = gen2_coloring(g2, profile(ds), 3, target=ds)
    assert plan2.parameters["case"] == "2"
    # delta1 > delta2 and n1 > n2
    t = helpers.CASE3_TARGET
    g3 = helpers.random_graph(rng, 10, helpers.strict_floor(
        strategy_bound("gen2", t, 2)))
    _, plan3 = gen2_coloring(g3, profile(t), 2, target=t)
    assert plan3.parameters["case"] == "3.1"  # natural dispatch at desk scale
    _, plan4 = gen2_coloring(g3, profile(t), 2, target=t, case3_split="3.2")
    assert plan4.parameters["case"] == "3.2"
    with pytest.raises(DomainError):
        gen2_coloring(g3, profile(t), 2, case3_split="nope")


def test_gen2_rejects_stars():
    with pytest.raises(DomainError):
        gen2_coloring(path_graph(3), profile(star(4)), 2)


def test_double_star_colorings():
    g = helpers.random_graph(random.Random(3), 8, 10)
    coloring, plan = double_star_coloring(g, 3, 3, 4)
    assert coloring.r == 4 and coloring.is_total()
    assert mono_copy(coloring, make_double_star(3, 3)) is None
    with pytest.raises(DomainError):
        double_star_coloring(g, 2, 3, 4)  # needs n >= m
    with pytest.raises(DomainError):
        double_star_coloring(complete_graph(10), 2, 2, 3)  # too many edges

    coloring2, _ = double_star_2coloring(g, 3, 3)
    assert coloring2.r == 2
    assert mono_copy(coloring2, make_double_star(3, 3)) is None
    with pytest.raises(DomainError):
        double_star_2coloring(complete_graph(10), 2, 2)


def test_scaled_wrappers():
    rng = random.Random(6)
    # bipartite branch routes through the half-palette construction
    t = complete_bipartite(3, 3)
    g = helpers.random_graph(rng, 10, helpers.strict_floor(
        strategy_bound("weakbip", t, 3)))
    coloring, plan = scaled_nonstar_coloring(g, t, 6)
    assert plan.parameters["inner_r"] == 3
    assert max(coloring.used_colors(), default=0) <= 6
    assert mono_copy(coloring, t) is None
    # non-bipartite branch uses a third of the palette
    c5 = cycle_graph(5)
    g2 = helpers.random_graph(rng, 8, helpers.strict_floor(
        Fraction(2 * 2 * 5, 4)))
    coloring2, plan2 = scaled_nonstar_coloring(g2, c5, 7)
    assert plan2.parameters["inner_r"] == 2
    assert max(coloring2.used_colors(), default=0) <= 6 <= 7
    assert mono_copy(coloring2, c5) is None
    with pytest.raises(DomainError):
        scaled_nonstar_coloring(g, t, 5)
    with pytest.raises(DomainError):
        scaled_nonstar_coloring(g, star(3), 6)

    g3 = helpers.random_graph(rng, 10, helpers.strict_floor(
        strategy_bound("gen2", t, 2)))
    coloring3, plan3 = scaled_bipartite_coloring(g3, t, 16)
    assert plan3.parameters["inner_r"] == 2
    assert max(coloring3.used_colors(), default=0) <= 16
    assert mono_copy(coloring3, t) is None
    with pytest.raises(DomainError):
        scaled_bipartite_coloring(g3, t, 15)
    with pytest.raises(DomainError):
        scaled_bipartite_coloring(g3, c5, 16)


# ---------------------------------------------------------------------------
# bounds


def test_lower_bound_star_formula():
    assert lower_bound_value(star(2), 2) == (Fraction(3), "star_exact")
    assert lower_bound_value(star(3), 2) == (Fraction(5), "star_exact")
    assert lower_bound_value(star(2), 3) == (Fraction(4), "star_exact")
    assert lower_bound_value(path_graph(3), 2) == (Fraction(3), "star_exact")


def test_lower_bound_worked_examples():
    assert lower_bound_value(path_graph(4), 2) == (Fraction(4), "double_star_2col")
    v, tag = lower_bound_value(path_graph(4), 16)
    assert tag == "double_star" and v == Fraction(255 * 2, 16)
    assert lower_bound_value(make_double_star(3, 3), 2)[0] == Fraction(16)
    # non-bipartite small r falls back to the edge count
    assert lower_bound_value(cycle_graph(5), 3) == (Fraction(5), "trivial_edges")
    v2, tag2 = lower_bound_value(cycle_graph(5), 12)
    assert tag2 == "nonstar_edges" and v2 == Fraction(144 * 5, 64)
    with pytest.raises(DomainError):
        lower_bound_value(Graph(3, [(0, 1)]), 2)
    with pytest.raises(DomainError):
        lower_bound_value(path_graph(4), 0)


def test_lower_bound_beats_trivial_eventually():
    # the quadratic-in-r bounds dominate the edge count for large r
    h = complete_bipartite(3, 3)
    small = lower_bound_value(h, 2)[0]
    large = lower_bound_value(h, 40)[0]
    assert large > small >= h.edge_count / 2


def test_strategy_bound_errors():
    with pytest.raises(DomainError):
        strategy_bound("double_star", cycle_graph(4), 3)
    with pytest.raises(DomainError):
        strategy_bound("weakbip", star(3), 3)
    with pytest.raises(DomainError):
        strategy_bound("bogus", path_graph(4), 2)


# ---------------------------------------------------------------------------
# certification


def test_certify_runs_every_strategy():
    rng = random.Random(0xFEED)
    for strategy in STRATEGIES:
        for _ in range(12):
            kwargs = helpers.coloring_instance(strategy, rng)
            cert = helpers.run_instance(kwargs)
            assert cert.verdict == "verified", (strategy, kwargs)
            assert cert.plan.strategy == strategy
            assert cert.host.edge_count < cert.claimed_bound


def test_certify_is_seed_deterministic():
    from sizeramsey import certificate_to_json

    rng = random.Random(42)
    kwargs = helpers.coloring_instance("chi3", rng)
    a = certificate_to_json(helpers.run_instance(kwargs))
    b = certificate_to_json(helpers.run_instance(kwargs))
    assert a == b


def test_certify_rejects_bad_inputs():
    with pytest.raises(DomainError):
        certify("unknown", path_graph(3), path_graph(4), 2)
    with pytest.raises(DomainError):
        certify("beck", path_graph(3), Graph(3), 2)
    with pytest.raises(DomainError):
        certify("double_star", path_graph(3), cycle_graph(4), 3)
    with pytest.raises(DomainError):
        certify("affine", path_graph(5), path_graph(5), 3)  # host not complete


def test_certify_affine_records_component_bound():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        cert = certify("affine", complete_graph(8), path_graph(5), 3)
    assert cert.verdict == "verified"
    assert cert.plan.parameters["n"] == 5
    assert max(max_mono_component(cert.coloring).values()) < 5
