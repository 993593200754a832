import itertools
from math import comb

import numpy as np
import pytest
from conftest import brute_force_automorphisms

from symbreak.coloring import Coloring, aqn_paper_coloring, is_distinguishing
from symbreak.graphs import (
    Graph,
    augmented_cube,
    complement_perfect_matching,
    complete_graph,
    graph_power,
    hypercube,
)
from symbreak.perm import BudgetExceeded, automorphism_group
from symbreak.solver import (
    SolveResult,
    closed_form,
    distinguishing_number,
    distinguishing_number_exhaustive,
    find_distinguishing_coloring,
    iter_distinguishing_colorings,
    lower_bound,
    matching_complement_distnum,
)

ASYMMETRIC6 = Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (3, 5)])

SMALL = [
    hypercube(2),
    hypercube(3),
    augmented_cube(3),
    complete_graph(4),
    complete_graph(5),
    ASYMMETRIC6,
    Graph.from_edges(8, [(i, (i + 1) % 8) for i in range(8)]),
    Graph.from_edges(7, [(0, i) for i in range(1, 4)] + [(4, 5)]),
    Graph.from_edges(6, [(i, i + 1) for i in range(5)]),
    complement_perfect_matching(6),
]


def oracle_distinguishing(g, r):
    """All r^n colorings, filtered against the brute-force automorphism set."""
    auts = np.array([a for a in brute_force_automorphisms(g) if list(a) != list(range(g.n_vertices))], dtype=np.intp)
    cols = np.array(list(itertools.product(range(1, r + 1), repeat=g.n_vertices)), dtype=np.int8)
    if len(auts) == 0:
        return cols
    broken = np.ones(len(cols), dtype=bool)
    for a in auts:
        broken &= ~(cols[:, a] == cols).all(axis=1)
    return cols[broken]


def first_use(colors, order):
    mapping = {}
    for v in order:
        mapping.setdefault(colors[v], len(mapping) + 1)
    return tuple(mapping[c] for c in colors)


@pytest.mark.parametrize("g", SMALL, ids=lambda g: f"{g.family}{g.n_vertices}-{g.n_edges}")
def test_canonical_enumeration_matches_full(g):
    n = g.n_vertices
    order = list(range(n))[::-1]
    for r in range(1, 4):
        full = oracle_distinguishing(g, r)
        expected = {first_use(tuple(c), order) for c in full.tolist()}
        got = [c.colors for c in iter_distinguishing_colorings(g, r, order=order)]
        assert len(got) == len(set(got))
        assert set(got) == expected


@pytest.mark.parametrize("g", SMALL, ids=lambda g: f"{g.family}{g.n_vertices}-{g.n_edges}")
def test_exhaustive_matches_oracle_minimum(g):
    n = g.n_vertices
    d = next(r for r in range(1, n + 1) if len(oracle_distinguishing(g, r)) > 0) if n <= 6 else None
    res = distinguishing_number_exhaustive(g)
    assert res.exact and res.method == "exhaustive"
    assert is_distinguishing(g, res.witness) and res.witness.r == res.value
    if d is not None:
        assert res.value == d
    # no distinguishing coloring with fewer colors
    if res.value > 1:
        assert next(iter_distinguishing_colorings(g, res.value - 1), None) is None


@pytest.mark.parametrize("g,d", [
    (complete_graph(4), 4),
    (augmented_cube(3), 3),
    (hypercube(2), 3),
    (hypercube(3), 3),
    (graph_power(hypercube(3), 2), 4),
    (augmented_cube(2), 4),
    (augmented_cube(1), 2),
    (ASYMMETRIC6, 1),
])
def test_exhaustive_examples(g, d):
    assert distinguishing_number_exhaustive(g).value == d


def test_aq3_has_no_distinguishing_two_coloring_at_all():
    g = augmented_cube(3)
    assert not any(is_distinguishing(g, c) for c in itertools.product((1, 2), repeat=8))


def test_aq2_equals_vertex_count():
    g = augmented_cube(2)
    assert distinguishing_number_exhaustive(g).value == g.n_vertices == 4


def test_bound_when_max_r_too_small():
    res = distinguishing_number_exhaustive(complete_graph(5), max_r=3)
    assert (res.lower, res.upper) == (4, 5) and res.value is None
    assert is_distinguishing(complete_graph(5), res.witness)


def test_size_guard():
    with pytest.raises(ValueError):
        distinguishing_number_exhaustive(hypercube(5))


def test_budget_abort():
    with pytest.raises(BudgetExceeded):
        distinguishing_number_exhaustive(complete_graph(8), budget=10)


@pytest.mark.parametrize("g", [hypercube(3), augmented_cube(3), complete_graph(4)], ids=repr)
def test_monotone_in_r(g):
    d = distinguishing_number_exhaustive(g).value
    for r in range(d, g.n_vertices + 1):
        c = next(iter_distinguishing_colorings(g, r), None)
        assert c is not None and is_distinguishing(g, c)


# -- witness strategies ------------------------------------------------------------

def test_explicit_strategy():
    c = find_distinguishing_coloring(augmented_cube(5), 2, "paper")
    assert c == aqn_paper_coloring(5)
    assert find_distinguishing_coloring(augmented_cube(3), 2, "paper") is None
    with pytest.raises(ValueError):
        find_distinguishing_coloring(hypercube(4), 2, "paper")


def test_strategy_errors():
    with pytest.raises(ValueError):
        find_distinguishing_coloring(hypercube(3), 2, "greedy")
    with pytest.raises(ValueError):
        find_distinguishing_coloring(hypercube(3), 0)


def test_asymmetric_graph_accepts_constant_coloring():
    for strategy in ("exhaustive", "random"):
        c = find_distinguishing_coloring(ASYMMETRIC6, 1, strategy, seed=3)
        assert c is not None and set(c.colors) == {1}


def test_random_witness_q5_cubed():
    g = graph_power(hypercube(5), 3)
    c = find_distinguishing_coloring(g, 2, "random", seed=1)
    assert c is not None and automorphism_group(g, c.colors).order() == 1


def test_random_determinism():
    g = augmented_cube(4)
    a = find_distinguishing_coloring(g, 2, "random", seed=11)
    b = find_distinguishing_coloring(g, 2, "random", seed=11)
    assert a == b


def test_random_failure_is_none():
    # K_4 needs 4 colors; 3 colors never work
    assert find_distinguishing_coloring(complete_graph(4), 3, "random", seed=0, budget=50) is None


def test_distinguishing_number_bracket():
    res = distinguishing_number(hypercube(5), 2, "random", seed=1)
    assert (res.lower, res.upper, res.value) == (2, 2, 2)
    assert res.method == "witness_plus_lower_bound"
    res = distinguishing_number(augmented_cube(4), 2, "paper")
    assert res.value == 2


@pytest.mark.parametrize("g,lb", [
    (ASYMMETRIC6, 1), (hypercube(4), 2), (augmented_cube(4), 2), (complete_graph(1), 1),
])
def test_lower_bound(g, lb):
    assert lower_bound(g) == lb


def test_solve_result_invariants():
    with pytest.raises(ValueError):
        SolveResult(3, 2)
    res = SolveResult(2, 3)
    assert res.value is None and not res.exact
    data = SolveResult(2, 2, Coloring([1, 2]), "exhaustive").to_json_dict(complete_graph(2))
    assert data["value"] == 2 and data["exact"] and "witness" in data


# -- closed forms ---------------------------------------------------------------------

def test_matching_complement_formula():
    assert matching_complement_distnum(2) == 3
    assert matching_complement_distnum(3) == 4
    assert matching_complement_distnum(4) == 5
    for n in range(2, 12):
        x = matching_complement_distnum(n)
        assert comb(x, 2) >= 2 ** (n - 1) > comb(x - 1, 2)
    with pytest.raises(ValueError):
        matching_complement_distnum(1)


def test_formula_agrees_with_search():
    assert distinguishing_number_exhaustive(graph_power(hypercube(3), 2)).value == matching_complement_distnum(3)
    # Q_2^1 is the 4-cycle, the matching complement on 4 vertices
    assert distinguishing_number_exhaustive(complement_perfect_matching(4)).value == matching_complement_distnum(2)
    assert distinguishing_number_exhaustive(complement_perfect_matching(8)).value == 4


def test_closed_form():
    assert closed_form(complete_graph(6)).value == 6
    assert closed_form(complement_perfect_matching(16)).value == 5
    assert closed_form(hypercube(3)) is None
