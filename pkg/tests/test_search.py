"""Tests for the exact search on small hosts."""

import math
from itertools import combinations

import pytest

from turancycles.detect import contains_disjoint_family
from turancycles.hypergraph import new_hypergraph
from turancycles.oracle import oracle_contains
from turancycles.patterns import FamilySpec, PatternKind
from turancycles.search import (
    SearchBudget,
    max_edges_avoiding,
    random_hypergraph,
    saturation_fraction,
)


def brute_force_max(n, k, spec):
    """Reference maximum by trying all edge subsets, largest first."""
    pool = [frozenset(c) for c in combinations(range(n), k)]
    best = 0
    best_host = None
    for mask in range(1 << len(pool)):
        chosen = [pool[i] for i in range(len(pool)) if (mask >> i) & 1]
        if len(chosen) <= best:
            continue
        H = new_hypergraph(n, k, chosen)
        if not oracle_contains(H, spec):
            best = len(chosen)
            best_host = H
    return best, best_host


def test_exhaustive_value_five_four():
    """On 5 vertices with 4-sets, every three edges share two vertices,
    so no three-edge cycle is apex-free and all five edges survive."""
    spec = FamilySpec(k=4, components=((PatternKind.MINIMAL_CYCLE, 3),))
    res = max_edges_avoiding(5, 4, spec)
    assert res.exhaustive
    assert res.max_edges == 5
    ref, _ = brute_force_max(5, 4, spec)
    assert res.max_edges == ref


def test_exhaustive_matches_brute_force_on_triples():
    spec = FamilySpec(k=3, components=((PatternKind.MINIMAL_CYCLE, 3),))
    res = max_edges_avoiding(5, 3, spec)
    ref, _ = brute_force_max(5, 3, spec)
    assert res.exhaustive
    assert res.max_edges == ref


def test_exhaustive_berge_matches_brute_force():
    spec = FamilySpec(k=3, components=((PatternKind.BERGE_CYCLE, 3),))
    res = max_edges_avoiding(5, 3, spec)
    ref, _ = brute_force_max(5, 3, spec)
    assert res.exhaustive
    assert res.max_edges == ref


def test_witness_host_is_free_and_maximal_size():
    spec = FamilySpec(k=3, components=((PatternKind.LINEAR_CYCLE, 3),))
    res = max_edges_avoiding(6, 3, spec)
    assert res.exhaustive
    assert len(res.witness) == res.max_edges
    H = new_hypergraph(6, 3, list(res.witness))
    assert contains_disjoint_family(H, spec) is None


def test_symmetry_toggle_agrees():
    spec = FamilySpec(k=3, components=((PatternKind.MINIMAL_CYCLE, 3),))
    fast = max_edges_avoiding(5, 3, spec)
    plain = max_edges_avoiding(
        5, 3, spec, budget=SearchBudget(symmetry_pruning=False)
    )
    assert fast.max_edges == plain.max_edges


def test_budget_cuts_off():
    spec = FamilySpec(k=3, components=((PatternKind.MINIMAL_CYCLE, 3),))
    res = max_edges_avoiding(6, 3, spec, budget=SearchBudget(max_nodes=3))
    assert not res.exhaustive
    assert res.nodes_explored <= 3
    # Whatever was found must still be family-free.
    H = new_hypergraph(6, 3, list(res.witness))
    assert contains_disjoint_family(H, spec) is None


def test_candidate_cap():
    spec = FamilySpec(k=3, components=((PatternKind.MINIMAL_CYCLE, 3),))
    with pytest.raises(ValueError):
        max_edges_avoiding(50, 3, spec)


def test_random_hypergraph_deterministic():
    a = random_hypergraph(8, 3, 10, seed=5)
    b = random_hypergraph(8, 3, 10, seed=5)
    c = random_hypergraph(8, 3, 10, seed=6)
    assert a == b
    assert a.num_edges == 10
    assert c.num_edges == 10


def test_random_hypergraph_too_many_edges():
    with pytest.raises(ValueError):
        random_hypergraph(5, 3, math.comb(5, 3) + 1, seed=0)


def test_saturation_on_extremal_host():
    from turancycles.constructions import build_minimal_extremal

    H = build_minimal_extremal(9, 4, (3,))
    spec = FamilySpec(k=4, components=((PatternKind.MINIMAL_CYCLE, 3),))
    frac = saturation_fraction(H, spec, sample_size=40, seed=3)
    assert 0.0 <= frac <= 1.0


def test_saturation_requires_free_host():
    cyc = new_hypergraph(
        6, 3, [frozenset(t) for t in [(0, 1, 2), (2, 3, 4), (4, 5, 0)]]
    )
    spec = FamilySpec(k=3, components=((PatternKind.LINEAR_CYCLE, 3),))
    with pytest.raises(ValueError):
        saturation_fraction(cyc, spec, sample_size=5, seed=0)


def test_saturation_complete_host_has_no_absent_edges():
    H = new_hypergraph(
        5, 4, [frozenset(c) for c in combinations(range(5), 4)]
    )
    spec = FamilySpec(k=4, components=((PatternKind.MINIMAL_CYCLE, 3),))
    frac = saturation_fraction(H, spec, sample_size=10, seed=0)
    assert frac == 0.0
