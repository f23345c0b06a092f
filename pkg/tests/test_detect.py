"""Tests for the fast pattern and family detector."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from turancycles.detect import (
    contains_disjoint_family,
    contains_pattern,
    family_present_with_edge,
    iter_pattern_witnesses,
)
from turancycles.hypergraph import new_hypergraph
from turancycles.oracle import oracle_contains, oracle_contains_pattern
from turancycles.patterns import (
    FamilySpec,
    PatternKind,
    build_linear_cycle,
    build_linear_path,
    validate_witness,
)
from turancycles.search import random_hypergraph


def F(*vals):
    return frozenset(vals)


def host(n, k, tuples):
    return new_hypergraph(n, k, [frozenset(t) for t in tuples])


small_hosts = st.integers(5, 9).flatmap(
    lambda n: st.lists(
        st.sets(st.integers(0, n - 1), min_size=3, max_size=3),
        min_size=3,
        max_size=9,
    ).map(lambda edges: new_hypergraph(n, 3, [frozenset(e) for e in edges]))
)


def test_planted_linear_cycle_found():
    for k in (3, 4):
        for length in (3, 4, 5):
            edges = build_linear_cycle(k, length)
            n = length * (k - 1)
            H = new_hypergraph(n, k, edges)
            w = contains_pattern(H, PatternKind.LINEAR_CYCLE, length)
            assert w is not None
            validate_witness(w, host=H)
            assert contains_pattern(H, PatternKind.MINIMAL_CYCLE, length) is not None
            assert contains_pattern(H, PatternKind.BERGE_CYCLE, length) is not None


def test_planted_linear_path_found():
    edges = build_linear_path(3, 4)
    H = new_hypergraph(9, 3, edges)
    w = contains_pattern(H, PatternKind.LINEAR_PATH, 4)
    assert w is not None
    validate_witness(w, host=H)
    assert contains_pattern(H, PatternKind.LINEAR_PATH, 5) is None


def test_star_has_no_minimal_cycle():
    """Edges through one vertex never make a cycle: that vertex would
    lie in every edge."""
    edges = [F(0, a, b) for a, b in [(1, 2), (2, 3), (3, 4), (1, 4), (2, 4)]]
    H = new_hypergraph(5, 3, edges)
    for length in (3, 4, 5):
        assert contains_pattern(H, PatternKind.MINIMAL_CYCLE, length) is None
        assert contains_pattern(H, PatternKind.LINEAR_CYCLE, length) is None
    # Berge cycles are fine with a popular vertex.
    assert contains_pattern(H, PatternKind.BERGE_CYCLE, 3) is not None


def test_star_has_no_long_linear_path():
    edges = [F(0, a, b) for a, b in [(1, 2), (3, 4), (5, 6), (7, 8)]]
    H = new_hypergraph(9, 3, edges)
    assert contains_pattern(H, PatternKind.LINEAR_PATH, 2) is not None
    assert contains_pattern(H, PatternKind.LINEAR_PATH, 3) is None


def test_minimal_cycle_on_six_vertices():
    """Three 4-edges pairwise overlapping in two vertices, no common one."""
    H = host(6, 4, [(0, 1, 2, 3), (2, 3, 4, 5), (0, 1, 4, 5)])
    w = contains_pattern(H, PatternKind.MINIMAL_CYCLE, 3)
    assert w is not None
    validate_witness(w, host=H)
    assert contains_pattern(H, PatternKind.LINEAR_CYCLE, 3) is None


def test_degenerate_three_edge_winding_rejected():
    """Three edges sharing a pair have a vertex in all of them, so no
    three-edge cycle of any accepted kind exists."""
    H = host(5, 4, [(0, 1, 2, 3), (0, 1, 2, 4), (0, 1, 3, 4)])
    assert contains_pattern(H, PatternKind.MINIMAL_CYCLE, 3) is None


def test_forbidden_vertices_respected():
    edges = build_linear_cycle(3, 3)
    H = new_hypergraph(6, 3, edges)
    assert contains_pattern(H, PatternKind.LINEAR_CYCLE, 3) is not None
    assert (
        contains_pattern(H, PatternKind.LINEAR_CYCLE, 3, forbidden_vertices=[0])
        is None
    )


def test_iter_witnesses_deterministic():
    cyc1 = build_linear_cycle(3, 3)
    cyc2 = [frozenset(v + 6 for v in e) for e in build_linear_cycle(3, 3)]
    H = new_hypergraph(12, 3, list(cyc1) + cyc2)
    first = [w.edges for w in iter_pattern_witnesses(H, PatternKind.LINEAR_CYCLE, 3)]
    second = [w.edges for w in iter_pattern_witnesses(H, PatternKind.LINEAR_CYCLE, 3)]
    assert first == second
    assert len(first) == 2
    for w in iter_pattern_witnesses(H, PatternKind.LINEAR_CYCLE, 3):
        validate_witness(w, host=H)


def test_length_validation():
    H = host(5, 3, [(0, 1, 2)])
    with pytest.raises(ValueError):
        contains_pattern(H, PatternKind.MINIMAL_CYCLE, 2)
    with pytest.raises(ValueError):
        contains_pattern(H, PatternKind.LINEAR_PATH, 0)


def test_disjoint_family_found_and_ordered():
    cyc1 = build_linear_cycle(3, 3)  # vertices 0..5
    cyc2 = [frozenset(v + 6 for v in e) for e in build_linear_cycle(3, 4)]
    H = new_hypergraph(14, 3, list(cyc1) + cyc2)
    spec = FamilySpec(
        k=3,
        components=(
            (PatternKind.LINEAR_CYCLE, 4),
            (PatternKind.MINIMAL_CYCLE, 3),
        ),
    )
    fam = contains_disjoint_family(H, spec)
    assert fam is not None
    assert [w.length for w in fam] == [4, 3]
    assert fam[0].kind is PatternKind.LINEAR_CYCLE
    assert fam[1].kind is PatternKind.MINIMAL_CYCLE
    used = set()
    for w in fam:
        validate_witness(w, host=H)
        assert not (w.vertex_set() & used)
        used |= w.vertex_set()


def test_disjoint_family_absent_when_cycles_share_vertices():
    cyc1 = build_linear_cycle(3, 3)
    # Second cycle reuses vertex 0, and no other cycles exist.
    cyc2 = [F(0, 6, 7), F(7, 8, 9), F(9, 10, 0)]
    H = new_hypergraph(11, 3, list(cyc1) + cyc2)
    spec = FamilySpec(
        k=3,
        components=(
            (PatternKind.LINEAR_CYCLE, 3),
            (PatternKind.LINEAR_CYCLE, 3),
        ),
    )
    # The two planted cycles overlap; whether some other disjoint pair
    # hides in the union is decided by the oracle, not assumed.
    assert (contains_disjoint_family(H, spec) is not None) == oracle_contains(
        H, spec
    )


def test_family_uniformity_mismatch():
    H = host(5, 3, [(0, 1, 2)])
    spec = FamilySpec(k=4, components=((PatternKind.MINIMAL_CYCLE, 3),))
    with pytest.raises(ValueError):
        contains_disjoint_family(H, spec)


def test_family_capacity_shortcut():
    """A family needing more vertices than the host has is absent."""
    H = new_hypergraph(8, 3, build_linear_cycle(3, 4))
    spec = FamilySpec(
        k=3,
        components=(
            (PatternKind.LINEAR_CYCLE, 3),
            (PatternKind.LINEAR_CYCLE, 3),
        ),
    )
    assert contains_disjoint_family(H, spec) is None


def test_family_present_with_edge_distinguishes_edges():
    cyc = build_linear_cycle(3, 3)  # vertices 0..5
    lonely = F(6, 7, 8)
    H = new_hypergraph(9, 3, list(cyc) + [lonely])
    spec = FamilySpec(k=3, components=((PatternKind.LINEAR_CYCLE, 3),))
    for e in cyc:
        assert family_present_with_edge(H, spec, e)
    assert not family_present_with_edge(H, spec, lonely)


def test_family_present_with_edge_requires_known_edge():
    H = host(5, 3, [(0, 1, 2)])
    spec = FamilySpec(k=3, components=((PatternKind.LINEAR_PATH, 1),))
    with pytest.raises(ValueError):
        family_present_with_edge(H, spec, F(2, 3, 4))


def test_family_present_with_edge_two_components():
    cyc1 = build_linear_cycle(3, 3)
    cyc2 = [frozenset(v + 6 for v in e) for e in build_linear_cycle(3, 3)]
    stray = F(0, 6, 11)
    H = new_hypergraph(12, 3, list(cyc1) + cyc2 + [stray])
    spec = FamilySpec(
        k=3,
        components=(
            (PatternKind.LINEAR_CYCLE, 3),
            (PatternKind.LINEAR_CYCLE, 3),
        ),
    )
    for e in list(cyc1) + cyc2:
        assert family_present_with_edge(H, spec, e)
    # The stray edge crosses both cycles, so no disjoint pair uses it.
    assert not family_present_with_edge(H, spec, stray)


@given(small_hosts)
@settings(max_examples=120, deadline=None)
def test_detector_matches_oracle_on_random_hosts(H):
    for kind in PatternKind:
        lengths = (3, 4) if kind.is_cycle else (2, 3)
        for ell in lengths:
            fast = contains_pattern(H, kind, ell)
            slow = oracle_contains_pattern(H, kind, ell)
            assert (fast is not None) == slow
            if fast is not None:
                validate_witness(fast, host=H)


@given(small_hosts)
@settings(max_examples=60, deadline=None)
def test_family_detector_matches_oracle(H):
    spec = FamilySpec(
        k=3,
        components=(
            (PatternKind.MINIMAL_CYCLE, 3),
            (PatternKind.LINEAR_PATH, 2),
        ),
    )
    fam = contains_disjoint_family(H, spec)
    assert (fam is not None) == oracle_contains(H, spec)
    if fam is not None:
        used = set()
        for w in fam:
            validate_witness(w, host=H)
            assert not (w.vertex_set() & used)
            used |= w.vertex_set()


@given(small_hosts)
@settings(max_examples=40, deadline=None)
def test_family_present_with_edge_never_exceeds_presence(H):
    spec = FamilySpec(k=3, components=((PatternKind.BERGE_CYCLE, 3),))
    present = contains_disjoint_family(H, spec) is not None
    flags = [family_present_with_edge(H, spec, e) for e in H.edges]
    if not present:
        assert not any(flags)
    else:
        assert any(flags)


def test_berge_path_found_where_linear_fails():
    """Two edges sharing two vertices form a Berge path but not a
    linear one."""
    H = host(5, 3, [(0, 1, 2), (1, 2, 3)])
    assert contains_pattern(H, PatternKind.BERGE_PATH, 2) is not None
    assert contains_pattern(H, PatternKind.LINEAR_PATH, 2) is None


def test_meeting_family_bigger_cycles_absent():
    """Hosts meeting a small core set cannot hold long disjoint unions."""
    from turancycles.constructions import build_minimal_extremal

    H = build_minimal_extremal(12, 4, (3, 3))
    spec = FamilySpec(
        k=4,
        components=(
            (PatternKind.MINIMAL_CYCLE, 3),
            (PatternKind.MINIMAL_CYCLE, 3),
        ),
    )
    assert contains_disjoint_family(H, spec) is None
    single = FamilySpec(k=4, components=((PatternKind.MINIMAL_CYCLE, 3),))
    assert contains_disjoint_family(H, single) is not None
