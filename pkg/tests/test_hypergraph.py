"""Tests for the core hypergraph container and edge-list round trips."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from turancycles.hypergraph import (
    EdgeIndex,
    EdgeListParseError,
    UniformityError,
    VertexRangeError,
    are_isomorphic,
    find_pair_sharing_exactly_one,
    new_hypergraph,
    parse_edge_list,
    relabel_maps,
    remove_vertices,
    write_edge_list,
)


def host(n, k, tuples):
    return new_hypergraph(n, k, [frozenset(t) for t in tuples])


def random_host(draw_n, draw_k, draw_edges):
    return new_hypergraph(draw_n, draw_k, [frozenset(e) for e in draw_edges])


hosts = st.integers(4, 9).flatmap(
    lambda n: st.integers(2, min(4, n)).flatmap(
        lambda k: st.lists(
            st.sets(st.integers(0, n - 1), min_size=k, max_size=k),
            max_size=12,
        ).map(lambda edges: new_hypergraph(n, k, [frozenset(e) for e in edges]))
    )
)


def test_basic_properties():
    H = host(6, 3, [(0, 1, 2), (2, 3, 4), (0, 4, 5)])
    assert H.n == 6
    assert H.k == 3
    assert H.num_edges == 3
    assert H.degree(0) == 2
    assert H.degree(5) == 1
    assert frozenset({0, 1, 2}) in H.edge_set


def test_duplicate_edges_are_dropped():
    H = host(5, 3, [(0, 1, 2), (2, 1, 0), (1, 2, 3)])
    assert H.num_edges == 2


def test_uniformity_rejected():
    with pytest.raises(UniformityError):
        new_hypergraph(5, 3, [frozenset({0, 1})])


def test_vertex_out_of_range_rejected():
    with pytest.raises(VertexRangeError):
        host(4, 3, [(0, 1, 4)])
    with pytest.raises(VertexRangeError):
        host(4, 3, [(-1, 1, 2)])


def test_bool_vertices_rejected():
    with pytest.raises(VertexRangeError):
        new_hypergraph(4, 3, [frozenset({True, 2, 3})])


def test_invalid_shape_parameters():
    with pytest.raises(ValueError):
        new_hypergraph(-1, 3, [])
    with pytest.raises(ValueError):
        new_hypergraph(4, 0, [])


def test_equality_ignores_edge_order():
    a = host(5, 3, [(0, 1, 2), (1, 2, 3)])
    b = host(5, 3, [(1, 2, 3), (0, 1, 2)])
    assert a == b
    assert hash(a) == hash(b)
    assert a != host(5, 3, [(0, 1, 2)])


def test_relabel_maps():
    old_to_new, new_to_old = relabel_maps(5, {1, 3})
    assert old_to_new == {0: 0, 2: 1, 4: 2}
    assert new_to_old == [0, 2, 4]


def test_remove_vertices_drops_touching_edges():
    H = host(6, 3, [(0, 1, 2), (2, 3, 4), (3, 4, 5)])
    smaller = remove_vertices(H, {0})
    assert smaller.n == 5
    # Only the two edges avoiding vertex 0 survive, relabeled down.
    assert smaller.num_edges == 2
    assert frozenset({1, 2, 3}) in smaller.edge_set


def test_remove_no_vertices_is_identity():
    H = host(5, 3, [(0, 1, 2), (2, 3, 4)])
    assert remove_vertices(H, set()) == H


def test_find_pair_sharing_exactly_one():
    H = host(6, 3, [(0, 1, 2), (0, 1, 3), (3, 4, 5)])
    # Edges 0 and 1 share two vertices; 1 and 2 share exactly one.
    assert find_pair_sharing_exactly_one(H) == (1, 2)
    free = host(6, 3, [(0, 1, 2), (0, 1, 3), (0, 1, 4)])
    assert find_pair_sharing_exactly_one(free) is None


def test_isomorphic_relabel():
    a = host(5, 3, [(0, 1, 2), (2, 3, 4)])
    b = host(5, 3, [(4, 3, 2), (2, 1, 0)])
    assert are_isomorphic(a, b)


def test_not_isomorphic_different_profile():
    a = host(5, 3, [(0, 1, 2), (0, 1, 3)])
    b = host(5, 3, [(0, 1, 2), (2, 3, 4)])
    assert not are_isomorphic(a, b)


def test_not_isomorphic_different_sizes():
    a = host(5, 3, [(0, 1, 2)])
    b = host(6, 3, [(0, 1, 2)])
    assert not are_isomorphic(a, b)


@given(hosts, st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_isomorphic_under_random_permutation(H, rng):
    perm = list(range(H.n))
    rng.shuffle(perm)
    permuted = new_hypergraph(
        H.n, H.k, [frozenset(perm[v] for v in e) for e in H.edges]
    )
    assert are_isomorphic(H, permuted)


@given(hosts)
@settings(max_examples=80, deadline=None)
def test_edge_list_round_trip(H):
    assert parse_edge_list(write_edge_list(H)) == H


def test_parse_rejects_bad_header():
    with pytest.raises(EdgeListParseError):
        parse_edge_list("3 5\n0 1 2\n")


def test_parse_rejects_wrong_arity_line():
    text = "3 5 1\n0 1\n"
    with pytest.raises(EdgeListParseError) as err:
        parse_edge_list(text)
    assert err.value.line == 2


def test_parse_rejects_repeated_vertex_in_edge():
    with pytest.raises(EdgeListParseError):
        parse_edge_list("3 5 1\n0 1 1\n")


def test_parse_rejects_non_integer():
    with pytest.raises(EdgeListParseError):
        parse_edge_list("3 5 1\n0 1 x\n")


def test_parse_rejects_vertex_out_of_range():
    with pytest.raises(EdgeListParseError):
        parse_edge_list("3 3 1\n0 1 3\n")


def test_parse_allows_comments_and_blank_lines():
    text = "# a host\n3 5 2\n\n0 1 2\n# middle\n2 3 4\n"
    H = parse_edge_list(text)
    assert H.num_edges == 2


@given(hosts)
@settings(max_examples=60, deadline=None)
def test_exact_one_masks_match_brute_force(H):
    """The prefix/suffix mask trick equals a plain pairwise scan."""
    ix = H.index
    for i, e in enumerate(H.edges):
        got = ix.exact_one_masks(i)
        assert set(got) == set(e)
        for v in e:
            expected = 0
            for j, f in enumerate(H.edges):
                if e & f == frozenset({v}):
                    expected |= 1 << j
            assert got[v] == expected
        union = 0
        for mask in got.values():
            union |= mask
        assert union == ix.exact_one_union(i)


def test_edge_index_touch():
    H = host(5, 3, [(0, 1, 2), (2, 3, 4), (0, 3, 4)])
    ix = H.index
    assert ix.touch(0) == 0b111  # every edge meets {0, 1, 2}
    assert ix.touch(1) == 0b111
    assert ix.all_edges_mask == 0b111
