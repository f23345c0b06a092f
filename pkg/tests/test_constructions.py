"""Tests for extremal host constructions."""

import math

import pytest

from turancycles.constructions import (
    ConstructionSizeError,
    ConstructionSpec,
    InfeasibleConstructionError,
    build_construction,
    build_linear_extremal,
    build_meeting_family,
    build_minimal_extremal,
    build_path_extremal,
)
from turancycles.formulas import (
    linear_family_turan,
    linear_path_turan,
    minimal_family_turan,
)


def test_meeting_family_counts_and_shape():
    H = build_meeting_family(8, 3, (0, 1))
    assert H.num_edges == math.comb(8, 3) - math.comb(6, 3)
    for e in H.edges:
        assert e & {0, 1}


def test_meeting_family_empty_core():
    H = build_meeting_family(6, 3, ())
    assert H.num_edges == 0


def test_minimal_extremal_odd_lengths():
    H = build_minimal_extremal(10, 4, (3,))
    assert H.num_edges == minimal_family_turan(10, 4, (3,)).value
    # Every edge must meet the single-core set {0}.
    assert all(0 in e for e in H.edges)


def test_minimal_extremal_all_even_adds_one_edge():
    H = build_minimal_extremal(12, 4, (4,))
    want = minimal_family_turan(12, 4, (4,)).value
    assert H.num_edges == want
    outside = [e for e in H.edges if 0 not in e]
    assert len(outside) == 1


def test_linear_extremal_all_even_adds_pair_block():
    H = build_linear_extremal(12, 5, (4,))
    want = linear_family_turan(12, 5, (4,)).value
    assert H.num_edges == want
    outside = [e for e in H.edges if 0 not in e]
    assert len(outside) == math.comb(12 - 1 - 2, 5 - 2)
    anchor = frozenset({1, 2})
    assert all(anchor <= e for e in outside)


@pytest.mark.parametrize("n", range(9, 15))
@pytest.mark.parametrize("k", (4, 5))
@pytest.mark.parametrize("lengths", [(3,), (4,), (3, 3), (3, 4)])
def test_counts_match_formulas(n, k, lengths):
    for variant in ("minimal", "linear"):
        try:
            if variant == "minimal":
                H = build_minimal_extremal(n, k, lengths)
                want = minimal_family_turan(n, k, lengths).value
            else:
                H = build_linear_extremal(n, k, lengths)
                want = linear_family_turan(n, k, lengths).value
        except InfeasibleConstructionError:
            continue
        assert H.num_edges == want


def test_custom_core_set():
    H = build_minimal_extremal(11, 4, (3, 3), s_set=(2, 5, 7))
    assert H.num_edges == minimal_family_turan(11, 4, (3, 3)).value
    assert all(e & {2, 5, 7} for e in H.edges)


def test_wrong_core_size_rejected():
    with pytest.raises(InfeasibleConstructionError):
        build_minimal_extremal(11, 4, (3, 3), s_set=(2, 5))


def test_infeasible_small_n():
    with pytest.raises(InfeasibleConstructionError):
        build_minimal_extremal(2, 4, (3, 3))
    # All-even extras need k fresh vertices outside the core.
    with pytest.raises(InfeasibleConstructionError):
        build_minimal_extremal(4, 4, (4,))


def test_path_extremal_counts():
    for n in range(8, 13):
        for k in (3, 4):
            for length in (2, 3, 4, 5):
                H = build_path_extremal(n, k, length)
                assert H.num_edges == linear_path_turan(n, k, length)


def test_path_extremal_structure_odd():
    H = build_path_extremal(9, 3, 5)
    # Odd length 5 = 2*2+1: every edge meets {0, 1}.
    assert all(e & {0, 1} for e in H.edges)


def test_edge_limit_guard():
    with pytest.raises(ConstructionSizeError):
        build_minimal_extremal(40, 4, (3,), edge_limit=100)


def test_build_construction_dispatch():
    spec = ConstructionSpec(variant="minimal", n=10, k=4, lengths=(3,))
    H = build_construction(spec)
    assert H.num_edges == 84
    spec = ConstructionSpec(variant="path", n=10, k=3, lengths=(3,))
    assert build_construction(spec).num_edges == 36
    spec = ConstructionSpec(variant="meeting", n=8, k=3, lengths=(), s_set=(0, 1))
    assert build_construction(spec).num_edges == math.comb(8, 3) - math.comb(6, 3)


def test_build_construction_rejects_bad_requests():
    with pytest.raises(ValueError):
        build_construction(
            ConstructionSpec(variant="meeting", n=8, k=3, lengths=())
        )
    with pytest.raises(ValueError):
        build_construction(
            ConstructionSpec(variant="path", n=8, k=3, lengths=(3, 4))
        )
    with pytest.raises(ValueError):
        build_construction(
            ConstructionSpec(variant="nonsense", n=8, k=3, lengths=(3,))
        )
