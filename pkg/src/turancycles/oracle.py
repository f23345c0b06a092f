"""Reference pattern detection by direct definition.

This module re-decides the same questions as :mod:`turancycles.detect`
using nothing but plain set arithmetic and exhaustive enumeration over
edge sequences.  It shares no search machinery with the fast detector,
so agreement between the two on random hosts is a meaningful check.
Intended for small hosts only.
"""

from __future__ import annotations

from typing import Sequence

from .hypergraph import KHypergraph
from .patterns import FamilySpec, PatternKind


def _pair_ok(
    kind: PatternKind, a: frozenset[int], b: frozenset[int], adjacent: bool
) -> bool:
    inter = len(a & b)
    if kind is PatternKind.MINIMAL_CYCLE:
        return inter >= 1 if adjacent else inter == 0
    if kind in (PatternKind.LINEAR_CYCLE, PatternKind.LINEAR_PATH):
        return inter == 1 if adjacent else inter == 0
    # Berge patterns: adjacent edges must share a vertex (they both hold
    # the designated vertex between them); other pairs are free.
    return inter >= 1 if adjacent else True


def _berge_vertices_exist(
    edges: Sequence[frozenset[int]], cyclic: bool
) -> bool:
    L = len(edges)
    count = L if cyclic else L + 1
    used: set[int] = set()

    def domain(pos: int) -> frozenset[int]:
        if cyclic:
            return edges[(pos - 1) % L] & edges[pos % L]
        if pos == 0:
            return edges[0]
        if pos == L:
            return edges[L - 1]
        return edges[pos - 1] & edges[pos]

    def extend(pos: int) -> bool:
        if pos == count:
            return True
        for v in domain(pos):
            if v in used:
                continue
            used.add(v)
            if extend(pos + 1):
                return True
            used.remove(v)
        return False

    return extend(0)


def _sequence_ok(
    kind: PatternKind, edges: Sequence[frozenset[int]], cyclic: bool
) -> bool:
    """Full definitional check of a complete edge sequence."""
    L = len(edges)
    for i in range(L):
        for j in range(i + 1, L):
            adjacent = (j - i == 1) or (cyclic and i == 0 and j == L - 1)
            if not _pair_ok(kind, edges[i], edges[j], adjacent):
                return False
    if kind is PatternKind.MINIMAL_CYCLE:
        if frozenset.intersection(*edges):
            return False
    elif kind is PatternKind.LINEAR_CYCLE:
        connectors = []
        for i in range(L):
            inter = edges[i] & edges[(i + 1) % L]
            if len(inter) != 1:
                return False
            connectors.append(next(iter(inter)))
        if len(set(connectors)) != L:
            return False
    elif kind in (PatternKind.BERGE_CYCLE, PatternKind.BERGE_PATH):
        if not _berge_vertices_exist(edges, cyclic):
            return False
    return True


def _find_pattern(
    H: KHypergraph,
    kind: PatternKind,
    length: int,
    allowed_vertices: frozenset[int],
) -> tuple[int, ...] | None:
    """Exhaustive prefix search for one pattern among allowed vertices."""
    cyclic = kind.is_cycle
    pool = [
        i
        for i, e in enumerate(H.edges)
        if e <= allowed_vertices
    ]
    chosen: list[int] = []

    def prefix_ok(new_idx: int) -> bool:
        e = H.edges[new_idx]
        p = len(chosen)
        for i, idx in enumerate(chosen):
            if cyclic and i == 0 and p == length - 1:
                # The closing pair (0, L-1) is adjacent in the finished
                # cycle; it is judged by the completion check instead.
                continue
            if not _pair_ok(kind, H.edges[idx], e, p - i == 1):
                return False
        return True

    def extend() -> tuple[int, ...] | None:
        if len(chosen) == length:
            edges = [H.edges[i] for i in chosen]
            if _sequence_ok(kind, edges, cyclic):
                return tuple(chosen)
            return None
        for idx in pool:
            if idx in chosen:
                continue
            if not prefix_ok(idx):
                continue
            chosen.append(idx)
            got = extend()
            if got is not None:
                return got
            chosen.pop()
        return None

    return extend()


def oracle_contains_pattern(
    H: KHypergraph, kind: PatternKind, length: int
) -> bool:
    """Definitional answer to: does the host contain this pattern?"""
    all_vertices = frozenset(range(H.n))
    return _find_pattern(H, kind, length, all_vertices) is not None


def oracle_contains(H: KHypergraph, spec: FamilySpec) -> bool:
    """Definitional answer for a vertex-disjoint family of patterns.

    Components are placed in the order ``spec.components`` lists them, each
    restricted to vertices untouched by the ones already placed.
    """
    if spec.k != H.k:
        raise ValueError(
            f"spec is {spec.k}-uniform but host is {H.k}-uniform"
        )

    def place(pos: int, allowed: frozenset[int]) -> bool:
        if pos == len(spec.components):
            return True
        kind, length = spec.components[pos]
        return _place_all(kind, length, allowed, pos)

    def _place_all(
        kind: PatternKind, length: int, allowed: frozenset[int], pos: int
    ) -> bool:
        # Enumerate every placement of this component, not just the
        # first, since later components constrain earlier choices.
        cyclic = kind.is_cycle
        pool = [i for i, e in enumerate(H.edges) if e <= allowed]
        chosen: list[int] = []

        def prefix_ok(new_idx: int) -> bool:
            e = H.edges[new_idx]
            p = len(chosen)
            for i, idx in enumerate(chosen):
                if cyclic and i == 0 and p == length - 1:
                    continue
                if not _pair_ok(kind, H.edges[idx], e, p - i == 1):
                    return False
            return True

        def extend() -> bool:
            if len(chosen) == length:
                edges = [H.edges[i] for i in chosen]
                if not _sequence_ok(kind, edges, cyclic):
                    return False
                used = set().union(*edges)
                return place(pos + 1, allowed - used)
            for idx in pool:
                if idx in chosen:
                    continue
                if not prefix_ok(idx):
                    continue
                chosen.append(idx)
                if extend():
                    return True
                chosen.pop()
            return False

        return extend()

    return place(0, frozenset(range(H.n)))
