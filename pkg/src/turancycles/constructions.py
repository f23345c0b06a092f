"""Extremal hypergraph constructions matching the closed-form counts.

The workhorse is the meeting family G(n, k, S): all k-sets meeting a
fixed vertex set S.  The cycle-avoiding constructions take |S| = t and,
when every forbidden length is even, append extra edges disjoint from S:
a single edge for the minimal variant, and every k-set through one fixed
pair for the linear variant.  Path-avoiding hosts reuse the same shapes
with their own t.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .formulas import binom, derive_params
from .hypergraph import KHypergraph, new_hypergraph


DEFAULT_EDGE_LIMIT = 5_000_000


class InfeasibleConstructionError(ValueError):
    """Parameters admit no construction of the requested shape."""


class ConstructionSizeError(ValueError):
    """The construction would exceed the edge budget."""


def _check_budget(n: int, k: int, edge_limit: int) -> None:
    if binom(n, k) > edge_limit:
        raise ConstructionSizeError(
            f"C({n},{k}) = {binom(n, k)} exceeds edge limit {edge_limit}"
        )


def build_meeting_family(
    n: int,
    k: int,
    s_set: Sequence[int],
    *,
    edge_limit: int = DEFAULT_EDGE_LIMIT,
) -> KHypergraph:
    """All k-subsets of {0..n-1} that intersect ``s_set``.

    Edge count is C(n,k) - C(n-|S|,k) for a valid S.
    """
    S = sorted(set(s_set))
    for v in S:
        if not 0 <= v < n:
            raise InfeasibleConstructionError(
                f"S vertex {v} outside range 0..{n - 1}"
            )
    _check_budget(n, k, edge_limit)
    sset = set(S)
    edges = [
        e for e in combinations(range(n), k) if sset.intersection(e)
    ]
    return new_hypergraph(n, k, edges)


def build_minimal_extremal(
    n: int,
    k: int,
    lengths: Sequence[int],
    *,
    s_set: Sequence[int] | None = None,
    edge_limit: int = DEFAULT_EDGE_LIMIT,
) -> KHypergraph:
    """Extremal host avoiding the disjoint minimal cycles of ``lengths``.

    The meeting family over t = sum(floor((l+1)/2)) - 1 vertices; when
    every length is even, one extra edge on the first k vertices outside
    S is appended.
    """
    params = derive_params(lengths)
    t = params.t
    if s_set is None:
        s_set = range(t)
    S = sorted(set(s_set))
    if len(S) != t:
        raise InfeasibleConstructionError(
            f"need exactly t = {t} vertices in S, got {len(S)}"
        )
    if n < t:
        raise InfeasibleConstructionError(f"need n >= t = {t}, got n = {n}")
    host = build_meeting_family(n, k, S, edge_limit=edge_limit)
    if not params.all_even:
        return host
    outside = [v for v in range(n) if v not in set(S)]
    if len(outside) < k:
        raise InfeasibleConstructionError(
            f"extra edge needs {k} vertices outside S, have {len(outside)}"
        )
    extra = frozenset(outside[:k])
    return new_hypergraph(n, k, list(host.edges) + [extra])


def build_linear_extremal(
    n: int,
    k: int,
    lengths: Sequence[int],
    *,
    s_set: Sequence[int] | None = None,
    edge_limit: int = DEFAULT_EDGE_LIMIT,
) -> KHypergraph:
    """Extremal host avoiding the disjoint linear cycles of ``lengths``.

    The meeting family over t vertices; when every length is even, all
    k-sets outside S through one fixed pair (the first two vertices
    outside S) are appended, C(n-t-2, k-2) of them.
    """
    params = derive_params(lengths)
    t = params.t
    if s_set is None:
        s_set = range(t)
    S = sorted(set(s_set))
    if len(S) != t:
        raise InfeasibleConstructionError(
            f"need exactly t = {t} vertices in S, got {len(S)}"
        )
    if n < t:
        raise InfeasibleConstructionError(f"need n >= t = {t}, got n = {n}")
    host = build_meeting_family(n, k, S, edge_limit=edge_limit)
    if not params.all_even:
        return host
    outside = [v for v in range(n) if v not in set(S)]
    if len(outside) < k:
        raise InfeasibleConstructionError(
            f"extra edges need {k} vertices outside S, have {len(outside)}"
        )
    a, b = outside[0], outside[1]
    rest = outside[2:]
    extras = [
        frozenset((a, b) + tail) for tail in combinations(rest, k - 2)
    ]
    return new_hypergraph(n, k, list(host.edges) + extras)


def build_path_extremal(
    n: int,
    k: int,
    length: int,
    *,
    edge_limit: int = DEFAULT_EDGE_LIMIT,
) -> KHypergraph:
    """Extremal host avoiding one linear path of the given length.

    Odd length 2t+1: the meeting family over t vertices.  Even length
    2t+2: the meeting family over t vertices plus all k-sets outside S
    through one fixed pair.
    """
    if length < 2:
        raise InfeasibleConstructionError(
            f"path length must be at least 2, got {length}"
        )
    if length % 2 == 1:
        t = (length - 1) // 2
        even = False
    else:
        t = (length - 2) // 2
        even = True
    if n < t:
        raise InfeasibleConstructionError(f"need n >= t = {t}, got n = {n}")
    S = list(range(t))
    host = build_meeting_family(n, k, S, edge_limit=edge_limit)
    if not even:
        return host
    outside = [v for v in range(n) if v >= t]
    if len(outside) < k:
        raise InfeasibleConstructionError(
            f"extra edges need {k} vertices outside S, have {len(outside)}"
        )
    a, b = outside[0], outside[1]
    extras = [
        frozenset((a, b) + tail)
        for tail in combinations(outside[2:], k - 2)
    ]
    return new_hypergraph(n, k, list(host.edges) + extras)


@dataclass(frozen=True)
class ConstructionSpec:
    """Parameters naming one construction, for the command line."""

    variant: str
    n: int
    k: int
    lengths: tuple[int, ...] = ()
    s_set: tuple[int, ...] | None = None
    edge_limit: int = DEFAULT_EDGE_LIMIT


def build_construction(spec: ConstructionSpec) -> KHypergraph:
    if spec.variant == "meeting":
        if spec.s_set is None:
            raise InfeasibleConstructionError(
                "meeting family needs an explicit S"
            )
        return build_meeting_family(
            spec.n, spec.k, spec.s_set, edge_limit=spec.edge_limit
        )
    if spec.variant == "minimal":
        return build_minimal_extremal(
            spec.n,
            spec.k,
            spec.lengths,
            s_set=spec.s_set,
            edge_limit=spec.edge_limit,
        )
    if spec.variant == "linear":
        return build_linear_extremal(
            spec.n,
            spec.k,
            spec.lengths,
            s_set=spec.s_set,
            edge_limit=spec.edge_limit,
        )
    if spec.variant == "path":
        if len(spec.lengths) != 1:
            raise InfeasibleConstructionError(
                "path construction takes exactly one length"
            )
        return build_path_extremal(
            spec.n, spec.k, spec.lengths[0], edge_limit=spec.edge_limit
        )
    raise InfeasibleConstructionError(f"unknown variant {spec.variant!r}")
