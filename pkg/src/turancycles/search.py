"""Desk-scale exact search for maximum family-free edge sets.

:func:`max_edges_avoiding` finds, by exhaustive branch and bound, the
largest number of edges an n-vertex k-uniform host can have without
containing a given disjoint pattern family.  Candidate edges are laid
out in colexicographic order and the DFS includes each edge first,
testing legality incrementally: adding an edge is allowed exactly when
no forbidden family appears that uses it.  A root symmetry reduction
forces the colex-least edge into the host (any nonempty optimum can be
relabelled to contain it).

:func:`saturation_fraction` measures how close a family-free host is to
saturation, and :func:`random_hypergraph` supplies seeded random hosts.
"""

from __future__ import annotations

import random
import time
import warnings
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .detect import contains_disjoint_family, family_present_with_edge
from .hypergraph import KHypergraph, new_hypergraph
from .patterns import FamilySpec

MAX_CANDIDATES = 10_000


@dataclass(frozen=True)
class SearchBudget:
    """Limits for the exact search; None means unlimited."""

    max_nodes: int | None = None
    max_seconds: float | None = None
    symmetry_pruning: bool = True


@dataclass(frozen=True)
class SearchResult:
    max_edges: int
    witness: tuple[frozenset[int], ...]
    exhaustive: bool
    nodes_explored: int


def max_edges_avoiding(
    n: int, k: int, spec: FamilySpec, budget: SearchBudget | None = None
) -> SearchResult:
    """Maximum edges of an (n, k) host containing no witness family.

    Exhaustive unless the budget runs out, in which case ``exhaustive``
    is False and the best host found so far is reported.
    """
    if spec.k != k:
        raise ValueError(f"spec is {spec.k}-uniform, search asked for k={k}")
    if budget is None:
        budget = SearchBudget()
    total = comb(n, k) if n >= k else 0
    if total > MAX_CANDIDATES:
        raise ValueError(
            f"C({n},{k}) = {total} candidate edges exceed the "
            f"desk-scale limit {MAX_CANDIDATES}"
        )
    candidates = sorted(
        (frozenset(c) for c in combinations(range(n), k)),
        key=lambda e: tuple(reversed(sorted(e))),
    )
    M = len(candidates)
    if M == 0:
        return SearchResult(0, (), True, 0)

    start = time.perf_counter()
    best_count = 0
    best_edges: tuple[frozenset[int], ...] = ()
    nodes = 0
    exhausted_budget = False

    def out_of_budget() -> bool:
        if budget.max_nodes is not None and nodes >= budget.max_nodes:
            return True
        if (
            budget.max_seconds is not None
            and time.perf_counter() - start >= budget.max_seconds
        ):
            return True
        return False

    chosen: list[frozenset[int]] = []

    def dfs(pos: int) -> None:
        nonlocal best_count, best_edges, nodes, exhausted_budget
        nodes += 1
        if len(chosen) > best_count:
            best_count = len(chosen)
            best_edges = tuple(chosen)
        if pos == M or exhausted_budget:
            return
        if out_of_budget():
            exhausted_budget = True
            return
        if len(chosen) + (M - pos) <= best_count:
            return
        e = candidates[pos]
        host = new_hypergraph(n, k, chosen + [e])
        if not family_present_with_edge(host, spec, e):
            chosen.append(e)
            dfs(pos + 1)
            chosen.pop()
        if exhausted_budget:
            return
        if pos == 0 and budget.symmetry_pruning:
            # Any nonempty optimum is isomorphic to one containing the
            # colex-least edge, so the exclude branch at the root is
            # redundant.
            return
        dfs(pos + 1)

    dfs(0)
    return SearchResult(
        max_edges=best_count,
        witness=best_edges,
        exhaustive=not exhausted_budget,
        nodes_explored=nodes,
    )


def random_hypergraph(n: int, k: int, m: int, seed: int) -> KHypergraph:
    """Seeded random host with m distinct edges, listed deterministically."""
    total = comb(n, k) if n >= k else 0
    if m > total:
        raise ValueError(f"asked for {m} edges but only {total} exist")
    if total > 1_000_000:
        raise ValueError(f"C({n},{k}) = {total} is beyond desk scale")
    rng = random.Random(seed)
    universe = list(combinations(range(n), k))
    picked = rng.sample(universe, m)
    return new_hypergraph(n, k, sorted(picked))


def saturation_fraction(
    H: KHypergraph,
    spec: FamilySpec,
    sample_size: int = 100,
    seed: int = 0,
) -> float:
    """Fraction of sampled absent edges whose addition creates the family.

    The host must be family-free.  Samples without replacement from the
    absent k-sets; a nonpositive sample size warns and returns 0.0.
    """
    if contains_disjoint_family(H, spec) is not None:
        raise ValueError("host already contains the forbidden family")
    if sample_size <= 0:
        warnings.warn("sample_size must be positive; returning 0.0")
        return 0.0
    absent = [
        frozenset(c)
        for c in combinations(range(H.n), H.k)
        if frozenset(c) not in H.edge_set
    ]
    if not absent:
        return 0.0
    rng = random.Random(seed)
    if sample_size < len(absent):
        sample = rng.sample(absent, sample_size)
    else:
        sample = absent
    hits = 0
    for e in sample:
        host = new_hypergraph(H.n, H.k, list(H.edges) + [e])
        if family_present_with_edge(host, spec, e):
            hits += 1
    return hits / len(sample)
