"""Witness extraction that follows the extremal proof outline.

Given a host that (presumably) exceeds the extremal bound, the
extractor pulls out vertex-disjoint cycles one level at a time:

1. find one cycle of the first remaining length and collect its
   vertex set C;
2. group the terminal edges (edges meeting C in exactly one vertex) by
   their off-cycle part R, partition the groups by how many attachment
   points they have, and pick the terminal set U: the most popular
   threshold-sized attachment set;
3. delete U, recurse for the remaining lengths in the smaller host, and
   lift the results back;
4. rebuild a first cycle that avoids the recursion's vertices from
   terminal groups that attach to all of U: pairs of off-cycle parts
   sharing exactly one vertex, plus, for odd lengths, a three-edge
   linear path among the (k-1)-sets;
5. alternate those parts through the vertices of U.

Every stage can fail on hosts that merely contain the family without
exceeding the bound; failures fall back to direct detection, first for
the current cycle (keeping deeper results), then for the whole family.
An :class:`ExtractionError` therefore means the family is absent.  The
full decision path is recorded in an :class:`ExtractionTrace`.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace
from typing import Iterable, Mapping, Sequence

from .detect import contains_disjoint_family, contains_pattern
from .hypergraph import KHypergraph, relabel_maps, remove_vertices
from .patterns import (
    FamilySpec,
    PatternKind,
    Witness,
    WitnessError,
    check_linear_cycle,
    validate_witness,
)

STAGES = (
    "first-cycle",
    "terminal-set",
    "recursion",
    "claim1",
    "p3",
    "assembly",
    "fallback",
)


class ExtractionError(RuntimeError):
    """Raised when no disjoint family exists to extract."""

    def __init__(self, stage: str, detail: str):
        super().__init__(f"{stage}: {detail}")
        self.stage = stage
        self.detail = detail


@dataclass(frozen=True)
class LevelTrace:
    """What happened while extracting one cycle."""

    length: int
    first_cycle: tuple[tuple[int, ...], ...] | None = None
    cycle_vertices: tuple[int, ...] | None = None
    terminal_count: int | None = None
    x_size: int | None = None
    y_size: int | None = None
    terminal_set: tuple[int, ...] | None = None
    r_u_size: int | None = None
    removed: tuple[int, ...] | None = None
    pair_count: int | None = None
    p3_found: bool | None = None
    assembled: bool = False
    fallback_stage: str | None = None
    note: str | None = None

    def relabel(self, mapping: Mapping[int, int]) -> "LevelTrace":
        def m_edge(e):
            return tuple(sorted(mapping[v] for v in e))

        def m_tuple(t):
            return tuple(sorted(mapping[v] for v in t)) if t is not None else None

        return replace(
            self,
            first_cycle=(
                tuple(m_edge(e) for e in self.first_cycle)
                if self.first_cycle is not None
                else None
            ),
            cycle_vertices=m_tuple(self.cycle_vertices),
            terminal_set=m_tuple(self.terminal_set),
            removed=m_tuple(self.removed),
        )

    def to_dict(self) -> dict:
        return {
            "length": self.length,
            "first_cycle": (
                [list(e) for e in self.first_cycle]
                if self.first_cycle is not None
                else None
            ),
            "cycle_vertices": (
                list(self.cycle_vertices)
                if self.cycle_vertices is not None
                else None
            ),
            "terminal_count": self.terminal_count,
            "x_size": self.x_size,
            "y_size": self.y_size,
            "terminal_set": (
                list(self.terminal_set) if self.terminal_set is not None else None
            ),
            "r_u_size": self.r_u_size,
            "removed": list(self.removed) if self.removed is not None else None,
            "pair_count": self.pair_count,
            "p3_found": self.p3_found,
            "assembled": self.assembled,
            "fallback_stage": self.fallback_stage,
            "note": self.note,
        }


@dataclass(frozen=True)
class ExtractionTrace:
    variant: str
    requested_lengths: tuple[int, ...]
    processed_lengths: tuple[int, ...]
    levels: tuple[LevelTrace, ...]
    stage_seconds: dict

    def to_dict(self) -> dict:
        return {
            "variant": self.variant,
            "requested_lengths": list(self.requested_lengths),
            "processed_lengths": list(self.processed_lengths),
            "levels": [lv.to_dict() for lv in self.levels],
            "stage_seconds": {k: round(v, 6) for k, v in self.stage_seconds.items()},
        }


@dataclass(frozen=True)
class ExtractionResult:
    witnesses: tuple[Witness, ...]
    trace: ExtractionTrace


def terminal_edges(
    H: KHypergraph, cycle_vertices: Iterable[int]
) -> list[frozenset[int]]:
    """Edges meeting the cycle's vertex set in exactly one vertex."""
    C = set(cycle_vertices)
    return [e for e in H.edges if len(e & C) == 1]


def terminal_groups(
    H: KHypergraph, cycle_vertices: Iterable[int]
) -> dict[frozenset[int], tuple[int, ...]]:
    """Group terminal edges by off-cycle part.

    Maps each (k-1)-set R outside the cycle to the sorted tuple of
    attachment vertices c with R + {c} an edge.
    """
    C = set(cycle_vertices)
    raw: dict[frozenset[int], list[int]] = {}
    for e in H.edges:
        inter = e & C
        if len(inter) == 1:
            (c,) = inter
            raw.setdefault(e - C, []).append(c)
    return {R: tuple(sorted(cs)) for R, cs in raw.items()}


def partition_xy(
    groups: Mapping[frozenset[int], tuple[int, ...]], threshold: int
) -> tuple[list[frozenset[int]], list[frozenset[int]]]:
    """Split off-cycle parts by attachment count: X below the threshold,
    Y at or above it.  Both lists come back sorted."""
    X: list[frozenset[int]] = []
    Y: list[frozenset[int]] = []
    for R, cs in groups.items():
        (Y if len(cs) >= threshold else X).append(R)
    key = lambda R: tuple(sorted(R))
    return sorted(X, key=key), sorted(Y, key=key)


def select_terminal_set(
    groups: Mapping[frozenset[int], tuple[int, ...]],
    Y: Sequence[frozenset[int]],
    threshold: int,
) -> tuple[tuple[int, ...], list[frozenset[int]]]:
    """Pick the terminal set U and the parts attached to all of it.

    Each rich part R nominates its lexicographically first threshold
    attachment vertices; U is the nomination carried by the most parts,
    ties broken towards the smallest.  Returns (U, R_U) where R_U holds
    every rich part attached to all of U, sorted.
    """
    counts: dict[tuple[int, ...], int] = {}
    for R in Y:
        ts = groups[R][:threshold]
        counts[ts] = counts.get(ts, 0) + 1
    if not counts:
        raise ValueError("no rich terminal parts to choose from")
    best = min(counts, key=lambda ts: (-counts[ts], ts))
    chosen = set(best)
    r_u = [R for R in Y if chosen.issubset(groups[R])]
    r_u.sort(key=lambda R: tuple(sorted(R)))
    return best, r_u


def claim1_pairs(
    parts: Sequence[frozenset[int]], count: int
) -> list[tuple[frozenset[int], frozenset[int]]] | None:
    """Greedily collect vertex-disjoint pairs of parts sharing one vertex.

    Scans sorted parts in index order and keeps the first eligible
    pairs; returns None when fewer than ``count`` can be collected this
    way.
    """
    if count == 0:
        return []
    taken: list[tuple[frozenset[int], frozenset[int]]] = []
    used: set[int] = set()
    items = sorted(parts, key=lambda R: tuple(sorted(R)))
    for i, a in enumerate(items):
        if used & a:
            continue
        for b in items[i + 1 :]:
            if used & b:
                continue
            if len(a & b) == 1:
                taken.append((a, b))
                used |= a | b
                break
        if len(taken) == count:
            return taken
    return None


def find_p3(
    n: int,
    parts: Sequence[frozenset[int]],
    k_minus_1: int,
    forbidden_vertices: Iterable[int],
) -> tuple[frozenset[int], frozenset[int], frozenset[int]] | None:
    """A three-edge linear path among the (k-1)-sets, avoiding vertices."""
    if k_minus_1 < 2 or len(parts) < 3:
        return None
    key = lambda R: tuple(sorted(R))
    aux = KHypergraph(n=n, k=k_minus_1, edges=tuple(sorted(set(parts), key=key)))
    w = contains_pattern(
        aux,
        PatternKind.LINEAR_PATH,
        3,
        forbidden_vertices=forbidden_vertices,
    )
    if w is None:
        return None
    x, y, z = w.edges
    return x, y, z


def assemble_even(
    pairs: Sequence[tuple[frozenset[int], frozenset[int]]],
    U: Sequence[int],
) -> list[frozenset[int]]:
    """Alternate p disjoint one-vertex-sharing pairs through |U| = p
    terminal vertices into a linear cycle of length 2p."""
    p = len(pairs)
    if p < 2 or len(U) != p:
        raise ValueError(f"need |U| = pairs = at least 2, got {len(U)}, {p}")
    edges: list[frozenset[int]] = []
    for i, (a, b) in enumerate(pairs):
        edges.append(a | {U[i]})
        edges.append(b | {U[(i + 1) % p]})
    return edges


def assemble_odd(
    pairs: Sequence[tuple[frozenset[int], frozenset[int]]],
    U: Sequence[int],
    path3: tuple[frozenset[int], frozenset[int], frozenset[int]],
) -> list[frozenset[int]]:
    """Alternate q pairs plus a three-edge linear path through
    |U| = q + 2 terminal vertices into a linear cycle of length 2q+3."""
    q = len(pairs)
    if len(U) != q + 2:
        raise ValueError(f"need |U| = pairs + 2, got {len(U)}, {q}")
    x, y, z = path3
    edges: list[frozenset[int]] = []
    for i, (a, b) in enumerate(pairs):
        edges.append(a | {U[i]})
        edges.append(b | {U[i + 1]})
    edges.append(x | {U[q]})
    edges.append(y | {U[q + 1]})
    edges.append(z | {U[0]})
    return edges


def brute_force_extract(
    H: KHypergraph, spec: FamilySpec
) -> tuple[Witness, ...] | None:
    """Plain detector search for the family, for cross-checking."""
    return contains_disjoint_family(H, spec)


class _Run:
    """Shared state for one extraction call."""

    def __init__(self, kind: PatternKind, variant: str, reorder_even_first: bool):
        self.kind = kind
        self.variant = variant
        self.reorder = reorder_even_first
        self.timings = {s: 0.0 for s in STAGES}
        self.processed: list[int] = []

    def timed(self, stage: str, fn, *args, **kwargs):
        t0 = time.perf_counter()
        try:
            return fn(*args, **kwargs)
        finally:
            self.timings[stage] += time.perf_counter() - t0


def _pick_head(
    annotated: list[tuple[int, int]], reorder: bool
) -> tuple[tuple[int, int], list[tuple[int, int]]]:
    if reorder:
        for i, (ell, _) in enumerate(annotated):
            if ell % 2 == 0:
                return annotated[i], annotated[:i] + annotated[i + 1 :]
    return annotated[0], annotated[1:]


def _level_fallback(
    run: _Run,
    H: KHypergraph,
    annotated: list[tuple[int, int]],
    stage: str,
    detail: str,
    level_kwargs: dict,
    sub_levels: list[LevelTrace],
) -> tuple[list[tuple[int, Witness]], list[LevelTrace]]:
    spec = FamilySpec(
        k=H.k, components=tuple((run.kind, ell) for ell, _ in annotated)
    )
    family = run.timed("fallback", contains_disjoint_family, H, spec)
    if family is None:
        raise ExtractionError(stage, detail + "; no family present")
    level = LevelTrace(
        **level_kwargs,
        fallback_stage=stage,
        note="whole-family fallback",
    )
    paired = [(idx, w) for (_, idx), w in zip(annotated, family)]
    return paired, [level] + sub_levels


def _extract_level(
    run: _Run, H: KHypergraph, annotated: list[tuple[int, int]]
) -> tuple[list[tuple[int, Witness]], list[LevelTrace]]:
    if not annotated:
        return [], []
    (ell, orig_idx), rest = _pick_head(annotated, run.reorder)
    run.processed.append(ell)
    ordered = [(ell, orig_idx)] + rest

    first = run.timed("first-cycle", contains_pattern, H, run.kind, ell)
    if first is None:
        raise ExtractionError(
            "first-cycle",
            f"host has no {run.kind.value} of length {ell}",
        )
    C = first.vertex_set()
    base_kwargs: dict = {
        "length": ell,
        "first_cycle": tuple(tuple(sorted(e)) for e in first.edges),
        "cycle_vertices": tuple(sorted(C)),
    }

    if H.k < 3:
        if not rest:
            level = LevelTrace(**base_kwargs, note="single length, direct")
            return [(orig_idx, first)], [level]
        return _level_fallback(
            run,
            H,
            ordered,
            "terminal-set",
            "uniformity below the terminal machinery range",
            base_kwargs,
            [],
        )

    threshold = (ell + 1) // 2
    t0 = time.perf_counter()
    groups = terminal_groups(H, C)
    X, Y = partition_xy(groups, threshold)
    base_kwargs.update(
        terminal_count=sum(len(cs) for cs in groups.values()),
        x_size=len(X),
        y_size=len(Y),
    )
    if not Y:
        run.timings["terminal-set"] += time.perf_counter() - t0
        if not rest:
            # The found cycle is already a complete answer.
            level = LevelTrace(
                **base_kwargs,
                fallback_stage="terminal-set",
                note="no rich terminal parts; kept the found cycle",
            )
            return [(orig_idx, first)], [level]
        return _level_fallback(
            run,
            H,
            ordered,
            "terminal-set",
            "no terminal parts reach the threshold",
            base_kwargs,
            [],
        )
    U, R_U = select_terminal_set(groups, Y, threshold)
    base_kwargs.update(
        terminal_set=U,
        r_u_size=len(R_U),
        removed=U,
    )
    run.timings["terminal-set"] += time.perf_counter() - t0

    # Recurse on the host without U.
    t0 = time.perf_counter()
    sub_pairs: list[tuple[int, Witness]] = []
    sub_levels: list[LevelTrace] = []
    recursion_failed: str | None = None
    if rest:
        H2 = remove_vertices(H, U)
        _, new_to_old = relabel_maps(H.n, U)
        lift = {new: old for new, old in enumerate(new_to_old)}
        try:
            sub_pairs_raw, sub_levels_raw = _extract_level(run, H2, rest)
            sub_pairs = [(idx, w.relabel(lift)) for idx, w in sub_pairs_raw]
            sub_levels = [lv.relabel(lift) for lv in sub_levels_raw]
        except ExtractionError as exc:
            recursion_failed = f"deeper level failed at {exc.stage}"
    run.timings["recursion"] += time.perf_counter() - t0
    if recursion_failed is not None:
        return _level_fallback(
            run, H, ordered, "recursion", recursion_failed, base_kwargs, []
        )

    W: set[int] = set()
    for _, w in sub_pairs:
        W |= w.vertex_set()

    def stage_fallback(stage: str, detail: str, kwargs: dict):
        fb = run.timed(
            "fallback",
            contains_pattern,
            H,
            run.kind,
            ell,
            forbidden_vertices=sorted(W),
        )
        if fb is not None:
            level = LevelTrace(
                **kwargs,
                fallback_stage=stage,
                note="re-detected the cycle directly",
            )
            return [(orig_idx, fb)] + sub_pairs, [level] + sub_levels
        return _level_fallback(run, H, ordered, stage, detail, kwargs, sub_levels)

    parts = [R for R in R_U if not (R & W)]
    if ell % 2 == 0:
        want_pairs = ell // 2
    else:
        want_pairs = (ell - 3) // 2
    pairs = run.timed("claim1", claim1_pairs, parts, want_pairs)
    kwargs = dict(base_kwargs)
    if pairs is None:
        kwargs["pair_count"] = 0
        return stage_fallback(
            "claim1",
            f"could not collect {want_pairs} disjoint sharing pairs",
            kwargs,
        )
    kwargs["pair_count"] = len(pairs)

    if ell % 2 == 0:
        edges = assemble_even(pairs, U)
    else:
        blocked = set(W)
        for a, b in pairs:
            blocked |= a | b
        path3 = run.timed(
            "p3", find_p3, H.n, parts, H.k - 1, sorted(blocked)
        )
        kwargs["p3_found"] = path3 is not None
        if path3 is None:
            return stage_fallback(
                "p3", "no three-edge linear path among spare parts", kwargs
            )
        edges = assemble_odd(pairs, U, path3)

    t0 = time.perf_counter()
    try:
        if run.kind is PatternKind.MINIMAL_CYCLE:
            witness = Witness(
                kind=PatternKind.MINIMAL_CYCLE,
                length=ell,
                edges=tuple(edges),
                connectors=(),
            )
        else:
            connectors = check_linear_cycle(edges)
            witness = Witness(
                kind=PatternKind.LINEAR_CYCLE,
                length=ell,
                edges=tuple(edges),
                connectors=connectors,
            )
        validate_witness(witness, host=H)
        if witness.vertex_set() & W:
            raise WitnessError("assembled cycle touches deeper witnesses")
    except WitnessError as exc:
        run.timings["assembly"] += time.perf_counter() - t0
        return stage_fallback("assembly", str(exc), kwargs)
    run.timings["assembly"] += time.perf_counter() - t0

    level = LevelTrace(**kwargs, assembled=True)
    return [(orig_idx, witness)] + sub_pairs, [level] + sub_levels


def _run_extraction(
    H: KHypergraph,
    lengths: Sequence[int],
    kind: PatternKind,
    variant: str,
    reorder: bool,
) -> ExtractionResult:
    if not lengths:
        raise ValueError("need at least one cycle length")
    for ell in lengths:
        if ell < 3:
            raise ValueError(f"cycle lengths must be at least 3, got {ell}")
    run = _Run(kind, variant, reorder)
    annotated = [(ell, i) for i, ell in enumerate(lengths)]
    pairs, levels = _extract_level(run, H, annotated)
    witnesses = tuple(w for _, w in sorted(pairs, key=lambda p: p[0]))
    trace = ExtractionTrace(
        variant=variant,
        requested_lengths=tuple(lengths),
        processed_lengths=tuple(run.processed),
        levels=tuple(levels),
        stage_seconds=run.timings,
    )
    return ExtractionResult(witnesses=witnesses, trace=trace)


def extract_disjoint_minimal(
    H: KHypergraph, lengths: Sequence[int]
) -> ExtractionResult:
    """Extract vertex-disjoint minimal cycles of the given lengths.

    Raises :class:`ExtractionError` exactly when the host contains no
    such family.
    """
    return _run_extraction(
        H, lengths, PatternKind.MINIMAL_CYCLE, "minimal", reorder=False
    )


def extract_disjoint_linear(
    H: KHypergraph, lengths: Sequence[int]
) -> ExtractionResult:
    """Extract vertex-disjoint linear cycles of the given lengths.

    Within each level, an even length is preferred as the working head
    when one remains; the returned witnesses still follow the requested
    order.  Raises :class:`ExtractionError` exactly when the host
    contains no such family.
    """
    return _run_extraction(
        H, lengths, PatternKind.LINEAR_CYCLE, "linear", reorder=True
    )
