"""Cycle and path patterns in k-uniform hypergraphs.

Five pattern kinds are supported, each a sequence of distinct edges:

* ``berge-path``: edges F_1..F_L plus distinct vertices v_1..v_{L+1}
  with {v_i, v_{i+1}} contained in F_i.
* ``berge-cycle``: edges F_1..F_L plus distinct vertices v_1..v_L with
  {v_i, v_{i+1}} in F_i, indices cyclic.
* ``linear-path``: consecutive edges share exactly one vertex, all other
  pairs are disjoint.
* ``linear-cycle``: as linear-path but cyclically closed; the L shared
  vertices (connectors) are pairwise distinct, so the cycle spans exactly
  L*(k-1) vertices.
* ``minimal-cycle``: cyclically consecutive edges intersect (in one vertex
  or more), non-consecutive edges are disjoint, and no single vertex lies
  in every edge.  The last condition is automatic for L >= 4; for L = 3 it
  rules out degenerate windings through a common vertex.

A :class:`Witness` records one found pattern; a :class:`FamilySpec`
describes a disjoint union of patterns to search for.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .hypergraph import KHypergraph


class WitnessError(ValueError):
    """A claimed pattern witness fails its structural requirements."""


class PatternKind(enum.Enum):
    BERGE_PATH = "berge-path"
    LINEAR_PATH = "linear-path"
    BERGE_CYCLE = "berge-cycle"
    MINIMAL_CYCLE = "minimal-cycle"
    LINEAR_CYCLE = "linear-cycle"

    @property
    def is_cycle(self) -> bool:
        return self in (
            PatternKind.BERGE_CYCLE,
            PatternKind.MINIMAL_CYCLE,
            PatternKind.LINEAR_CYCLE,
        )


_KIND_ALIASES: dict[str, PatternKind] = {
    "berge-path": PatternKind.BERGE_PATH,
    "linear-path": PatternKind.LINEAR_PATH,
    "berge-cycle": PatternKind.BERGE_CYCLE,
    "minimal-cycle": PatternKind.MINIMAL_CYCLE,
    "linear-cycle": PatternKind.LINEAR_CYCLE,
    "minimal": PatternKind.MINIMAL_CYCLE,
    "linear": PatternKind.LINEAR_CYCLE,
}

_SHORT_NAMES: dict[PatternKind, str] = {
    PatternKind.MINIMAL_CYCLE: "minimal",
    PatternKind.LINEAR_CYCLE: "linear",
    PatternKind.BERGE_PATH: "berge-path",
    PatternKind.BERGE_CYCLE: "berge-cycle",
    PatternKind.LINEAR_PATH: "linear-path",
}


def parse_kind(name: str) -> PatternKind:
    key = name.strip().lower()
    if key not in _KIND_ALIASES:
        raise ValueError(
            f"unknown pattern kind {name!r}; expected one of "
            + ", ".join(sorted(set(_KIND_ALIASES)))
        )
    return _KIND_ALIASES[key]


def min_length(kind: PatternKind) -> int:
    """Smallest admissible length for a pattern kind."""
    return 3 if kind.is_cycle else 1


def min_vertices(kind: PatternKind, length: int, k: int) -> int:
    """A lower bound on the vertices any such pattern must span.

    Used for capacity pruning, so it only needs to be a valid lower
    bound, not tight.
    """
    if kind is PatternKind.LINEAR_CYCLE:
        return length * (k - 1)
    if kind is PatternKind.LINEAR_PATH:
        return length * (k - 1) + 1
    if kind is PatternKind.MINIMAL_CYCLE:
        if length == 3:
            # Three k-sets with empty common intersection need at least
            # ceil(3k/2) vertices since |e0&e1&e2| >= 3k - 2|union|.
            return (3 * k + 1) // 2
        # Alternate edges are pairwise disjoint.
        return (length // 2) * k
    if kind is PatternKind.BERGE_CYCLE:
        return max(length, k)
    if kind is PatternKind.BERGE_PATH:
        return max(length + 1, k)
    raise ValueError(f"unhandled kind {kind}")


@dataclass(frozen=True)
class FamilySpec:
    """A disjoint union of patterns, all in k-uniform hosts.

    ``components`` lists (kind, length) pairs; a witness family must
    realise each component on pairwise disjoint vertex sets.
    """

    k: int
    components: tuple[tuple[PatternKind, int], ...]

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"uniformity must be at least 2, got {self.k}")
        if not self.components:
            raise ValueError("family must have at least one component")
        for kind, length in self.components:
            if length < min_length(kind):
                raise ValueError(
                    f"{kind.value} length must be at least "
                    f"{min_length(kind)}, got {length}"
                )

    @classmethod
    def from_text(cls, text: str, k: int) -> "FamilySpec":
        """Parse e.g. ``minimal:3+minimal:4`` or ``linear-path:5``."""
        comps: list[tuple[PatternKind, int]] = []
        for part in text.split("+"):
            piece = part.strip()
            if ":" not in piece:
                raise ValueError(
                    f"component {piece!r} must look like kind:length"
                )
            name, _, num = piece.rpartition(":")
            kind = parse_kind(name)
            try:
                length = int(num)
            except ValueError:
                raise ValueError(f"bad length {num!r} in {piece!r}")
            comps.append((kind, length))
        return cls(k=k, components=tuple(comps))

    def to_text(self) -> str:
        return "+".join(
            f"{_SHORT_NAMES[kind]}:{length}"
            for kind, length in self.components
        )

    def total_min_vertices(self) -> int:
        return sum(
            min_vertices(kind, length, self.k)
            for kind, length in self.components
        )


@dataclass(frozen=True)
class Witness:
    """One realised pattern.

    ``edges`` is the edge sequence in pattern order.  ``connectors`` holds
    the designated vertices: the L (or L+1) Berge vertices, the shared
    vertices of a linear pattern, and the empty tuple for minimal cycles.
    """

    kind: PatternKind
    length: int
    edges: tuple[frozenset[int], ...]
    connectors: tuple[int, ...]

    def vertex_set(self) -> frozenset[int]:
        out: set[int] = set()
        for e in self.edges:
            out |= e
        return frozenset(out)

    def relabel(self, mapping: Mapping[int, int]) -> "Witness":
        return Witness(
            kind=self.kind,
            length=self.length,
            edges=tuple(frozenset(mapping[v] for v in e) for e in self.edges),
            connectors=tuple(mapping[v] for v in self.connectors),
        )

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "length": self.length,
            "edges": [sorted(e) for e in self.edges],
            "connectors": list(self.connectors),
        }


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise WitnessError(message)


def _check_common(edges: Sequence[frozenset[int]], length: int, kind: PatternKind) -> None:
    _require(length == len(edges), f"expected {length} edges, got {len(edges)}")
    _require(length >= min_length(kind), f"{kind.value} needs length >= {min_length(kind)}")
    _require(len(set(edges)) == len(edges), "edges must be distinct")
    sizes = {len(e) for e in edges}
    _require(len(sizes) == 1, "edges must share one uniformity")


def check_minimal_cycle(edges: Sequence[frozenset[int]]) -> None:
    """Validate a minimal cycle; raises WitnessError if invalid."""
    L = len(edges)
    _check_common(edges, L, PatternKind.MINIMAL_CYCLE)
    for i in range(L):
        for j in range(i + 1, L):
            consecutive = (j - i == 1) or (i == 0 and j == L - 1)
            inter = edges[i] & edges[j]
            if consecutive:
                _require(
                    len(inter) >= 1,
                    f"consecutive edges {i},{j} must intersect",
                )
            else:
                _require(
                    not inter,
                    f"non-consecutive edges {i},{j} must be disjoint",
                )
    common = frozenset.intersection(*edges)
    _require(
        not common,
        f"no vertex may lie in every edge; found {sorted(common)}",
    )


def check_linear_cycle(edges: Sequence[frozenset[int]]) -> tuple[int, ...]:
    """Validate a linear cycle and return its L connector vertices.

    ``connectors[i]`` is the vertex shared by edges i and i+1 (cyclic).
    """
    L = len(edges)
    _check_common(edges, L, PatternKind.LINEAR_CYCLE)
    connectors: list[int] = []
    for i in range(L):
        for j in range(i + 1, L):
            consecutive = (j - i == 1) or (i == 0 and j == L - 1)
            inter = edges[i] & edges[j]
            if consecutive:
                _require(
                    len(inter) == 1,
                    f"consecutive edges {i},{j} must share exactly one vertex",
                )
            else:
                _require(
                    not inter,
                    f"non-consecutive edges {i},{j} must be disjoint",
                )
    for i in range(L):
        (c,) = edges[i] & edges[(i + 1) % L]
        connectors.append(c)
    _require(
        len(set(connectors)) == L,
        "connector vertices must be pairwise distinct",
    )
    return tuple(connectors)


def check_linear_path(edges: Sequence[frozenset[int]]) -> tuple[int, ...]:
    """Validate a linear path and return its L-1 connector vertices."""
    L = len(edges)
    _check_common(edges, L, PatternKind.LINEAR_PATH)
    connectors: list[int] = []
    for i in range(L):
        for j in range(i + 1, L):
            inter = edges[i] & edges[j]
            if j - i == 1:
                _require(
                    len(inter) == 1,
                    f"consecutive edges {i},{j} must share exactly one vertex",
                )
            else:
                _require(
                    not inter,
                    f"non-consecutive edges {i},{j} must be disjoint",
                )
    for i in range(L - 1):
        (c,) = edges[i] & edges[i + 1]
        connectors.append(c)
    return tuple(connectors)


def find_berge_vertices(
    edges: Sequence[frozenset[int]], cyclic: bool
) -> tuple[int, ...] | None:
    """Search for designated Berge vertices; None when none exist.

    For a path, returns distinct v_1..v_{L+1} with {v_i, v_{i+1}} in
    edge i.  For a cycle, returns distinct v_1..v_L, indices cyclic.
    """
    L = len(edges)
    if len(set(edges)) != L:
        return None
    count = L if cyclic else L + 1
    chosen: list[int] = []
    used: set[int] = set()

    def domain(pos: int) -> frozenset[int]:
        if cyclic:
            return edges[pos - 1] & edges[pos % L] if pos > 0 else edges[L - 1] & edges[0]
        if pos == 0:
            return edges[0]
        if pos == L:
            return edges[L - 1]
        return edges[pos - 1] & edges[pos]

    def extend(pos: int) -> bool:
        if pos == count:
            return True
        for v in sorted(domain(pos)):
            if v in used:
                continue
            chosen.append(v)
            used.add(v)
            if extend(pos + 1):
                return True
            chosen.pop()
            used.remove(v)
        return False

    if extend(0):
        return tuple(chosen)
    return None


def check_berge(
    edges: Sequence[frozenset[int]],
    connectors: Sequence[int],
    cyclic: bool,
) -> None:
    """Validate claimed Berge designated vertices against an edge sequence."""
    L = len(edges)
    kind = PatternKind.BERGE_CYCLE if cyclic else PatternKind.BERGE_PATH
    _check_common(edges, L, kind)
    expected = L if cyclic else L + 1
    _require(
        len(connectors) == expected,
        f"expected {expected} designated vertices, got {len(connectors)}",
    )
    _require(
        len(set(connectors)) == expected,
        "designated vertices must be distinct",
    )
    for i in range(L):
        a = connectors[i]
        b = connectors[(i + 1) % L] if cyclic else connectors[i + 1]
        _require(
            a in edges[i] and b in edges[i],
            f"edge {i} must contain designated vertices {a} and {b}",
        )


def validate_witness(w: Witness, host: KHypergraph | None = None) -> None:
    """Check a witness structurally, and against a host if given.

    Raises :class:`WitnessError` when anything is off; returns None on
    success.
    """
    if host is not None:
        for e in w.edges:
            if e not in host.edge_set:
                raise WitnessError(f"edge {sorted(e)} not in host")
    if w.kind is PatternKind.MINIMAL_CYCLE:
        check_minimal_cycle(w.edges)
        _require(w.connectors == (), "minimal cycles carry no connectors")
    elif w.kind is PatternKind.LINEAR_CYCLE:
        conns = check_linear_cycle(w.edges)
        _require(
            w.connectors == conns,
            f"connectors {w.connectors} do not match computed {conns}",
        )
    elif w.kind is PatternKind.LINEAR_PATH:
        conns = check_linear_path(w.edges)
        _require(
            w.connectors == conns,
            f"connectors {w.connectors} do not match computed {conns}",
        )
    elif w.kind is PatternKind.BERGE_CYCLE:
        check_berge(w.edges, w.connectors, cyclic=True)
    elif w.kind is PatternKind.BERGE_PATH:
        check_berge(w.edges, w.connectors, cyclic=False)
    else:  # pragma: no cover
        raise WitnessError(f"unhandled kind {w.kind}")


def build_linear_path(k: int, length: int) -> list[frozenset[int]]:
    """Canonical linear path: blocks of k vertices chained through shared ends.

    Edge i is {i*(k-1), ..., i*(k-1)+k-1}; the path spans
    length*(k-1)+1 vertices labelled from 0.
    """
    if k < 2:
        raise ValueError("linear patterns need k >= 2")
    if length < 1:
        raise ValueError("path length must be at least 1")
    return [
        frozenset(range(i * (k - 1), i * (k - 1) + k)) for i in range(length)
    ]


def build_linear_cycle(k: int, length: int) -> list[frozenset[int]]:
    """Canonical linear cycle on length*(k-1) vertices.

    As :func:`build_linear_path` but the last edge wraps around to
    vertex 0.
    """
    if k < 2:
        raise ValueError("linear patterns need k >= 2")
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    total = length * (k - 1)
    edges = [
        frozenset(range(i * (k - 1), i * (k - 1) + k))
        for i in range(length - 1)
    ]
    last = frozenset(range((length - 1) * (k - 1), total)) | {0}
    edges.append(last)
    return edges
