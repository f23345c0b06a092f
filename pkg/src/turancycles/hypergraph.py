"""k-uniform hypergraphs on vertex set {0, ..., n-1}.

The central type is :class:`KHypergraph`, an immutable edge list with a
fixed vertex range and uniformity.  Construction goes through
:func:`new_hypergraph`, which validates and deduplicates.  A small set of
structural helpers (vertex deletion with relabelling, isomorphism testing,
plain-text edge-list I/O) lives alongside it, plus :class:`EdgeIndex`, a
bitmask index used by the pattern detectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class HypergraphError(ValueError):
    """Base error for malformed hypergraph input."""


class UniformityError(HypergraphError):
    """An edge does not have exactly k vertices."""


class VertexRangeError(HypergraphError):
    """A vertex lies outside {0, ..., n-1}."""


class EdgeListParseError(HypergraphError):
    """Raised when an edge-list text cannot be parsed.

    Carries the 1-based line number of the offending line.
    """

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True, eq=False)
class KHypergraph:
    """Immutable k-uniform hypergraph.

    ``edges`` preserves first-seen order after deduplication; equality and
    hashing ignore edge order.
    """

    n: int
    k: int
    edges: tuple[frozenset[int], ...]

    @cached_property
    def edge_set(self) -> frozenset[frozenset[int]]:
        return frozenset(self.edges)

    @cached_property
    def index(self) -> "EdgeIndex":
        return EdgeIndex(self)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KHypergraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.k == other.k
            and self.edge_set == other.edge_set
        )

    def __hash__(self) -> int:
        return hash((self.n, self.k, self.edge_set))

    def __repr__(self) -> str:
        return f"KHypergraph(n={self.n}, k={self.k}, m={len(self.edges)})"

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)


def new_hypergraph(
    n: int, k: int, edges: Iterable[Iterable[int]]
) -> KHypergraph:
    """Validate, deduplicate, and freeze an edge list.

    Raises :class:`UniformityError` if an edge has the wrong size and
    :class:`VertexRangeError` if a vertex falls outside {0, ..., n-1}.
    Duplicate edges are dropped, keeping the first occurrence.
    """
    if n < 0:
        raise HypergraphError(f"vertex count must be nonnegative, got {n}")
    if k < 1:
        raise HypergraphError(f"uniformity must be at least 1, got {k}")
    out: list[frozenset[int]] = []
    seen: set[frozenset[int]] = set()
    for raw in edges:
        e = frozenset(raw)
        if len(e) != k:
            raise UniformityError(
                f"edge {sorted(e)} has {len(e)} vertices, expected {k}"
            )
        for v in e:
            if not isinstance(v, int) or isinstance(v, bool):
                raise VertexRangeError(f"vertex {v!r} is not an integer")
            if not 0 <= v < n:
                raise VertexRangeError(
                    f"vertex {v} outside range 0..{n - 1}"
                )
        if e not in seen:
            seen.add(e)
            out.append(e)
    return KHypergraph(n=n, k=k, edges=tuple(out))


def relabel_maps(n: int, removed: Iterable[int]) -> tuple[dict[int, int], list[int]]:
    """Maps between labels of {0..n-1} and its order-preserving compaction.

    Returns ``(old_to_new, new_to_old)`` where surviving vertices keep
    their relative order and are renumbered from 0.
    """
    gone = set(removed)
    old_to_new: dict[int, int] = {}
    new_to_old: list[int] = []
    for v in range(n):
        if v in gone:
            continue
        old_to_new[v] = len(new_to_old)
        new_to_old.append(v)
    return old_to_new, new_to_old


def remove_vertices(H: KHypergraph, removed: Iterable[int]) -> KHypergraph:
    """Delete vertices and every incident edge, relabelling the rest.

    Surviving vertices are renumbered 0..n'-1 in increasing order of their
    old labels.  Use :func:`relabel_maps` to translate back.
    """
    gone = set(removed)
    for v in gone:
        if not 0 <= v < H.n:
            raise VertexRangeError(f"vertex {v} outside range 0..{H.n - 1}")
    old_to_new, new_to_old = relabel_maps(H.n, gone)
    kept = [
        frozenset(old_to_new[v] for v in e)
        for e in H.edges
        if not (e & gone)
    ]
    return KHypergraph(n=len(new_to_old), k=H.k, edges=tuple(kept))


def incident_edge_count(H: KHypergraph, vertices: Iterable[int]) -> int:
    """Number of edges meeting the given vertex set."""
    S = set(vertices)
    return sum(1 for e in H.edges if e & S)


def find_pair_sharing_exactly_one(
    H: KHypergraph,
) -> tuple[int, int] | None:
    """First pair of edge indices (i < j) whose edges share exactly one vertex.

    Pairs are scanned in lexicographic index order; returns None when no
    pair qualifies.
    """
    m = len(H.edges)
    for i in range(m):
        ei = H.edges[i]
        for j in range(i + 1, m):
            if len(ei & H.edges[j]) == 1:
                return (i, j)
    return None


def _vertex_profile(H: KHypergraph) -> list[tuple[int, tuple[int, ...]]]:
    deg = [0] * H.n
    for e in H.edges:
        for v in e:
            deg[v] += 1
    prof: list[tuple[int, tuple[int, ...]]] = []
    incident: list[list[frozenset[int]]] = [[] for _ in range(H.n)]
    for e in H.edges:
        for v in e:
            incident[v].append(e)
    for v in range(H.n):
        neigh = tuple(
            sorted(tuple(sorted(deg[u] for u in e)) for e in incident[v])
        )
        prof.append((deg[v], neigh))
    return prof


def are_isomorphic(A: KHypergraph, B: KHypergraph) -> bool:
    """Test whether two hypergraphs are isomorphic.

    Backtracking over vertex bijections, pruned by degree profiles and by
    checking each fully-mapped edge as soon as its last vertex is placed.
    Fine at desk scale; not intended for large instances.
    """
    if A.n != B.n or A.k != B.k or len(A.edge_set) != len(B.edge_set):
        return False
    prof_a = _vertex_profile(A)
    prof_b = _vertex_profile(B)
    if sorted(prof_a) != sorted(prof_b):
        return False

    b_edges = B.edge_set
    # Map vertices in order of decreasing constraint (high degree first).
    order = sorted(range(A.n), key=lambda v: (-prof_a[v][0], v))
    mapping: dict[int, int] = {}
    used_b: set[int] = set()

    a_edges_by_last: list[list[frozenset[int]]] = [[] for _ in range(A.n)]
    pos_of = {v: i for i, v in enumerate(order)}
    for e in A.edges:
        last = max(e, key=lambda v: pos_of[v])
        a_edges_by_last[pos_of[last]].append(e)

    def extend(i: int) -> bool:
        if i == A.n:
            return True
        v = order[i]
        for w in range(B.n):
            if w in used_b or prof_a[v] != prof_b[w]:
                continue
            mapping[v] = w
            used_b.add(w)
            ok = all(
                frozenset(mapping[u] for u in e) in b_edges
                for e in a_edges_by_last[i]
            )
            if ok and extend(i + 1):
                return True
            del mapping[v]
            used_b.discard(w)
        return False

    return extend(0)


def write_edge_list(H: KHypergraph) -> str:
    """Render a hypergraph as plain text.

    First line is ``k n m``; each following line is one edge as k sorted
    space-separated vertices.  The inverse of :func:`parse_edge_list`.
    """
    lines = [f"{H.k} {H.n} {len(H.edges)}"]
    for e in H.edges:
        lines.append(" ".join(str(v) for v in sorted(e)))
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> KHypergraph:
    """Parse the plain-text edge-list format.

    Blank lines and lines starting with ``#`` are ignored.  The first
    payload line must read ``k n m``; exactly m edge lines must follow,
    each with k integer vertices.  Errors carry 1-based line numbers.
    """
    header: tuple[int, int, int] | None = None
    header_line = 0
    edges: list[list[int]] = []
    edge_lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise EdgeListParseError(f"non-integer token in {line!r}", lineno)
        if header is None:
            if len(nums) != 3:
                raise EdgeListParseError(
                    "header must be three integers: k n m", lineno
                )
            header = (nums[0], nums[1], nums[2])
            header_line = lineno
            continue
        edges.append(nums)
        edge_lines.append(lineno)
    if header is None:
        raise EdgeListParseError("missing header line", 1)
    k, n, m = header
    if m != len(edges):
        raise EdgeListParseError(
            f"header declares {m} edges but {len(edges)} found", header_line
        )
    for nums, lineno in zip(edges, edge_lines):
        if len(nums) != k:
            raise EdgeListParseError(
                f"edge has {len(nums)} vertices, expected {k}", lineno
            )
        for v in nums:
            if not 0 <= v < n:
                raise EdgeListParseError(
                    f"vertex {v} outside range 0..{n - 1}", lineno
                )
        if len(set(nums)) != k:
            raise EdgeListParseError("repeated vertex in edge", lineno)
    try:
        return new_hypergraph(n, k, edges)
    except HypergraphError as exc:  # pragma: no cover - guarded above
        raise EdgeListParseError(str(exc), header_line)


class EdgeIndex:
    """Bitmask index over a hypergraph's edges.

    ``vmasks[i]`` is the vertex bitmask of edge i.  ``incident[v]`` is the
    bitset (as a Python int) of edge indices containing vertex v.  Derived
    masks are computed lazily:

    * ``touch(i)``: edge indices sharing at least one vertex with edge i.
    * ``exact_one(i, v)``: edge indices whose intersection with edge i is
      exactly {v}.
    """

    def __init__(self, H: KHypergraph):
        self.H = H
        self.m = len(H.edges)
        self.all_edges_mask = (1 << self.m) - 1
        self.vmasks = [self._vmask(e) for e in H.edges]
        incident = [0] * H.n
        for i, e in enumerate(H.edges):
            bit = 1 << i
            for v in e:
                incident[v] |= bit
        self.incident = incident
        self._touch: dict[int, int] = {}
        self._exact_one: dict[int, dict[int, int]] = {}

    @staticmethod
    def _vmask(e: frozenset[int]) -> int:
        mask = 0
        for v in e:
            mask |= 1 << v
        return mask

    def vertices_mask(self, vertices: Iterable[int]) -> int:
        mask = 0
        for v in vertices:
            mask |= 1 << v
        return mask

    def touch(self, i: int) -> int:
        """Bitset of edges sharing a vertex with edge i (including i)."""
        cached = self._touch.get(i)
        if cached is None:
            mask = 0
            for v in self.H.edges[i]:
                mask |= self.incident[v]
            self._touch[i] = cached = mask
        return cached

    def exact_one_masks(self, i: int) -> dict[int, int]:
        """For edge i, map each v in the edge to its exact-one bitset.

        ``exact_one_masks(i)[v]`` holds the edges j with
        ``edges[j] & edges[i] == {v}``.  Built with prefix/suffix unions so
        each call is linear in k times the incident masks.
        """
        cached = self._exact_one.get(i)
        if cached is not None:
            return cached
        verts = sorted(self.H.edges[i])
        inc = [self.incident[v] for v in verts]
        kk = len(verts)
        prefix = [0] * (kk + 1)
        for idx in range(kk):
            prefix[idx + 1] = prefix[idx] | inc[idx]
        suffix = [0] * (kk + 1)
        for idx in range(kk - 1, -1, -1):
            suffix[idx] = suffix[idx + 1] | inc[idx]
        out: dict[int, int] = {}
        for idx, v in enumerate(verts):
            others = prefix[idx] | suffix[idx + 1]
            out[v] = inc[idx] & ~others
        self._exact_one[i] = out
        return out

    def exact_one_union(self, i: int) -> int:
        """Bitset of edges meeting edge i in exactly one vertex."""
        mask = 0
        for part in self.exact_one_masks(i).values():
            mask |= part
        return mask


def iter_bits(mask: int):
    """Yield set bit positions of a nonnegative int, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()
