"""Pattern detection in k-uniform hosts.

The public entry points are :func:`iter_pattern_witnesses`,
:func:`contains_pattern`, :func:`contains_disjoint_family`, and
:func:`family_present_with_edge`.  All of them are exhaustive
backtracking searches over edge indices, driven by the bitmask index on
the host (:class:`turancycles.hypergraph.EdgeIndex`).

Cycles are enumerated anchored: the cyclic sequence is rotated so its
smallest edge index comes first, and reflections are collapsed by
requiring the second index to be smaller than the last.  Paths are
oriented so the first edge index is smaller than the last.  Within a
disjoint-family search, later components are pruned by vertex capacity
and by a star test (a component that is a cycle, or a path of length at
least three, cannot live among edges that all share one vertex).
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator, Sequence

from .hypergraph import KHypergraph, iter_bits
from .patterns import (
    FamilySpec,
    PatternKind,
    Witness,
    min_length,
    min_vertices,
    validate_witness,
)

# A pruning hook receives (used_vertex_mask, touched_edges_mask) after
# each edge placement and returns True when the branch cannot lead to a
# complete disjoint family.
Hook = Callable[[int, int], bool]

# Drivers yield (chain, used_vertex_mask, touched_edges_mask, extra)
# where chain is the edge-index sequence and extra carries the Berge
# designated vertices (None for the other kinds).
DriverItem = tuple[tuple[int, ...], int, int, tuple[int, ...] | None]


def _forbidden_vmask(H: KHypergraph, vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        if not 0 <= v < H.n:
            raise ValueError(f"forbidden vertex {v} outside range 0..{H.n - 1}")
        mask |= 1 << v
    return mask


def _allowed_edges(H: KHypergraph, forbidden_vmask: int) -> int:
    ix = H.index
    base = ix.all_edges_mask
    vv = forbidden_vmask
    while vv:
        low = vv & -vv
        base &= ~ix.incident[low.bit_length() - 1]
        vv ^= low
    return base


def _iter_minimal_cycle(
    H: KHypergraph, L: int, base: int, required: int | None, hook: Hook | None
) -> Iterator[DriverItem]:
    ix = H.index
    if base.bit_count() < L:
        return
    if required is not None:
        if not (base >> required) & 1:
            return
        anchors: Iterable[int] = (required,)
    else:
        anchors = iter_bits(base)
    for a0 in anchors:
        rest = base & ~(1 << a0) if required is not None else base & (-1 << (a0 + 1))
        t0 = ix.touch(a0)
        vm0 = ix.vmasks[a0]
        uv0 = vm0
        tm0 = t0
        if hook is not None and hook(uv0, tm0):
            continue
        chain = [a0]

        def rec(p: int, prev: int, excl: int, used: int, used_v: int, tmask: int):
            if p == L - 1:
                cand = ix.touch(prev) & t0 & rest & ~used & ~excl
                if L == 3:
                    inter = vm0 & ix.vmasks[prev]
                    apex = 0
                    vv = inter
                    while vv:
                        low = vv & -vv
                        apex |= ix.incident[low.bit_length() - 1]
                        vv ^= low
                    cand &= ~apex
                cand &= -1 << (chain[1] + 1)
                while cand:
                    low = cand & -cand
                    c = low.bit_length() - 1
                    cand ^= low
                    chain.append(c)
                    yield (
                        tuple(chain),
                        used_v | ix.vmasks[c],
                        tmask | ix.touch(c),
                        None,
                    )
                    chain.pop()
                return
            if p == 1:
                cand = ix.touch(prev) & rest & ~used
            else:
                cand = ix.touch(prev) & rest & ~used & ~t0 & ~excl
            nexcl = (excl | ix.touch(prev)) if p >= 2 else 0
            while cand:
                low = cand & -cand
                c = low.bit_length() - 1
                cand ^= low
                nuv = used_v | ix.vmasks[c]
                ntm = tmask | ix.touch(c)
                if hook is not None and hook(nuv, ntm):
                    continue
                chain.append(c)
                yield from rec(p + 1, c, nexcl, used | low, nuv, ntm)
                chain.pop()

        yield from rec(1, a0, 0, 1 << a0, uv0, tm0)


def _iter_linear_cycle(
    H: KHypergraph, L: int, base: int, required: int | None, hook: Hook | None
) -> Iterator[DriverItem]:
    ix = H.index
    if base.bit_count() < L:
        return
    if required is not None:
        if not (base >> required) & 1:
            return
        anchors: Iterable[int] = (required,)
    else:
        anchors = iter_bits(base)
    for a0 in anchors:
        rest = base & ~(1 << a0) if required is not None else base & (-1 << (a0 + 1))
        t0 = ix.touch(a0)
        eou0 = ix.exact_one_union(a0)
        vm0 = ix.vmasks[a0]
        if hook is not None and hook(vm0, t0):
            continue
        chain = [a0]

        def rec(p: int, prev: int, excl: int, used: int, used_v: int, tmask: int):
            if p == L - 1:
                cand = (
                    ix.exact_one_union(prev)
                    & eou0
                    & rest
                    & ~used
                    & ~excl
                    & (-1 << (chain[1] + 1))
                )
                vm_prev = ix.vmasks[prev]
                while cand:
                    low = cand & -cand
                    c = low.bit_length() - 1
                    cand ^= low
                    if L == 3:
                        vmc = ix.vmasks[c]
                        c01 = vm0 & vm_prev
                        c12 = vm_prev & vmc
                        c20 = vmc & vm0
                        if c01 == c12 or c12 == c20 or c01 == c20:
                            continue
                    chain.append(c)
                    yield (
                        tuple(chain),
                        used_v | ix.vmasks[c],
                        tmask | ix.touch(c),
                        None,
                    )
                    chain.pop()
                return
            if p == 1:
                cand = ix.exact_one_union(prev) & rest & ~used
            else:
                cand = ix.exact_one_union(prev) & rest & ~used & ~t0 & ~excl
            nexcl = (excl | ix.touch(prev)) if p >= 2 else 0
            while cand:
                low = cand & -cand
                c = low.bit_length() - 1
                cand ^= low
                nuv = used_v | ix.vmasks[c]
                ntm = tmask | ix.touch(c)
                if hook is not None and hook(nuv, ntm):
                    continue
                chain.append(c)
                yield from rec(p + 1, c, nexcl, used | low, nuv, ntm)
                chain.pop()

        yield from rec(1, a0, 0, 1 << a0, vm0, t0)


def _iter_linear_path(
    H: KHypergraph, L: int, base: int, required: int | None, hook: Hook | None
) -> Iterator[DriverItem]:
    ix = H.index
    if base.bit_count() < L:
        return
    if required is not None and not (base >> required) & 1:
        return
    if L == 1:
        picks = (required,) if required is not None else iter_bits(base)
        for e in picks:
            uv = ix.vmasks[e]
            tm = ix.touch(e)
            if hook is not None and hook(uv, tm):
                continue
            yield ((e,), uv, tm, None)
        return

    def run(forced: int | None):
        # forced is the position the required edge is pinned to.
        if forced == 0:
            starts: Iterable[int] = (required,)
        else:
            starts = iter_bits(base)
        for e0 in starts:
            uv0 = ix.vmasks[e0]
            tm0 = ix.touch(e0)
            if hook is not None and hook(uv0, tm0):
                continue
            chain = [e0]

            def rec(p: int, prev: int, excl: int, used: int, used_v: int, tmask: int):
                cand = ix.exact_one_union(prev) & base & ~used & ~excl
                if forced is not None and p == forced:
                    cand &= 1 << required
                if p == L - 1:
                    if forced is None:
                        cand &= -1 << (chain[0] + 1)
                    while cand:
                        low = cand & -cand
                        c = low.bit_length() - 1
                        cand ^= low
                        chain.append(c)
                        yield (
                            tuple(chain),
                            used_v | ix.vmasks[c],
                            tmask | ix.touch(c),
                            None,
                        )
                        chain.pop()
                    return
                nexcl = excl | ix.touch(prev)
                while cand:
                    low = cand & -cand
                    c = low.bit_length() - 1
                    cand ^= low
                    nuv = used_v | ix.vmasks[c]
                    ntm = tmask | ix.touch(c)
                    if hook is not None and hook(nuv, ntm):
                        continue
                    chain.append(c)
                    yield from rec(p + 1, c, nexcl, used | low, nuv, ntm)
                    chain.pop()

            yield from rec(1, e0, 0, 1 << e0, uv0, tm0)

    if required is None:
        yield from run(None)
    else:
        for j in range(L):
            yield from run(j)


def _iter_berge(
    H: KHypergraph,
    L: int,
    base: int,
    cyclic: bool,
    required: int | None,
    hook: Hook | None,
) -> Iterator[DriverItem]:
    ix = H.index
    if base.bit_count() < L:
        return
    if required is not None and not (base >> required) & 1:
        return

    def run_cycle():
        anchors = (required,) if required is not None else iter_bits(base)
        for a0 in anchors:
            rest = (
                base & ~(1 << a0) if required is not None else base & (-1 << (a0 + 1))
            )
            uv0 = ix.vmasks[a0]
            tm0 = ix.touch(a0)
            if hook is not None and hook(uv0, tm0):
                continue
            e0_sorted = sorted(H.edges[a0])
            chain = [a0]
            verts: list[int] = []

            def rec(p: int, used: int, used_v: int, tmask: int, used_dv: int):
                # verts holds v_0..v_p; edge at position p must contain
                # v_p, and the closing edge must also contain v_0.
                vp = verts[-1]
                cand = ix.incident[vp] & rest & ~used
                if p == L - 1:
                    cand &= ix.incident[verts[0]] & (-1 << (chain[1] + 1))
                    while cand:
                        low = cand & -cand
                        c = low.bit_length() - 1
                        cand ^= low
                        chain.append(c)
                        yield (
                            tuple(chain),
                            used_v | ix.vmasks[c],
                            tmask | ix.touch(c),
                            tuple(verts),
                        )
                        chain.pop()
                    return
                while cand:
                    low = cand & -cand
                    c = low.bit_length() - 1
                    cand ^= low
                    nuv = used_v | ix.vmasks[c]
                    ntm = tmask | ix.touch(c)
                    if hook is not None and hook(nuv, ntm):
                        continue
                    chain.append(c)
                    for w in sorted(H.edges[c]):
                        if (used_dv >> w) & 1:
                            continue
                        verts.append(w)
                        yield from rec(
                            p + 1, used | low, nuv, ntm, used_dv | (1 << w)
                        )
                        verts.pop()
                    chain.pop()

            for v0 in e0_sorted:
                verts.append(v0)
                for v1 in e0_sorted:
                    if v1 == v0:
                        continue
                    verts.append(v1)
                    yield from rec(
                        1, 1 << a0, uv0, tm0, (1 << v0) | (1 << v1)
                    )
                    verts.pop()
                verts.pop()

    def run_path(forced: int | None):
        starts = (required,) if forced == 0 else iter_bits(base)
        for a0 in starts:
            uv0 = ix.vmasks[a0]
            tm0 = ix.touch(a0)
            if hook is not None and hook(uv0, tm0):
                continue
            e0_sorted = sorted(H.edges[a0])
            chain = [a0]
            verts: list[int] = []

            def rec(p: int, used: int, used_v: int, tmask: int, used_dv: int):
                if p == L:
                    # verts already holds v_0 .. v_L, one per edge end.
                    yield (tuple(chain), used_v, tmask, tuple(verts))
                    return
                vp = verts[-1]
                cand = ix.incident[vp] & base & ~used
                if forced is not None and p == forced:
                    cand &= 1 << required
                if forced is None and p == L - 1:
                    cand &= -1 << (chain[0] + 1)
                while cand:
                    low = cand & -cand
                    c = low.bit_length() - 1
                    cand ^= low
                    nuv = used_v | ix.vmasks[c]
                    ntm = tmask | ix.touch(c)
                    if hook is not None and hook(nuv, ntm):
                        continue
                    chain.append(c)
                    for w in sorted(H.edges[c]):
                        if (used_dv >> w) & 1:
                            continue
                        verts.append(w)
                        yield from rec(
                            p + 1, used | low, nuv, ntm, used_dv | (1 << w)
                        )
                        verts.pop()
                    chain.pop()

            for v0 in e0_sorted:
                verts.append(v0)
                for v1 in e0_sorted:
                    if v1 == v0:
                        continue
                    verts.append(v1)
                    yield from rec(
                        1, 1 << a0, uv0, tm0, (1 << v0) | (1 << v1)
                    )
                    verts.pop()
                verts.pop()

    if cyclic:
        yield from run_cycle()
    elif required is None:
        yield from run_path(None)
    else:
        for j in range(L):
            yield from run_path(j)


def _driver(
    H: KHypergraph,
    kind: PatternKind,
    length: int,
    base: int,
    required: int | None,
    hook: Hook | None,
) -> Iterator[DriverItem]:
    if kind is PatternKind.MINIMAL_CYCLE:
        return _iter_minimal_cycle(H, length, base, required, hook)
    if kind is PatternKind.LINEAR_CYCLE:
        return _iter_linear_cycle(H, length, base, required, hook)
    if kind is PatternKind.LINEAR_PATH:
        return _iter_linear_path(H, length, base, required, hook)
    if kind is PatternKind.BERGE_CYCLE:
        return _iter_berge(H, length, base, cyclic=True, required=required, hook=hook)
    if kind is PatternKind.BERGE_PATH:
        return _iter_berge(H, length, base, cyclic=False, required=required, hook=hook)
    raise ValueError(f"unhandled kind {kind}")


def _materialise(
    H: KHypergraph, kind: PatternKind, item: DriverItem
) -> Witness:
    chain, _, _, verts = item
    edges = tuple(H.edges[i] for i in chain)
    L = len(chain)
    if kind is PatternKind.MINIMAL_CYCLE:
        connectors: tuple[int, ...] = ()
    elif kind is PatternKind.LINEAR_CYCLE:
        connectors = tuple(
            min(edges[i] & edges[(i + 1) % L]) for i in range(L)
        )
    elif kind is PatternKind.LINEAR_PATH:
        connectors = tuple(min(edges[i] & edges[i + 1]) for i in range(L - 1))
    else:
        connectors = verts if verts is not None else ()
    return Witness(kind=kind, length=L, edges=edges, connectors=connectors)


def _resolve_required(H: KHypergraph, edge) -> int:
    e = frozenset(edge)
    for i, he in enumerate(H.edges):
        if he == e:
            return i
    raise ValueError(f"required edge {sorted(e)} is not an edge of the host")


def iter_pattern_witnesses(
    H: KHypergraph,
    kind: PatternKind,
    length: int,
    *,
    forbidden_vertices: Iterable[int] = (),
    required_edge=None,
) -> Iterator[Witness]:
    """Enumerate witnesses of one pattern in the host.

    ``forbidden_vertices`` removes every edge touching them from
    consideration.  ``required_edge`` (a vertex collection equal to a host
    edge) restricts to witnesses using that edge; patterns through it may
    then be reported more than once.
    """
    if length < min_length(kind):
        raise ValueError(
            f"{kind.value} length must be at least {min_length(kind)}"
        )
    fmask = _forbidden_vmask(H, forbidden_vertices)
    base = _allowed_edges(H, fmask)
    required = None
    if required_edge is not None:
        required = _resolve_required(H, required_edge)
    for item in _driver(H, kind, length, base, required, None):
        yield _materialise(H, kind, item)


def contains_pattern(
    H: KHypergraph,
    kind: PatternKind,
    length: int,
    *,
    forbidden_vertices: Iterable[int] = (),
    required_edge=None,
) -> Witness | None:
    """First witness of the pattern, or None.  The result is validated."""
    for w in iter_pattern_witnesses(
        H,
        kind,
        length,
        forbidden_vertices=forbidden_vertices,
        required_edge=required_edge,
    ):
        validate_witness(w, host=H)
        return w
    return None


def _star_covered(ix, n: int, avail: int) -> bool:
    """True when one vertex lies in every available edge."""
    for v in range(n):
        if ix.incident[v] & avail == avail:
            return True
    return False


_STAR_FREE_KINDS = (PatternKind.MINIMAL_CYCLE, PatternKind.LINEAR_CYCLE)


def _component_impossible(
    H: KHypergraph, kind: PatternKind, length: int, avail: int
) -> bool:
    if avail.bit_count() < length:
        return True
    if kind in _STAR_FREE_KINDS or (
        kind is PatternKind.LINEAR_PATH and length >= 3
    ):
        # Cycles, and linear paths with three or more edges, need two
        # disjoint-ish edges; a family all through one vertex has none.
        if _star_covered(H.index, H.n, avail):
            return True
    return False


def contains_disjoint_family(
    H: KHypergraph, spec: FamilySpec
) -> tuple[Witness, ...] | None:
    """Find vertex-disjoint witnesses for every requested component.

    Returns the witnesses in the order ``spec.components`` lists them, or
    None when no such family exists.  Each witness is validated before
    being returned.
    """
    if spec.k != H.k:
        raise ValueError(
            f"spec is {spec.k}-uniform but host is {H.k}-uniform"
        )
    r = len(spec.components)
    order = sorted(
        range(r), key=lambda i: (-spec.components[i][1], i)
    )
    comps = [spec.components[i] for i in order]
    suffix_minv = [0] * (r + 1)
    for j in range(r - 1, -1, -1):
        kind, length = comps[j]
        suffix_minv[j] = suffix_minv[j + 1] + min_vertices(kind, length, H.k)

    def suffix_doomed(j: int, blocked_v: int, avail: int) -> bool:
        if H.n - blocked_v.bit_count() < suffix_minv[j]:
            return True
        for kind, length in comps[j:]:
            if _component_impossible(H, kind, length, avail):
                return True
        return False

    found: list[DriverItem | None] = [None] * r

    def rec(j: int, blocked_v: int, avail: int) -> bool:
        if j == r:
            return True
        if suffix_doomed(j, blocked_v, avail):
            return False
        kind, length = comps[j]
        if j + 1 < r:
            hook: Hook | None = lambda uv, tm: suffix_doomed(
                j + 1, blocked_v | uv, avail & ~tm
            )
        else:
            hook = None
        for item in _driver(H, kind, length, avail, None, hook):
            found[j] = item
            _, used_v, tmask, _ = item
            if rec(j + 1, blocked_v | used_v, avail & ~tmask):
                return True
        return False

    if not rec(0, 0, H.index.all_edges_mask):
        return None
    by_original: list[Witness | None] = [None] * r
    for j, item in enumerate(found):
        kind, _ = comps[j]
        w = _materialise(H, kind, item)
        validate_witness(w, host=H)
        by_original[order[j]] = w
    return tuple(by_original)  # type: ignore[arg-type]


def family_present_with_edge(H: KHypergraph, spec: FamilySpec, edge) -> bool:
    """Does the host contain the disjoint family with ``edge`` in it?

    True exactly when some disjoint witness family uses the given edge
    in one of its components.
    """
    if spec.k != H.k:
        raise ValueError(
            f"spec is {spec.k}-uniform but host is {H.k}-uniform"
        )
    target = _resolve_required(H, edge)
    ix = H.index
    r = len(spec.components)
    order = sorted(range(r), key=lambda i: (-spec.components[i][1], i))
    comps = [spec.components[i] for i in order]
    suffix_minv = [0] * (r + 1)
    for j in range(r - 1, -1, -1):
        kind, length = comps[j]
        suffix_minv[j] = suffix_minv[j + 1] + min_vertices(kind, length, H.k)

    def suffix_doomed(j: int, blocked_v: int, avail: int) -> bool:
        if H.n - blocked_v.bit_count() < suffix_minv[j]:
            return True
        for kind, length in comps[j:]:
            if _component_impossible(H, kind, length, avail):
                return True
        return False

    def rec(j: int, blocked_v: int, avail: int, pending: bool) -> bool:
        if j == r:
            return not pending
        if suffix_doomed(j, blocked_v, avail):
            return False
        kind, length = comps[j]
        if j + 1 < r:
            hook: Hook | None = lambda uv, tm: suffix_doomed(
                j + 1, blocked_v | uv, avail & ~tm
            )
        else:
            hook = None
        if not pending:
            for item in _driver(H, kind, length, avail, None, hook):
                _, used_v, tmask, _ = item
                if rec(j + 1, blocked_v | used_v, avail & ~tmask, False):
                    return True
            return False
        # Branch A: this component uses the target edge.
        for item in _driver(H, kind, length, avail, target, hook):
            _, used_v, tmask, _ = item
            if rec(j + 1, blocked_v | used_v, avail & ~tmask, False):
                return True
        # Branch B: this component avoids the target edge's vertices
        # entirely (some later component must contain the edge, and all
        # components are pairwise vertex-disjoint).
        avail_b = avail & ~ix.touch(target)
        for item in _driver(H, kind, length, avail_b, None, hook):
            _, used_v, tmask, _ = item
            if rec(j + 1, blocked_v | used_v, avail & ~tmask, True):
                return True
        return False

    return rec(0, 0, ix.all_edges_mask, True)
