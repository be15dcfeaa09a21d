"""Vertex covers of weighted oriented graphs.

A cover ``C`` splits into three parts: ``L1`` holds the vertices with an
out-neighbour outside ``C``, ``L2`` the remaining vertices with an
in-neighbour outside ``C``, and ``L3`` everything else (equivalently the
vertices whose whole neighbourhood lies in ``C``).  ``C`` is *strong* when
every ``L3`` vertex has an in-neighbour of weight != 1 lying in ``L2 | L3``.

All enumeration runs on integer bit masks (bit ``i`` is vertex ``i`` in
canonical order).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotACover, SizeCap
from .graph import WeightedOrientedGraph, _bits, build_graph, is_connected

MINIMAL_COVER_CAP = 24
STRONG_COVER_CAP = 20


@dataclass(frozen=True)
class CoverAnalysis:
    cover: frozenset
    l1: frozenset
    l2: frozenset
    l3: frozenset
    is_minimal: bool
    is_strong: bool
    # L3 vertex -> chosen in-neighbour; empty when the cover is not strong
    strong_witness: dict = field(default_factory=dict, compare=False)

    def to_json(self, g: WeightedOrientedGraph) -> dict:
        return {
            "cover": g.ordered(self.cover),
            "l1": g.ordered(self.l1),
            "l2": g.ordered(self.l2),
            "l3": g.ordered(self.l3),
            "minimal": self.is_minimal,
            "strong": self.is_strong,
            "witness": {x: self.strong_witness[x] for x in g.ordered(self.strong_witness)},
        }


@dataclass(frozen=True)
class UnicycleBlock:
    vertices: frozenset
    cycle: tuple  # vertices in edge direction: cycle[i] -> cycle[i + 1]
    edges: frozenset  # cycle edges plus the out-tree edges hanging off it


@dataclass(frozen=True)
class UnicyclePartition:
    blocks: tuple


# -- mask level primitives -----------------------------------------------

def uncovered_edge(g: WeightedOrientedGraph, mask: int):
    for tail, head in g.sorted_edges():
        if not (mask >> g.index(tail) & 1 or mask >> g.index(head) & 1):
            return tail, head
    return None


def is_cover_mask(g: WeightedOrientedGraph, mask: int) -> bool:
    outside = g.full_mask & ~mask
    return all(not g.nbr_mask[i] & outside for i in _bits(outside))


def l_masks(g: WeightedOrientedGraph, mask: int):
    """Return ``(L1, L2, L3)`` masks of the cover ``mask``."""
    outside = g.full_mask & ~mask
    l1 = l2 = 0
    for i in _bits(mask):
        if g.out_mask[i] & outside:
            l1 |= 1 << i
        elif g.in_mask[i] & outside:
            l2 |= 1 << i
    return l1, l2, mask & ~(l1 | l2)


def strong_mask(g: WeightedOrientedGraph, mask: int) -> bool:
    l1, _, l3 = l_masks(g, mask)
    allowed = g.vplus_mask & mask & ~l1
    return all(g.in_mask[i] & allowed for i in _bits(l3))


# -- public API ------------------------------------------------------------

def is_vertex_cover(g: WeightedOrientedGraph, cover) -> bool:
    return is_cover_mask(g, g.to_mask(cover))


def _require_cover(g, cover) -> int:
    mask = g.to_mask(cover)
    edge = uncovered_edge(g, mask)
    if edge is not None:
        raise NotACover(edge)
    return mask


def _analysis(g: WeightedOrientedGraph, mask: int) -> CoverAnalysis:
    l1, l2, l3 = l_masks(g, mask)
    # L3 must coincide with {x in C : N(x) subset of C}
    closed = sum(1 << i for i in _bits(mask) if not g.nbr_mask[i] & ~mask)
    assert closed == l3, "L3 disagrees with its closed form"
    allowed = g.vplus_mask & (l2 | l3)
    witness = {}
    strong = True
    for i in _bits(l3):
        candidates = g.in_mask[i] & allowed
        if not candidates:
            strong = False
            witness = {}
            break
        low = candidates & -candidates
        witness[g.vertices[i]] = g.vertices[low.bit_length() - 1]
    return CoverAnalysis(
        cover=g.from_mask(mask), l1=g.from_mask(l1), l2=g.from_mask(l2), l3=g.from_mask(l3),
        is_minimal=l3 == 0, is_strong=strong, strong_witness=witness,
    )


def l_partition(g: WeightedOrientedGraph, cover) -> CoverAnalysis:
    return _analysis(g, _require_cover(g, cover))


def is_minimal_cover(g: WeightedOrientedGraph, cover) -> bool:
    return not l_masks(g, _require_cover(g, cover))[2]


def is_strong_cover(g: WeightedOrientedGraph, cover) -> bool:
    return strong_mask(g, _require_cover(g, cover))


def cover_sort_key(g: WeightedOrientedGraph, cover) -> tuple:
    """Canonical order: by size, then by the sorted vertex indices."""
    idx = sorted(g.index(v) for v in cover)
    return len(idx), idx


def _mask_key(mask: int):
    return mask.bit_count(), list(_bits(mask))


def iter_cover_masks(g: WeightedOrientedGraph, minimal_only=False):
    """Yield the vertex cover masks of ``g`` by in/out backtracking.

    A vertex left out forces its neighbours in, so every leaf of the search
    is a cover.  With ``minimal_only`` a vertex kept in needs at least one
    neighbour that is still allowed to stay out.
    """
    n = len(g)
    nbr = g.nbr_mask

    def rec(i, inside, outside):
        if i == n:
            if minimal_only:
                for j in _bits(inside):
                    if not nbr[j] & outside:
                        return
            yield inside
            return
        bit = 1 << i
        if inside & bit:
            yield from rec(i + 1, inside, outside)
            return
        if not nbr[i] & outside:
            yield from rec(i + 1, inside | nbr[i], outside | bit)
        if minimal_only:
            # some neighbour must still be able to stay out
            undecided = ~((1 << (i + 1)) - 1)
            if not nbr[i] & (outside | (undecided & ~inside)):
                return
        yield from rec(i + 1, inside | bit, outside)

    yield from rec(0, 0, 0)


def enumerate_minimal_covers(g: WeightedOrientedGraph, max_n: int = MINIMAL_COVER_CAP) -> list:
    """All inclusion-minimal vertex covers, canonically ordered."""
    if len(g) > max_n:
        raise SizeCap("minimal cover enumeration", len(g), max_n)
    masks = set(iter_cover_masks(g, minimal_only=True))
    return [g.from_mask(m) for m in sorted(masks, key=_mask_key)]


def strong_cover_masks(g: WeightedOrientedGraph, max_n: int = STRONG_COVER_CAP) -> list:
    if len(g) > max_n:
        raise SizeCap("strong cover enumeration", len(g), max_n)
    return sorted((m for m in iter_cover_masks(g) if strong_mask(g, m)), key=_mask_key)


def enumerate_strong_covers(g: WeightedOrientedGraph, max_n: int = STRONG_COVER_CAP) -> list:
    """Every strong vertex cover (minimal or not) as a CoverAnalysis."""
    return [_analysis(g, m) for m in strong_cover_masks(g, max_n)]


def full_vertex_set_strong(g: WeightedOrientedGraph) -> bool:
    """True iff every vertex has an in-neighbour of weight != 1."""
    return all(m & g.vplus_mask for m in g.in_mask)


# -- unicycle partitions -----------------------------------------------------

def unicycle_partition(g: WeightedOrientedGraph):
    """Partition V into unicycle oriented subgraphs, or None if V is not strong.

    Greedy: from the first remaining vertex walk backwards along in-neighbours
    of weight != 1 until a vertex repeats; the repeat closes an oriented
    cycle and the walk gives a path hanging off it.  The block then grows by
    any edge leaving a weight != 1 block vertex into the remaining vertices.
    When V is strong every remaining vertex keeps such an in-neighbour among
    the remaining vertices, so the loop always finishes.
    """
    if not full_vertex_set_strong(g):
        return None
    remaining = g.full_mask
    blocks = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        walk = [start]
        pos = {start: 0}
        while True:
            preds = g.in_mask[walk[-1]] & g.vplus_mask & remaining
            low = preds & -preds
            y = low.bit_length() - 1
            if y in pos:
                break
            pos[y] = len(walk)
            walk.append(y)
        j = pos[y]
        # walk[k] <- walk[k+1]; the edge y -> walk[-1] closes the cycle
        cycle_rev = walk[j:]
        cycle = [cycle_rev[0]] + cycle_rev[:0:-1]
        edges = {(walk[k + 1], walk[k]) for k in range(len(walk) - 1)}
        edges.add((y, walk[-1]))
        block = 0
        for k in walk:
            block |= 1 << k
        grown = True
        while grown:
            grown = False
            for i in _bits(block & g.vplus_mask):
                fresh = g.out_mask[i] & remaining & ~block
                for h in _bits(fresh):
                    edges.add((i, h))
                    block |= 1 << h
                    grown = True
        remaining &= ~block
        names = g.vertices
        blocks.append(UnicycleBlock(
            vertices=g.from_mask(block),
            cycle=tuple(names[k] for k in cycle),
            edges=frozenset((names[t], names[h]) for t, h in edges),
        ))
    return UnicyclePartition(tuple(blocks))


def is_unicycle_oriented(g: WeightedOrientedGraph) -> bool:
    """Check the unicycle oriented graph conditions.

    Connected underlying graph with exactly one cycle, that cycle oriented,
    every other vertex reachable from it by a directed path, and weight != 1
    on every vertex of underlying degree >= 2.
    """
    n = len(g)
    if n < 3 or len(g.edges) != n:
        return False
    if not is_connected(g):
        return False
    # strip leaves to expose the unique cycle
    deg = [m.bit_count() for m in g.nbr_mask]
    alive = g.full_mask
    leaves = [i for i in range(n) if deg[i] == 1]
    while leaves:
        i = leaves.pop()
        alive &= ~(1 << i)
        for j in _bits(g.nbr_mask[i] & alive):
            deg[j] -= 1
            if deg[j] == 1:
                leaves.append(j)
    cyc = list(_bits(alive))
    # oriented cycle: inside it every vertex has exactly one in- and one out-edge
    if any((g.in_mask[i] & alive).bit_count() != 1 or (g.out_mask[i] & alive).bit_count() != 1
           for i in cyc):
        return False
    reach = alive
    frontier = alive
    while frontier:
        nxt = 0
        for i in _bits(frontier):
            nxt |= g.out_mask[i]
        frontier = nxt & ~reach
        reach |= frontier
    if reach != g.full_mask:
        return False
    return all(g.weight(g.vertices[i]) != 1 for i in range(n) if g.nbr_mask[i].bit_count() >= 2)


def block_graph(g: WeightedOrientedGraph, block: UnicycleBlock) -> WeightedOrientedGraph:
    """The subgraph formed by one partition block and its chosen edges."""
    verts = g.ordered(block.vertices)
    return build_graph({v: g.weight(v) for v in verts}, block.edges)
