"""Weighted oriented graphs: construction, validation and structural queries.

Vertices keep the order in which they were supplied; that order drives every
deterministic output of the package (generators, covers, components).
Internally each vertex also gets a bit so that vertex sets can be handled as
integer masks by the enumeration code.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable, Mapping

from .errors import (
    AntiparallelPair,
    DuplicateVertex,
    ExponentOverflow,
    LoopEdge,
    NonpositiveWeight,
    NotStableSet,
    UnknownVertex,
)

# Exponents and weights are checked against a signed 64-bit bound.
MAX_WEIGHT = 2**63 - 1

Vertex = Hashable


class WeightedOrientedGraph:
    """An immutable weighted oriented graph ``D = (V, E, w)``.

    Use :func:`build_graph` to construct one; it validates the input and
    forces every source to weight 1.
    """

    __slots__ = (
        "vertices", "_weights", "edges", "normalized", "_index",
        "out_mask", "in_mask", "nbr_mask", "vplus_mask",
    )

    def __init__(self, vertices, weights, edges, normalized=()):
        self.vertices: tuple = tuple(vertices)
        self._weights = dict(weights)
        self.edges: frozenset = frozenset(edges)
        # vertices whose weight was reset to 1 because they are sources
        self.normalized: tuple = tuple(normalized)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        n = len(self.vertices)
        out_mask = [0] * n
        in_mask = [0] * n
        for tail, head in self.edges:
            t, h = self._index[tail], self._index[head]
            out_mask[t] |= 1 << h
            in_mask[h] |= 1 << t
        self.out_mask = tuple(out_mask)
        self.in_mask = tuple(in_mask)
        self.nbr_mask = tuple(o | i for o, i in zip(out_mask, in_mask))
        self.vplus_mask = sum(1 << i for i, v in enumerate(self.vertices) if self._weights[v] != 1)

    # -- basic accessors -------------------------------------------------

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, vertex):
        return vertex in self._index

    def __eq__(self, other):
        if not isinstance(other, WeightedOrientedGraph):
            return NotImplemented
        return (self.vertices == other.vertices and self._weights == other._weights
                and self.edges == other.edges)

    def __hash__(self):
        return hash((self.vertices, tuple(self._weights[v] for v in self.vertices), self.edges))

    def __repr__(self):
        ws = ", ".join(f"{v}:{self._weights[v]}" for v in self.vertices)
        es = ", ".join(f"{t}->{h}" for t, h in self.sorted_edges())
        return f"WeightedOrientedGraph({ws}; {es})"

    def weight(self, vertex) -> int:
        try:
            return self._weights[vertex]
        except KeyError:
            raise UnknownVertex(vertex) from None

    @property
    def weights(self) -> dict:
        return {v: self._weights[v] for v in self.vertices}

    def index(self, vertex) -> int:
        try:
            return self._index[vertex]
        except KeyError:
            raise UnknownVertex(vertex) from None

    @property
    def full_mask(self) -> int:
        return (1 << len(self.vertices)) - 1

    @property
    def vplus(self) -> frozenset:
        """Vertices of weight different from 1."""
        return self.from_mask(self.vplus_mask)

    def sorted_edges(self) -> list:
        return sorted(self.edges, key=lambda e: (self._index[e[0]], self._index[e[1]]))

    # -- vertex set <-> mask ---------------------------------------------

    def to_mask(self, vertices: Iterable) -> int:
        mask = 0
        for v in vertices:
            mask |= 1 << self.index(v)
        return mask

    def from_mask(self, mask: int) -> frozenset:
        return frozenset(self.vertices[i] for i in _bits(mask))

    def ordered(self, vertices: Iterable) -> list:
        """Return ``vertices`` sorted by canonical vertex order."""
        return sorted(vertices, key=self.index)

    # -- structure -------------------------------------------------------

    def is_source(self, vertex) -> bool:
        return self.in_mask[self.index(vertex)] == 0

    def is_sink(self, vertex) -> bool:
        return self.out_mask[self.index(vertex)] == 0

    def degree(self, vertex) -> int:
        return self.nbr_mask[self.index(vertex)].bit_count()

    def induced(self, vertices: Iterable) -> "WeightedOrientedGraph":
        """Induced subgraph on ``vertices``, re-normalized."""
        keep = self.to_mask(vertices)
        verts = [v for i, v in enumerate(self.vertices) if keep >> i & 1]
        kept = set(verts)
        edges = [(t, h) for t, h in self.edges if t in kept and h in kept]
        return build_graph({v: self._weights[v] for v in verts}, edges)

    def relabel(self, mapping: Mapping) -> "WeightedOrientedGraph":
        """Rename vertices; order is preserved."""
        return build_graph(
            {mapping[v]: self._weights[v] for v in self.vertices},
            [(mapping[t], mapping[h]) for t, h in self.edges],
        )

    def to_json(self) -> dict:
        return {
            "vertices": [{"name": v, "weight": self._weights[v]} for v in self.vertices],
            "edges": [[t, h] for t, h in self.sorted_edges()],
        }


@dataclass(frozen=True)
class SimpleGraph:
    vertices: tuple
    edges: frozenset  # of frozenset({x, y})

    def neighbors(self, vertex) -> set:
        return {u for e in self.edges if vertex in e for u in e if u != vertex}


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build_graph(vertices, edges=()) -> WeightedOrientedGraph:
    """Validate a raw description and return the normalized graph.

    ``vertices`` is either a mapping ``name -> weight`` or an iterable of
    ``(name, weight)`` pairs; ``edges`` is an iterable of ``(tail, head)``.
    Any vertex without in-neighbours gets weight 1; the names of vertices
    whose weight changed are kept in ``graph.normalized``.
    """
    pairs = list(vertices.items()) if isinstance(vertices, Mapping) else list(vertices)
    weights = {}
    order = []
    for name, weight in pairs:
        if name in weights:
            raise DuplicateVertex(name)
        if isinstance(weight, bool) or not isinstance(weight, int) or weight < 1:
            raise NonpositiveWeight(name, weight)
        if weight > MAX_WEIGHT:
            raise ExponentOverflow(f"weight of {name!r} exceeds {MAX_WEIGHT}")
        weights[name] = weight
        order.append(name)

    edge_set = set()
    for edge in edges:
        tail, head = edge
        for v in (tail, head):
            if v not in weights:
                raise UnknownVertex(v)
        if tail == head:
            raise LoopEdge(tail)
        if (head, tail) in edge_set:
            raise AntiparallelPair(head, tail)
        edge_set.add((tail, head))

    heads = {h for _, h in edge_set}
    normalized = []
    for v in order:
        if v not in heads and weights[v] != 1:
            weights[v] = 1
            normalized.append(v)
    return WeightedOrientedGraph(order, weights, edge_set, normalized)


def neighborhoods(g: WeightedOrientedGraph, x):
    """Return ``(N+(x), N-(x), N(x))`` as frozensets."""
    i = g.index(x)
    return (g.from_mask(g.out_mask[i]), g.from_mask(g.in_mask[i]), g.from_mask(g.nbr_mask[i]))


def underlying_graph(g: WeightedOrientedGraph) -> SimpleGraph:
    return SimpleGraph(g.vertices, frozenset(frozenset(e) for e in g.edges))


def _check_stable(g, mask):
    for i in _bits(mask):
        clash = g.nbr_mask[i] & mask
        if clash:
            j = clash.bit_length() - 1
            a, b = g.vertices[i], g.vertices[j]
            raise NotStableSet((a, b) if (a, b) in g.edges else (b, a))


def c_minor(g: WeightedOrientedGraph, stable: Iterable) -> WeightedOrientedGraph:
    """Delete the closed neighbourhood of a stable set and re-normalize."""
    mask = g.to_mask(stable)
    _check_stable(g, mask)
    closed = mask
    for i in _bits(mask):
        closed |= g.nbr_mask[i]
    return g.induced(g.from_mask(g.full_mask & ~closed))


def component_masks(g: WeightedOrientedGraph) -> list:
    """Vertex masks of the connected components, ordered by smallest vertex."""
    seen = 0
    comps = []
    for start in range(len(g)):
        if seen >> start & 1:
            continue
        comp = frontier = 1 << start
        while frontier:
            nxt = 0
            for i in _bits(frontier):
                nxt |= g.nbr_mask[i]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def connected_components(g: WeightedOrientedGraph) -> list:
    return [g.induced(g.from_mask(m)) for m in component_masks(g)]


def is_connected(g: WeightedOrientedGraph) -> bool:
    return len(component_masks(g)) <= 1


# -- shape classification ------------------------------------------------

def bipartition(g: WeightedOrientedGraph):
    """Two-colouring of the underlying graph, or None if it has an odd cycle.

    Each component's smallest vertex goes to the first part.
    """
    color = {}
    for start in g.vertices:
        if start in color:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for i in _bits(g.nbr_mask[g.index(v)]):
                u = g.vertices[i]
                if u not in color:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    first = [v for v in g.vertices if color[v] == 0]
    second = [v for v in g.vertices if color[v] == 1]
    return tuple(first), tuple(second)


def _walk(g, start, prev=None):
    """Follow a path/cycle in the underlying graph from ``start``."""
    order = [start]
    cur = start
    while True:
        nbrs = [g.vertices[i] for i in _bits(g.nbr_mask[g.index(cur)])]
        nxt = [u for u in nbrs if u != prev and u not in order]
        if not nxt:
            return order
        prev, cur = cur, min(nxt, key=g.index)
        order.append(cur)


def path_order(g: WeightedOrientedGraph):
    """Vertex order along the path if the underlying graph is a path on >= 2 vertices."""
    n = len(g)
    if n < 2 or len(g.edges) != n - 1 or not is_connected(g):
        return None
    degs = [m.bit_count() for m in g.nbr_mask]
    if max(degs) > 2:
        return None
    ends = [v for v, d in zip(g.vertices, degs) if d == 1]
    return tuple(_walk(g, ends[0]))


def cycle_order(g: WeightedOrientedGraph):
    """Vertex order around the cycle if the underlying graph is a cycle."""
    n = len(g)
    if n < 3 or len(g.edges) != n or not is_connected(g):
        return None
    if any(m.bit_count() != 2 for m in g.nbr_mask):
        return None
    return tuple(_walk(g, g.vertices[0]))


def is_complete(g: WeightedOrientedGraph) -> bool:
    n = len(g)
    return n >= 2 and len(g.edges) == n * (n - 1) // 2


def whisker_structure(g: WeightedOrientedGraph):
    """Return ``{base: pendant}`` if the underlying graph is a whisker, else None.

    Every vertex must be matched: each base vertex carries exactly one
    degree-1 pendant.  A component that is a single edge is read as a base
    (the earlier vertex) with its pendant.
    """
    n = len(g)
    if n == 0 or n % 2:
        return None
    degs = [m.bit_count() for m in g.nbr_mask]
    pendant_of = {}
    for i, v in enumerate(g.vertices):
        if degs[i] != 1:
            continue
        j = g.nbr_mask[i].bit_length() - 1
        if degs[j] == 1:
            if i < j:
                pendant_of[g.vertices[i]] = g.vertices[j]
            continue
        base = g.vertices[j]
        if base in pendant_of:
            return None
        pendant_of[base] = v
    if 2 * len(pendant_of) != n:
        return None
    return {b: pendant_of[b] for b in g.ordered(pendant_of)}


def classify_shape(g: WeightedOrientedGraph) -> dict:
    """Map each applicable shape tag to its witness.

    Tags: ``path`` (vertex order), ``cycle`` (vertex order), ``complete``
    (vertex tuple), ``bipartite`` (the two parts), ``whisker`` (base ->
    pendant), and ``general`` when nothing else applies.
    """
    shapes = {}
    order = path_order(g)
    if order is not None:
        shapes["path"] = order
    order = cycle_order(g)
    if order is not None:
        shapes["cycle"] = order
    if is_complete(g):
        shapes["complete"] = g.vertices
    parts = bipartition(g)
    if parts is not None:
        shapes["bipartite"] = parts
    whisker = whisker_structure(g)
    if whisker is not None:
        shapes["whisker"] = whisker
    if not shapes:
        shapes["general"] = None
    return shapes


def disjoint_union(*graphs: WeightedOrientedGraph) -> WeightedOrientedGraph:
    """Union of graphs with pairwise disjoint vertex names."""
    weights = {}
    edges = []
    for h in graphs:
        for v in h.vertices:
            if v in weights:
                raise DuplicateVertex(v)
            weights[v] = h.weight(v)
        edges.extend(h.edges)
    return build_graph(weights, edges)


def is_stable(g: WeightedOrientedGraph, vertices) -> bool:
    verts = list(vertices)
    return not any((a, b) in g.edges or (b, a) in g.edges for a, b in combinations(verts, 2))
