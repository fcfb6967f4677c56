"""Immutable simple-graph representation with bitset adjacency.

Internal vertex ids are contiguous 0..order-1.  Every graph additionally
carries a bijective map to external ids (the numbering used in input files);
for graphs built directly in code the two numberings coincide.  Adjacency is
stored as one Python int bitmask per vertex, which keeps the solver hot loops
(neighborhood intersections) down to a couple of machine-word operations per
word of vertices.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import EmptyGraphError, OutOfRangeError, SelfLoopError


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex ids into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


class Graph:
    """Finite simple undirected graph, immutable after construction."""

    __slots__ = ("order", "_adj", "_ext", "_int_of")

    def __init__(self, order: int, edges: Iterable[tuple[int, int]],
                 external_ids: Iterable[int] | None = None):
        if order < 0:
            raise OutOfRangeError(order)
        adj = [0] * order
        for u, v in edges:
            if not (0 <= u < order):
                raise OutOfRangeError(u)
            if not (0 <= v < order):
                raise OutOfRangeError(v)
            if u == v:
                raise SelfLoopError(u)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.order = order
        self._adj = tuple(adj)
        ext = tuple(external_ids) if external_ids is not None else tuple(range(order))
        if len(ext) != order or len(set(ext)) != order:
            raise ValueError("external_ids must be a bijection onto internal ids")
        self._ext = ext
        self._int_of = {e: i for i, e in enumerate(ext)}

    @classmethod
    def _from_masks(cls, adj: list[int], external_ids: tuple[int, ...] | None = None) -> "Graph":
        """Trusted constructor for already-symmetric loop-free adjacency masks."""
        g = object.__new__(cls)
        g.order = len(adj)
        g._adj = tuple(adj)
        g._ext = external_ids if external_ids is not None else tuple(range(len(adj)))
        g._int_of = {e: i for i, e in enumerate(g._ext)}
        return g

    # -- vertex / edge access -------------------------------------------------

    def vertices(self) -> range:
        return range(self.order)

    def adjacency_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(iter_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.order):
            for v in iter_bits(self._adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    # -- external ids ----------------------------------------------------------

    @property
    def external_ids(self) -> tuple[int, ...]:
        return self._ext

    def external_id(self, v: int) -> int:
        return self._ext[v]

    def internal_id(self, ext: int) -> int:
        return self._int_of[ext]

    # -- dunder ----------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph) and self.order == other.order
                and self._adj == other._adj and self._ext == other._ext)

    def __hash__(self) -> int:
        return hash((self.order, self._adj, self._ext))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edge_count()})"


def build_graph(order: int, edges: Iterable[tuple[int, int]],
                external_ids: Iterable[int] | None = None) -> Graph:
    """Build a canonical graph; duplicate edge pairs collapse to one edge."""
    return Graph(order, edges, external_ids)


def open_neighborhood(graph: Graph, vertices: Iterable[int]) -> frozenset[int]:
    """All vertices outside the set adjacent to at least one member of it."""
    smask = 0
    for v in vertices:
        if not (0 <= v < graph.order):
            raise OutOfRangeError(v)
        smask |= 1 << v
    nmask = 0
    for v in iter_bits(smask):
        nmask |= graph.adjacency_mask(v)
    return frozenset(iter_bits(nmask & ~smask))


def ball(graph: Graph, center: int, radius: int) -> Graph:
    """Induced subgraph on all vertices at BFS distance <= radius from center.

    Unreachable vertices are at infinite distance and never included, so on a
    disconnected graph the ball stabilizes at the component of ``center``.
    """
    if not (0 <= center < graph.order):
        raise OutOfRangeError(center)
    if radius < 0:
        raise ValueError("radius must be >= 0")
    seen = 1 << center
    frontier = seen
    for _ in range(radius):
        grown = 0
        for v in iter_bits(frontier):
            grown |= graph.adjacency_mask(v)
        frontier = grown & ~seen
        if not frontier:
            break
        seen |= frontier
    return induced_subgraph(graph, iter_bits(seen))


def max_degree(graph: Graph) -> int:
    if graph.order == 0:
        raise EmptyGraphError("max_degree of an empty graph")
    return max(m.bit_count() for m in graph._adj)


def induced_subgraph(graph: Graph, keep: Iterable[int]) -> Graph:
    """Graph on ``keep`` with all edges among kept vertices; external ids kept."""
    kmask = 0
    for v in keep:
        if not (0 <= v < graph.order):
            raise OutOfRangeError(v)
        kmask |= 1 << v
    kept = list(iter_bits(kmask))
    index = {v: i for i, v in enumerate(kept)}
    adj = [0] * len(kept)
    for v in kept:
        for u in iter_bits(graph.adjacency_mask(v) & kmask):
            adj[index[v]] |= 1 << index[u]
    ext = tuple(graph.external_id(v) for v in kept)
    return Graph._from_masks(adj, ext)
