"""Graph container, bitstring labels and distance queries.

Adjacency is held as one Python ``int`` bitset per vertex: bit ``j`` of
``rows[i]`` is set iff ``i ~ j``.  The refiner in :mod:`symbreak.perm`
counts neighbours with ``(rows[v] & mask).bit_count()``, which is why the
rows are kept in this form rather than as adjacency lists.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from functools import cached_property

import numpy as np

UNREACHABLE = -1


def to_label(index: int, n: int) -> str:
    """Big-endian bitstring of ``index``; the first character is coordinate a_1."""
    if not 0 <= index < (1 << n):
        raise ValueError(f"index {index} out of range for dimension {n}")
    return format(index, f"0{n}b") if n else ""


def from_label(label: str) -> int:
    if not label or set(label) - {"0", "1"}:
        raise ValueError(f"not a bitstring label: {label!r}")
    return int(label, 2)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple undirected graph on vertices ``0..n_vertices-1``."""

    def __init__(
        self,
        rows: Sequence[int],
        labels: Sequence[str] | None = None,
        family: str = "custom",
        dimension: int | None = None,
    ) -> None:
        rows = tuple(int(r) for r in rows)
        n = len(rows)
        if n == 0:
            raise ValueError("graph must have at least one vertex")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex outside the graph")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for w in iter_bits(row):
                if not (rows[w] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {w})")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("label count does not match vertex count")
            width = len(labels[0])
            if n != 1 << width:
                raise ValueError("labelled graphs must have 2^n vertices")
            for i, lab in enumerate(labels):
                if len(lab) != width or from_label(lab) != i:
                    raise ValueError(f"label {lab!r} does not encode vertex {i}")
            if dimension is None:
                dimension = width
        self._rows = rows
        self._labels = labels
        self.family = family
        self.dimension = dimension

    @classmethod
    def from_edges(cls, n_vertices: int, edges: Iterable[tuple[int, int]], **kwargs) -> Graph:
        rows = [0] * n_vertices
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(rows, **kwargs)

    @classmethod
    def from_adjacency(cls, adj, **kwargs) -> Graph:
        adj = np.asarray(adj, dtype=bool)
        rows = [sum(1 << int(j) for j in np.flatnonzero(row)) for row in adj]
        return cls(rows, **kwargs)

    @property
    def n_vertices(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def labels(self) -> tuple[str, ...] | None:
        return self._labels

    def label(self, v: int) -> str:
        return self._labels[v] if self._labels is not None else str(v)

    def index(self, label: str) -> int:
        if self._labels is None:
            return int(label)
        i = from_label(label)
        if len(label) != len(self._labels[0]) or i >= self.n_vertices:
            raise ValueError(f"label {label!r} is not a vertex of this graph")
        return i

    @cached_property
    def adjacency(self) -> np.ndarray:
        n = self.n_vertices
        adj = np.zeros((n, n), dtype=bool)
        for v, row in enumerate(self._rows):
            adj[v, list(iter_bits(row))] = True
        adj.setflags(write=False)
        return adj

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self._rows[v]))

    def closed_neighborhood(self, v: int) -> set[int]:
        return set(iter_bits(self._rows[v])) | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self._rows]

    @property
    def n_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self._rows):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())

    def is_regular(self) -> bool:
        return len(set(self.degrees())) == 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._rows == other._rows and self._labels == other._labels

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"Graph(family={self.family!r}, n_vertices={self.n_vertices}, n_edges={self.n_edges})"


def bfs_levels(g: Graph, source: int) -> list[int]:
    """Hop distance from ``source`` to every vertex (``UNREACHABLE`` if none)."""
    rows = g.rows
    dist = [UNREACHABLE] * g.n_vertices
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        nxt &= ~seen
        seen |= nxt
        for v in iter_bits(nxt):
            dist[v] = d
        frontier = nxt
    return dist


def distances(g: Graph) -> np.ndarray:
    """All-pairs hop counts, one BFS per source; ``UNREACHABLE`` marks missing paths."""
    n = g.n_vertices
    dtype = np.int16 if n < 32768 else np.int32
    out = np.empty((n, n), dtype=dtype)
    for s in range(n):
        out[s] = bfs_levels(g, s)
    return out


def diameter(g: Graph) -> int:
    dist = distances(g)
    if (dist == UNREACHABLE).any():
        return UNREACHABLE
    return int(dist.max())
