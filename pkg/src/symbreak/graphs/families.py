"""Constructors for hypercubes, their powers, augmented cubes and the
complete / matching-complement comparison graphs."""
from __future__ import annotations

from .core import Graph, bfs_levels, to_label

MAX_HYPERCUBE_DIM = 16
MAX_AUGMENTED_DIM = 12


def _check_dim(n: int, cap: int, what: str) -> None:
    if not isinstance(n, int) or not 1 <= n <= cap:
        raise ValueError(f"{what} dimension must be an integer in 1..{cap}, got {n!r}")


def _labels(n: int) -> list[str]:
    return [to_label(i, n) for i in range(1 << n)]


def _power_of_two_labels(m: int) -> list[str] | None:
    if m >= 2 and m & (m - 1) == 0:
        return _labels(m.bit_length() - 1)
    return None


def hypercube(n: int) -> Graph:
    _check_dim(n, MAX_HYPERCUBE_DIM, "hypercube")
    flips = [1 << b for b in range(n)]
    rows = [sum(1 << (v ^ f) for f in flips) for v in range(1 << n)]
    return Graph(rows, labels=_labels(n), family="hypercube", dimension=n)


def graph_power(g: Graph, p: int) -> Graph:
    """Join distinct vertices whose distance in ``g`` is at most ``p``."""
    if not isinstance(p, int) or p < 1:
        raise ValueError(f"power must be a positive integer, got {p!r}")
    rows = []
    for s in range(g.n_vertices):
        dist = bfs_levels(g, s)
        rows.append(sum(1 << v for v, d in enumerate(dist) if 0 < d <= p))
    family = f"{g.family}^{p}"
    return Graph(rows, labels=g.labels, family=family, dimension=g.dimension)


def hypercube_power(n: int, p: int) -> Graph:
    return graph_power(hypercube(n), p)


def _aq_flip_masks(n: int) -> list[int]:
    # single-coordinate flips, plus flips of every suffix a_l..a_n with l < n
    singles = [1 << b for b in range(n)]
    suffixes = [(1 << k) - 1 for k in range(2, n + 1)]
    return singles + suffixes


def augmented_cube(n: int) -> Graph:
    """AQ_n from the closed-form adjacency rule.

    ``a ~ b`` iff they differ in exactly one coordinate, or they agree on a
    prefix ``a_1..a_{l-1}`` and differ on every coordinate from ``a_l`` on.
    """
    _check_dim(n, MAX_AUGMENTED_DIM, "augmented cube")
    masks = _aq_flip_masks(n)
    rows = [sum(1 << (v ^ m) for m in masks) for v in range(1 << n)]
    return Graph(rows, labels=_labels(n), family="augmented-cube", dimension=n)


def augmented_cube_recursive(n: int) -> Graph:
    """AQ_n built by joining two copies of AQ_{n-1}.

    Vertex ``0a`` of the low copy is joined to ``1b`` of the high copy when
    ``b == a`` or ``b`` is the bitwise complement of ``a``.
    """
    _check_dim(n, MAX_AUGMENTED_DIM, "augmented cube")
    edges = {(0, 1)}
    for k in range(2, n + 1):
        half = 1 << (k - 1)
        low_mask = half - 1
        nxt = set()
        for u, v in edges:
            nxt.add((u, v))
            nxt.add((u + half, v + half))
        for a in range(half):
            nxt.add((a, half + a))
            nxt.add((a, half + (a ^ low_mask)))
        edges = nxt
    return Graph.from_edges(1 << n, edges, labels=_labels(n), family="augmented-cube", dimension=n)


def complete_graph(m: int) -> Graph:
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"complete graph needs m >= 1, got {m!r}")
    full = (1 << m) - 1
    rows = [full ^ (1 << v) for v in range(m)]
    return Graph(rows, labels=_power_of_two_labels(m), family="complete")


def complement_perfect_matching(m: int) -> Graph:
    """K_m with the perfect matching {2i, 2i+1} removed."""
    if not isinstance(m, int) or m < 2 or m % 2:
        raise ValueError(f"matching complement needs a positive even m, got {m!r}")
    full = (1 << m) - 1
    rows = [full ^ (1 << v) ^ (1 << (v ^ 1)) for v in range(m)]
    return Graph(rows, labels=_power_of_two_labels(m), family="matching-complement")
