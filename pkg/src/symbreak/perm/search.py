"""Vertex-colored automorphism search by partition refinement and backtracking.

The search follows the usual individualisation-refinement scheme:

* the initial ordered partition is the colour classes in colour order;
* refinement splits cells by neighbour counts into a splitter cell until the
  partition is equitable;
* a non-singleton target cell (first smallest) is chosen and each of its
  vertices is individualised in turn.

The first root-to-leaf path fixes a base ``b_0, b_1, ...``.  Working from the
deepest level upwards, for every vertex ``w`` in the target cell of level
``k`` that is not yet known to lie in the orbit of ``b_k`` under the
automorphisms found so far, the subtree rooted at ``(b_0..b_{k-1}, w)`` is
searched for a leaf equivalent to the first leaf.  The automorphisms found
this way form a strong generating set relative to the base.
"""
from __future__ import annotations

import os
from collections.abc import Sequence

import numpy as np

from ..graphs import Graph
from .group import Permutation, PermGroup

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    def __init__(self, nodes: int, budget: int) -> None:
        super().__init__(
            f"automorphism search aborted after {nodes} nodes (budget {budget}); "
            "raise the budget with SYMBREAK_BUDGET or --budget"
        )
        self.nodes = nodes
        self.budget = budget


def default_budget() -> int:
    value = os.environ.get("SYMBREAK_BUDGET")
    return int(value) if value else DEFAULT_BUDGET


def is_automorphism(g: Graph, p: Permutation | Sequence[int]) -> bool:
    image = np.asarray(p.image if isinstance(p, Permutation) else p, dtype=np.intp)
    n = g.n_vertices
    if image.shape != (n,):
        raise ValueError(f"permutation has length {image.size}, graph has {n} vertices")
    if not np.array_equal(np.sort(image), np.arange(n)):
        raise ValueError("not a permutation")
    adj = g.adjacency
    return bool(np.array_equal(adj[np.ix_(image, image)], adj))


def _initial_cells(n: int, colors: Sequence[int] | None) -> list[list[int]]:
    if colors is None:
        return [list(range(n))]
    if len(colors) != n:
        raise ValueError(f"coloring has length {len(colors)}, graph has {n} vertices")
    classes: dict = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    return [classes[c] for c in sorted(classes)]


def refine(rows: Sequence[int], cells: list[list[int]], active: list[bool]) -> tuple[list[list[int]], tuple]:
    """Refine ``cells`` to the coarsest equitable partition below it.

    ``active`` flags the cells to use as initial splitters.  Returns the new
    cells and a trace that depends only on the isomorphism type of the input,
    so two nodes whose traces differ cannot be related by an automorphism.
    """
    n = len(rows)
    cells = list(cells)
    active = list(active)
    trace = []
    while len(cells) < n:
        try:
            pos = active.index(True)
        except ValueError:
            break
        active[pos] = False
        mask = 0
        for v in cells[pos]:
            mask |= 1 << v
        new_cells: list[list[int]] = []
        new_active: list[bool] = []
        for ci, cell in enumerate(cells):
            if len(cell) == 1:
                new_cells.append(cell)
                new_active.append(active[ci])
                continue
            buckets: dict[int, list[int]] = {}
            for v in cell:
                buckets.setdefault((rows[v] & mask).bit_count(), []).append(v)
            if len(buckets) == 1:
                new_cells.append(cell)
                new_active.append(active[ci])
                continue
            keys = sorted(buckets)
            frags = [buckets[k] for k in keys]
            trace.append((pos, ci, tuple((k, len(buckets[k])) for k in keys)))
            if active[ci]:
                flags = [True] * len(frags)
            else:
                largest = max(range(len(frags)), key=lambda i: (len(frags[i]), -i))
                flags = [i != largest for i in range(len(frags))]
            new_cells.extend(frags)
            new_active.extend(flags)
        cells, active = new_cells, new_active
    return cells, tuple(trace)


def _target(cells: list[list[int]]) -> int:
    best = -1
    for i, cell in enumerate(cells):
        if len(cell) > 1 and (best < 0 or len(cell) < len(cells[best])):
            best = i
    return best


def _individualize(cells: list[list[int]], pos: int, v: int) -> tuple[list[list[int]], list[bool]]:
    rest = [u for u in cells[pos] if u != v]
    new = cells[:pos] + [[v], rest] + cells[pos + 1:]
    active = [False] * len(new)
    active[pos] = True
    return new, active


class _Orbits:
    """Union-find over vertices, fed with discovered automorphisms."""

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def add(self, image: Sequence[int]) -> None:
        for x, y in enumerate(image):
            rx, ry = self.find(x), self.find(y)
            if rx != ry:
                self.parent[max(rx, ry)] = min(rx, ry)


class AutomorphismSearch:
    """One run of the backtracking search; see the module docstring."""

    def __init__(
        self,
        g: Graph,
        colors: Sequence[int] | None = None,
        budget: int | None = None,
        stop_at_first: bool = False,
    ) -> None:
        self.graph = g
        self.rows = g.rows
        self.n = g.n_vertices
        self.colors = None if colors is None else list(colors)
        self.budget = default_budget() if budget is None else budget
        self.stop_at_first = stop_at_first
        self.nodes = 0
        self.generators: list[Permutation] = []
        self.base: list[int] = []

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.nodes, self.budget)

    def run(self) -> list[Permutation]:
        n = self.n
        cells0 = _initial_cells(n, self.colors)
        self._tick()
        cells, trace = refine(self.rows, cells0, [True] * len(cells0))
        # first path: partitions and traces at each level
        path_cells = [cells]
        path_traces = [trace]
        targets = []
        while True:
            t = _target(cells)
            if t < 0:
                break
            v = cells[t][0]
            targets.append(t)
            self.base.append(v)
            self._tick()
            cells, trace = refine(self.rows, *_individualize(cells, t, v))
            path_cells.append(cells)
            path_traces.append(trace)
        self._first_leaf = [c[0] for c in cells]
        self._path_traces = path_traces
        self._targets = targets
        self._path_cells = path_cells

        for level in range(len(self.base) - 1, -1, -1):
            orbits = _Orbits(n)
            for gen in self.generators:
                orbits.add(gen.image)
            b = self.base[level]
            cell = path_cells[level][targets[level]]
            for w in cell:
                if orbits.find(w) == orbits.find(b):
                    continue
                gamma = self._explore(level, path_cells[level], w)
                if gamma is not None:
                    self.generators.append(gamma)
                    if self.stop_at_first:
                        return self.generators
                    orbits.add(gamma.image)
        return self.generators

    def _explore(self, level: int, cells: list[list[int]], w: int) -> Permutation | None:
        """Search the subtree below ``cells`` with ``w`` individualised at ``level``."""
        self._tick()
        t = self._targets[level]
        new_cells, trace = refine(self.rows, *_individualize(cells, t, w))
        if trace != self._path_traces[level + 1]:
            return None
        if len(new_cells) != len(self._path_cells[level + 1]):
            return None
        if len(new_cells) == self.n:
            return self._leaf_automorphism(new_cells)
        nt = self._targets[level + 1]
        for u in list(new_cells[nt]):
            gamma = self._explore(level + 1, new_cells, u)
            if gamma is not None:
                return gamma
        return None

    def _leaf_automorphism(self, cells: list[list[int]]) -> Permutation | None:
        image = [0] * self.n
        for a, cell in zip(self._first_leaf, cells):
            image[a] = cell[0]
        if self.colors is not None and any(self.colors[image[v]] != self.colors[v] for v in range(self.n)):
            return None
        rows = self.rows
        for v in range(self.n):
            mapped = 0
            row = rows[v]
            while row:
                low = row & -row
                mapped |= 1 << image[low.bit_length() - 1]
                row ^= low
            if mapped != rows[image[v]]:
                return None
        return Permutation(image, check=False)


def automorphism_group(
    g: Graph,
    initial_colors: Sequence[int] | None = None,
    budget: int | None = None,
) -> PermGroup:
    """All permutations preserving adjacency and (if given) every vertex colour."""
    search = AutomorphismSearch(g, initial_colors, budget)
    gens = search.run()
    for gen in gens:
        if not is_automorphism(g, gen):
            raise AssertionError("search produced a non-automorphism")
    group = PermGroup(g.n_vertices, gens, base=search.base)
    # the product of the orbit lengths seen by the search must match the chain
    expected = 1
    for level, b in enumerate(search.base):
        orbits = _Orbits(g.n_vertices)
        for gen in gens:
            if all(gen.image[x] == x for x in search.base[:level]):
                orbits.add(gen.image)
        root = orbits.find(b)
        expected *= sum(1 for x in range(g.n_vertices) if orbits.find(x) == root)
    if expected != group.order():
        raise AssertionError(f"stabilizer chain order {group.order()} != search order {expected}")
    group.search_nodes = search.nodes
    return group


def find_automorphism(
    g: Graph,
    colors: Sequence[int] | None = None,
    budget: int | None = None,
) -> Permutation | None:
    """Some non-identity colour-preserving automorphism, or ``None`` if the group is trivial."""
    search = AutomorphismSearch(g, colors, budget, stop_at_first=True)
    gens = search.run()
    return gens[0] if gens else None
