"""Distinguishing numbers: exhaustive search, witness search and closed forms."""
from __future__ import annotations

import time
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .coloring import Coloring, aq3_paper_coloring, aqn_paper_coloring
from .graphs import Graph
from .perm import BudgetExceeded, Permutation, automorphism_group, find_automorphism

MAX_EXHAUSTIVE_VERTICES = 16
DEFAULT_RANDOM_BUDGET = 10**5
STRATEGIES = ("paper", "exhaustive", "random")


@dataclass
class SolveResult:
    lower: int
    upper: int
    witness: Coloring | None = None
    method: str = "exhaustive"
    stats: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")

    @property
    def value(self) -> int | None:
        return self.lower if self.lower == self.upper else None

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def to_json_dict(self, g: Graph | None = None) -> dict:
        out = {
            "value": self.value,
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "method": self.method,
            "stats": self.stats,
        }
        if self.witness is not None and g is not None:
            out["witness"] = self.witness.to_json_dict(g)
        return out


class DistinguishingChecker:
    """Answers "is some non-identity automorphism preserving these colors?".

    Automorphisms found along the way are cached and tried first, which is
    what makes repeated checks over a search tree cheap.  Unassigned vertices
    (color 0) are treated as pairwise distinct, i.e. fixed.
    """

    def __init__(self, g: Graph, seed_perms: Sequence[Permutation] = (), budget: int | None = None,
                 cache_size: int = 4096) -> None:
        self.graph = g
        self.budget = budget
        self.cache_size = cache_size
        self._cache: list[tuple[int, ...]] = [p.image for p in seed_perms][:cache_size]
        self._array: np.ndarray | None = None
        self.engine_calls = 0
        self.cache_hits = 0

    def _cached(self) -> np.ndarray:
        if self._array is None or len(self._array) != len(self._cache):
            n = self.graph.n_vertices
            self._array = np.array(self._cache, dtype=np.intp).reshape(-1, n)
        return self._array

    def violating(self, colors: Sequence[int]) -> Permutation | None:
        key = np.asarray(colors, dtype=np.int64).copy()
        unassigned = key == 0
        key[unassigned] = -1 - np.flatnonzero(unassigned)
        perms = self._cached()
        if len(perms):
            hit = np.flatnonzero((key[perms] == key).all(axis=1))
            if len(hit):
                self.cache_hits += 1
                return Permutation(perms[hit[0]].tolist(), check=False)
        self.engine_calls += 1
        gamma = find_automorphism(self.graph, key.tolist(), self.budget)
        if gamma is not None and len(self._cache) < self.cache_size:
            self._cache.append(gamma.image)
        return gamma

    def is_distinguishing(self, colors: Sequence[int]) -> bool:
        return self.violating(colors) is None


def _search_order(g: Graph, gens: Sequence[Permutation]) -> list[int]:
    # vertices moved by small-support automorphisms first, so that the
    # partial-coloring prune fires as early as possible
    order: list[int] = []
    seen = set()
    for p in sorted(gens, key=lambda p: (len(p.support()), p.image)):
        for v in p.support():
            if v not in seen:
                seen.add(v)
                order.append(v)
    order.extend(v for v in range(g.n_vertices) if v not in seen)
    return order


def iter_distinguishing_colorings(
    g: Graph,
    r: int,
    checker: DistinguishingChecker | None = None,
    order: Sequence[int] | None = None,
    stats: dict | None = None,
    node_budget: int | None = None,
) -> Iterator[Coloring]:
    """Every distinguishing coloring with colors in ``1..r``, up to renaming of colors.

    Colorings are produced in first-use form along ``order``: color ``k+1``
    is used only after color ``k``.  A branch is cut as soon as the assigned
    vertices admit a color-preserving automorphism fixing every unassigned
    vertex, since no completion can destroy it.
    """
    n = g.n_vertices
    if checker is None:
        checker = DistinguishingChecker(g)
    if order is None:
        order = _search_order(g, automorphism_group(g).strong_generators)
    if sorted(order) != list(range(n)):
        raise ValueError("order must list every vertex once")
    stats = stats if stats is not None else {}
    stats.setdefault("nodes", 0)
    stats.setdefault("colorings_tested", 0)
    colors = [0] * n

    def rec(pos: int, used: int) -> Iterator[Coloring]:
        v = order[pos]
        for col in range(1, min(used + 1, r) + 1):
            colors[v] = col
            stats["nodes"] += 1
            if node_budget is not None and stats["nodes"] > node_budget:
                raise BudgetExceeded(stats["nodes"], node_budget)
            if pos == n - 1:
                stats["colorings_tested"] += 1
            if checker.violating(colors) is not None:
                continue
            if pos == n - 1:
                yield Coloring(list(colors), r)
            else:
                yield from rec(pos + 1, max(used, col))
        colors[v] = 0

    yield from rec(0, 0)


def distinguishing_number_exhaustive(g: Graph, max_r: int | None = None, budget: int | None = None) -> SolveResult:
    """Exact D(g) if it is at most ``max_r``; otherwise the bound ``D(g) > max_r``."""
    n = g.n_vertices
    if n > MAX_EXHAUSTIVE_VERTICES:
        raise ValueError(f"exhaustive search is limited to {MAX_EXHAUSTIVE_VERTICES} vertices, got {n}")
    max_r = n if max_r is None else max_r
    start = time.perf_counter()
    group = automorphism_group(g)
    checker = DistinguishingChecker(g, group.strong_generators)
    order = _search_order(g, group.strong_generators)
    stats: dict = {}
    found = None
    for r in range(1, max_r + 1):
        found = next(iter_distinguishing_colorings(g, r, checker, order, stats, budget), None)
        if found is not None:
            break
    stats.update(engine_calls=checker.engine_calls, cache_hits=checker.cache_hits,
                 elapsed=round(time.perf_counter() - start, 3))
    if found is not None:
        witness = _verified(g, found)
        return SolveResult(r, r, witness, "exhaustive", stats)
    # all-distinct colors always distinguish
    return SolveResult(max_r + 1, n, Coloring(range(1, n + 1), n), "exhaustive", stats)


def _verified(g: Graph, c: Coloring) -> Coloring:
    if automorphism_group(g, c.colors).order() != 1:
        raise AssertionError("search returned a coloring that is not distinguishing")
    return c


def lower_bound(g: Graph, budget: int | None = None) -> int:
    """1 when Aut(g) is trivial, otherwise 2."""
    return 1 if find_automorphism(g, None, budget) is None else 2


def paper_coloring_for(g: Graph) -> Coloring | None:
    if g.family == "augmented-cube" and g.dimension is not None:
        if g.dimension >= 4:
            return aqn_paper_coloring(g.dimension)
        if g.dimension == 3:
            return aq3_paper_coloring()
    return None


def find_distinguishing_coloring(
    g: Graph,
    r: int,
    strategy: str = "random",
    seed: int | None = 0,
    budget: int | None = None,
    stats: dict | None = None,
) -> Coloring | None:
    """A verified distinguishing coloring using at most ``r`` colors, or ``None``.

    ``None`` from the random strategy only means nothing was found within
    ``budget`` candidates.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    stats = stats if stats is not None else {}
    n = g.n_vertices
    if strategy == "paper":
        c = paper_coloring_for(g)
        if c is None:
            raise ValueError(f"no explicit coloring is known for {g!r}")
        if c.r > r:
            return None
        c = Coloring(c.colors, r)
    elif strategy == "exhaustive":
        c = next(iter_distinguishing_colorings(g, r, stats=stats, node_budget=budget), None)
    else:
        budget = DEFAULT_RANDOM_BUDGET if budget is None else budget
        rng = np.random.default_rng(seed)
        checker = DistinguishingChecker(g)
        c = None
        attempt = 0
        for attempt in range(1, budget + 1):
            colors = rng.integers(1, r + 1, size=n)
            if checker.is_distinguishing(colors):
                c = Coloring(colors.tolist(), r)
                break
        stats.update(candidates=attempt, engine_calls=checker.engine_calls,
                     cache_hits=checker.cache_hits)
    if c is None:
        return None
    return _verified(g, c)


def distinguishing_number(
    g: Graph,
    max_r: int | None = None,
    strategy: str = "exhaustive",
    seed: int | None = 0,
    budget: int | None = None,
) -> SolveResult:
    """Dispatch to the exhaustive solver, or bracket D(g) by a witness and a lower bound."""
    if strategy == "exhaustive":
        return distinguishing_number_exhaustive(g, max_r, budget)
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    n = g.n_vertices
    max_r = n if max_r is None else max_r
    start = time.perf_counter()
    lb = lower_bound(g)
    stats: dict = {"seed": seed}
    for r in range(lb, max_r + 1):
        witness = find_distinguishing_coloring(g, r, strategy, seed, budget, stats)
        if witness is not None:
            stats["elapsed"] = round(time.perf_counter() - start, 3)
            return SolveResult(lb, r, witness, "witness_plus_lower_bound", stats)
    stats["elapsed"] = round(time.perf_counter() - start, 3)
    return SolveResult(lb, n, Coloring(range(1, n + 1), n), "witness_plus_lower_bound", stats)


def matching_complement_distnum(n: int) -> int:
    """Smallest x with C(x, 2) >= 2^(n-1): D of Q_n^(n-1), the matching complement on 2^n vertices."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    x = 2
    while comb(x, 2) < 1 << (n - 1):
        x += 1
    return x


def closed_form(g: Graph) -> SolveResult | None:
    """D for the families with a known formula (complete graphs, matching complements)."""
    m = g.n_vertices
    if g.family == "complete" or (g.n_edges == m * (m - 1) // 2):
        return SolveResult(m, m, Coloring(range(1, m + 1), m), "closed_form")
    if g.family == "matching-complement" and m & (m - 1) == 0 and m >= 4:
        x = matching_complement_distnum(m.bit_length() - 1)
        return SolveResult(x, x, None, "closed_form")
    return None
