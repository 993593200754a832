"""Permutations and permutation groups held as a stabilizer chain.

Composition is left to right: ``(p * q)(x) == q(p(x))``.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from itertools import islice


class Permutation:
    """A bijection on ``0..degree-1`` stored as its image tuple."""

    __slots__ = ("image", "_hash")

    def __init__(self, image: Iterable[int], check: bool = True) -> None:
        image = tuple(image)
        if check and sorted(image) != list(range(len(image))):
            raise ValueError("image is not a permutation of 0..n-1")
        self.image = image
        self._hash = None

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(degree), check=False)

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        image = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                image[a] = b
        return cls(image)

    @property
    def degree(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        return self.image[x]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        q = other.image
        return Permutation([q[i] for i in self.image], check=False)

    def __invert__(self) -> Permutation:
        inv = [0] * len(self.image)
        for i, v in enumerate(self.image):
            inv[v] = i
        return Permutation(inv, check=False)

    inverse = __invert__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.image == other.image

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.image)
        return self._hash

    def __len__(self) -> int:
        return len(self.image)

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.image))

    def support(self) -> list[int]:
        return [i for i, v in enumerate(self.image) if i != v]

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(len(self.image)):
            if start in seen or self.image[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            j = self.image[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.image[j]
            out.append(tuple(cyc))
        return out

    def cycle_string(self, names: Sequence[str] | None = None) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        name = (lambda v: names[v]) if names is not None else str
        return "".join("(" + " ".join(name(v) for v in c) + ")" for c in cycles)

    def to_json(self) -> list[int]:
        return list(self.image)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()}, degree={self.degree})"


class _Level:
    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point: int, gens: list[Permutation], identity: Permutation) -> None:
        self.point = point
        self.gens = gens
        # orbit point -> element mapping ``point`` onto it
        self.transversal: dict[int, Permutation] = {point: identity}
        queue = [point]
        for p in queue:
            up = self.transversal[p]
            for s in gens:
                q = s.image[p]
                if q not in self.transversal:
                    self.transversal[q] = up * s
                    queue.append(q)


class PermGroup:
    """Group generated by ``generators``, with a base and strong generating set.

    The chain is built by the deterministic Schreier-Sims algorithm.  Points
    listed in ``base`` are preferred (in order) when a new base point is needed.
    """

    def __init__(self, degree: int, generators: Iterable[Permutation] = (), base: Sequence[int] = ()) -> None:
        self.degree = degree
        self._identity = Permutation.identity(degree)
        self._base_hint = list(base)
        self.generators: list[Permutation] = []
        for g in generators:
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} != group degree {degree}")
            if not g.is_identity():
                self.generators.append(g)
        self._points: list[int] = []
        self._strong: list[Permutation] = list(self.generators)
        for g in self._strong:
            if all(g.image[b] == b for b in self._points):
                self._points.append(self._new_base_point(g))
        self._levels: list[_Level] = [self._make_level(i) for i in range(len(self._points))]
        self._schreier_sims()

    # -- chain construction -------------------------------------------------

    def _new_base_point(self, g: Permutation) -> int:
        for b in self._base_hint:
            if g.image[b] != b and b not in self._points:
                return b
        return next(i for i, v in enumerate(g.image) if i != v)

    def _make_level(self, i: int) -> _Level:
        fixed = self._points[:i]
        gens = [s for s in self._strong if all(s.image[b] == b for b in fixed)]
        return _Level(self._points[i], gens, self._identity)

    def _sift(self, g: Permutation, start: int = 0) -> tuple[Permutation, int]:
        for i in range(start, len(self._levels)):
            lvl = self._levels[i]
            u = lvl.transversal.get(g.image[lvl.point])
            if u is None:
                return g, i
            g = g * ~u
        return g, len(self._levels)

    def _schreier_sims(self) -> None:
        i = len(self._levels) - 1
        while i >= 0:
            restart = self._check_level(i)
            i = i - 1 if restart is None else restart

    def _check_level(self, i: int) -> int | None:
        """Sift every Schreier generator of level ``i``; on failure add the residue
        as a strong generator and return the deepest level that changed."""
        lvl = self._levels[i]
        for p, up in list(lvl.transversal.items()):
            for s in lvl.gens:
                q = s.image[p]
                schreier = up * s * ~lvl.transversal[q]
                if schreier.is_identity():
                    continue
                residue, j = self._sift(schreier, i + 1)
                if residue.is_identity():
                    continue
                self._strong.append(residue)
                if j == len(self._levels):
                    self._points.append(self._new_base_point(residue))
                    self._levels.append(None)
                for k in range(i + 1, j + 1):
                    self._levels[k] = self._make_level(k)
                return j
        return None

    # -- queries -------------------------------------------------------------

    @property
    def base(self) -> list[int]:
        return [lvl.point for lvl in self._levels]

    @property
    def strong_generators(self) -> list[Permutation]:
        return list(self._strong)

    @property
    def basic_orbits(self) -> list[list[int]]:
        return [sorted(lvl.transversal) for lvl in self._levels]

    def order(self) -> int:
        out = 1
        for lvl in self._levels:
            out *= len(lvl.transversal)
        return out

    def is_trivial(self) -> bool:
        return not self._levels

    def __contains__(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        residue, level = self._sift(g)
        return level == len(self._levels) and residue.is_identity()

    membership = __contains__

    def orbits(self) -> list[list[int]]:
        """Vertex orbits, sorted by smallest member."""
        parent = list(range(self.degree))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            for x, y in enumerate(g.image):
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
        groups: dict[int, list[int]] = {}
        for x in range(self.degree):
            groups.setdefault(find(x), []).append(x)
        return sorted(groups.values())

    def elements(self) -> Iterator[Permutation]:
        """Every group element, each exactly once."""
        levels = self._levels

        def rec(i: int, acc: Permutation) -> Iterator[Permutation]:
            if i < 0:
                yield acc
                return
            for u in levels[i].transversal.values():
                yield from rec(i - 1, acc * u)

        yield from rec(len(levels) - 1, self._identity)

    def enumerate(self, limit: int) -> list[Permutation]:
        if self.order() > limit:
            raise ValueError(f"group order {self.order()} exceeds enumeration limit {limit}")
        return list(islice(self.elements(), limit))

    def to_json(self) -> dict:
        return {"order": str(self.order()), "generators": [g.to_json() for g in self.generators]}

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order()}, n_generators={len(self.generators)})"


def groups_equal_on_vertices(a: PermGroup, b: PermGroup) -> bool:
    """Equal as sets of vertex permutations, not merely isomorphic."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    return a.order() == b.order() and all(g in b for g in a.generators)
