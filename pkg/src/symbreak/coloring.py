"""Vertex colorings, color preservation, and the explicit augmented-cube colorings.

Colors are 1-based: an r-coloring takes values in ``1..r``.  Colorings need
not be proper; adjacent vertices may share a color.
"""
from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

from .graphs import Graph, from_label, to_label
from .perm import Permutation, automorphism_group, find_automorphism


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    r: int

    def __init__(self, colors: Sequence[int], r: int | None = None) -> None:
        colors = tuple(int(c) for c in colors)
        if not colors:
            raise ValueError("empty coloring")
        if r is None:
            r = max(colors)
        if r < 1:
            raise ValueError(f"number of colors must be >= 1, got {r}")
        bad = [c for c in colors if not 1 <= c <= r]
        if bad:
            raise ValueError(f"color {bad[0]} outside 1..{r}")
        object.__setattr__(self, "colors", colors)
        object.__setattr__(self, "r", r)

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __iter__(self):
        return iter(self.colors)

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors):
            out.setdefault(c, []).append(v)
        return out

    def renamed(self, mapping: dict[int, int] | Sequence[int]) -> Coloring:
        """Apply a bijection on color names (``mapping[old] -> new``)."""
        if not isinstance(mapping, dict):
            mapping = {i + 1: int(m) for i, m in enumerate(mapping)}
        return Coloring([mapping[c] for c in self.colors], self.r)

    def to_json_dict(self, g: Graph) -> dict:
        return {"r": self.r, "assignment": {g.label(v): c for v, c in enumerate(self.colors)}}

    @classmethod
    def from_json_dict(cls, data: dict, g: Graph) -> Coloring:
        try:
            r = int(data["r"])
            assignment = data["assignment"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed coloring JSON: {exc}") from exc
        colors = [0] * g.n_vertices
        seen = set()
        for key, c in assignment.items():
            v = g.index(key)
            if not 0 <= v < g.n_vertices:
                raise ValueError(f"vertex {key!r} is not in the graph")
            colors[v] = int(c)
            seen.add(v)
        if len(seen) != g.n_vertices:
            missing = [g.label(v) for v in range(g.n_vertices) if v not in seen]
            raise ValueError(f"coloring is not total; missing {missing[:5]}")
        return cls(colors, r)


def save_coloring(c: Coloring, g: Graph, path: str | Path) -> None:
    Path(path).write_text(json.dumps(c.to_json_dict(g), indent=1) + "\n")


def load_coloring(path: str | Path, g: Graph) -> Coloring:
    return Coloring.from_json_dict(json.loads(Path(path).read_text()), g)


def _colors_of(c: Coloring | Sequence[int]) -> Sequence[int]:
    return c.colors if isinstance(c, Coloring) else c


def is_color_preserving(p: Permutation, c: Coloring | Sequence[int]) -> bool:
    colors = _colors_of(c)
    if len(p) != len(colors):
        raise ValueError(f"permutation degree {len(p)} != coloring length {len(colors)}")
    return all(colors[p.image[v]] == colors[v] for v in range(len(colors)))


def is_distinguishing(g: Graph, c: Coloring | Sequence[int], budget: int | None = None) -> bool:
    """True iff the color-preserving automorphism group of ``g`` is trivial."""
    colors = _colors_of(c)
    if len(colors) != g.n_vertices:
        raise ValueError(f"coloring has {len(colors)} entries, graph has {g.n_vertices} vertices")
    return find_automorphism(g, colors, budget) is None


def colored_group_order(g: Graph, c: Coloring | Sequence[int], budget: int | None = None) -> int:
    return automorphism_group(g, _colors_of(c), budget).order()


# -- explicit colorings of augmented cubes ---------------------------------

_AQ3_COLORS = {
    "000": 3, "001": 3,
    "010": 1, "100": 1, "110": 1,
    "011": 2, "101": 2, "111": 2,
}


def aq3_paper_coloring() -> Coloring:
    """The distinguishing 3-coloring of AQ_3 (1 = white, 2 = black, 3 = gray)."""
    return Coloring([_AQ3_COLORS[to_label(i, 3)] for i in range(8)], 3)


def aqn_paper_coloring(n: int) -> Coloring:
    """2-coloring of AQ_n, n >= 4: ``0..0 -> 2``, ``0..01 -> 1``, otherwise last bit + 1."""
    if n < 4:
        raise ValueError(f"the last-bit coloring is only distinguishing for n >= 4, got n={n}")
    colors = [(v & 1) + 1 for v in range(1 << n)]
    colors[0], colors[1] = 2, 1
    return Coloring(colors, 2)


def satisfies_lemma3_hypothesis(n: int, c: Coloring | Sequence[int]) -> bool:
    """Vertices other than 0..00 and 0..01 that differ in the last bit never share a color."""
    colors = _colors_of(c)
    if len(colors) != 1 << n:
        raise ValueError(f"coloring has {len(colors)} entries, expected {1 << n}")
    even = {colors[v] for v in range(2, 1 << n) if not v & 1}
    odd = {colors[v] for v in range(2, 1 << n) if v & 1}
    return not (even & odd)


def twin(x: str) -> str:
    """``x1 x2 x3 -> x1 ~x2 ~x3``; in AQ_3, ``x`` and its twin have the same other neighbours."""
    if len(x) != 3:
        raise ValueError(f"twin is defined on 3-bit labels only, got {x!r}")
    return to_label(from_label(x) ^ 0b011, 3)


# -- neighbour-count signatures for 2-colorings ------------------------------

class VertexSignature(NamedTuple):
    own_color: int
    count_color1: int
    count_color2: int


def vertex_signature(g: Graph, c: Coloring, w: int) -> VertexSignature:
    if c.r != 2:
        raise ValueError(f"signatures are defined for 2-colorings, got r={c.r}")
    nbrs = g.neighbors(w)
    ones = sum(1 for v in nbrs if c[v] == 1)
    return VertexSignature(c[w], ones, len(nbrs) - ones)


def _require_aqn(g: Graph, n: int) -> None:
    if g.family != "augmented-cube" or g.dimension != n or n < 4:
        raise ValueError(f"expected AQ_n with n >= 4, got {g!r} for n={n}")


def m_sets(g: Graph, n: int, c: Coloring | None = None) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """``(M01 - M11, M02 - M12, M)`` where ``Mij`` = color-j vertices of the closed
    neighbourhood of vertex ``i`` (``0`` = 0..00, ``1`` = 0..01)."""
    _require_aqn(g, n)
    c = c if c is not None else aqn_paper_coloring(n)
    n0, n1 = g.closed_neighborhood(0), g.closed_neighborhood(1)

    def m(hood: set[int], j: int) -> set[int]:
        return {v for v in hood if c[v] == j}

    first = frozenset(m(n0, 1) - m(n1, 1))
    second = frozenset(m(n0, 2) - m(n1, 2))
    return first, second, first | second


def m_sets_flipped(g: Graph, n: int, c: Coloring | None = None) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """The mirror sets seen from ``0..01``: ``(M11 - M01, M12 - M02, union)``."""
    _require_aqn(g, n)
    c = c if c is not None else aqn_paper_coloring(n)
    n0, n1 = g.closed_neighborhood(0), g.closed_neighborhood(1)
    first = frozenset({v for v in n1 if c[v] == 1} - {v for v in n0 if c[v] == 1})
    second = frozenset({v for v in n1 if c[v] == 2} - {v for v in n0 if c[v] == 2})
    return first, second, first | second


def common_neighbors_outside(g: Graph, s: frozenset[int] | set[int]) -> list[int]:
    """Vertices not in ``s`` adjacent to every member of ``s``."""
    return [v for v in range(g.n_vertices) if v not in s and all(g.has_edge(v, u) for u in s)]


def expected_signatures(n: int) -> dict[int, VertexSignature]:
    """The six signature triples for AQ_n under the last-bit coloring, keyed 1..6."""
    return {
        1: VertexSignature(1, n - 2, n + 1),
        2: VertexSignature(2, n - 1, n),
        3: VertexSignature(1, n, n - 1),
        4: VertexSignature(2, n + 1, n - 2),
        5: VertexSignature(1, n - 1, n),
        6: VertexSignature(2, n, n - 1),
    }


def signature_case(g: Graph, n: int, w: int, c: Coloring | None = None) -> int:
    """Which of the six signature cases (1..6) vertex ``w`` falls in, from M-set membership alone."""
    c = c if c is not None else aqn_paper_coloring(n)
    m01, m02, _ = m_sets(g, n, c)
    m11, m12, _ = m_sets_flipped(g, n, c)
    if w in m01:
        return 1
    if w in m02:
        return 2
    if w in m11:
        return 3
    if w in m12:
        return 4
    return 5 if c[w] == 1 else 6


def violating_automorphism(g: Graph, c: Coloring | Sequence[int], budget: int | None = None,
                           enumeration_limit: int = 100_000) -> Permutation | None:
    """A color-preserving non-identity automorphism of least support, or ``None``.

    Least support is exact when the colored group has at most
    ``enumeration_limit`` elements; otherwise the best strong generator is used.
    """
    group = automorphism_group(g, _colors_of(c), budget)
    if group.is_trivial():
        return None
    if group.order() <= enumeration_limit:
        candidates = (p for p in group.elements() if not p.is_identity())
    else:
        candidates = iter(group.strong_generators)
    return min(candidates, key=lambda p: (len(p.support()), p.image))
