import itertools
from functools import lru_cache

import numpy as np
import pytest

from symbreak.graphs import Graph

ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def all_permutations(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.intp)


def brute_force_automorphisms(g: Graph, colors=None) -> set[tuple[int, ...]]:
    """Filter every permutation of V(g) by edge (and colour) preservation."""
    n = g.n_vertices
    perms = all_permutations(n)
    adj = g.adjacency
    keep = (adj[perms[:, :, None], perms[:, None, :]] == adj).all(axis=(1, 2))
    if colors is not None:
        col = np.asarray(colors)
        keep &= (col[perms] == col).all(axis=1)
    return {tuple(p) for p in perms[keep].tolist()}


@pytest.fixture
def acceptance():
    def record(number: int, text: str, ok: bool) -> None:
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {text}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
