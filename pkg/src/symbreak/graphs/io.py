"""DIMACS and JSON serialisation of :class:`Graph`.

DIMACS files use 1-based vertex numbers and carry labels as
``c label <u> <bitstring>`` comments; JSON uses 0-based indices.
"""
from __future__ import annotations

import json
from pathlib import Path

from .core import Graph


class GraphFormatError(ValueError):
    pass


def to_dimacs(g: Graph) -> str:
    lines = [f"c family {g.family}"]
    if g.dimension is not None:
        lines.append(f"c dimension {g.dimension}")
    lines.append(f"p edge {g.n_vertices} {g.n_edges}")
    if g.labels is not None:
        lines.extend(f"c label {v + 1} {lab}" for v, lab in enumerate(g.labels))
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_dimacs(text: str) -> Graph:
    n = n_edges = None
    family, dimension = "custom", None
    labels: dict[int, str] = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts:
            continue
        tag = parts[0]
        try:
            if tag == "p":
                if len(parts) != 4 or parts[1] not in ("edge", "col"):
                    raise GraphFormatError(f"line {lineno}: bad problem line {raw!r}")
                n, n_edges = int(parts[2]), int(parts[3])
            elif tag == "e":
                u, v = int(parts[1]), int(parts[2])
                edges.append((u - 1, v - 1))
            elif tag == "c" and len(parts) >= 3:
                if parts[1] == "label" and len(parts) == 4:
                    labels[int(parts[2]) - 1] = parts[3]
                elif parts[1] == "family":
                    family = parts[2]
                elif parts[1] == "dimension":
                    dimension = int(parts[2])
        except (IndexError, ValueError) as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(f"line {lineno}: cannot parse {raw!r}") from exc
    if n is None:
        raise GraphFormatError("missing 'p edge' header")
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u + 1}, {v + 1}) outside 1..{n}")
    unique = {(min(u, v), max(u, v)) for u, v in edges}
    if len(unique) != n_edges:
        raise GraphFormatError(f"header declares {n_edges} edges, found {len(unique)}")
    label_list = None
    if labels:
        if set(labels) != set(range(n)):
            raise GraphFormatError("labels must be given for every vertex or none")
        label_list = [labels[v] for v in range(n)]
    return Graph.from_edges(n, unique, labels=label_list, family=family, dimension=dimension)


def to_json_dict(g: Graph) -> dict:
    return {
        "n_vertices": g.n_vertices,
        "family": g.family,
        "dimension": g.dimension,
        "labels": list(g.labels) if g.labels is not None else None,
        "edges": [[u, v] for u, v in g.edges()],
    }


def from_json_dict(data: dict) -> Graph:
    try:
        n = int(data["n_vertices"])
        edges = [(int(u), int(v)) for u, v in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError(f"malformed graph JSON: {exc}") from exc
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u}, {v}) outside 0..{n - 1}")
    return Graph.from_edges(
        n,
        edges,
        labels=data.get("labels"),
        family=data.get("family", "custom"),
        dimension=data.get("dimension"),
    )


def write_graph(g: Graph, path: str | Path, fmt: str | None = None) -> None:
    path = Path(path)
    fmt = fmt or ("json" if path.suffix == ".json" else "dimacs")
    if fmt == "json":
        path.write_text(json.dumps(to_json_dict(g)) + "\n")
    elif fmt == "dimacs":
        path.write_text(to_dimacs(g))
    else:
        raise ValueError(f"unknown graph format {fmt!r}")


def read_graph(path: str | Path) -> Graph:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"{path}: invalid JSON: {exc}") from exc
        return from_json_dict(data)
    return from_dimacs(text)
