from .core import (
    UNREACHABLE,
    Graph,
    bfs_levels,
    diameter,
    distances,
    from_label,
    iter_bits,
    to_label,
)
from .families import (
    MAX_AUGMENTED_DIM,
    MAX_HYPERCUBE_DIM,
    augmented_cube,
    augmented_cube_recursive,
    complement_perfect_matching,
    complete_graph,
    graph_power,
    hypercube,
    hypercube_power,
)
from .io import GraphFormatError, from_dimacs, from_json_dict, read_graph, to_dimacs, to_json_dict, write_graph

__all__ = [
    "UNREACHABLE",
    "Graph",
    "GraphFormatError",
    "MAX_AUGMENTED_DIM",
    "MAX_HYPERCUBE_DIM",
    "augmented_cube",
    "augmented_cube_recursive",
    "bfs_levels",
    "complement_perfect_matching",
    "complete_graph",
    "diameter",
    "distances",
    "from_dimacs",
    "from_json_dict",
    "from_label",
    "graph_power",
    "hypercube",
    "hypercube_power",
    "iter_bits",
    "read_graph",
    "to_dimacs",
    "to_json_dict",
    "to_label",
    "write_graph",
]
