"""Connected components by block-diagonal reordering of a dense adjacency matrix."""
__version__ = "0.1.0"

from .algorithm import (  # noqa: E402
    AlgorithmD,
    PivotSelection,
    cut_holds,
    first_nonzero_index,
    isolated_sweep,
    run_algorithm_d,
    select_pivot,
)
from .errors import *  # noqa: E402,F401,F403
from .generators import GraphSpec, add_vertex, generate  # noqa: E402
from .graph import (  # noqa: E402
    AdjacencyMatrix,
    ConnectivityReport,
    Permutation,
    swap_vertices,
    validate_adjacency,
)
from .kernels import default as _default_kernels  # noqa: E402
from .oracle import PartitionOracleResult, oracle_components, partition_of  # noqa: E402

BACKEND = _default_kernels.NAME
