"""Graph pebbling workbench.

Exact pebbling numbers by exhaustive search on small graphs, weight-function
strategies whose rational LP relaxations certify upper bounds, and the exact
path-partition formula for trees.
"""

from .bounds import (
    BoundReport,
    GraphBounds,
    aggregate_bound,
    bound_graph,
    lp_bound,
    min_coverage,
    ratio_bound,
    total_unit_weight,
)
from .families import (
    FAMILY_KINDS,
    bruhat,
    build_family,
    complete,
    cycle,
    hypercube,
    path,
    petersen,
    tree_from_parents,
)
from .graph import (
    Graph,
    GraphError,
    GraphFormatError,
    distance,
    distances_from,
    eccentricity,
    from_edge_list,
    is_connected,
    new_graph,
    read_edge_list,
    to_edge_list,
    write_edge_list,
)
from .lp import (
    LinearProgram,
    LpSolution,
    build_relaxation,
    make_linear_program,
    solve_max,
)
from .solver import (
    DEFAULT_MAX_CONFIGS,
    ConfigFormatError,
    EnumerationCapError,
    PebblingResult,
    SolveResult,
    apply_moves,
    format_config,
    is_solvable,
    max_unsolvable,
    parse_config,
    pebbling_number,
    pebbling_number_max,
)
from .strategy import (
    CoverageError,
    Strategy,
    StrategyError,
    StrategySet,
    config_weight,
    generate_strategies,
    load_strategy_set,
    max_unsolvable_weight_check,
    save_strategy_set,
    strategy_from_path,
    strategy_from_tree,
    strategy_set_from_json,
    strategy_set_to_json,
    unit_weight,
    validate_strategy,
)
from .treepi import (
    PathPartition,
    is_tree,
    max_path_partition,
    tree_critical_config,
    tree_pebbling_number,
    tree_pebbling_number_max,
)

__all__ = [
    "BoundReport",
    "ConfigFormatError",
    "CoverageError",
    "DEFAULT_MAX_CONFIGS",
    "EnumerationCapError",
    "FAMILY_KINDS",
    "Graph",
    "GraphBounds",
    "GraphError",
    "GraphFormatError",
    "LinearProgram",
    "LpSolution",
    "PathPartition",
    "PebblingResult",
    "SolveResult",
    "Strategy",
    "StrategyError",
    "StrategySet",
    "aggregate_bound",
    "apply_moves",
    "bound_graph",
    "bruhat",
    "build_family",
    "build_relaxation",
    "complete",
    "config_weight",
    "cycle",
    "distance",
    "distances_from",
    "eccentricity",
    "format_config",
    "from_edge_list",
    "generate_strategies",
    "hypercube",
    "is_connected",
    "is_solvable",
    "is_tree",
    "load_strategy_set",
    "lp_bound",
    "make_linear_program",
    "max_path_partition",
    "max_unsolvable",
    "max_unsolvable_weight_check",
    "min_coverage",
    "new_graph",
    "parse_config",
    "path",
    "pebbling_number",
    "pebbling_number_max",
    "petersen",
    "ratio_bound",
    "read_edge_list",
    "save_strategy_set",
    "solve_max",
    "strategy_from_path",
    "strategy_from_tree",
    "strategy_set_from_json",
    "strategy_set_to_json",
    "to_edge_list",
    "total_unit_weight",
    "tree_critical_config",
    "tree_from_parents",
    "tree_pebbling_number",
    "tree_pebbling_number_max",
    "unit_weight",
    "validate_strategy",
    "write_edge_list",
]
