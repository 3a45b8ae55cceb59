"""Path covers with few short paths, and flow-shop schedules built from them."""

from .graph import (
    CliquePartition,
    Graph,
    ParseError,
    complement,
    format_instance,
    parse_graph,
    parse_instance,
    recognize_two_cliques,
)
from .matching import (
    MatchingDecomposition,
    TwoMatching,
    decompose,
    maximum_matching,
    maximum_two_matching,
)
from .pathcover import (
    AlternatingPath,
    InvalidSwap,
    PathCover,
    SaveObject,
    algorithm_A,
    algorithm_B,
    apply_swap,
    break_cycles,
    find_saving_path_A,
    find_saving_path_B,
    path_cover,
    refine_to_min_singletons,
)
from .scheduling import (
    AggregatedPair,
    Instance,
    InstanceError,
    Schedule,
    algorithm_C,
    format_schedule,
    lower_bound_two_cliques,
    makespan_identity_check,
    render_gantt,
    schedule_from_cover,
    solve_unit,
    solve_unit_with_cover,
    unit_lower_bound,
    validate_schedule,
)

__version__ = "0.1.0"
