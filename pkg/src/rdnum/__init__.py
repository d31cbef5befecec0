"""Rainbow disconnection numbers for small graphs.

The rainbow disconnection number of a nontrivial connected graph is the
least number of edge colors such that every vertex pair has an edge cut
whose edges all carry distinct colors.  The package computes the value
exactly on small graphs, brackets it with certified bounds on larger ones,
builds explicit colorings with per-pair cut certificates, and checks a
battery of structural theorems over exhaustive graph censuses.
"""

from .budget import DEFAULT_NODE_BUDGET, Budget, as_budget
from .coloring import (
    ClassVerdict,
    EdgeColoring,
    bipartite_color,
    chromatic_coloring,
    chromatic_index_exact,
    chromatic_number,
    classify_chromatic,
    color_critical_value,
    fan_rotation_color,
    find_edge_coloring,
    fournier_class1_test,
    is_chromatic_index_minimal,
    is_overfull,
    read_coloring,
    regular_even_class1_test,
    regular_parity_class2_test,
    round_robin_rounds,
    write_coloring,
)
from .connectivity import (
    CutValue,
    dense_pair_lower_bound,
    edge_connectivity,
    is_bridge,
    local_edge_connectivity,
    low_degree_deficiency,
    upper_edge_connectivity,
)
from .errors import (
    FormatError,
    ParameterError,
    RdError,
    SizeError,
    StructureError,
    Undecided,
)
from .graphs import (
    Block,
    Graph,
    GraphStats,
    basic_stats,
    bipartition,
    blocks,
    complement,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    encode_graph6,
    is_complete,
    is_cycle_graph,
    is_tree,
    join,
    parse_graph6,
    path_graph,
    petersen_graph,
    read_edge_list,
    star_graph,
    write_edge_list,
)
from .rd import (
    ALL_RULES,
    CHAIN_RULES,
    FAST_AUX_RULES,
    BoundEntry,
    RainbowCutCertificate,
    RdBounds,
    RdResult,
    VerificationReport,
    certificate_is_valid,
    certificate_to_text,
    construct_extremal_graph,
    construct_ng_sharp_graph,
    construct_rd_coloring,
    find_rainbow_cut,
    multipartite_parts,
    rd_bounds,
    rd_exact,
    verify_rd_coloring,
)
from .survey import (
    HARNESS_RULE_NAMES,
    RuleOutcome,
    SurveyConfig,
    SurveyResult,
    TheoremReport,
    check_theorems,
    enumerate_connected_graphs,
    load_graph6_stream,
    run_survey,
    survey_to_text,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_RULES",
    "Block",
    "BoundEntry",
    "Budget",
    "CHAIN_RULES",
    "ClassVerdict",
    "CutValue",
    "DEFAULT_NODE_BUDGET",
    "EdgeColoring",
    "FAST_AUX_RULES",
    "FormatError",
    "Graph",
    "GraphStats",
    "HARNESS_RULE_NAMES",
    "ParameterError",
    "RainbowCutCertificate",
    "RdBounds",
    "RdError",
    "RdResult",
    "RuleOutcome",
    "SizeError",
    "StructureError",
    "SurveyConfig",
    "SurveyResult",
    "TheoremReport",
    "Undecided",
    "VerificationReport",
    "as_budget",
    "basic_stats",
    "bipartite_color",
    "bipartition",
    "blocks",
    "certificate_is_valid",
    "certificate_to_text",
    "check_theorems",
    "chromatic_coloring",
    "chromatic_index_exact",
    "chromatic_number",
    "classify_chromatic",
    "color_critical_value",
    "complement",
    "complete_graph",
    "complete_multipartite",
    "construct_extremal_graph",
    "construct_ng_sharp_graph",
    "construct_rd_coloring",
    "cycle_graph",
    "dense_pair_lower_bound",
    "edge_connectivity",
    "encode_graph6",
    "enumerate_connected_graphs",
    "fan_rotation_color",
    "find_edge_coloring",
    "find_rainbow_cut",
    "fournier_class1_test",
    "is_bridge",
    "is_chromatic_index_minimal",
    "is_complete",
    "is_cycle_graph",
    "is_overfull",
    "is_tree",
    "join",
    "load_graph6_stream",
    "local_edge_connectivity",
    "low_degree_deficiency",
    "multipartite_parts",
    "parse_graph6",
    "path_graph",
    "petersen_graph",
    "rd_bounds",
    "rd_exact",
    "read_coloring",
    "read_edge_list",
    "regular_even_class1_test",
    "regular_parity_class2_test",
    "round_robin_rounds",
    "run_survey",
    "star_graph",
    "survey_to_text",
    "upper_edge_connectivity",
    "verify_rd_coloring",
    "write_coloring",
    "write_edge_list",
]
