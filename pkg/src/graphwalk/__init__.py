"""Emptiness and witnesses for graph signatures, star automata and
graph-walking automata."""

from .core import (
    Graph,
    ResourceLimitError,
    Signature,
    ValidationReport,
    graphs_identical,
    label_counts,
    make_signature,
    validate_graph,
    validate_signature,
)
from .gwa import (
    Configuration,
    GraphWalkingAutomaton,
    RunResult,
    decode_annotated,
    encode_accepting_run,
    gwa_bound,
    gwa_nonempty,
    reduce_gwa_to_signature,
    simulate,
    validate_gwa,
)
from .solver import (
    BalancedVector,
    DirectionPairing,
    Verdict,
    build_graph,
    contribution_vector,
    count_graphs,
    direction_pairing,
    enumerate_graphs,
    find_balanced_vector,
    is_balanced,
    node_count_bound,
    oracle_min_nodes,
    signature_nonempty,
)
from .star import (
    Star,
    StarAutomaton,
    check_tiling,
    decode_tiling,
    encode_tiling,
    find_tiling,
    induced_star,
    reduce_star_to_signature,
    star_bound,
    star_nonempty,
    validate_star_automaton,
)

__all__ = [name for name in dir() if not name.startswith("_")]
