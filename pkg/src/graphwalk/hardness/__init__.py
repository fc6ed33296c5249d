"""Instance generators for the hardness constructions."""

from ..core import Signature
from ..star import Star, StarAutomaton
from .coloring import (
    SimpleGraph,
    brute_force_colourable,
    canonical_colored_graph,
    extract_coloring,
    gen_3col_signature,
    is_proper,
)
from .grid import (
    TMConfig,
    TuringMachine,
    canonical_grid_graph,
    check_computation,
    gen_grid_automaton,
    gen_grid_signature,
    validate_tm,
)

UNIVERSAL_STATE = "q"


def gen_universal_star_automaton(sig: Signature) -> StarAutomaton:
    """One state, one star per label: accepts every graph over ``sig``."""
    q = UNIVERSAL_STATE
    return StarAutomaton([q], [Star(a, q, [q] * len(sig.dirs(a))) for a in sig.labels])


__all__ = [
    "SimpleGraph",
    "TMConfig",
    "TuringMachine",
    "brute_force_colourable",
    "canonical_colored_graph",
    "canonical_grid_graph",
    "check_computation",
    "extract_coloring",
    "gen_3col_signature",
    "gen_grid_automaton",
    "gen_grid_signature",
    "gen_universal_star_automaton",
    "is_proper",
    "validate_tm",
]
