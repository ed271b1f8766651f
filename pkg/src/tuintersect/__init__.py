"""n binary solutions of a totally unimodular system with lexicographically minimal intersection."""
from .compression import Compression, VulnerabilityVector, compress, lex_compare, vulnerability
from .core import (
    BipartiteInstance,
    DigraphInstance,
    SolutionBundle,
    TUCheck,
    TUSystem,
    bipartite_to_system,
    digraph_to_system,
    is_totally_unimodular_bruteforce,
    validate_tu_entries,
)
from .decompose import decompose
from .errors import *  # noqa: F401,F403
from .lexsolver import WeightVector, lex_weights, solve_lexmin, solve_weighted_compression
from .lp import LpOutcome, LpProblem, LpStatus, assert_integral, solve_lp
from .simplesolver import solve_min_critical

__version__ = "0.1.0"
