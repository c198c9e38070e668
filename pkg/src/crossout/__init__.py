"""Exact engine for the crossout procedure: permutations as labeled Dyck
path pairs, brute-force identity verification, and a playable alternating
selection game against the optimal strategy."""

from .correspondence import CrossoutTuple, decode, encode
from .dyck import (
    DyckPath,
    LabeledDyckPath,
    catalan,
    enumerate_dyck_paths,
    enumerate_hermite,
    hermite_labelings,
)
from .errors import (
    GUARD_MAX_N,
    ConstraintError,
    GuardLimitError,
    ValidationError,
)
from .game import (
    GameState,
    GameStateError,
    IllegalMoveError,
    analysis,
    apply_move,
    engine_move,
    legal_moves,
    new_game,
    no_trade_check,
    playout_optimal,
)
from .identities import IdentityReport, fiber, generate_alice_fiber, outcome_counts, run_suites
from .marking import Marking, crossout_mark, iter_permutations, random_permutation, validate_permutation
from .matchings import (
    Matching,
    enumerate_matchings,
    hermite_to_matching,
    matching_to_hermite,
    normalize_matching,
)
from .probability import alice_probability
from .qpoly import Polynomial, monomial, q_integer
from .stats import StatBundle, stat_bundle, xy_inversions, z_stat

__version__ = "0.1.0"

__all__ = [
    "CrossoutTuple",
    "DyckPath",
    "LabeledDyckPath",
    "Marking",
    "Matching",
    "GameState",
    "GameStateError",
    "IllegalMoveError",
    "IdentityReport",
    "Polynomial",
    "StatBundle",
    "ConstraintError",
    "GuardLimitError",
    "ValidationError",
    "GUARD_MAX_N",
    "alice_probability",
    "analysis",
    "apply_move",
    "catalan",
    "crossout_mark",
    "decode",
    "encode",
    "engine_move",
    "enumerate_dyck_paths",
    "enumerate_hermite",
    "enumerate_matchings",
    "fiber",
    "generate_alice_fiber",
    "hermite_labelings",
    "hermite_to_matching",
    "iter_permutations",
    "legal_moves",
    "matching_to_hermite",
    "monomial",
    "new_game",
    "no_trade_check",
    "normalize_matching",
    "outcome_counts",
    "playout_optimal",
    "q_integer",
    "random_permutation",
    "run_suites",
    "stat_bundle",
    "validate_permutation",
    "xy_inversions",
    "z_stat",
]
