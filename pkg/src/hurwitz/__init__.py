"""Counting branched covers of the sphere with three branching points."""

__version__ = "0.1.0"

from .partitions import (BranchDatum, HeartParams, IncompatibleDatumError,  # noqa: E402
                         MalformedDatumError, Partition, ZieveStatus, heart, heart_datum,
                         is_compatible, partitions_of, zieve_status)
from .perm import Permutation, compose, cycle_type, is_transitive  # noqa: E402
from .enumerate import Constellation, enumerate_strong, genus_of  # noqa: E402
from .equivalence import Move, apply_move, duality_partner, weak_count  # noqa: E402
from .characters import character_value, frobenius_tuple_count  # noqa: E402

__all__ = [
    "BranchDatum", "Constellation", "HeartParams", "IncompatibleDatumError",
    "MalformedDatumError", "Move", "Partition", "Permutation", "ZieveStatus",
    "apply_move", "character_value", "compose", "cycle_type", "duality_partner",
    "enumerate_strong", "frobenius_tuple_count", "genus_of", "heart", "heart_datum",
    "is_compatible", "is_transitive", "partitions_of", "weak_count", "zieve_status",
]
