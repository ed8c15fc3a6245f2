"""Instance selection for nearest-neighbour classifiers via proportional approval elections.

Every training instance votes for the instances in its local set (those closer
than its nearest instance of another class); a proportional multi-winner rule
then picks the reduced training set.
"""

from .data import Dataset, load_builtin, load_dataset, resolve_dataset
from .errors import (DatasetFormatError, DatasetParseError, DimensionError, EnumerationLimitError,
                     ExhaustionError, NoEnemyError, VoteSelectError)
from .localset import BallotVariant, Election, as_fraction, build_election, local_set_table
from .voting import Committee, RuleTrace, plausibility, run_equal_shares, run_rule, run_s2ejr, run_sejr, \
    run_seqphragmen

__version__ = "0.1.0"

__all__ = [
    "BallotVariant", "Committee", "Dataset", "DatasetFormatError", "DatasetParseError", "DimensionError",
    "Election", "EnumerationLimitError", "ExhaustionError", "NoEnemyError", "RuleTrace", "VoteSelectError",
    "as_fraction", "build_election", "load_builtin", "load_dataset", "local_set_table", "plausibility",
    "resolve_dataset", "run_equal_shares", "run_rule", "run_s2ejr", "run_sejr", "run_seqphragmen",
]
