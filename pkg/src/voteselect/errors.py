"""Exception types raised by voteselect."""


class VoteSelectError(Exception):
    """Base class for all domain errors."""


class DatasetFormatError(VoteSelectError, ValueError):
    """The dataset file is structurally malformed (empty, ragged rows)."""


class DatasetParseError(DatasetFormatError):
    """A feature cell could not be parsed as a finite real number."""

    def __init__(self, row, column, value):
        self.row = row
        self.column = column
        self.value = value
        super().__init__(f"row {row}, column {column}: cannot parse {value!r} as a finite number")


class DimensionError(VoteSelectError, ValueError):
    """Vectors of incompatible lengths were combined."""


class NoEnemyError(VoteSelectError, ValueError):
    """An instance has no instance of a different class (single-class training set)."""


class ExhaustionError(VoteSelectError):
    """Sequential Phragmen ran out of approved candidates before reaching the target size."""

    def __init__(self, iteration, target):
        self.iteration = iteration
        self.target = target
        super().__init__(
            f"no approved candidate left at iteration {iteration} (target committee size {target})"
        )


class EnumerationLimitError(VoteSelectError):
    """A brute-force axiom check would exceed the configured enumeration bound."""

    def __init__(self, count, bound):
        self.count = count
        self.bound = bound
        super().__init__(f"enumeration of {count} subsets exceeds the bound {bound}")
