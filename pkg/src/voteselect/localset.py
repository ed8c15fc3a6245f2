"""Nearest enemies, local sets and local-set-derived approval elections.

The local set of instance ``i`` holds every instance strictly closer to ``i``
than its nearest enemy (closest instance of another class). In the derived
election every training instance is both a voter and a candidate, and
voter ``i`` approves of (a subset of) its local set.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .data import Dataset, distance_matrix
from .errors import DatasetFormatError, NoEnemyError


def as_fraction(value) -> Fraction:
    """Parse ``"3/2"``, ``"0.75"``, ints or floats into an exact ``Fraction``.

    Floats go through their shortest ``repr`` so that ``0.1`` becomes ``1/10``.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        value = repr(value)
    try:
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse {value!r} as a ratio") from exc


class BallotVariant(enum.Enum):
    INCLUDED = "included"
    EXCLUDED = "excluded"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"variant must be 'included' or 'excluded', got {value!r}") from None


@dataclass(frozen=True)
class LocalSetTable:
    nearest_enemy: tuple   # per instance: (enemy index, distance)
    local_sets: tuple      # per instance: frozenset of indices

    def __len__(self):
        return len(self.local_sets)


def _check_dm(ds, dm):
    if dm is None:
        return distance_matrix(ds)
    if dm.shape != (ds.n, ds.n):
        raise ValueError(f"distance matrix shape {dm.shape} does not match n={ds.n}")
    return dm


def nearest_enemy(i: int, ds: Dataset, dm: np.ndarray | None = None) -> tuple[int, float]:
    """Closest instance with a label different from ``i``'s; ties go to the lowest index."""
    dm = _check_dm(ds, dm)
    labels = ds.label_array()
    enemies = np.flatnonzero(labels != labels[i])
    if enemies.size == 0:
        raise NoEnemyError(f"no enemy instances: instance {i} has no instance of another class")
    d = dm[i, enemies]
    k = int(np.argmin(d))  # first minimum -> lowest index
    return int(enemies[k]), float(d[k])


def local_set(i: int, ds: Dataset, dm: np.ndarray | None = None) -> frozenset:
    dm = _check_dm(ds, dm)
    _, radius = nearest_enemy(i, ds, dm)
    return frozenset(int(j) for j in np.flatnonzero(dm[i] < radius))


def local_set_table(ds: Dataset, dm: np.ndarray | None = None) -> LocalSetTable:
    """Nearest enemy and local set of every instance."""
    dm = _check_dm(ds, dm)
    labels = ds.label_array()
    enemies, sets = [], []
    for i in range(ds.n):
        mask = labels != labels[i]
        if not mask.any():
            raise NoEnemyError("no enemy instances: the training set contains a single class")
        d = np.where(mask, dm[i], np.inf)
        j = int(np.argmin(d))
        enemies.append((j, float(d[j])))
        sets.append(frozenset(int(x) for x in np.flatnonzero(dm[i] < d[j])))
    return LocalSetTable(tuple(enemies), tuple(sets))


@dataclass(frozen=True)
class Election:
    """Approval election with ``n`` voters and ``num_candidates`` candidates.

    ``q`` is the exact ratio t/n between target committee size and number
    of voters. ``t_int`` is the integer target size used by sequential
    Phragmen; it defaults to ``floor(q * n)``.
    """

    ballots: tuple
    q: Fraction
    num_candidates: int | None = None
    t_int: int | None = None

    def __post_init__(self):
        ballots = tuple(tuple(sorted(set(int(c) for c in b))) for b in self.ballots)
        q = as_fraction(self.q)
        if q <= 0:
            raise ValueError(f"q must be positive, got {q}")
        m = len(ballots) if self.num_candidates is None else int(self.num_candidates)
        for i, b in enumerate(ballots):
            if b and (b[0] < 0 or b[-1] >= m):
                raise ValueError(f"ballot of voter {i} approves a candidate outside 0..{m - 1}")
        t_int = self.t_int if self.t_int is not None else int(q * len(ballots))
        object.__setattr__(self, "ballots", ballots)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "num_candidates", m)
        object.__setattr__(self, "t_int", int(t_int))

    @property
    def n(self) -> int:
        return len(self.ballots)

    @property
    def price(self) -> Fraction:
        """n/t, the number of voters (or units of budget) a seat costs."""
        return 1 / self.q

    def approvers(self) -> list[list[int]]:
        """Voters approving each candidate, in voter order."""
        out = [[] for _ in range(self.num_candidates)]
        for i, b in enumerate(self.ballots):
            for c in b:
                out[c].append(i)
        return out

    def to_text(self) -> str:
        """Line-oriented debug format, readable by :func:`election_from_text`."""
        lines = [f"q: {self.q}", f"candidates: {self.num_candidates}", f"t_int: {self.t_int}"]
        lines += [f"{i}: {' '.join(map(str, b))}".rstrip() for i, b in enumerate(self.ballots)]
        return "\n".join(lines) + "\n"


def election_from_text(text: str) -> Election:
    """Parse the format written by :meth:`Election.to_text`.

    Header lines ``q: <ratio>``, ``candidates: <m>`` and ``t_int: <k>`` are
    optional (q defaults to 1); ``#`` starts a comment; voter lines are
    ``<voter>: c1 c2 ...`` and must list voters 0..n-1 in order.
    """
    q, m, t_int, ballots = Fraction(1), None, None, []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise DatasetFormatError(f"line {lineno}: expected '<key>: <value>'")
        key = key.strip()
        if key == "q":
            q = as_fraction(rest)
        elif key == "candidates":
            m = int(rest)
        elif key == "t_int":
            t_int = int(rest)
        else:
            if int(key) != len(ballots):
                raise DatasetFormatError(f"line {lineno}: voter {key} out of order")
            ballots.append([int(c) for c in rest.split()])
    return Election(tuple(ballots), q, num_candidates=m, t_int=t_int)


def build_election(train: Dataset, variant=BallotVariant.INCLUDED, q=1, t_int: int | None = None,
                   dm: np.ndarray | None = None, table: LocalSetTable | None = None) -> Election:
    """Election local-set derived from ``train``: voter ``i`` approves its local set
    (INCLUDED) or its local set minus itself (EXCLUDED)."""
    variant = BallotVariant.parse(variant)
    if train.n == 0:
        raise ValueError("training set is empty")
    if table is None:
        table = local_set_table(train, dm)
    if variant is BallotVariant.INCLUDED:
        ballots = tuple(table.local_sets)
    else:
        ballots = tuple(s - {i} for i, s in enumerate(table.local_sets))
    return Election(ballots, as_fraction(q), num_candidates=train.n, t_int=t_int)

