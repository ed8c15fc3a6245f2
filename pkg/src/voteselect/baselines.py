"""Comparison instance selectors: RANDOM, NOAPPROVED, CNN, ENN, LSSm, LSBo, ICF.

Each selector takes a training :class:`~voteselect.data.Dataset` and returns a
:class:`SelectionResult` whose ``kept`` positions index into that dataset, in
increasing order. If a method would keep nothing, the input is returned
unchanged and ``emptied`` is set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .classify import vote
from .data import Dataset, distance_matrix
from .localset import LocalSetTable, as_fraction, local_set_table

BASELINE_IDS = ("random", "noapproved", "cnn", "enn", "lssm", "lsbo", "icf")


@dataclass(frozen=True)
class SelectionResult:
    method: str
    kept: tuple
    params: tuple = ()
    emptied: bool = False
    passes: tuple = ()     # per-pass removal counts for iterative methods

    def original_indices(self, train: Dataset) -> tuple:
        return tuple(train.origin[i] for i in self.kept)

    def reduction(self, n: int) -> float:
        return (n - len(self.kept)) / n


def _finish(method: str, n: int, kept, params=(), passes=()) -> SelectionResult:
    kept = tuple(sorted(int(i) for i in kept))
    if not kept and n:
        return SelectionResult(method, tuple(range(n)), tuple(params), True, tuple(passes))
    return SelectionResult(method, kept, tuple(params), False, tuple(passes))


def _dm(train, dm):
    return distance_matrix(train) if dm is None else dm


def _coverage(table: LocalSetTable) -> list[int]:
    """Number of local sets (own included) each instance belongs to."""
    count = [0] * len(table)
    for members in table.local_sets:
        for j in members:
            count[j] += 1
    return count


def select_random(train: Dataset, fraction=0.9, seed: int = 42) -> SelectionResult:
    """Keep round(fraction * n) instances drawn uniformly without replacement."""
    f = as_fraction(fraction)
    if not 0 < f <= 1:
        raise ValueError(f"fraction must be in (0, 1], got {fraction}")
    size = int(f * train.n + Fraction(1, 2))
    size = max(1, size) if train.n else 0
    rng = np.random.default_rng(seed)
    kept = rng.choice(train.n, size=size, replace=False)
    return _finish("random", train.n, kept, (("fraction", str(f)), ("seed", seed)))


def select_noapproved(train: Dataset, dm=None, table: LocalSetTable | None = None) -> SelectionResult:
    """Keep the instances lying in the local set of some other instance."""
    table = table or local_set_table(train, _dm(train, dm))
    approved = set()
    for i, members in enumerate(table.local_sets):
        approved.update(j for j in members if j != i)
    return _finish("noapproved", train.n, approved)


def _neighbours(dm_row: np.ndarray, exclude: int, K: int) -> np.ndarray:
    n = dm_row.shape[0]
    order = np.lexsort((np.arange(n), dm_row))
    return order[order != exclude][:K]


def select_enn(train: Dataset, K: int = 3, dm=None) -> SelectionResult:
    """Drop every instance whose K nearest other instances vote for a different class.

    All decisions are taken on the input set and applied together.
    """
    if train.n <= K:
        raise ValueError(f"ENN needs more than K={K} instances, got {train.n}")
    dm = _dm(train, dm)
    labels = train.labels
    kept = []
    for i in range(train.n):
        nb = _neighbours(dm[i], i, K)
        majority = vote(dm[i, nb], [labels[j] for j in nb], nb, K)
        if majority == labels[i]:
            kept.append(i)
    return _finish("enn", train.n, kept, (("K", K),))


def select_lssm(train: Dataset, dm=None, table: LocalSetTable | None = None) -> SelectionResult:
    """Drop instances that are nearest enemy to more instances than the
    number of local sets containing them."""
    table = table or local_set_table(train, _dm(train, dm))
    useful = _coverage(table)
    harmful = [0] * train.n
    for enemy, _ in table.nearest_enemy:
        harmful[enemy] += 1
    return _finish("lssm", train.n, [i for i in range(train.n) if harmful[i] <= useful[i]])


def select_lsbo(train: Dataset, dm=None) -> SelectionResult:
    """LSSm followed by a border-keeping pass: in increasing order of local-set
    size, keep an instance when no other member of its local set is kept yet."""
    dm = _dm(train, dm)
    first = select_lssm(train, dm)
    kept = list(first.kept)
    if len({train.labels[i] for i in kept}) < 2:
        return _finish("lsbo", train.n, kept)
    sub = train.subset(kept)
    table = local_set_table(sub, dm[np.ix_(kept, kept)])
    order = sorted(range(sub.n), key=lambda i: (len(table.local_sets[i]), i))
    chosen: set = set()
    for i in order:
        if not (table.local_sets[i] - {i}) & chosen:
            chosen.add(i)
    return _finish("lsbo", train.n, [kept[i] for i in chosen])


def select_icf(train: Dataset, K: int = 3, dm=None) -> SelectionResult:
    """ENN, then repeatedly drop every instance whose local set is larger than
    the number of local sets it belongs to, until a pass drops nothing."""
    dm = _dm(train, dm)
    current = list(select_enn(train, K, dm).kept)
    passes = []
    while len({train.labels[i] for i in current}) >= 2:
        table = local_set_table(train.subset(current), dm[np.ix_(current, current)])
        coverage = _coverage(table)
        survivors = [current[i] for i in range(len(current))
                     if len(table.local_sets[i]) <= coverage[i]]
        removed = len(current) - len(survivors)
        passes.append(removed)
        if removed == 0 or not survivors:
            break
        current = survivors
    return _finish("icf", train.n, current, (("K", K),), passes)


def select_cnn(train: Dataset, seed: int | None = None, dm=None) -> SelectionResult:
    """Condensed nearest neighbour: start from instance 0 and keep adding every
    instance that 1-NN over the kept instances gets wrong, sweeping in index
    order until a sweep adds nothing. ``seed`` is accepted for interface
    symmetry and not used."""
    if train.n == 0:
        raise ValueError("training set is empty")
    dm = _dm(train, dm)
    labels = train.labels
    store = [0]
    in_store = [False] * train.n
    in_store[0] = True
    changed = True
    while changed:
        changed = False
        for i in range(train.n):
            if in_store[i]:
                continue
            row = dm[i, store]
            nearest = store[int(np.lexsort((np.array(store), row))[0])]
            if labels[nearest] != labels[i]:
                store.append(i)
                in_store[i] = True
                changed = True
    return _finish("cnn", train.n, store)


def run_baseline(method: str, train: Dataset, dm=None, fraction=0.9, seed: int = 42, K: int = 3) -> SelectionResult:
    method = method.lower()
    if method == "random":
        return select_random(train, fraction, seed)
    if method == "noapproved":
        return select_noapproved(train, dm)
    if method == "cnn":
        return select_cnn(train, seed, dm)
    if method == "enn":
        return select_enn(train, K, dm)
    if method == "lssm":
        return select_lssm(train, dm)
    if method == "lsbo":
        return select_lsbo(train, dm)
    if method == "icf":
        return select_icf(train, K, dm)
    raise ValueError(f"unknown baseline {method!r}; choose from {', '.join(BASELINE_IDS)}")
