"""K-nearest-neighbour classification and the reduced-set correctness check."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .data import Dataset, distance_matrix, distances_to
from .errors import DimensionError
from .localset import BallotVariant, build_election, local_set_table
from .voting import canonical_rule, run_rule


@dataclass(frozen=True)
class KnnModel:
    train: Dataset
    K: int

    def __post_init__(self):
        if self.K < 1 or self.K % 2 == 0:
            raise ValueError(f"K must be a positive odd integer, got {self.K}")
        if self.train.n == 0:
            raise ValueError("training set is empty")


def vote(dists: np.ndarray, labels, origin, K: int) -> str:
    """Majority label among the K closest entries of ``dists``.

    Equal distances are ordered by original index; a tie in label counts goes
    to whichever tied label appears first in that neighbour order.
    """
    order = np.lexsort((np.asarray(origin), dists))[:K]
    nearest = [labels[j] for j in order]
    counts = Counter(nearest)
    top = max(counts.values())
    for label in nearest:
        if counts[label] == top:
            return label
    raise AssertionError("unreachable")


def knn_predict(model: KnnModel, query) -> str:
    query = np.asarray(query, dtype=np.float64)
    if query.shape != (model.train.feature_count,):
        raise DimensionError(f"query has {query.size} features, model expects {model.train.feature_count}")
    d = distances_to(model.train.features, query)
    return vote(d, model.train.labels, model.train.origin, model.K)


def predict_block(dists: np.ndarray, train_labels, train_origin, K: int) -> list[str]:
    """Predictions for each row of a (queries x training instances) distance block."""
    return [vote(row, train_labels, train_origin, K) for row in dists]


def evaluate_accuracy(train: Dataset, test: Dataset, K: int) -> float:
    if test.n == 0:
        raise ValueError("test set is empty")
    model = KnnModel(train, K)
    correct = sum(knn_predict(model, test.features[i]) == test.labels[i] for i in range(test.n))
    return correct / test.n


@dataclass(frozen=True)
class GuaranteeReport:
    rule: str
    K: int
    committee: tuple
    guaranteed: tuple      # instances whose ballot has at least (K+1)/2 members
    failures: tuple        # guaranteed instances misclassified by the reduced set

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_text(self) -> str:
        text = (f"{self.rule} K={self.K}: kept {len(self.committee)}, "
                f"{len(self.guaranteed)} guaranteed instances, {len(self.failures)} failures")
        if self.failures:
            text += "; misclassified: " + " ".join(map(str, self.failures))
        return text + "\n"


def check_theorem_pjr_knn(train: Dataset, rule: str, K: int, dm: np.ndarray | None = None) -> GuaranteeReport:
    """Reduce ``train`` with ``rule`` at t/n = (K+1)/2 (self-approving ballots)
    and check that K-NN on the reduced set labels correctly every training
    instance approving at least (K+1)/2 instances."""
    rule = canonical_rule(rule)
    if K < 1 or K % 2 == 0:
        raise ValueError(f"K must be a positive odd integer, got {K}")
    if rule == "seqphragmen":
        raise ValueError("the guarantee needs a rule that accepts t/n above 1 (sejr, s2ejr, es)")
    if rule == "s2ejr" and K > 3:
        raise ValueError("s2ejr only guarantees proportionality up to l=2, so K must be 1 or 3")
    if dm is None:
        dm = distance_matrix(train)
    need = (K + 1) // 2
    table = local_set_table(train, dm)
    e = build_election(train, BallotVariant.INCLUDED, Fraction(need), table=table)
    committee, _ = run_rule(rule, e)
    kept = list(committee.members)
    kept_labels = [train.labels[j] for j in kept]
    kept_origin = [train.origin[j] for j in kept]
    guaranteed = tuple(i for i in range(train.n) if len(e.ballots[i]) >= need)
    failures = tuple(i for i in guaranteed
                     if vote(dm[i, kept], kept_labels, kept_origin, K) != train.labels[i])
    return GuaranteeReport(rule, K, tuple(kept), guaranteed, failures)
