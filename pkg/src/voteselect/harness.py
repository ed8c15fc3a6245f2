"""Cross-validated accuracy/reduction experiments and their CSV outputs.

For every fold the selector sees only the training part (all other folds),
the kept instances train a K-NN classifier and the held-out fold is scored.
Accuracy is the total number of correct predictions over all folds divided
by the dataset size; reduction is the mean over folds of
``(|T| - |T_r|) / |T|``.
"""

from __future__ import annotations

import csv
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import published
from .baselines import BASELINE_IDS, run_baseline
from .classify import vote
from .data import Dataset, distance_matrix, make_folds, normalize_minmax
from .errors import VoteSelectError
from .localset import BallotVariant, as_fraction, build_election
from .voting import canonical_rule, run_rule

UTCS_GRID = tuple(Fraction(x) for x in ("2", "3/2", "1", "3/4", "1/2", "1/4"))
SEQP_GRID = tuple(Fraction(k, 10) for k in range(9, 0, -1))
RESULT_COLUMNS = ("dataset", "selector", "q", "variant", "K", "accuracy", "reduction",
                  "committee_mode_flags", "seconds")
_RULE_LABELS = {"sejr": "SEJR", "s2ejr": "S2EJR", "es": "ES", "seqphragmen": "SeqP"}


def format_q(q) -> str:
    """Decimal form when finite (``3/2`` -> ``1.5``), else ``a/b``."""
    q = as_fraction(q)
    d = q.denominator
    while d % 2 == 0:
        d //= 2
    while d % 5 == 0:
        d //= 5
    if d != 1:
        return f"{q.numerator}/{q.denominator}"
    digits = 0
    while (q * 10**digits).denominator != 1:
        digits += 1
    return f"{float(q):.{digits}f}" if digits else str(q.numerator)


class FoldError(VoteSelectError):
    def __init__(self, fold: int, cause: Exception):
        self.fold = fold
        self.cause = cause
        super().__init__(f"fold {fold}: {cause}")


@dataclass(frozen=True)
class SelectorSpec:
    """What reduces a training fold: a voting rule, a baseline, or nothing."""

    kind: str                       # "rule", "baseline" or "none"
    name: str = "none"
    q: Fraction | None = None
    variant: BallotVariant | None = None
    fraction: Fraction | None = None

    @classmethod
    def rule(cls, name: str, q, variant=BallotVariant.INCLUDED) -> "SelectorSpec":
        return cls("rule", canonical_rule(name), as_fraction(q), BallotVariant.parse(variant))

    @classmethod
    def baseline(cls, name: str, fraction=None) -> "SelectorSpec":
        name = name.lower()
        if name not in BASELINE_IDS:
            raise ValueError(f"unknown baseline {name!r}; choose from {', '.join(BASELINE_IDS)}")
        if name == "random":
            return cls("baseline", name, fraction=as_fraction(0.9 if fraction is None else fraction))
        return cls("baseline", name)

    @classmethod
    def identity(cls) -> "SelectorSpec":
        return cls("none")

    @property
    def label(self) -> str:
        """Short column-style name, e.g. ``SEJR-2``, ``R-0.9``, ``NoA``."""
        if self.kind == "rule":
            return f"{_RULE_LABELS[self.name]}-{format_q(self.q)}"
        if self.kind == "none":
            return "NoR"
        if self.name == "noapproved":
            return "NoA"
        if self.name == "random":
            return f"R-{format_q(self.fraction)}"
        return {"lssm": "LSSm", "lsbo": "LSBo"}.get(self.name, self.name.upper())

    @property
    def q_text(self) -> str:
        if self.q is not None:
            return format_q(self.q)
        if self.fraction is not None:
            return format_q(self.fraction)
        return ""

    @property
    def variant_text(self) -> str:
        return self.variant.value if self.variant is not None else ""


@dataclass(frozen=True)
class ExperimentConfig:
    selector: SelectorSpec
    K: int = 3
    folds: int = 10
    seed: int = 42
    normalize: bool = False


@dataclass(frozen=True)
class FoldResult:
    fold: int
    train_size: int
    kept: int
    test_size: int
    correct: int
    flags: tuple = ()

    @property
    def reduction(self) -> float:
        return (self.train_size - self.kept) / self.train_size


@dataclass(frozen=True)
class ExperimentResult:
    dataset: str
    config: ExperimentConfig
    folds: tuple
    seconds: dict = field(default_factory=dict, compare=False)
    error: str = ""

    @property
    def ok(self) -> bool:
        return not self.error

    @property
    def accuracy(self) -> float:
        return sum(f.correct for f in self.folds) / sum(f.test_size for f in self.folds)

    @property
    def reduction(self) -> float:
        return sum(f.reduction for f in self.folds) / len(self.folds)

    @property
    def flags(self) -> str:
        """e.g. ``fallback:2;adapted-stop:10`` -- how many folds raised each flag."""
        counts: dict = {}
        for f in self.folds:
            for flag in f.flags:
                counts[flag] = counts.get(flag, 0) + 1
        return ";".join(f"{k}:{v}" for k, v in counts.items())


def _fold_seeds(seed: int, k: int) -> list[int]:
    return [int(s.generate_state(1)[0]) for s in np.random.SeedSequence(seed).spawn(k)]


def select(train: Dataset, spec: SelectorSpec, dm: np.ndarray, seed: int = 42, K: int = 3) -> tuple[list[int], tuple]:
    """Positions of ``train`` kept by ``spec`` and any flags raised on the way."""
    if spec.kind == "none":
        return list(range(train.n)), ()
    if spec.kind == "rule":
        e = build_election(train, spec.variant, spec.q, dm=dm)
        adapted = spec.name == "seqphragmen" and spec.variant is BallotVariant.EXCLUDED
        committee, _ = run_rule(spec.name, e, adapted_stop=adapted)
        return sorted(committee.members), committee.flags
    result = run_baseline(spec.name, train, dm=dm, fraction=spec.fraction or 1, seed=seed, K=K)
    return list(result.kept), (("emptied",) if result.emptied else ())


def run_experiment(ds: Dataset, cfg: ExperimentConfig, dm: np.ndarray | None = None) -> ExperimentResult:
    """k-fold cross-validation of ``cfg.selector`` followed by K-NN."""
    if cfg.normalize:
        ds = normalize_minmax(ds)
        dm = None
    if dm is None:
        dm = distance_matrix(ds)
    assignment = make_folds(ds, cfg.folds, cfg.seed)
    seeds = _fold_seeds(cfg.seed, cfg.folds)
    labels = ds.labels
    results = []
    spent = {"select": 0.0, "classify": 0.0}
    for f, (train_idx, test_idx) in enumerate(assignment.folds()):
        train = ds.subset(train_idx)
        clock = time.perf_counter()
        try:
            kept, flags = select(train, cfg.selector, dm[np.ix_(train_idx, train_idx)], seeds[f], cfg.K)
        except Exception as exc:
            raise FoldError(f, exc) from exc
        spent["select"] += time.perf_counter() - clock
        clock = time.perf_counter()
        kept_idx = [train_idx[j] for j in kept]
        kept_labels = [labels[j] for j in kept_idx]
        block = dm[np.ix_(test_idx, kept_idx)]
        correct = sum(vote(block[r], kept_labels, kept_idx, cfg.K) == labels[i] for r, i in enumerate(test_idx))
        spent["classify"] += time.perf_counter() - clock
        results.append(FoldResult(f, len(train_idx), len(kept), len(test_idx), int(correct), tuple(flags)))
    return ExperimentResult(ds.name, cfg, tuple(results), spent)


def _run_cell(args):
    ds, cfg = args
    clock = time.perf_counter()
    try:
        result = run_experiment(ds, cfg)
    except Exception as exc:
        return ExperimentResult(ds.name, cfg, (), {"total": time.perf_counter() - clock},
                                error=f"{type(exc).__name__}: {exc}")
    result.seconds["total"] = time.perf_counter() - clock
    return result


def run_grid(datasets, configs, workers: int = 1) -> list[ExperimentResult]:
    """Every (dataset, config) pair, in that canonical order; failures are
    recorded on the result instead of aborting the grid."""
    datasets, configs = list(datasets), list(configs)
    if not datasets or not configs:
        raise ValueError("need at least one dataset and one configuration")
    cells = [(ds, cfg) for ds in datasets for cfg in configs]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_cell, cells))
    return [_run_cell(c) for c in cells]


def config_grid(rules=("sejr", "s2ejr", "es"), qs=None, variants=(BallotVariant.INCLUDED,), K: int = 3,
                folds: int = 10, seed: int = 42, normalize: bool = False) -> list[ExperimentConfig]:
    """Configurations for each rule over its grid of t/n values (or ``qs``)."""
    out = []
    for rule in rules:
        rule = canonical_rule(rule)
        grid = qs if qs is not None else (SEQP_GRID if rule == "seqphragmen" else UTCS_GRID)
        for variant in variants:
            for q in grid:
                out.append(ExperimentConfig(SelectorSpec.rule(rule, q, variant), K, folds, seed, normalize))
    return out


def averages(results) -> list[tuple[ExperimentConfig, float, float, int]]:
    """Per-config mean accuracy and reduction over the datasets that succeeded."""
    groups: dict = {}
    for r in results:
        if r.ok:
            groups.setdefault(r.config, []).append(r)
    return [(cfg, sum(r.accuracy for r in rs) / len(rs), sum(r.reduction for r in rs) / len(rs), len(rs))
            for cfg, rs in groups.items()]


def _num(x: float) -> str:
    return f"{x:.6f}"


def write_results(results, fh, timing: bool = False, with_averages: bool = True) -> None:
    """One row per (dataset, config), then one ``average`` row per config.

    ``seconds`` is left empty unless ``timing`` is set, so that reruns with
    the same seed produce identical files.
    """
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(RESULT_COLUMNS)
    for r in results:
        s = r.config.selector
        if r.ok:
            acc, red, flags = _num(r.accuracy), _num(r.reduction), r.flags
        else:
            acc, red, flags = "", "", f"error={r.error}"
        secs = f"{r.seconds.get('total', 0.0):.3f}" if timing else ""
        w.writerow([r.dataset, s.label, s.q_text, s.variant_text, r.config.K, acc, red, flags, secs])
    if with_averages:
        for cfg, acc, red, count in averages(results):
            s = cfg.selector
            w.writerow(["average", s.label, s.q_text, s.variant_text, cfg.K, _num(acc), _num(red),
                        f"datasets:{count}", ""])


def write_scatter(results, fh) -> None:
    """Accuracy-vs-reduction points, one per configuration (averaged over datasets)."""
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(("selector", "q", "variant", "K", "mean_reduction", "mean_accuracy", "datasets"))
    for cfg, acc, red, count in averages(results):
        s = cfg.selector
        w.writerow([s.label, s.q_text, s.variant_text, cfg.K, _num(red), _num(acc), count])


def published_value(metric: str, dataset: str, spec: SelectorSpec) -> float | None:
    """Published KNN accuracy (``metric="accuracy"``) or reduction for a computed cell."""
    prefix = "knn_accuracy" if metric == "accuracy" else "reduction"
    for key, table in published.TABLES.items():
        if not key.startswith(prefix):
            continue
        if spec.kind == "rule" and not key.endswith("_" + spec.variant.value):
            continue
        if spec.kind != "rule" and "_q_" in key:
            continue
        if spec.label in table["columns"]:
            value = published.lookup(key, dataset, spec.label)
            if value is not None:
                return value
    return None


def write_comparison(results, fh) -> None:
    """Computed values next to the published ones (source column says which)."""
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(("dataset", "selector", "q", "variant", "metric", "computed", "published", "difference"))
    for r in results:
        if not r.ok:
            continue
        s = r.config.selector
        for metric, value in (("accuracy", r.accuracy), ("reduction", r.reduction)):
            ref = published_value(metric, r.dataset, s)
            w.writerow([r.dataset, s.label, s.q_text, s.variant_text, metric, _num(value),
                        "" if ref is None else f"{ref:.2f}", "" if ref is None else _num(value - ref)])


def write_published(fh) -> None:
    """Dump every embedded reference table, one value per row, tagged ``published``."""
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(("source", "table", "dataset", "column", "value"))
    for key, table in published.TABLES.items():
        for dataset, row in table["rows"].items():
            for column, value in zip(table["columns"], row):
                w.writerow(["published", key, dataset, column, f"{value:.2f}"])
