import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

import oracles
from strategies import datasets
from voteselect.baselines import (BASELINE_IDS, run_baseline, select_cnn, select_enn, select_icf, select_lsbo,
                                  select_lssm, select_noapproved, select_random)
from voteselect.classify import KnnModel, knn_predict
from voteselect.data import Dataset, distance_matrix

LINE = Dataset([[0.0], [1.0], [3.0]], ["A", "A", "B"])
# two square clusters joined by a diagonal; instance 10 is an A sitting between them
TC_POINTS = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 2), (5, 5), (6, 5), (5, 6), (6, 6), (4, 4), (3, 3)]
TC = Dataset(TC_POINTS, list("AAAAABBBBBA"))


def test_noapproved_example():
    assert select_noapproved(LINE).kept == (0, 1)


def test_lssm_and_lsbo_examples():
    assert select_lssm(LINE).kept == (0, 1)
    # LSSm leaves one class, so LSBo returns that set as is
    assert select_lsbo(LINE).kept == (0, 1)


def test_enn_example():
    ds = Dataset([[0.0], [1.0], [2.0], [1.1]], ["A", "A", "A", "B"])
    assert select_enn(ds, 3).kept == (0, 1, 2)
    with pytest.raises(ValueError):
        select_enn(LINE, 3)


def test_random_examples():
    assert select_random(LINE, 1.0).kept == (0, 1, 2)
    big = Dataset([[float(i)] for i in range(150)], ["A"] * 150)
    assert len(select_random(big, 0.9).kept) == 135
    assert select_random(big, 0.9, seed=7) == select_random(big, 0.9, seed=7)
    assert len(select_random(LINE, 0.01).kept) == 1
    with pytest.raises(ValueError):
        select_random(LINE, 0)


def test_empty_guard():
    # every instance is somebody's nearest enemy and nobody's neighbour
    ds = Dataset([[0.0], [1.0]], ["A", "B"])
    result = select_noapproved(ds)
    assert result.emptied and result.kept == (0, 1)


@pytest.mark.parametrize("method,expected", [
    ("enn", tuple(range(11))),
    ("lssm", (0, 1, 2, 3, 4, 5, 6, 7, 8, 10)),
    ("lsbo", (5, 10)),
    ("icf", (9, 10)),
    ("cnn", (0, 5, 10)),
])
def test_two_cluster_fixture(method, expected):
    assert run_baseline(method, TC).kept == expected


def test_icf_records_passes_and_unknown_method():
    assert select_icf(TC).passes[-1] == 0 or len(select_icf(TC).kept) < 2
    with pytest.raises(ValueError):
        run_baseline("drop3", TC)
    assert set(BASELINE_IDS) >= {"cnn", "enn", "icf", "lsbo", "lssm"}


def _pts(ds):
    return [tuple(int(v) for v in row) for row in ds.features]


@given(datasets(min_n=5, max_n=30))
@settings(max_examples=80, deadline=None)
def test_selectors_match_oracles(ds):
    pts, labels = _pts(ds), list(ds.labels)
    assert list(select_enn(ds, 3).kept) == oracles.enn(pts, labels, 3)
    assert list(select_lssm(ds).kept) == oracles.lssm(pts, labels)
    assert list(select_lsbo(ds).kept) == oracles.lsbo(pts, labels)
    assert list(select_icf(ds, 3).kept) == oracles.icf(pts, labels, 3)
    assert list(select_cnn(ds).kept) == oracles.cnn(pts, labels)


@given(datasets(min_n=2, max_n=30))
@settings(max_examples=80, deadline=None)
def test_cnn_is_consistent_on_training_set(ds):
    seen = {}
    for row, label in zip(map(tuple, ds.features.tolist()), ds.labels):
        if seen.setdefault(row, label) != label:
            return  # identical points with different labels cannot both be right
    kept = select_cnn(ds).kept
    model = KnnModel(ds.subset(list(kept)), 1)
    assert all(knn_predict(model, ds.features[i]) == ds.labels[i] for i in range(ds.n))


@given(datasets(min_n=5, max_n=15, span=1000), st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_enn_and_lssm_ignore_input_order(ds, rnd):
    # tie-breaking by index is the only order-dependent step, so require distinct distances
    d = distance_matrix(ds)[np.triu_indices(ds.n, 1)]
    assume(len(set(d.tolist())) == d.size)
    perm = list(range(ds.n))
    rnd.shuffle(perm)
    shuffled = Dataset(ds.features[perm], [ds.labels[i] for i in perm])
    for select in (lambda d: select_enn(d, 1), select_lssm):
        before = {tuple(ds.features[i]) for i in select(ds).kept}
        after = {tuple(shuffled.features[i]) for i in select(shuffled).kept}
        assert before == after


@given(datasets(min_n=5, max_n=30), st.sampled_from(BASELINE_IDS))
@settings(max_examples=60, deadline=None)
def test_results_are_sorted_nonempty_subsets(ds, method):
    result = run_baseline(method, ds)
    assert result.kept and list(result.kept) == sorted(set(result.kept))
    assert all(0 <= i < ds.n for i in result.kept)
    assert 0 <= result.reduction(ds.n) < 1
