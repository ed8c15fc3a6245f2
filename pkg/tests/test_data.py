import io
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from voteselect.data import (Dataset, distance_matrix, euclidean_distance, load_builtin, load_dataset,
                             make_folds, normalize_minmax, pca_project, write_projection)
from voteselect.errors import DatasetFormatError, DatasetParseError, DimensionError


def write(tmp_path, text, name="d.csv"):
    p = tmp_path / name
    p.write_text(text)
    return p


def test_load_small_file(tmp_path):
    ds = load_dataset(write(tmp_path, "0.0,A\n1.0,A\n3.0,B\n"))
    assert ds.n == 3 and ds.feature_count == 1
    assert ds.class_labels == ("A", "B")
    assert ds.features[:, 0].tolist() == [0.0, 1.0, 3.0]


def test_load_with_header_and_label_column(tmp_path):
    ds = load_dataset(write(tmp_path, "cls,x,y\nA,1,2\nB,3,4\n"), label_column=0)
    assert ds.labels == ("A", "B")
    assert ds.features.tolist() == [[1.0, 2.0], [3.0, 4.0]]


def test_parse_error_names_row_and_column(tmp_path):
    with pytest.raises(DatasetParseError) as info:
        load_dataset(write(tmp_path, "1.0,x,A\n"))
    assert (info.value.row, info.value.column) == (1, 2)
    assert "row 1, column 2" in str(info.value)


def test_ragged_and_empty_files(tmp_path):
    with pytest.raises(DatasetFormatError):
        load_dataset(write(tmp_path, "1,2,A\n1,B\n"))
    with pytest.raises(DatasetFormatError):
        load_dataset(write(tmp_path, "\n\n", "empty.csv"))


def test_non_finite_cell_rejected(tmp_path):
    with pytest.raises(DatasetParseError):
        load_dataset(write(tmp_path, "1,A\nnan,B\n"))


@pytest.mark.parametrize("name,n,m,k", [("iris", 150, 4, 3), ("wine", 178, 13, 3), ("glass", 214, 9, 6),
                                         ("ecoli", 336, 7, 8), ("heart-statlog", 270, 13, 2)])
def test_builtin_shapes(name, n, m, k):
    ds = load_builtin(name)
    assert (ds.n, ds.feature_count, len(ds.class_labels)) == (n, m, k)


def test_unknown_builtin():
    with pytest.raises(KeyError):
        load_builtin("nope")


def test_euclidean_examples():
    assert euclidean_distance((0, 0), (0, 0)) == 0
    assert euclidean_distance((0, 0), (3, 4)) == 5
    assert euclidean_distance((1, 1, 1), (2, 2, 2)) == pytest.approx(math.sqrt(3))
    with pytest.raises(DimensionError):
        euclidean_distance((1, 2), (1, 2, 3))


def test_distance_matrix_examples():
    dm = distance_matrix(Dataset([[0.0], [1.0], [3.0]], ["A", "A", "B"]))
    assert (dm[0, 1], dm[0, 2], dm[1, 2]) == (1, 3, 2)
    assert distance_matrix(Dataset([[2.0]], ["A"])).tolist() == [[0.0]]
    assert distance_matrix(Dataset([[1.0, 2.0], [1.0, 2.0]], ["A", "B"]))[0, 1] == 0


points = st.lists(st.tuples(st.integers(-20, 20), st.integers(-20, 20)), min_size=1, max_size=30)


@given(points)
@settings(max_examples=60, deadline=None)
def test_distance_matrix_is_a_metric(pts):
    dm = distance_matrix(Dataset(pts, ["A"] * len(pts)))
    n = len(pts)
    assert np.array_equal(dm, dm.T)
    assert np.all(np.diag(dm) == 0)
    for i in range(n):
        for j in range(n):
            assert dm[i, j] == euclidean_distance(pts[i], pts[j])
            for k in range(n):
                assert dm[i, k] <= dm[i, j] + dm[j, k] + 1e-9


def test_fold_examples():
    f = make_folds(10, 10, 42)
    assert sorted(len(f.fold(i)) for i in range(10)) == [1] * 10
    f = make_folds(150, 10, 42)
    assert [len(f.fold(i)) for i in range(10)] == [15] * 10
    assert make_folds(150, 10, 42) == f
    with pytest.raises(ValueError):
        make_folds(5, 6, 1)


@given(st.integers(1, 200), st.integers(1, 20), st.integers(0, 10**6))
@settings(max_examples=80, deadline=None)
def test_folds_partition(n, k, seed):
    k = min(k, n)
    f = make_folds(n, k, seed)
    sizes = [len(f.fold(i)) for i in range(k)]
    assert sum(sizes) == n and max(sizes) - min(sizes) <= 1
    seen = sorted(i for _, test in f.folds() for i in test)
    assert seen == list(range(n))
    for train, test in f.folds():
        assert not set(train) & set(test) and len(train) + len(test) == n


def test_normalize_examples():
    ds = Dataset([[0, 7, 0.5], [5, 7, 0.0], [10, 7, 1.0]], ["A", "B", "A"])
    out = normalize_minmax(ds)
    assert out.features[:, 0].tolist() == [0, 0.5, 1]
    assert out.features[:, 1].tolist() == [0, 0, 0]
    assert out.features[:, 2].tolist() == [0.5, 0.0, 1.0]


@given(st.lists(st.tuples(st.floats(-100, 100), st.floats(-100, 100)), min_size=1, max_size=20))
@settings(max_examples=60, deadline=None)
def test_normalize_idempotent(pts):
    once = normalize_minmax(Dataset(pts, ["A"] * len(pts)))
    twice = normalize_minmax(once)
    assert np.allclose(once.features, twice.features, atol=1e-12)


def test_pca_collinear_and_axis_aligned():
    ds = Dataset([[t, t] for t in range(6)], ["A"] * 6)
    rows = pca_project(ds)
    assert all(abs(c[1]) <= 1e-9 for _, c, _ in rows)
    ds = Dataset([[-3, 0.1], [0, -0.1], [3, 0.0], [1, 0.2]], list("ABAB"))
    _, coords, _ = zip(*pca_project(ds))
    xs = np.array(ds.features[:, 0]) - ds.features[:, 0].mean()
    assert np.allclose([c[0] for c in coords], xs, atol=0.05)
    with pytest.raises(ValueError):
        pca_project(ds, 3)


def test_pca_iris_layout():
    rows = pca_project(load_builtin("iris"))
    assert len(rows) == 150 and rows[0][0] == 0 and rows[0][2] == "setosa"
    pc1 = {lab: np.mean([c[0] for _, c, l in rows if l == lab]) for lab in ("setosa", "versicolor", "virginica")}
    # setosa sits apart from the other two classes along the first axis
    assert pc1["setosa"] < pc1["versicolor"] < pc1["virginica"]
    buf = io.StringIO()
    write_projection(rows[:2], buf)
    assert buf.getvalue().splitlines()[0] == "index,pc1,pc2,label"


@given(st.lists(st.tuples(*[st.integers(-9, 9)] * 3), min_size=4, max_size=25))
@settings(max_examples=40, deadline=None)
def test_pca_preserves_variance(pts):
    ds = Dataset(pts, ["A"] * len(pts))
    total = np.var(ds.features, axis=0, ddof=1).sum()
    full = np.array([c for _, c, _ in pca_project(ds, 3)])
    two = np.array([c for _, c, _ in pca_project(ds, 2)])
    assert np.var(full, axis=0, ddof=1).sum() == pytest.approx(total, rel=1e-9, abs=1e-9)
    assert np.var(two, axis=0, ddof=1).sum() <= total * (1 + 1e-9) + 1e-9
