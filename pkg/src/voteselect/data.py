"""Datasets, Euclidean distances, cross-validation folds and PCA projection.

Features are stored as a read-only ``float64`` matrix; exact arithmetic is
reserved for the voting layer.
"""

from __future__ import annotations

import csv
import math
import os
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterator, Sequence

import numpy as np

from .errors import DatasetFormatError, DatasetParseError, DimensionError

BUILTIN_DATASETS = ("iris", "wine", "glass", "ecoli", "heart-statlog")


@dataclass(frozen=True)
class Instance:
    index: int
    features: tuple
    label: str


@dataclass(frozen=True, eq=False)
class Dataset:
    """An ordered collection of labelled numeric instances.

    Instance ``i`` is row ``i`` of :attr:`features`. Positions define the
    global tie-breaking order used everywhere (lower index wins).
    ``origin`` maps each row back to the dataset it was cut from, so
    that subsets built for cross-validation keep their original indices.
    """

    features: np.ndarray
    labels: tuple
    name: str = ""
    origin: tuple = field(default=())

    def __post_init__(self):
        X = np.array(self.features, dtype=np.float64, copy=True)
        if X.ndim == 1:
            X = X.reshape(-1, 1) if len(self.labels) else X.reshape(0, 0)
        if X.ndim != 2 or X.shape[0] != len(self.labels):
            raise DimensionError(
                f"feature matrix shape {X.shape} does not match {len(self.labels)} labels"
            )
        if not np.all(np.isfinite(X)):
            raise DatasetFormatError("all features must be finite")
        X.setflags(write=False)
        object.__setattr__(self, "features", X)
        object.__setattr__(self, "labels", tuple(str(c) for c in self.labels))
        origin = tuple(int(i) for i in self.origin) if self.origin else tuple(range(len(self.labels)))
        if len(origin) != len(self.labels):
            raise DimensionError("origin must have one entry per instance")
        object.__setattr__(self, "origin", origin)

    def __len__(self):
        return len(self.labels)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def feature_count(self) -> int:
        return self.features.shape[1]

    @property
    def class_labels(self) -> tuple:
        """Distinct labels in order of first appearance."""
        return tuple(dict.fromkeys(self.labels))

    @property
    def instances(self) -> list[Instance]:
        return [Instance(i, tuple(self.features[i]), self.labels[i]) for i in range(self.n)]

    def label_array(self) -> np.ndarray:
        return np.array(self.labels, dtype=object)

    def subset(self, indices: Sequence[int]) -> "Dataset":
        """Dataset restricted to ``indices`` (kept in the given order), re-indexed from 0."""
        idx = [int(i) for i in indices]
        return Dataset(
            self.features[idx] if idx else np.zeros((0, self.feature_count)),
            [self.labels[i] for i in idx],
            name=self.name,
            origin=[self.origin[i] for i in idx],
        )


def _parse_float(cell):
    try:
        value = float(cell)
    except ValueError:
        return None
    return value if math.isfinite(value) else None


def load_dataset(path, header: bool | None = None, label_column: int = -1, name: str | None = None) -> Dataset:
    """Read a comma-separated file with one instance per row.

    Parameters
    ----------
    path : str or path-like
    header : bool or None
        ``True``/``False`` force the first row to be treated as a header or
        as data. ``None`` treats it as a header only if none of its feature
        cells is numeric.
    label_column : int
        Position of the class label column (negative values count from the end).
    """
    with open(path, newline="") as fh:
        rows = [(lineno, row) for lineno, row in enumerate(csv.reader(fh), start=1)
                if row and any(cell.strip() for cell in row)]
    if not rows:
        raise DatasetFormatError(f"{path}: empty file")

    width = len(rows[0][1])
    if width < 2:
        raise DatasetFormatError(f"{path}: need at least one feature column and a label column")
    label_pos = label_column % width if -width <= label_column < width else None
    if label_pos is None:
        raise DatasetFormatError(f"{path}: label column {label_column} out of range for {width} columns")

    if header is None:
        first = [c for j, c in enumerate(rows[0][1]) if j != label_pos]
        header = all(_parse_float(c.strip()) is None for c in first)
    if header:
        rows = rows[1:]
        if not rows:
            raise DatasetFormatError(f"{path}: header but no data rows")

    features, labels = [], []
    for lineno, row in rows:
        if len(row) != width:
            raise DatasetFormatError(f"{path}: row {lineno} has {len(row)} columns, expected {width}")
        values = []
        for j, cell in enumerate(row):
            if j == label_pos:
                continue
            value = _parse_float(cell.strip())
            if value is None:
                raise DatasetParseError(lineno, j + 1, cell)
            values.append(value)
        features.append(values)
        labels.append(row[label_pos].strip())

    if name is None:
        name = os.path.splitext(os.path.basename(os.fspath(path)))[0]
    return Dataset(np.array(features, dtype=np.float64), labels, name=name)


def load_builtin(name: str) -> Dataset:
    """Load one of the bundled UCI datasets (see ``BUILTIN_DATASETS``)."""
    if name not in BUILTIN_DATASETS:
        raise KeyError(f"unknown builtin dataset {name!r}; choose from {', '.join(BUILTIN_DATASETS)}")
    ref = resources.files("voteselect") / "datasets" / f"{name}.csv"
    with resources.as_file(ref) as path:
        return load_dataset(path, header=True, name=name)


def resolve_dataset(spec: str, header: bool | None = None, label_column: int = -1) -> Dataset:
    """Load ``spec`` as a file path if it exists, otherwise as a builtin dataset name."""
    if os.path.exists(spec):
        return load_dataset(spec, header=header, label_column=label_column)
    return load_builtin(spec)


def euclidean_distance(a, b) -> float:
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise DimensionError(f"cannot compare vectors of shapes {a.shape} and {b.shape}")
    return float(np.sqrt(np.sum((a - b) ** 2)))


def distances_to(X: np.ndarray, query) -> np.ndarray:
    """Distances from every row of ``X`` to ``query``, same formula as :func:`euclidean_distance`."""
    query = np.asarray(query, dtype=np.float64)
    if query.shape != (X.shape[1],):
        raise DimensionError(f"query has shape {query.shape}, expected ({X.shape[1]},)")
    return np.sqrt(np.sum((X - query) ** 2, axis=1))


def distance_matrix(ds: Dataset) -> np.ndarray:
    """Symmetric matrix of pairwise Euclidean distances (zero diagonal, read-only).

    Row ``i`` is computed exactly as ``euclidean_distance(x_i, x_j)`` would, and
    ``(a - b)**2 == (b - a)**2`` bitwise, so the result is exactly symmetric.
    """
    X = ds.features
    D = np.empty((ds.n, ds.n), dtype=np.float64)
    for i in range(ds.n):
        D[i] = distances_to(X, X[i])
    D.setflags(write=False)
    return D


@dataclass(frozen=True)
class FoldAssignment:
    k: int
    fold_of: tuple
    seed: int

    def fold(self, f: int) -> list[int]:
        return [i for i, g in enumerate(self.fold_of) if g == f]

    def folds(self) -> Iterator[tuple[list[int], list[int]]]:
        """Yield ``(train_indices, test_indices)`` per fold, both in index order."""
        for f in range(self.k):
            test = self.fold(f)
            train = [i for i, g in enumerate(self.fold_of) if g != f]
            yield train, test


def make_folds(ds: Dataset | int, k: int, seed: int) -> FoldAssignment:
    """Seeded shuffle of the indices followed by a split into ``k`` contiguous blocks."""
    n = ds if isinstance(ds, int) else ds.n
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    perm = np.random.default_rng(seed).permutation(n)
    fold_of = [0] * n
    for f, block in enumerate(np.array_split(perm, k)):
        for i in block:
            fold_of[int(i)] = f
    return FoldAssignment(k, tuple(fold_of), seed)


def normalize_minmax(ds: Dataset) -> Dataset:
    """Rescale every feature to [0, 1]; constant features become 0."""
    X = ds.features
    lo = X.min(axis=0)
    span = X.max(axis=0) - lo
    safe = np.where(span > 0, span, 1.0)
    Y = np.where(span > 0, (X - lo) / safe, 0.0)
    return Dataset(Y, ds.labels, name=ds.name, origin=ds.origin)


def pca_components(X: np.ndarray, dims: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Mean, top-``dims`` principal axes (as columns) and their eigenvalues."""
    mean = X.mean(axis=0)
    cov = np.atleast_2d(np.cov(X - mean, rowvar=False))
    values, vectors = np.linalg.eigh(cov)
    order = np.argsort(-values, kind="stable")[:dims]
    vectors = vectors[:, order]
    for j in range(vectors.shape[1]):
        # deterministic sign: largest-magnitude loading positive
        if vectors[np.argmax(np.abs(vectors[:, j])), j] < 0:
            vectors[:, j] = -vectors[:, j]
    return mean, vectors, values[order]


def pca_project(ds: Dataset, dims: int = 2) -> list[tuple[int, tuple, str]]:
    """Project instances onto the leading principal components.

    Returns ``(index, coordinates, label)`` triples in instance order.
    """
    if dims < 1 or dims > ds.feature_count:
        raise ValueError(f"dims must be in 1..{ds.feature_count}, got {dims}")
    if ds.n < 2:
        raise ValueError("PCA needs at least two instances")
    mean, axes, _ = pca_components(ds.features, dims)
    Z = (ds.features - mean) @ axes
    return [(ds.origin[i], tuple(float(v) for v in Z[i]), ds.labels[i]) for i in range(ds.n)]


def write_projection(rows, fh) -> None:
    """Write ``index,pc1,pc2,...,label`` rows with a header."""
    rows = list(rows)
    dims = len(rows[0][1]) if rows else 2
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["index"] + [f"pc{j + 1}" for j in range(dims)] + ["label"])
    for index, coords, label in rows:
        writer.writerow([index] + [repr(float(c)) for c in coords] + [label])
