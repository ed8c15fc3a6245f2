"""Slow, literal re-implementations used as test oracles.

Nothing here imports the package under test. Distances are compared as exact
squared distances (``Fraction`` of the float inputs), voting quantities are
recomputed from scratch every iteration, and axioms are checked by
enumerating voter subsets straight from their definitions.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction


def sqdist(a, b) -> Fraction:
    return sum((Fraction(x) - Fraction(y)) ** 2 for x, y in zip(a, b))


def local_sets(points, labels):
    """(nearest enemy index, local set) per instance, by double loop."""
    n = len(points)
    out = []
    for i in range(n):
        enemy = None
        for j in range(n):
            if labels[j] != labels[i] and (enemy is None or sqdist(points[i], points[j]) < sqdist(points[i], points[enemy])):
                enemy = j
        radius = sqdist(points[i], points[enemy])
        out.append((enemy, frozenset(j for j in range(n) if sqdist(points[i], points[j]) < radius)))
    return out


def plausibility(c, W, ballots, q, cap=None):
    """Largest l with a voter group N* (enumerated explicitly) meeting the definition."""
    q = Fraction(q)
    approvers = [i for i, b in enumerate(ballots) if c in b]
    best = 0
    ell = 1
    while len(approvers) * q >= ell:
        bound = ell if cap is None else min(ell, cap)
        for size in range(len(approvers), 0, -1):
            if size * q < ell:
                break
            if any(all(len(set(ballots[v]) & set(W)) < bound for v in group)
                   for group in itertools.combinations(approvers, size)):
                best = ell
                break
        ell += 1
    return best


def _most_approved(ballots, m):
    counts = [sum(c in b for b in ballots) for c in range(m)]
    return counts.index(max(counts))


def sejr(ballots, q, m, cap=None):
    """Winners and the plausibility of each pick."""
    W, trace = [], []
    while True:
        scores = [(plausibility(c, W, ballots, q, cap), -c) for c in range(m) if c not in W]
        if not scores:
            break
        pl, negc = max(scores)
        if pl == 0:
            break
        W.append(-negc)
        trace.append(pl)
    if not W:
        return [_most_approved(ballots, m)], [0]
    return W, trace


def es_payment(budgets, price):
    """Smallest x with sum(min(x, b)) == price, trying every number of capped voters."""
    options = []
    budgets = sorted(budgets)
    for capped in range(len(budgets)):
        x = (price - sum(budgets[:capped], Fraction(0))) / (len(budgets) - capped)
        if sum((min(x, b) for b in budgets), Fraction(0)) == price:
            options.append(x)
    return min(options) if options else None


def equal_shares(ballots, q, m):
    """Winners, payments and budget snapshots."""
    price = 1 / Fraction(q)
    rho = [Fraction(1)] * len(ballots)
    W, gammas, snaps = [], [], []
    while True:
        best = None
        for c in range(m):
            if c in W:
                continue
            backers = [v for v, b in enumerate(ballots) if c in b]
            if not backers or sum((rho[v] for v in backers), Fraction(0)) < price:
                continue
            g = es_payment([rho[v] for v in backers], price)
            if best is None or g < best[0]:
                best = (g, c)
        if best is None:
            break
        g, c = best
        for v, b in enumerate(ballots):
            if c in b:
                rho[v] -= min(g, rho[v])
        W.append(c)
        gammas.append(g)
        snaps.append(tuple(rho))
    if not W:
        return [_most_approved(ballots, m)], [], []
    return W, gammas, snaps


def seqphragmen(ballots, m, t, adapted=False):
    """Winners and the load value of each pick; None if the target is unreachable."""
    x = [Fraction(0)] * len(ballots)
    W, loads = [], []
    while len(W) < t:
        best = None
        for c in range(m):
            backers = [v for v, b in enumerate(ballots) if c in b]
            if c in W or not backers:
                continue
            s = (1 + sum(x[v] for v in backers)) / len(backers)
            if best is None or s < best[0]:
                best = (s, c)
        if best is None:
            if adapted:
                break
            return None, None
        s, c = best
        for v, b in enumerate(ballots):
            if c in b:
                x[v] = s
        W.append(c)
        loads.append(s)
    return W, loads


def _groups(n):
    for size in range(1, n + 1):
        yield from itertools.combinations(range(n), size)


def ejr_violations(W, ballots, q, m):
    """All (l, group) pairs breaking l-EJR, by enumerating every voter subset."""
    q = Fraction(q)
    W = set(W)
    found = []
    for group in _groups(len(ballots)):
        common = set.intersection(*(set(ballots[v]) for v in group))
        for ell in range(1, m + 1):
            if len(group) * q >= ell and len(common) >= ell and all(len(W & set(ballots[v])) < ell for v in group):
                found.append((ell, group))
    return found


def pjr_violations(W, ballots, q, m):
    q = Fraction(q)
    W = set(W)
    found = []
    for group in _groups(len(ballots)):
        common = set.intersection(*(set(ballots[v]) for v in group))
        union = set().union(*(set(ballots[v]) for v in group))
        for ell in range(1, m + 1):
            if len(group) * q >= ell and len(common) >= ell and len(W & union) < ell:
                found.append((ell, group))
    return found


def knn(points, labels, query, K):
    """Majority among the K closest (ties by index); label ties go to the nearer neighbour."""
    order = sorted(range(len(points)), key=lambda j: (sqdist(points[j], query), j))[:K]
    counts = Counter(labels[j] for j in order)
    top = max(counts.values())
    return next(labels[j] for j in order if counts[labels[j]] == top)


def enn(points, labels, K):
    keep = []
    for i in range(len(points)):
        others = [j for j in range(len(points)) if j != i]
        guess = knn([points[j] for j in others], [labels[j] for j in others], points[i], K)
        if guess == labels[i]:
            keep.append(i)
    return keep or list(range(len(points)))


def lssm(points, labels):
    table = local_sets(points, labels)
    keep = []
    for i in range(len(points)):
        useful = sum(i in ls for _, ls in table)
        harmful = sum(enemy == i for enemy, _ in table)
        if harmful <= useful:
            keep.append(i)
    return keep or list(range(len(points)))


def lsbo(points, labels):
    first = lssm(points, labels)
    if len({labels[i] for i in first}) < 2:
        return first
    sub_points = [points[i] for i in first]
    sub_labels = [labels[i] for i in first]
    table = local_sets(sub_points, sub_labels)
    chosen = []
    for i in sorted(range(len(first)), key=lambda i: (len(table[i][1]), i)):
        if not any(j in chosen for j in table[i][1] if j != i):
            chosen.append(i)
    return sorted(first[i] for i in chosen)


def icf(points, labels, K=3):
    current = enn(points, labels, K)
    while len({labels[i] for i in current}) >= 2:
        table = local_sets([points[i] for i in current], [labels[i] for i in current])
        survivors = [current[a] for a in range(len(current))
                     if len(table[a][1]) <= sum(a in ls for _, ls in table)]
        if len(survivors) == len(current) or not survivors:
            break
        current = survivors
    return current


def cnn(points, labels):
    store = [0]
    changed = True
    while changed:
        changed = False
        for i in range(len(points)):
            if i in store:
                continue
            ordered = sorted(store)  # distance ties go to the lower original index
            if knn([points[j] for j in ordered], [labels[j] for j in ordered], points[i], 1) != labels[i]:
                store.append(i)
                changed = True
    return sorted(store)
