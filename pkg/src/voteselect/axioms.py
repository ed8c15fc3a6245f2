"""Brute-force proportionality oracles and the Equal Shares safety checker.

A group of voters is l-cohesive when it holds at least l * n / t voters who
jointly approve at least l candidates. A committee W violates l-EJR if some
l-cohesive group has every member approving fewer than l winners, and violates
l-PJR if the group's ballots together cover fewer than l winners.

Both checks enumerate l-subsets T of candidates instead of voter subsets: an
l-cohesive group exists inside the voters approving all of T, and the largest
violating group for a given T can be read off directly.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import EnumerationLimitError
from .localset import Election
from .voting import RuleTrace, _max_plausibility

DEFAULT_MAX_ENUM = 10**7
ENV_MAX_ENUM = "VOTESELECT_MAX_ENUM"


def max_enumeration() -> int:
    """Enumeration bound, overridable through ``VOTESELECT_MAX_ENUM``."""
    raw = os.environ.get(ENV_MAX_ENUM)
    if raw is None or not raw.strip():
        return DEFAULT_MAX_ENUM
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_MAX_ENUM} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{ENV_MAX_ENUM} must be positive, got {value}")
    return value


def _guard(count: int) -> None:
    bound = max_enumeration()
    if count > bound:
        raise EnumerationLimitError(count, bound)


def _large_enough(size: int, ell: int, q: Fraction) -> bool:
    # size >= ell * n / t  <=>  size * q >= ell
    return size * q.numerator >= ell * q.denominator


def is_l_cohesive(voters, ell: int, e: Election) -> bool:
    voters = sorted(set(voters))
    if ell < 1:
        raise ValueError(f"l must be >= 1, got {ell}")
    if not voters:
        return False
    if not _large_enough(len(voters), ell, e.q):
        return False
    common = set(e.ballots[voters[0]])
    for v in voters[1:]:
        common.intersection_update(e.ballots[v])
    return len(common) >= ell


@dataclass(frozen=True)
class AxiomViolation:
    """A cohesive group witnessing a failed l-EJR or l-PJR check.

    ``detail`` holds, for EJR, each witness voter's number of approved
    winners and, for PJR, the number of winners covered by the union of the
    witnesses' ballots.
    """

    axiom: str
    ell: int
    voters: tuple
    candidates: tuple
    detail: tuple | int

    def recheck(self, W, e: Election) -> bool:
        """True iff the stored witness really violates the axiom for ``W`` in ``e``."""
        W = set(W)
        if not is_l_cohesive(self.voters, self.ell, e):
            return False
        if not set(self.candidates) <= set.intersection(*(set(e.ballots[v]) for v in self.voters)):
            return False
        if self.axiom == "ejr":
            counts = tuple(len(W.intersection(e.ballots[v])) for v in self.voters)
            return counts == tuple(self.detail) and all(x < self.ell for x in counts)
        covered = len(W & set().union(*(e.ballots[v] for v in self.voters)))
        return covered == self.detail and covered < self.ell

    def to_text(self) -> str:
        head = f"{self.axiom.upper()} violation at l={self.ell}: voters {list(self.voters)} " \
               f"jointly approve {list(self.candidates)}"
        if self.axiom == "ejr":
            per = ", ".join(f"{v}:{k}" for v, k in zip(self.voters, self.detail))
            return f"{head}; approved winners per voter {per}"
        return f"{head}; winners covered by their ballots: {self.detail}"


def _candidate_pool(e: Election, eligible, ell: int) -> list[int]:
    """Candidates approved by enough eligible voters to anchor a violation."""
    counts = [0] * e.num_candidates
    for v in eligible:
        for c in e.ballots[v]:
            counts[c] += 1
    return [c for c in range(e.num_candidates) if _large_enough(counts[c], ell, e.q)]


def check_l_ejr(W, e: Election, ell: int) -> AxiomViolation | None:
    if ell < 1:
        raise ValueError(f"l must be >= 1, got {ell}")
    W = set(W)
    if not _large_enough(e.n, ell, e.q):
        return None
    sat = [len(W.intersection(b)) for b in e.ballots]
    eligible = [v for v in range(e.n) if sat[v] < ell]
    pool = _candidate_pool(e, eligible, ell)
    if len(pool) < ell:
        return None
    _guard(math.comb(len(pool), ell))
    ballots = [set(b) for b in e.ballots]
    for T in itertools.combinations(pool, ell):
        group = [v for v in eligible if ballots[v].issuperset(T)]
        if _large_enough(len(group), ell, e.q):
            return AxiomViolation("ejr", ell, tuple(group), T, tuple(sat[v] for v in group))
    return None


def check_l_pjr(W, e: Election, ell: int) -> AxiomViolation | None:
    """For every l-subset T and every set U of at most l-1 winners, the voters
    approving T whose approved winners all lie in U form a candidate group."""
    if ell < 1:
        raise ValueError(f"l must be >= 1, got {ell}")
    W = set(W)
    if not _large_enough(e.n, ell, e.q):
        return None
    ballots = [set(b) for b in e.ballots]
    # a violating voter approves fewer than l winners on its own
    eligible = [v for v in range(e.n) if len(W & ballots[v]) < ell]
    pool = _candidate_pool(e, eligible, ell)
    if len(pool) < ell:
        return None
    _guard(math.comb(len(pool), ell) * math.comb(len(W), min(ell - 1, len(W))))
    for T in itertools.combinations(pool, ell):
        support = [v for v in eligible if ballots[v].issuperset(T)]
        if not _large_enough(len(support), ell, e.q):
            continue
        reach = sorted(W & set().union(*(ballots[v] for v in support)))
        if len(reach) < ell:
            return AxiomViolation("pjr", ell, tuple(support), T, len(reach))
        for U in itertools.combinations(reach, ell - 1):
            U = set(U)
            group = [v for v in support if (W & ballots[v]) <= U]
            if _large_enough(len(group), ell, e.q):
                covered = len(W.intersection(set().union(*(ballots[v] for v in group))))
                return AxiomViolation("pjr", ell, tuple(group), T, covered)
    return None


def _levels(e: Election, max_ell: int | None):
    top = e.n * e.q.numerator // e.q.denominator
    top = min(top, e.num_candidates)
    if max_ell is not None:
        top = min(top, max_ell)
    return range(1, top + 1)


def check_ejr(W, e: Election, max_ell: int | None = None) -> AxiomViolation | None:
    """First l-EJR violation over l = 1..floor(q*n) (optionally capped at ``max_ell``)."""
    for ell in _levels(e, max_ell):
        found = check_l_ejr(W, e, ell)
        if found is not None:
            return found
    return None


def check_pjr(W, e: Election, max_ell: int | None = None) -> AxiomViolation | None:
    for ell in _levels(e, max_ell):
        found = check_l_pjr(W, e, ell)
        if found is not None:
            return found
    return None


def _all_plausibilities(W: set, e: Election, approvers) -> list[int]:
    """pl(c, W) for every candidate (0 for members of W)."""
    sat = [len(W.intersection(b)) for b in e.ballots]
    return [0 if c in W else _max_plausibility((sat[v] for v in approvers[c]), e.q, None)
            for c in range(e.num_candidates)]


def entitlement(i: int, W, e: Election) -> int:
    """Largest plausibility among the candidates voter ``i`` approves outside ``W``."""
    W = set(W)
    pl = _all_plausibilities(W, e, e.approvers())
    return max((pl[c] for c in e.ballots[i] if c not in W), default=0)


def _entitlements(W: set, e: Election, approvers) -> list[int]:
    pl = _all_plausibilities(W, e, approvers)
    return [max((pl[c] for c in b if c not in W), default=0) for b in e.ballots]


def _reserve(i: int, W: set, e: Election, en: list[int]) -> Fraction:
    """g: the budget voter ``i`` must keep once the winners are ``W``."""
    have = len(W.intersection(e.ballots[i]))
    if en[i] > have:
        return 1 - Fraction(have, en[i])
    return Fraction(0)


@dataclass(frozen=True)
class IterationVerdict:
    iteration: int
    candidate: int
    safe: bool
    failed_condition: int | None = None
    detail: str = ""


@dataclass(frozen=True)
class SafetyReport:
    iterations: tuple
    terminal: tuple            # (candidate, "weak" | "risky" | "safe") for unelected candidates
    budget_failures: tuple = ()  # (iteration, voter) pairs breaking the retained-budget bound
    classifications: tuple = field(default=(), compare=False)

    @property
    def safe(self) -> bool:
        return all(v.safe for v in self.iterations)

    @property
    def all_weak(self) -> bool:
        return all(kind == "weak" for _, kind in self.terminal)

    @property
    def budget_bound_holds(self) -> bool:
        return not self.budget_failures

    def to_text(self) -> str:
        lines = []
        for v in self.iterations:
            status = "safe" if v.safe else f"NOT SAFE (condition {v.failed_condition}) {v.detail}".rstrip()
            lines.append(f"iteration {v.iteration}: elect {v.candidate}: {status}")
        lines.append("terminal: " + (", ".join(f"{c}={k}" for c, k in self.terminal) or "no candidates left"))
        for j, i in self.budget_failures:
            lines.append(f"retained-budget bound fails after iteration {j} for voter {i}")
        lines.append(f"overall: {'safe' if self.safe else 'not safe'}; "
                     f"all remaining weak: {'yes' if self.all_weak else 'no'}; "
                     f"retained-budget bound: {'holds' if self.budget_bound_holds else 'fails'}")
        return "\n".join(lines) + "\n"


def _classify(c: int, W: set, e: Election, approvers, budgets, price) -> str:
    """weak / risky / safe status of unelected ``c`` given current budgets."""
    en = _entitlements(W | {c}, e, approvers)
    total = sum((budgets[v] for v in approvers[c]), Fraction(0))
    if total < price:
        return "weak"
    reserve = sum((_reserve(v, W | {c}, e, en) for v in approvers[c]), Fraction(0))
    return "safe" if total >= price + reserve else "risky"


def check_safe_trace(trace: RuleTrace, e: Election, classify_each_step: bool = False) -> SafetyReport:
    """Check each Equal Shares iteration against the three safety conditions
    and the retained-budget bound ``rho_j(i) >= 1 - |A_i & W| / en(i, W)``."""
    if trace.rule != "es":
        raise ValueError(f"expected an Equal Shares trace, got rule {trace.rule!r}")
    records = [] if trace.fallback else list(trace.iterations)
    approvers = e.approvers()
    price = e.price
    budgets = [Fraction(1)] * e.n
    W: set = set()
    verdicts, budget_failures, per_step = [], [], []

    def budget_bound(j):
        en = _entitlements(W, e, approvers)
        for i in range(e.n):
            have = len(W.intersection(e.ballots[i]))
            if en[i] > have and budgets[i] < 1 - Fraction(have, en[i]):
                budget_failures.append((j, i))

    budget_bound(0)
    for j, rec in enumerate(records, start=1):
        c = rec.candidate
        if rec.budgets is None or len(rec.budgets) != e.n:
            raise ValueError(f"iteration {j}: budget snapshot does not match {e.n} voters")
        if not 0 <= c < e.num_candidates or c in W:
            raise ValueError(f"iteration {j}: candidate {c} is invalid or already elected")
        if classify_each_step:
            per_step.append(tuple((x, _classify(x, W, e, approvers, budgets, price))
                                  for x in range(e.num_candidates) if x not in W))
        after = [Fraction(b) for b in rec.budgets]
        backers = set(approvers[c])
        verdict = IterationVerdict(j, c, True)
        if sum(budgets, Fraction(0)) - sum(after, Fraction(0)) != price:
            verdict = IterationVerdict(j, c, False, 1, "total budget removed differs from n/t")
        else:
            en = _entitlements(W | {c}, e, approvers)
            for i in sorted(backers):
                g = _reserve(i, W | {c}, e, en)
                if after[i] < g:
                    verdict = IterationVerdict(j, c, False, 2, f"voter {i} keeps {after[i]} < {g}")
                    break
            else:
                for i in range(e.n):
                    if i not in backers and after[i] != budgets[i]:
                        verdict = IterationVerdict(j, c, False, 3, f"non-approver {i} paid")
                        break
        verdicts.append(verdict)
        budgets = after
        W.add(c)
        budget_bound(j)

    terminal = tuple((x, _classify(x, W, e, approvers, budgets, price))
                     for x in range(e.num_candidates) if x not in W)
    return SafetyReport(tuple(verdicts), terminal, tuple(budget_failures), tuple(per_step))


def random_election(rng: np.random.Generator, n: int, p: float, q, num_candidates: int | None = None) -> Election:
    """Each voter approves each candidate independently with probability ``p``."""
    m = n if num_candidates is None else num_candidates
    draws = rng.random((n, m)) < p
    ballots = tuple(tuple(int(c) for c in np.flatnonzero(row)) for row in draws)
    return Election(ballots, q, num_candidates=m)


CORPUS_QS = (Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(2))
CORPUS_PS = (0.2, 0.5)


def random_corpus(count: int = 1000, seed: int = 42, max_n: int = 10, qs=CORPUS_QS, ps=CORPUS_PS):
    """Seeded stream of small random elections with n in 1..max_n."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(1, max_n + 1))
        p = ps[int(rng.integers(len(ps)))]
        q = qs[int(rng.integers(len(qs)))]
        yield random_election(rng, n, p, q)
