"""Sequential approval-based multi-winner rules over exact rationals.

Four rules are provided:

* ``sejr``  -- Simple EJR: repeatedly elect the candidate of maximum
  plausibility until every remaining candidate has plausibility 0.
* ``s2ejr`` -- Simple 2-EJR: as SEJR, but a voter with two approved winners
  no longer counts towards any plausibility.
* ``es``    -- Equal Shares (Rule X) with unit initial budgets and seat price n/t.
* ``seqphragmen`` -- sequential Phragmen (load balancing), fixed target size.

SEJR, S2EJR and ES accept any positive ratio ``q = t/n`` (t may exceed the
number of candidates) and may return fewer than t winners. If they would
return nothing, the single most approved candidate is returned instead.
All ties are broken in favour of the lowest candidate index.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import ExhaustionError
from .localset import Election

RULE_IDS = ("sejr", "s2ejr", "es", "seqphragmen")
UTCS_RULES = ("sejr", "s2ejr", "es")
_ALIASES = {"seqp": "seqphragmen", "equal-shares": "es", "phragmen": "seqphragmen"}


def canonical_rule(rule_id: str) -> str:
    rule = _ALIASES.get(rule_id.lower(), rule_id.lower())
    if rule not in RULE_IDS:
        raise ValueError(f"unknown rule {rule_id!r}; choose from {', '.join(RULE_IDS)}")
    return rule


@dataclass(frozen=True)
class IterationRecord:
    candidate: int
    plausibility: int | None = None
    gamma: Fraction | None = None
    budgets: tuple | None = None
    load: Fraction | None = None
    loads: tuple | None = None
    fallback: bool = False

    def to_text(self) -> str:
        parts = [f"elect={self.candidate}"]
        if self.fallback:
            parts.append("fallback")
        if self.plausibility is not None:
            parts.append(f"pl={self.plausibility}")
        if self.gamma is not None:
            parts.append(f"gamma={self.gamma}")
        if self.budgets is not None:
            parts.append("rho=" + ",".join(str(b) for b in self.budgets))
        if self.load is not None:
            parts.append(f"s={self.load}")
        if self.loads is not None:
            parts.append("x=" + ",".join(str(x) for x in self.loads))
        return " ".join(parts)


@dataclass(frozen=True)
class RuleTrace:
    rule: str
    iterations: tuple = ()

    @property
    def fallback(self) -> bool:
        return any(r.fallback for r in self.iterations)

    def to_text(self) -> str:
        """One line per iteration."""
        return "".join(f"{self.rule} {j + 1}: {r.to_text()}\n" for j, r in enumerate(self.iterations))


@dataclass(frozen=True)
class Committee:
    members: tuple
    q: Fraction
    fallback: bool = False
    stopped_early: bool = False
    rule: str = ""

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, c):
        return c in self.members

    @property
    def flags(self) -> tuple:
        out = []
        if self.fallback:
            out.append("fallback")
        if self.stopped_early:
            out.append("adapted-stop")
        return tuple(out)


def _most_approved(approvers: list[list[int]]) -> int:
    best = 0
    for c in range(1, len(approvers)):
        if len(approvers[c]) > len(approvers[best]):
            best = c
    return best


def _max_plausibility(sats: Iterable[int], q: Fraction, cap: int | None) -> int:
    """Largest l such that at least l/q of the given approvers have fewer than
    min(l, cap) approved winners (0 if there is no such l >= 1)."""
    sats = list(sats)
    if not sats:
        return 0
    a, b = q.numerator, q.denominator
    top = len(sats) * a // b
    if top < 1:
        return 0
    # below[x] = number of approvers with fewer than x winners
    hist = [0] * (top + 2)
    for s in sats:
        if s <= top:
            hist[s] += 1
    below = [0] * (top + 2)
    for x in range(1, top + 2):
        below[x] = below[x - 1] + hist[x - 1]
    best = 0
    for ell in range(1, top + 1):
        bound = ell if cap is None else min(ell, cap)
        if below[bound] * a >= ell * b:
            best = ell
    return best


def plausibility(c: int, W, e: Election, cap: int | None = None) -> int:
    """pl(c, W): the largest l for which some group of voters approving ``c``,
    each with fewer than min(l, cap) approved members of ``W``, has size at
    least l * n / t."""
    W = set(W)
    if c in W:
        raise ValueError(f"candidate {c} is already in W")
    sats = (len(W.intersection(b)) for b in e.ballots if c in b)
    return _max_plausibility(sats, e.q, cap)


def _run_simple_ejr(e: Election, cap: int | None, rule: str) -> tuple[Committee, RuleTrace]:
    if e.num_candidates < 1:
        raise ValueError("election has no candidates")
    approvers = e.approvers()
    sat = [0] * e.n
    elected = [False] * e.num_candidates
    members, records = [], []

    def score(c):
        return _max_plausibility((sat[v] for v in approvers[c]), e.q, cap)

    pl = [score(c) for c in range(e.num_candidates)]
    while True:
        best, best_pl = -1, 0
        for c, value in enumerate(pl):
            if not elected[c] and value > best_pl:
                best, best_pl = c, value
        if best < 0:
            break
        elected[best] = True
        members.append(best)
        records.append(IterationRecord(best, plausibility=best_pl))
        dirty = set()
        for v in approvers[best]:
            sat[v] += 1
            dirty.update(e.ballots[v])
        for c in dirty:
            if not elected[c]:
                pl[c] = score(c)

    if not members:
        c = _most_approved(approvers)
        return (Committee((c,), e.q, fallback=True, rule=rule),
                RuleTrace(rule, (IterationRecord(c, plausibility=0, fallback=True),)))
    return Committee(tuple(members), e.q, rule=rule), RuleTrace(rule, tuple(records))


def run_sejr(e: Election) -> tuple[Committee, RuleTrace]:
    return _run_simple_ejr(e, None, "sejr")


def run_s2ejr(e: Election) -> tuple[Committee, RuleTrace]:
    return _run_simple_ejr(e, 2, "s2ejr")


def equal_share_payment(budgets: Iterable[Fraction], price: Fraction) -> Fraction | None:
    """Least x with sum(min(x, b) for b in budgets) == price, or None if the
    budgets cannot cover the price."""
    ordered = sorted(budgets)
    if sum(ordered, Fraction(0)) < price:
        return None
    paid = Fraction(0)
    remaining = len(ordered)
    for b in ordered:
        x = (price - paid) / remaining
        if x <= b:
            return x
        paid += b
        remaining -= 1
    raise AssertionError("unreachable: total budget covers the price")


def run_equal_shares(e: Election) -> tuple[Committee, RuleTrace]:
    """Equal Shares: each voter starts with budget 1; a seat costs n/t and is
    paid by its approvers as evenly as their budgets allow. The candidate with
    the smallest per-voter payment is elected until no candidate is affordable."""
    if e.num_candidates < 1:
        raise ValueError("election has no candidates")
    approvers = e.approvers()
    price = e.price
    budget = [Fraction(1)] * e.n
    elected = [False] * e.num_candidates
    members, records = [], []

    def payment(c):
        return equal_share_payment((budget[v] for v in approvers[c]), price) if approvers[c] else None

    gamma = [payment(c) for c in range(e.num_candidates)]
    while True:
        best = -1
        for c, g in enumerate(gamma):
            if g is not None and not elected[c] and (best < 0 or g < gamma[best]):
                best = c
        if best < 0:
            break
        g = gamma[best]
        elected[best] = True
        members.append(best)
        dirty = set()
        for v in approvers[best]:
            pay = min(g, budget[v])
            if pay:
                budget[v] -= pay
                dirty.update(e.ballots[v])
        records.append(IterationRecord(best, gamma=g, budgets=tuple(budget)))
        for c in dirty:
            if not elected[c]:
                gamma[c] = payment(c)

    if not members:
        c = _most_approved(approvers)
        return (Committee((c,), e.q, fallback=True, rule="es"),
                RuleTrace("es", (IterationRecord(c, budgets=tuple(budget), fallback=True),)))
    return Committee(tuple(members), e.q, rule="es"), RuleTrace("es", tuple(records))


def run_seqphragmen(e: Election, adapted_stop: bool = False) -> tuple[Committee, RuleTrace]:
    """Sequential Phragmen with target size ``e.t_int``.

    Electing ``c`` spreads one unit of load so that all approvers of ``c`` end
    up with the same load ``s_c = (1 + sum of their loads) / |N_c|``; the
    candidate with the smallest ``s_c`` wins. Candidates nobody approves are
    never eligible. With ``adapted_stop`` the rule stops once every remaining
    candidate is unapproved; otherwise running out raises ``ExhaustionError``.
    """
    t = e.t_int
    if not 1 <= t <= e.num_candidates:
        raise ValueError(f"target size must be in 1..{e.num_candidates}, got {t}")
    approvers = e.approvers()
    load = [Fraction(0)] * e.n
    load_sum = [Fraction(0)] * e.num_candidates
    elected = [False] * e.num_candidates
    members, records = [], []

    def new_load(c):
        return (1 + load_sum[c]) / len(approvers[c]) if approvers[c] else None

    s = [new_load(c) for c in range(e.num_candidates)]
    stopped_early = False
    while len(members) < t:
        best = -1
        for c, value in enumerate(s):
            if value is not None and not elected[c] and (best < 0 or value < s[best]):
                best = c
        if best < 0:
            if adapted_stop:
                stopped_early = True
                break
            raise ExhaustionError(len(members) + 1, t)
        value = s[best]
        elected[best] = True
        members.append(best)
        dirty = set()
        for v in approvers[best]:
            delta = value - load[v]
            if delta:
                load[v] = value
                for c in e.ballots[v]:
                    load_sum[c] += delta
                dirty.update(e.ballots[v])
        records.append(IterationRecord(best, load=value, loads=tuple(load)))
        for c in dirty:
            if not elected[c]:
                s[c] = new_load(c)

    committee = Committee(tuple(members), e.q, stopped_early=stopped_early, rule="seqphragmen")
    return committee, RuleTrace("seqphragmen", tuple(records))


def run_rule(rule_id: str, e: Election, adapted_stop: bool = False) -> tuple[Committee, RuleTrace]:
    """Dispatch on a rule id (``sejr``, ``s2ejr``, ``es``, ``seqphragmen``)."""
    rule = canonical_rule(rule_id)
    if rule == "sejr":
        return run_sejr(e)
    if rule == "s2ejr":
        return run_s2ejr(e)
    if rule == "es":
        return run_equal_shares(e)
    return run_seqphragmen(e, adapted_stop=adapted_stop)
