"""Brute-force ground truth for the rest of the package.

Nothing here is used by the main pipeline; tests call these to check
the fast paths against exhaustive enumeration.

Two tiers: tournament enumeration is the primitive truth but only
affordable at tiny orders (2^(n(n-1)/2) labeled tournaments), so
:func:`brute_min_order` works at the sequence level through the
tournament feasibility check, whose own validity the enumeration tier
establishes for orders up to 5.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Iterator

from .digraph import Digraph
from .sequences import check_tournament_imbalance


@dataclass(frozen=True)
class EnumerationBudget:
    """Hard limits keeping exhaustive searches affordable.

    max_order 7 keeps labeled-tournament enumeration at 2^21 graphs.
    """

    max_order: int = 7
    max_sequence_length: int = 64
    max_abs_value: int = 64

    def __post_init__(self) -> None:
        if not 1 <= self.max_order <= 7:
            raise ValueError("max_order must be between 1 and 7")
        if self.max_sequence_length < 1 or self.max_abs_value < 1:
            raise ValueError("budget limits must be positive")


DEFAULT_BUDGET = EnumerationBudget()


def enumerate_tournaments(
    n: int, budget: EnumerationBudget = DEFAULT_BUDGET
) -> Iterator[Digraph]:
    """Yield every labeled tournament of order n exactly once.

    Orientations are encoded as bits over the C(n, 2) vertex pairs in
    lexicographic order, lowest pair in the lowest bit; streams are
    reproducible.
    """
    if not 1 <= n <= budget.max_order:
        raise ValueError(f"order {n} outside the enumeration budget")
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        arcs = [
            (u, v) if not code >> k & 1 else (v, u)
            for k, (u, v) in enumerate(pairs)
        ]
        yield Digraph(n, arcs)


def brute_zero_sum_min_odd(
    values: Iterable[int],
    len_max: int,
    budget: EnumerationBudget = DEFAULT_BUDGET,
) -> int | None:
    """Smallest odd k <= len_max with a k-term zero-sum multiset.

    Terms are drawn from the value set with repetition; plain
    enumeration over multisets, independent of the dynamic-programming
    search it cross-checks.
    """
    members = sorted(set(int(v) for v in values))
    if not members:
        raise ValueError("the value set must be nonempty")
    if len_max < 1:
        raise ValueError("len_max must be positive")
    if max(abs(v) for v in members) > budget.max_abs_value:
        raise ValueError("values outside the enumeration budget")
    for k in range(1, min(len_max, budget.max_sequence_length) + 1, 2):
        for combo in combinations_with_replacement(members, k):
            if sum(combo) == 0:
                return k
    return None


def brute_min_order(
    values: Iterable[int],
    n_max: int,
    budget: EnumerationBudget = DEFAULT_BUDGET,
) -> int | None:
    """Exact minimal tournament order realizing the set, or None.

    Searches every multiset of each size that uses all members at least
    once, at the sequence level: a multiset works iff its nonincreasing
    arrangement passes the tournament imbalance check.
    """
    members = sorted(set(int(v) for v in values), reverse=True)
    if not members:
        raise ValueError("the value set must be nonempty")
    if max(abs(v) for v in members) > budget.max_abs_value:
        raise ValueError("values outside the enumeration budget")
    n_max = min(n_max, budget.max_sequence_length)
    for n in range(len(members), n_max + 1):
        for extra in combinations_with_replacement(members, n - len(members)):
            seq = tuple(sorted(members + list(extra), reverse=True))
            if check_tournament_imbalance(seq):
                return n
    return None
