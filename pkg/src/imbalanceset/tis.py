"""Decide realizability of an imbalance set and build a witness tournament.

The decision pipeline, in order:

1. ``{0}`` alone is realized by the one-vertex tournament.
2. Unless the set is ``{0}``, it must hold at least one positive and at
   least one negative member (a zero-sum multiset needs both ends).
3. All members must share one parity (every vertex imbalance in a
   tournament has the parity of n - 1).
4. A set of odd members is always realizable: its canonical expansion
   passes the tournament sequence check and the maximum-arc builder
   returns a tournament of order n = l*M + m*L directly.
5. A set of even members expands to a near tournament of order n (even,
   so a tournament of that order is impossible).  It completes to a
   tournament exactly when an equal-sum pair of sequences with odd
   total length exists over the two sides; a zero member supplies the
   degenerate one-term pair and an extra apex vertex finishes the job,
   otherwise the pair's members join as new vertices via
   :func:`add_arcs`.

Completion mechanics (:func:`add_arcs`): the k = a + b new vertices
first form a rotational regular tournament among themselves (k is odd).
All unjoined pairs (v, v') of the base get their arc v -> v'.  Each
new vertex with positive target x must beat both endpoints of x/2
pairs, and each with negative target -y must lose to both endpoints of
y/2 pairs; these unit claims are coupled (one x-unit with one y-unit)
and dealt round-robin over the pairs, so a pair may host several
couples when the common sum exceeds the number of pairs.  A pair
hosting c couples is touched by 2c new vertices whose effects cancel
pairwise; the remaining k - 2c new vertices (an odd count) join it in
the half-and-half counterbalancing pattern that exactly cancels the
pair arc's +1/-1.  Feasibility is guaranteed: the couple load per pair
is at most ceil(S/n) <= min(a, b) <= (k-1)/2, and each new vertex's
pair demand x/2 (or y/2) is under n/2 because every member's magnitude
is below n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .digraph import Digraph
from .equalsum import EqualSumWitness, min_odd_equal_sum
from .errors import ResourceLimitError
from .realize import MATRIX_CELL_CAP, RealizationReport, max_realization
from .sequences import ImbalanceSet, canonical_sequence

REFUSAL_ONE_SIDED = "one-sided"
REFUSAL_MIXED_PARITY = "mixed-parity"
REFUSAL_NO_ODD_EQUAL_SUM = "no-odd-equal-sum"

DEFAULT_ORDER_CAP = 10**6


@dataclass(frozen=True)
class TisDecision:
    """Outcome of the decision: a verdict plus its certificate or reason.

    ``order`` is the order of the tournament the pipeline constructs
    (present on every yes, even when the certificate itself was not
    requested).  ``witness`` carries the equal-sum pair backing an
    even-case yes.
    """

    verdict: bool
    refusal: str | None = None
    order: int | None = None
    certificate: Digraph | None = None
    witness: EqualSumWitness | None = None


def decide_tis(
    values: Iterable[int],
    *,
    with_certificate: bool = False,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> TisDecision:
    """Decide whether a finite integer set is a tournament imbalance set.

    Refusals name the first failing condition: "one-sided" (missing a
    positive or negative member), "mixed-parity", or
    "no-odd-equal-sum" (even members admit no odd-total equal-sum
    pair).  With ``with_certificate`` a realizing tournament is built
    and verified before returning.  Inputs whose canonical expansion
    exceeds ``order_cap`` raise :class:`ResourceLimitError`.
    """
    members = frozenset(int(v) for v in values)
    if not members:
        raise ValueError("the input set must be nonempty")

    if members == {0}:
        cert = _verified_certificate(Digraph(1), members, 1) if with_certificate else None
        return TisDecision(True, order=1, certificate=cert)

    if not any(v > 0 for v in members) or not any(v < 0 for v in members):
        return TisDecision(False, refusal=REFUSAL_ONE_SIDED)

    if len({v % 2 for v in members}) > 1:
        return TisDecision(False, refusal=REFUSAL_MIXED_PARITY)

    parts = ImbalanceSet.from_values(members)
    n = parts.canonical_length
    if n > order_cap:
        raise ResourceLimitError(
            f"canonical expansion of order {n} exceeds the cap {order_cap}"
        )

    if next(iter(members)) % 2:
        # Odd members: both signs present is already sufficient.
        cert = None
        if with_certificate:
            report = max_realization(canonical_sequence(parts))
            assert report.is_tournament
            cert = _verified_certificate(report.graph, members, n)
        return TisDecision(True, order=n, certificate=cert)

    witness = min_odd_equal_sum(parts.non_negative, parts.negative_abs)
    if witness is None:
        return TisDecision(False, refusal=REFUSAL_NO_ODD_EQUAL_SUM)
    order = n + witness.total_length
    cert = None
    if with_certificate:
        report = max_realization(canonical_sequence(parts))
        assert report.is_near_tournament
        if witness.ys == ():
            grown = add_apex_zero(report)
        else:
            grown = add_arcs(report, witness)
        cert = _verified_certificate(grown, members, order)
    return TisDecision(True, order=order, certificate=cert, witness=witness)


def realize_imbalance_set(
    values: Iterable[int], *, order_cap: int = DEFAULT_ORDER_CAP
) -> Digraph:
    """Build a tournament whose imbalance set is exactly the input."""
    decision = decide_tis(values, with_certificate=True, order_cap=order_cap)
    if not decision.verdict:
        raise ValueError(f"not a tournament imbalance set ({decision.refusal})")
    assert decision.certificate is not None
    return decision.certificate


def order_upper_bound(values: Iterable[int]) -> int:
    """Guaranteed order bound for the constructed tournament.

    Odd members: exactly n = l*M + m*L.  Even with a zero member:
    n + 1.  Even without zero: 2n - 1 (the completion adds fewer than
    n vertices).  The lone set {0}: 1.
    """
    members = frozenset(int(v) for v in values)
    decision = decide_tis(members)
    if not decision.verdict:
        raise ValueError(f"not a tournament imbalance set ({decision.refusal})")
    if members == {0}:
        return 1
    parts = ImbalanceSet.from_values(members)
    n = parts.canonical_length
    if next(iter(members)) % 2:
        return n
    if 0 in members:
        return n + 1
    return 2 * n - 1


def add_apex_zero(near: RealizationReport) -> Digraph:
    """Complete a near tournament by a single vertex of imbalance zero.

    Every unjoined pair (v, v') gains the arc v -> v', the apex beats
    v and loses to v', so all original imbalances survive and the apex
    nets zero.
    """
    if not near.is_near_tournament:
        raise ValueError("base graph must be a near tournament")
    n = near.graph.n
    if (n + 1) ** 2 > MATRIX_CELL_CAP:
        raise ResourceLimitError(f"order {n + 1} needs {(n + 1) ** 2} matrix cells")
    adj = np.zeros((n + 1, n + 1), dtype=np.uint8)
    adj[:n, :n] = near.graph.matrix()
    lo = np.fromiter((p for p, _ in near.non_neighbour_pairing), dtype=np.int64)
    hi = np.fromiter((q for _, q in near.non_neighbour_pairing), dtype=np.int64)
    adj[lo, hi] = 1
    adj[hi, n] = 1
    adj[n, lo] = 1
    grown = Digraph.from_matrix(adj)
    _assert_preserved(grown, near, np.zeros(1, dtype=np.int64))
    return grown


def add_arcs(near: RealizationReport, witness: EqualSumWitness) -> Digraph:
    """Complete a near tournament into a tournament via an equal-sum pair.

    Adds len(xs) + len(ys) vertices (the total must be odd) whose
    imbalances come out as the xs and the negated ys, while every
    original vertex keeps its imbalance.  See the module docstring for
    the construction; it degenerates to the single-apex picture when
    the witness is the trivial ([0], []).
    """
    if not near.is_near_tournament:
        raise ValueError("base graph must be a near tournament")
    xs, ys = witness.xs, witness.ys
    k = len(xs) + len(ys)
    if k % 2 == 0:
        raise ValueError("the witness must have odd total length")
    if any(v % 2 for v in xs) or any(v % 2 for v in ys):
        raise ValueError("witness entries must be even")

    n = near.graph.n
    n_pairs = n // 2
    common = witness.common_sum
    couples = common // 2
    if any(x // 2 > n_pairs for x in xs) or any(y // 2 > n_pairs for y in ys):
        raise ValueError("a witness entry exceeds the base graph's pair capacity")
    if couples and -(-couples // n_pairs) > (k - 1) // 2:
        raise ValueError("witness couple load exceeds the new-clique capacity")

    total = n + k
    if total * total > MATRIX_CELL_CAP:
        raise ResourceLimitError(f"order {total} needs {total * total} matrix cells")
    adj = np.zeros((total, total), dtype=np.uint8)
    adj[:n, :n] = near.graph.matrix()

    # New clique: rotational regular tournament (k odd), vertex i beats
    # the next (k - 1) / 2 vertices cyclically.
    new_ids = n + np.arange(k, dtype=np.int64)
    offsets = np.arange(k, dtype=np.int64)
    gap = (offsets[None, :] - offsets[:, None]) % k
    adj[n:, n:] = ((gap >= 1) & (gap <= (k - 1) // 2)).astype(np.uint8)

    lo = np.fromiter((p for p, _ in near.non_neighbour_pairing), dtype=np.int64)
    hi = np.fromiter((q for _, q in near.non_neighbour_pairing), dtype=np.int64)
    adj[lo, hi] = 1

    # Couple j pairs the j-th positive half-unit with the j-th negative
    # one; couples are dealt round-robin over the pairs, so one owner's
    # units land on distinct pairs (its demand is at most n/2 units).
    x_owner = np.repeat(np.arange(len(xs)), np.asarray(xs, dtype=np.int64) // 2)
    y_owner = np.repeat(np.arange(len(ys)), np.asarray(ys, dtype=np.int64) // 2)
    assert x_owner.size == couples and y_owner.size == couples
    cpair = np.arange(couples) % max(n_pairs, 1)

    adj[n + x_owner, lo[cpair]] = 1
    adj[n + x_owner, hi[cpair]] = 1
    adj[lo[cpair], n + len(xs) + y_owner] = 1
    adj[hi[cpair], n + len(xs) + y_owner] = 1

    owners = np.zeros((n_pairs, k), dtype=bool)
    owners[cpair, x_owner] = True
    owners[cpair, len(xs) + y_owner] = True

    # Counterbalance each pair with its non-owner new vertices: ranked
    # by id, the first (m-1)/2 and the last push one way, the middle
    # (m-1)/2 the other, which exactly cancels the pair arc's +1/-1.
    rank = np.cumsum(~owners, axis=1, dtype=np.int64) - 1
    m_per_pair = k - 2 * np.bincount(cpair, minlength=n_pairs)
    half = (m_per_pair - 1) // 2
    role_a = ~owners & ((rank < half[:, None]) | (rank == (m_per_pair - 1)[:, None]))
    role_b = ~owners & ~role_a & (rank < (m_per_pair - 1)[:, None])
    adj[np.ix_(new_ids, lo)] |= role_a.T
    adj[np.ix_(hi, new_ids)] |= role_a
    adj[np.ix_(lo, new_ids)] |= role_b
    adj[np.ix_(new_ids, hi)] |= role_b.T

    grown = Digraph.from_matrix(adj)
    targets = np.concatenate(
        [np.asarray(xs, dtype=np.int64), -np.asarray(ys, dtype=np.int64)]
    )
    _assert_preserved(grown, near, targets)
    return grown


def _assert_preserved(grown: Digraph, near: RealizationReport, targets: np.ndarray) -> None:
    """Completion invariants: old imbalances kept, new exact, tournament."""
    n = near.graph.n
    imb = grown.imbalances()
    if not (imb[:n] == near.graph.imbalances()).all():
        raise AssertionError("completion disturbed an original imbalance")
    if not (imb[n:] == targets).all():
        raise AssertionError("a new vertex misses its target imbalance")
    if not grown.is_tournament():
        raise AssertionError("completion did not produce a tournament")


def _verified_certificate(
    graph: Digraph, members: frozenset[int], order: int
) -> Digraph:
    if graph.n != order:
        raise AssertionError(f"certificate order {graph.n}, expected {order}")
    if not graph.is_tournament():
        raise AssertionError("certificate is not a tournament")
    if graph.imbalance_set() != members:
        raise AssertionError("certificate imbalance set mismatch")
    return graph
