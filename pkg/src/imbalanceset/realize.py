"""Realize an imbalance sequence as a simple digraph with maximum arcs.

A nonincreasing integer sequence t passing the digraph feasibility
check is realized by a graph in which every vertex has at most one
non-neighbour; the arc total is the sum of floor((n - 1 + t_i) / 2).
Vertex i gets out-quota floor((n - 1 + t_i) / 2); it is joined to all
n - 1 others when t_i has the parity of n - 1 and to n - 2 others
(leaving one non-neighbour) otherwise.

The builder processes vertices in sequence order.  Each step fixes all
arcs between the current vertex and the not-yet-processed ones: first
the non-neighbour slot is paired off (lowest-id unprocessed vertex with
a free slot), then out-arcs go to the candidates with the largest
residual in-demand (ties to the lower id), and the remaining candidates
send arcs in.  Candidates whose residual demand forces a direction are
honoured first.

The greedy order is not guaranteed on paper to finish; if a step finds
the forced directions overcommitted it repairs by flipping an
alternating chain of existing arcs, which shifts one unit of capacity
between vertices without disturbing anyone else's degrees.  Repairs are
logged; exhaustive small-order validation has never triggered one.

Outputs are deterministic, which the golden-file tests rely on.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .digraph import Digraph
from .errors import ResourceLimitError
from .sequences import digraph_imbalance_failure

_log = logging.getLogger(__name__)

# Dense-matrix budget: refuse realizations needing more cells than this.
MATRIX_CELL_CAP = 1_000_000_000

#: Number of repair-chain invocations since import (observability hook).
repair_invocations = 0


class RealizationError(RuntimeError):
    """The builder could not complete a feasible sequence (greedy + repair)."""


@dataclass(frozen=True)
class RealizationReport:
    """A built graph plus the structural facts tests and callers rely on.

    non_neighbour_pairing lists the unjoined pairs normalized as
    (min, max) and sorted; for a near tournament it is a perfect
    matching, for a tournament it is empty.
    """

    graph: Digraph
    arc_count: int
    is_tournament: bool
    is_near_tournament: bool
    non_neighbour_pairing: tuple[tuple[int, int], ...]


def max_arc_count(seq: Sequence[int]) -> int:
    """Arc count of any maximum realization: sum of floor((n-1+t_i)/2)."""
    failure = digraph_imbalance_failure(seq)
    if failure is not None:
        raise ValueError(f"not a digraph imbalance sequence ({failure.kind})")
    n = len(seq)
    return sum((n - 1 + t) // 2 for t in seq)


def max_realization(seq: Sequence[int]) -> RealizationReport:
    """Build a maximum-arc simple digraph realizing the sequence.

    The result is a tournament when every entry matches the parity of
    n - 1, and a near tournament when every entry misses it (so n is
    even); mixed parities leave both flags false.
    """
    failure = digraph_imbalance_failure(seq)
    if failure is not None:
        raise ValueError(f"not a digraph imbalance sequence ({failure.kind})")
    n = len(seq)
    if n * n > MATRIX_CELL_CAP:
        raise ResourceLimitError(f"order {n} needs {n * n} matrix cells")

    targets = np.asarray(seq, dtype=np.int64)
    out_quota = (n - 1 + targets) // 2
    parity_match = (targets % 2) == ((n - 1) % 2)
    joined_quota = np.where(parity_match, n - 1, n - 2)
    in_quota = joined_quota - out_quota

    adj = np.zeros((n, n), dtype=np.uint8)
    rem_out = out_quota.copy()
    rem_in = in_quota.copy()
    skip_free = ~parity_match
    skip_partner = np.full(n, -1, dtype=np.int64)

    for i in range(n):
        unproc = n - 1 - i
        assert rem_out[i] + rem_in[i] + int(skip_free[i]) == unproc

        partner = -1
        if skip_free[i]:
            free = np.flatnonzero(skip_free[i + 1 :])
            if free.size == 0:
                raise RealizationError(f"no free non-neighbour slot for vertex {i}")
            partner = i + 1 + int(free[0])
            skip_free[i] = False
            skip_free[partner] = False
            skip_partner[i] = partner
            skip_partner[partner] = i

        cand = np.arange(i + 1, n, dtype=np.int64)
        if partner >= 0:
            cand = cand[cand != partner]
        if cand.size == 0:
            continue

        need_recv = int(rem_out[i])
        need_send = int(rem_in[i])
        assert need_recv + need_send == cand.size

        # A candidate with both residuals exhausted could take no arc at
        # all; the per-vertex bookkeeping identity rules that out here.
        assert not ((rem_out[cand] == 0) & (rem_in[cand] == 0)).any()

        # Forced directions may overcommit; repair chains shift capacity.
        for _ in range(cand.size + 1):
            forced_recv = cand[rem_out[cand] == 0]
            forced_send = cand[rem_in[cand] == 0]
            if forced_recv.size > need_recv:
                _transfer_out_slot(
                    adj, int(forced_recv[-1]), i, rem_out, rem_in
                )
            elif forced_send.size > need_send:
                _transfer_in_slot(
                    adj, int(forced_send[-1]), i, rem_out, rem_in
                )
            else:
                break
        else:
            raise RealizationError(f"vertex {i} could not be balanced")

        flex = cand[(rem_out[cand] > 0) & (rem_in[cand] > 0)]
        extra = need_recv - forced_recv.size
        if extra < 0 or extra > flex.size:
            raise RealizationError(f"vertex {i} could not be balanced")
        if extra == 0:
            chosen = flex[:0]
        elif extra == flex.size:
            chosen = flex
        else:
            # Largest residual in-demand first, lowest id on ties.
            key = rem_in[flex] * np.int64(n + 1) + (n - flex)
            chosen = flex[np.argpartition(-key, extra - 1)[:extra]]

        recv_mask = np.zeros(n, dtype=bool)
        recv_mask[forced_recv] = True
        recv_mask[chosen] = True
        receivers = cand[recv_mask[cand]]
        senders = cand[~recv_mask[cand]]

        adj[i, receivers] = 1
        adj[senders, i] = 1
        rem_in[receivers] -= 1
        rem_out[senders] -= 1
        rem_out[i] -= receivers.size
        rem_in[i] -= senders.size
        assert rem_out[i] == 0 and rem_in[i] == 0

    assert (rem_out == 0).all() and (rem_in == 0).all() and not skip_free.any()

    graph = Digraph.from_matrix(adj)
    built = graph.imbalances()
    if not (built == targets).all():
        raise RealizationError("built graph does not match the target sequence")

    pairing = tuple(
        (int(v), int(skip_partner[v]))
        for v in range(n)
        if skip_partner[v] > v
    )
    arc_count = int(out_quota.sum())
    return RealizationReport(
        graph=graph,
        arc_count=arc_count,
        is_tournament=bool(parity_match.all()),
        is_near_tournament=bool(n >= 2 and n % 2 == 0 and not parity_match.any()),
        non_neighbour_pairing=pairing,
    )


def verify_realization(seq: Sequence[int], report: RealizationReport) -> bool:
    """Recompute everything the report claims, straight from the graph."""
    g = report.graph
    return (
        g.imbalance_sequence() == tuple(seq)
        and report.arc_count == g.arc_count
        and report.is_tournament == g.is_tournament()
        and report.is_near_tournament == g.is_near_tournament()
        and tuple(report.non_neighbour_pairing) == g.non_neighbour_pairs()
    )


def _flip_path(adj: np.ndarray, path: list[int]) -> None:
    for a, b in zip(path, path[1:]):
        assert adj[a, b] == 1 and adj[b, a] == 0
        adj[a, b] = 0
        adj[b, a] = 1


def _chain_search(
    adj: np.ndarray,
    start: int,
    current: int,
    follow_out: bool,
    accept: np.ndarray,
) -> list[int] | None:
    """Shortest directed chain from start to any accepted vertex.

    Follows existing arcs forward (follow_out) or backward; `accept`
    marks admissible terminals.  Deterministic: breadth-first in
    ascending vertex order.
    """
    n = adj.shape[0]
    parent = np.full(n, -2, dtype=np.int64)
    parent[start] = -1
    frontier = [start]
    while frontier:
        nxt: list[int] = []
        for v in frontier:
            row = adj[v, :] if follow_out else adj[:, v]
            for u in np.flatnonzero(row):
                u = int(u)
                if parent[u] != -2 or u == current:
                    continue
                parent[u] = v
                if accept[u]:
                    path = [u]
                    while path[-1] != start:
                        path.append(int(parent[path[-1]]))
                    path.reverse()
                    return path
                nxt.append(u)
        frontier = nxt
    return None


def _transfer_out_slot(
    adj: np.ndarray, u: int, i: int, rem_out: np.ndarray, rem_in: np.ndarray
) -> None:
    """Give vertex u one unit of out-capacity by flipping an arc chain.

    The chain u -> x1 -> ... -> y of existing arcs is reversed; u ends
    up having sent one arc fewer (and received one more), the terminal
    unprocessed y the other way around, everyone in between unchanged.
    """
    global repair_invocations
    repair_invocations += 1
    _log.warning("repair: transferring an out-slot to vertex %s", u)
    n = adj.shape[0]
    if rem_in[u] < 1:
        raise RealizationError(f"vertex {u} cannot absorb an in-arc for repair")
    accept = np.zeros(n, dtype=bool)
    accept[i + 1 :] = rem_out[i + 1 :] >= 1
    accept[u] = False
    path = _chain_search(adj, u, i, follow_out=True, accept=accept)
    if path is None:
        raise RealizationError(f"no repair chain frees an out-slot for vertex {u}")
    _flip_path(adj, path)
    terminal = path[-1]
    rem_out[u] += 1
    rem_in[u] -= 1
    rem_out[terminal] -= 1
    rem_in[terminal] += 1


def _transfer_in_slot(
    adj: np.ndarray, u: int, i: int, rem_out: np.ndarray, rem_in: np.ndarray
) -> None:
    """Mirror image of :func:`_transfer_out_slot` for in-capacity."""
    global repair_invocations
    repair_invocations += 1
    _log.warning("repair: transferring an in-slot to vertex %s", u)
    n = adj.shape[0]
    if rem_out[u] < 1:
        raise RealizationError(f"vertex {u} cannot absorb an out-arc for repair")
    accept = np.zeros(n, dtype=bool)
    accept[i + 1 :] = rem_in[i + 1 :] >= 1
    accept[u] = False
    path = _chain_search(adj, u, i, follow_out=False, accept=accept)
    if path is None:
        raise RealizationError(f"no repair chain frees an in-slot for vertex {u}")
    # Path was walked backward along in-arcs: flip it tail-to-head.
    path.reverse()
    _flip_path(adj, path)
    terminal = path[0]
    rem_in[u] += 1
    rem_out[u] -= 1
    rem_in[terminal] -= 1
    rem_out[terminal] += 1
