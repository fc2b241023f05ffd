"""Shared helpers for the test suite."""

from __future__ import annotations

import itertools

from imbalanceset import Digraph, check_digraph_imbalance


def triangle_cycle() -> Digraph:
    return Digraph(3, [(0, 1), (1, 2), (2, 0)])


def triangle_transitive() -> Digraph:
    return Digraph(3, [(0, 1), (0, 2), (1, 2)])


def square_cycle() -> Digraph:
    return Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def all_valid_imbalance_sequences(n: int):
    """Every nonincreasing integer sequence of length n passing the
    digraph feasibility check (entries necessarily within +/-(n-1))."""

    def rec(prefix: list[int], remaining: int):
        if remaining == 0:
            if check_digraph_imbalance(prefix):
                yield tuple(prefix)
            return
        start = prefix[-1] if prefix else n - 1
        for v in range(start, -n, -1):
            yield from rec(prefix + [v], remaining - 1)

    if n == 0:
        yield ()
    else:
        yield from rec([], n)


def all_simple_digraphs(n: int):
    """Every labeled simple oriented graph of order n (3^C(n,2) of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for states in itertools.product((0, 1, 2), repeat=len(pairs)):
        arcs = []
        for state, (u, v) in zip(states, pairs):
            if state == 1:
                arcs.append((u, v))
            elif state == 2:
                arcs.append((v, u))
        yield Digraph(n, arcs)
