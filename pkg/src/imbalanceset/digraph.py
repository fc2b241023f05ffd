"""Simple oriented graphs with degree and imbalance accounting.

Everything in this package lives inside orientations of simple graphs:
between any unordered pair of vertices there is at most one arc and
never a pair of opposing arcs.  Two structured special cases matter
downstream: tournaments (every pair joined) and near tournaments
(every vertex joined to all others except exactly one, which forces
even order).

Graphs are backed by a dense adjacency matrix because all algorithms
here touch most vertex pairs and orders stay in the low tens of
thousands.  Instances are immutable after construction; construction
of large graphs goes through :meth:`Digraph.from_matrix`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

# Row-block size for pair checks on large matrices, keeps temporaries small.
_BLOCK = 4096


@dataclass(frozen=True)
class VertexImbalance:
    """Degree record for one vertex; imbalance is out_degree - in_degree."""

    vertex: int
    out_degree: int
    in_degree: int
    imbalance: int


class Digraph:
    """Immutable simple oriented graph on vertices ``0 .. n-1``.

    Cell ``(u, v)`` of the adjacency matrix is 1 exactly when there is
    an arc directed from ``u`` to ``v``.  The no-2-cycle invariant means
    each unordered pair is in one of three states: unjoined, forward,
    or backward.
    """

    __slots__ = ("_adj",)

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = np.zeros((n, n), dtype=np.uint8)
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for order {n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if adj[v, u]:
                raise ValueError(f"opposing arcs between {u} and {v}")
            if adj[u, v]:
                raise ValueError(f"duplicate arc ({u}, {v})")
            adj[u, v] = 1
        adj.flags.writeable = False
        self._adj = adj

    @classmethod
    def from_matrix(cls, adj: np.ndarray, *, validate: bool = True) -> "Digraph":
        """Wrap an adjacency matrix (uint8, square) as a Digraph.

        The array is taken over without copying and frozen; callers must
        not keep a writable reference.
        """
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if adj.dtype != np.uint8:
            adj = adj.astype(np.uint8)
        if validate:
            _validate_matrix(adj)
        g = object.__new__(cls)
        adj.flags.writeable = False
        g._adj = adj
        return g

    # -- basic accessors ------------------------------------------------

    @property
    def n(self) -> int:
        return self._adj.shape[0]

    @property
    def arc_count(self) -> int:
        return int(self._adj.sum(dtype=np.int64))

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self._adj[u, v])

    def arcs(self) -> Iterator[tuple[int, int]]:
        """Yield arcs as (source, target), sorted lexicographically."""
        for u, v in np.argwhere(self._adj):
            yield int(u), int(v)

    def matrix(self) -> np.ndarray:
        """Read-only view of the adjacency matrix."""
        return self._adj

    def with_arc(self, u: int, v: int) -> "Digraph":
        """Return a copy with the arc u -> v inserted."""
        if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
            raise ValueError(f"invalid arc ({u}, {v})")
        if self._adj[u, v] or self._adj[v, u]:
            raise ValueError(f"pair {{{u}, {v}}} is already joined")
        adj = self._adj.copy()
        adj[u, v] = 1
        return Digraph.from_matrix(adj, validate=False)

    # -- degrees and imbalances ------------------------------------------

    def out_degrees(self) -> np.ndarray:
        return self._adj.sum(axis=1, dtype=np.int64)

    def in_degrees(self) -> np.ndarray:
        return self._adj.sum(axis=0, dtype=np.int64)

    def out_degree(self, v: int) -> int:
        self._check_vertex(v)
        return int(self._adj[v].sum(dtype=np.int64))

    def in_degree(self, v: int) -> int:
        self._check_vertex(v)
        return int(self._adj[:, v].sum(dtype=np.int64))

    def imbalance(self, v: int) -> int:
        """Out-degree minus in-degree of v."""
        self._check_vertex(v)
        return self.out_degree(v) - self.in_degree(v)

    def vertex_balance(self, v: int) -> VertexImbalance:
        self._check_vertex(v)
        out = self.out_degree(v)
        inn = self.in_degree(v)
        return VertexImbalance(v, out, inn, out - inn)

    def imbalances(self) -> np.ndarray:
        """Per-vertex imbalance, indexed by vertex id."""
        return self.out_degrees() - self.in_degrees()

    def imbalance_sequence(self) -> tuple[int, ...]:
        """All vertex imbalances sorted nonincreasing.  Sums to zero."""
        vals = np.sort(self.imbalances())[::-1]
        return tuple(int(x) for x in vals)

    def imbalance_set(self) -> frozenset[int]:
        """The deduplicated set of vertex imbalances."""
        return frozenset(int(x) for x in np.unique(self.imbalances()))

    def score_sequence(self) -> tuple[int, ...]:
        """Out-degrees sorted nondecreasing; only defined for tournaments."""
        if not self.is_tournament():
            raise ValueError("score sequence is only defined for tournaments")
        return tuple(int(x) for x in np.sort(self.out_degrees()))

    # -- structural predicates -------------------------------------------

    def is_tournament(self) -> bool:
        """True iff every unordered pair carries exactly one arc.

        Construction guarantees at most one arc per pair, so it suffices
        that every vertex is joined to all n - 1 others.
        """
        n = self.n
        joined = self.out_degrees() + self.in_degrees()
        return bool((joined == n - 1).all())

    def is_near_tournament(self) -> bool:
        """True iff n is even, n >= 2, and every vertex misses exactly one.

        The degree criterion is enough because construction already rules
        out doubled pairs, so joined-count = out-degree + in-degree.
        """
        n = self.n
        if n < 2 or n % 2:
            return False
        joined = self.out_degrees() + self.in_degrees()
        return bool((joined == n - 2).all())

    def non_neighbours(self, v: int) -> list[int]:
        """Vertices not joined with v (v itself excluded)."""
        self._check_vertex(v)
        joined = self._adj[v, :].astype(bool) | self._adj[:, v].astype(bool)
        joined[v] = True
        return [int(u) for u in np.flatnonzero(~joined)]

    def non_neighbour_pairs(self) -> tuple[tuple[int, int], ...]:
        """All unjoined pairs {u, v}, normalized as (min, max) and sorted."""
        n = self.n
        out: list[tuple[int, int]] = []
        for lo in range(0, n, _BLOCK):
            hi = min(lo + _BLOCK, n)
            joined = self._adj[lo:hi, :] | self._adj[:, lo:hi].T
            rows, cols = np.nonzero(joined == 0)
            keep = cols > rows + lo
            for r, c in zip(rows[keep], cols[keep]):
                out.append((int(r) + lo, int(c)))
        out.sort()
        return tuple(out)

    # -- plumbing ----------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for order {self.n}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self._adj, other._adj))

    def __hash__(self) -> int:
        return hash((self.n, self._adj.tobytes()))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.arc_count})"


def _validate_matrix(adj: np.ndarray) -> None:
    n = adj.shape[0]
    for lo in range(0, n, _BLOCK):
        hi = min(lo + _BLOCK, n)
        block = adj[lo:hi, :]
        if (block > 1).any():
            raise ValueError("adjacency entries must be 0 or 1")
        opposing = block & adj[:, lo:hi].T
        rows = np.arange(hi - lo)
        if block[rows, rows + lo].any():
            raise ValueError("self-loops are not allowed")
        opposing[rows, rows + lo] = 0
        if opposing.any():
            raise ValueError("opposing arc pairs are not allowed")
