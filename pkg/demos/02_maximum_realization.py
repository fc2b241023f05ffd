"""Building a maximum-arc digraph with a prescribed imbalance sequence.

Every vertex ends up joined to all others except at most one.  When all
entries share the parity of n - 1 the result is a tournament; when all
miss it the result is a near tournament whose unjoined pairs form a
perfect matching, which is the launching pad for the set-realization
pipeline.
"""

from imbalanceset import (
    ImbalanceSet,
    canonical_sequence,
    max_arc_count,
    max_realization,
    verify_realization,
)

print("== a tournament: matched parity ==")
seq = (2, 0, -2)
report = max_realization(seq)
print(f"  target {seq}: {report.graph}")
print(f"  tournament: {report.is_tournament}, arcs: {report.arc_count}")
print(f"  arcs: {sorted(report.graph.arcs())}")

print()
print("== a near tournament: every entry misses the parity ==")
seq = (0, 0, 0, 0)
report = max_realization(seq)
print(f"  target {seq}: arcs {report.arc_count} of C(4,2)={6}")
print(f"  near tournament: {report.is_near_tournament}")
print(f"  unjoined pairs: {report.non_neighbour_pairing}")

print()
print("== the canonical expansion of a set ==")
parts = ImbalanceSet.from_values({4, 2, -2})
seq = canonical_sequence(parts)
print(f"  {{4, 2, -2}} expands to {seq}")
print(f"  predicted arc total: {max_arc_count(seq)}")
report = max_realization(seq)
print(f"  built: near tournament of order {report.graph.n} with "
      f"{report.arc_count} arcs, matching {report.non_neighbour_pairing}")
print(f"  independently verified: {verify_realization(seq, report)}")

print()
print("== mixed parities are fine too ==")
seq = (2, 2, -1, -3)
report = max_realization(seq)
print(f"  target {seq}: arcs {report.arc_count}, "
      f"tournament {report.is_tournament}, near {report.is_near_tournament}")
print(f"  unjoined pairs: {report.non_neighbour_pairing}")
