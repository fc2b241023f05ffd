"""Feasibility checks for score and imbalance sequences.

A tournament's score sequence (out-degrees, nondecreasing) is
characterized by prefix sums dominating the binomial bound; its
imbalance sequence (out minus in, nonincreasing) by prefix sums capped
at j*(n-j) together with a parity condition.  Dropping the parity
condition characterizes imbalance sequences of general simple digraphs.
"""

from imbalanceset import (
    check_digraph_imbalance,
    check_landau,
    check_tournament_imbalance,
    imbalances_from_scores,
    landau_failure,
    scores_from_imbalances,
    tournament_imbalance_failure,
)

print("== score sequences ==")
for scores in [(0, 1, 2), (1, 1, 1), (0, 0, 2), (1, 1, 2, 2)]:
    verdict = check_landau(scores)
    note = "" if verdict else f"  ({landau_failure(scores)})"
    print(f"  {scores}: {'valid' if verdict else 'invalid'}{note}")

print()
print("== digraph imbalance sequences ==")
for seq in [(1, 0, -1), (2, -1, -1), (3, -1, -1), (2, 2, -2, -2)]:
    print(f"  {seq}: {'valid' if check_digraph_imbalance(seq) else 'invalid'}")

print()
print("== tournament imbalance sequences ==")
# The two-term sequence (6, -10) is a valid digraph sequence family
# member in spirit but fails the parity test: entries are even while
# n - 1 = 1 is odd.
for seq in [(0, 0, 0), (2, 0, -2), (6, -10), (3, 1, -1, -3)]:
    verdict = check_tournament_imbalance(seq)
    note = "" if verdict else f"  ({tournament_imbalance_failure(seq)})"
    print(f"  {seq}: {'valid' if verdict else 'invalid'}{note}")

print()
print("== score <-> imbalance conversion ==")
seq = (3, 1, -1, -3)
scores = scores_from_imbalances(seq)
print(f"  imbalances {seq} -> scores {scores}")
print(f"  scores {scores} -> imbalances {imbalances_from_scores(scores)}")
