"""The brute-force tier: exhaustive enumeration as independent truth.

Small-order tournament enumeration validates the sequence checks, a
plain multiset search validates the equal-sum dynamic program, and a
sequence-level sweep finds the true minimal order of a realization,
which the constructive pipeline only bounds.
"""

from collections import Counter

from imbalanceset import (
    brute_min_order,
    brute_zero_sum_min_odd,
    decide_tis,
    enumerate_tournaments,
    order_upper_bound,
)

print("== labeled tournaments at small orders ==")
for n in (2, 3, 4):
    count = sum(1 for _ in enumerate_tournaments(n))
    print(f"  order {n}: {count} tournaments")

print()
print("== imbalance sequences of all 1024 order-5 tournaments ==")
tally = Counter(g.imbalance_sequence() for g in enumerate_tournaments(5))
for seq, count in sorted(tally.items(), reverse=True):
    print(f"  {seq}: {count}")

print()
print("== minimal odd zero-sum lengths ==")
for members, cap in [({2, -4}, 9), ({2, -2}, 9), ({6, -10}, 15), ({2, 0, -2}, 9)]:
    k = brute_zero_sum_min_odd(members, cap)
    print(f"  {sorted(members, reverse=True)} (up to {cap}): {k}")

print()
print("== constructed order vs. true minimal order ==")
for members in [{1, -1}, {3, -1}, {4, 2, -2}, {2, 0, -2}, {4, -6}]:
    built = decide_tis(members).order
    bound = order_upper_bound(members)
    exact = brute_min_order(members, bound)
    print(f"  {sorted(members, reverse=True)}: built {built}, "
          f"guaranteed <= {bound}, true minimum {exact}")
