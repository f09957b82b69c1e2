"""
Type A and rook monoids
=======================

For type A_{n-1} and the first fundamental weight the Renner monoid is the
rook monoid of partial permutations of n points. Its classes are known to
be indexed by pairs of partitions, which gives an independent check.
"""

from functools import lru_cache

from renner import rook_class_count


@lru_cache(None)
def partitions(k, largest):
    if k == 0:
        return 1
    return sum(partitions(k - j, j) for j in range(1, min(k, largest) + 1))


for n in range(2, 6):
    pairs = sum(partitions(k, k) * partitions(n - k, n - k) for k in range(n + 1))
    # rook_class_count also cross-checks each idempotent against brute force
    print(f"n={n}: {rook_class_count(n)} classes, partition pairs {pairs}")
