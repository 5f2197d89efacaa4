#!/usr/bin/env python3
"""Pm(C4 x T) is always a square or double a square ("squarish").

Which of the two happens is governed by the tree's corank
s = n - 2r (vertex count minus twice the maximum matching size):
the count is a perfect square exactly when s is even, and for a tree
that means s = 0, i.e. T has a perfect matching.  The square root is
then the P3 x T count.
"""

import pfmatch as pf


def main():
    print(f"{'tree (edges)':44} {'Pm(C4xT)':>10}  decomposition   corank")
    print("-" * 78)
    for seed in range(14):
        t = pf.random_tree(2 + seed % 8, seed * 37 + 11)
        count = pf.count_c4_tree(t).count
        dec = pf.squarish_decompose(count)
        corank = t.n - 2 * pf.max_matching_size(t)
        shape = f"{dec.factor} * {dec.root}^2"
        edges = ",".join(f"{u}{v}" for u, v in sorted(t.edges)) or "-"
        print(f"{edges:44} {count:>10}  {shape:14} {corank:>5}")
        assert dec.value == count
        assert (dec.factor == 1) == (corank % 2 == 0)

    print()
    print("when T has a perfect matching the square root is itself a count:")
    for seed in (3, 8, 21):
        t = pf.random_tree(6, seed)
        if not pf.has_perfect_matching(t):
            continue
        c4 = pf.count_c4_tree(t).count
        p3 = pf.count_p3_tree(t).count
        print(f"  tree {sorted(t.edges)}:")
        print(f"    Pm(C4 x T) = {c4} = {p3}^2 = Pm(P3 x T)^2")
        assert p3 * p3 == c4


if __name__ == "__main__":
    main()
