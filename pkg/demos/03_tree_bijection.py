"""Permutations with set-increasing blocks <-> cycle-labeled ordered trees.

Run:  python demos/03_tree_bijection.py
"""
import math

from eigenperm.patterns import lrmax_decompose, permutations_of, satisfies_condition_i
from eigenperm.trees import (
    dumps_tree,
    enumerate_cycle_trees,
    perm_to_edge_tree,
    perm_to_tree,
    tree_to_perm,
    weighted_tree_count,
)


def show(tree, depth=0):
    for label, child in zip(tree.labels, tree.children):
        print("  " * depth + f"--{label}--")
        show(child, depth + 1)


p = (3, 1, 2, 5, 4, 11, 7, 6, 8, 12, 14, 13, 10, 9)
d = lrmax_decompose(p)
print("segment lengths a =", d.a, " maxima gaps b =", d.b)

print("\nedge-labeled tree (segments hung below leaves):")
show(perm_to_edge_tree(p))

t = perm_to_tree(p)
print("\ncycle-labeled tree, internal vertices in preorder:")
for v in t.internal_vertices():
    print("   ", v.labels)
print("\nJSON:", dumps_tree(t))
print("inverse recovers the permutation:", tree_to_perm(t) == p)

# Counting both sides: trees weighted by (k-1)! cycles per outdegree k.
print(f"\n{'n':>2} {'perms':>6} {'trees':>6} {'weighted':>9}")
for n in range(8):
    perms = sum(1 for q in permutations_of(n) if satisfies_condition_i(q))
    trees = sum(1 for _ in enumerate_cycle_trees(n))
    weighted = weighted_tree_count(n, [math.factorial(k - 1) for k in range(1, n + 1)])
    print(f"{n:>2} {perms:>6} {trees:>6} {weighted:>9}")
