"""Lagrange inversion written as a sum over ordered-tree outdegree censuses.

Run:  python demos/04_lagrange_and_tree_counts.py
"""
from collections import Counter

from eigenperm import TruncatedSeries, lagrange_revert_reciprocal, revert_reciprocal
from eigenperm.lagrange import partition_tree_weight, partitions_freq
from eigenperm.trees import enumerate_trees, outdegree_census, tree_count_by_outdegree

# Partitions of 4 in frequency form, with the tree count each one carries.
for p in partitions_freq(4):
    census = (5 - p.num_parts,) + p.freqs
    print(f"parts {p.parts()!s:14} census {census}  trees {partition_tree_weight(p)}")

# The closed form agrees with brute-force enumeration of shapes.
counts = Counter(outdegree_census(t) for t in enumerate_trees(6))
mismatch = [r for r, c in counts.items() if tree_count_by_outdegree(r) != c]
print("\n6-edge shapes:", sum(counts.values()), "censuses:", len(counts), "mismatches:", mismatch)

# Two routes to the same transform on an arbitrary integer sequence.
a = [2, -1, 0, 3, 5, -4, 1, 1, 0]
print("\nLagrange form:", lagrange_revert_reciprocal(a, 10))
print("series form:  ", revert_reciprocal(TruncatedSeries(a), 10).as_ints())
