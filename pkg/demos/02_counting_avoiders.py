"""Counting 3-5bar-2-4-1-avoiding permutations by four independent routes.

Run:  python demos/02_counting_avoiders.py
"""
import time

from eigenperm import avoids_barred_direct, avoids_barred_recursive, count_avoiders, eigensequence
from eigenperm.lagrange import fixed_point_sequence
from eigenperm.patterns import lrmax_decompose, occurrences_3241
from eigenperm.trees import count_avoiders_by_trees

# 3241 alone fails; wrapping a larger entry between the 3 and the 2 rescues it.
for word in [(3, 2, 4, 1), (3, 5, 2, 4, 1)]:
    print(word, "3241 occurrences:", occurrences_3241(word),
          "avoids:", avoids_barred_direct(word))

# The recursive test looks at the blocks between left-to-right maxima.
d = lrmax_decompose((3, 1, 2, 5, 4, 11, 7, 6, 8, 12, 14, 13, 10, 9))
print("maxima", d.maxima, "blocks", d.blocks)
print("recursive checker:", avoids_barred_recursive(d.word()))

N = 8
fixed = fixed_point_sequence(N + 2)
eigen = eigensequence(N + 2).as_ints()
print(f"\n{'n':>2} {'brute':>7} {'trees':>7} {'Lagrange':>9} {'series':>7}")
for n in range(N + 1):
    t = time.perf_counter()
    brute = count_avoiders(n)
    trees = count_avoiders_by_trees(n)
    print(f"{n:>2} {brute:>7} {trees:>7} {fixed[n]:>9} {eigen[n]:>7}"
          f"   ({time.perf_counter() - t:.2f} s)")
