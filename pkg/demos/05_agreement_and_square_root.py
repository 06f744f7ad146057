"""The modified transform, self-composition, and where they agree.

Run:  python demos/05_agreement_and_square_root.py
"""
from eigenperm import (
    TruncatedSeries,
    eigensequence,
    functional_sqrt,
    revert_reciprocal_modified,
    self_composition,
    solve_agreement,
)
from eigenperm.series import transforms_agree

# Dropping the forced leading 1 makes the transform length-preserving.
A = TruncatedSeries([1, 0, 0, 0])
print("modified transform of x:", revert_reciprocal_modified(A, 4).as_ints())

# Solve modified(A) = A(A) one coefficient at a time; each step is linear.
sol, pivots = solve_agreement(12)
print("\nagreement solution:", sol.as_ints())
print("pivots:            ", [str(p) for p in pivots])
print("equals eigensequence:", sol == eigensequence(12))

# Any change to the prefix breaks agreement.
perturbed = list(sol.coeffs)
perturbed[5] += 1
print("perturbed prefix agrees?", transforms_agree(TruncatedSeries(perturbed), 12))
# (the zero sequence is the one degenerate exception, with leading term 0)
print("zero sequence agrees?  ", transforms_agree(TruncatedSeries([0] * 12), 12))

# Self-composition can be undone when the leading coefficient is a positive square.
B = TruncatedSeries([4, 1, -2, 7, 0, 3])
root = functional_sqrt(self_composition(B, 6), 6)
print("\nsqrt(B o B) =", [str(c) for c in root], " recovered:", root == B)
half = functional_sqrt(TruncatedSeries([1, 1, 0, 0, 0]), 5)
print("half-iterate of x + x^2:", [str(c) for c in half])
