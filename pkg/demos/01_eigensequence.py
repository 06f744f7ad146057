"""The left-shift eigensequence for self-composition, three ways.

Run:  python demos/01_eigensequence.py
"""
from eigenperm import (
    TruncatedSeries,
    eigensequence,
    fixed_point_sequence,
    left_shift,
    revert_reciprocal,
    self_composition,
)

# Build the sequence directly: a_1 = 1 and a_{k+1} = [x^k] A(A(x)).
A = eigensequence(12)
print("eigensequence:      ", A.as_ints())

# Composing the series with itself shifts it left by one place.
print("A(A(x)) coefficients:", self_composition(A, 11).as_ints())
print("left shift of A:     ", left_shift(A).as_ints())

# The same numbers are the fixed point of A -> (x / (1 + A(x)))^{<-1>},
# computed here from the explicit partition sum.
print("fixed point (Lagrange):", fixed_point_sequence(12))

# ... and a fixed point of the series form of that transform.
print("transform of A:       ", revert_reciprocal(A, 12).as_ints())

# Exact rationals throughout: transforms of rational input stay exact.
B = TruncatedSeries(["1/2", "-1/3", 2])
print("rational example:     ", [str(c) for c in revert_reciprocal(B, 4)])
