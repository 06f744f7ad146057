"""Exact enumeration and series tools for 3-5bar-2-4-1-avoiding permutations.

The avoiders of ``[n]`` are counted by ``a_{n+1}`` of the unique unital
sequence whose self-composition is its own left shift,
``1, 1, 2, 6, 23, 104, 531, ...``.  This package computes that sequence
by exact series arithmetic and by Lagrange inversion, counts avoiders by
brute force and through cycle-labeled ordered trees, and implements the
permutation/tree bijection underlying the tree count.
"""
from .lagrange import (
    PartitionFreq,
    fixed_point_sequence,
    lagrange_revert_reciprocal,
    multinomial,
    partitions_freq,
)
from .patterns import (
    LRMaxDecomposition,
    avoids_barred_direct,
    avoids_barred_recursive,
    count_avoiders,
    lrmax_decompose,
    occurrences_3241,
    satisfies_condition_i,
    standardize,
)
from .series import (
    TruncatedSeries,
    agreement_unique_solution,
    eigensequence,
    functional_sqrt,
    left_shift,
    revert_reciprocal,
    revert_reciprocal_modified,
    self_composition,
    series_compose,
    series_revert,
    solve_agreement,
)
from .trees import (
    CycleLabeledTree,
    LabeledTree,
    OrderedTree,
    enumerate_trees,
    perm_to_tree,
    tree_count_by_outdegree,
    tree_to_perm,
    validate_cycle_tree,
    weighted_tree_count,
)

__version__ = "0.1.0"
