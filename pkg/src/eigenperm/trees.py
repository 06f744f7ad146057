"""Ordered trees, cycle-labeled trees and their bijection with permutations
whose left-to-right-maxima blocks are set-increasing.

Forward map, for ``pi = m_1 L_1 / ... / m_r L_r``: hang ``a_r`` edges
labeled ``m_r L_r`` from the root, then hang each earlier segment below a
leaf chosen by the gaps ``b_i = m_i - m_{i-1}``.  A cursor holds the
preorder leaf position of the first leaf made by the latest attachment;
segment ``i`` goes under the leaf at position ``cursor + b_{i+1} - 1``
and the cursor moves to that position.  After the last attachment,
``b_1 == leaves - cursor + 1``.  Finally every child-edge label list
``m L`` is rewritten as the standard cycle ``(k, standardize(L))`` where
``k`` is the outdegree.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import (
    ConditionIViolation,
    InvalidCensus,
    InvalidTree,
    LimitExceeded,
    ParseError,
    VerificationError,
)
from .lagrange import multinomial, partitions_freq
from .patterns import (
    Perm,
    destandardize,
    is_standard,
    lrmax_decompose,
    satisfies_condition_i,
    standardize,
)

MAX_ENUMERATE_EDGES = 12
MAX_WEIGHTED_ENUMERATE = 10


@dataclass(frozen=True)
class OrderedTree:
    children: Tuple["OrderedTree", ...] = ()

    @property
    def outdegree(self) -> int:
        return len(self.children)

    @property
    def edges(self) -> int:
        return sum(1 + c.edges for c in self.children)

    def preorder(self) -> Iterator["OrderedTree"]:
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))


@dataclass(frozen=True)
class LabeledTree:
    """Ordered tree with a label on every child edge.

    ``labels[i]`` labels the edge to ``children[i]``.  Used both for the
    intermediate edge-labeled tree and for cycle-labeled trees.
    """

    labels: Tuple[int, ...] = ()
    children: Tuple["LabeledTree", ...] = ()

    @property
    def outdegree(self) -> int:
        return len(self.children)

    @property
    def edges(self) -> int:
        return sum(1 + c.edges for c in self.children)

    def preorder(self) -> Iterator["LabeledTree"]:
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def internal_vertices(self) -> List["LabeledTree"]:
        return [v for v in self.preorder() if v.children]

    def shape(self) -> OrderedTree:
        return OrderedTree(tuple(c.shape() for c in self.children))

    def to_json(self) -> Dict[str, Any]:
        return {"labels": list(self.labels), "children": [c.to_json() for c in self.children]}

    @classmethod
    def from_json(cls, obj: Any) -> "LabeledTree":
        if not isinstance(obj, dict) or set(obj) != {"labels", "children"}:
            raise ParseError("tree node must be an object with exactly 'labels' and 'children'")
        labels, children = obj["labels"], obj["children"]
        if not isinstance(labels, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in labels
        ):
            raise ParseError("'labels' must be a list of integers")
        if not isinstance(children, list):
            raise ParseError("'children' must be a list")
        if len(labels) != len(children):
            raise ParseError(f"{len(labels)} labels for {len(children)} child edges")
        return cls(tuple(labels), tuple(cls.from_json(c) for c in children))


CycleLabeledTree = LabeledTree


def dumps_tree(tree: LabeledTree) -> str:
    return json.dumps(tree.to_json(), separators=(",", ":"))


def loads_tree(text: str) -> LabeledTree:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid tree JSON: {exc}") from None
    return LabeledTree.from_json(obj)


# -- ordered tree enumeration and counting ---------------------------------


@lru_cache(maxsize=None)
def _trees(n: int) -> Tuple[OrderedTree, ...]:
    if n == 0:
        return (OrderedTree(),)
    out = []
    # first child subtree has k edges; the root keeps n-1-k edges for the rest
    for k in range(n):
        for first in _trees(k):
            for rest in _trees(n - 1 - k):
                out.append(OrderedTree((first,) + rest.children))
    return tuple(out)


def enumerate_trees(n: int, max_n: int = MAX_ENUMERATE_EDGES) -> Iterator[OrderedTree]:
    """Every ordered tree with ``n`` edges, exactly once."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > max_n:
        raise LimitExceeded(f"tree enumeration limited to {max_n} edges, got {n}")
    return iter(_trees(n))


def outdegree_census(tree) -> Tuple[int, ...]:
    """``(r_0, ..., r_n)`` with ``r_i`` the number of vertices having ``i`` children."""
    n = tree.edges
    r = [0] * (n + 1)
    for v in tree.preorder():
        r[v.outdegree] += 1
    return tuple(r)


def tree_count_by_outdegree(r: Sequence[int]) -> int:
    """Number of ordered trees with outdegree census ``r = (r_0, ..., r_n)``."""
    r = tuple(r)
    n = len(r) - 1
    if n < 0 or any(x < 0 for x in r):
        raise InvalidCensus(f"bad census {r}")
    if sum(r) != n + 1 or sum(i * x for i, x in enumerate(r)) != n:
        raise InvalidCensus(f"census {r} violates vertex/edge totals for n={n}")
    q, rem = divmod(multinomial(n + 1, r), n + 1)
    if rem:
        raise VerificationError(f"tree count for {r} is not an integer")
    return q


def outdegree_sequences(n: int) -> Iterator[Tuple[int, ...]]:
    """Every valid census ``(r_0, ..., r_n)`` for trees with ``n`` edges."""
    if n == 0:
        yield (1,)
        return
    for p in partitions_freq(n):
        yield (n + 1 - p.num_parts,) + p.freqs


def weighted_tree_count(n: int, w: Sequence[int], mode: str = "formula") -> int:
    """Sum over ordered trees with ``n`` edges of the product of
    ``w[k-1]`` over internal vertices of outdegree ``k``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if len(w) < n:
        raise ValueError(f"need weights w_1..w_{n}, got {len(w)}")
    if mode == "enumerate":
        if n > MAX_WEIGHTED_ENUMERATE:
            raise LimitExceeded(f"enumerate mode limited to {MAX_WEIGHTED_ENUMERATE} edges")
        total = 0
        for t in enumerate_trees(n):
            term = 1
            for v in t.preorder():
                if v.children:
                    term *= w[v.outdegree - 1]
            total += term
        return total
    if mode == "formula":
        total = 0
        for r in outdegree_sequences(n):
            term = tree_count_by_outdegree(r)
            for i in range(1, n + 1):
                if r[i]:
                    term *= w[i - 1] ** r[i]
            total += term
        return total
    raise ValueError(f"unknown mode {mode!r}")


# -- cycle-labeled trees ---------------------------------------------------


def is_standard_cycle(labels: Sequence[int]) -> bool:
    k = len(labels)
    return k > 0 and labels[0] == k and sorted(labels) == list(range(1, k + 1))


def validate_cycle_tree(tree: LabeledTree) -> Tuple[bool, List[str]]:
    """Check every internal vertex carries a standard cycle on its child edges.

    Returns ``(ok, diagnostics)``; vertices are named by preorder index.
    """
    problems = []
    for idx, v in enumerate(tree.preorder()):
        if len(v.labels) != len(v.children):
            problems.append(f"vertex {idx}: {len(v.labels)} labels for {len(v.children)} children")
        elif v.children and not is_standard_cycle(v.labels):
            problems.append(f"vertex {idx}: labels {list(v.labels)} are not a standard cycle "
                            f"of length {len(v.children)}")
    return not problems, problems


def standard_cycles(k: int) -> Iterator[Tuple[int, ...]]:
    for body in itertools.permutations(range(1, k)):
        yield (k,) + body


def _labelings(shape: OrderedTree) -> Iterator[LabeledTree]:
    if not shape.children:
        yield LabeledTree()
        return
    child_options = [list(_labelings(c)) for c in shape.children]
    for cycle in standard_cycles(shape.outdegree):
        for kids in itertools.product(*child_options):
            yield LabeledTree(cycle, tuple(kids))


def enumerate_cycle_trees(n: int, max_n: int = 8) -> Iterator[LabeledTree]:
    """Every valid cycle-labeled tree with ``n`` edges."""
    if n > max_n:
        raise LimitExceeded(f"cycle-tree enumeration limited to {max_n} edges")
    for shape in enumerate_trees(n):
        yield from _labelings(shape)


# -- the bijection ---------------------------------------------------------


class _Node:
    __slots__ = ("labels", "children")

    def __init__(self):
        self.labels: List[int] = []
        self.children: List[_Node] = []

    def freeze(self) -> LabeledTree:
        return LabeledTree(tuple(self.labels), tuple(c.freeze() for c in self.children))

    @classmethod
    def thaw(cls, tree: LabeledTree) -> "_Node":
        node = cls()
        node.labels = list(tree.labels)
        node.children = [cls.thaw(c) for c in tree.children]
        return node


def _preorder_nodes(root: _Node) -> List[_Node]:
    out, stack = [], [root]
    while stack:
        node = stack.pop()
        out.append(node)
        stack.extend(reversed(node.children))
    return out


def _frontier(root: _Node, expanded: Optional[set] = None) -> List[_Node]:
    """Preorder leaves of the partial tree in which only ``expanded`` nodes
    (by identity) have been given children; ``None`` means all of them."""
    out, stack = [], [root]
    while stack:
        node = stack.pop()
        if node.children and (expanded is None or id(node) in expanded):
            stack.extend(reversed(node.children))
        else:
            out.append(node)
    return out


def _check_input(perm: Sequence[int]) -> None:
    if not is_standard(perm):
        raise ValueError(f"permutation {tuple(perm)} is not standard")
    if not satisfies_condition_i(perm):
        raise ConditionIViolation(
            f"permutation {tuple(perm)} violates condition (i): blocks between "
            "left-to-right maxima are not set-increasing")


def perm_to_edge_tree(perm: Sequence[int]) -> LabeledTree:
    """Edge-labeled tree whose internal vertices carry the segments ``m_i L_i``."""
    _check_input(perm)
    root = _Node()
    if not perm:
        return root.freeze()
    dec = lrmax_decompose(perm)
    words = [(m,) + block for m, block in dec.segments]
    b = dec.b
    r = len(words)
    root.labels = list(words[-1])
    root.children = [_Node() for _ in words[-1]]
    cursor = 1
    for i in range(r - 2, -1, -1):
        leaves = _frontier(root)
        pos = cursor + b[i + 1] - 1
        if not 1 <= pos <= len(leaves):
            raise VerificationError(f"attachment position {pos} outside 1..{len(leaves)}")
        target = leaves[pos - 1]
        target.labels = list(words[i])
        target.children = [_Node() for _ in words[i]]
        cursor = pos
    if b[0] != len(_frontier(root)) - cursor + 1:
        raise VerificationError("terminal leaf count inconsistent with first gap")
    return root.freeze()


def edge_tree_to_cycle_tree(tree: LabeledTree) -> LabeledTree:
    """Replace each label list ``m L`` by the standard cycle ``(k, std(L))``."""
    if not tree.children:
        return LabeledTree()
    k = tree.outdegree
    labels = (k,) + standardize(tree.labels[1:])
    return LabeledTree(labels, tuple(edge_tree_to_cycle_tree(c) for c in tree.children))


def perm_to_tree(perm: Sequence[int]) -> LabeledTree:
    """Cycle-labeled tree with ``len(perm)`` edges encoding ``perm``."""
    return edge_tree_to_cycle_tree(perm_to_edge_tree(perm))


def tree_to_perm(tree: LabeledTree) -> Perm:
    """Inverse of :func:`perm_to_tree`."""
    ok, problems = validate_cycle_tree(tree)
    if not ok:
        raise InvalidTree("; ".join(problems))
    n = tree.edges
    if n == 0:
        return ()
    root = _Node.thaw(tree)
    internal = [v for v in _preorder_nodes(root) if v.children]
    r = len(internal)
    # internal[0] is segment r, internal[1] segment r-1, ... (1-based segments)
    a = [len(v.children) for v in reversed(internal)]
    b = [0] * r
    expanded = {id(root)}
    cursor = 1
    for idx in range(1, r):
        leaves = _frontier(root, expanded)
        pos = next(i for i, v in enumerate(leaves, start=1) if v is internal[idx])
        gap = pos - cursor + 1
        if gap < 1:
            raise InvalidTree(f"internal vertex {idx} precedes the attachment cursor")
        b[r - idx] = gap
        expanded.add(id(internal[idx]))
        cursor = pos
    b[0] = len(_frontier(root, expanded)) - cursor + 1

    maxima = list(itertools.accumulate(b))
    if maxima[-1] != n:
        raise InvalidTree(f"recovered maxima {maxima} do not end at {n}")
    rest = sorted(set(range(1, n + 1)) - set(maxima))
    word: List[int] = []
    start = 0
    for i in range(r):
        size = a[i] - 1
        support = rest[start : start + size]
        start += size
        if support and max(support) > maxima[i]:
            raise InvalidTree(f"block {i + 1} support {support} exceeds its maximum {maxima[i]}")
        body = internal[r - 1 - i].labels[1:]
        word.append(maxima[i])
        word.extend(destandardize(body, support))
    return tuple(word)


def count_avoiders_by_trees(n: int) -> int:
    """Count 3-5bar-2-4-1 avoiders of ``[n]`` as cycle-labeled trees whose
    cycles avoid the pattern, enumerating tree shapes directly.

    An avoiding cycle of length ``k`` is ``k`` followed by an avoider of
    ``[k-1]``, so the weight of outdegree ``k`` is the count for ``k-1``,
    obtained by the same procedure.
    """
    if n > MAX_WEIGHTED_ENUMERATE:
        raise LimitExceeded(f"tree counting limited to {MAX_WEIGHTED_ENUMERATE} edges")
    counts = [1]
    for m in range(1, n + 1):
        counts.append(weighted_tree_count(m, counts, "enumerate"))
    return counts[n]
