"""k-ary trees, w-tree labelings, and the threshold-sequence bijection.

A k-ary tree is either a single leaf (the trivial tree) or an internal
node with exactly k ordered subtrees.  Trees are stored unlabeled;
w-labelings (breadth-first labels w, w-1, ..., w-nk) are computed on
demand.  tuple_of/sequence_of_tuple realize the bijection between
(k,l)-threshold sequences and ordered (l+1)-tuples of k-ary trees.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import (
    BudgetExceededError,
    EmptyTupleError,
    InvalidParameterError,
    UnreachableLabelError,
)
from .threshold import ThresholdParams, ThresholdSequence, validate


@dataclass(frozen=True)
class KaryTree:
    """Unlabeled k-ary tree; children is empty (leaf) or has length k."""

    k: int
    children: tuple["KaryTree", ...] = ()

    def __post_init__(self) -> None:
        if self.k < 2:
            raise InvalidParameterError("arity k must be >= 2")
        if self.children and len(self.children) != self.k:
            raise InvalidParameterError(
                f"internal node needs exactly {self.k} children")
        for child in self.children:
            if child.k != self.k:
                raise InvalidParameterError("child arity mismatch")

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def internal_count(self) -> int:
        count = 0
        stack = [self]
        while stack:
            node = stack.pop()
            if node.children:
                count += 1
                stack.extend(node.children)
        return count

    @property
    def node_count(self) -> int:
        return self.k * self.internal_count + 1

    def to_json(self):
        """Leaf -> None, internal node -> list of k child encodings."""
        if self.is_leaf:
            return None
        return [child.to_json() for child in self.children]

    @classmethod
    def from_json(cls, k: int, data) -> "KaryTree":
        if isinstance(data, str):
            data = json.loads(data)
        if data is None:
            return cls(k)
        return cls(k, tuple(cls.from_json(k, child) for child in data))


def trivial(k: int) -> KaryTree:
    """The trivial tree: a single leaf."""
    return KaryTree(k)


@dataclass(frozen=True)
class TreeTuple:
    """Ordered tuple of k-ary trees (entries may be trivial)."""

    k: int
    trees: tuple[KaryTree, ...]

    def __post_init__(self) -> None:
        if not self.trees:
            raise InvalidParameterError("a tree tuple needs at least one entry")
        for tree in self.trees:
            if tree.k != self.k:
                raise InvalidParameterError("tuple entry arity mismatch")

    @property
    def r(self) -> int:
        return len(self.trees)

    @property
    def internal_total(self) -> int:
        return sum(tree.internal_count for tree in self.trees)

    def to_json(self) -> list:
        return [tree.to_json() for tree in self.trees]

    @classmethod
    def from_json(cls, k: int, data) -> "TreeTuple":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(k, tuple(KaryTree.from_json(k, entry) for entry in data))


def build_from_internal_labels(k: int, w: int,
                               labels: Sequence[int]) -> KaryTree:
    """Build the k-ary w-tree whose internal nodes carry the given labels.

    The labels, in decreasing order l_1 > l_2 > ..., must start at w and
    satisfy l_j >= w - (j-1)*k; otherwise the j-th label would lie below
    every node of the partially built tree.
    """
    ordered = sorted(labels, reverse=True)
    if len(set(ordered)) != len(ordered):
        raise InvalidParameterError("labels must be distinct")
    if not ordered or ordered[0] != w:
        raise InvalidParameterError("largest label must equal w")
    for j, label in enumerate(ordered, start=1):
        if label < w - (j - 1) * k:
            raise UnreachableLabelError(label)

    label_set = set(ordered)
    children_of: dict[int, list[int]] = {}
    next_label = w - 1
    queue: deque[int] = deque([w])
    while queue:
        x = queue.popleft()
        if x in label_set:
            kids = list(range(next_label, next_label - k, -1))
            next_label -= k
            children_of[x] = kids
            queue.extend(kids)
    assert len(children_of) == len(ordered)

    def freeze(x: int) -> KaryTree:
        if x in children_of:
            return KaryTree(k, tuple(freeze(c) for c in children_of[x]))
        return KaryTree(k)

    return freeze(w)


def internal_labels(tree: KaryTree, w: int) -> list[int]:
    """Labels of the internal nodes under the w-labeling, in BFS order."""
    labels = []
    label = w
    queue: deque[KaryTree] = deque([tree])
    while queue:
        node = queue.popleft()
        if node.children:
            labels.append(label)
            queue.extend(node.children)
        label -= 1
    return labels


def _forest_with_levels(seq: ThresholdSequence) -> list[tuple[KaryTree, int]]:
    """Trees A^1, A^2, ... with the level l_p of each residual prefix Q_p."""
    if seq.d != 0:
        raise InvalidParameterError("forest construction requires offset 0")
    k = seq.k
    values = seq.values
    out: list[tuple[KaryTree, int]] = []
    while values:
        m = len(values)
        last = values[-1]
        cut = 0
        for i in range(m - 1, 0, -1):
            if values[i - 1] < last - (m - i) * k:
                cut = i
                break
        tree = build_from_internal_labels(k, last, values[cut:])
        out.append((tree, last - k * m))
        values = values[:cut]
    return out


def forest_of(seq: ThresholdSequence) -> list[KaryTree]:
    """Forest(S): split at successive cut indices, one tree per piece."""
    return [tree for tree, _ in _forest_with_levels(seq)]


def tuple_of(seq: ThresholdSequence) -> TreeTuple:
    """Tuple(S): the (l+1)-tuple with A^p at position l_p + 1 and the
    trivial tree elsewhere."""
    pairs = _forest_with_levels(seq)
    entries = [trivial(seq.k)] * (seq.l + 1)
    prev_level = seq.l + 1
    for tree, level in pairs:
        assert 0 <= level < prev_level, "residual levels must strictly decrease"
        entries[level] = tree
        prev_level = level
    return TreeTuple(seq.k, tuple(entries))


def sequence_of_tuple(t: TreeTuple, n: int | None = None) -> ThresholdSequence:
    """Inverse of tuple_of.

    Labels the non-trivial entry at position y_p (scanning positions right
    to left) as a w_p-tree with w_p = k*(n - r_{p-1}) + y_p - 1, where
    r_p accumulates internal-node counts, and concatenates the increasing
    internal-label runs I_t ... I_1.
    """
    total = t.internal_total
    if total == 0:
        raise EmptyTupleError("all-trivial tuple has no sequence")
    if n is None:
        n = total
    elif n != total:
        raise InvalidParameterError(
            f"tuple has {total} internal nodes, expected {n}")
    k = t.k
    nontrivial = [(pos, tree) for pos, tree in enumerate(t.trees, start=1)
                  if not tree.is_leaf]
    nontrivial.sort(key=lambda item: -item[0])
    segments: list[list[int]] = []
    r_prev = 0
    for y, tree in nontrivial:
        w = k * (n - r_prev) + y - 1
        segments.append(sorted(internal_labels(tree, w)))
        r_prev += tree.internal_count
    values = list(itertools.chain.from_iterable(reversed(segments)))
    return validate(values, ThresholdParams(k, t.r - 1, n))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _all_trees(k: int, n: int) -> tuple[KaryTree, ...]:
    return tuple(_iter_trees(k, n))


def _iter_trees(k: int, n: int) -> Iterator[KaryTree]:
    if n == 0:
        yield KaryTree(k)
        return
    for comp in _compositions(n - 1, k):
        for kids in itertools.product(*(_all_trees(k, j) for j in comp)):
            yield KaryTree(k, kids)


def enumerate_trees(k: int, n: int,
                    budget: int | None = None) -> Iterator[KaryTree]:
    """Yield each k-ary tree with n internal nodes exactly once, ordered by
    the lexicographic child internal-count composition."""
    if k < 2 or n < 0:
        raise InvalidParameterError("need k >= 2 and n >= 0")
    yielded = 0
    for tree in _iter_trees(k, n):
        yielded += 1
        if budget is not None and yielded > budget:
            raise BudgetExceededError(budget)
        yield tree


def enumerate_tuples(k: int, r: int, n: int,
                     budget: int | None = None) -> Iterator[TreeTuple]:
    """Yield all ordered r-tuples of k-ary trees with n internal nodes in
    total, each exactly once."""
    if k < 2 or r < 1 or n < 0:
        raise InvalidParameterError("need k >= 2, r >= 1 and n >= 0")
    yielded = 0
    for comp in _compositions(n, r):
        for trees in itertools.product(*(_all_trees(k, j) for j in comp)):
            yielded += 1
            if budget is not None and yielded > budget:
                raise BudgetExceededError(budget)
            yield TreeTuple(k, trees)


def to_dot(tree: KaryTree, w: int | None = None, name: str = "karytree") -> str:
    """DOT text for a tree; with w given, nodes show their w-labeling."""
    lines = [f"digraph {name} {{", "  node [shape=circle];"]
    label = w
    counter = itertools.count()
    queue: deque[tuple[KaryTree, int]] = deque([(tree, next(counter))])
    while queue:
        node, node_id = queue.popleft()
        text = "" if w is None else str(label)
        shape = "circle" if node.children else "point"
        lines.append(f'  n{node_id} [label="{text}", shape={shape}];')
        if label is not None:
            label -= 1
        for child in node.children:
            child_id = next(counter)
            lines.append(f"  n{node_id} -> n{child_id};")
            queue.append((child, child_id))
    lines.append("}")
    return "\n".join(lines)
