"""Extended Motzkin paths with long up and down steps.

A (k,l)-extended Motzkin path is a lattice path of rises r_i with
r_i >= 1 (up), r_i = 0 (flat) or -(k-1) <= r_i <= -1 (down), whose
prefix heights never go below zero and whose final height is at most l.
path_of/sequence_of_path realize the rise-based bijection with
(k,l)-threshold sequences: y_i = s_i - i*k.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

from .errors import (
    BudgetExceededError,
    HeightExceedsLimitError,
    InvalidParameterError,
)
from .threshold import ThresholdParams, ThresholdSequence, validate


@dataclass(frozen=True)
class ExtMotzkinPath:
    k: int
    rises: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 2:
            raise InvalidParameterError("k must be >= 2")
        height = 0
        for i, rise in enumerate(self.rises, start=1):
            if rise < -(self.k - 1):
                raise InvalidParameterError(
                    f"down step {rise} at position {i} exceeds k-1 = {self.k - 1}")
            height += rise
            if height < 0:
                raise InvalidParameterError(
                    f"path goes below the x-axis after step {i}")

    @property
    def n(self) -> int:
        return len(self.rises)

    @property
    def heights(self) -> tuple[int, ...]:
        """Prefix sums y_1, ..., y_n."""
        out = []
        height = 0
        for rise in self.rises:
            height += rise
            out.append(height)
        return tuple(out)

    @property
    def end_height(self) -> int:
        return sum(self.rises)

    def to_json(self) -> dict:
        return {"k": self.k, "rises": list(self.rises)}

    @classmethod
    def from_json(cls, data: dict | str) -> "ExtMotzkinPath":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["k"], tuple(data["rises"]))


def path_of(seq: ThresholdSequence) -> ExtMotzkinPath:
    """Path(S): rise_i = s_i - s_{i-1} - k, with s_0 = 0."""
    if seq.d != 0:
        raise InvalidParameterError("path_of requires offset 0")
    prev = 0
    rises = []
    for v in seq.values:
        rises.append(v - prev - seq.k)
        prev = v
    return ExtMotzkinPath(seq.k, tuple(rises))


def sequence_of_path(path: ExtMotzkinPath, l: int) -> ThresholdSequence:
    """Inverse of path_of: s_i = y_i + i*k, validated as a (k,l)-sequence."""
    if not 0 <= l <= path.k - 2:
        raise InvalidParameterError(f"l must satisfy 0 <= l <= k-2, got {l}")
    if path.end_height > l:
        raise HeightExceedsLimitError(path.end_height, l)
    values = [y + i * path.k for i, y in enumerate(path.heights, start=1)]
    return validate(values, ThresholdParams(path.k, l, path.n))


def enumerate_paths(k: int, l: int, n: int,
                    budget: int | None = None) -> Iterator[ExtMotzkinPath]:
    """Yield every (k,l)-extended Motzkin path of length n exactly once.

    Up steps are bounded by the end-height reachability limit
    y_i <= l + (n-i)*(k-1), which makes the search finite; rises are
    explored in increasing numeric order.
    """
    if k < 2 or not 0 <= l <= k - 2 or n < 1:
        raise InvalidParameterError("need k >= 2, 0 <= l <= k-2 and n >= 1")
    yielded = 0
    rises: list[int] = []

    def extend(i: int, height: int) -> Iterator[ExtMotzkinPath]:
        nonlocal yielded
        if i > n:
            if height <= l:
                yielded += 1
                if budget is not None and yielded > budget:
                    raise BudgetExceededError(budget)
                yield ExtMotzkinPath(k, tuple(rises))
            return
        low = -min(k - 1, height)
        high = l + (n - i) * (k - 1) - height
        for rise in range(low, high + 1):
            rises.append(rise)
            yield from extend(i + 1, height + rise)
            rises.pop()

    yield from extend(1, 0)


def is_classic_motzkin(path: ExtMotzkinPath) -> bool:
    """True iff every rise is in {-1, 0, 1} and the path returns to 0."""
    return all(-1 <= r <= 1 for r in path.rises) and path.end_height == 0


def render_ascii(path: ExtMotzkinPath) -> str:
    """One column per lattice point, '*' at the path's points."""
    points = [0, *path.heights]
    top = max(points)
    rows = []
    for level in range(top, -1, -1):
        rows.append("".join("*" if y == level else "." for y in points))
    return "\n".join(rows)
