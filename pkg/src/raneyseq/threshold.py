"""(k,l)-threshold sequences: validation, properness, cut index, offsets,
lexicographic enumeration and exact counts.

A (k,l)-threshold sequence of length n (k >= 2, 0 <= l <= k-2) is a
strictly increasing integer sequence s_1 < ... < s_n with
k*i + d <= s_i <= k*n + l + d for a fixed offset d (d = 0 by default).
It is proper when s_n hits the upper bound exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Iterator, Sequence

from . import exactmath
from .errors import (
    BoundViolationError,
    BudgetExceededError,
    InvalidParameterError,
    NotIncreasingError,
)


@dataclass(frozen=True)
class ThresholdParams:
    k: int
    l: int
    n: int
    d: int = 0

    def __post_init__(self) -> None:
        if self.k < 2:
            raise InvalidParameterError("k must be >= 2")
        if not 0 <= self.l <= self.k - 2:
            # l = k-1 would merely re-encode length-(n+1) prefixes; reject it
            # so the count contracts stay honest.
            raise InvalidParameterError(f"l must satisfy 0 <= l <= k-2, got l={self.l}")
        if self.n < 0:
            raise InvalidParameterError("n must be >= 0")

    def lower(self, i: int) -> int:
        """Lower bound k*i + d for the i-th value (1-based)."""
        return self.k * i + self.d

    @property
    def upper(self) -> int:
        """Common upper bound k*n + l + d."""
        return self.k * self.n + self.l + self.d


@dataclass(frozen=True)
class ThresholdSequence:
    params: ThresholdParams
    values: tuple[int, ...]

    @property
    def k(self) -> int:
        return self.params.k

    @property
    def l(self) -> int:
        return self.params.l

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def d(self) -> int:
        return self.params.d

    def to_json(self) -> dict:
        return {"k": self.k, "l": self.l, "n": self.n, "d": self.d,
                "values": list(self.values)}

    @classmethod
    def from_json(cls, data: dict | str) -> "ThresholdSequence":
        if isinstance(data, str):
            data = json.loads(data)
        params = ThresholdParams(data["k"], data["l"], data["n"], data.get("d", 0))
        return validate(data["values"], params)


def validate(values: Sequence[int], params: ThresholdParams) -> ThresholdSequence:
    """Check the defining inequalities and return the typed sequence.

    Raises NotIncreasingError or BoundViolationError at the first
    offending (1-based) index.
    """
    values = tuple(values)
    if len(values) != params.n:
        raise InvalidParameterError(
            f"expected {params.n} values, got {len(values)}")
    for i, v in enumerate(values, start=1):
        if i > 1 and v <= values[i - 2]:
            raise NotIncreasingError(i)
        if not params.lower(i) <= v <= params.upper:
            raise BoundViolationError(i, v)
    return ThresholdSequence(params, values)


def is_proper(seq: ThresholdSequence) -> bool:
    """True iff s_n = k*n + l + d."""
    return seq.values[-1] == seq.params.upper


def cut_index(seq: ThresholdSequence) -> int:
    """Largest i < n with s_i < s_n - (n-i)*k, or 0 if none.

    Defined for unshifted sequences only; normalize via shift first.
    """
    if seq.d != 0:
        raise InvalidParameterError("cut_index requires offset 0")
    values, k, n = seq.values, seq.k, seq.n
    for i in range(n - 1, 0, -1):
        if values[i - 1] < values[-1] - (n - i) * k:
            return i
    return 0


def enumerate_sequences(params: ThresholdParams,
                        budget: int | None = None) -> Iterator[ThresholdSequence]:
    """Yield every (k,l)-threshold sequence with the given parameters,
    exactly once, in lexicographic order of value lists."""
    if params.n < 1:
        raise InvalidParameterError("enumeration requires n >= 1")
    upper = params.upper
    yielded = 0
    prefix: list[int] = []

    def extend(i: int) -> Iterator[ThresholdSequence]:
        nonlocal yielded
        if i > params.n:
            yielded += 1
            if budget is not None and yielded > budget:
                raise BudgetExceededError(budget)
            yield ThresholdSequence(params, tuple(prefix))
            return
        start = params.lower(i)
        if prefix:
            start = max(start, prefix[-1] + 1)
        for v in range(start, upper + 1):
            prefix.append(v)
            yield from extend(i + 1)
            prefix.pop()

    yield from extend(1)


def count(params: ThresholdParams) -> int:
    """Number of (k,l)-threshold sequences of length n: the Raney number
    R_n^(k, l+1)."""
    return exactmath.raney(params.k, params.l + 1, params.n)


def count_proper(params: ThresholdParams) -> int:
    """Number of proper (k,l)-threshold sequences of length n.

    For l >= 1 this is R_{n-1}^(k, k+l); for l = 0 every sequence is
    proper, so it equals count.
    """
    if params.n < 1:
        raise InvalidParameterError("count_proper requires n >= 1")
    if params.l == 0:
        return exactmath.raney(params.k, 1, params.n)
    return exactmath.raney(params.k, params.k + params.l, params.n - 1)


def shift(seq: ThresholdSequence, d: int) -> ThresholdSequence:
    """Translate all values and the offset by d (count-preserving)."""
    params = replace(seq.params, d=seq.d + d)
    return ThresholdSequence(params, tuple(v + d for v in seq.values))
