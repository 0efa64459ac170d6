"""Ballot-word encoding of threshold sequences.

W(S) = A (A^{m_1} B)(A^{m_2} B)...(A^{m_n} B) with m_i = s_i - s_{i-1}
(s_0 = 0): a leading A, then one block per element consisting of m_i
letters A followed by a single B.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate

from .errors import InvalidParameterError, MalformedWordError
from .threshold import ThresholdParams, ThresholdSequence, validate


@dataclass(frozen=True)
class BallotWord:
    k: int
    letters: str

    def __post_init__(self) -> None:
        if self.k < 2:
            raise InvalidParameterError("k must be >= 2")
        if set(self.letters) - {"A", "B"}:
            raise InvalidParameterError("letters must be over {A, B}")

    @property
    def a_count(self) -> int:
        return self.letters.count("A")

    @property
    def b_count(self) -> int:
        return self.letters.count("B")


def to_ballot(seq: ThresholdSequence) -> BallotWord:
    """Encode a threshold sequence as its ballot word W(S)."""
    if seq.d != 0:
        raise InvalidParameterError("to_ballot requires offset 0")
    parts = ["A"]
    prev = 0
    for v in seq.values:
        parts.append("A" * (v - prev) + "B")
        prev = v
    return BallotWord(seq.k, "".join(parts))


def from_ballot(word: BallotWord, k: int, l: int) -> ThresholdSequence:
    """Decode W(S) back to the sequence of block-length prefix sums."""
    letters = word.letters
    if not letters.startswith("A") or not letters.endswith("B"):
        raise MalformedWordError("word must start with A and end with B")
    blocks = letters[1:-1].split("B")
    if any(not block or set(block) != {"A"} for block in blocks):
        raise MalformedWordError("every B must follow a non-empty run of A's")
    values = list(accumulate(len(block) for block in blocks))
    return validate(values, ThresholdParams(k, l, len(values)))


def is_k_ballot_isolated(word: BallotWord, k: int) -> bool:
    """True iff the B's are isolated, the last letter is B, and after each
    B the prefix satisfies #A >= k * #B + 1."""
    letters = word.letters
    if not letters or letters[-1] != "B":
        return False
    a = b = 0
    prev = ""
    for ch in letters:
        if ch == "B":
            if prev != "A":
                return False
            b += 1
            if a < k * b + 1:
                return False
        else:
            a += 1
        prev = ch
    return True
