"""Brute-force oracles and the full identity/bijection check suites.

Every suite recomputes each quantity along at least two independent
routes (closed form vs recurrence vs exhaustive enumeration) and records
one cell per comparison.  The oracles deliberately use different
algorithms from the main modules, so agreement is evidence rather than
tautology.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from . import ballot, exactmath, paths, threshold, trees
from .errors import BudgetExceededError
from .exactmath import binomial, catalan, raney
from .threshold import ThresholdParams

DEFAULT_BUDGET = 10 ** 6


@dataclass
class Cell:
    params: dict
    expected: object
    observed: object

    @property
    def ok(self) -> bool:
        return self.expected == self.observed

    def to_json(self) -> dict:
        return {"params": self.params, "expected": str(self.expected),
                "observed": str(self.observed), "pass": self.ok}


@dataclass
class VerifyReport:
    suite: str
    cells: list[Cell] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(cell.ok for cell in self.cells)

    @property
    def failures(self) -> list[Cell]:
        return [cell for cell in self.cells if not cell.ok]

    def add(self, params: dict, expected, observed) -> None:
        self.cells.append(Cell(params, expected, observed))

    def to_json(self) -> dict:
        return {"suite": self.suite, "pass": self.passed,
                "elapsed": self.elapsed,
                "cells": [cell.to_json() for cell in self.cells]}


class _timed:
    def __init__(self, report: VerifyReport):
        self.report = report

    def __enter__(self) -> VerifyReport:
        self.start = time.perf_counter()
        return self.report

    def __exit__(self, *exc) -> None:
        self.report.elapsed = time.perf_counter() - self.start


def oracle_sequences(k: int, l: int, n: int,
                     budget: int = DEFAULT_BUDGET) -> tuple[int, set[tuple[int, ...]]]:
    """Count (k,l)-threshold sequences by filtering all strictly increasing
    n-subsets of [k, kn+l] on the lower bounds s_i >= k*i.

    Independent of threshold.enumerate_sequences (subset filter, not
    backtracking).  Returns (count, set of value tuples).
    """
    pool = range(k, k * n + l + 1)
    if math.comb(len(pool), n) > budget * 8:
        raise BudgetExceededError(budget)
    mins = tuple(k * i for i in range(1, n + 1))
    found = set()
    for cand in combinations(pool, n):
        if all(v >= m for v, m in zip(cand, mins)):
            found.add(cand)
            if len(found) > budget:
                raise BudgetExceededError(budget)
    return len(found), found


def _ab_by_mixed_recurrences(n_max: int) -> tuple[list[int], list[int]]:
    """a_n, b_n by the left-to-right standard/high-value recurrences
    (valid for n >= 2, seeded with a_1 = 1, b_1 = 2)."""
    a, b = [1, 1], [1, 2]
    for n in range(2, n_max + 1):
        mixed = sum((a[h] + b[h]) * a[n - h - 1] for h in range(1, n - 1))
        a.append(3 * a[n - 1] + mixed)
        mixed_b = sum((a[h] + b[h]) * b[n - h - 1] for h in range(1, n - 1))
        b.append(3 * b[n - 1] + mixed_b + a[n - 1])
    return a, b


def _ab_by_convolutions(n_max: int) -> tuple[list[int], list[int]]:
    """a_n = sum_h a_h b_{n-1-h}, b_n = sum_h a_h a_{n-h} (right-to-left
    counts), seeded only with a_0 = b_0 = 1."""
    a, b = [1], [1]
    for n in range(1, n_max + 1):
        a.append(sum(a[h] * b[n - 1 - h] for h in range(n)))
        b.append(sum(a[h] * a[n - h] for h in range(n + 1)))
    return a, b


def check_section2_recurrences(n_max: int,
                               oracle_up_to: int = 7) -> VerifyReport:
    """Quadruple agreement for the simple/double 3-threshold counts a_n,
    b_n: both recurrence systems, the closed forms T_n/U_n, and (for
    small n) the exhaustive oracle."""
    report = VerifyReport("section2-recurrences")
    with _timed(report):
        a_mix, b_mix = _ab_by_mixed_recurrences(n_max)
        a_conv, b_conv = _ab_by_convolutions(n_max)
        for n in range(n_max + 1):
            t_n = raney(3, 1, n)
            u_n = raney(3, 2, n)
            report.add({"n": n, "which": "a", "route": "mixed"}, t_n, a_mix[n])
            report.add({"n": n, "which": "a", "route": "conv"}, t_n, a_conv[n])
            report.add({"n": n, "which": "b", "route": "mixed"}, u_n, b_mix[n])
            report.add({"n": n, "which": "b", "route": "conv"}, u_n, b_conv[n])
            if 1 <= n <= oracle_up_to:
                report.add({"n": n, "which": "a", "route": "oracle"},
                           t_n, oracle_sequences(3, 0, n)[0])
                report.add({"n": n, "which": "b", "route": "oracle"},
                           u_n, oracle_sequences(3, 1, n)[0])
    return report


def check_prop4(n_max: int) -> VerifyReport:
    """b_n - a_n = sum a_h a_{n-h} = sum b_h b_{n-h-1}
    = (2/(n+1)) * C(3n, n-1) = R_{n-1}^(3,4), for n >= 1."""
    report = VerifyReport("prop4-difference")
    with _timed(report):
        a = [raney(3, 1, i) for i in range(n_max + 1)]
        b = [raney(3, 2, i) for i in range(n_max + 1)]
        for n in range(1, n_max + 1):
            diff = b[n] - a[n]
            report.add({"n": n, "form": "sum a_h a_{n-h}"},
                       diff, sum(a[h] * a[n - h] for h in range(n)))
            report.add({"n": n, "form": "sum b_h b_{n-h-1}"},
                       diff, sum(b[h] * b[n - h - 1] for h in range(n)))
            closed = Fraction(2, n + 1) * binomial(3 * n, n - 1)
            report.add({"n": n, "form": "(2/(n+1)) C(3n,n-1)"}, diff, closed)
            report.add({"n": n, "form": "raney(3,4,n-1)"},
                       diff, raney(3, 4, n - 1))
            report.add({"n": n, "form": "raney_convolution(3,4,n-1)"},
                       diff, exactmath.raney_convolution(3, 4, n - 1))
    return report


def check_catalan_pow2(n_max: int) -> VerifyReport:
    """Catalan identity C_n = sum_{r+s+t=n-1, r,s>=1} C_r C_s 2^t + 2^{n-1},
    plus its double-sum precursor over (a, b)."""
    report = VerifyReport("catalan-pow2")
    with _timed(report):
        c = [catalan(i) for i in range(n_max + 1)]
        for n in range(1, n_max + 1):
            triple = sum(c[r] * c[s] * 2 ** (n - 1 - r - s)
                         for r in range(1, n)
                         for s in range(1, n - r)) + 2 ** (n - 1)
            report.add({"n": n, "form": "triple-sum"}, c[n], triple)
            double = sum(c[b + 1] * c[a - 1 - b] * 2 ** (n - 1 - a)
                         for a in range(2, n)
                         for b in range(a - 1)) + 2 ** (n - 1)
            report.add({"n": n, "form": "double-sum"}, c[n], double)
    return report


def check_prop6(n_max: int) -> VerifyReport:
    """Exact rational identities
    2 sum T_h T_{n-h-1}/(h+1) = 3 U_{n-1} - T_n and
    2 sum U_h U_{n-h-1}/(3h+1) = 4 T_n - U_n."""
    report = VerifyReport("prop6-rational")
    with _timed(report):
        t = [raney(3, 1, i) for i in range(n_max + 1)]
        u = [raney(3, 2, i) for i in range(n_max + 1)]
        for n in range(1, n_max + 1):
            left1 = 2 * sum(Fraction(t[h] * t[n - h - 1], h + 1)
                            for h in range(n))
            report.add({"n": n, "relation": "T"},
                       Fraction(3 * u[n - 1] - t[n]), left1)
            left2 = 2 * sum(Fraction(u[h] * u[n - h - 1], 3 * h + 1)
                            for h in range(n))
            report.add({"n": n, "relation": "U"},
                       Fraction(4 * t[n] - u[n]), left2)
    return report


def check_raney_difference(k: int, l: int, n_max: int) -> VerifyReport:
    """R_n^(k,l+1) - R_n^(k,l) = R_{n-1}^(k,k+l) for 1 <= l <= k-2."""
    report = VerifyReport("raney-difference")
    with _timed(report):
        for n in range(1, n_max + 1):
            report.add({"k": k, "l": l, "n": n},
                       raney(k, l + 1, n) - raney(k, l, n),
                       raney(k, k + l, n - 1))
    return report


def check_bijections(k: int, l: int, n: int,
                     budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """Round-trip and surjectivity checks for tuple_of, path_of and the
    ballot encoding over the fully enumerated (k, l, n) cell.

    On a failure the offending object is recorded verbatim in the cell.
    """
    report = VerifyReport("bijections")
    with _timed(report):
        params = ThresholdParams(k, l, n)
        seqs = list(threshold.enumerate_sequences(params, budget=budget))

        tuple_images = set()
        path_images = set()
        ok = True
        for seq in seqs:
            t = trees.tuple_of(seq)
            back = trees.sequence_of_tuple(t, n)
            if back.values != seq.values:
                report.add({"check": "tuple-roundtrip", "seq": list(seq.values)},
                           list(seq.values), list(back.values))
                ok = False
            tuple_images.add(t)
            p = paths.path_of(seq)
            back_p = paths.sequence_of_path(p, l)
            if back_p.values != seq.values:
                report.add({"check": "path-roundtrip", "seq": list(seq.values)},
                           list(seq.values), list(back_p.values))
                ok = False
            path_images.add(p)
            w = ballot.to_ballot(seq)
            back_w = ballot.from_ballot(w, k, l)
            if back_w.values != seq.values:
                report.add({"check": "ballot-roundtrip", "seq": list(seq.values)},
                           list(seq.values), list(back_w.values))
                ok = False
            if not ballot.is_k_ballot_isolated(w, k):
                report.add({"check": "ballot-isolated", "seq": list(seq.values)},
                           True, False)
                ok = False
        if ok:
            report.add({"check": "roundtrips", "k": k, "l": l, "n": n},
                       len(seqs), len(seqs))

        codomain = set(trees.enumerate_tuples(k, l + 1, n, budget=budget))
        report.add({"check": "tuple-injective", "k": k, "l": l, "n": n},
                   len(seqs), len(tuple_images))
        report.add({"check": "tuple-surjective", "k": k, "l": l, "n": n},
                   0, len(codomain - tuple_images) + len(tuple_images - codomain))

        all_paths = set(paths.enumerate_paths(k, l, n, budget=budget))
        report.add({"check": "path-injective", "k": k, "l": l, "n": n},
                   len(seqs), len(path_images))
        report.add({"check": "path-surjective", "k": k, "l": l, "n": n},
                   0, len(all_paths - path_images) + len(path_images - all_paths))
    return report


def check_ballot_claim(k_values: Iterable[int] = (2, 3),
                       n_max: int = 6) -> VerifyReport:
    """Measure which reading of the ballot-word count matches the Raney
    number R_b^(k, a-kb) with a = kn+l+1 and b = n.

    Two readings per cell: the number of all (k,l)-threshold sequences,
    and the number of encoded words that actually carry a letters A (the
    words whose last letter is B), which are exactly the proper ones.
    """
    report = VerifyReport("ballot-claim")
    with _timed(report):
        for k in k_values:
            for l in range(k - 1):
                for n in range(1, n_max + 1):
                    a, b = k * n + l + 1, n
                    target = raney(k, a - k * b, b)
                    params = ThresholdParams(k, l, n)
                    seqs = list(threshold.enumerate_sequences(params))
                    words = [ballot.to_ballot(seq) for seq in seqs]
                    exact_a = sum(1 for w in words if w.a_count == a)
                    report.add({"k": k, "l": l, "n": n, "a": a, "b": b,
                                "reading": "all-sequences"},
                               target, len(words))
                    report.add({"k": k, "l": l, "n": n, "a": a, "b": b,
                                "reading": "exact-a-words",
                                "note": "matches proper count, not the claim"
                                        if l >= 1 else "l=0: all proper"},
                               raney(k, k + l, n - 1) if l >= 1 else target,
                               exact_a)
    return report


def ballot_claim_summary(report: VerifyReport) -> dict:
    """Condense a ballot-claim report into which reading matched."""
    all_cells = [c for c in report.cells
                 if c.params["reading"] == "all-sequences"]
    exact_cells = [c for c in report.cells
                   if c.params["reading"] == "exact-a-words"]
    return {
        "all_sequences_match_raney": all(c.ok for c in all_cells),
        "exact_a_words_match_proper_count": all(c.ok for c in exact_cells),
        "conclusion": (
            "The Raney number R_b^(k,a-kb) counts all (k,l)-threshold "
            "sequences; the literally encoded words carry a letters A only "
            "for proper sequences, whose number is R_{n-1}^(k,k+l)."),
        "cells": [c.to_json() for c in report.cells],
    }


def identity_suites(n_max_overrides: dict | None = None) -> list[VerifyReport]:
    """Run every identity suite at its default depth."""
    depths = {"section2": 25, "prop4": 40, "catalan": 60, "prop6": 50,
              "raney_diff": 30}
    if n_max_overrides:
        depths.update(n_max_overrides)
    reports = [
        check_section2_recurrences(depths["section2"]),
        check_prop4(depths["prop4"]),
        check_catalan_pow2(depths["catalan"]),
        check_prop6(depths["prop6"]),
    ]
    for k in range(2, 7):
        for l in range(1, k - 1):
            reports.append(check_raney_difference(k, l, depths["raney_diff"]))
    return reports
