"""Exact counting formulas: binomial, Fuss-Catalan, Raney, Motzkin.

Every function returns a plain Python int (arbitrary precision).  Closed
forms are evaluated as integer products with an exactness check on each
division; nothing here ever rounds.  All functions are pure and the memo
tables behind the recurrences are append-only, so concurrent callers are
safe.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .errors import InvalidParameterError


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"division {num}/{den} is not exact")
    return q


def binomial(n: int, j: int) -> int:
    """Binomial coefficient C(n, j); zero outside 0 <= j <= n."""
    if n < 0:
        raise InvalidParameterError("binomial requires n >= 0")
    if j < 0 or j > n:
        return 0
    return math.comb(n, j)


def fuss_catalan(k: int, n: int) -> int:
    """Number of k-ary trees with n internal nodes: C(kn, n) / ((k-1)n + 1)."""
    _check_kn(k, n)
    return _exact_div(binomial(k * n, n), (k - 1) * n + 1)


def catalan(n: int) -> int:
    """Catalan number C_n (binary-tree case of fuss_catalan)."""
    return fuss_catalan(2, n)


def raney(k: int, r: int, n: int) -> int:
    """Raney number: (r/(kn+r)) * C(kn+r, n).

    Counts ordered r-tuples of k-ary trees with n internal nodes in total.
    Both known closed forms are evaluated and must agree.
    """
    _check_kn(k, n)
    if r <= 0:
        raise InvalidParameterError("raney requires r >= 1")
    first = _exact_div(r * binomial(k * n + r, n), k * n + r)
    second = _exact_div(r * binomial(k * n + r - 1, n), (k - 1) * n + r)
    if first != second:
        raise ArithmeticError(f"Raney closed forms disagree: {first} != {second}")
    return first


@lru_cache(maxsize=None)
def fuss_catalan_rec(k: int, n: int) -> int:
    """fuss_catalan by its defining recurrence: the k-fold convolution
    over all child internal-node counts summing to n - 1."""
    _check_kn(k, n)
    if n == 0:
        return 1
    return _tuple_count_rec(k, k, n - 1)


@lru_cache(maxsize=None)
def _tuple_count_rec(k: int, r: int, n: int) -> int:
    # r-fold convolution of fuss_catalan_rec values at total n
    if r == 1:
        return fuss_catalan_rec(k, n)
    return sum(fuss_catalan_rec(k, i) * _tuple_count_rec(k, r - 1, n - i)
               for i in range(n + 1))


def raney_convolution(k: int, r: int, n: int) -> int:
    """raney by the r-fold convolution of closed-form fuss_catalan values."""
    _check_kn(k, n)
    if r <= 0:
        raise InvalidParameterError("raney_convolution requires r >= 1")
    base = [fuss_catalan(k, i) for i in range(n + 1)]
    acc = [1] + [0] * n
    for _ in range(r):
        acc = [sum(acc[j] * base[i - j] for j in range(i + 1)) for i in range(n + 1)]
    return acc[n]


def motzkin(n: int) -> int:
    """Motzkin number M_n = sum_j C(n, 2j) * catalan(j)."""
    if n < 0:
        raise InvalidParameterError("motzkin requires n >= 0")
    return sum(binomial(n, 2 * j) * catalan(j) for j in range(n // 2 + 1))


def _check_kn(k: int, n: int) -> None:
    if k < 2:
        raise InvalidParameterError("arity k must be >= 2")
    if n < 0:
        raise InvalidParameterError("n must be >= 0")
