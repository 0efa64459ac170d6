"""Shared brute-force oracles, kept independent of the library's own
algorithms on purpose."""

from functools import lru_cache


def binomial_by_products(n: int, j: int) -> int:
    """Factorial-free product evaluation of C(n, j)."""
    if j < 0 or j > n:
        return 0
    value = 1
    for i in range(j):
        value = value * (n - i) // (i + 1)
    return value


@lru_cache(maxsize=None)
def count_kary_trees_brute(k: int, n: int) -> int:
    """Count k-ary trees with n internal nodes by direct recursion over
    the first subtree's internal count."""
    if n == 0:
        return 1

    @lru_cache(maxsize=None)
    def tuples(r: int, m: int) -> int:
        if r == 0:
            return 1 if m == 0 else 0
        return sum(count_kary_trees_brute(k, i) * tuples(r - 1, m - i)
                   for i in range(m + 1))

    return tuples(k, n - 1)


def count_classic_motzkin_paths(n: int) -> int:
    """DFS over steps {-1, 0, +1} staying non-negative and ending at 0."""

    def walk(steps_left: int, height: int) -> int:
        if steps_left == 0:
            return 1 if height == 0 else 0
        total = 0
        for step in (-1, 0, 1):
            if height + step >= 0:
                total += walk(steps_left - 1, height + step)
        return total

    return walk(n, 0)
