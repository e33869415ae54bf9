import random
from itertools import combinations
from math import gcd

import pytest

from astute.snf import smith_normal_form


def test_known_forms():
    assert smith_normal_form([[1, 0], [0, 1]]) == [1, 1]
    assert smith_normal_form([[2, 0], [0, 4]]) == [2, 4]
    assert smith_normal_form([[2, 0], [0, 3]]) == [1, 6]


def test_rank_deficient_and_rectangular():
    assert smith_normal_form([[1, 2], [2, 4]]) == [1, 0]
    assert smith_normal_form([[2, 4]]) == [2]
    assert smith_normal_form([[0], [-2]]) == [2]
    assert smith_normal_form([[0, 0], [0, 0]]) == [0, 0]


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        smith_normal_form([[1, 2], [3]])
    with pytest.raises(ValueError):
        smith_normal_form([])


def _minor_gcd(a, size):
    """gcd of all size x size minors (0 if all vanish)."""
    nr, nc = len(a), len(a[0])
    g = 0
    for rows in combinations(range(nr), size):
        for cols in combinations(range(nc), size):
            g = gcd(g, _det([[a[i][j] for j in cols] for i in rows]))
    return g


def _det(m):
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * _det([r[:j] + r[j + 1:] for r in m[1:]])
               for j in range(len(m)))


def test_random_matrices_against_determinantal_divisors():
    rng = random.Random(42)
    for _ in range(120):
        a = [[rng.randint(-9, 9) for _ in range(3)] for _ in range(3)]
        divisors = smith_normal_form(a)
        # divisibility chain
        for x, y in zip(divisors, divisors[1:]):
            if y:
                assert x and y % x == 0
        # product of the first k divisors equals the gcd of k x k minors
        prod = 1
        for k, d in enumerate(divisors, start=1):
            prod = prod * d
            assert prod == _minor_gcd(a, k)
