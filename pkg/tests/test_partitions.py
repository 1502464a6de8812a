import itertools
from fractions import Fraction

import pytest
from sympy import partition as npartitions

from admkit.partitions import (CutoffError, affine_sl2_partition, affine_sl2_table, ns_partition,
                               ns_partition_x2, ns_table, vir_partition, vir_table)


@pytest.mark.parametrize("n,count", [(0, 1), (4, 5), (12, 77)])
def test_vir_partition_values(n, count):
    assert vir_partition(n) == count


@pytest.mark.parametrize("n", range(0, 31))
def test_vir_partition_matches_sympy(n):
    assert vir_partition(n) == npartitions(n)


@pytest.mark.parametrize("n,count", [(0, 1), (Fraction(3, 2), 2), (2, 3)])
def test_ns_partition_values(n, count):
    assert ns_partition(n) == count


def _ns_brute(n2):
    # bosonic parts 2, 4, 6, ... (doubled) with repetition; fermionic 1, 3, 5, ... distinct
    count = 0
    odd = list(range(1, n2 + 1, 2))
    for k in range(len(odd) + 1):
        for combo in itertools.combinations(odd, k):
            rest = n2 - sum(combo)
            if rest >= 0 and rest % 2 == 0:
                count += npartitions(rest // 2)
    return count


@pytest.mark.parametrize("n2", range(0, 25))
def test_ns_partition_brute_force(n2):
    assert ns_partition_x2(n2) == _ns_brute(n2)


@pytest.mark.parametrize("grade,count", [((1, 0), 1), ((0, 1), 2), ((1, 1), 3), ((0, 0), 1)])
def test_affine_partition_values(grade, count):
    assert affine_sl2_partition(grade) == count


def _affine_brute(a, b):
    # positive roots (alpha-coefficient, delta-coefficient) with multiplicity one
    roots = [(1, 0)]
    for j in range(1, b + 1):
        roots += [(1, j), (-1, j), (0, j)]

    def count(a, b, idx):
        if (a, b) == (0, 0):
            return 1
        if idx == len(roots) or b < 0:
            return 0
        ra, rb = roots[idx]
        total, n = 0, 0
        while b - n * rb >= 0 and n <= abs(a) + 2 * b + 2:
            total += count(a - n * ra, b - n * rb, idx + 1)
            n += 1
            if rb == 0 and a - n * ra < -2 * b:
                break
        return total

    return count(a, b, 0)


@pytest.mark.parametrize("a,b", [(a, b) for b in range(0, 4) for a in range(-2 * b - 1, 4)])
def test_affine_partition_brute_force(a, b):
    assert affine_sl2_partition((a, b)) == _affine_brute(a, b)


def test_tables_are_consistent():
    t = vir_table(10)
    assert [t[n] for n in range(11)] == [vir_partition(n) for n in range(11)]
    assert ns_table(3)[Fraction(5, 2)] == ns_partition(Fraction(5, 2))
    assert affine_sl2_table(2)[(0, 2)] == affine_sl2_partition((0, 2))


def test_negative_grade_is_zero_or_error():
    assert vir_partition(-1) == 0


def test_half_integer_rejected_for_virasoro():
    with pytest.raises((CutoffError, ValueError, TypeError)):
        vir_partition(Fraction(1, 2))
