from fractions import Fraction

import pytest

from admkit.detformulas import (affine_sl2_factors, compare_affine_sl2, compare_ns, compare_vir,
                                ns_factors, vir_factors)
from admkit.exactmath import MultiPoly
from admkit.shapovalov import AffineSl2Engine, NeveuSchwarzEngine, VirasoroEngine

V, N = VirasoroEngine(), NeveuSchwarzEngine()


@pytest.mark.parametrize("depth", range(1, 6))
def test_vir_formula_matches_engine(depth):
    cmp = compare_vir(V.shapovalov_det(depth), depth)
    assert cmp.ok


@pytest.mark.parametrize("n2", range(1, 7))
def test_ns_formula_matches_engine(n2):
    assert compare_ns(N.shapovalov_det(Fraction(n2, 2)), Fraction(n2, 2)).ok


@pytest.mark.parametrize("grade", [(1, 0), (0, 1), (-1, 1), (1, 1), (2, 0), (0, 2), (-2, 2)])
def test_affine_formula_matches_engine(grade):
    assert compare_affine_sl2(AffineSl2Engine().shapovalov_det(grade), grade).ok


def test_wrong_grade_is_rejected():
    # the depth-3 determinant does not match the depth-2 product
    assert not compare_vir(V.shapovalov_det(3), 2).ok


def test_vir_exponent_total_is_degree_in_h():
    for depth in range(1, 6):
        total = sum(e for _, e in vir_factors(depth))
        assert total == V.shapovalov_det(depth).degree_in("h")


def test_ns_factor_parity():
    # only nice points m = n mod 2 appear; at 3/2 these are (1,1) and (1,3), (3,1)
    assert len(ns_factors(Fraction(3, 2))) == 3


def test_affine_factor_at_alpha():
    factors = affine_sl2_factors((1, 0))
    assert len(factors) == 1
    f, e = factors[0]
    a = MultiPoly.var("a", ("a", "K", "D"))
    assert e == 1 and f == a * 2
