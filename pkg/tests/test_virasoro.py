from fractions import Fraction

import pytest

from admkit.exactmath import XI
from admkit.rootsystem import DomainError
from admkit import virasoro as vir


def test_h11_vanishes():
    for k in (Fraction(1, 3), Fraction(-7, 2), XI):
        assert vir.h_mn(1, 1, k) == 0


def test_central_charge_and_grid_value():
    assert vir.c_pq(4, 3) == Fraction(1, 2)
    assert vir.c_of_k(Fraction(4, 3) - 2) == Fraction(1, 2)
    assert vir.h_pq(2, 2, 4, 3) == Fraction(1, 16)


def test_k_minus_two_excluded():
    with pytest.raises(DomainError):
        vir.VirLevel(-2)


def test_k_of_c_inverts():
    for k in (Fraction(1, 3), Fraction(-5, 4)):
        assert k in vir.k_of_c(vir.c_of_k(k))


def test_irreducible_line_is_weakly_admissible():
    k = Fraction(3, 2) - 2
    h = Fraction(1, 5)
    assert vir.is_verma_irreducible(h, k)
    assert vir.is_weakly_admissible(h, k)


def test_negative_shift_not_weakly_admissible():
    k = Fraction(-1, 2) - 2
    h = vir.h_mn(1, 2, k)
    assert not vir.is_verma_irreducible(h, k)
    assert not vir.is_weakly_admissible(h, k)
    assert not vir.is_c_admissible(h, k)


def test_h_zero_weakly_admissible():
    assert vir.is_weakly_admissible(0, Fraction(4, 3) - 2)


def test_minimal_points_examples():
    k = Fraction(4, 3) - 2
    assert vir.minimal_points(0, k) == [(1, 1)]
    assert sorted(vir.minimal_points(vir.h_pq(0, 0, 4, 3), k)) == [(-3, -4), (3, 4)]
    assert vir.minimal_points(vir.h_mn(2, 1, XI), XI) == [(2, 1)]


def test_minimal_points_exact_matches_enumeration():
    for p, q in [(4, 3), (5, 2), (3, 2), (7, 4)]:
        k = Fraction(p, q) - 2
        for r in range(q + 1):
            for s in range(p + 1):
                h = vir.h_pq(r, s, p, q)
                assert sorted(vir.minimal_points(h, k)) == sorted(
                    vir.minimal_points(h, k, bound=6 * p * q))


def test_c_admissible_examples():
    k = Fraction(4, 3) - 2
    assert vir.is_c_admissible(0, k)
    assert not vir.is_c_admissible(vir.h_pq(3, 0, 4, 3), k)


def test_minimal_models_ising():
    assert {g.h for g in vir.minimal_models(4, 3)} == {0, Fraction(1, 16), Fraction(1, 2)}


def test_admissible_grid_small():
    grid = vir.admissible_grid(2, 1)
    assert {g.h for g in grid} == {vir.h_pq(0, 0, 2, 1), vir.h_pq(0, 1, 2, 1)}
    assert vir.h_pq(0, 0, 2, 1) == vir.h_pq(1, 2, 2, 1)


@pytest.mark.parametrize("p", range(1, 8))
def test_admissible_grid_q_one_has_p_modules(p):
    assert len(vir.admissible_grid(p, 1)) == p
    expected = {vir.h_pq(1, s, p, 1) for s in range(1, p + 1)}
    assert {g.h for g in vir.admissible_grid(p, 1)} == expected


def test_classify_grid_schema():
    rows = vir.classify_grid(4, 3)
    assert len(rows) == 20
    assert set(rows[0]) == {"r", "s", "h", "weaklyAdmissible", "cAdmissible", "minimalModel"}
    assert sum(r["minimalModel"] for r in rows) == 6


def test_selfext_cases():
    assert vir.selfext_dim_vir(Fraction(1, 3), XI) == 1
    assert vir.selfext_dim_vir(Fraction(1, 4), -1) == 1  # c = 1
    assert vir.selfext_dim_vir(Fraction(1, 16), Fraction(4, 3) - 2) == 0


def test_transverse_and_minimal_depth():
    k = Fraction(4, 3) - 2
    assert vir.minimal_depth(Fraction(1, 16), k) == 2  # h_{1,2}
    assert vir.minimal_depth(Fraction(1, 5), Fraction(3, 2) - 2) is None
    assert vir.is_transverse(0, k, (1, 0))
    assert not vir.is_transverse(0, k, (0, 1))
