from fractions import Fraction

import pytest

from admkit.exactmath import XI
from admkit.rootsystem import DomainError
from admkit import neveu_schwarz as ns
from admkit.neveu_schwarz import Admissibility


def test_h11_vanishes():
    for k in (Fraction(1, 3), Fraction(-7, 4), XI):
        assert ns.ns_h_mn(1, 1, k) == 0


def test_central_charge():
    assert ns.ns_c_pq(3, 1) == Fraction(-5, 2)
    assert ns.NSLevel.from_pq(3, 1).c == Fraction(-5, 2)


def test_sign_symmetry():
    k = Fraction(2, 7)
    for m, n in [(1, 3), (2, 4), (3, 5)]:
        assert ns.ns_h_mn(m, n, k) == ns.ns_h_mn(-m, -n, k)


def test_pair_conditions():
    assert ns.valid_ns_pair(4, 2)
    assert ns.valid_ns_pair(5, 3)
    assert not ns.valid_ns_pair(4, 3)  # parity
    assert not ns.valid_ns_pair(6, 2)  # gcd((p-q)/2, p) = 2
    assert ns.ns_pair(Fraction(2, 1)) == (4, 2)
    assert ns.ns_pair(Fraction(5, 3)) == (5, 3)
    with pytest.raises(DomainError):
        ns.NSLevel(Fraction(-3, 2))


def test_grid_formula_matches_mn_formula():
    p, q = 5, 3
    k = (Fraction(p, q) - 3) / 2
    for r, s in ns.ns_grid(p, q):
        assert ns.ns_h_pq(r, s, p, q) == ns.ns_h_mn(r, s, k)


def test_weak_admissibility():
    k = XI
    assert ns.ns_is_weakly_admissible(ns.ns_h_mn(1, 3, k), k)
    k = Fraction(-7, 4)  # k + 3/2 < 0
    assert not ns.ns_is_weakly_admissible(ns.ns_h_mn(1, 3, k), k)
    assert ns.ns_is_weakly_admissible(0, (Fraction(5, 3) - 3) / 2)


def test_c_admissibility():
    k = (Fraction(5, 3) - 3) / 2
    assert ns.ns_is_c_admissible(ns.ns_h_pq(1, 1, 5, 3), k) is Admissibility.TRUE
    k42 = (Fraction(4, 2) - 3) / 2
    assert ns.ns_is_c_admissible(ns.ns_h_pq(2, 0, 4, 2), k42) is Admissibility.UNKNOWN
    kneg = Fraction(-7, 4)
    assert ns.ns_is_c_admissible(ns.ns_h_mn(1, 3, kneg), kneg) is Admissibility.FALSE


def test_undecided_corner_in_classify():
    rows = ns.ns_classify_grid(4, 2)
    flagged = {(r["r"], r["s"]) for r in rows if r.get("status") == "undecided"}
    assert flagged == {(0, 4), (2, 0)}


def test_minimal_models():
    inner = [(r, s) for r, s in ns.ns_grid(4, 2) if 0 < r < 2 and 0 < s < 4]
    assert inner == [(1, 1), (1, 3)]
    # (1,1) and (1,3) are identified by the grid symmetry
    assert [(g.r, g.s) for g in ns.ns_minimal_models(4, 2)] == [(1, 1)]
    for p, q in [(5, 3), (8, 2), (7, 3)]:
        k = (Fraction(p, q) - 3) / 2
        for g in ns.ns_minimal_models(p, q):
            assert ns.ns_is_c_admissible(g.h, k) is Admissibility.TRUE


def test_minimal_points_exact_matches_enumeration():
    for p, q in [(5, 3), (4, 2), (8, 2), (7, 5)]:
        k = (Fraction(p, q) - 3) / 2
        for r, s in ns.ns_grid(p, q):
            h = ns.ns_h_pq(r, s, p, q)
            assert sorted(ns.ns_minimal_points(h, k)) == sorted(
                ns.ns_minimal_points(h, k, bound=6 * p * q))


def test_invalid_pair_rejected():
    with pytest.raises(DomainError):
        ns.ns_grid(4, 3)
