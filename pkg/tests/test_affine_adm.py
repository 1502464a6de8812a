import math
from fractions import Fraction

import pytest

from admkit import affine_adm as aa
from admkit.exactmath import XI
from admkit.rootsystem import affine_type, classify


def test_simple_type_data():
    g2 = aa.simple_type("G2")
    assert (g2.h, g2.hdual, g2.lacety) == (6, 4, 3)
    e8 = aa.simple_type("E8")
    assert (e8.h, e8.hdual, e8.lacety) == (30, 30, 1)
    c2 = aa.simple_type("C", 2)
    assert (c2.h, c2.hdual, c2.lacety) == (4, 3, 2)


def test_vacuum_a1_boundary_level():
    st = aa.vacuum_status("A1", p=1, q=3)
    assert st.k_admissible and not st.kw_admissible


def test_vacuum_g2_divisible_branch():
    st = aa.vacuum_status("G2", p=7, q=3)
    assert st.kw_admissible
    assert aa.LevelPQ.from_pq(aa.simple_type("G2"), 7, 3).gcd_branch == "divisible"


@pytest.mark.parametrize("typ", ["A1", "A2", "C2", "G2", "E8"])
def test_vacuum_irrational(typ):
    st = aa.vacuum_status(typ, XI)
    assert st.k_admissible and not st.kw_admissible
    assert st.flags()["irrational"] is True


@pytest.mark.parametrize("typ", ["A1", "A2", "B2", "C2", "G2"])
def test_vacuum_matches_classify(typ):
    # independent route: root-system predicates on k Lambda_0
    data = affine_type(typ)
    for q in range(1, 4):
        for p in range(-2, 12):
            if p == 0 or math.gcd(p, q) != 1:
                continue
            st = aa.vacuum_status(typ, p=p, q=q)
            rep = classify(data.vacuum(st.level.k), 30)
            assert st.weakly_admissible == rep.weakly_admissible.value, (typ, p, q)
            assert st.kw_admissible == rep.kw_admissible.value, (typ, p, q)


def test_bk_and_polyhedron():
    gammas = aa.sl2_Bk(3, 2)
    assert len(gammas) == 2
    assert [tuple((c.n, c.sign) for c in g) for g in gammas] == [((0, 1), (2, -1)),
                                                                ((1, 1), (1, -1))]
    poly = aa.sl2_polyhedron(gammas[0], 3)
    assert all(c["min"] == 0 and c["max"] == 3 for c in poly["constraints"])


@pytest.mark.parametrize("q", [1, 2, 3, 4, 6])
def test_bk_size(q):
    assert len(aa.sl2_Bk(5, q)) == q


@pytest.mark.parametrize("p,q", [(1, 2), (2, 3), (3, 2), (4, 3), (3, 1), (2, 1), (5, 4)])
def test_counts(p, q):
    assert len(aa.sl2_kadm_set(p, q)) == q * (p + 1)
    assert len(aa.sl2_kw_set(p, q)) == q * (p - 1)


def test_pairings_in_range():
    for w in aa.sl2_kadm_set(4, 3):
        assert all(0 <= x <= 4 for x in w.pairings())


def test_q_one_kw_weights_are_dominant_integral():
    for w in aa.sl2_kw_set(4, 1):
        lam = w.weight()
        assert lam.level == 2
        assert all(c >= 0 and Fraction(c).denominator == 1 for c in lam.coords[:2])


def test_cross_validation():
    assert aa.cross_validate_sl2(3, 2).checked == 8
    assert aa.cross_validate_sl2(3, 2).ok
    assert aa.cross_validate_sl2(2, 1).ok
    assert aa.cross_validate_sl2(1, 1).ok


def test_grid_boundary_predicates():
    # (2,1): lambda_{1,0}, lambda_{1,2} weakly admissible, not shifted regular
    for s in (0, 2):
        rep = classify(aa.Sl2AdmWeight(1, s, 2, 1).weight())
        assert rep.weakly_admissible.value and not rep.shifted_regular.value
    assert classify(aa.Sl2AdmWeight(1, 1, 2, 1).weight()).kw_admissible.value


def test_emptiness():
    assert aa.adm_category_emptiness("A1", -3).empty
    assert not aa.adm_category_emptiness("A1", Fraction(-1, 2)).empty
    v = aa.adm_category_emptiness("A1", XI)
    assert not v.empty and v.note
