from fractions import Fraction

import pytest

from admkit.exactmath import XI
from admkit.rootsystem import (DomainError, UnsupportedKindError, affine_sl2, affine_type,
                               cartan_from_json, cartan_matrix, classify, coroot_pairing,
                               dot_reflect, finite_type, form, integral_subsystem, is_critical,
                               positive_roots, real_positive_roots, selfext_dim, sl2,
                               upsilon_bounds)


def vectors(roots):
    return {r.vector for r in roots}


def test_sl2_roots_height_one():
    assert vectors(positive_roots(sl2(), 1)) == {(1,)}


def test_sl3_roots():
    assert vectors(positive_roots(finite_type("A2"), 2)) == {(1, 0), (0, 1), (1, 1)}


def test_affine_sl2_roots_height_three():
    # coordinates (alpha_0, alpha_1) with alpha_0 = delta - alpha
    roots = positive_roots(affine_sl2(), 3)
    assert vectors(roots) == {(0, 1), (1, 0), (1, 1), (1, 2), (2, 1)}
    imaginary = [r for r in roots if not r.is_real]
    assert [r.vector for r in imaginary] == [(1, 1)]


@pytest.mark.parametrize("family,count", [
    ("A1", 1), ("A2", 3), ("A3", 6), ("B2", 4), ("C3", 9), ("G2", 6), ("D4", 12), ("F4", 24),
    ("E6", 36), ("E8", 120),
])
def test_finite_positive_root_counts(family, count):
    assert len(positive_roots(finite_type(family), 10 ** 6)) == count


@pytest.mark.parametrize("H", range(1, 9))
def test_affine_sl2_real_root_count(H):
    # real roots j delta + alpha (height 2j+1), j delta - alpha (height 2j-1)
    expected = sum(1 for j in range(0, H) if 2 * j + 1 <= H) + sum(
        1 for j in range(1, H + 1) if 2 * j - 1 <= H)
    assert len(real_positive_roots(affine_sl2(), H)) == expected


def test_form_on_null_root_and_rho():
    A = affine_sl2()
    assert form(A.delta, A.delta) == 0
    assert form(A.rho, A.delta) == 2
    for fam in ("A2", "C2", "G2"):
        data = affine_type(fam)
        assert form(data.rho, data.delta) == data.dual_coxeter


def test_coroot_pairing_and_dot_reflection():
    lam = sl2().weight((3,))
    assert coroot_pairing(lam, (1,)) == 3
    assert dot_reflect(lam, (1,)).coords == (-5,)
    fixed = sl2().weight((-1,))
    assert dot_reflect(fixed, (1,)) == fixed


def test_integral_subsystem_vacuum():
    A = affine_sl2()
    assert vectors(integral_subsystem(A.vacuum(1)).simple) == {(1, 0), (0, 1)}
    assert vectors(integral_subsystem(A.vacuum(XI)).simple) == {(0, 1)}
    assert vectors(integral_subsystem(finite_type("A2").weight((2, 5))).simple) == {(1, 0), (0, 1)}


def test_integral_subsystem_fractional_level():
    # k = -2 + 3/2: <k Lambda_0 + rho, alpha_0^vee> = k + 1 is not an integer
    A = affine_sl2()
    sub = integral_subsystem(A.vacuum(Fraction(-1, 2)))
    assert (0, 1) in vectors(sub.simple)
    assert (1, 0) not in vectors(sub.simple)


def test_classify_integrable():
    flags = classify(affine_sl2().vacuum(1)).flags()
    assert all(flags[k] for k in ("nonCritical", "dominant", "rational", "weaklyAdmissible",
                                  "kwAdmissible"))
    assert flags["admissible"] == "true"


def test_classify_boundary_level():
    flags = classify(affine_sl2().vacuum(Fraction(-3, 2))).flags()
    assert flags["weaklyAdmissible"] and not flags["kwAdmissible"]
    assert flags["kAdmissible"] == "true"


def test_classify_irrational():
    flags = classify(affine_sl2().vacuum(XI)).flags()
    assert flags["rational"] is False
    assert flags["admissible"] == "false"


def test_critical_level():
    lam = affine_sl2().vacuum(-2)
    assert is_critical(lam)
    assert classify(lam).flags()["nonCritical"] is False


def test_selfext_dims():
    assert selfext_dim(sl2().weight((2,))) == 0
    assert selfext_dim(affine_sl2().weight((1, 1, 0))) == 1
    assert selfext_dim(affine_sl2().vacuum(XI)) == 2


def test_upsilon_bounds_examples():
    A = affine_sl2()
    assert upsilon_bounds(sl2().weight((2,))) == (0, 0)
    assert upsilon_bounds(A.vacuum(Fraction(3, 2) - 2)) == (1, 1)
    assert upsilon_bounds(A.vacuum(XI)) == (2, 2)


def test_cartan_matrix_and_json():
    assert cartan_matrix("G", 2) in ([[2, -1], [-3, 2]], [[2, -3], [-1, 2]])
    data = affine_type("C2")
    again = cartan_from_json(data.to_json())
    assert again.gcm == data.gcm


def test_unknown_type():
    with pytest.raises((DomainError, ValueError)):
        finite_type("Q7")


def test_level_of_finite_weight_rejected():
    with pytest.raises(DomainError):
        _ = sl2().weight((1,)).level


def test_unsupported_kind():
    data = cartan_from_json({"gcm": [[2, -1], [-1, 0]], "tau": [1], "kind": "general"})
    with pytest.raises(UnsupportedKindError):
        classify(data.weight((0, 0)))
