from fractions import Fraction

import pytest

from admkit.exactmath import (INFINITE, XI, ExactMathError, MultiPoly, RationalFunction, TPoly,
                              deform, det, exact_sqrt, is_integer, is_rational, matrix_rank,
                              poly_det, poly_eval, scalar_ratio, smith_t_valuations, t_valuation,
                              to_rational)

HC = ("h", "c")
HK = ("h", "k")


def t_poly(*cs):
    return TPoly([Fraction(c) for c in cs])


def test_eval_product():
    p = MultiPoly.var("h", HC) * MultiPoly.var("c", HC)
    assert poly_eval(p, {"h": 2, "c": 3}) == 6


def test_eval_zero_polynomial():
    assert poly_eval(MultiPoly.const(0, HC), {"h": 7, "c": -1}) == 0


def test_eval_kac_discriminant():
    h, k = MultiPoly.var("h", HK), MultiPoly.var("k", HK)
    p = (k + 2) * h * 4 + (k + 1) ** 2
    assert poly_eval(p, {"k": -1, "h": 5}) == 20


def test_deform_linear_and_square():
    h = MultiPoly.var("h", ("h",))
    assert deform(h, {"h": 3}, {"h": 1}, {}) == t_poly(3, 1)
    assert deform(h ** 2, {"h": 3}, {"h": 1}, {}) == t_poly(9, 6, 1)


def test_deform_second_order_direction():
    h = MultiPoly.var("h", ("h",))
    assert deform(h ** 2, {"h": 0}, {"h": 1}, {"h": 1}) == t_poly(0, 0, 1, 2, 1)


def test_deform_at_kac_zero_is_pure_t():
    from admkit.virasoro import c_of_k, h_mn
    k0 = Fraction(7, 5) - 2
    h = MultiPoly.var("h", HC)
    p = h - h_mn(1, 2, k0)
    got = deform(p, {"h": h_mn(1, 2, k0), "c": c_of_k(k0)}, {"h": 1, "c": 0}, {})
    assert got == TPoly.t()


@pytest.mark.parametrize("poly,val", [
    (t_poly(0, 0, 1, 2), 2),
    (t_poly(5), 0),
    (TPoly(), INFINITE),
])
def test_t_valuation(poly, val):
    assert t_valuation(poly) == val


def test_smith_examples():
    t, one, zero = TPoly.t(), TPoly.const(1), TPoly()
    assert sorted(smith_t_valuations([[t, zero], [zero, one]])) == [0, 1]
    assert smith_t_valuations([[zero]]) == [INFINITE]
    assert sorted(smith_t_valuations([[t, t], [t, t + t * t]])) == [1, 2]


def test_smith_empty_matrix():
    assert smith_t_valuations([]) == []


def test_to_rational_rejects_float():
    with pytest.raises(ExactMathError):
        to_rational(0.5)
    assert to_rational("-3/4") == Fraction(-3, 4)


def test_exact_sqrt():
    assert exact_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert exact_sqrt(Fraction(2)) is None


def test_xi_is_irrational_and_closed_under_field_ops():
    x = (XI + 1) / (XI - 2) * 3
    assert isinstance(x, RationalFunction)
    assert not is_rational(x)
    assert not is_integer(XI)
    assert (XI * XI) / XI == XI
    assert XI - XI == 0


def test_xi_sqrt_of_square():
    assert ((XI + 1) ** 2).sqrt() in (XI + 1, -(XI + 1))
    assert XI.sqrt() is None


def test_matrix_rank_and_det():
    rows = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    assert matrix_rank(rows) == 1
    assert det([[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]) == 1


def test_poly_det_methods_agree():
    a, b = MultiPoly.var("h", HC), MultiPoly.var("c", HC)
    M = [[a, b, a + 1], [b, a * b, MultiPoly.const(2, HC)], [a - b, MultiPoly.const(1, HC), b]]
    assert poly_det(M, "bareiss") == poly_det(M, "interpolate")


def test_scalar_ratio():
    h = MultiPoly.var("h", HC)
    assert scalar_ratio(h * 6, h * 2) == 3
    assert scalar_ratio(h, h + 1) is None


def test_json_round_trip():
    h, c = MultiPoly.var("h", HC), MultiPoly.var("c", HC)
    p = h ** 2 * Fraction(3, 7) - c + 5
    assert MultiPoly.from_json(p.to_json()) == p
