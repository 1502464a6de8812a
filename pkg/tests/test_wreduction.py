from fractions import Fraction

import pytest

from admkit import virasoro as vir
from admkit import wreduction as w
from admkit.rootsystem import DomainError
from admkit.wreduction import WVerdict

W = w.MinimalWData("A1")


def test_vacuum_reduces_to_zero():
    for k in (Fraction(1, 3), Fraction(-1, 2), 5):
        red = w.reduce_weight(W, W.data.vacuum(k))
        assert red.l0 == 0 and red.hf_part == ()


@pytest.mark.parametrize("p,q", [(4, 3), (5, 2), (3, 2)])
def test_grid_weights_reduce_to_kac_table(p, q):
    for r in range(q + 1):
        for s in range(p + 1):
            assert w.reduce_weight(W, w.sl2_grid_weight(r, s, p, q)).l0 == vir.h_pq(r, s, p, q)


def test_delta_shift_invariance():
    lam = w.sl2_grid_weight(1, 2, 4, 3)
    for a in (Fraction(1, 2), Fraction(-7, 3)):
        assert w.reduce_weight(W, lam + W.data.delta * a) == w.reduce_weight(W, lam)


def test_s0_dot_invariance():
    for typ in ("A1", "A2", "C2", "G2"):
        Wt = w.MinimalWData(typ)
        lam = Wt.weight([Fraction(-3, 2)] + [Fraction(i + 1, 3) for i in range(Wt.type.rank)] + [0])
        assert w.reduce_weight(Wt, Wt.s0_dot(lam)) == w.reduce_weight(Wt, lam)


def test_phi_kills_delta_and_rank():
    lam = w.sl2_grid_weight(1, 1, 4, 3)
    img = w.phi_map(W, lam, W.data.delta)
    assert img.l0 == 0
    for typ in ("A1", "A2", "G2"):
        Wt = w.MinimalWData(typ)
        lam = Wt.weight([Fraction(1, 3)] * (Wt.type.rank + 1) + [0])
        assert w.phi_kernel_dim(Wt, lam) == 1
        assert w.phi_rank(Wt, lam) == Wt.dim_hw


def test_phi_alpha0_on_the_face():
    # (lam + rho, alpha_0) = 0 makes alpha_0 a kernel vector
    lam = w.sl2_grid_weight(3, 4, 4, 3)
    assert w.phi_kernel_dim(W, lam) == 2
    assert w.phi_map(W, lam, W.data.simple_root(0)).l0 == 0


def test_fiber_contains_dot_image():
    lam = w.sl2_grid_weight(1, 2, 4, 3)
    nu = w.reduce_weight(W, lam)
    search = [w.sl2_grid_weight(r, s, 4, 3) for r in range(4) for s in range(5)]
    search.append(W.s0_dot(lam))
    fib = w.fiber(W, nu, search)
    assert lam in fib and W.s0_dot(lam) in fib


def test_transfer_examples():
    assert w.wadm_transfer(W, w.sl2_grid_weight(1, 1, 4, 3)).verdict is WVerdict.ADMISSIBLE
    assert w.wadm_transfer(W, w.sl2_grid_weight(3, 4, 4, 3)).verdict is WVerdict.SUFFICIENT_EXT_W0
    assert w.vacuum_transfer("C2", -2).verdict is WVerdict.NOT_ADMISSIBLE
    assert w.vacuum_transfer("A2", -2).verdict is WVerdict.UNDETERMINED


def test_negative_shifted_level_is_not_admissible():
    lam = W.data.vacuum(Fraction(-5, 2))
    assert w.wadm_transfer(W, lam).verdict is WVerdict.NOT_ADMISSIBLE


def test_critical_level_raises():
    with pytest.raises(DomainError):
        w.reduce_weight(W, W.data.vacuum(-2))


def test_central_charge_sl2():
    for k in (Fraction(-2, 3), Fraction(1, 2)):
        assert w.minimal_w_central_charge(W, k) == vir.c_of_k(k)


@pytest.mark.parametrize("p,q", [(4, 3), (3, 2), (5, 2), (2, 1), (7, 3)])
def test_recovery(p, q):
    rep = w.vir_recovery_check(p, q)
    assert rep.ok
    assert len(rep.rows) == (p + 1) * (q + 1)
