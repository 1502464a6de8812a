"""Weights of minimal W-algebras obtained by reduction along the highest root.

An affine weight lam of level k maps to lam_W = (lam restricted to h^f, L_0)
with

    L_0 = (lam + 2 rho, lam) / (2 (k + h^vee)) - <lam, x + D>,

where x = theta^vee / 2 and h^f is the orthogonal complement of x in the
finite Cartan subalgebra.  Two weights have the same image iff they agree
modulo C*delta up to the dot action of s_0.

The admissibility transfer is a partial decision procedure: it reports the
criterion that fired and answers ``undetermined`` when none applies.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .affine_adm import SimpleTypeData, Sl2AdmWeight, simple_type, vacuum_status
from .exactmath import is_integer, is_rational, matrix_rank, to_rational
from .rootsystem import (CartanData, DomainError, Weight, classify, coroot_pairing, dot_reflect,
                         finite_part_data, form, is_critical, positive_roots)
from . import virasoro


@dataclass(frozen=True)
class WWeight:
    hf_part: Tuple
    l0: object

    def to_json(self) -> dict:
        return {"hf": list(self.hf_part), "l0": self.l0}


class MinimalWData:
    """Reduction data for W^k(g, e_{-theta}) with g the affinization of ``typ``."""

    def __init__(self, typ):
        if isinstance(typ, str):
            typ = simple_type(typ)
        self.type: SimpleTypeData = typ
        self.data: CartanData = typ.cartan_data()
        self.comarks = self.data.comarks
        n = typ.rank
        # <theta, alpha_j^vee> for the finite simple coroots
        theta = self.data.marks[1:]
        fin = self.data.gcm
        row = [sum(theta[i] * fin[j + 1][i + 1] for i in range(n)) for j in range(n)]
        self.hf_basis = _kernel_of_row(row)

    @property
    def x(self) -> Tuple[Fraction, ...]:
        """x = theta^vee / 2 in the finite simple-coroot basis."""
        return tuple(Fraction(c, 2) for c in self.comarks[1:])

    @property
    def rho_hat(self) -> Weight:
        return self.data.rho

    @property
    def alpha0(self) -> Tuple[int, ...]:
        return (1,) + (0,) * self.type.rank

    @property
    def dim_hw(self) -> int:
        """dim of the Cartan part of W: dim h^f + 1."""
        return len(self.hf_basis) + 1

    def pair_x_plus_d(self, lam: Weight):
        fin = lam.finite_part
        return sum(c * v for c, v in zip(self.x, fin)) + lam.d_coord

    def hf_part(self, lam: Weight) -> Tuple:
        fin = lam.finite_part
        return tuple(sum(c * v for c, v in zip(a, fin)) for a in self.hf_basis)

    def weight(self, coords) -> Weight:
        return self.data.weight(coords)

    def s0_dot(self, lam: Weight) -> Weight:
        return dot_reflect(lam, self.alpha0)


def _kernel_of_row(row: Sequence[int]) -> List[Tuple[Fraction, ...]]:
    piv = next(i for i, v in enumerate(row) if v)
    out = []
    for j in range(len(row)):
        if j == piv:
            continue
        vec = [Fraction(0)] * len(row)
        vec[j] = Fraction(1)
        vec[piv] = -Fraction(row[j], row[piv])
        out.append(tuple(vec))
    return out


def _shifted_level(W: MinimalWData, lam: Weight):
    if is_critical(lam):
        raise DomainError("critical level: k + h^vee = 0")
    return lam.level + W.type.hdual


def reduce_weight(W: MinimalWData, lam: Weight) -> WWeight:
    kh = _shifted_level(W, lam)
    rho = W.rho_hat
    l0 = form(lam + rho + rho, lam) / (2 * kh) - W.pair_x_plus_d(lam)
    return WWeight(W.hf_part(lam), l0)


def phi_map(W: MinimalWData, lam: Weight, mu: Weight) -> WWeight:
    """Linear map mu -> (mu|h^f, (mu, lam + rho)/(k + h^vee) - <mu, x + D>)."""
    kh = _shifted_level(W, lam)
    if mu.level != 0:
        raise DomainError("phi_map expects a weight of level 0")
    l0 = form(mu, lam + W.rho_hat) / kh - W.pair_x_plus_d(mu)
    return WWeight(W.hf_part(mu), l0)


def level_zero_basis(W: MinimalWData) -> List[Weight]:
    """delta, then the finite simple roots (a basis of level-0 weights)."""
    data = W.data
    return [data.delta] + [data.simple_root(i) for i in range(1, data.rank)]


def phi_kernel_dim(W: MinimalWData, lam: Weight) -> int:
    """1 if (lam + rho, alpha_0) != 0, else 2."""
    _shifted_level(W, lam)
    val = form(lam + W.rho_hat, W.data.simple_root(0))
    return 1 if val != 0 else 2


def phi_rank(W: MinimalWData, lam: Weight) -> int:
    """Rank of phi_lam computed from its matrix on :func:`level_zero_basis`."""
    rows = []
    for mu in level_zero_basis(W):
        img = phi_map(W, lam, mu)
        rows.append(list(img.hf_part) + [img.l0])
    return matrix_rank(rows)


def fiber(W: MinimalWData, nu: WWeight, search: Sequence[Weight]) -> List[Weight]:
    return [lam for lam in search if reduce_weight(W, lam) == nu]


def minimal_w_central_charge(W: MinimalWData, k):
    """k dim g / (k + h^vee) - 6k + h^vee - 4."""
    typ = W.type
    fin = finite_part_data(W.data)
    dim_g = typ.rank + 2 * len(positive_roots(fin, 10 ** 6))
    return Fraction(dim_g) * k / (k + typ.hdual) - 6 * k + typ.hdual - 4


# ---------------------------------------------------------------------------
# admissibility transfer


class WVerdict(str, enum.Enum):
    ADMISSIBLE = "admissibleW"
    NOT_ADMISSIBLE = "notAdmissibleW"
    SUFFICIENT_EXT_W0 = "sufficientByExtW0"
    UNDETERMINED = "undetermined"

    @property
    def admissible(self) -> Optional[bool]:
        if self in (WVerdict.ADMISSIBLE, WVerdict.SUFFICIENT_EXT_W0):
            return True
        if self is WVerdict.NOT_ADMISSIBLE:
            return False
        return None


@dataclass(frozen=True)
class TransferResult:
    verdict: WVerdict
    rule: str
    witness: Optional[Weight] = None

    def to_json(self) -> dict:
        return {"verdict": self.verdict.value, "rule": self.rule}


def _k_admissible(rep, typ: SimpleTypeData) -> Optional[bool]:
    """k-admissibility: exact for sl2, rational levels and vacuum weights."""
    lam = rep.weight
    if all(c == 0 for c in lam.finite_part):
        return vacuum_status(typ, lam.level).k_admissible
    if rep.k_admissible in ("true", "false") and rep.weight.data.rank == 2:
        return rep.k_admissible == "true"
    if not rep.weakly_admissible.value:
        return False
    if is_rational(rep.weight.level):
        return rep.rational.value
    return True if rep.kw_admissible.value else None


def _ext_w0_applies(rep, alpha0) -> bool:
    if not (rep.rational.value and rep.weakly_admissible.value):
        return False
    shifted = rep.weight + rep.weight.data.rho
    for r in rep.simple_system:
        if r.vector == alpha0:
            continue
        if coroot_pairing(shifted, r) <= 0:
            return False
    return True


def wadm_transfer(W: MinimalWData, lam: Weight, H: int = 20) -> TransferResult:
    kh = _shifted_level(W, lam)
    if is_rational(kh) and kh < 0:
        return TransferResult(WVerdict.NOT_ADMISSIBLE, "emptyForNonPositiveShiftedLevel")
    pair0 = form(lam, W.data.simple_root(0))
    fiber_weights = [lam, W.s0_dot(lam)]
    reps = [classify(mu, H) for mu in fiber_weights]
    if not is_integer(pair0):
        seen_unknown = False
        for mu, rep in zip(fiber_weights, reps):
            verdict = _k_admissible(rep, W.type)
            if verdict is True:
                return TransferResult(WVerdict.ADMISSIBLE, "nonIntegralAlpha0", mu)
            if verdict is None:
                seen_unknown = True
        if not seen_unknown:
            return TransferResult(WVerdict.NOT_ADMISSIBLE, "nonIntegralAlpha0")
        return TransferResult(WVerdict.UNDETERMINED, "kAdmissibilityUnknown")
    for mu, rep in zip(fiber_weights, reps):
        if _ext_w0_applies(rep, W.alpha0):
            return TransferResult(WVerdict.SUFFICIENT_EXT_W0, "extW0", mu)
    if not any(rep.weakly_admissible.value for rep in reps):
        return TransferResult(WVerdict.NOT_ADMISSIBLE, "noWeaklyAdmissiblePreimage")
    if is_rational(kh) and not any(rep.weakly_admissible.value and rep.rational.value
                                   for rep in reps):
        return TransferResult(WVerdict.NOT_ADMISSIBLE, "noRationalPreimage")
    return TransferResult(WVerdict.UNDETERMINED, "noCriterion")


def vacuum_transfer(typ, k, H: int = 20) -> TransferResult:
    W = MinimalWData(typ)
    return wadm_transfer(W, W.data.vacuum(k), H)


# ---------------------------------------------------------------------------
# Virasoro recovery


def sl2_grid_weight(r: int, s: int, p: int, q: int) -> Weight:
    """lam_{r,s} at k = p/q - 2, extended to the full Kac grid 0 <= r <= q."""
    return Sl2AdmWeight(r, s, p, q).weight()


@dataclass
class RecoveryReport:
    p: int
    q: int
    rows: List[dict] = field(default_factory=list)
    central_charge_ok: bool = True

    @property
    def ok(self) -> bool:
        return self.central_charge_ok and all(r["ok"] for r in self.rows)

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "ok": self.ok,
                "centralChargeOk": self.central_charge_ok, "rows": self.rows}


def vir_recovery_check(p: int, q: int, H: int = 20) -> RecoveryReport:
    if p <= 0 or q <= 0 or math.gcd(p, q) != 1:
        raise DomainError(f"(p, q) = ({p}, {q}) must be coprime positive integers")
    W = MinimalWData("A1")
    k = Fraction(p, q) - 2
    rep = RecoveryReport(p, q)
    c = virasoro.c_pq(p, q)
    rep.central_charge_ok = (virasoro.c_of_k(k) == c and minimal_w_central_charge(W, k) == c)
    corners = {(0, p), (q, 0)}
    for r in range(q + 1):
        for s in range(p + 1):
            lam = sl2_grid_weight(r, s, p, q)
            h = reduce_weight(W, lam).l0
            h_ok = h == virasoro.h_pq(r, s, p, q)
            vir_adm = virasoro.is_c_admissible(h, k)
            tr = wadm_transfer(W, lam, H)
            w_adm = tr.verdict.admissible
            if (r, s) in corners:
                agree = w_adm is None or w_adm == vir_adm
            else:
                agree = w_adm == vir_adm
            rep.rows.append({"r": r, "s": s, "h": h, "hOk": h_ok, "virAdmissible": vir_adm,
                             "wVerdict": tr.verdict.value, "rule": tr.rule,
                             "corner": (r, s) in corners, "ok": h_ok and agree})
    return rep


__all__ = [
    "WWeight", "MinimalWData", "reduce_weight", "phi_map", "phi_kernel_dim", "phi_rank",
    "level_zero_basis", "fiber", "minimal_w_central_charge", "WVerdict", "TransferResult",
    "wadm_transfer", "vacuum_transfer", "sl2_grid_weight", "RecoveryReport",
    "vir_recovery_check",
]
