"""Product formulas for Shapovalov determinants and comparison with the engines.

The Virasoro and Neveu-Schwarz formulas are written in the coordinates (h, k)
where c = c(k); the engine determinants live in (h, c), so the comparison
substitutes c(k) and clears the (k+2) resp. (2k+3) denominators.  The affine
sl2 formula is in the engine coordinates (a, K, D) directly.

Each formula is a product of linear-in-h (or in a, K) factors with
multiplicities read off the partition tables; nothing here touches the
PBW machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .exactmath import MultiPoly, scalar_ratio
from .partitions import affine_sl2_partition, half_integer_x2, ns_partition_x2, vir_partition

HK = ("h", "k")
AFF = ("a", "K", "D")


def _prod(factors: List[Tuple[MultiPoly, int]], variables) -> MultiPoly:
    out = MultiPoly.const(1, variables)
    for f, e in factors:
        if e:
            out = out * f ** e
    return out


def vir_factors(N: int) -> List[Tuple[MultiPoly, int]]:
    """4(k+2)(h - h_{m,n}(k)) with exponent P(N - mn), over m, n >= 1, mn <= N."""
    h = MultiPoly.var("h", HK)
    u = MultiPoly.var("k", HK) + 2
    out = []
    for m in range(1, N + 1):
        for n in range(1, N // m + 1):
            f = u * h * 4 - (u * m - n) ** 2 + (u - 1) ** 2
            out.append((f, vir_partition(N - m * n)))
    return out


def vir_formula(N: int) -> MultiPoly:
    return _prod(vir_factors(N), HK)


def ns_factors(N) -> List[Tuple[MultiPoly, int]]:
    """8(2k+3)(h - h_{m,n}(k)) over m = n mod 2 with exponent P_NS(N - mn/2)."""
    n2 = half_integer_x2(N)
    h = MultiPoly.var("h", HK)
    k = MultiPoly.var("k", HK)
    u = k * 2 + 3
    out = []
    for m in range(1, n2 + 1):
        for n in range(1, n2 // m + 1):
            if (m - n) % 2:
                continue
            f = u * h * 8 - (u * m - n) ** 2 + (k + 1) ** 2 * 4
            out.append((f, ns_partition_x2(n2 - m * n)))
    return out


def ns_formula(N) -> MultiPoly:
    return _prod(ns_factors(N), HK)


def affine_sl2_factors(grade: Tuple[int, int]) -> List[Tuple[MultiPoly, int]]:
    """Factors 2(lam+rho, beta) - n(beta, beta) for positive roots beta.

    With (lam, alpha) = a, (lam, delta) = K, (rho, alpha) = 1 and
    (rho, delta) = 2, the real root j*delta + e*alpha gives
    2(j(K+2) + e(a+1)) - 2n and the imaginary root j*delta gives 2j(K+2).
    The exponent is the multiplicity times P(grade - n*beta).
    """
    A, B = grade
    a = MultiPoly.var("a", AFF)
    kk = MultiPoly.var("K", AFF) + 2
    roots = [(1, 0)] + [(e, j) for j in range(1, B + 1) for e in (1, -1, 0)]
    out = []
    for e, j in roots:
        n_max = A + B if j == 0 else B // j
        for n in range(1, n_max + 1):
            P = affine_sl2_partition((A - n * e, B - n * j))
            if not P:
                continue
            if e == 0:
                f = kk * (2 * j)
            else:
                f = (kk * j + (a + 1) * e) * 2 - 2 * n
            out.append((f, P))
    return out


def affine_sl2_formula(grade: Tuple[int, int]) -> MultiPoly:
    return _prod(affine_sl2_factors(grade), AFF)


# ---------------------------------------------------------------------------
# comparisons


def _to_hk(det_hc: MultiPoly, c_num: MultiPoly, c_den: MultiPoly) -> Tuple[MultiPoly, int]:
    """c_den^d * det(h, c_num/c_den) as a polynomial in (h, k), with d = deg_c."""
    d = det_hc.degree_in("c")
    ih, ic = det_hc.vars.index("h"), det_hc.vars.index("c")
    h = MultiPoly.var("h", HK)
    out = MultiPoly.const(0, HK)
    for e, coef in det_hc.terms.items():
        out = out + h ** e[ih] * c_num ** e[ic] * c_den ** (d - e[ic]) * coef
    return out, d


@dataclass(frozen=True)
class FormulaComparison:
    grade: object
    scalar: Optional[Fraction]

    @property
    def ok(self) -> bool:
        return self.scalar is not None and self.scalar != 0


def compare_vir(det_hc: MultiPoly, N: int) -> FormulaComparison:
    """Check det(h, c(k)) = s * prod (h - h_{m,n}(k))^{P(N - mn)}."""
    k = MultiPoly.var("k", HK)
    u = k + 2
    c_num = u - (k + 1) ** 2 * 6
    lhs, d = _to_hk(det_hc, c_num, u)
    factors = vir_factors(N)
    E = sum(e for _, e in factors)
    # lhs / u^d = s * formula / (4u)^E
    left = lhs * (u * 4) ** E
    right = _prod(factors, HK) * u ** d
    return FormulaComparison(N, scalar_ratio(left, right))


def compare_ns(det_hc: MultiPoly, N) -> FormulaComparison:
    k = MultiPoly.var("k", HK)
    u = k * 2 + 3
    # c = 3/2 - 12(k+1)^2/(2k+3) = (3u - 24(k+1)^2) / (2u)
    c_num = u * 3 - (k + 1) ** 2 * 24
    lhs, d = _to_hk(det_hc, c_num, u * 2)
    factors = ns_factors(N)
    E = sum(e for _, e in factors)
    left = lhs * (u * 8) ** E
    right = _prod(factors, HK) * (u * 2) ** d
    return FormulaComparison(Fraction(half_integer_x2(N), 2), scalar_ratio(left, right))


def compare_affine_sl2(det_akd: MultiPoly, grade) -> FormulaComparison:
    return FormulaComparison(tuple(grade), scalar_ratio(det_akd, affine_sl2_formula(grade)))


__all__ = [
    "vir_factors", "vir_formula", "ns_factors", "ns_formula", "affine_sl2_factors",
    "affine_sl2_formula", "FormulaComparison", "compare_vir", "compare_ns",
    "compare_affine_sl2",
]
