"""Neveu-Schwarz highest weights: nice points, admissibility, minimal models.

Mirrors :mod:`admkit.virasoro` with c(k) = 3/2 - 12(k+1)^2/(2k+3), the line
x(2k+3) - y = b, b^2 = 4(2(2k+3)h + (k+1)^2), and only *nice* points
(m = n mod 2) counted.  For rational k the pair (p, q) satisfies
2k + 3 = p/q, q > 0, p = q mod 2 and gcd((p-q)/2, p) = 1; it need not be in
lowest terms.  Nice points on a rational line are spaced by (q, p).

The admissibility of the corner weight h_{p,0} = h_{0,q} for even p, q is
not settled, so :func:`ns_is_c_admissible` is three-valued.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .exactmath import is_rational, to_rational
from .rootsystem import DomainError
from .virasoro import GridPoint, KacLine, Point, _as_level_value, _canonical_sqrt, _irrational_point


class Admissibility(str, enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "undecided"


def valid_ns_pair(p: int, q: int) -> bool:
    return (q > 0 and p != 0 and (p - q) % 2 == 0
            and math.gcd(abs(p - q) // 2, abs(p)) == 1)


def ns_pair(shifted: Fraction) -> Tuple[int, int]:
    """(p, q) with 2k + 3 = p/q in the normal form above."""
    shifted = Fraction(shifted)
    P, Q = shifted.numerator, shifted.denominator
    if (P - Q) % 2 == 0:
        return P, Q
    return 2 * P, 2 * Q


@dataclass(frozen=True)
class NSLevel:
    k: object

    def __post_init__(self):
        object.__setattr__(self, "k", _as_level_value(self.k))
        if self.k == Fraction(-3, 2):
            raise DomainError("k = -3/2 is excluded")

    @classmethod
    def from_pq(cls, p: int, q: int) -> "NSLevel":
        if not valid_ns_pair(p, q):
            raise DomainError(f"(p, q) = ({p}, {q}) violates the parity/gcd conditions")
        return cls((Fraction(p, q) - 3) / 2)

    @property
    def is_rational(self) -> bool:
        return is_rational(self.k)

    @property
    def shifted(self):
        return 2 * self.k + 3

    @property
    def pq(self) -> Tuple[int, int]:
        if not self.is_rational:
            raise DomainError("p, q exist only for rational levels")
        return ns_pair(self.shifted)

    @property
    def c(self):
        return ns_c_of_k(self.k)


def as_ns_level(k) -> NSLevel:
    return k if isinstance(k, NSLevel) else NSLevel(k)


def ns_c_of_k(k):
    k = as_ns_level(k).k
    return Fraction(3, 2) - 12 * (k + 1) ** 2 / (2 * k + 3)


def ns_c_pq(p: int, q: int) -> Fraction:
    return Fraction(3, 2) * (1 - Fraction(2 * (p - q) ** 2, p * q))


def ns_h_mn(m, n, k):
    k = as_ns_level(k).k
    return ((m * (k + Fraction(3, 2)) - Fraction(n, 2)) ** 2 - (k + 1) ** 2) / (2 * (2 * k + 3))


def ns_h_pq(r, s, p: int, q: int) -> Fraction:
    if p * q == 0:
        raise DomainError("pq must be non-zero")
    return Fraction((p * r - q * s) ** 2 - (p - q) ** 2, 8 * p * q)


def ns_b_square(h, k):
    k = as_ns_level(k).k
    return 4 * (2 * (2 * k + 3) * h + (k + 1) ** 2)


def ns_line(h, k) -> KacLine:
    """Nice points of x(2k+3) - y = b on the non-negative branch of b."""
    level = as_ns_level(k)
    bsq = ns_b_square(h, level)
    b = _canonical_sqrt(bsq)
    empty = KacLine(level, h, bsq, b, None, None)
    if b is None:
        return empty
    if not level.is_rational:
        pt = _irrational_point(level.shifted, b)
        if pt is None or (pt[0] - pt[1]) % 2:
            return empty
        return KacLine(level, h, bsq, b, pt, None)
    if not is_rational(b):
        return empty
    p, q = level.pq
    qb = q * b
    g = math.gcd(p, q)
    if qb.denominator != 1 or int(qb) % g:
        return empty
    qb = int(qb)
    pg, qg = p // g, q // g
    x0 = (qb // g * pow(pg, -1, qg)) % qg if qg > 1 else 0
    for t in range(2):
        m = x0 + t * qg
        n, rem = divmod(p * m - qb, q)
        if rem == 0 and (m - n) % 2 == 0:
            return KacLine(level, h, bsq, b, (m, n), (q, p))
    return empty


def ns_is_verma_irreducible(h, k) -> bool:
    return not ns_line(h, k).has_product(True)


def ns_is_weakly_admissible(h, k) -> bool:
    return not ns_line(h, k).has_product(False)


def ns_minimal_points(h, k, bound: Optional[int] = None) -> List[Point]:
    return ns_line(h, k).minimal_points(bound)


def _on_nice_grid(h, p: int, q: int) -> Optional[Point]:
    if not is_rational(h):
        return None
    h = to_rational(h)
    for r in range(q + 1):
        for s in range(r % 2, p + 1, 2):
            if ns_h_pq(r, s, p, q) == h:
                return (r, s)
    return None


def ns_is_c_admissible(h, k) -> Admissibility:
    level = as_ns_level(k)
    if not level.is_rational:
        line = ns_line(h, level)
        ok = line.has_points and line.base[0] * line.base[1] > 0
        return Admissibility.TRUE if ok else Admissibility.FALSE
    p, q = level.pq
    if p < 0:
        return Admissibility.FALSE
    pt = _on_nice_grid(h, p, q)
    if pt is None:
        return Admissibility.FALSE
    if p % 2 == 0 and to_rational(h) == ns_h_pq(0, p, p, q):
        return Admissibility.UNKNOWN
    return Admissibility.TRUE


def _check_pair(p: int, q: int):
    if p <= 0 or not valid_ns_pair(p, q):
        raise DomainError(f"(p, q) = ({p}, {q}) is not a valid positive NS pair")


def _dedup(points, p, q) -> List[GridPoint]:
    seen, out = set(), []
    for r, s in points:
        rep = min((r, s), (q - r, p - s))
        if rep not in seen:
            seen.add(rep)
            out.append(GridPoint(rep[0], rep[1], ns_h_pq(rep[0], rep[1], p, q)))
    return sorted(out, key=lambda g: (g.r, g.s))


def ns_grid(p: int, q: int) -> List[Tuple[int, int]]:
    _check_pair(p, q)
    return [(r, s) for r in range(q + 1) for s in range(p + 1) if (r - s) % 2 == 0]


def ns_admissible_grid(p: int, q: int) -> List[GridPoint]:
    """c-admissible weights, one per h; the undecided corner is left out."""
    return _dedup([pt for pt in ns_grid(p, q) if pt not in ((0, p), (q, 0))], p, q)


def ns_minimal_models(p: int, q: int) -> List[GridPoint]:
    _check_pair(p, q)
    if p < 2 or q < 2:
        raise DomainError("minimal models need p, q >= 2")
    inner = [(r, s) for r, s in ns_grid(p, q) if 0 < r < q and 0 < s < p]
    return _dedup(inner, p, q)


def ns_classify_grid(p: int, q: int) -> List[dict]:
    _check_pair(p, q)
    k = (Fraction(p, q) - 3) / 2
    out = []
    for r, s in ns_grid(p, q):
        h = ns_h_pq(r, s, p, q)
        status = ns_is_c_admissible(h, k)
        row = {
            "r": r, "s": s, "h": h,
            "weaklyAdmissible": ns_is_weakly_admissible(h, k),
            "cAdmissible": status.value,
            "minimalModel": 0 < r < q and 0 < s < p and p >= 2 and q >= 2,
        }
        if status is Admissibility.UNKNOWN:
            row["status"] = status.value
        out.append(row)
    return out


__all__ = [
    "Admissibility", "NSLevel", "valid_ns_pair", "ns_pair", "ns_c_of_k", "ns_c_pq",
    "ns_h_mn", "ns_h_pq", "ns_b_square", "ns_line", "ns_is_verma_irreducible",
    "ns_is_weakly_admissible", "ns_minimal_points", "ns_is_c_admissible", "ns_grid",
    "ns_admissible_grid", "ns_minimal_models", "ns_classify_grid", "as_ns_level",
]
