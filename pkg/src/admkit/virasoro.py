"""Virasoro highest weights: Kac lines, admissibility and minimal models.

A weight is a pair (h, c) with c = c(k) = 1 - 6(k+1)^2/(k+2).  Every
classification routine takes the level k (or the coprime pair (p, q) with
k + 2 = p/q) rather than inverting c, since c only determines k up to the
two roots of a quadratic.

The reducibility data of M(h, c(k)) is the set of integral points on the
line x(k+2) - y = b, b^2 = 4(k+2)h + (k+1)^2.  The sign of b is fixed to be
non-negative; the other branch is the point reflection of this one, so
products mn (the only thing the predicates look at) are the same on both.
For irrational k (elements of Q(xi)) "non-negative" means for xi larger than
every rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .exactmath import XI, RationalFunction, exact_sqrt, is_integer, is_rational, sign, to_rational
from .rootsystem import DomainError

Point = Tuple[int, int]


def _as_level_value(k):
    if isinstance(k, RationalFunction):
        return k
    if isinstance(k, str) and k.strip().lower() in ("xi", "irrational"):
        return XI
    return to_rational(k)


@dataclass(frozen=True)
class VirLevel:
    """Level k != -2; rational levels expose (p, q) with k + 2 = p/q."""

    k: object

    def __post_init__(self):
        object.__setattr__(self, "k", _as_level_value(self.k))
        if self.k == -2:
            raise DomainError("k = -2 is excluded")

    @classmethod
    def from_pq(cls, p: int, q: int) -> "VirLevel":
        if q == 0:
            raise DomainError("q must be non-zero")
        return cls(Fraction(p, q) - 2)

    @property
    def is_rational(self) -> bool:
        return is_rational(self.k)

    @property
    def shifted(self):
        return self.k + 2

    @property
    def p(self) -> int:
        self._need_rational()
        return Fraction(self.shifted).numerator

    @property
    def q(self) -> int:
        self._need_rational()
        return Fraction(self.shifted).denominator

    def _need_rational(self):
        if not self.is_rational:
            raise DomainError("p, q exist only for rational levels")

    @property
    def c(self):
        return c_of_k(self.k)


def as_level(k) -> VirLevel:
    return k if isinstance(k, VirLevel) else VirLevel(k)


def c_of_k(k):
    k = as_level(k).k
    return 1 - 6 * (k + 1) ** 2 / (k + 2)


def c_pq(p: int, q: int) -> Fraction:
    return 1 - Fraction(6 * (p - q) ** 2, p * q)


def h_mn(m, n, k):
    k = as_level(k).k
    u = k + 2
    return ((m * u - n) ** 2 - (k + 1) ** 2) / (4 * u)


def h_pq(r, s, p: int, q: int) -> Fraction:
    if p * q == 0:
        raise DomainError("pq must be non-zero")
    return Fraction((p * r - q * s) ** 2 - (p - q) ** 2, 4 * p * q)


def k_of_c(c) -> List[Fraction]:
    """Rational levels k with c(k) = c (empty when both roots are irrational)."""
    c = to_rational(c)
    # 6k^2 + (11 + c)k + (4 + 2c) = 0, discriminant (c - 1)(c - 25)
    disc = (c - 1) * (c - 25)
    root = exact_sqrt(disc)
    if root is None:
        return []
    ks = sorted({(-(11 + c) + root) / 12, (-(11 + c) - root) / 12})
    return [k for k in ks if k != -2]


def b_square(h, k):
    k = as_level(k).k
    return 4 * (k + 2) * h + (k + 1) ** 2


# ---------------------------------------------------------------------------
# the line x(k+2) - y = b


@dataclass(frozen=True)
class KacLine:
    """Points (m + q j, n + p j) of a Kac line, or its single point for irrational k."""

    level: object
    h: object
    b_square: object
    b: object  # None when b is not in the coefficient field
    base: Optional[Point]  # a point on the line (the point, for irrational k)
    step: Optional[Point]  # (q, p) for rational k

    @property
    def has_points(self) -> bool:
        return self.base is not None

    def point(self, j: int) -> Point:
        m0, n0 = self.base
        if self.step is None:
            if j:
                raise IndexError("irrational lines carry at most one point")
            return self.base
        return (m0 + self.step[0] * j, n0 + self.step[1] * j)

    def points(self, bound: int) -> List[Point]:
        """All points with |m|, |n| <= bound."""
        if not self.has_points:
            return []
        if self.step is None:
            m, n = self.base
            return [self.base] if abs(m) <= bound and abs(n) <= bound else []
        q = self.step[0]
        m0 = self.base[0]
        lo = math.ceil(Fraction(-bound - m0, q))
        hi = math.floor(Fraction(bound - m0, q))
        out = []
        for j in range(lo, hi + 1):
            m, n = self.point(j)
            if abs(n) <= bound:
                out.append((m, n))
        return out

    def _roots(self):
        m0, n0 = self.base
        q, p = self.step
        return Fraction(-m0, q), Fraction(-n0, p)

    def has_product(self, want_positive: bool) -> bool:
        """Whether some point has mn > 0 (or mn < 0)."""
        if not self.has_points:
            return False
        if self.step is None:
            m, n = self.base
            return m * n > 0 if want_positive else m * n < 0
        r1, r2 = sorted(self._roots())
        strictly_between = math.floor(r1) + 1 < r2
        p = self.step[1]
        # f(j) = (m0 + qj)(n0 + pj) has leading coefficient qp
        if (p > 0) == want_positive:
            return True
        return strictly_between

    def minimal_points(self, bound: Optional[int] = None) -> List[Point]:
        if not self.has_points:
            return []
        if bound is not None:
            cands = [pt for pt in self.points(bound) if pt[0] * pt[1] > 0]
        elif self.step is None:
            cands = [self.base]
        else:
            r1, r2 = sorted(self._roots())
            if self.step[1] > 0:
                # products are positive outside [r1, r2] and grow away from it
                js = [math.ceil(r1) - 1, math.floor(r2) + 1]
            else:
                js = [j for j in (math.floor(r1) + 1, math.ceil(r2) - 1) if r1 < j < r2]
            cands = [self.point(j) for j in js]
        cands = [pt for pt in cands if pt[0] * pt[1] > 0]
        if not cands:
            return []
        best = min(m * n for m, n in cands)
        return sorted({pt for pt in cands if pt[0] * pt[1] == best})


def _canonical_sqrt(x):
    r = exact_sqrt(x)
    if r is None:
        return None
    return -r if sign(r) < 0 else r


def _irrational_point(u, b) -> Optional[Point]:
    # solve m*u - n = b with integers m, n; u is non-constant so m is unique
    xs = []
    x = 0
    while len(xs) < 2:
        try:
            xs.append((x, u(x), b(x) if isinstance(b, RationalFunction) else b))
        except ZeroDivisionError:
            pass
        x += 1
        if len(xs) == 2 and xs[0][1] == xs[1][1]:
            xs.pop()
    (_, u1, b1), (_, u2, b2) = xs
    m = (b1 - b2) / (u1 - u2)
    if m.denominator != 1:
        return None
    rest = m * u - b
    if not is_rational(rest) or not is_integer(rest):
        return None
    return (int(m), int(rest))


def kac_line(h, k) -> KacLine:
    level = as_level(k)
    bsq = b_square(h, level)
    b = _canonical_sqrt(bsq)
    if b is None:
        return KacLine(level, h, bsq, None, None, None)
    if level.is_rational:
        if not is_rational(b):
            return KacLine(level, h, bsq, b, None, None)
        p, q = level.p, level.q
        qb = q * b
        if qb.denominator != 1:
            return KacLine(level, h, bsq, b, None, None)
        qb = int(qb)
        m0 = (qb * pow(p, -1, q)) % q if q > 1 else 0
        n0 = (p * m0 - qb) // q
        return KacLine(level, h, bsq, b, (m0, n0), (q, p))
    return KacLine(level, h, bsq, b, _irrational_point(level.shifted, b), None)


def is_verma_irreducible(h, k) -> bool:
    return not kac_line(h, k).has_product(True)


def is_weakly_admissible(h, k) -> bool:
    return not kac_line(h, k).has_product(False)


def minimal_points(h, k, bound: Optional[int] = None) -> List[Point]:
    """Points of the line with minimal positive product mn.

    Without ``bound`` the answer is exact (the products along a rational line
    form a quadratic in the step index).  With ``bound`` the points with
    |m|, |n| <= bound are enumerated instead.
    """
    return kac_line(h, k).minimal_points(bound)


def has_unique_minimal_pair(points: List[Point]) -> bool:
    """Exactly one minimal point, or exactly the pair (m, n), (-m, -n)."""
    if len(points) == 1:
        return True
    if len(points) == 2:
        (a, b), (c, d) = points
        return a == -c and b == -d
    return False


def is_c_admissible(h, k) -> bool:
    level = as_level(k)
    if not level.is_rational:
        line = kac_line(h, level)
        return line.has_points and line.base[0] * line.base[1] > 0
    p, q = level.p, level.q
    if p < 0:
        return False
    if not is_rational(h) or to_rational(h) == h_pq(0, p, p, q):
        return False
    return _on_grid(h, p, q) is not None


def _on_grid(h, p: int, q: int) -> Optional[Point]:
    if not is_rational(h):
        return None
    h = to_rational(h)
    for r in range(q + 1):
        for s in range(p + 1):
            if h_pq(r, s, p, q) == h:
                return (r, s)
    return None


# ---------------------------------------------------------------------------
# grids


@dataclass(frozen=True)
class GridPoint:
    r: int
    s: int
    h: Fraction


def _check_coprime(p: int, q: int):
    if p <= 0 or q <= 0:
        raise DomainError("p and q must be positive")
    if math.gcd(p, q) != 1:
        raise DomainError(f"p={p}, q={q} are not coprime")


def _dedup(points, p, q) -> List[GridPoint]:
    seen, out = set(), []
    for r, s in points:
        rep = min((r, s), (q - r, p - s))
        if rep in seen:
            continue
        seen.add(rep)
        out.append(GridPoint(rep[0], rep[1], h_pq(rep[0], rep[1], p, q)))
    return sorted(out, key=lambda g: (g.r, g.s))


def admissible_grid(p: int, q: int) -> List[GridPoint]:
    """c-admissible weights at c = c^{p,q}, one per value of h."""
    _check_coprime(p, q)
    pts = [(r, s) for r in range(q + 1) for s in range(p + 1)
           if (r, s) not in ((0, p), (q, 0))]
    return _dedup(pts, p, q)


def weakly_admissible_grid(p: int, q: int) -> List[GridPoint]:
    _check_coprime(p, q)
    return _dedup([(r, s) for r in range(q + 1) for s in range(p + 1)], p, q)


def minimal_models(p: int, q: int) -> List[GridPoint]:
    _check_coprime(p, q)
    if p < 2 or q < 2:
        raise DomainError("minimal models need p, q >= 2")
    return _dedup([(r, s) for r in range(1, q) for s in range(1, p)], p, q)


def classify_grid(p: int, q: int) -> List[Dict[str, object]]:
    """Every point of the rectangle with its flags (no identification)."""
    _check_coprime(p, q)
    k = Fraction(p, q) - 2
    out = []
    for r in range(q + 1):
        for s in range(p + 1):
            h = h_pq(r, s, p, q)
            out.append({
                "r": r, "s": s, "h": h,
                "weaklyAdmissible": is_weakly_admissible(h, k),
                "cAdmissible": is_c_admissible(h, k),
                "minimalModel": 0 < r < q and 0 < s < p and p >= 2 and q >= 2,
            })
    return out


# ---------------------------------------------------------------------------
# self-extensions


@dataclass(frozen=True)
class SelfExtReport:
    dim: int
    irreducible: bool
    integral_b: bool
    central_1_or_25: bool
    note: str = ""


def selfext_report(h, k) -> SelfExtReport:
    level = as_level(k)
    u = level.shifted
    irreducible = is_verma_irreducible(h, level)
    b = _canonical_sqrt(b_square(h, level))
    note = ""
    case_b = False
    if b is None:
        note = "b irrational"
    elif is_rational(u) and is_rational(b):
        case_b = (is_integer(b) and is_integer(b / u) and u not in (1, -1) and b != 0)
    c = level.c
    case_c = is_rational(c) and c in (1, 25) and h != 0
    dim = 1 if (irreducible or case_b or case_c) else 0
    return SelfExtReport(dim, irreducible, case_b, case_c, note)


def selfext_dim_vir(h, k) -> int:
    return selfext_report(h, k).dim


# ---------------------------------------------------------------------------
# Jantzen directions


def kac_curve_tangent(m, n, k) -> Tuple[object, object]:
    """(dh/dk, dc/dk) along k -> (h_{m,n}(k), c(k))."""
    k = as_level(k).k
    u = k + 2
    num = (m * u - n) ** 2 - (u - 1) ** 2
    dnum = 2 * m * (m * u - n) - 2 * (u - 1)
    dh = dnum / (4 * u) - num / (4 * u * u)
    dc = -6 * (u * u - 1) / (u * u)
    return dh, dc


def is_transverse(h, k, direction: Tuple[object, object]) -> bool:
    """Direction (dh, dc) crosses the Kac curve of the minimal point transversally."""
    pts = minimal_points(h, k)
    if not pts:
        raise DomainError("no minimal point")
    m, n = pts[0]
    th, tc = kac_curve_tangent(m, n, k)
    a, b = direction
    return a * tc - b * th != 0


def minimal_depth(h, k) -> Optional[int]:
    pts = minimal_points(h, k)
    return pts[0][0] * pts[0][1] if pts else None


__all__ = [
    "VirLevel", "KacLine", "GridPoint", "SelfExtReport", "c_of_k", "c_pq", "h_mn",
    "h_pq", "k_of_c", "b_square", "kac_line", "is_verma_irreducible",
    "is_weakly_admissible", "minimal_points", "has_unique_minimal_pair",
    "is_c_admissible", "admissible_grid", "weakly_admissible_grid", "minimal_models",
    "classify_grid", "selfext_report", "selfext_dim_vir", "kac_curve_tangent",
    "is_transverse", "minimal_depth", "as_level",
]
