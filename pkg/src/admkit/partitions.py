"""Graded dimensions of Verma modules.

Virasoro: the ordinary partition function.  Neveu-Schwarz: coefficients of
prod_j (1 + q^(j-1/2)) / (1 - q^j).  Affine sl2: the vector partition function
of the positive roots alpha + n*delta (n >= 0), -alpha + n*delta (n >= 1) and
n*delta (n >= 1, multiplicity one).

Half-integer grades are handled as doubled integers.  Every table is built
once up to a cutoff; asking beyond it raises :class:`CutoffError`.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Tuple

VIR_CUTOFF = 64
NS_CUTOFF = 32
AFFINE_CUTOFF = 12


class CutoffError(ValueError):
    """Requested grade lies beyond the tabulated range."""


@dataclass(frozen=True)
class GradedDims:
    table: Dict = field(default_factory=dict)
    cutoff: object = None

    def __getitem__(self, grade):
        return self.table[grade]


_lock = threading.Lock()
_tables: Dict[str, Dict] = {}


def _build_vir(cutoff: int) -> Dict[int, int]:
    coeffs = [1] + [0] * cutoff
    for j in range(1, cutoff + 1):
        for n in range(j, cutoff + 1):
            coeffs[n] += coeffs[n - j]
    return dict(enumerate(coeffs))


def _build_ns(cutoff2: int) -> Dict[int, int]:
    # doubled grades: bosonic parts 2j, fermionic parts 2j-1 used at most once
    coeffs = [1] + [0] * cutoff2
    for j in range(1, cutoff2 + 1):
        if j % 2 == 0:
            for n in range(j, cutoff2 + 1):
                coeffs[n] += coeffs[n - j]
        else:
            for n in range(cutoff2, j - 1, -1):
                coeffs[n] += coeffs[n - j]
    return dict(enumerate(coeffs))


def affine_sl2_positive_roots(max_b: int):
    """Positive roots (a, b) = a*alpha + b*delta with b <= max_b, with multiplicity."""
    roots = [((1, 0), 1)]
    for n in range(1, max_b + 1):
        roots += [((1, n), 1), ((-1, n), 1), ((0, n), 1)]
    return roots


def _build_affine(cutoff: int) -> Dict[Tuple[int, int], int]:
    # Partial sums of a multiset summing to (a, b) with |a| + b <= cutoff stay
    # inside the box |a| <= cutoff, 0 <= b <= cutoff.
    table: Dict[Tuple[int, int], int] = {(0, 0): 1}
    box = [(a, b) for b in range(cutoff + 1) for a in range(-cutoff, cutoff + 1)]
    for (ra, rb), mult in affine_sl2_positive_roots(cutoff):
        for _ in range(mult):
            # multiply by 1/(1 - x^ra q^rb), in an order that keeps updates valid
            keys = sorted(box, key=lambda g: (g[1], g[0] * (1 if ra >= 0 else -1)))
            for a, b in keys:
                src = (a - ra, b - rb)
                if src in table:
                    table[(a, b)] = table.get((a, b), 0) + table[src]
    return {g: v for g, v in table.items() if abs(g[0]) + g[1] <= cutoff}


def _table(name: str):
    tab = _tables.get(name)
    if tab is None:
        with _lock:
            tab = _tables.get(name)
            if tab is None:
                if name == "vir":
                    tab = _build_vir(VIR_CUTOFF)
                elif name == "ns":
                    tab = _build_ns(2 * NS_CUTOFF)
                else:
                    tab = _build_affine(AFFINE_CUTOFF)
                _tables[name] = tab
    return tab


def half_integer_x2(n) -> int:
    """Doubled value of a nonnegative half-integer given as int/Fraction/str."""
    x = Fraction(n) if not isinstance(n, Fraction) else n
    if (2 * x).denominator != 1:
        raise ValueError(f"{n} is not a half-integer")
    return int(2 * x)


def vir_partition(n: int) -> int:
    if Fraction(n).denominator != 1:
        raise ValueError(f"Virasoro grades are integers, got {n}")
    n = int(n)
    if n < 0:
        return 0
    if n > VIR_CUTOFF:
        raise CutoffError(f"Virasoro partition table stops at {VIR_CUTOFF}")
    return _table("vir")[n]


def ns_partition(n) -> int:
    n2 = half_integer_x2(n)
    return ns_partition_x2(n2)


def ns_partition_x2(n2: int) -> int:
    if n2 < 0:
        return 0
    if n2 > 2 * NS_CUTOFF:
        raise CutoffError(f"Neveu-Schwarz partition table stops at {NS_CUTOFF}")
    return _table("ns")[n2]


def affine_sl2_partition(nu: Tuple[int, int]) -> int:
    a, b = nu
    if b < 0 or a < -b:
        return 0
    if abs(a) + b > AFFINE_CUTOFF:
        raise CutoffError(f"affine sl2 partition table stops at |a|+b <= {AFFINE_CUTOFF}")
    return _table("aff")[(a, b)]


def vir_table(up_to: int) -> GradedDims:
    return GradedDims({n: vir_partition(n) for n in range(up_to + 1)}, up_to)


def ns_table(up_to) -> GradedDims:
    top = half_integer_x2(up_to)
    return GradedDims({Fraction(n, 2): ns_partition_x2(n) for n in range(top + 1)}, Fraction(top, 2))


def affine_sl2_table(up_to: int) -> GradedDims:
    """All grades with |a| + b <= up_to."""
    table = {}
    for b in range(up_to + 1):
        for a in range(-b, up_to - b + 1):
            table[(a, b)] = affine_sl2_partition((a, b))
    return GradedDims(table, up_to)
