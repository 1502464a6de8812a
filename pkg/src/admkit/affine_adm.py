"""Level arithmetic for untwisted affine algebras.

Vacuum weights k*Lambda_0 are decided for every simple type from the table of
Coxeter data.  For affine sl2 the full set X_k of admissible weights at
k = -2 + p/q is enumerated together with the coroot pairs B_k that cut out
the polyhedra.

Weights use the :mod:`admkit.rootsystem` coordinates (pairings with
alpha_0^vee, alpha_1^vee, D) and are taken modulo C*delta by setting the
D-pairing to zero.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .exactmath import RationalFunction, is_rational, to_rational
from .rootsystem import (DomainError, Root, Weight, affine_sl2, affine_type, classify,
                         parse_type)
from .virasoro import _as_level_value


# ---------------------------------------------------------------------------
# the simple-type table


@dataclass(frozen=True)
class SimpleTypeData:
    family: str
    rank: int
    h: int
    hdual: int
    lacety: int
    rdual: int

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def simply_laced(self) -> bool:
        return self.lacety == 1

    def cartan_data(self):
        return affine_type(self.family, self.rank)


def _coxeter(family: str, n: int) -> Tuple[int, int, int]:
    """(h, h^vee, lacety) from the classification."""
    if family == "A":
        return n + 1, n + 1, 1
    if family == "B":
        return 2 * n, 2 * n - 1, 2
    if family == "C":
        return 2 * n, n + 1, 2
    if family == "D":
        return 2 * n - 2, 2 * n - 2, 1
    return {
        ("E", 6): (12, 12, 1),
        ("E", 7): (18, 18, 1),
        ("E", 8): (30, 30, 1),
        ("F", 4): (12, 9, 2),
        ("G", 2): (6, 4, 3),
    }[(family, n)]


def simple_type(family: str, rank: Optional[int] = None) -> SimpleTypeData:
    """Look up e.g. ``simple_type("G2")`` or ``simple_type("B", 3)``."""
    fam, n = parse_type(family, rank)
    h, hd, l = _coxeter(fam, n)
    # for untwisted affinizations the dual lacing number equals the lacety
    return SimpleTypeData(fam, n, h, hd, l, l)


# ---------------------------------------------------------------------------
# levels


@dataclass(frozen=True)
class LevelPQ:
    """k + h^vee = p/q in lowest terms, or an irrational level."""

    type: SimpleTypeData
    p: Optional[int]
    q: Optional[int]
    k: object = field(default=None)

    def __post_init__(self):
        if self.p is None:
            return
        if self.q <= 0 or math.gcd(self.p, self.q) != 1:
            raise DomainError(f"p/q = {self.p}/{self.q} must be in lowest terms with q > 0")
        if self.p == 0:
            raise DomainError("critical level k = -h^vee")
        if self.k is None:
            object.__setattr__(self, "k", Fraction(self.p, self.q) - self.type.hdual)

    @classmethod
    def from_pq(cls, typ: SimpleTypeData, p: int, q: int) -> "LevelPQ":
        return cls(typ, p, q)

    @classmethod
    def from_level(cls, typ: SimpleTypeData, k) -> "LevelPQ":
        k = _as_level_value(k)
        if isinstance(k, RationalFunction):
            return cls(typ, None, None, k)
        shifted = to_rational(k) + typ.hdual
        if shifted == 0:
            raise DomainError("critical level k = -h^vee")
        return cls(typ, shifted.numerator, shifted.denominator, to_rational(k))

    @property
    def is_rational(self) -> bool:
        return self.p is not None

    @property
    def gcd_branch(self) -> Optional[str]:
        """"coprime" when gcd(q, l) = 1, "divisible" when l | q."""
        if not self.is_rational:
            return None
        return "divisible" if self.q % self.type.lacety == 0 and self.type.lacety > 1 else "coprime"

    def threshold(self) -> Optional[int]:
        """h^vee on the coprime branch, h on the divisible one."""
        branch = self.gcd_branch
        if branch is None:
            return None
        return self.type.hdual if branch == "coprime" else self.type.h


# ---------------------------------------------------------------------------
# vacuum modules


class VacuumClass(str, enum.Enum):
    NOT_WEAKLY_ADMISSIBLE = "notWeaklyAdmissible"
    WEAKLY_ADMISSIBLE_ONLY = "weaklyAdmissibleOnly"
    K_ADMISSIBLE = "kAdmissible"
    KW_ADMISSIBLE = "kwAdmissible"


@dataclass(frozen=True)
class VacuumStatus:
    level: LevelPQ
    status: VacuumClass
    weakly_admissible: bool
    k_admissible: bool
    kw_admissible: bool
    admissible: str  # "true" | "false" | "conjectural"
    selfext_split_over_derived: bool = True

    def flags(self) -> Dict[str, object]:
        lv = self.level
        return {
            "type": lv.type.name,
            "p": lv.p, "q": lv.q,
            "irrational": not lv.is_rational,
            "status": self.status.value,
            "weaklyAdmissible": self.weakly_admissible,
            "kAdmissible": self.k_admissible,
            "kwAdmissible": self.kw_admissible,
            "admissible": self.admissible,
            "selfExtSplitOverDerived": self.selfext_split_over_derived,
        }


def vacuum_status(typ, k=None, *, p: Optional[int] = None, q: Optional[int] = None) -> VacuumStatus:
    """Classify L(k Lambda_0).  Give either ``k`` or ``p`` and ``q``."""
    if isinstance(typ, str):
        typ = simple_type(typ)
    if isinstance(k, LevelPQ):
        level = k
    elif p is not None:
        level = LevelPQ.from_pq(typ, p, 1 if q is None else q)
    else:
        level = LevelPQ.from_level(typ, k)
    if not level.is_rational:
        return VacuumStatus(level, VacuumClass.K_ADMISSIBLE, True, True, False, "false")
    t = level.threshold()
    weak = level.p >= t - 1
    kw = level.p >= t
    kadm = weak
    if kw:
        status, adm = VacuumClass.KW_ADMISSIBLE, "true"
    elif kadm:
        status = VacuumClass.K_ADMISSIBLE
        is_sl2 = typ.family == "A" and typ.rank == 1
        adm = "false" if is_sl2 else "conjectural"
    else:
        status, adm = VacuumClass.NOT_WEAKLY_ADMISSIBLE, "false"
    return VacuumStatus(level, status, weak, kadm, kw, adm)


def vacuum_simple_root(typ: SimpleTypeData, p: int, q: int) -> Tuple[Tuple[int, ...], int]:
    """The extra simple root of Pi(k Lambda_0) and its shifted pairing.

    Returns (root vector in simple-root coordinates, <k Lambda_0 + rho, root^vee>).
    The root is q delta - theta on the coprime branch and
    (q/l) delta - theta_short otherwise.
    """
    level = LevelPQ.from_pq(typ, p, q)
    data = typ.cartan_data()
    fin_marks = data.marks[1:]
    if level.gcd_branch == "coprime":
        theta = fin_marks
        mult = q
        pairing = p + 1 - typ.hdual
    else:
        from .rootsystem import finite_part_data, positive_roots
        fin = finite_part_data(data)
        short = [r for r in positive_roots(fin, 10 ** 6) if fin.root_norm(r) < 2]
        theta = max(short, key=lambda r: r.height).vector
        mult = q // typ.lacety
        pairing = p + 1 - typ.h
    vec = (mult,) + tuple(mult * m - t for m, t in zip(fin_marks, theta))
    return vec, pairing


# ---------------------------------------------------------------------------
# affine sl2: B_k, polyhedra and X_k


@dataclass(frozen=True)
class Sl2Coroot:
    """n K + sign alpha^vee, the coroot of the real root n delta + sign alpha."""

    n: int
    sign: int

    @property
    def root(self) -> Tuple[int, int]:
        # delta = alpha_0 + alpha_1, alpha = alpha_1
        return (self.n, self.n + self.sign)

    def pair(self, lam: Weight):
        """<lam, n K + sign alpha^vee> for an affine sl2 weight."""
        return self.n * lam.level + self.sign * lam.coords[1]

    def __str__(self):
        s = "+" if self.sign > 0 else "-"
        return f"{self.n}K{s}a"


def _check_sl2_pq(p: int, q: int):
    if p <= 0 or q <= 0 or math.gcd(p, q) != 1:
        raise DomainError(f"(p, q) = ({p}, {q}) must be coprime positive integers")


def sl2_Bk(p: int, q: int) -> List[Tuple[Sl2Coroot, Sl2Coroot]]:
    _check_sl2_pq(p, q)
    return [(Sl2Coroot(r - 1, 1), Sl2Coroot(q - r + 1, -1)) for r in range(1, q + 1)]


def sl2_polyhedron(gamma: Tuple[Sl2Coroot, Sl2Coroot], p: int, rdual: int = 1) -> dict:
    """Constraints <lam + rho, beta^vee> in [0, p r^vee] for beta^vee in gamma."""
    return {
        "coroots": [str(c) for c in gamma],
        "constraints": [{"coroot": str(c), "min": 0, "max": p * rdual} for c in gamma],
        "level": {"coroot": "K", "value": p},
    }


@dataclass(frozen=True)
class Sl2AdmWeight:
    r: int
    s: int
    p: int
    q: int

    @property
    def k(self) -> Fraction:
        return Fraction(self.p, self.q) - 2

    @property
    def finite_coord(self) -> Fraction:
        """(lam_{r,s}, alpha) = (s - 1) - (r - 1) p / q."""
        return (self.s - 1) - (self.r - 1) * Fraction(self.p, self.q)

    @property
    def gamma(self) -> Tuple[Sl2Coroot, Sl2Coroot]:
        return (Sl2Coroot(self.r - 1, 1), Sl2Coroot(self.q - self.r + 1, -1))

    def weight(self) -> Weight:
        m = self.finite_coord
        return affine_sl2().weight((self.k - m, m, 0))

    def pairings(self) -> Tuple[Fraction, Fraction]:
        lam = self.weight()
        shifted = lam + lam.data.rho
        return tuple(c.pair(shifted) for c in self.gamma)

    @property
    def is_kw(self) -> bool:
        return 1 <= self.s <= self.p - 1

    def to_json(self) -> dict:
        return {"r": self.r, "s": self.s, "finiteCoord": self.finite_coord,
                "pairings": list(self.pairings())}


def sl2_Xk(p: int, q: int) -> List[Sl2AdmWeight]:
    _check_sl2_pq(p, q)
    return [Sl2AdmWeight(r, s, p, q) for r in range(1, q + 1) for s in range(0, p + 1)]


def sl2_kw_set(p: int, q: int) -> List[Sl2AdmWeight]:
    return [w for w in sl2_Xk(p, q) if w.is_kw]


def sl2_kadm_set(p: int, q: int) -> List[Sl2AdmWeight]:
    # for sl2 every point of X_k is k-admissible
    return sl2_Xk(p, q)


@dataclass
class CrossValidation:
    p: int
    q: int
    checked: int = 0
    mismatches: List[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "checked": self.checked, "ok": self.ok,
                "mismatches": self.mismatches}


def cross_validate_sl2(p: int, q: int, H: int = 20) -> CrossValidation:
    """Re-derive the flags of every lam_{r,s} through :func:`rootsystem.classify`."""
    _check_sl2_pq(p, q)
    out = CrossValidation(p, q)
    for w in sl2_Xk(p, q):
        lam = w.weight()
        rep = classify(lam, H)
        expect = {
            "weaklyAdmissible": True,
            "rational": True,
            "kAdmissible": "true",
            "kwAdmissible": w.is_kw,
            "dominant": w.is_kw,
            "shiftedRegular": w.is_kw,
        }
        got = rep.flags()
        bad = {key: got[key] for key, val in expect.items() if got[key] != val}
        if w.pairings() != (w.s, p - w.s):
            bad["pairings"] = list(w.pairings())
        simple = sorted(r.vector for r in rep.simple_system)
        if simple != sorted(c.root for c in w.gamma):
            bad["simpleSystem"] = simple
        out.checked += 1
        if bad:
            out.mismatches.append({"r": w.r, "s": w.s, "got": bad})
    return out


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EmptinessVerdict:
    empty: bool
    note: str = ""

    def __bool__(self):
        return self.empty


def adm_category_emptiness(typ, k) -> EmptinessVerdict:
    """True iff k + h^vee is a non-positive rational."""
    if isinstance(typ, str):
        typ = simple_type(typ)
    k = _as_level_value(k)
    if not is_rational(k):
        return EmptinessVerdict(False, "irrational level: only the vacuum criterion applies")
    return EmptinessVerdict(to_rational(k) + typ.hdual <= 0)


__all__ = [
    "SimpleTypeData", "simple_type", "LevelPQ", "VacuumClass", "VacuumStatus",
    "vacuum_status", "vacuum_simple_root", "Sl2Coroot", "sl2_Bk", "sl2_polyhedron",
    "Sl2AdmWeight", "sl2_Xk", "sl2_kw_set", "sl2_kadm_set", "CrossValidation",
    "cross_validate_sl2", "EmptinessVerdict", "adm_category_emptiness",
]
