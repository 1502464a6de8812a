"""The ten acceptance checks, shared by ``admkit verify`` and the test suite.

Each check returns a :class:`CheckResult`; none of them raises on a failed
comparison.  Checks that sample use a seeded ``random.Random`` so reruns are
byte-identical.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from . import affine_adm, neveu_schwarz as ns, virasoro as vir
from .detformulas import compare_affine_sl2, compare_ns, compare_vir
from .exactmath import INFINITE, TPoly, smith_t_valuations
from .partitions import affine_sl2_partition, ns_partition_x2, vir_partition
from .rootsystem import (affine_sl2, affine_type, dot_reflect, finite_type, real_positive_roots,
                         selfext_dim, upsilon_bounds)
from .shapovalov import (AffineSl2Engine, NeveuSchwarzEngine, NotInImage, VirasoroEngine,
                         selfext_jantzen_test, sum_formula_check)
from .wreduction import vir_recovery_check


@dataclass
class CheckResult:
    ident: str
    anchor: str
    passed: bool
    seconds: float = 0.0
    limit: Optional[float] = None
    detail: Dict[str, object] = field(default_factory=dict)

    @property
    def within_time(self) -> bool:
        return self.limit is None or self.seconds <= self.limit

    @property
    def ok(self) -> bool:
        return self.passed and self.within_time

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        limit = f" (limit {self.limit:.0f}s)" if self.limit else ""
        return f"{status}  {self.ident:<4} {self.anchor:<48} {self.seconds:7.2f}s{limit}"


def _timed(ident: str, anchor: str, limit: Optional[float], body: Callable[[], Tuple[bool, dict]]):
    t0 = time.perf_counter()
    passed, detail = body()
    return CheckResult(ident, anchor, passed, time.perf_counter() - t0, limit, detail)


# ---------------------------------------------------------------------------
# 1-3: determinant formulas


def check_vir_determinant() -> CheckResult:
    def body():
        eng = VirasoroEngine()
        bad = [N for N in range(1, 7) if not compare_vir(eng.shapovalov_det(N), N).ok]
        return not bad, {"depths": "1..6", "mismatches": bad}
    return _timed("C1", "Virasoro Kac determinant, product over (m,n)", 30, body)


def check_ns_determinant() -> CheckResult:
    def body():
        eng = NeveuSchwarzEngine()
        bad = []
        for n2 in range(1, 8):
            N = Fraction(n2, 2)
            if not compare_ns(eng.shapovalov_det(N), N).ok:
                bad.append(str(N))
        return not bad, {"depths": "1/2..7/2", "mismatches": bad}
    return _timed("C2", "Neveu-Schwarz determinant over nice points", 30, body)


def check_affine_determinant() -> CheckResult:
    def body():
        eng = AffineSl2Engine(max_depth=8)
        grades = eng.grades_upto(4)
        bad = [g for g in grades if not compare_affine_sl2(eng.shapovalov_det(g), g).ok]
        return not bad, {"grades": len(grades), "mismatches": bad}
    return _timed("C3", "affine sl2 Shapovalov determinant", 60, body)


# ---------------------------------------------------------------------------
# 4: Jantzen sum formula


def jantzen_vir_sample() -> List[Tuple[int, int, int, int]]:
    """Ten reducible (p, q, r, s) grid weights, five per central charge."""
    return [(4, 3, 1, 1), (4, 3, 1, 2), (4, 3, 2, 1), (4, 3, 0, 0), (4, 3, 3, 2),
            (5, 2, 1, 1), (5, 2, 1, 2), (5, 2, 1, 4), (5, 2, 0, 3), (5, 2, 2, 1)]


def jantzen_affine_sample() -> List[Tuple[int, int]]:
    """Five dominant integral (level, a) with a = <lam, alpha^vee>."""
    return [(0, 0), (1, 0), (1, 1), (2, 1), (3, 2)]


def check_jantzen_sum() -> CheckResult:
    def body():
        failures = []
        eng = VirasoroEngine()
        for p, q, r, s in jantzen_vir_sample():
            h = vir.h_pq(r, s, p, q)
            lam = {"h": h, "c": vir.c_pq(p, q)}
            for g in eng.grades_upto(6):
                rep = sum_formula_check(eng, lam, {"h": 1, "c": 0}, None, g)
                if not rep.ok:
                    failures.append(("vir", p, q, r, s, g))
        aff = AffineSl2Engine()
        for level, a in jantzen_affine_sample():
            lam = {"a": a, "K": level, "D": 0}
            for g in aff.grades_upto(3):
                # deform along rho
                rep = sum_formula_check(aff, lam, {"a": 1, "K": 2, "D": 0}, None, g)
                if not rep.ok:
                    failures.append(("aff", level, a, g))
        return not failures, {"virWeights": 10, "affineWeights": 5, "failures": failures}
    return _timed("C4", "Jantzen sum formula", None, body)


# ---------------------------------------------------------------------------
# 5-7


def check_sl2_counts() -> CheckResult:
    def body():
        rows = []
        ok = True
        for p, q in [(1, 2), (2, 3), (3, 2), (4, 3)]:
            kadm = len(affine_adm.sl2_kadm_set(p, q))
            kw = len(affine_adm.sl2_kw_set(p, q))
            cv = affine_adm.cross_validate_sl2(p, q)
            good = kadm == q * (p + 1) and kw == q * (p - 1) and cv.ok
            ok = ok and good
            rows.append({"p": p, "q": q, "kAdmissible": kadm, "kw": kw, "crossValidated": cv.ok})
        return ok, {"rows": rows}
    return _timed("C5", "affine sl2 admissible counts q(p+1), q(p-1)", 10, body)


def check_vir_classification() -> CheckResult:
    def body():
        p, q = 4, 3
        k = Fraction(p, q) - 2
        grid = [(r, s) for r in range(q + 1) for s in range(p + 1)]
        expected = {pt for pt in grid if pt not in ((0, p), (q, 0))}
        by_predicate = {(r, s) for r, s in grid if vir.is_c_admissible(vir.h_pq(r, s, p, q), k)}
        by_minimal_points = set()
        for r, s in grid:
            h = vir.h_pq(r, s, p, q)
            pts = vir.minimal_points(h, k, bound=4 * p * q)
            if (vir.is_weakly_admissible(h, k) and not vir.is_verma_irreducible(h, k)
                    and vir.has_unique_minimal_pair(pts)):
                by_minimal_points.add((r, s))
        mm = sorted({g.h for g in vir.minimal_models(p, q)})
        ok = (by_predicate == expected and by_minimal_points == expected
              and mm == [Fraction(0), Fraction(1, 16), Fraction(1, 2)])
        return ok, {"admissible": len(by_predicate), "rederived": len(by_minimal_points),
                    "minimalModels": [str(x) for x in mm]}
    return _timed("C6", "Virasoro c-admissible grid and minimal models", None, body)


def check_recovery() -> CheckResult:
    def body():
        res = {f"{p},{q}": vir_recovery_check(p, q).ok for p, q in [(4, 3), (3, 2), (5, 2), (2, 1)]}
        return all(res.values()), res
    return _timed("C7", "W-reduction recovers Virasoro weights", 10, body)


# ---------------------------------------------------------------------------
# 8: vacuum table

# (type, p, q) -> (weaklyAdmissible, kAdmissible, kwAdmissible)
VACUUM_TABLE: Dict[Tuple[str, int, int], Tuple[bool, bool, bool]] = {
    ("A1", 1, 1): (True, True, False),
    ("A1", 2, 1): (True, True, True),
    ("A1", 1, 3): (True, True, False),
    ("A1", 3, 2): (True, True, True),
    ("A1", -1, 2): (False, False, False),
    ("A2", 1, 1): (False, False, False),
    ("A2", 2, 1): (True, True, False),
    ("A2", 3, 1): (True, True, True),
    ("A2", 2, 3): (True, True, False),
    ("A2", 4, 3): (True, True, True),
    ("A2", 1, 2): (False, False, False),
    ("C2", 1, 1): (False, False, False),
    ("C2", 2, 1): (True, True, False),
    ("C2", 3, 1): (True, True, True),
    ("C2", 4, 3): (True, True, True),
    ("C2", 2, 3): (True, True, False),
    ("C2", 3, 2): (True, True, False),
    ("C2", 5, 2): (True, True, True),
    ("C2", 1, 2): (False, False, False),
    ("G2", 2, 1): (False, False, False),
    ("G2", 3, 1): (True, True, False),
    ("G2", 4, 1): (True, True, True),
    ("G2", 3, 2): (True, True, False),
    ("G2", 5, 3): (True, True, False),
    ("G2", 7, 3): (True, True, True),
    ("G2", 4, 3): (False, False, False),
    ("E8", 28, 1): (False, False, False),
    ("E8", 29, 1): (True, True, False),
    ("E8", 30, 1): (True, True, True),
    ("E8", 29, 2): (True, True, False),
}


def check_vacuum_table() -> CheckResult:
    def body():
        bad = []
        for (typ, p, q), want in VACUUM_TABLE.items():
            st = affine_adm.vacuum_status(typ, p=p, q=q)
            got = (st.weakly_admissible, st.k_admissible, st.kw_admissible)
            if got != want or not st.selfext_split_over_derived:
                bad.append({"type": typ, "p": p, "q": q, "got": got})
        branches = {affine_adm.LevelPQ.from_pq(affine_adm.simple_type(t), p, q).gcd_branch
                    for t, p, q in VACUUM_TABLE}
        return not bad and branches == {"coprime", "divisible"}, {
            "triples": len(VACUUM_TABLE), "mismatches": bad}
    return _timed("C8", "vacuum admissibility for every simple type", None, body)


# ---------------------------------------------------------------------------
# 9: self-extensions


def _finite_dominant_samples():
    out = []
    for fam in ("A1", "A2", "B2", "G2", "A3"):
        data = finite_type(fam)
        for coords in itertools.product(range(3), repeat=data.rank):
            out.append(data.weight(coords))
    return out


def _affine_dominant_samples():
    data = affine_sl2()
    return [data.weight((l0, l1, 0)) for l0 in range(4) for l1 in range(4)]


def upsilon_samples(n: int = 100, seed: int = 7):
    """Weights for the upsilon bracket: affine sl2 and finite A2 / B2."""
    rng = random.Random(seed)
    aff = affine_sl2()
    fin = [finite_type("A2"), finite_type("B2")]
    out = []
    while len(out) < n:
        if rng.random() < 0.6:
            level = Fraction(rng.randint(-12, 12), rng.randint(1, 4))
            if level == -2:
                continue
            a = Fraction(rng.randint(-8, 8), rng.choice([1, 1, 2, 3]))
            out.append(aff.weight((level - a, a, 0)))
        else:
            data = rng.choice(fin)
            out.append(data.weight([Fraction(rng.randint(-6, 6), rng.choice([1, 2]))
                                    for _ in range(data.rank)]))
    return out


def vir_transverse_samples(seed: int = 11):
    """(h, c, k, mu, witness depth) at minimal-model weights with transverse mu."""
    rng = random.Random(seed)
    out = []
    for p, q in [(4, 3), (5, 2), (5, 3)]:
        k = Fraction(p, q) - 2
        for g in vir.minimal_models(p, q):
            depth = vir.minimal_depth(g.h, k)
            if depth > 6:
                continue
            for _ in range(3):
                mu = (Fraction(rng.randint(-5, 5)), Fraction(rng.randint(-5, 5)))
                if mu != (0, 0) and vir.is_transverse(g.h, k, mu):
                    out.append((g.h, vir.c_pq(p, q), k, mu, depth))
    return out


def check_selfext() -> CheckResult:
    def body():
        fin_bad = [w for w in _finite_dominant_samples() if selfext_dim(w) != 0]
        aff_bad = [w for w in _affine_dominant_samples() if selfext_dim(w) != 1]
        ups_bad = []
        for w in upsilon_samples():
            lo, hi = upsilon_bounds(w)
            if lo > hi:
                ups_bad.append(w)
        jt_bad = []
        samples = vir_transverse_samples()
        eng = VirasoroEngine()
        for h, c, k, mu, depth in samples:
            res = selfext_jantzen_test(eng, {"h": h, "c": c}, {"h": mu[0], "c": mu[1]}, None, depth)
            if not isinstance(res, NotInImage):
                jt_bad.append((str(h), str(c), mu))
        ok = not (fin_bad or aff_bad or ups_bad or jt_bad) and len(samples) > 0
        return ok, {"finiteFailures": len(fin_bad), "affineFailures": len(aff_bad),
                    "upsilonFailures": len(ups_bad), "transverseSamples": len(samples),
                    "jantzenFailures": jt_bad}
    return _timed("C9", "self-extension dimensions and Jantzen test", None, body)


# ---------------------------------------------------------------------------
# 10: property suites


def _leibniz_det(M):
    n = len(M)
    total = TPoly()
    for perm in itertools.permutations(range(n)):
        sgn = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sgn = -sgn
        term = TPoly.const(sgn)
        for i in range(n):
            term = term * M[i][perm[i]]
            if term.is_zero():
                break
        total = total + term
    return total


def random_t_matrix(rng: random.Random, n: int):
    def entry():
        shift = rng.choice([0, 0, 1, 2])
        cs = [Fraction(0)] * shift + [Fraction(rng.randint(-3, 3)) for _ in range(rng.randint(0, 3))]
        return TPoly(cs)
    return [[entry() for _ in range(n)] for _ in range(n)]


def check_properties(seed: int = 2024) -> CheckResult:
    def body():
        failures = {}
        # graded dimensions vs PBW bases
        V, N, A = VirasoroEngine(), NeveuSchwarzEngine(), AffineSl2Engine()
        pbw_bad = [n for n in range(1, 13) if len(V.pbw_basis(n)) != vir_partition(n)]
        pbw_bad += [f"{n2}/2" for n2 in range(1, 16)
                    if len(N.pbw_basis(Fraction(n2, 2))) != ns_partition_x2(n2)]
        pbw_bad += [g for g in A.grades_upto(6) if abs(g[0]) + g[1] <= 6
                    and len(A.pbw_basis(g)) != affine_sl2_partition(g)]
        failures["pbw"] = pbw_bad
        # dot reflections are involutions
        rng = random.Random(seed)
        dot_bad = 0
        for data in (finite_type("A2"), finite_type("G2"), affine_type("A1"), affine_type("C2")):
            roots = real_positive_roots(data, 6)
            for _ in range(25):
                lam = data.weight([Fraction(rng.randint(-9, 9), rng.randint(1, 3))
                                   for _ in range(data.dim)])
                r = rng.choice(roots)
                if dot_reflect(dot_reflect(lam, r), r) != lam:
                    dot_bad += 1
        failures["dot"] = dot_bad
        # grid symmetry, both algebras
        sym_bad = []
        for p in range(1, 12):
            for q in range(1, 12):
                if math.gcd(p, q) == 1:
                    for r in range(q + 1):
                        for s in range(p + 1):
                            if vir.h_pq(r, s, p, q) != vir.h_pq(q - r, p - s, p, q):
                                sym_bad.append(("vir", p, q, r, s))
                if ns.valid_ns_pair(p, q):
                    for r, s in ns.ns_grid(p, q):
                        if ns.ns_h_pq(r, s, p, q) != ns.ns_h_pq(q - r, p - s, p, q):
                            sym_bad.append(("ns", p, q, r, s))
        failures["symmetry"] = sym_bad
        # Smith valuations sum to the determinant valuation
        smith_bad = 0
        for i in range(200):
            M = random_t_matrix(rng, 1 + i % 4)
            vals = smith_t_valuations(M)
            d = _leibniz_det(M)
            if d.is_zero():
                if INFINITE not in vals:
                    smith_bad += 1
            elif sum(vals) != d.valuation():
                smith_bad += 1
        failures["smith"] = smith_bad
        ok = not pbw_bad and not dot_bad and not sym_bad and not smith_bad
        return ok, failures
    return _timed("C10", "partition/PBW, dot involution, symmetry, Smith", 60, body)


CHECKS: List[Tuple[str, Callable[[], CheckResult]]] = [
    ("C1", check_vir_determinant),
    ("C2", check_ns_determinant),
    ("C3", check_affine_determinant),
    ("C4", check_jantzen_sum),
    ("C5", check_sl2_counts),
    ("C6", check_vir_classification),
    ("C7", check_recovery),
    ("C8", check_vacuum_table),
    ("C9", check_selfext),
    ("C10", check_properties),
]

QUICK = ("C1", "C2", "C5", "C6", "C7", "C8")
# checks whose random samples follow the configured seed
SEEDED = ("C10",)


def run_checks(idents=None) -> List[CheckResult]:
    wanted = set(idents) if idents else None
    return [fn() for ident, fn in CHECKS if wanted is None or ident in wanted]


__all__ = ["CheckResult", "CHECKS", "QUICK", "SEEDED", "run_checks", "VACUUM_TABLE"]
