"""Root data of symmetrizable Kac-Moody algebras and weight predicates.

Weights are stored by their pairings with a fixed basis of the Cartan
subalgebra: first the simple coroots (in GCM index order), then extra
coweights completing a realization.  For untwisted affine data the extra
coweight is the derivation D with <alpha_i, D> = [i == 0].

The invariant form is normalised so that the highest root of the finite part
(hence also alpha_0) has square length 2.  With D isotropic and
(alpha_i^vee, D) = [i == 0] this gives (Lambda_0, Lambda_0) = 0,
(Lambda_0, delta) = 1 and (rho, delta) = h^vee.

Heights are the sums of coefficients in the simple-root basis.  For affine
sl2 this means ht(alpha) = ht(delta - alpha) = 1 and ht(n delta) = 2n.

Levels may be irrational; coordinates are then elements of Q(xi) (see
:class:`admkit.exactmath.RationalFunction`) and every integrality test
treats them as non-integers.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .exactmath import ExactMathError, is_integer, is_rational, matrix_rank, to_rational


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class UnsupportedKindError(DomainError):
    pass


# ---------------------------------------------------------------------------
# Cartan matrices of the simple types (a_ij = <alpha_j, alpha_i^vee>)


def _chain(n: int) -> List[List[int]]:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def cartan_matrix(family: str, rank: Optional[int] = None) -> List[List[int]]:
    """Cartan matrix of a simple type, e.g. ``cartan_matrix("B", 3)`` or ``("E8")``."""
    fam, n = parse_type(family, rank)
    if fam == "A":
        return _chain(n)
    if fam == "B":
        a = _chain(n)
        a[n - 1][n - 2] = -2
        return a
    if fam == "C":
        a = _chain(n)
        a[n - 2][n - 1] = -2
        return a
    if fam == "D":
        a = _chain(n)
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
        return a
    if fam == "E":
        # Bourbaki labels: 1-3-4-5-6-7-8 with 2 attached to 4
        a = [[0] * n for _ in range(n)]
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]
        for i in range(n):
            a[i][i] = 2
        for i, j in edges:
            if i <= n and j <= n:
                a[i - 1][j - 1] = a[j - 1][i - 1] = -1
        return a
    if fam == "F":
        a = _chain(4)
        a[2][1] = -2
        return a
    if fam == "G":
        return [[2, -3], [-1, 2]]
    raise DomainError(f"unknown type {family}")


_VALID_RANKS = {"A": 1, "B": 2, "C": 2, "D": 4}


def parse_type(family: str, rank: Optional[int] = None) -> Tuple[str, int]:
    """Normalise ``"E8"`` / ``("E", 8)`` / ``"a1"`` into (letter, rank)."""
    family = family.strip().upper()
    if rank is None:
        if len(family) < 2 or not family[1:].isdigit():
            raise DomainError(f"cannot parse type {family!r}")
        family, rank = family[0], int(family[1:])
    rank = int(rank)
    fixed = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
    if family in fixed:
        if rank not in fixed[family]:
            raise DomainError(f"no simple type {family}{rank}")
    elif family in _VALID_RANKS:
        if rank < _VALID_RANKS[family]:
            raise DomainError(f"no simple type {family}{rank}")
    else:
        raise DomainError(f"unknown type {family}{rank}")
    return family, rank


# ---------------------------------------------------------------------------
# data types


@dataclass(frozen=True)
class Root:
    vector: Tuple[int, ...]
    is_real: bool = True
    parity: int = 0
    isotropic: bool = False
    multiplicity: int = 1

    @property
    def height(self) -> int:
        return sum(self.vector)

    def __repr__(self):
        return f"Root{self.vector}" + ("" if self.is_real else f"[im x{self.multiplicity}]")


def _symmetrize(a: Sequence[Sequence[int]]) -> List[Fraction]:
    n = len(a)
    eps: List[Optional[Fraction]] = [None] * n
    for start in range(n):
        if eps[start] is not None:
            continue
        eps[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if a[i][j] == 0 and a[j][i] == 0:
                    continue
                if (a[i][j] == 0) != (a[j][i] == 0):
                    raise DomainError("GCM has a_ij = 0 but a_ji != 0")
                val = eps[i] * a[i][j] / a[j][i]
                if eps[j] is None:
                    eps[j] = val
                    stack.append(j)
                elif eps[j] != val:
                    raise DomainError("GCM is not symmetrizable")
    if any(e <= 0 for e in eps):
        raise DomainError("GCM has no positive symmetrizer")
    return eps


def _components(a) -> List[List[int]]:
    n = len(a)
    seen, comps = set(), []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if a[i][j] and j not in seen:
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _extra_coweights(a) -> List[List[int]]:
    """Unit pairings <alpha_i, d> completing the realization."""
    n = len(a)
    rows = [[a[j][i] for j in range(n)] for i in range(n)]  # alpha_i on coroots
    cols: List[int] = []
    target = n
    rank = matrix_rank(rows)
    for i in range(n):
        if rank + len(cols) == target:
            break
        trial = [rows[k] + [1 if k == c else 0 for c in cols + [i]] for k in range(n)]
        if matrix_rank(trial) > rank + len(cols):
            cols.append(i)
    return [[1 if k == c else 0 for k in range(n)] for c in cols]


@dataclass(frozen=True)
class CartanData:
    """Realization of a symmetrizable GCM with the normalised invariant form.

    ``kind`` is ``"finite"``, ``"affine-untwisted"`` (index 0 is the affine
    node) or ``"general"``.
    """

    gcm: Tuple[Tuple[int, ...], ...]
    tau: frozenset = frozenset()
    kind: str = "general"
    name: str = ""
    symmetrizer: Tuple[Fraction, ...] = ()
    extra: Tuple[Tuple[int, ...], ...] = ()

    @staticmethod
    def build(gcm, tau=(), kind="general", name="") -> "CartanData":
        a = [list(map(int, r)) for r in gcm]
        n = len(a)
        if any(len(r) != n for r in a):
            raise DomainError("GCM must be square")
        for i in range(n):
            if a[i][i] not in (0, 2):
                raise DomainError("diagonal entries must be 0 or 2")
            for j in range(n):
                if i != j and a[i][j] > 0:
                    raise DomainError("off-diagonal GCM entries must be <= 0")
        eps = _symmetrize(a)
        if kind == "finite":
            # long roots of every component get square length 2
            for comp in _components(a):
                top = max(eps[i] for i in comp)
                for i in comp:
                    eps[i] = eps[i] / top
        elif kind == "affine-untwisted":
            top = eps[0]
            eps = [e / top for e in eps]
        extra = _extra_coweights(a)
        data = CartanData(tuple(tuple(r) for r in a), frozenset(tau), kind, name,
                          tuple(eps), tuple(tuple(x) for x in extra))
        if kind == "affine-untwisted":
            expected = affine_gcm([r[1:] for r in a[1:]])
            if [list(r) for r in expected] != a:
                raise DomainError("matrix is not the untwisted affinization of its finite part")
        return data

    # -- sizes and basic vectors
    @property
    def rank(self) -> int:
        return len(self.gcm)

    @property
    def dim(self) -> int:
        """Dimension of the Cartan subalgebra (n + corank)."""
        return self.rank + len(self.extra)

    @property
    def is_affine(self) -> bool:
        return self.kind == "affine-untwisted"

    def weight(self, coords) -> "Weight":
        coords = tuple(c if not is_rational(c) else to_rational(c) for c in coords)
        if len(coords) != self.dim:
            raise ExactMathError(f"expected {self.dim} coordinates, got {len(coords)}")
        return Weight(self, coords)

    def zero(self) -> "Weight":
        return self.weight([0] * self.dim)

    def simple_root(self, i: int) -> "Weight":
        n = self.rank
        return self.weight([self.gcm[j][i] for j in range(n)] + [e[i] for e in self.extra])

    def fundamental_weight(self, i: int) -> "Weight":
        coords = [0] * self.dim
        coords[i] = 1
        return self.weight(coords)

    @cached_property
    def rho(self) -> "Weight":
        return self.weight([Fraction(self.gcm[i][i], 2) for i in range(self.rank)]
                           + [0] * len(self.extra))

    @cached_property
    def _simple_root_coords(self):
        return [self.simple_root(i).coords for i in range(self.rank)]

    def root_weight(self, root) -> "Weight":
        vec = root.vector if isinstance(root, Root) else tuple(root)
        out = [Fraction(0)] * self.dim
        for c, coords in zip(vec, self._simple_root_coords):
            if c:
                out = [x + c * y for x, y in zip(out, coords)]
        return Weight(self, tuple(out))

    # -- invariant form
    @cached_property
    def gram(self) -> List[List[Fraction]]:
        """Form on the Cartan subalgebra in the basis (coroots, extra coweights)."""
        n, d = self.rank, self.dim
        eps = self.symmetrizer
        g = [[Fraction(0)] * d for _ in range(d)]
        for i in range(n):
            for j in range(n):
                g[i][j] = Fraction(self.gcm[j][i]) / eps[i]
            for m, e in enumerate(self.extra):
                g[i][n + m] = g[n + m][i] = Fraction(e[i]) / eps[i]
        return g

    @cached_property
    def inverse_gram(self) -> List[List[Fraction]]:
        d = self.dim
        aug = [row[:] + [Fraction(int(i == j)) for j in range(d)] for i, row in enumerate(self.gram)]
        for col in range(d):
            piv = next(r for r in range(col, d) if aug[r][col] != 0)
            aug[col], aug[piv] = aug[piv], aug[col]
            p = aug[col][col]
            aug[col] = [x / p for x in aug[col]]
            for r in range(d):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return [row[d:] for row in aug]

    def root_norm(self, root) -> Fraction:
        """(alpha, alpha) for a root given by simple-root coefficients."""
        vec = root.vector if isinstance(root, Root) else root
        n, eps = self.rank, self.symmetrizer
        return sum(vec[i] * vec[j] * eps[i] * self.gcm[i][j]
                   for i in range(n) if vec[i] for j in range(n) if vec[j])

    def coroot_coords(self, root) -> List[Fraction]:
        """alpha^vee expanded in the simple coroots."""
        vec = root.vector if isinstance(root, Root) else root
        half = self.root_norm(vec) / 2
        if half == 0:
            raise DomainError(f"isotropic root {vec} has no coroot")
        return [vec[i] * self.symmetrizer[i] / half for i in range(self.rank)]

    # -- affine constants
    def _need_affine(self):
        if not self.is_affine:
            raise DomainError("only defined for affine data")

    @cached_property
    def marks(self) -> Tuple[int, ...]:
        """Coefficients of delta in the simple roots."""
        self._need_affine()
        fin = finite_part_data(self)
        theta = fin.highest_root
        return (1,) + tuple(theta)

    @cached_property
    def comarks(self) -> Tuple[int, ...]:
        """Coefficients of K in the simple coroots."""
        self._need_affine()
        fin = finite_part_data(self)
        cc = fin.coroot_coords(fin.highest_root)
        return (1,) + tuple(int(x) for x in cc)

    @property
    def dual_coxeter(self) -> int:
        return sum(self.comarks)

    @property
    def delta(self) -> "Weight":
        return self.root_weight(self.marks)

    @property
    def null_root(self) -> Root:
        return Root(self.marks, is_real=False, multiplicity=self.rank - 1)

    def vacuum(self, level) -> "Weight":
        """level * Lambda_0."""
        coords = [0] * self.dim
        coords[0] = level
        return self.weight(coords)

    @cached_property
    def highest_root(self) -> Tuple[int, ...]:
        if self.kind != "finite":
            raise DomainError("highest root is defined for finite data")
        roots = positive_roots(self, 10 ** 6)
        return max(roots, key=lambda r: r.height).vector

    @cached_property
    def lacety(self) -> int:
        """Ratio of squared lengths of long and short roots of the finite part."""
        eps = self.symmetrizer if self.kind == "finite" else self.symmetrizer[1:]
        return int(max(eps) / min(eps))

    def to_json(self) -> dict:
        return {"gcm": [list(r) for r in self.gcm], "tau": sorted(self.tau),
                "kind": self.kind, "name": self.name}


def affine_gcm(finite) -> List[List[int]]:
    """Untwisted affine GCM with the affine node at index 0."""
    fin = finite if isinstance(finite, CartanData) else CartanData.build(finite, kind="finite")
    n = fin.rank
    theta = fin.highest_root
    theta_vee = fin.coroot_coords(theta)
    out = [[0] * (n + 1) for _ in range(n + 1)]
    out[0][0] = 2
    for j in range(n):
        # a_0j = <alpha_j, alpha_0^vee> = -<alpha_j, theta^vee>
        out[0][j + 1] = -int(sum(theta_vee[m] * fin.gcm[m][j] for m in range(n)))
        # a_i0 = <alpha_0, alpha_i^vee> = -<theta, alpha_i^vee>
        out[j + 1][0] = -sum(theta[m] * fin.gcm[j][m] for m in range(n))
        for i in range(n):
            out[i + 1][j + 1] = fin.gcm[i][j]
    return out


def finite_part_data(data: CartanData) -> CartanData:
    return CartanData.build([r[1:] for r in data.gcm[1:]], kind="finite")


def finite_type(family: str, rank: Optional[int] = None) -> CartanData:
    fam, n = parse_type(family, rank)
    return CartanData.build(cartan_matrix(fam, n), kind="finite", name=f"{fam}{n}")


def affine_type(family: str, rank: Optional[int] = None) -> CartanData:
    fam, n = parse_type(family, rank)
    fin = finite_type(fam, n)
    return CartanData.build(affine_gcm(fin), kind="affine-untwisted", name=f"{fam}{n}^(1)")


def sl2() -> CartanData:
    return finite_type("A", 1)


def affine_sl2() -> CartanData:
    return affine_type("A", 1)


def cartan_from_json(obj) -> CartanData:
    """Load ``{"gcm": [[...]], "tau": [...], "kind": ...}`` (dict, JSON text or path)."""
    if isinstance(obj, str):
        text = obj
        if not obj.lstrip().startswith("{"):
            with open(obj) as fh:
                text = fh.read()
        obj = json.loads(text)
    kind = obj.get("kind", "general")
    if kind not in ("finite", "affine-untwisted", "general"):
        raise DomainError(f"unknown kind {kind!r}")
    tau = [int(t) - 1 for t in obj.get("tau", [])]  # 1-based in the file
    return CartanData.build(obj["gcm"], tau=tau, kind=kind, name=obj.get("name", ""))


# ---------------------------------------------------------------------------
# weights


@dataclass(frozen=True)
class Weight:
    data: CartanData = field(repr=False, compare=False, hash=False)
    coords: Tuple

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.data, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(self.data, tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self):
        return Weight(self.data, tuple(-x for x in self.coords))

    def __mul__(self, c):
        return Weight(self.data, tuple(c * x for x in self.coords))

    __rmul__ = __mul__

    def pair_coroot(self, i: int):
        return self.coords[i]

    @property
    def level(self):
        if not self.data.is_affine:
            raise DomainError("level is only defined for affine weights")
        return sum(a * x for a, x in zip(self.data.comarks, self.coords))

    @property
    def d_coord(self):
        if not self.data.is_affine:
            raise DomainError("D-coordinate is only defined for affine weights")
        return self.coords[-1]

    @property
    def finite_part(self) -> Tuple:
        """Pairings with the finite simple coroots."""
        if self.data.is_affine:
            return self.coords[1:self.data.rank]
        return self.coords[: self.data.rank]

    def engine_assignment(self) -> Dict[str, object]:
        """Coordinates (a, K, D) of the affine sl2 Shapovalov engine."""
        if not (self.data.is_affine and self.data.rank == 2):
            raise DomainError("engine coordinates exist only for affine sl2")
        return {"a": self.coords[1], "K": self.level, "D": self.coords[2]}

    def __repr__(self):
        return f"Weight{tuple(str(c) for c in self.coords)}"


def form(x: Weight, y: Weight):
    """Invariant form (x, y) on the dual of the Cartan subalgebra."""
    g = x.data.inverse_gram
    total = 0
    for i, xi in enumerate(x.coords):
        if xi == 0:
            continue
        row = g[i]
        for j, yj in enumerate(y.coords):
            if row[j] and yj != 0:
                total = total + xi * row[j] * yj
    return total


def coroot_pairing(lam: Weight, root):
    """<lam, alpha^vee> for a real root alpha."""
    vec = root.vector if isinstance(root, Root) else tuple(root)
    if isinstance(root, Root) and (root.isotropic or not root.is_real):
        raise DomainError(f"{root} is not a real root")
    cc = lam.data.coroot_coords(vec)
    total = 0
    for c, x in zip(cc, lam.coords):
        if c:
            total = total + c * x
    return total


def dot_reflect(lam: Weight, root) -> Weight:
    """s_alpha.lam = lam - <lam + rho, alpha^vee> alpha."""
    m = coroot_pairing(lam + lam.data.rho, root)
    return lam - lam.data.root_weight(root) * m


# ---------------------------------------------------------------------------
# positive roots


def _finite_positive_roots(data: CartanData) -> List[Tuple[int, ...]]:
    n = data.rank
    a = data.gcm
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                p = 0
                while True:
                    cand = tuple(c - (p + 1) * (j == i) for j, c in enumerate(beta))
                    if cand in roots:
                        p += 1
                    else:
                        break
                pairing = sum(beta[j] * a[i][j] for j in range(n))
                if p - pairing > 0:
                    up = tuple(c + (j == i) for j, c in enumerate(beta))
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=lambda v: (sum(v), v))


def positive_roots(data: CartanData, H: int) -> List[Root]:
    """All positive roots of height <= H, real ones first within each height."""
    if data.kind == "finite":
        if any(data.gcm[i][i] != 2 for i in range(data.rank)):
            raise UnsupportedKindError("isotropic simple roots are not enumerated")
        return [Root(v) for v in _finite_positive_roots(data) if sum(v) <= H]
    if not data.is_affine:
        raise UnsupportedKindError(f"root enumeration for kind {data.kind!r} is not supported")
    fin = finite_part_data(data)
    fin_pos = _finite_positive_roots(fin)
    marks = data.marks
    hd = sum(marks)
    out = []
    for n in range(0, H // 1 + 1):
        if n * hd - hd > H:
            break
        shift = [n * m for m in marks]
        for v in fin_pos:
            vec = (shift[0],) + tuple(s + c for s, c in zip(shift[1:], v))
            if sum(vec) <= H:
                out.append(Root(vec))
            if n >= 1:
                vec = (shift[0],) + tuple(s - c for s, c in zip(shift[1:], v))
                if sum(vec) <= H:
                    out.append(Root(vec))
        if n >= 1 and n * hd <= H:
            out.append(Root(tuple(shift), is_real=False, multiplicity=data.rank - 1))
    return sorted(out, key=lambda r: (r.height, not r.is_real, r.vector))


def real_positive_roots(data: CartanData, H: int) -> List[Root]:
    return [r for r in positive_roots(data, H) if r.is_real]


# ---------------------------------------------------------------------------
# integral subsystem


@dataclass
class IntegralSubsystem:
    weight: Weight
    members: List[Root]
    pairings: Dict[Tuple[int, ...], object]
    simple: List[Root]
    periodicity: Optional[int]
    cutoff: int

    def pairing(self, root) -> object:
        vec = root.vector if isinstance(root, Root) else tuple(root)
        return self.pairings[vec]

    def coroot_rank(self) -> int:
        """Rank of Delta(lam)^vee, closed under the periodic shift."""
        vecs = [list(r.vector) for r in self.members]
        if self.periodicity:
            marks = self.weight.data.marks
            for r in self.simple:
                vecs.append([c + self.periodicity * m for c, m in zip(r.vector, marks)])
        return matrix_rank(vecs) if vecs else 0


def is_critical(lam: Weight) -> bool:
    data = lam.data
    if not data.is_affine:
        return False
    return (lam.level + data.dual_coxeter) == 0


def _monoid_decomposable(members: List[Tuple[int, ...]]) -> set:
    """Members that are sums of at least two members (with repetition)."""
    member_set = set(members)
    by_height = sorted(members, key=sum)
    top = max((sum(v) for v in members), default=0)
    reach = set(members)  # sums of one or more members, height <= top
    levels: Dict[int, set] = {}
    for v in reach:
        levels.setdefault(sum(v), set()).add(v)
    decomposable = set()
    for h in range(1, top + 1):
        for v in list(levels.get(h, ())):
            for m in by_height:
                hm = sum(m)
                if hm + h > top:
                    break
                w = tuple(x + y for x, y in zip(v, m))
                if w in member_set:
                    decomposable.add(w)
                if w not in reach:
                    reach.add(w)
                    levels.setdefault(h + hm, set()).add(w)
    return decomposable


def _integral_subsystem(lam: Weight, H: int) -> IntegralSubsystem:
    data = lam.data
    shifted = lam + data.rho
    members, pairings = [], {}
    for r in real_positive_roots(data, H):
        m = coroot_pairing(shifted, r)
        if is_integer(m):
            members.append(r)
            pairings[r.vector] = to_rational(m)
    dec = _monoid_decomposable([r.vector for r in members])
    simple = [r for r in members if r.vector not in dec]
    period = None
    if data.is_affine:
        kh = lam.level + data.dual_coxeter
        if is_rational(kh) and kh != 0:
            q = to_rational(kh).denominator
            period = q * data.lacety
    return IntegralSubsystem(lam, members, pairings, simple, period, H)


def integral_subsystem(lam: Weight, H: int = 20) -> IntegralSubsystem:
    """Delta_+(lam) up to height H with its indecomposable elements."""
    if lam.data.kind not in ("finite", "affine-untwisted"):
        raise UnsupportedKindError(f"unsupported kind {lam.data.kind!r}")
    if is_critical(lam):
        raise DomainError("critical weight: level equals minus the dual Coxeter number")
    return _integral_subsystem(lam, H)


# ---------------------------------------------------------------------------
# classification


@dataclass
class Verdict:
    value: bool
    witness: Optional[Root] = None
    note: str = ""

    def __bool__(self):
        return self.value


@dataclass
class AdmissibilityReport:
    weight: Weight
    cutoff: int
    non_critical: Verdict
    dominant: Verdict
    shifted_regular: Verdict
    rational: Verdict
    weakly_admissible: Verdict
    kw_admissible: Verdict
    admissible: str  # "true" | "false" | "unknown"
    k_admissible: Optional[str] = None
    simple_system: List[Root] = field(default_factory=list)

    def flags(self) -> Dict[str, object]:
        return {
            "nonCritical": self.non_critical.value,
            "dominant": self.dominant.value,
            "shiftedRegular": self.shifted_regular.value,
            "rational": self.rational.value,
            "weaklyAdmissible": self.weakly_admissible.value,
            "kwAdmissible": self.kw_admissible.value,
            "admissible": self.admissible,
            "kAdmissible": self.k_admissible,
            "cutoff": self.cutoff,
        }


def _first(iterable, pred):
    for x in iterable:
        if pred(x):
            return x
    return None


def classify(lam: Weight, H: int = 20) -> AdmissibilityReport:
    data = lam.data
    if data.kind not in ("finite", "affine-untwisted"):
        raise UnsupportedKindError(f"unsupported kind {data.kind!r}")
    critical = is_critical(lam)
    nc = Verdict(not critical, data.null_root if critical else None)
    sub = _integral_subsystem(lam, H)

    def nonpos_int(r):
        return r.vector in sub.pairings and sub.pairings[r.vector] <= 0

    bad = _first(sub.members, nonpos_int)
    dominant = Verdict(bad is None, bad)
    zero = _first(sub.members, lambda r: sub.pairings[r.vector] == 0)
    regular = Verdict(zero is None, zero)
    rank = sub.coroot_rank()
    rational = Verdict(rank == data.rank, None,
                       "" if rank == data.rank else f"coroot rank {rank} < {data.rank}")
    neg = _first(sub.simple, lambda r: sub.pairings[r.vector] < 0)
    weak = Verdict(neg is None, neg)
    kw_ok = nc.value and dominant.value and rational.value
    kw_wit = nc.witness or dominant.witness
    kw = Verdict(kw_ok, kw_wit, "" if kw_ok or kw_wit else rational.note)

    if not weak.value or not rational.value:
        admissible = "false"
    elif nc.value and regular.value:
        admissible = "true"
    else:
        admissible = "unknown"

    k_adm = None
    if data.is_affine:
        if critical or not weak.value:
            k_adm = "false"
        elif data.rank == 2:
            moved = any(sub.pairings[r.vector] != 0 for r in sub.simple)
            k_adm = "true" if moved else "false"
        elif kw.value:
            k_adm = "true"
        else:
            k_adm = "unknown"
    return AdmissibilityReport(lam, H, nc, dominant, regular, rational, weak, kw,
                               admissible, k_adm, list(sub.simple))


def selfext_dim(lam: Weight, H: int = 20) -> int:
    """dim of the annihilator of Delta(lam)^vee in the Cartan subalgebra."""
    rep = classify(lam, H)
    for name in ("non_critical", "shifted_regular", "weakly_admissible"):
        if not getattr(rep, name).value:
            raise DomainError(f"selfext_dim needs a {name.replace('_', '-')} weight")
    sub = _integral_subsystem(lam, H)
    return lam.data.dim - sub.coroot_rank()


def _c_prime(lam: Weight, H: int) -> List[Tuple[Root, int]]:
    shifted = lam + lam.data.rho
    out = []
    for r in real_positive_roots(lam.data, H):
        m = coroot_pairing(shifted, r)
        if is_integer(m) and m > 0:
            out.append((r, int(m)))
    return out


def _leq(x: Sequence[int], y: Sequence[int]) -> bool:
    return all(b - a >= 0 for a, b in zip(x, y))


def lambda_minimal_roots(lam: Weight, H: int = 20) -> List[Root]:
    """Roots certified lambda-minimal by the two sufficient tests.

    (a) alpha in Pi(lam) with positive pairing; (b) m*alpha is a minimal
    element of {n*beta : (beta, n) in C'(lam)} and only alpha itself
    produces that vector.  Test (b) is applied only when every competitor
    below m*alpha is within the height cutoff.
    """
    sub = _integral_subsystem(lam, H)
    found = {r.vector: r for r in sub.simple if sub.pairings[r.vector] > 0}
    cp = _c_prime(lam, H)
    mults = [(r, tuple(m * c for c in r.vector)) for r, m in cp]
    for r, v in mults:
        if r.vector in found or sum(v) > H:
            continue
        minimal, unique = True, True
        for r2, v2 in mults:
            if r2.vector == r.vector:
                continue
            if v2 == v:
                unique = False
                break
            if _leq(v2, v):
                minimal = False
                break
        if minimal and unique:
            found[r.vector] = r
    return sorted(found.values(), key=lambda r: (r.height, r.vector))


def upsilon_bounds(lam: Weight, H: int = 20) -> Tuple[int, int]:
    """(dim C(lam)^perp, dim of the annihilator of the certified minimal roots)."""
    if is_critical(lam):
        raise DomainError("upsilon_bounds needs a non-critical weight")
    data = lam.data
    cvecs = [list(r.vector) for r, _ in _c_prime(lam, H)]
    sub = _integral_subsystem(lam, H)
    if sub.periodicity and cvecs:
        # C(lam) is stable under adding multiples of the period times delta
        kh = lam.level + data.dual_coxeter
        if kh > 0:
            cvecs += [[c + sub.periodicity * m for c, m in zip(v, data.marks)] for v in cvecs[:1]]
    lower = data.dim - (matrix_rank(cvecs) if cvecs else 0)
    mins = [list(r.vector) for r in lambda_minimal_roots(lam, H)]
    upper = data.dim - (matrix_rank(mins) if mins else 0)
    return lower, upper


# ---------------------------------------------------------------------------
# super conditions (predicates only)


def root_parity(data: CartanData, root) -> int:
    vec = root.vector if isinstance(root, Root) else root
    return sum(c for i, c in enumerate(vec) if i in data.tau) % 2


def in_set_s(lam: Weight, H: int = 20) -> Verdict:
    """Conditions (S1)-(S3) on positive roots up to H."""
    data = lam.data
    shifted = lam + data.rho
    for r in positive_roots(data, H):
        norm = data.root_norm(r)
        odd = root_parity(data, r) == 1
        if norm == 0:
            if form(shifted, data.root_weight(r)) == 0:
                return Verdict(False, r, "isotropic root orthogonal to lam + rho")
            continue
        if not r.is_real:
            continue
        m = coroot_pairing(shifted, r)
        if not odd:
            half = tuple(c // 2 for c in r.vector)
            half_odd = all(c % 2 == 0 for c in r.vector) and root_parity(data, half) == 1
            if not half_odd and is_integer(m) and m < 0:
                return Verdict(False, r, "even root with negative integral pairing")
        elif is_integer(m) and m < 0 and int(m) % 2 == 1:
            return Verdict(False, r, "odd root with negative odd pairing")
    return Verdict(True)


__all__ = [
    "DomainError", "UnsupportedKindError", "Root", "CartanData", "Weight",
    "IntegralSubsystem", "AdmissibilityReport", "Verdict", "cartan_matrix",
    "parse_type", "affine_gcm", "finite_type", "affine_type", "sl2", "affine_sl2",
    "cartan_from_json", "form", "coroot_pairing", "dot_reflect", "positive_roots",
    "real_positive_roots", "integral_subsystem", "classify", "selfext_dim",
    "upsilon_bounds", "lambda_minimal_roots", "is_critical", "in_set_s",
]
