"""Exact arithmetic kernels.

Rationals are :class:`fractions.Fraction`.  On top of that this module provides

* :class:`MultiPoly` -- sparse multivariate polynomials over Q with a declared
  variable order and graded-lex term order,
* :class:`TPoly` -- dense univariate polynomials over Q (used both for the
  deformation parameter ``t`` and as the ring behind :class:`RationalFunction`),
* :class:`RationalFunction` -- the field Q(xi) for a formal transcendental xi,
  which is how irrational levels are modelled exactly,
* t-adic valuations and elementary-divisor valuations of TPoly matrices,
* determinants of MultiPoly matrices (fraction-free elimination, plus an
  evaluation/interpolation route for larger matrices).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from itertools import product
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

try:  # GMP integers make the Kronecker determinant route much faster
    import gmpy2

    _mpz = gmpy2.mpz
    _divexact = gmpy2.divexact
except ImportError:  # pragma: no cover
    gmpy2 = None
    _mpz = int

    def _divexact(a, b):
        return a // b


Rational = Fraction
INFINITE = math.inf

__all__ = [
    "Rational", "INFINITE", "to_rational", "MultiPoly", "TPoly",
    "RationalFunction", "XI", "is_integer", "is_rational", "poly_eval",
    "deform", "sign", "exact_sqrt", "t_valuation", "smith_t_valuations", "det", "poly_det",
    "scalar_ratio", "matrix_rank", "ExactMathError",
]


class ExactMathError(ValueError):
    """Input error in an exact-arithmetic routine."""


def to_rational(x) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-3/4"`` to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise ExactMathError("booleans are not numbers here")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise ExactMathError("floats are not accepted; pass an exact rational")
    if _mpz is not int and isinstance(x, type(_mpz(0))):
        return Fraction(int(x))
    raise ExactMathError(f"cannot interpret {x!r} as a rational")


# ---------------------------------------------------------------------------
# univariate polynomials


class TPoly:
    """Dense univariate polynomial over Q; ``coeffs[i]`` multiplies t**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [to_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def _raw(cls, cs: List[Fraction]) -> "TPoly":
        while cs and cs[-1] == 0:
            cs.pop()
        obj = cls.__new__(cls)
        obj.coeffs = tuple(cs)
        return obj

    @classmethod
    def const(cls, c) -> "TPoly":
        return cls((c,))

    @classmethod
    def t(cls) -> "TPoly":
        return cls((0, 1))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _coerce(self, other) -> "TPoly":
        if isinstance(other, TPoly):
            return other
        return TPoly((other,))

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] += c
        return TPoly._raw(cs)

    __radd__ = __add__

    def __neg__(self):
        return TPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, TPoly):
            c = to_rational(other)
            return TPoly._raw([c * x for x in self.coeffs]) if c else TPoly()
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return TPoly()
        cs = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    cs[i + j] += x * y
        return TPoly._raw(cs)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = TPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TPoly((other,))
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def divmod(self, other: "TPoly") -> Tuple["TPoly", "TPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lb = other.coeffs[-1]
        if len(rem) <= db:
            return TPoly(), self
        quot = [Fraction(0)] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c:
                f = c / lb
                quot[i - db] = f
                for j, y in enumerate(other.coeffs):
                    rem[i - db + j] -= f * y
        return TPoly._raw(quot), TPoly._raw(rem[:db])

    def __floordiv__(self, other):
        return self.divmod(self._coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(self._coerce(other))[1]

    def exact_div(self, other: "TPoly") -> "TPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ExactMathError("division is not exact")
        return q

    def monic(self) -> "TPoly":
        if self.is_zero():
            return self
        return self * (1 / self.coeffs[-1])

    def gcd(self, other: "TPoly") -> "TPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def valuation(self):
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return INFINITE

    def truncate(self, n: int) -> "TPoly":
        return TPoly._raw(list(self.coeffs[:n]))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{c}" if i == 0 else f"{c}*t^{i}" if i > 1 else f"{c}*t")
        return " + ".join(parts)


def t_valuation(q: TPoly):
    """Order of vanishing at t = 0; ``INFINITE`` for the zero polynomial."""
    return q.valuation()


# ---------------------------------------------------------------------------
# Q(xi): exact stand-in for an irrational number


class RationalFunction:
    """Element of Q(xi), xi a formal transcendental.

    Constant results of arithmetic are demoted to plain Fractions, so code
    that mixes rational and "irrational" quantities stays on the fast path
    whenever nothing transcendental is involved.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: TPoly, den: Optional[TPoly] = None):
        den = den if den is not None else TPoly.const(1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = num.gcd(den) if not num.is_zero() else den.monic()
        num, den = num.exact_div(g), den.exact_div(g)
        lc = den.coeffs[-1]
        self.num, self.den = num * (1 / lc), den * (1 / lc)

    @staticmethod
    def _make(num: TPoly, den: TPoly):
        r = RationalFunction(num, den)
        if r.den.degree == 0 and r.num.degree <= 0:
            return r.num.coeffs[0] if r.num.coeffs else Fraction(0)
        return r

    @staticmethod
    def _parts(x):
        if isinstance(x, RationalFunction):
            return x.num, x.den
        return TPoly.const(to_rational(x)), TPoly.const(1)

    def __add__(self, other):
        a, b = self._parts(self)
        c, d = self._parts(other)
        return self._make(a * d + c * b, b * d)

    __radd__ = __add__

    def __neg__(self):
        return self._make(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other if isinstance(other, RationalFunction) else -to_rational(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._parts(self)
        c, d = self._parts(other)
        return self._make(a * c, b * d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        a, b = self._parts(self)
        c, d = self._parts(other)
        if c.is_zero():
            raise ZeroDivisionError("division by zero in Q(xi)")
        return self._make(a * d, b * c)

    def __rtruediv__(self, other):
        a, b = self._parts(other)
        return self._make(a * self.den, b * self.num)

    def __pow__(self, n: int):
        if n < 0:
            return 1 / (self ** (-n))
        return self._make(self.num ** n, self.den ** n)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return False  # never constant after normalisation
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError("pole")
        return self.num(x) / d

    def sign(self) -> int:
        """Sign for the ordering in which xi exceeds every rational."""
        return 1 if self.num.lead() > 0 else -1

    def sqrt(self):
        """Square root inside Q(xi), or None when it does not exist there."""
        rn, rd = _poly_sqrt(self.num * self.den), self.den
        if rn is None:
            return None
        return self._make(rn, rd)

    def __repr__(self):
        n = repr(self.num).replace("t", "xi")
        if self.den == TPoly.const(1):
            return f"({n})"
        return f"({n})/({repr(self.den).replace('t', 'xi')})"


XI = RationalFunction(TPoly.t())


def _rational_sqrt(c: Fraction) -> Optional[Fraction]:
    if c < 0:
        return None
    n, d = math.isqrt(c.numerator), math.isqrt(c.denominator)
    if n * n == c.numerator and d * d == c.denominator:
        return Fraction(n, d)
    return None


def _poly_sqrt(p: TPoly) -> Optional[TPoly]:
    """Square root of a univariate polynomial over Q if it is a perfect square."""
    if p.is_zero():
        return TPoly()
    if p.degree % 2:
        return None
    lead = _rational_sqrt(p.lead())
    if lead is None:
        return None
    m = p.degree // 2
    # solve for the root coefficients from the top down
    root = [Fraction(0)] * (m + 1)
    root[m] = lead
    for k in range(m - 1, -1, -1):
        # coefficient of t^(m+k) in root^2 determines root[k]
        s = sum(root[i] * root[m + k - i] for i in range(k + 1, m + 1) if 0 <= m + k - i <= m)
        root[k] = (p.coeffs[m + k] - s) / (2 * lead)
    r = TPoly(root)
    return r if r * r == p else None


def is_rational(x) -> bool:
    """True for elements of Q (a RationalFunction is never constant)."""
    return not isinstance(x, RationalFunction)


def is_integer(x) -> bool:
    if isinstance(x, RationalFunction):
        return False
    return to_rational(x).denominator == 1


def sign(x) -> int:
    """Sign of a rational, or of a Q(xi) element with xi taken infinitely large."""
    if isinstance(x, RationalFunction):
        return x.sign()
    x = to_rational(x)
    return (x > 0) - (x < 0)


def exact_sqrt(x):
    """Square root of a rational or Q(xi) element when it exists exactly."""
    if isinstance(x, RationalFunction):
        return x.sqrt()
    return _rational_sqrt(to_rational(x))


# ---------------------------------------------------------------------------
# multivariate polynomials


def _grlex_key(exp: Tuple[int, ...]):
    return (sum(exp), exp)


class MultiPoly:
    """Sparse polynomial over Q in an ordered tuple of named variables."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Optional[Mapping] = None):
        self.vars: Tuple[str, ...] = tuple(variables)
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != len(self.vars):
                raise ExactMathError("exponent length does not match variables")
            c = to_rational(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
        self.terms: Dict[Tuple[int, ...], Fraction] = {e: c for e, c in clean.items() if c}

    @classmethod
    def _raw(cls, variables, terms):
        obj = cls.__new__(cls)
        obj.vars = variables
        obj.terms = terms
        return obj

    @classmethod
    def const(cls, c, variables: Sequence[str]) -> "MultiPoly":
        c = to_rational(c)
        n = len(variables)
        return cls._raw(tuple(variables), {(0,) * n: c} if c else {})

    @classmethod
    def var(cls, name: str, variables: Sequence[str]) -> "MultiPoly":
        variables = tuple(variables)
        exp = tuple(1 if v == name else 0 for v in variables)
        if sum(exp) != 1:
            raise ExactMathError(f"unknown variable {name!r}")
        return cls._raw(variables, {exp: Fraction(1)})

    @classmethod
    def linear(cls, coeffs: Mapping[str, object], const, variables) -> "MultiPoly":
        p = cls.const(const, variables)
        for name, c in coeffs.items():
            p = p + cls.var(name, variables) * c
        return p

    # -- basic protocol
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ExactMathError(f"variable mismatch {self.vars} vs {other.vars}")
            return other
        return MultiPoly.const(other, self.vars)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return MultiPoly._raw(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = to_rational(other)
            if not c:
                return MultiPoly._raw(self.vars, {})
            return MultiPoly._raw(self.vars, {e: c * v for e, v in self.terms.items()})
        other = self._coerce(other)
        terms: Dict[Tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiPoly._raw(self.vars, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = MultiPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other, self.vars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- structure
    def sorted_terms(self) -> List[Tuple[Tuple[int, ...], Fraction]]:
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def leading_term(self):
        return max(self.terms.items(), key=lambda t: _grlex_key(t[0]))

    @property
    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def used_vars(self) -> List[str]:
        return [v for i, v in enumerate(self.vars) if any(e[i] for e in self.terms)]

    def content(self) -> Fraction:
        """Positive rational c with self/c having coprime integer coefficients."""
        if not self.terms:
            return Fraction(0)
        nums = [c.numerator for c in self.terms.values()]
        dens = [c.denominator for c in self.terms.values()]
        g = reduce(math.gcd, nums)
        l = reduce(lambda a, b: a * b // math.gcd(a, b), dens)
        return Fraction(abs(g), l)

    def primitive(self) -> "MultiPoly":
        """Content-free form with positive leading coefficient."""
        if not self.terms:
            return self
        c = self.content()
        if self.leading_term()[1] < 0:
            c = -c
        return self * (1 / c)

    # -- evaluation and substitution
    def eval(self, assignment: Mapping[str, object]):
        vals = []
        for v in self.vars:
            if v not in assignment:
                if any(e[self.vars.index(v)] for e in self.terms):
                    raise ExactMathError(f"assignment misses variable {v!r}")
                vals.append(Fraction(0))
            else:
                x = assignment[v]
                vals.append(x if isinstance(x, RationalFunction) else to_rational(x))
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, k in zip(vals, e):
                if k:
                    term = term * x ** k
            total = total + term
        return total

    def substitute(self, images: Mapping[str, object], variables: Sequence[str]) -> "MultiPoly":
        """Replace variables by polynomials in ``variables`` (others left as is)."""
        variables = tuple(variables)
        imgs = []
        for v in self.vars:
            if v in images:
                x = images[v]
                imgs.append(x if isinstance(x, MultiPoly) else MultiPoly.const(x, variables))
            else:
                imgs.append(MultiPoly.var(v, variables))
        out = MultiPoly.const(0, variables)
        cache: Dict[Tuple[int, int], MultiPoly] = {}
        for e, c in self.terms.items():
            term = MultiPoly.const(c, variables)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = imgs[i] ** k
                    term = term * cache[key]
            out = out + term
        return out

    def exact_div(self, other: "MultiPoly") -> "MultiPoly":
        """Quotient of an exact division; raises if the division leaves a remainder."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        le, lc = other.leading_term()
        rem = dict(self.terms)
        quot: Dict[Tuple[int, ...], Fraction] = {}
        while rem:
            e, c = max(rem.items(), key=lambda t: _grlex_key(t[0]))
            d = tuple(a - b for a, b in zip(e, le))
            if min(d) < 0:
                raise ExactMathError("division is not exact")
            f = c / lc
            quot[d] = quot.get(d, 0) + f
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(d, e2))
                s = rem.get(key, 0) - f * c2
                if s:
                    rem[key] = s
                else:
                    rem.pop(key, None)
        return MultiPoly._raw(self.vars, {e: c for e, c in quot.items() if c})

    def to_univariate(self, name: str) -> TPoly:
        if set(self.used_vars()) - {name}:
            raise ExactMathError("polynomial is not univariate in " + name)
        i = self.vars.index(name)
        cs = [Fraction(0)] * (self.degree_in(name) + 1)
        for e, c in self.terms.items():
            cs[e[i]] += c
        return TPoly(cs)

    # -- serialization
    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [
                {"exp": list(e), "num": str(c.numerator), "den": str(c.denominator)}
                for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "MultiPoly":
        terms = {tuple(t["exp"]): Fraction(int(t["num"]), int(t["den"])) for t in data["terms"]}
        return cls(data["vars"], terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k
            )
            if not mono:
                out.append(str(c))
            elif c == 1:
                out.append(mono)
            elif c == -1:
                out.append("-" + mono)
            else:
                out.append(f"{c}*{mono}")
        return " + ".join(out).replace("+ -", "- ")


def poly_eval(p: MultiPoly, assignment: Mapping[str, object]):
    """Exact value of ``p`` at a point given as variable -> number."""
    return p.eval(assignment)


def scalar_ratio(p: MultiPoly, q: MultiPoly) -> Optional[Fraction]:
    """Return s with p == s*q if such a nonzero rational exists, else None."""
    if p.is_zero() or q.is_zero():
        return None
    if p.vars != q.vars or p.terms.keys() != q.terms.keys():
        return None
    e, c = next(iter(p.terms.items()))
    s = c / q.terms[e]
    if all(p.terms[k] == s * q.terms[k] for k in p.terms):
        return s
    return None


# ---------------------------------------------------------------------------
# deformations and t-adic elementary divisors


def deform(p: MultiPoly, lam: Mapping[str, object], mu: Mapping[str, object],
           mu2: Optional[Mapping[str, object]] = None) -> TPoly:
    """Substitute x -> lam[x] + t*mu[x] + t^2*mu2[x] for every variable x of p."""
    mu2 = mu2 or {}
    for point in (lam, mu, mu2):
        extra = set(point) - set(p.vars)
        if extra:
            raise ExactMathError(f"unknown coordinates {sorted(extra)}")
    images = []
    for v in p.vars:
        images.append(TPoly((lam.get(v, 0), mu.get(v, 0), mu2.get(v, 0))))
    powers: Dict[Tuple[int, int], TPoly] = {}
    out = TPoly()
    for e, c in p.terms.items():
        term = TPoly.const(c)
        for i, k in enumerate(e):
            if k:
                if (i, k) not in powers:
                    powers[(i, k)] = images[i] ** k
                term = term * powers[(i, k)]
        out = out + term
    return out


def matrix_rank(rows: Sequence[Sequence]) -> int:
    """Rank over the field of the entries (Fractions or Q(xi) elements)."""
    a = [[Fraction(x) if isinstance(x, int) else x for x in r] for r in rows]
    rank = 0
    ncols = len(a[0]) if a else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for i in range(rank + 1, len(a)):
            f = a[i][col]
            if f != 0:
                f = f / p
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def _series_inverse(u: List[Fraction], n: int) -> List[Fraction]:
    """Inverse of a power series with u[0] != 0, modulo t^n."""
    inv = [Fraction(0)] * n
    inv[0] = 1 / u[0]
    for k in range(1, n):
        s = sum(u[j] * inv[k - j] for j in range(1, min(k, len(u) - 1) + 1))
        inv[k] = -s * inv[0]
    return inv


def _series_mul(a: List[Fraction], b: List[Fraction], n: int) -> List[Fraction]:
    out = [Fraction(0)] * n
    for i, x in enumerate(a[:n]):
        if x:
            for j in range(min(len(b), n - i)):
                if b[j]:
                    out[i + j] += x * b[j]
    return out


def _bareiss(rows: List[list], zero, is_zero, exact_div, pick=None):
    """Fraction-free elimination with full pivoting.

    Returns ``(det, rank, pivot_rows, pivot_cols)`` where ``det`` is the
    determinant of the square input (zero when singular).  ``pick`` chooses a
    pivot among nonzero candidates ``(i, j, entry)``; default is the first.
    """
    a = [list(r) for r in rows]
    n = len(a)
    m = len(a[0]) if n else 0
    rows_left = list(range(n))
    cols_left = list(range(m))
    prev = None
    sign = 1
    prow, pcol = [], []
    step = 0
    while rows_left and cols_left:
        cands = [(i, j, a[i][j]) for i in rows_left for j in cols_left if not is_zero(a[i][j])]
        if not cands:
            break
        i0, j0, piv = pick(cands) if pick else cands[0]
        # permutation parity relative to the natural diagonal order
        ri, ci = rows_left.index(i0), cols_left.index(j0)
        if (ri + ci) % 2:
            sign = -sign
        rows_left.remove(i0)
        cols_left.remove(j0)
        prow.append(i0)
        pcol.append(j0)
        for i in rows_left:
            f = a[i][j0]
            for j in cols_left:
                v = a[i][j] * piv - f * a[i0][j]
                a[i][j] = v if prev is None else exact_div(v, prev)
        prev = piv
        step += 1
    rank = step
    if rank < n or n != m:
        return zero, rank, prow, pcol
    det = prev if prev is not None else None
    if det is None:
        return None, 0, [], []
    return (det if sign > 0 else -det), rank, prow, pcol


def det(rows: Sequence[Sequence], one=Fraction(1)):
    """Determinant over any exact commutative ring with exact division."""
    n = len(rows)
    if n == 0:
        return one
    if any(len(r) != n for r in rows):
        raise ExactMathError("matrix is not square")
    sample = rows[0][0]
    if isinstance(sample, MultiPoly):
        zero = MultiPoly.const(0, sample.vars)
        is_zero = MultiPoly.is_zero
        ediv = MultiPoly.exact_div
    elif isinstance(sample, TPoly):
        zero = TPoly()
        is_zero = TPoly.is_zero
        ediv = TPoly.exact_div
    else:
        zero = 0
        is_zero = lambda x: x == 0  # noqa: E731
        ediv = (lambda x, y: x / y) if isinstance(sample, Fraction) else (lambda x, y: x // y)
    d, *_ = _bareiss(rows, zero, is_zero, ediv)
    return d


def smith_t_valuations(M: Sequence[Sequence[TPoly]]) -> List:
    """t-adic valuations of the elementary divisors of a square TPoly matrix.

    For every r >= 1 the corank of M modulo t^r equals the number of returned
    valuations that are >= r.  Singular directions get ``INFINITE``.
    """
    n = len(M)
    if any(len(r) != n for r in M):
        raise ExactMathError("matrix is not square")
    if n == 0:
        return []
    rows = [[x if isinstance(x, TPoly) else TPoly.const(x) for x in r] for r in M]
    # Exact rank and a valuation bound from a fraction-free pass over Q[t].
    d, rank, prow, pcol = _bareiss(rows, TPoly(), TPoly.is_zero, TPoly.exact_div)
    if rank == 0:
        return [INFINITE] * n
    if rank == n:
        bound = d.valuation()
    else:
        minor = [[rows[i][j] for j in pcol] for i in prow]
        bound = det(minor).valuation()
    prec = bound + 1
    # Elimination over Q[[t]]/(t^prec): units are invertible there.
    work = [[list(x.coeffs[:prec]) + [Fraction(0)] * (prec - len(x.coeffs[:prec])) for x in r]
            for r in rows]

    def val(s):
        for k, c in enumerate(s):
            if c:
                return k
        return INFINITE

    def deg(s):
        for k in range(len(s) - 1, -1, -1):
            if s[k]:
                return k
        return -1

    rows_left = list(range(n))
    cols_left = list(range(n))
    out = []
    while rows_left:
        best = None
        for j in cols_left:
            for i in rows_left:
                v = val(work[i][j])
                if v == INFINITE:
                    continue
                key = (v, deg(work[i][j]), j, i)
                if best is None or key < best:
                    best = key
        if best is None:
            break
        v, _, j0, i0 = best
        out.append(v)
        piv = work[i0][j0]
        unit_inv = _series_inverse(piv[v:], prec)
        rows_left.remove(i0)
        cols_left.remove(j0)
        for i in rows_left:
            a = work[i][j0]
            va = val(a)
            if va == INFINITE:
                continue
            # factor = a / piv = t^(va - v) * (a / t^va) / unit
            f = _series_mul(a[va:], unit_inv, prec)
            shift = va - v
            f = [Fraction(0)] * shift + f[: prec - shift]
            for j in cols_left:
                b = work[i0][j]
                if any(b):
                    prod = _series_mul(f, b, prec)
                    work[i][j] = [x - y for x, y in zip(work[i][j], prod)]
            work[i][j0] = [Fraction(0)] * prec
    out.extend([INFINITE] * (n - len(out)))
    return sorted(out)


# ---------------------------------------------------------------------------
# determinants of polynomial matrices


def _int_bareiss(a: List[list]):
    n = len(a)
    a = [list(r) for r in a]
    sign = 1
    prev = _mpz(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return _mpz(0)
        pk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            f = ri[k]
            if f == 0:
                for j in range(k + 1, n):
                    ri[j] = _divexact(ri[j] * pk, prev)
            else:
                for j in range(k + 1, n):
                    ri[j] = _divexact(ri[j] * pk - f * rk[j], prev)
        prev = pk
    return sign * a[n - 1][n - 1]


def _pack(coeffs: Sequence[int], shift: int):
    acc = _mpz(0)
    for c in reversed(coeffs):
        acc = (acc << shift) + c
    return acc


def _unpack(value, shift: int) -> List[int]:
    out = []
    base = _mpz(1) << shift
    half = base >> 1
    v = _mpz(value)
    while v != 0:
        r = v & (base - 1)
        if r >= half:
            r -= base
        out.append(int(r))
        v = (v - r) >> shift
    return out


def _interp_points(n: int) -> List[int]:
    """0, 1, -1, 2, -2, ... keeps evaluation values small."""
    pts = [0]
    k = 1
    while len(pts) < n:
        pts.append(k)
        if len(pts) < n:
            pts.append(-k)
        k += 1
    return pts


def _newton_mod(xs: Sequence[int], ys: Sequence[int], prime: int) -> List[int]:
    """Monomial coefficients (mod prime) of the polynomial through (xs, ys)."""
    n = len(xs)
    dd = [y % prime for y in ys]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            inv = pow((xs[i] - xs[i - level]) % prime, -1, prime)
            dd[i] = (dd[i] - dd[i - 1]) * inv % prime
    coeffs = [0] * n
    for i in range(n - 1, -1, -1):
        # coeffs <- coeffs * (x - xs[i]) + dd[i]
        x = xs[i]
        new = [0] * n
        for j in range(n - 1):
            c = coeffs[j]
            if c:
                new[j + 1] += c
                new[j] -= c * x
        new[0] += dd[i]
        coeffs = [c % prime for c in new]
    return coeffs


def _degree_bound(rows: Sequence[Sequence[MultiPoly]], name: str) -> int:
    by_rows = sum(max(max(p.degree_in(name) for p in r), 0) for r in rows)
    by_cols = sum(max(max(r[j].degree_in(name) for r in rows), 0) for j in range(len(rows)))
    return min(by_rows, by_cols)


def _hadamard_bound(norms: Sequence[Sequence[int]]) -> int:
    """Bound on every coefficient of det from the l1 norms of the entries.

    On the unit torus each entry is bounded by its l1 norm, Hadamard's
    inequality bounds the determinant there, and coefficients are bounded by
    the maximum modulus on the torus.
    """
    prod_sq = 1
    for r in norms:
        prod_sq *= max(sum(x * x for x in r), 1)
    return math.isqrt(prod_sq) + 1


def _next_prime(n: int) -> int:
    if gmpy2 is not None:
        return int(gmpy2.next_prime(n))
    from sympy import nextprime  # pragma: no cover

    return int(nextprime(n))  # pragma: no cover


def _det_interpolated(rows: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Determinant via Kronecker packing in one variable and interpolation in the rest.

    Denominators are cleared row by row, so the determinant of the scaled
    matrix has integer coefficients.  For each point of a grid in the other
    variables the matrix is evaluated at x = 2**shift in the packed variable,
    the integer determinant is computed fraction-free, and its base-2**shift
    digits are the coefficients.  The grid values are then interpolated
    modulo a prime larger than twice the coefficient bound.
    """
    variables = rows[0][0].vars
    scale = 1
    int_rows = []
    for r in rows:
        l = 1
        for p in r:
            for c in p.terms.values():
                l = l * c.denominator // math.gcd(l, c.denominator)
        scale *= l
        int_rows.append([p * l for p in r])
    used = [v for v in variables if any(p.degree_in(v) > 0 for r in int_rows for p in r)]
    if not used:
        vals = [[_mpz(int(p.constant_value())) for p in r] for r in int_rows]
        return MultiPoly.const(Fraction(int(_int_bareiss(vals)), scale), variables)
    bounds = {v: _degree_bound(int_rows, v) for v in used}
    packed = max(used, key=lambda v: bounds[v])
    others = [v for v in used if v != packed]
    pi = variables.index(packed)
    oi = [variables.index(v) for v in others]
    grids = [_interp_points(bounds[v] + 1) for v in others]

    def entry_coeffs(p: MultiPoly, point: Sequence[int]) -> List[int]:
        out = [0] * (p.degree_in(packed) + 1) if p.terms else []
        for e, c in p.terms.items():
            val = int(c)
            for i, x in zip(oi, point):
                if e[i]:
                    val *= x ** e[i]
            out[e[pi]] += val
        return out

    values = {}
    for point in product(*grids):
        mat = [[entry_coeffs(p, point) for p in r] for r in int_rows]
        bound = _hadamard_bound([[sum(abs(c) for c in e) for e in r] for r in mat])
        shift = bound.bit_length() + 2
        ints = [[_pack(e, shift) for e in r] for r in mat]
        values[point] = _unpack(_int_bareiss(ints), shift)

    total = _hadamard_bound([[sum(abs(int(c)) for c in p.terms.values()) for p in r]
                             for r in int_rows])
    prime = _next_prime(2 * total)
    half = prime // 2
    width = bounds[packed] + 1
    terms: Dict[Tuple[int, ...], Fraction] = {}
    for deg in range(width):
        table = {pt: (v[deg] if deg < len(v) else 0) for pt, v in values.items()}
        for exps, c in _interp_tensor(table, grids, prime).items():
            if c > half:
                c -= prime
            if c:
                full = [0] * len(variables)
                full[pi] = deg
                for i, k in zip(oi, exps):
                    full[i] = k
                terms[tuple(full)] = Fraction(c, scale)
    return MultiPoly(variables, terms)


def _interp_tensor(table: Dict[Tuple[int, ...], int], grids: List[List[int]], prime: int):
    """Interpolate grid values mod prime; returns exponent-tuple -> coefficient."""
    if not grids:
        return {(): table[()] % prime}
    first, rest = grids[0], grids[1:]
    tails = sorted({pt[1:] for pt in table})
    partial = {tail: _newton_mod(first, [table[(x,) + tail] for x in first], prime)
               for tail in tails}
    out = {}
    for k in range(len(first)):
        sub = {tail: partial[tail][k] for tail in tails}
        for exps, c in _interp_tensor(sub, rest, prime).items():
            out[(k,) + exps] = c
    return out


def poly_det(rows: Sequence[Sequence[MultiPoly]], method: str = "auto") -> MultiPoly:
    """Exact determinant of a square MultiPoly matrix.

    ``method`` is ``"bareiss"`` (fraction-free elimination over the polynomial
    ring), ``"interpolate"`` (evaluation/Kronecker packing/interpolation) or
    ``"auto"``.  Both routes are exact; they are cross-checked in the tests.
    """
    n = len(rows)
    if n == 0:
        raise ExactMathError("empty matrix has no polynomial ring attached")
    if any(len(r) != n for r in rows):
        raise ExactMathError("matrix is not square")
    if method == "auto":
        method = "bareiss" if n <= 6 else "interpolate"
    if method == "bareiss":
        return det(rows)
    if method == "interpolate":
        return _det_interpolated(rows)
    raise ExactMathError(f"unknown determinant method {method!r}")
