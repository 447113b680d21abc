"""Exact generating series for surface map enumeration.

Two coefficient worlds live here. TruncatedSeries is a power series cut
at a fixed order with Fraction coefficients, tagged by its variable (z
for face-counted series, t for the Motzkin side). LaurentPoly and
ULaurentRational form an exact algebra of rational functions in the
Motzkin series U, where scheme weights have a closed product form and
the genus series is assembled before any expansion.

Everything is exact. No float enters any computation; the only float
ever produced is AsymptoticConstant.approx() for display.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Counter as CounterT
from collections import Counter

from .errors import InternalCheckError, PreconditionError
from .schemes import (
    DProfile,
    Scheme,
    d_profile,
    dominant_schemes,
    iter_schemes,
)

__all__ = [
    "TruncatedSeries",
    "LaurentPoly",
    "ULaurentRational",
    "AsymptoticConstant",
    "series_T",
    "series_U",
    "series_B",
    "series_M",
    "weight",
    "weight_series",
    "rhat",
    "rhat_exact",
    "series_Tg",
    "series_Q_bullet",
    "series_Qg",
    "tau",
    "asympt_constant",
    "u_symmetry_check",
    "to_t_rational",
]

DEFAULT_ORDER = 30


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise PreconditionError(f"coefficient {x!r} is not an exact rational")


# ---------------------------------------------------------------------------
# truncated power series


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series modulo x^(order+1) with exact rational coefficients.

    var is 't' or 'z'; mixing variables in arithmetic is an error.
    Binary operations truncate to the smaller order.
    """

    var: str
    order: int
    coeffs: tuple

    def __post_init__(self):
        if self.var not in ("t", "z"):
            raise PreconditionError(f"unknown series variable {self.var!r}")
        if self.order < 0:
            raise PreconditionError("series order must be >= 0")
        cs = tuple(_frac(c) for c in self.coeffs)
        if len(cs) != self.order + 1:
            raise PreconditionError(
                f"need {self.order + 1} coefficients, got {len(cs)}")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def zero(cls, var: str, order: int) -> "TruncatedSeries":
        return cls(var, order, (Fraction(0),) * (order + 1))

    @classmethod
    def constant(cls, var: str, order: int, c) -> "TruncatedSeries":
        return cls(var, order,
                   (_frac(c),) + (Fraction(0),) * order)

    def coeff(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise PreconditionError(
                f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise PreconditionError("cannot extend a truncated series")
        return TruncatedSeries(self.var, order, self.coeffs[: order + 1])

    def _align(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise PreconditionError("expected a TruncatedSeries operand")
        if self.var != other.var:
            raise PreconditionError(
                f"cannot mix series in {self.var} and {other.var}")
        n = min(self.order, other.order)
        return n, self.coeffs, other.coeffs

    def __add__(self, other):
        n, a, b = self._align(other)
        return TruncatedSeries(
            self.var, n, tuple(a[i] + b[i] for i in range(n + 1)))

    def __sub__(self, other):
        n, a, b = self._align(other)
        return TruncatedSeries(
            self.var, n, tuple(a[i] - b[i] for i in range(n + 1)))

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        n, a, b = self._align(other)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(n + 1 - i):
                if b[j]:
                    out[i + j] += ai * b[j]
        return TruncatedSeries(self.var, n, tuple(out))

    def scale(self, c) -> "TruncatedSeries":
        c = _frac(c)
        return TruncatedSeries(
            self.var, self.order, tuple(c * x for x in self.coeffs))

    def shift_up(self, k: int = 1) -> "TruncatedSeries":
        """Multiply by var^k."""
        if k < 0:
            raise PreconditionError("shift exponent must be >= 0")
        cs = (Fraction(0),) * k + self.coeffs
        return TruncatedSeries(self.var, self.order, cs[: self.order + 1])

    def pow(self, k: int) -> "TruncatedSeries":
        if k < 0:
            raise PreconditionError("series power must be >= 0")
        out = TruncatedSeries.constant(self.var, self.order, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def div(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Divide by a series with invertible constant term."""
        n, a, b = self._align(other)
        if b[0] == 0:
            raise PreconditionError("division by a series with zero constant term")
        inv0 = 1 / b[0]
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            acc = a[i]
            for j in range(1, i + 1):
                if b[j]:
                    acc -= b[j] * out[i - j]
            out[i] = acc * inv0
        return TruncatedSeries(self.var, n, tuple(out))

    def euler(self) -> "TruncatedSeries":
        """Apply x d/dx: multiply coefficient n by n."""
        return TruncatedSeries(
            self.var, self.order,
            tuple(n * c for n, c in enumerate(self.coeffs)))

    def valuation(self) -> int:
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return self.order + 1


# ---------------------------------------------------------------------------
# base series: T, U, B, M_i


@lru_cache(maxsize=None)
def series_T(N: int) -> TruncatedSeries:
    """Embedded plane tree series: the power series root of T = 1 + 3zT^2.

    Coefficient n is 3^n C(2n, n)/(n+1).
    """
    if N < 0:
        raise PreconditionError("order must be >= 0")
    cs = tuple(Fraction(3 ** n * math.comb(2 * n, n), n + 1)
               for n in range(N + 1))
    return TruncatedSeries("z", N, cs)


def _solve_quadratic_fixed(s: TruncatedSeries) -> TruncatedSeries:
    """The power series V with V = s (1 + V + V^2), for s of valuation >= 1.

    Computes U(s) without composing truncated series term by term.
    """
    if s.coeffs[0] != 0:
        raise InternalCheckError("substituted series must vanish at 0")
    N = s.order
    sc = s.coeffs
    v = [Fraction(0)] * (N + 1)
    w = [Fraction(0)] * (N + 1)  # w = 1 + V + V^2
    w[0] = Fraction(1)
    for n in range(1, N + 1):
        m = n - 1
        if m >= 1:
            sq = sum(v[a] * v[m - a] for a in range(1, m))
            w[m] = v[m] + sq
        v[n] = sum(sc[i] * w[n - i] for i in range(1, n + 1) if sc[i])
        # patch w at level n is deferred; only w[<n] was needed above
    return TruncatedSeries(s.var, N, tuple(v))


@lru_cache(maxsize=None)
def series_U(N: int) -> TruncatedSeries:
    """Motzkin series: the power series root of U = t (1 + U + U^2)."""
    if N < 0:
        raise PreconditionError("order must be >= 0")
    t = TruncatedSeries("t", N, (0, 1)[: N + 1] + (0,) * max(0, N - 1))
    return _solve_quadratic_fixed(t)


@lru_cache(maxsize=None)
def series_B(N: int) -> TruncatedSeries:
    """Bridge series: the power series root of B = t (1 + 2U)(1 + B)."""
    if N < 0:
        raise PreconditionError("order must be >= 0")
    u = series_U(N).coeffs
    # c = coefficients of t(1 + 2U)
    c = [Fraction(0)] * (N + 1)
    if N >= 1:
        c[1] = Fraction(1)
    for n in range(2, N + 1):
        c[n] = 2 * u[n - 1]
    b = [Fraction(0)] * (N + 1)
    for n in range(1, N + 1):
        b[n] = c[n] + sum(c[i] * b[n - i] for i in range(1, n) if c[i])
    return TruncatedSeries("t", N, tuple(b))


def series_M(i: int, N: int) -> TruncatedSeries:
    """Walks of total increment i: M_0 = B, M_i = (1 + B) U^i for i >= 1."""
    if i < 0:
        raise PreconditionError("increment must be >= 0")
    B = series_B(N)
    if i == 0:
        return B
    one = TruncatedSeries.constant("t", N, 1)
    return (one + B) * series_U(N).pow(i)


# ---------------------------------------------------------------------------
# Laurent polynomials and rational functions in U


@dataclass(frozen=True)
class LaurentPoly:
    """Laurent polynomial: coeffs[i] multiplies U^(offset+i).

    Stored stripped of zero coefficients at both ends; the zero
    polynomial has empty coeffs and offset 0.
    """

    offset: int
    coeffs: tuple

    def __post_init__(self):
        cs = [_frac(c) for c in self.coeffs]
        off = self.offset
        lo = 0
        while lo < len(cs) and cs[lo] == 0:
            lo += 1
        hi = len(cs)
        while hi > lo and cs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            off, cs = 0, []
        else:
            off, cs = off + lo, cs[lo:hi]
        object.__setattr__(self, "offset", off)
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls(0, ())

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls(0, (1,))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def top(self) -> int:
        """Degree of the highest term (undefined on zero)."""
        if self.is_zero():
            raise PreconditionError("zero polynomial has no degree")
        return self.offset + len(self.coeffs) - 1

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.offset, other.offset)
        hi = max(self.top, other.top)
        out = [Fraction(0)] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.offset + i - lo] += c
        for i, c in enumerate(other.coeffs):
            out[other.offset + i - lo] += c
        return LaurentPoly(lo, tuple(out))

    def __neg__(self) -> "LaurentPoly":
        return self.scale(-1)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero() or other.is_zero():
            return LaurentPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return LaurentPoly(self.offset + other.offset, tuple(out))

    def scale(self, c) -> "LaurentPoly":
        c = _frac(c)
        if c == 0:
            return LaurentPoly.zero()
        return LaurentPoly(self.offset, tuple(c * x for x in self.coeffs))

    def pow(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise PreconditionError("Laurent power must be >= 0")
        out = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "LaurentPoly":
        """Substitute U -> 1/U."""
        if self.is_zero():
            return self
        return LaurentPoly(-self.top, tuple(reversed(self.coeffs)))

    def eval_series(self, u: TruncatedSeries) -> TruncatedSeries:
        """Evaluate at a power series of valuation >= 1 (so offset >= 0)."""
        if self.is_zero():
            return TruncatedSeries.zero(u.var, u.order)
        if self.offset < 0:
            raise PreconditionError(
                "cannot evaluate negative powers at a power series")
        if u.coeffs[0] != 0:
            raise PreconditionError("evaluation point must have valuation >= 1")
        out = TruncatedSeries.constant(u.var, u.order, self.coeffs[-1])
        for c in reversed(self.coeffs[:-1]):
            out = out * u
            if c:
                out = out + TruncatedSeries.constant(u.var, u.order, c)
        return out * u.pow(self.offset) if self.offset else out


# fixed factor family for scheme weight denominators
_ONE_MINUS_U = LaurentPoly(0, (1, -1))
_ONE_PLUS_U = LaurentPoly(0, (1, 1))
_ONE_PLUS_2U = LaurentPoly(0, (1, 2))


def _chain_poly(d: int) -> LaurentPoly:
    """1 + U + ... + U^(d-1)."""
    if d < 1:
        raise InternalCheckError(f"chain factor needs d >= 1, got {d}")
    return LaurentPoly(0, (1,) * d)


@dataclass(frozen=True)
class ULaurentRational:
    """Quotient of Laurent polynomials in U.

    Normalized so the denominator is a genuine polynomial (offset 0)
    whose coefficients are coprime integers with positive lowest term;
    the numerator absorbs the compensating scalar and U power. Equality
    is equality of rational functions (by cross multiplication), so
    representations need not be in lowest terms.
    """

    num: LaurentPoly
    den: LaurentPoly

    def __post_init__(self):
        num, den = self.num, self.den
        if not isinstance(num, LaurentPoly) or not isinstance(den, LaurentPoly):
            raise PreconditionError("num and den must be LaurentPoly")
        if den.is_zero():
            raise PreconditionError("denominator is zero")
        if not num.is_zero():
            num = LaurentPoly(num.offset - den.offset, num.coeffs)
        den = LaurentPoly(0, den.coeffs)
        # scale both parts so den has integer content 1, lowest coeff > 0
        lcm = 1
        for c in den.coeffs:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        ints = [c * lcm for c in den.coeffs]
        g = 0
        for c in ints:
            g = math.gcd(g, int(c))
        scale = Fraction(lcm, g)
        if den.coeffs[0] < 0:
            scale = -scale
        object.__setattr__(self, "num", num.scale(scale))
        object.__setattr__(self, "den", den.scale(scale))

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "ULaurentRational":
        return cls(p, LaurentPoly.one())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ULaurentRational):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __add__(self, other: "ULaurentRational") -> "ULaurentRational":
        return ULaurentRational(
            self.num * other.den + other.num * self.den,
            self.den * other.den)

    def __mul__(self, other: "ULaurentRational") -> "ULaurentRational":
        return ULaurentRational(self.num * other.num, self.den * other.den)

    def scale(self, c) -> "ULaurentRational":
        return ULaurentRational(self.num.scale(c), self.den)

    def eval_series(self, u: TruncatedSeries) -> TruncatedSeries:
        den = self.den.eval_series(u)
        if den.coeffs[0] == 0:
            raise PreconditionError(
                "denominator vanishes at 0; series expansion undefined")
        return self.num.eval_series(u).div(den)


def u_symmetry_check(x: ULaurentRational) -> bool:
    """True iff x(U) = x(1/U) as rational functions."""
    return x.num.conj() * x.den == x.num * x.den.conj()


# ---------------------------------------------------------------------------
# scheme weights and the genus series


def _weight_parts(prof: DProfile):
    """Numerator Laurent poly (without the 1/k prefactor) and denominator
    factor multiset of the weight attached to a d-profile."""
    num = (LaurentPoly(prof.d + prof.e_eq, (1,))
           * _ONE_PLUS_2U.pow(prof.e_eq)
           * _chain_poly(3).pow(prof.e_ne))
    den: CounterT = Counter()
    den["1-U"] = prof.k + prof.p
    den["1+U"] = prof.k
    for dj in prof.d_levels:
        if dj >= 2:
            den["C", dj] += 1
    return num, den


def _den_factor(key) -> LaurentPoly:
    if key == "1-U":
        return _ONE_MINUS_U
    if key == "1+U":
        return _ONE_PLUS_U
    return _chain_poly(key[1])


def _assemble(terms) -> ULaurentRational:
    """Sum of coefficient * num / product(den factors) over terms,
    built on the least common denominator of the factor family."""
    terms = list(terms)
    lcm: CounterT = Counter()
    for _, _, den in terms:
        for key, mult in den.items():
            lcm[key] = max(lcm[key], mult)
    total = LaurentPoly.zero()
    for coef, num, den in terms:
        part = num.scale(coef)
        for key, mult in lcm.items():
            extra = mult - den.get(key, 0)
            if extra:
                part = part * _den_factor(key).pow(extra)
        total = total + part
    full_den = LaurentPoly.one()
    for key, mult in sorted(lcm.items(), key=repr):
        full_den = full_den * _den_factor(key).pow(mult)
    return ULaurentRational(total, full_den)


def weight(s: Scheme) -> ULaurentRational:
    """The rational weight in U carried by one scheme."""
    prof = d_profile(s)
    num, den = _weight_parts(prof)
    return _assemble([(Fraction(1, prof.k), num, den)])


def weight_series(s: Scheme, N: int) -> TruncatedSeries:
    """Weight of one scheme expanded as a series in t."""
    return weight(s).eval_series(series_U(N))


@lru_cache(maxsize=None)
def _profile_counts(g: int):
    counts: CounterT = Counter()
    for s in iter_schemes(g):
        counts[d_profile(s)] += 1
    return counts


@lru_cache(maxsize=None)
def rhat_exact(g: int) -> ULaurentRational:
    """Sum of the weights of all schemes of genus g, as a rational
    function of U. Schemes sharing a d-profile share a weight, so the
    sum runs over profiles."""
    terms = []
    for prof, count in sorted(_profile_counts(g).items()):
        num, den = _weight_parts(prof)
        terms.append((Fraction(count, prof.k), num, den))
    return _assemble(terms)


def rhat(g: int, N: int) -> TruncatedSeries:
    """Genus-g scheme weight sum, expanded as a series in t."""
    return rhat_exact(g).eval_series(series_U(N))


# ---------------------------------------------------------------------------
# symmetric rational functions of U as rational functions of t


def _sym_laurent_to_v(L: LaurentPoly) -> list:
    """Rewrite a conj-invariant Laurent polynomial as a polynomial in
    v = U + 1/U (coefficient list, constant first)."""
    if L.is_zero():
        return [Fraction(0)]
    if L != L.conj():
        raise InternalCheckError("Laurent polynomial is not symmetric")
    m = L.top
    c = {i: L.coeffs[i - L.offset] if L.offset <= i <= m else Fraction(0)
         for i in range(-m, m + 1)}
    # P_n(v) = U^n + U^-n: P_0 = 2, P_1 = v, P_n = v P_{n-1} - P_{n-2}
    out = [Fraction(0)] * (m + 1)
    out[0] = c[0]
    p_prev = [Fraction(2)]
    p_cur = [Fraction(0), Fraction(1)]
    for n in range(1, m + 1):
        for i, a in enumerate(p_cur):
            out[i] += c[n] * a
        if n < m:
            shifted = [Fraction(0)] + p_cur
            p_next = [shifted[i] - (p_prev[i] if i < len(p_prev) else 0)
                      for i in range(len(shifted))]
            p_prev, p_cur = p_cur, p_next
    return out


def _poly_mul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _v_poly_to_t(pv: list, D: int) -> list:
    """t^D * p((1-t)/t) as a polynomial in t, for deg p <= D."""
    out = [Fraction(0)] * (D + 1)
    power = [Fraction(1)]  # runs through (1-t)^i
    for i, a in enumerate(pv):
        if a:
            for j, x in enumerate(power):
                out[D - i + j] += a * x
        power = _poly_mul(power, [Fraction(1), Fraction(-1)])
    return out


def to_t_rational(x: ULaurentRational):
    """Rewrite a U-symmetric rational function as a rational function
    of t = U/(1 + U + U^2), returned as (num, den) coefficient tuples.

    Uses v = U + 1/U = (1 - t)/t: multiplying through by the conjugate
    of the denominator makes both parts conj-invariant, hence
    polynomials in v. Raises if x is not symmetric under U -> 1/U.
    """
    if not u_symmetry_check(x):
        raise PreconditionError("not symmetric under U -> 1/U")
    dstar = x.den.conj()
    num2 = x.num * dstar
    den2 = x.den * dstar
    nv = _sym_laurent_to_v(num2)
    dv = _sym_laurent_to_v(den2)
    D = max(len(nv), len(dv)) - 1
    nt = _v_poly_to_t(nv + [Fraction(0)] * (D + 1 - len(nv)), D)
    dt = _v_poly_to_t(dv + [Fraction(0)] * (D + 1 - len(dv)), D)
    # strip the common power of t
    lead = 0
    while lead <= D and nt[lead] == 0 and dt[lead] == 0:
        lead += 1
    nt, dt = nt[lead:], dt[lead:]
    while len(nt) > 1 and nt[-1] == 0:
        nt.pop()
    while len(dt) > 1 and dt[-1] == 0:
        dt.pop()
    return tuple(nt), tuple(dt)


# ---------------------------------------------------------------------------
# genus series in z and asymptotic constants


def series_Tg(g: int, N: int) -> TruncatedSeries:
    """Genus-g labeled tree series in z.

    T_0 is the plane tree series T itself; for g >= 1 it is the Euler
    derivative z d/dz of the weight sum evaluated at t = zT^2.
    """
    if g < 0:
        raise PreconditionError("genus must be >= 0")
    if N < 0:
        raise PreconditionError("order must be >= 0")
    if g == 0:
        return series_T(N)
    T = series_T(N)
    one = TruncatedSeries.constant("z", N, 1)
    s = (T - one).scale(Fraction(1, 3))  # zT^2 = (T-1)/3
    v = _solve_quadratic_fixed(s)        # U evaluated at zT^2
    r = rhat_exact(g)
    den = r.den.eval_series(v)
    if den.coeffs[0] == 0:
        raise InternalCheckError("weight denominator vanished at z = 0")
    return r.num.eval_series(v).div(den).euler()


def series_Q_bullet(g: int, N: int) -> TruncatedSeries:
    """Rooted pointed quadrangulation series: twice the tree series."""
    return series_Tg(g, N).scale(2)


def series_Qg(g: int, N: int) -> TruncatedSeries:
    """Rooted quadrangulation series: coefficient n of the rooted
    pointed series divided by the vertex count n + 2 - 2g."""
    qb = series_Q_bullet(g, N)
    out = []
    for n, c in enumerate(qb.coeffs):
        denom = n + 2 - 2 * g
        if c == 0:
            out.append(Fraction(0))
            continue
        if denom <= 0:
            raise InternalCheckError(
                f"nonzero coefficient at n={n} with {denom} vertices")
        q, rem = divmod(c.numerator, denom * c.denominator)
        if rem:
            raise InternalCheckError(
                f"coefficient {c} at n={n} not divisible by {denom}")
        out.append(Fraction(q))
    return TruncatedSeries("z", N, tuple(out))


def tau(g: int) -> Fraction:
    """Sum over dominant schemes of the product of 1/d(j) over levels.

    Genus bounds are delegated to the scheme layer: g < 1 is a
    precondition failure, large g trips the genus budget guard.
    """
    total = Fraction(0)
    for s in dominant_schemes(g):
        prof = d_profile(s)
        if len(prof.d_levels) != 4 * g - 3:
            raise InternalCheckError(
                f"dominant scheme has {len(prof.d_levels)} levels, "
                f"wanted {4 * g - 3}")
        term = Fraction(1)
        for dj in prof.d_levels:
            term /= dj
        total += term
    return total


def _gamma_half(x: Fraction):
    """Exact gamma at integer or half-integer x > 0, as a pair
    (rational, e) meaning rational * pi^(e/2) with e in {0, 1}."""
    x = Fraction(x)
    if x <= 0:
        raise PreconditionError("gamma argument must be positive")
    if x.denominator == 1:
        return Fraction(math.factorial(x.numerator - 1)), 0
    if x.denominator == 2:
        m = (x.numerator - 1) // 2
        return Fraction(math.factorial(2 * m),
                        4 ** m * math.factorial(m)), 1
    raise PreconditionError("gamma argument must be integer or half-integer")


@dataclass(frozen=True)
class AsymptoticConstant:
    """Exact constant of the form rational * pi^(pi_power/2)."""

    rational: Fraction
    pi_power: int

    def __post_init__(self):
        if self.pi_power not in (0, -1):
            raise PreconditionError("pi power must be 0 or -1")
        object.__setattr__(self, "rational", Fraction(self.rational))

    def approx(self) -> float:
        return float(self.rational) * math.pi ** (self.pi_power / 2)

    def __str__(self) -> str:
        if self.pi_power == 0:
            return str(self.rational)
        return f"{self.rational} * pi^(-1/2)"


def asympt_constant(g: int) -> AsymptoticConstant:
    """Leading constant c_g in the n^((5g-3)/2) 12^n growth of rooted
    genus-g quadrangulation counts."""
    gamma_rat, gamma_half_pow = _gamma_half(Fraction(5 * g - 3, 2))
    rational = (Fraction(3 ** g)
                / ((6 * g - 3) * 2 ** (11 * g - 7) * gamma_rat)
                * tau(g))
    return AsymptoticConstant(rational, -gamma_half_pow)
