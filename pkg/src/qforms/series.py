"""Exact truncated Laurent series in one formal variable q.

Coefficients are exact rationals (stored as int when integral so the hot
kernels stay in fast integer arithmetic).  Every series carries an explicit
window [offset, prec) of exponents whose coefficients are known; operations
return the largest window both operands justify, and comparisons only ever
look at the intersection of windows.
"""

from __future__ import annotations

import math
import operator
from fractions import Fraction
from enum import Enum
from typing import Callable, Iterable, Sequence, Union

from .errors import (
    BadConstantTerm,
    ConstantTermNotOne,
    EmptyWindow,
    NonIntegralExponent,
    NonpositiveA,
    NonzeroConstantTerm,
    NonpositiveExponentPresent,
    OutOfWindow,
    UnboundedBelow,
)

Rat = Union[int, Fraction]
Rule = Callable[[int], Rat]


def _norm(v: Rat) -> Rat:
    """Collapse integral Fractions to int so integer kernels stay fast."""
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else v
    return v


def _div_norm(t: Rat, m: int) -> Rat:
    if isinstance(t, int):
        q, r = divmod(t, m)
        return q if r == 0 else Fraction(t, m)
    return _norm(t / m)


class ArithSeq:
    """A named arithmetic sequence n -> exact rational, with a memo cache.

    The rule must be pure (same n, same value); the cache is append-only.
    Plain dict reads/writes keep concurrent readers safe under the GIL.
    """

    __slots__ = ("name", "_rule", "_cache")

    def __init__(self, name: str, rule: Rule):
        self.name = name
        self._rule = rule
        self._cache: dict[int, Rat] = {}

    def __call__(self, n: int) -> Rat:
        cache = self._cache
        if n in cache:
            return cache[n]
        v = _norm(self._rule(n))
        cache[n] = v
        return v

    def __repr__(self) -> str:
        return f"ArithSeq({self.name!r})"


def _as_rule(a) -> Rule:
    """Accept an ArithSeq, any callable, or a constant."""
    if callable(a):
        return a
    v = _norm(Fraction(a))
    return lambda n: v


class Domain(Enum):
    """Index domains for polynomial-exponent theta sums."""

    ALL_INTEGERS = "Z"
    NATURALS_FROM_1 = "N1"
    NATURALS_FROM_0 = "N0"

    @classmethod
    def parse(cls, token: str) -> "Domain":
        for d in cls:
            if d.value == token:
                return d
        raise ValueError(f"unknown domain {token!r} (expected Z, N1 or N0)")


class LaurentSeries:
    """A dense window of exact coefficients for exponents offset <= e < prec.

    exact_low marks a series whose coefficients below offset are known to be
    zero (every builder here produces such series); only then do queries
    below the offset legally return 0.
    """

    __slots__ = ("offset", "coeffs", "exact_low")

    def __init__(self, coeffs: Sequence[Rat], offset: int = 0, exact_low: bool = True):
        vals = [_norm(c) for c in coeffs]
        if not vals:
            raise EmptyWindow("a series needs a nonempty window")
        self.coeffs = vals
        self.offset = offset
        self.exact_low = exact_low

    @property
    def prec(self) -> int:
        return self.offset + len(self.coeffs)

    @property
    def window(self) -> tuple[int, int]:
        return (self.offset, self.prec)

    def coeff(self, e: int) -> Fraction:
        if self.offset <= e < self.prec:
            return Fraction(self.coeffs[e - self.offset])
        if e < self.offset and self.exact_low:
            return Fraction(0)
        raise OutOfWindow(f"coefficient of q^{e} unknown in window [{self.offset}, {self.prec})")

    def _get0(self, e: int) -> Rat:
        # internal: callers guarantee e < prec and e known (or exact_low)
        i = e - self.offset
        return self.coeffs[i] if i >= 0 else 0

    def items(self) -> list[tuple[int, Rat]]:
        return [(self.offset + i, c) for i, c in enumerate(self.coeffs)]

    def _shared(self, other: "LaurentSeries") -> tuple[int, int, bool]:
        if self.exact_low and other.exact_low:
            lo, exact = min(self.offset, other.offset), True
        elif self.exact_low:
            lo, exact = other.offset, False
        elif other.exact_low:
            lo, exact = self.offset, False
        else:
            lo, exact = max(self.offset, other.offset), False
        hi = min(self.prec, other.prec)
        if hi <= lo:
            raise EmptyWindow(f"windows [{self.offset},{self.prec}) and [{other.offset},{other.prec}) share nothing")
        return lo, hi, exact

    def shared_window(self, other: "LaurentSeries") -> tuple[int, int]:
        lo, hi, _ = self._shared(other)
        return (lo, hi)

    def _combine(self, other: "LaurentSeries", sign: int) -> "LaurentSeries":
        lo, hi, exact = self._shared(other)
        out = [self._get0(e) + sign * other._get0(e) for e in range(lo, hi)]
        return LaurentSeries(out, lo, exact)

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self._combine(other, -1)

    def __neg__(self):
        return LaurentSeries([-c for c in self.coeffs], self.offset, self.exact_low)

    def scale(self, c: Rat) -> "LaurentSeries":
        c = _norm(Fraction(c)) if not isinstance(c, (int, Fraction)) else _norm(c)
        return LaurentSeries([c * v for v in self.coeffs], self.offset, self.exact_low)

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        lo = self.offset + other.offset
        hi = min(self.prec + other.offset, other.prec + self.offset)
        if hi <= lo:
            raise EmptyWindow("empty product window")
        out = [0] * (hi - lo)
        a = [(self.offset + i, c) for i, c in enumerate(self.coeffs) if c]
        b = [(other.offset + i, c) for i, c in enumerate(other.coeffs) if c]
        if len(a) > len(b):
            a, b = b, a
        for e1, c1 in a:
            for e2, c2 in b:
                e = e1 + e2
                if e >= hi:
                    break
                out[e - lo] += c1 * c2
        return LaurentSeries(out, lo, self.exact_low and other.exact_low)

    def first_difference(self, other: "LaurentSeries"):
        """Smallest shared exponent where the two disagree, or None."""
        lo, hi, _ = self._shared(other)
        for e in range(lo, hi):
            x, y = self._get0(e), other._get0(e)
            if x != y:
                return (e, Fraction(x), Fraction(y))
        return None

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.first_difference(other) is None

    __hash__ = None

    def __str__(self) -> str:
        return format_series(self)

    def __repr__(self) -> str:
        return f"LaurentSeries(window=[{self.offset},{self.prec}), {format_series(self)})"


def format_series(s: LaurentSeries) -> str:
    """Sparse print form: ascending `c*q^e` terms joined by ` + ` / ` - `."""
    parts: list[str] = []
    for e, c in s.items():
        if not c:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            p = "q" if e == 1 else f"q^{e}"
            body = p if mag == 1 else f"{mag}*{p}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts) if parts else "0"


def polynomial_series(coeffs: Sequence[Rat], prec: int, offset: int = 0) -> LaurentSeries:
    """The exact polynomial sum c_i q^(offset+i), carried on window [offset, prec)."""
    vals = list(coeffs)
    if len(vals) > prec - offset:
        raise ValueError("polynomial does not fit the requested window")
    vals += [0] * (prec - offset - len(vals))
    return LaurentSeries(vals, offset)


def monomial(c: Rat, e: int, prec: int) -> LaurentSeries:
    return polynomial_series([c], prec, e)


def _exp_from_c(c: list) -> list:
    """exp of the series with n * a_n = c[n]; returns the coefficient list."""
    b: list = [1]
    mul = operator.mul
    for m in range(1, len(c)):
        t = sum(map(mul, c[1 : m + 1], reversed(b)))
        b.append(_div_norm(t, m))
    return b


def exp_series(s: LaurentSeries) -> LaurentSeries:
    """Coefficient-recursive exponential of a series with no terms at q^0 or below."""
    for e in range(s.offset, min(s.prec, 1)):
        if s.coeffs[e - s.offset]:
            raise NonzeroConstantTerm(f"nonzero coefficient at q^{e}")
    if not s.exact_low and s.offset < 1:
        raise NonzeroConstantTerm("coefficients below the window could be nonzero")
    top = max(s.prec, 1)
    if not s.exact_low and s.offset > 1:
        top = 1
    c = [0] * top
    for e in range(max(s.offset, 1), s.prec):
        v = s.coeffs[e - s.offset]
        if v:
            c[e] = _norm(e * v)
    return LaurentSeries(_exp_from_c(c), 0)


def _require_unit(s: LaurentSeries, err) -> None:
    if not s.exact_low and s.offset < 0:
        raise err("coefficients below the window could be nonzero")
    for e in range(s.offset, min(s.prec, 0)):
        if s.coeffs[e - s.offset]:
            raise err(f"nonzero coefficient at q^{e}")
    if not (s.offset <= 0 < s.prec) or s._get0(0) != 1:
        raise err("series must start 1 + ...")


def log_series(s: LaurentSeries) -> LaurentSeries:
    """log(1 + u) by the derivative recursion, window [0, prec)."""
    _require_unit(s, ConstantTermNotOne)
    n = s.prec
    svals: list = [0] * n
    svals[0] = 1
    for e in range(max(s.offset, 1), n):
        svals[e] = s.coeffs[e - s.offset]
    d: list = [0] * n
    out: list = [0] * n
    mul = operator.mul
    for m in range(1, n):
        t = m * svals[m] - sum(map(mul, d[1:m], svals[m - 1 : 0 : -1]))
        d[m] = _norm(t)
        out[m] = _div_norm(d[m], m)
    return LaurentSeries(out, 0)


def pow_rational(s: LaurentSeries, r: Rat) -> LaurentSeries:
    """s ** r for a series starting 1 + ..., via exp(r * log s)."""
    return exp_series(log_series(s).scale(Fraction(r)))


def sqrt_T(s: LaurentSeries) -> LaurentSeries:
    """Triangular square root: b_0 = 1, b_n = (a_n - sum b_m b_{n-m}) / 2."""
    _require_unit(s, BadConstantTerm)
    n = s.prec
    avals: list = [0] * n
    for e in range(max(s.offset, 1), n):
        avals[e] = s.coeffs[e - s.offset]
    b: list = [1]
    mul = operator.mul
    for m in range(1, n):
        t = avals[m] - sum(map(mul, b[1:m], b[m - 1 : 0 : -1]))
        b.append(_div_norm(t, 2))
    return LaurentSeries(b, 0)


def q_integrate(s: LaurentSeries) -> LaurentSeries:
    """Divide each coefficient a_n by its exponent n; needs all exponents >= 1."""
    for e in range(s.offset, min(s.prec, 1)):
        if s.coeffs[e - s.offset]:
            raise NonpositiveExponentPresent(f"term at q^{e}")
    if not s.exact_low and s.offset < 1:
        raise NonpositiveExponentPresent("coefficients below the window could be nonzero")
    lo = max(s.offset, 1)
    if lo >= s.prec:
        raise EmptyWindow("nothing left to integrate in the window")
    vals = [_div_norm(s.coeffs[e - s.offset], e) for e in range(lo, s.prec)]
    return LaurentSeries(vals, lo, s.exact_low)


def lambert(a, prec: int) -> LaurentSeries:
    """sum_{n>=1} a(n) q^n / (1 - q^n); coefficient of q^m is sum_{d|m} a(d)."""
    if prec < 1:
        raise ValueError("prec must be >= 1")
    rule = _as_rule(a)
    out: list = [0] * prec
    for d in range(1, prec):
        ad = rule(d)
        if ad:
            for m in range(d, prec, d):
                out[m] = out[m] + ad
    return LaurentSeries(out, 0)


def product_expand(e, prec: int) -> LaurentSeries:
    """prod_{n>=1} (1 - q^n)^{e(n)} to the requested precision, exactly."""
    if prec < 1:
        raise ValueError("prec must be >= 1")
    rule = _as_rule(e)
    c: list = [0] * prec
    for d in range(1, prec):
        ed = rule(d)
        if ed:
            v = _norm(-ed * d)
            for m in range(d, prec, d):
                c[m] = c[m] + v
    return LaurentSeries(_exp_from_c(c), 0)


def theta_series(a: Rat, b: Rat, alternating: bool, prec: int) -> LaurentSeries:
    """sum over all integers n of (-1)^n? q^(a n^2 + b n), truncated at prec."""
    a, b = Fraction(a), Fraction(b)
    if a <= 0:
        raise NonpositiveA("quadratic coefficient must be positive")
    for n in (1, -1, 2):
        if (a * n * n + b * n).denominator != 1:
            raise NonIntegralExponent(f"exponent at n={n} is not an integer")

    def f(n: int) -> int:
        return int(a * n * n + b * n)

    n0 = math.floor(-b / (2 * a))
    lo = min(f(n0), f(n0 + 1))
    if lo >= prec:
        raise EmptyWindow("no theta exponent lands below prec")
    terms: dict[int, int] = {}
    for start, step in ((n0, -1), (n0 + 1, 1)):
        n = start
        while True:
            e = f(n)
            if e >= prec:
                break
            w = -1 if (alternating and n % 2) else 1
            terms[e] = terms.get(e, 0) + w
            n += step
    out = [0] * (prec - lo)
    for e, c in terms.items():
        out[e - lo] = c
    return LaurentSeries(out, lo)


def _poly_val(P: Sequence[int], n: int) -> int:
    acc = 0
    for c in reversed(P):
        acc = acc * n + c
    return acc


def poly_theta(P: Sequence[int], chi, domain: Domain, prec: int) -> LaurentSeries:
    """sum over the domain of chi(n) q^{P(n)}, truncated at prec.

    P is given by ascending integer coefficients and must eventually increase
    along every tail of the domain, so the sum is bounded below.
    """
    coeffs = [int(c) for c in P]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) <= 1:
        raise ValueError("exponent polynomial must be nonconstant")
    deg = len(coeffs) - 1
    if coeffs[-1] < 0:
        raise UnboundedBelow("leading coefficient must be positive")
    if domain is Domain.ALL_INTEGERS and deg % 2:
        raise UnboundedBelow("odd degree is unbounded below over all integers")
    rule = _as_rule(chi)
    # all integer critical points lie within the Cauchy bound for P'
    dcoeffs = [(i + 1) * c for i, c in enumerate(coeffs[1:])]
    turn = 1 + max(abs(Fraction(c, dcoeffs[-1])) for c in dcoeffs[:-1]) if len(dcoeffs) > 1 else 0
    terms: dict[int, Rat] = {}
    lo = None
    walks = [(0, 1), (-1, -1)] if domain is Domain.ALL_INTEGERS else [(0 if domain is Domain.NATURALS_FROM_0 else 1, 1)]
    for start, step in walks:
        n = start
        while True:
            e = _poly_val(coeffs, n)
            if lo is None or e < lo:
                lo = e
            if abs(n) > turn and e >= prec:
                break
            if e < prec:
                v = rule(n)
                if v:
                    terms[e] = terms.get(e, 0) + v
            n += step
    if lo >= prec:
        raise EmptyWindow("no exponent lands below prec")
    out: list = [0] * (prec - lo)
    for e, c in terms.items():
        out[e - lo] = c
    return LaurentSeries(out, lo)


def shift(s: LaurentSeries, k: int) -> LaurentSeries:
    """Multiply by q^k: every exponent (and the window) moves by k."""
    return LaurentSeries(s.coeffs, s.offset + k, s.exact_low)


def inflate(s: LaurentSeries, k: int) -> LaurentSeries:
    """Substitute q -> q^k."""
    if not isinstance(k, int) or k < 1:
        raise ValueError("k must be a positive integer")
    if k == 1:
        return s
    out: list = [0] * (k * (len(s.coeffs) - 1) + 1)
    for i, c in enumerate(s.coeffs):
        if c:
            out[k * i] = c
    return LaurentSeries(out, k * s.offset, s.exact_low)


# Named builders used across the package and the command line.

def theta3(prec: int) -> LaurentSeries:
    return theta_series(1, 0, False, prec)


def theta4(prec: int) -> LaurentSeries:
    return theta_series(1, 0, True, prec)


def theta2(prec: int) -> LaurentSeries:
    """Integral normalization of the second Jacobi theta: exponents n^2 + n."""
    return theta_series(1, 1, False, prec)


def phi_nu(nu: int, prec: int) -> LaurentSeries:
    """1 + 2 sum_{n>=1} q^(n^nu), the two-sided power theta."""
    if nu < 1:
        raise ValueError("nu must be >= 1")
    out = [0] * prec
    out[0] = 1
    n = 1
    while n**nu < prec:
        out[n**nu] += 2
        n += 1
    return LaurentSeries(out, 0)


def phi_star_nu(nu: int, prec: int) -> LaurentSeries:
    """1 + 2 sum_{n>=1} (-1)^n q^(n^nu)."""
    if nu < 1:
        raise ValueError("nu must be >= 1")
    out = [0] * prec
    out[0] = 1
    n = 1
    while n**nu < prec:
        out[n**nu] += -2 if n % 2 else 2
        n += 1
    return LaurentSeries(out, 0)


def partition_series(prec: int) -> LaurentSeries:
    """Generating function of the partition numbers, 1/((q;q)_inf)."""
    return product_expand(-1, prec)


def euler_series(prec: int) -> LaurentSeries:
    """(q;q)_inf = prod (1 - q^n)."""
    return product_expand(1, prec)
