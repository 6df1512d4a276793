"""Representation counts for quadratic, cubic and higher power forms.

Two kinds of machinery live here.  `FormSpec` plus `brute_force_count`
enumerate solutions directly and serve as the ground truth everything else
is measured against.  The remaining functions are closed forms: divisor
sums and square-root extractions that produce the same counts without
enumerating, cross-checked internally where a second exact route is cheap.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Callable, Optional, Sequence, Union

from .arith import ArithSeq, divisors, iroot, moebius, nu_split
from .errors import (
    CongruenceViolated,
    GcdNotOne,
    HypothesisViolated,
    UnboundedEnumeration,
)
from .series import (
    Domain,
    LaurentSeries,
    Rat,
    _as_rule,
    _norm,
    inflate,
    poly_theta,
    shift,
    sqrt_T,
    theta3,
)

Poly = tuple[int, ...]


# ---------------------------------------------------------------------------
# form descriptions and brute-force enumeration


@dataclass(frozen=True)
class FormPart:
    """One variable of a form: a univariate integer polynomial and its domain."""

    var: str
    poly: Poly
    domain: Domain = Domain.ALL_INTEGERS


@dataclass(frozen=True)
class FormSpec:
    """A diagonal form built from parts.

    combiner "Sum" adds every part.  "ProductPair" multiplies exactly two
    parts.  "SumThenProductPair" adds all but the last two parts and then
    adds the product of those two.  `const` is an additive constant.
    """

    parts: tuple[FormPart, ...]
    combiner: str = "Sum"
    const: int = 0

    def validate(self) -> None:
        if self.combiner not in ("Sum", "ProductPair", "SumThenProductPair"):
            raise ValueError(f"unknown combiner {self.combiner!r}")
        if not self.parts:
            raise ValueError("a form needs at least one part")
        names = [p.var for p in self.parts]
        if len(set(names)) != len(names):
            raise ValueError("form variables must be distinct")
        if self.combiner == "ProductPair" and len(self.parts) != 2:
            raise ValueError("ProductPair needs exactly two parts")
        if self.combiner == "SumThenProductPair" and len(self.parts) < 3:
            raise ValueError("SumThenProductPair needs at least three parts")
        for p in self.parts:
            if _trim(p.poly) is None:
                raise ValueError(f"part {p.var} must be a nonconstant polynomial")


def _trim(poly: Sequence[int]) -> Optional[Poly]:
    # strip trailing zeros; None when no term of degree >= 1 survives
    coeffs = list(poly)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) < 2:
        return None
    return tuple(coeffs)


def _peval(poly: Poly, x: int) -> int:
    acc = 0
    for c in reversed(poly):
        acc = acc * x + c
    return acc


def _turn_bound(poly: Poly) -> int:
    # Cauchy bound on the roots of P'; beyond it P is monotone
    dcoeffs = [i * c for i, c in enumerate(poly)][1:]
    while dcoeffs and dcoeffs[-1] == 0:
        dcoeffs.pop()
    if len(dcoeffs) <= 1:
        return 1
    top = abs(dcoeffs[-1])
    worst = max(abs(c) for c in dcoeffs[:-1])
    return 1 + worst // top + 1


def _bounded_below(poly: Poly, domain: Domain) -> bool:
    deg = len(poly) - 1
    if poly[-1] > 0:
        return domain is not Domain.ALL_INTEGERS or deg % 2 == 0
    return False


def _domain_points(domain: Domain, lo: int, hi: int) -> range:
    start = {Domain.ALL_INTEGERS: lo, Domain.NATURALS_FROM_1: max(lo, 1),
             Domain.NATURALS_FROM_0: max(lo, 0)}[domain]
    return range(start, hi + 1)


def _poly_min(poly: Poly, domain: Domain) -> int:
    b = _turn_bound(poly)
    pts = _domain_points(domain, -b, b)
    return min(_peval(poly, x) for x in pts)


def _candidates(poly: Poly, domain: Domain, budget: int) -> list[tuple[int, int]]:
    """All (x, P(x)) with x in the domain and P(x) <= budget.

    Requires P bounded below on the domain; beyond the turn bound P is
    increasing away from zero, so each direction stops once the budget is
    exceeded there.
    """
    b = _turn_bound(poly)
    out = []
    start = {Domain.ALL_INTEGERS: 0, Domain.NATURALS_FROM_1: 1,
             Domain.NATURALS_FROM_0: 0}[domain]
    x = start
    while True:
        v = _peval(poly, x)
        if v <= budget:
            out.append((x, v))
        elif x > b:
            break
        x += 1
    if domain is Domain.ALL_INTEGERS:
        x = -1
        while True:
            v = _peval(poly, x)
            if v <= budget:
                out.append((x, v))
            elif x < -b:
                break
            x -= 1
    return out


def _solve_poly(poly: Poly, domain: Domain, target: int) -> list[int]:
    # every x in the domain with P(x) = target, by scanning the Cauchy box
    shifted = list(poly)
    shifted[0] -= target
    top = abs(shifted[-1])
    worst = max(abs(c) for c in shifted[:-1])
    b = 1 + worst // top + 1
    return [x for x in _domain_points(domain, -b, b) if _peval(poly, x) == target]


def _is_pure_cube_pair(parts: Sequence[FormPart]) -> bool:
    if len(parts) != 2:
        return False
    for p in parts:
        if p.domain is not Domain.ALL_INTEGERS or _trim(p.poly) != (0, 0, 0, 1):
            return False
    return True


@dataclass(frozen=True)
class CountResult:
    n: int
    count: int
    witnesses: Optional[tuple[tuple[int, ...], ...]] = None


def brute_force_count(form: FormSpec, n: int,
                      want_witnesses: bool = False) -> CountResult:
    """Count solutions of the form equalling n by direct enumeration.

    Raises UnboundedEnumeration when no sound finite search box exists.
    The one unbounded shape with a usable box is x^3 + y^3 over the
    integers: there x^2 - xy + y^2 divides a nonzero n, giving
    |x|, |y| <= 2*ceil(sqrt(|n|/3)) + 1.
    """
    form.validate()
    target = n - form.const
    if form.combiner == "Sum" and _is_pure_cube_pair(form.parts):
        return _cube_pair_count(target, n, want_witnesses)

    if form.combiner == "Sum":
        sum_parts, prod_parts = form.parts, ()
    elif form.combiner == "ProductPair":
        sum_parts, prod_parts = (), form.parts
    else:
        sum_parts, prod_parts = form.parts[:-2], form.parts[-2:]

    if form.combiner == "ProductPair":
        if want_witnesses:
            wits = tuple(_product_pair_witnesses(prod_parts, target))
            return CountResult(n, len(wits), wits)
        return CountResult(n, _product_pair_count(prod_parts, target))

    polys = []
    for p in sum_parts:
        poly = _trim(p.poly)
        if not _bounded_below(poly, p.domain):
            raise UnboundedEnumeration(
                f"part {p.var} is not bounded below on its domain")
        polys.append((p, poly))
    mins = [_poly_min(poly, p.domain) for p, poly in polys]

    prod_min = 0
    if prod_parts:
        # the pair's value must be bounded below too, which for a product
        # of independent factors needs both factors nonnegative throughout
        fmins = []
        for p in prod_parts:
            poly = _trim(p.poly)
            if not _bounded_below(poly, p.domain):
                raise UnboundedEnumeration(
                    f"factor {p.var} is not bounded below on its domain")
            fmins.append(_poly_min(poly, p.domain))
        if min(fmins) < 0:
            raise UnboundedEnumeration(
                "a product factor takes negative values, so the pair is "
                "not bounded below")
        prod_min = fmins[0] * fmins[1]

    total_min = sum(mins) + prod_min
    cands = []
    for (p, poly), m in zip(polys, mins):
        budget = target - (total_min - m)
        cands.append(_candidates(poly, p.domain, budget))

    if want_witnesses:
        wits_list: list[tuple[int, ...]] = []
        _witness_rec(cands, mins, prod_min, 0, target, [], prod_parts, wits_list)
        return CountResult(n, len(wits_list), tuple(wits_list))

    acc = {0: 1}
    for i, cand in enumerate(cands):
        floor = sum(mins[i + 1:]) + prod_min
        bucket: dict[int, int] = {}
        for _, v in cand:
            bucket[v] = bucket.get(v, 0) + 1
        new: dict[int, int] = {}
        for v1, c1 in acc.items():
            for v2, c2 in bucket.items():
                v = v1 + v2
                if v + floor <= target:
                    new[v] = new.get(v, 0) + c1 * c2
        acc = new
    if not prod_parts:
        return CountResult(n, acc.get(target, 0))
    total = 0
    for s, c in acc.items():
        total += c * _product_pair_count(prod_parts, target - s)
    return CountResult(n, total)


def _cube_pair_count(target: int, n: int,
                     want_witnesses: bool) -> CountResult:
    if target == 0:
        raise UnboundedEnumeration(
            "x^3 + y^3 = 0 has infinitely many integer solutions")
    b = 2 * (math.isqrt(abs(target) // 3) + 1) + 1
    count = 0
    wits = []
    for x in range(-b, b + 1):
        rest = target - x ** 3
        y = iroot(abs(rest), 3) if rest else 0
        if rest < 0:
            y = -y
        if y ** 3 == rest and abs(y) <= b:
            count += 1
            if want_witnesses:
                wits.append((x, y))
    return CountResult(n, count, tuple(wits) if want_witnesses else None)


def _check_zero_product(prod_parts) -> int:
    # a zero product needs a factor with a root in its domain, and then
    # the other variable is free, so the count is 0 or infinite
    for p, q in (prod_parts, prod_parts[::-1]):
        if _solve_poly(_trim(p.poly), p.domain, 0):
            raise UnboundedEnumeration(
                f"factor {p.var} vanishes, leaving {q.var} unconstrained")
    return 0


def _product_pair_count(prod_parts, m: int) -> int:
    if m == 0:
        return _check_zero_product(prod_parts)
    p1, p2 = prod_parts
    poly1, poly2 = _trim(p1.poly), _trim(p2.poly)
    total = 0
    for d in divisors(abs(m)):
        for u in (d, -d):
            v, r = divmod(m, u)
            if r:
                continue
            xs = _solve_poly(poly1, p1.domain, u)
            if not xs:
                continue
            ys = _solve_poly(poly2, p2.domain, v)
            total += len(xs) * len(ys)
    return total


def _product_pair_witnesses(prod_parts, m: int) -> list[tuple[int, int]]:
    if m == 0:
        _check_zero_product(prod_parts)
        return []
    p1, p2 = prod_parts
    poly1, poly2 = _trim(p1.poly), _trim(p2.poly)
    out = []
    for d in divisors(abs(m)):
        for u in (d, -d):
            v, r = divmod(m, u)
            if r:
                continue
            for x in _solve_poly(poly1, p1.domain, u):
                for y in _solve_poly(poly2, p2.domain, v):
                    out.append((x, y))
    return out


def _witness_rec(cands, mins, prod_min, i, remaining, partial, prod_parts,
                 out) -> None:
    if i == len(cands):
        if prod_parts:
            for x, y in _product_pair_witnesses(prod_parts, remaining):
                out.append(tuple(partial) + (x, y))
        elif remaining == 0:
            out.append(tuple(partial))
        return
    floor = sum(mins[i + 1:]) + prod_min
    for x, v in cands[i]:
        if v + floor <= remaining:
            partial.append(x)
            _witness_rec(cands, mins, prod_min, i + 1, remaining - v, partial,
                         prod_parts, out)
            partial.pop()


# ---------------------------------------------------------------------------
# form DSL


_VARS = "xyzw"


def _tokenize(text: str) -> list:
    out: list = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+*^":
            out.append(ch)
            i += 1
        elif ch in _VARS:
            out.append(ch)
            i += 1
        else:
            m = re.match(r"-?\d+", text[i:])
            if not m:
                raise ValueError(f"bad character {ch!r} in form expression")
            out.append(int(m.group()))
            i += len(m.group())
    return out


def parse_form(text: str,
               domains: Optional[dict[str, Domain]] = None) -> FormSpec:
    """Parse a form expression into a FormSpec.

    Grammar: expr is either sumterms joined by '+' or exactly two sumterms
    joined by '*'.  A sumterm is `[int '*'] var '^' uint` or a bare integer
    constant.  An integer followed by '*' and a variable binds as a
    coefficient (so "2*x^2" is one term, not a product).  Sums default
    every variable to the integers; products default to positive integers.
    `domains` overrides per variable.
    """
    toks = _tokenize(text)
    pos = 0

    def peek(k: int = 0):
        return toks[pos + k] if pos + k < len(toks) else None

    def sumterm():
        nonlocal pos
        t = toks[pos] if pos < len(toks) else None
        coeff = 1
        if isinstance(t, int):
            if peek(1) == "*" and isinstance(peek(2), str) and peek(2) in _VARS:
                coeff = t
                pos += 2
                t = toks[pos]
            else:
                pos += 1
                return ("const", t)
        if not isinstance(t, str) or t not in _VARS:
            raise ValueError(f"expected a variable, got {t!r}")
        pos += 1
        if peek() != "^":
            raise ValueError(f"variable {t} needs an explicit '^' exponent")
        pos += 1
        e = toks[pos] if pos < len(toks) else None
        if not isinstance(e, int) or e < 1:
            raise ValueError("exponent must be a positive integer")
        pos += 1
        return ("term", t, coeff, e)

    terms = [sumterm()]
    combiner = "Sum"
    if peek() == "*":
        pos += 1
        terms.append(sumterm())
        combiner = "ProductPair"
    else:
        while peek() == "+":
            pos += 1
            terms.append(sumterm())
    if pos != len(toks):
        raise ValueError(f"unexpected token {peek()!r}")

    const = 0
    polys: dict[str, dict[int, int]] = {}
    order: list[str] = []
    for t in terms:
        if t[0] == "const":
            if combiner == "ProductPair":
                raise ValueError("a product factor must not be constant")
            const += t[1]
            continue
        _, var, coeff, e = t
        if var not in polys:
            polys[var] = {}
            order.append(var)
        elif combiner == "ProductPair":
            raise ValueError("product factors must use distinct variables")
        polys[var][e] = polys[var].get(e, 0) + coeff

    if combiner == "ProductPair" and len(order) != 2:
        raise ValueError("a product needs exactly two variable factors")
    default = (Domain.NATURALS_FROM_1 if combiner == "ProductPair"
               else Domain.ALL_INTEGERS)
    parts = []
    for var in order:
        mono = polys[var]
        deg = max(mono)
        poly = tuple(mono.get(i, 0) for i in range(deg + 1))
        dom = (domains or {}).get(var, default)
        parts.append(FormPart(var, poly, dom))
    spec = FormSpec(tuple(parts), combiner, const)
    spec.validate()
    return spec


# ---------------------------------------------------------------------------
# two squares


def r2_jacobi(n: int) -> int:
    """Representations of n as an ordered pair of integer squares.

    The classical divisor form: 4 times the excess of divisors 1 mod 4
    over divisors 3 mod 4.  r(0) = 1.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    total = 0
    for d in divisors(n):
        if d % 2:
            total += -1 if d % 4 == 3 else 1
    return 4 * total


_rq_cache: dict[tuple[int, ...], LaurentSeries] = {}


def _r_multi_series(A: tuple[int, ...], prec: int) -> LaurentSeries:
    key = tuple(sorted(A))
    got = _rq_cache.get(key)
    if got is not None and got.prec >= prec:
        return got
    prec = max(prec, 2 * (got.prec if got else 0), 64)
    conv = None
    direct = None
    for a in A:
        m = (prec - 1) // a + 2
        t3 = theta3(m)
        f2 = inflate(t3 * t3, a)
        f1 = inflate(t3, a)
        conv = f2 if conv is None else conv * f2
        direct = f1 if direct is None else direct * f1
    root = sqrt_T(conv)
    if root.first_difference(direct) is not None:
        raise ArithmeticError("square-root route disagrees with the product route")
    _rq_cache[key] = root
    return root


def r2_multi(A: Sequence[int], n: int) -> int:
    """Representations of n by sum of A_i * x_i^2 over integer tuples.

    Computed as the T square root of the convolution of inflated
    two-square counts, cross-checked against the plain theta product.
    """
    A = tuple(int(a) for a in A)
    if not A or any(a < 1 for a in A):
        raise ValueError("coefficients must be positive")
    if reduce(math.gcd, A) != 1:
        raise GcdNotOne("coefficient gcd must be 1")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return int(_r_multi_series(A, n + 1).coeff(n))


def r_quadratic_T(A: int, B: int, n: int) -> int:
    """Representations of n by A x^2 + B y^2 over integer pairs."""
    return r2_multi((A, B), n)


def shift_count(A: int, B: int, C: int, D: int, E: int, n: int) -> int:
    """Count integer pairs with A x^2 + B y^2 + C x + D y + E = n.

    Requires A, B >= 1 with gcd 1, and 2A | C, 2B | D so the squares
    complete over the integers; the count is then a plain two-square
    count at the shifted target.  An independent box enumeration of the
    completed form guards the divisor route.
    """
    if A < 1 or B < 1:
        raise ValueError("A and B must be positive")
    if math.gcd(A, B) != 1:
        raise GcdNotOne("gcd(A, B) must be 1")
    if C % (2 * A) or D % (2 * B):
        raise CongruenceViolated("need 2A | C and 2B | D")
    m = n + C * C // (4 * A) + D * D // (4 * B) - E
    count = 0 if m < 0 else r_quadratic_T(A, B, m)
    direct = 0
    if m >= 0:
        bx = math.isqrt(m // A)
        for x in range(-bx, bx + 1):
            rest = m - A * x * x
            q, r = divmod(rest, B)
            if r == 0:
                s = math.isqrt(q)
                if s * s == q:
                    direct += 2 if s else 1
    if direct != count:
        raise ArithmeticError("shifted count disagrees with direct enumeration")
    return count


# ---------------------------------------------------------------------------
# cubes and fifth powers over positive integers


def r_plus3(n: int) -> int:
    """Ordered pairs of positive cubes summing to n, by divisor sums.

    One term for a divisor with d^3 = 4n (the x = y diagonal), two for
    each starred divisor, where (4(n/d) - d^2)/3 is a nonzero perfect
    square k^2 with d - k an even number at least 2.
    """
    if n < 1:
        raise ValueError("n must be positive")
    first = 1 if iroot(4 * n, 3) ** 3 == 4 * n else 0
    pairs = 0
    for d in divisors(n):
        t = 4 * (n // d) - d * d
        if t <= 0 or t % 3:
            continue
        k2 = t // 3
        k = math.isqrt(k2)
        if k and k * k == k2 and d - k >= 2 and (d - k) % 2 == 0:
            pairs += 1
    return first + 2 * pairs


def r5(n: int) -> int:
    """Ordered pairs of fifth powers of nonnegative integers summing to n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    first = 1 if iroot(16 * n, 5) ** 5 == 16 * n else 0
    pairs = 0
    for d in divisors(n):
        if d ** 5 == 16 * n:
            continue
        s2 = 5 * d ** 4 + 20 * (n // d)
        s = math.isqrt(s2)
        if s * s != s2:
            continue
        t2 = 10 * s - 25 * d * d
        if t2 < 0:
            continue
        t = math.isqrt(t2)
        if t * t != t2:
            continue
        num = 5 * d - t
        if num >= 0 and num % 10 == 0:
            pairs += 1
    return first + 2 * pairs


def r3_signed(n: int) -> int:
    """Ordered pairs of integer cubes (both coordinates any sign) summing to n.

    Same diagonal term as r_plus3; the paired term asks only that
    4(n/d) - d^2 be 3 k^2 with k positive and d, k of equal parity.
    """
    if n < 1:
        raise ValueError("n must be positive")
    first = 1 if iroot(4 * n, 3) ** 3 == 4 * n else 0
    pairs = 0
    for d in divisors(n):
        t = 4 * (n // d) - d * d
        if t <= 0 or t % 3:
            continue
        k2 = t // 3
        k = math.isqrt(k2)
        if k * k == k2 and (d - k) % 2 == 0:
            pairs += 1
    return first + 2 * pairs


_rp3_series_cache: list[LaurentSeries] = []


def _rplus3_series(prec: int) -> LaurentSeries:
    if _rp3_series_cache and _rp3_series_cache[0].prec >= prec:
        return _rp3_series_cache[0]
    prec = max(prec, 64)
    s = LaurentSeries([0 if t == 0 else r_plus3(t) for t in range(prec)])
    _rp3_series_cache[:] = [s]
    return s


_phi3_cache: list[LaurentSeries] = []


def _positive_cubes_series(prec: int) -> LaurentSeries:
    if _phi3_cache and _phi3_cache[0].prec >= prec:
        return _phi3_cache[0]
    s = poly_theta([0, 0, 0, 1], 1, Domain.NATURALS_FROM_1, max(prec, 64))
    _phi3_cache[:] = [s]
    return s


_sc_cache: dict[tuple[int, int], LaurentSeries] = {}


def s_cubic_AB(A: int, B: int, n: int) -> int:
    """Positive solutions of A x^3 + B y^3 = n via the T square root.

    The convolution of the two inflated pair-of-cubes counts is the
    square of the wanted series; stripping the q^(2(A+B)) valuation
    leaves a unit, whose square root shifted back gives the counts.
    Cross-checked against the plain product of cube series.
    """
    if A < 1 or B < 1:
        raise ValueError("A and B must be positive")
    if math.gcd(A, B) != 1:
        raise GcdNotOne("gcd(A, B) must be 1")
    if n < 0:
        raise ValueError("n must be nonnegative")
    v = 2 * (A + B)
    key = (min(A, B), max(A, B))
    got = _sc_cache.get(key)
    if got is None or got.prec <= n:
        prec = max(n + 1, 2 * (got.prec if got else 0), 64)
        inner = prec + v
        r = _rplus3_series(inner)
        conv = inflate(r, A) * inflate(r, B) if A != B else None
        if conv is None:
            ra = inflate(r, A)
            conv = ra * ra
        root = shift(sqrt_T(shift(conv, -v)), A + B)
        phi = _positive_cubes_series(inner)
        direct = inflate(phi, A) * inflate(phi, B)
        if root.first_difference(direct) is not None:
            raise ArithmeticError(
                "square-root route disagrees with the product route")
        got = root
        _sc_cache[key] = got
    return int(got.coeff(n))


# ---------------------------------------------------------------------------
# starred divisor sums


def s_nu_fn(n: int, nu: int) -> int:
    """Sum of d^nu over divisors of n sitting on the diagonal d^3 = 4n."""
    if n < 1:
        raise ValueError("n must be positive")
    total = 0
    for d in divisors(n):
        if 4 * (n // d) - d * d == 0:
            total += d ** nu
    return total


def sigma_star(n: int, nu: int) -> Rat:
    """Starred divisor power sum.

    Runs over divisors d of n for which (4(n/d) - d^2)/3 is a nonzero
    perfect square k^2 with d - k even and at least 2; adds d^nu.
    Negative nu gives an exact rational.
    """
    if n < 1:
        raise ValueError("n must be positive")
    total: Rat = 0
    for d in divisors(n):
        t = 4 * (n // d) - d * d
        if t <= 0 or t % 3:
            continue
        k2 = t // 3
        k = math.isqrt(k2)
        if k and k * k == k2 and d - k >= 2 and (d - k) % 2 == 0:
            total += d ** nu if nu >= 0 else Fraction(1, d ** (-nu))
    return _norm(total)


def d3_fn(n: int) -> int:
    """Number of starred divisors of n (the nu = 0 starred sum)."""
    return int(sigma_star(n, 0))


def h_kuv(k: int, u: int, v: int) -> int:
    """Pairs 1 <= n, m <= k with n + m = u and n^2 - nm + m^2 = v."""
    count = 0
    for a in range(max(1, u - k), min(k, u - 1) + 1):
        b = u - a
        if a * a - a * b + b * b == v:
            count += 1
    return count


def h_star(k: int, u: int, v: int) -> int:
    """Like h_kuv but restricted to coprime pairs."""
    count = 0
    for a in range(max(1, u - k), min(k, u - 1) + 1):
        b = u - a
        if a * a - a * b + b * b == v and math.gcd(a, b) == 1:
            count += 1
    return count


# ---------------------------------------------------------------------------
# divisor-supported polynomial representation counts


def poly_rep_R(P: Sequence[int], n: int, signed: bool = False) -> int:
    """Count roots of P(x) = n with x ranging over divisors of n.

    P must vanish at 0, so every root of P(x) = n divides n and the
    divisor sum counts exactly the solutions: positive x when unsigned,
    nonzero x of either sign when signed (then P needs even degree and a
    positive leading coefficient).  A direct scan double-checks the count.
    """
    poly = _trim(P)
    if poly is None:
        raise ValueError("P must be a nonconstant polynomial")
    if poly[0] != 0:
        raise HypothesisViolated("P(0) must be 0")
    if poly[-1] <= 0:
        raise HypothesisViolated("leading coefficient must be positive")
    if signed and (len(poly) - 1) % 2:
        raise HypothesisViolated("signed counting needs even degree")
    if n < 1:
        raise ValueError("n must be positive")
    count = 0
    for d in divisors(n):
        if _peval(poly, d) == n:
            count += 1
        if signed and _peval(poly, -d) == n:
            count += 1
    xs = range(-n, n + 1) if signed else range(1, n + 1)
    direct = sum(1 for x in xs if x and _peval(poly, x) == n)
    if direct != count:
        raise ArithmeticError("divisor count disagrees with the direct scan")
    return count


CountRule = Union[int, Callable[[int], Rat], ArithSeq]


def conv_sum_count(R1: CountRule, R2: CountRule, n: int,
                   r1_0: Rat = 0, r2_0: Rat = 0) -> Rat:
    """Additive convolution sum_{l=0..n} R1(l) R2(n-l).

    The values at 0 follow the supplied conventions rather than the
    rules, matching counts like "number of roots of P at 0".
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    rule1, rule2 = _as_rule(R1), _as_rule(R2)

    def v1(l: int) -> Rat:
        return r1_0 if l == 0 else rule1(l)

    def v2(l: int) -> Rat:
        return r2_0 if l == 0 else rule2(l)

    return _norm(sum(v1(l) * v2(n - l) for l in range(n + 1)))


def conv_prod_count(R1: CountRule, R2: CountRule, n: int) -> Rat:
    """Multiplicative convolution sum_{d | n} R1(d) R2(n/d)."""
    if n < 1:
        raise ValueError("n must be positive")
    rule1, rule2 = _as_rule(R1), _as_rule(R2)
    return _norm(sum(rule1(d) * rule2(n // d) for d in divisors(n)))


def general_f2_count(f: dict[tuple[int, int], int], n: int) -> int:
    """Positive solutions of f(x, y) = n for f given as monomials.

    f is a dict mapping (x-degree, y-degree) to a coefficient and must
    vanish identically on both axes, which makes x and y divide every
    value; the count then runs over divisor pairs of n.
    """
    for (i, j), c in f.items():
        if c and (i < 1 or j < 1):
            raise HypothesisViolated("f(x, 0) and f(0, y) must vanish identically")
    if n < 1:
        raise ValueError("n must be positive")

    def feval(x: int, y: int) -> int:
        return sum(c * x ** i * y ** j for (i, j), c in f.items())

    count = 0
    for d in divisors(n):
        for e in divisors(n):
            if feval(d, e) == n:
                count += 1
    return count


def xnu_xy_count(n: int, nu: int) -> int:
    """Positive solutions of x^nu + x y = n.

    Factoring x out shows x divides n and y = n/x - x^(nu-1), so the
    count is the number of divisors d with n/d - d^(nu-1) >= 1.
    """
    if n < 1 or nu < 1:
        raise ValueError("need positive n and nu")
    return sum(1 for d in divisors(n) if n // d - d ** (nu - 1) >= 1)


# ---------------------------------------------------------------------------
# power-pair counts through the split Moebius transform


_astar_cache: dict[tuple[int, str], list[Rat]] = {}


def _astar_values(nu: int, chi, upto: int) -> list[Rat]:
    rule = _as_rule(chi)
    if isinstance(chi, ArithSeq):
        key: Optional[tuple[int, str]] = (nu, "seq:" + chi.name)
    elif not callable(chi):
        key = (nu, f"const:{chi}")
    else:
        key = None
    vals = _astar_cache.get(key, [0])[:] if key else [0]
    if len(vals) <= upto:
        for t in range(len(vals), upto + 1):
            acc: Rat = 0
            for d in divisors(t):
                sp = nu_split(d, nu)
                m = moebius(sp.n2)
                if m:
                    acc += m * rule(sp.n1)
            vals.append(_norm(acc))
        if key:
            _astar_cache[key] = vals
    return vals


def theorem57_count(l: int, nu: int, chi: CountRule = 1) -> Rat:
    """Additive self-convolution of the split Moebius divisor transform.

    With chi identically 1 the transform is the indicator of positive
    nu-th powers, so the result counts ordered pairs of positive nu-th
    powers summing to l, weighted by chi of the roots in general.
    """
    if l < 0:
        raise ValueError("l must be nonnegative")
    if nu < 2:
        raise ValueError("nu must be at least 2")
    vals = _astar_values(nu, chi, l)
    return _norm(sum(vals[t] * vals[l - t] for t in range(l + 1)))
