"""Integer factorization and the arithmetic functions used throughout.

Everything here is exact: divisor sums with negative powers return
Fractions, never floats. The small factor cache makes the n <= 10^4
property sweeps cheap.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .errors import EvenModulus
from .series import ArithSeq, Rat, _as_rule, _norm

Factorization = tuple[tuple[int, int], ...]


class NuSplit(NamedTuple):
    """Decomposition n = nu_part^nu * star_part with star_part nu-th-power-free.

    n1/n2 are the variant used by the closed formulas: n1 = max(nu_part, 1)
    and n2 = n / n1^nu, so n1^nu * n2 = n always holds.
    """

    nu_part: int
    star_part: int
    n1: int
    n2: int
    nu_part_is_trivial: bool


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24 with these bases
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    return _is_probable_prime(n)


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed on {n}")


@lru_cache(maxsize=None)
def factor(n: int) -> Factorization:
    """Prime factorization as sorted ((p, a), ...); factor(1) is empty."""
    if n < 1:
        raise ValueError("n must be >= 1")
    counts: dict[int, int] = {}
    m = n
    for p in (2, 3, 5):
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
    f = 7
    # 2-3-5 wheel; hand off to rho once trial division gets expensive
    steps = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while f * f <= m and f < 100_000:
        while m % f == 0:
            counts[f] = counts.get(f, 0) + 1
            m //= f
        f += steps[i]
        i = (i + 1) % 8
    stack = [m] if m > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return tuple(sorted(counts.items()))


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    out = [1]
    for p, a in factor(n):
        out = [d * p**e for d in out for e in range(a + 1)]
    return tuple(sorted(out))


def moebius(n: int) -> int:
    f = factor(n)
    if any(a > 1 for _, a in f):
        return 0
    return -1 if len(f) % 2 else 1


def liouville(n: int) -> int:
    """(-1) to the number of prime factors counted with multiplicity."""
    return -1 if sum(a for _, a in factor(n)) % 2 else 1


def totient(n: int) -> int:
    out = n
    for p, _ in factor(n):
        out = out // p * (p - 1)
    return out


def radical(n: int) -> int:
    out = 1
    for p, _ in factor(n):
        out *= p
    return out


def sigma_nu(n: int, nu: int) -> Rat:
    """Sum of d^nu over the divisors of n, exact for negative nu too."""
    if nu >= 0:
        return sum(d**nu for d in divisors(n))
    return _norm(sum(Fraction(1, d**-nu) for d in divisors(n)))


def jacobi_symbol(n: int, k: int) -> int:
    """Classical Jacobi symbol (n|k) for odd positive k."""
    if k <= 0 or k % 2 == 0:
        raise EvenModulus("modulus must be odd and positive")
    n %= k
    t = 1
    while n:
        while n % 2 == 0:
            n //= 2
            if k % 8 in (3, 5):
                t = -t
        n, k = k, n
        if n % 4 == 3 and k % 4 == 3:
            t = -t
        n %= k
    return t if k == 1 else 0


def jacobi_symbol_rational(x, k: int) -> int:
    """(x|k) extended to rationals: 0 whenever x is not an integer."""
    x = Fraction(x)
    if x.denominator != 1:
        return 0
    return jacobi_symbol(x.numerator, k)


def kronecker_symbol(a: int, n: int) -> int:
    """Jacobi symbol extended to every positive modulus (even ones included)."""
    if n < 1:
        raise ValueError("modulus must be positive")
    sign = 1
    e = 0
    while n % 2 == 0:
        n //= 2
        e += 1
    if e:
        if a % 2 == 0:
            return 0
        if e % 2 and a % 8 in (3, 5):
            sign = -sign
    return sign * jacobi_symbol(a, n)


@lru_cache(maxsize=None)
def nu_split(n: int, nu: int) -> NuSplit:
    """Split each prime power p^a as a = b*nu + k, 0 <= k < nu."""
    if n < 1 or nu < 2:
        raise ValueError("need n >= 1 and nu >= 2")
    nu_part = star = 1
    for p, a in factor(n):
        b, k = divmod(a, nu)
        nu_part *= p**b
        star *= p**k
    n1 = nu_part
    return NuSplit(nu_part, star, n1, n // n1**nu, nu_part == 1)


def iroot(n: int, k: int) -> int:
    """Floor of the k-th root, decided exactly."""
    if n < 0 or k < 1:
        raise ValueError
    if n == 0:
        return 0
    x = int(round(n ** (1.0 / k)))
    while x > 0 and x**k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def X_nu(n: int, nu: int) -> int:
    """1 if n is a perfect nu-th power, else 0."""
    if n < 1 or nu < 2:
        raise ValueError("need n >= 1 and nu >= 2")
    return 1 if iroot(n, nu) ** nu == n else 0


@lru_cache(maxsize=None)
def lambda_nu(n: int, nu: int) -> int:
    """sum over d with d^nu | n of mu(n / d^nu)."""
    if n < 1 or nu < 2:
        raise ValueError("need n >= 1 and nu >= 2")
    total = 0
    d = 1
    while d**nu <= n:
        if n % d**nu == 0:
            total += moebius(n // d**nu)
        d += 1
    return total


def mu_nu(n: int, nu: int) -> int:
    s = nu_split(n, nu)
    return 0 if s.nu_part_is_trivial else moebius(s.star_part)


def mu_star_nu(n: int, nu: int) -> int:
    s = nu_split(n, nu)
    if s.nu_part_is_trivial:
        return 0
    sign = -1 if s.nu_part % 2 else 1
    return sign * moebius(s.star_part)


def c_nu(n: int, nu: int) -> Rat:
    """(1/n) sum over d > 1 with d^nu | n of d^nu mu(n / d^nu)."""
    if n < 1 or nu < 2:
        raise ValueError("need n >= 1 and nu >= 2")
    total = 0
    d = 2
    while d**nu <= n:
        if n % d**nu == 0:
            total += d**nu * moebius(n // d**nu)
        d += 1
    return _norm(Fraction(total, n))


def Y_nu(n: int, nu: int, chi) -> Rat:
    """(1/n) sum over d > 1 with d^nu | n of chi(d) d^nu mu(n / d^nu)."""
    rule = _as_rule(chi)
    total = 0
    d = 2
    while d**nu <= n:
        if n % d**nu == 0:
            total = total + rule(d) * d**nu * moebius(n // d**nu)
        d += 1
    return _norm(Fraction(total) / n)


def A_nu(n: int, nu: int, chi) -> Rat:
    """sum over d > 1 with d^nu | n of chi(d) mu(n / d^nu)."""
    rule = _as_rule(chi)
    total = 0
    d = 2
    while d**nu <= n:
        if n % d**nu == 0:
            total = total + rule(d) * moebius(n // d**nu)
        d += 1
    return _norm(Fraction(total))


def Y_nu_closed(n: int, nu: int, chi) -> Rat:
    """Factorization form of Y_nu: chi(n1) mu(n2) / n2 unless the split is trivial."""
    s = nu_split(n, nu)
    if s.nu_part_is_trivial:
        return 0
    rule = _as_rule(chi)
    return _norm(Fraction(rule(s.n1) * moebius(s.n2), 1) / s.n2)


def A_nu_closed(n: int, nu: int, chi) -> Rat:
    s = nu_split(n, nu)
    if s.nu_part_is_trivial:
        return 0
    rule = _as_rule(chi)
    return _norm(rule(s.n1) * moebius(s.n2))


def h_a(n: int, a: int) -> Rat:
    """sum over d | n of d^a mu(n/d); h_1 is the totient."""
    if a >= 0:
        return sum(d**a * moebius(n // d) for d in divisors(n))
    return _norm(sum(Fraction(moebius(n // d), d**-a) for d in divisors(n)))


def mu_k(n: int, k: int) -> int:
    """sum over d with d^k | n of mu(d)."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    total = 0
    d = 1
    while d**k <= n:
        if n % d**k == 0:
            total += moebius(d)
        d += 1
    return total


def mu_kv(n: int, k: int, v: int) -> Rat:
    """sum over d with d^k | n of mu(d) / d^v."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    total = Fraction(0)
    d = 1
    while d**k <= n:
        if n % d**k == 0:
            total += Fraction(moebius(d), d**v)
        d += 1
    return _norm(total)


def moebius_invert(f, N: int) -> ArithSeq:
    """g(n) = sum over d | n of f(d) mu(n/d), precomputed through N."""
    rule = _as_rule(f)
    name = getattr(f, "name", getattr(f, "__name__", "fn"))

    def g(n: int) -> Rat:
        return _norm(sum(rule(d) * moebius(n // d) for d in divisors(n)))

    seq = ArithSeq(f"moebius_invert({name})", g)
    for n in range(1, N + 1):
        seq(n)
    return seq


# --- character registry ----------------------------------------------------
#
# Characters used as chi arguments are shared through here so memo caches can
# be keyed by a stable id. "jacobi_K" is the guarded symbol (n|K); "lambda_V"
# is lambda_nu with that V; "pow_V" is n^V; "X_V" the perfect V-th power
# indicator; "res_A_B" the indicator of n = A (mod B); a bare integer literal
# is that constant.

_CHI_CACHE: dict[str, ArithSeq] = {}


def chi_registry(cid: str) -> ArithSeq:
    seq = _CHI_CACHE.get(cid)
    if seq is not None:
        return seq
    if cid == "1":
        seq = ArithSeq("1", lambda n: 1)
    elif cid == "id":
        seq = ArithSeq("id", lambda n: n)
    elif cid == "mu":
        seq = ArithSeq("mu", moebius)
    elif cid == "liouville":
        seq = ArithSeq("liouville", liouville)
    elif cid.startswith("jacobi_"):
        k = int(cid.split("_", 1)[1])
        seq = ArithSeq(cid, lambda n, k=k: jacobi_symbol(n, k))
    elif cid.startswith("lambda_"):
        v = int(cid.split("_", 1)[1])
        seq = ArithSeq(cid, lambda n, v=v: lambda_nu(n, v))
    elif cid.startswith("pow_"):
        v = int(cid.split("_", 1)[1])
        seq = ArithSeq(cid, lambda n, v=v: n**v)
    elif cid.startswith("X_"):
        v = int(cid.split("_", 1)[1])
        seq = ArithSeq(cid, lambda n, v=v: X_nu(n, v))
    elif cid.startswith("res_"):
        a, b = (int(t) for t in cid[4:].split("_", 1))
        seq = ArithSeq(cid, lambda n, a=a, b=b: 1 if n % b == a else 0)
    else:
        try:
            c = int(cid)
        except ValueError:
            raise ValueError(f"unknown character id {cid!r}") from None
        seq = ArithSeq(cid, lambda n, c=c: c)
    _CHI_CACHE[cid] = seq
    return seq
