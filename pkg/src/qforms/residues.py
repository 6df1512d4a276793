"""Quadratic congruence counting and residue-class splittings.

Everything here is a finite scan.  Where a closed counting rule exists the
scan is still the returned value and the rule is checked against it, so a
wrong rule surfaces as an ArithmeticError instead of a wrong answer.  The
impossibility predicates are treated as falsifiable: the scan reports a
counterexample whenever one exists rather than assuming the claim.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .arith import factor, is_prime, jacobi_symbol, kronecker_symbol
from .errors import BadModulus, HypothesisViolated

CONSISTENT_WITH_LEMMA = "ConsistentWithLemma"
COUNTEREXAMPLE = "Counterexample"


@dataclass(frozen=True)
class ImpossibilityOutcome:
    """Result of scanning a claimed-impossible equation for solutions."""

    kind: str
    witness: Optional[tuple] = None


@dataclass(frozen=True)
class ResidueClassification:
    """The split of 1..t by the symbol (-t|n), with the solvable sublist.

    S1, Sm1 and S0 partition 1..t by symbol value 1, -1 and 0.  S11 holds
    the members of S1 actually represented as x^2 + t y^2, S12 the rest.
    """

    t: int
    S1: list
    Sm1: list
    S0: list
    S11: list
    S12: list


def res_count(a: int, n: int) -> int:
    """Number of x in [0, n) with x^2 = a (mod n), by direct scan.

    For gcd(a, n) = 1 a nonzero count must equal 2^(r+u), r the number of
    odd prime divisors of n and u = 0, 1, 2 as 4 does not divide n, divides
    it exactly, or 8 divides n.  The scan is checked against that rule.
    """
    if n < 2:
        raise ValueError(f"modulus must be at least 2, got {n}")
    count = sum(1 for x in range(n) if (x * x - a) % n == 0)
    if count and math.gcd(a, n) == 1:
        r = sum(1 for p, _e in factor(n) if p % 2)
        u = 2 if n % 8 == 0 else 1 if n % 4 == 0 else 0
        if count != 2 ** (r + u):
            raise ArithmeticError(
                f"scan found {count} roots of x^2 = {a} (mod {n}), rule says {2 ** (r + u)}"
            )
    return count


def th75_count(p: int, q: int) -> int:
    """Solutions of x^2 + p y^2 = 0 (mod q) with 0 <= x < q, 1 <= y < q.

    The closed rule 2 c (q - 1), c = 0 exactly when (-p|q) = -1, is checked
    against the scan whenever q does not divide p.  When q divides p the
    congruence degenerates to x^2 = 0 and the rule overcounts by a factor
    of two, so only the scan is trusted there.
    """
    if not is_prime(p) or not is_prime(q) or q == 2:
        raise HypothesisViolated(f"need p prime and q an odd prime, got ({p}, {q})")
    count = sum(
        1 for y in range(1, q) for x in range(q) if (x * x + p * y * y) % q == 0
    )
    if p % q:
        c = 0 if jacobi_symbol(-p, q) == -1 else 1
        if count != 2 * c * (q - 1):
            raise ArithmeticError(
                f"scan found {count} solutions mod {q}, rule says {2 * c * (q - 1)}"
            )
    return count


def impossibility_check(a: int, b: int, n: int) -> ImpossibilityOutcome:
    """Scan a x^2 + b y^2 = n for solutions under the impossibility hypotheses.

    Requires a, b, n positive, n coprime to 2, 5 and 17, and (-ab|n) = -1;
    anything else raises HypothesisViolated.  The solution box is finite, so
    the scan is exhaustive: a Counterexample outcome refutes the claim.
    """
    if min(a, b, n) < 1:
        raise HypothesisViolated(f"need positive a, b, n, got ({a}, {b}, {n})")
    for g in (2, 5, 17):
        if n % g == 0:
            raise HypothesisViolated(f"n = {n} shares the factor {g}")
    if jacobi_symbol(-a * b, n) != -1:
        raise HypothesisViolated(f"(-{a * b}|{n}) is not -1")
    x = 0
    while a * x * x <= n:
        y2, rem = divmod(n - a * x * x, b)
        if rem == 0:
            y = math.isqrt(y2)
            if y * y == y2:
                return ImpossibilityOutcome(COUNTEREXAMPLE, (x, y))
        x += 1
    return ImpossibilityOutcome(CONSISTENT_WITH_LEMMA)


def th78_classify(t: int) -> ResidueClassification:
    """Split 1..t by the symbol (-t|n) and solvability of x^2 + t y^2 = n.

    Targets n in 1..t leave no room for y except 0, so membership in S11
    reduces to n being a perfect square; the scan still walks y explicitly.
    """
    if t < 3 or not is_prime(t) or t % 4 != 3:
        raise BadModulus(f"modulus must be a prime equal to 3 mod 4, got {t}")
    S1: list = []
    Sm1: list = []
    S0: list = []
    S11: list = []
    S12: list = []
    for n in range(1, t + 1):
        s = kronecker_symbol(-t, n)
        if s == 1:
            S1.append(n)
            solved = False
            y = 0
            while t * y * y <= n:
                r = n - t * y * y
                x = math.isqrt(r)
                if x * x == r:
                    solved = True
                    break
                y += 1
            (S11 if solved else S12).append(n)
        elif s == -1:
            Sm1.append(n)
        else:
            S0.append(n)
    return ResidueClassification(t, S1, Sm1, S0, S11, S12)
