"""Exceptions raised by the exact-arithmetic layers.

Every failure mode that callers are expected to handle has its own class;
anything else (bad argument types and the like) surfaces as ValueError.
"""

from __future__ import annotations


class QFormsError(Exception):
    """Base class for all package-specific errors."""


class OutOfWindow(QFormsError):
    """A coefficient was requested outside the window where it is known."""


class EmptyWindow(QFormsError):
    """An operation produced (or was asked to compare on) an empty window."""


class NonzeroConstantTerm(QFormsError):
    """exp needs its argument to vanish at q^0 and below."""


class ConstantTermNotOne(QFormsError):
    """log and rational powers need a series starting 1 + ..."""


class BadConstantTerm(QFormsError):
    """The triangular square root needs a series starting 1 + ..."""


class NonpositiveExponentPresent(QFormsError):
    """q-integration needs all exponents to be >= 1."""


class NonIntegralExponent(QFormsError):
    """A theta exponent a*n^2 + b*n left the integers."""


class NonpositiveA(QFormsError):
    """A theta quadratic coefficient must be positive."""


class UnboundedBelow(QFormsError):
    """A polynomial theta exponent is unbounded below on its domain."""


class EvenModulus(QFormsError):
    """The classical Jacobi symbol needs an odd positive modulus."""


class UnboundedEnumeration(QFormsError):
    """A brute-force count cannot be bounded on the given domains."""


class GcdNotOne(QFormsError):
    """A coprimality hypothesis failed."""


class CongruenceViolated(QFormsError):
    """An argument missed a required congruence class."""


class HypothesisViolated(QFormsError):
    """A theorem's hypothesis does not hold for these arguments."""


class UnknownIdentity(QFormsError):
    """No identity with that id is registered."""


class BadParams(QFormsError):
    """An identity was given parameters it does not understand."""


class BadModulus(QFormsError):
    """The residue classification needs a prime t with t = 3 mod 4."""
