from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qforms import EvenModulus
from qforms.arith import (
    A_nu,
    A_nu_closed,
    X_nu,
    Y_nu,
    Y_nu_closed,
    c_nu,
    chi_registry,
    divisors,
    factor,
    h_a,
    iroot,
    is_prime,
    jacobi_symbol,
    jacobi_symbol_rational,
    kronecker_symbol,
    lambda_nu,
    liouville,
    moebius,
    moebius_invert,
    mu_k,
    mu_kv,
    mu_nu,
    mu_star_nu,
    nu_split,
    radical,
    sigma_nu,
    totient,
)

F = Fraction


# --- factorization ---

def test_factor_spots():
    assert factor(1) == ()
    assert factor(48) == ((2, 4), (3, 1))
    assert factor(1729) == ((7, 1), (13, 1), (19, 1))


def test_factor_large_semiprime():
    n = 10007 * 10009
    assert factor(n) == ((10007, 1), (10009, 1))
    p = 999983
    assert factor(p * p) == ((p, 2),)


@given(st.integers(min_value=1, max_value=10**6))
@settings(max_examples=80, deadline=None)
def test_factor_reconstructs(n):
    f = factor(n)
    prod = 1
    for p, a in f:
        assert is_prime(p)
        assert a >= 1
        prod *= p**a
    assert prod == n
    assert list(f) == sorted(f)


def test_divisors():
    assert divisors(12) == (1, 2, 3, 4, 6, 12)
    assert divisors(1) == (1,)


# --- classical functions ---

def test_moebius_spots():
    assert moebius(30) == -1
    assert moebius(4) == 0
    assert moebius(1) == 1


def test_totient_radical():
    assert totient(12) == 4
    assert radical(48) == 6


def test_sigma_negative_exact():
    assert sigma_nu(6, -1) == 2
    assert sigma_nu(6, -1) == F(1) + F(1, 2) + F(1, 3) + F(1, 6)
    assert sigma_nu(6, 1) == 12
    assert sigma_nu(10, 0) == 4


def test_liouville():
    assert [liouville(n) for n in range(1, 9)] == [1, -1, -1, 1, -1, 1, -1, -1]


# --- Jacobi and Kronecker symbols ---

def test_jacobi_spots():
    assert jacobi_symbol(2, 15) == 1
    assert jacobi_symbol(5, 5) == 0
    for g in (3, 5, 7, 9, 11):
        assert jacobi_symbol(1, g) == 1


def test_jacobi_even_modulus_rejected():
    with pytest.raises(EvenModulus):
        jacobi_symbol(3, 8)
    with pytest.raises(EvenModulus):
        jacobi_symbol(3, -5)


def test_jacobi_rational_guard():
    assert jacobi_symbol_rational(F(1, 2), 5) == 0
    assert jacobi_symbol_rational(F(6, 2), 5) == jacobi_symbol(3, 5)


def test_jacobi_vs_legendre_oracle():
    # Euler's criterion gives an independent Legendre symbol for odd primes
    for p in (3, 5, 7, 11, 13, 31):
        for a in range(-12, 13):
            e = pow(a % p, (p - 1) // 2, p)
            legendre = 0 if a % p == 0 else (1 if e == 1 else -1)
            assert jacobi_symbol(a, p) == legendre


@given(st.integers(min_value=-60, max_value=60),
       st.integers(min_value=1, max_value=30), st.integers(min_value=1, max_value=30))
@settings(max_examples=80, deadline=None)
def test_jacobi_multiplicative_in_modulus(a, k1, k2):
    k1, k2 = 2 * k1 + 1, 2 * k2 + 1
    assert jacobi_symbol(a, k1 * k2) == jacobi_symbol(a, k1) * jacobi_symbol(a, k2)


def test_kronecker_extends_jacobi():
    for a in range(-20, 21):
        for k in (1, 3, 5, 7, 9, 15):
            assert kronecker_symbol(a, k) == jacobi_symbol(a, k)
    # the even-modulus factor: (a|2) is 0, +1, -1 per a mod 8
    assert kronecker_symbol(6, 2) == 0
    assert kronecker_symbol(-31, 2) == 1  # -31 = 1 mod 8
    assert kronecker_symbol(3, 2) == -1
    assert kronecker_symbol(-31, 4) == 1
    assert kronecker_symbol(-31, 6) == -1


@given(st.integers(min_value=-80, max_value=80),
       st.integers(min_value=1, max_value=40), st.integers(min_value=1, max_value=40))
@settings(max_examples=80, deadline=None)
def test_kronecker_multiplicative(a, n1, n2):
    assert kronecker_symbol(a, n1 * n2) == kronecker_symbol(a, n1) * kronecker_symbol(a, n2)


# --- power-part decompositions ---

def test_nu_split_spots():
    s = nu_split(48, 3)
    assert (s.nu_part, s.star_part, s.n1, s.n2) == (2, 6, 2, 6)
    assert not s.nu_part_is_trivial
    s = nu_split(12, 2)
    assert (s.nu_part, s.star_part) == (2, 3)
    s = nu_split(7, 2)
    assert s.nu_part_is_trivial
    assert (s.star_part, s.n1, s.n2) == (7, 1, 7)


@given(st.integers(min_value=1, max_value=50000), st.integers(min_value=2, max_value=5))
@settings(max_examples=120, deadline=None)
def test_nu_split_invariants(n, nu):
    s = nu_split(n, nu)
    assert s.n1 ** nu * s.n2 == n
    assert s.nu_part ** nu * s.star_part == n
    # star_part is nu-th-power-free
    assert all(a < nu for _, a in factor(s.star_part))
    assert s.nu_part_is_trivial == (s.nu_part == 1)


def test_iroot_exact():
    for n in (0, 1, 7, 8, 9, 26, 27, 28, 10**12 - 1, 10**12):
        for k in (2, 3, 4, 5):
            r = iroot(n, k)
            assert r**k <= n < (r + 1) ** k


# --- lambda_nu and X_nu ---

def test_lambda_nu_spots():
    assert lambda_nu(12, 2) == -1
    assert lambda_nu(8, 3) == 1
    assert lambda_nu(1, 2) == 1


def test_X_nu_spots():
    assert X_nu(27, 3) == 1
    assert X_nu(28, 3) == 0
    assert X_nu(1, 5) == 1


def _lambda_closed(n, nu):
    # multiplicative closed form: on p^a it is 1 if nu | a, -1 if a = 1 mod nu, else 0
    out = 1
    for _, a in factor(n):
        if a % nu == 0:
            pass
        elif a % nu == 1:
            out = -out
        else:
            return 0
    return out


def test_lambda_nu_matches_closed_form():
    for nu in (2, 3, 4, 5):
        for n in range(1, 2001):
            assert lambda_nu(n, nu) == _lambda_closed(n, nu)


def test_lambda_sum_is_power_indicator_small():
    for nu in (2, 3):
        for n in range(1, 500):
            assert sum(lambda_nu(d, nu) for d in divisors(n)) == X_nu(n, nu)


@given(st.integers(min_value=1, max_value=400), st.integers(min_value=1, max_value=400),
       st.integers(min_value=2, max_value=4))
@settings(max_examples=100, deadline=None)
def test_lambda_multiplicative(n, m, nu):
    if gcd(n, m) == 1:
        assert lambda_nu(n * m, nu) == lambda_nu(n, nu) * lambda_nu(m, nu)


def test_lambda_at_perfect_powers():
    for nu in (2, 3, 4):
        for n in (1, 2, 3, 5, 6, 10):
            assert lambda_nu(n**nu, nu) == 1


def test_lambda_mu_squared_is_mu():
    for nu in (2, 3):
        for n in range(1, 600):
            assert lambda_nu(n, nu) * moebius(n) ** 2 == moebius(n)


# --- mu_nu family ---

def test_mu_nu_spots():
    assert mu_nu(4, 2) == 1
    assert mu_nu(12, 2) == -1
    assert mu_nu(7, 2) == 0


def test_mu_star_nu_spots():
    assert mu_star_nu(4, 2) == 1
    assert mu_star_nu(9, 2) == -1


def test_mu_star_sign_convention():
    for nu in (2, 3):
        for n in range(1, 1500):
            s = nu_split(n, nu)
            sign = (-1) ** s.n1 if not s.nu_part_is_trivial else 1
            assert mu_star_nu(n, nu) == sign * mu_nu(n, nu)


def test_mu_plus_mu_nu_multiplicative():
    for nu in (2, 3):
        f = lambda n: moebius(n) + mu_nu(n, nu)
        for n in range(1, 60):
            for m in range(1, 60):
                if gcd(n, m) == 1:
                    assert f(n * m) == f(n) * f(m)


# --- c_nu ---

def test_c_nu_spots():
    assert c_nu(8, 3) == 1
    assert c_nu(16, 3) == F(-1, 2)
    assert c_nu(24, 3) == F(-1, 3)
    assert c_nu(12, 3) == 0
    assert c_nu(16, 4) == 1
    assert c_nu(2**4 * 6, 4) == F(1, 6)
    assert c_nu(7, 3) == 0


def test_c_nu_plus_eps_multiplicative_small():
    for nu in (3, 4):
        f = lambda n: c_nu(n, nu) + F(moebius(n), n)
        for n in range(1, 40):
            for m in range(1, 40):
                if gcd(n, m) == 1:
                    assert f(n * m) == f(n) * f(m)


# --- Y_nu and A_nu two routes ---

def test_Y_nu_spot():
    assert Y_nu(8, 2, 1) == F(-1, 2)


def test_A_nu_spot():
    assert A_nu(12, 2, 1) == -1


def test_A_nu_at_powers():
    chi = chi_registry("mu")
    for m in range(2, 12):
        for nu in (2, 3):
            assert A_nu(m**nu, nu, chi) == chi(m)


def test_Y_A_routes_agree_small():
    chis = [chi_registry("1"), chi_registry("mu"), chi_registry("id")]
    for chi in chis:
        for nu in (2, 3):
            for n in range(1, 800):
                assert Y_nu(n, nu, chi) == Y_nu_closed(n, nu, chi)
                assert A_nu(n, nu, chi) == A_nu_closed(n, nu, chi)


# --- h_a, mu_k, mu_kv ---

def test_h_a_spot():
    assert h_a(6, 1) == 2


def test_h_1_is_totient():
    for n in range(1, 200):
        assert h_a(n, 1) == totient(n)


def test_h_negative_exact():
    # h_{-1}(4) = sum d^{-1} mu(4/d) = 1*mu(4) + (1/2)*mu(2) + (1/4)*mu(1)
    assert h_a(4, -1) == F(1, 4) - F(1, 2)


def test_mu_k_spot():
    assert mu_k(4, 2) == 0


def test_mu_k2_is_mu_squared():
    for n in range(1, 800):
        assert mu_k(n, 2) == moebius(n) ** 2


def test_mu_kv_spot():
    assert mu_kv(8, 3, 1) == F(1, 2)


def test_theorem_mu_mu_k_convolution():
    # sum over d | n of mu(d) mu_k(d) = [n = 1], empirically; k = 1 is
    # excluded since mu_1(d) = [d = 1] makes the sum constantly 1
    for k in (2, 3, 4):
        for n in range(1, 1001):
            total = sum(moebius(d) * mu_k(d, k) for d in divisors(n))
            assert total == (1 if n == 1 else 0)


# --- Moebius inversion ---

def test_invert_sigma_gives_identity():
    g = moebius_invert(lambda n: sigma_nu(n, 1), 50)
    for n in range(1, 51):
        assert g(n) == n


def test_invert_one_gives_indicator():
    g = moebius_invert(1, 30)
    for n in range(1, 31):
        assert g(n) == (1 if n == 1 else 0)


def test_invert_sigma3_gives_square():
    g = moebius_invert(lambda n: sigma_nu(n, 3), 30)
    for n in range(1, 31):
        assert g(n) == n * n * n  # n * n^{nu-2} with nu = 4


def test_invert_roundtrip():
    f = lambda n: n * n + 1
    g = moebius_invert(f, 40)
    for n in range(1, 41):
        assert sum(g(d) for d in divisors(n)) == f(n)


# --- registry ---

def test_chi_registry_ids():
    assert chi_registry("1")(17) == 1
    assert chi_registry("id")(17) == 17
    assert chi_registry("mu")(6) == 1
    assert chi_registry("liouville")(8) == -1
    assert chi_registry("jacobi_5")(3) == jacobi_symbol(3, 5)
    assert chi_registry("lambda_2")(12) == lambda_nu(12, 2)
    assert chi_registry("mu") is chi_registry("mu")
    with pytest.raises(ValueError):
        chi_registry("nope")


def test_chi_registry_extended_ids():
    assert chi_registry("2")(9) == 2
    assert chi_registry("-1")(9) == -1
    assert chi_registry("pow_3")(4) == 64
    assert chi_registry("X_2")(49) == 1
    assert chi_registry("X_2")(50) == 0
    assert chi_registry("res_1_4")(13) == 1
    assert chi_registry("res_1_4")(14) == 0
    with pytest.raises(ValueError):
        chi_registry("res_bad")
