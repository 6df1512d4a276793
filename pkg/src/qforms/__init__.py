"""Exact q-series arithmetic and representation counts for power forms."""

from .errors import (
    BadConstantTerm,
    BadModulus,
    BadParams,
    CongruenceViolated,
    ConstantTermNotOne,
    EmptyWindow,
    EvenModulus,
    GcdNotOne,
    HypothesisViolated,
    NonIntegralExponent,
    NonpositiveA,
    NonpositiveExponentPresent,
    NonzeroConstantTerm,
    OutOfWindow,
    QFormsError,
    UnboundedBelow,
    UnboundedEnumeration,
    UnknownIdentity,
)
from .series import (
    ArithSeq,
    Domain,
    LaurentSeries,
    euler_series,
    exp_series,
    format_series,
    inflate,
    lambert,
    log_series,
    monomial,
    partition_series,
    phi_nu,
    phi_star_nu,
    poly_theta,
    polynomial_series,
    pow_rational,
    product_expand,
    q_integrate,
    sqrt_T,
    theta2,
    theta3,
    theta4,
    theta_series,
)
from .arith import (
    A_nu,
    A_nu_closed,
    NuSplit,
    X_nu,
    Y_nu,
    Y_nu_closed,
    c_nu,
    chi_registry,
    divisors,
    factor,
    h_a,
    is_prime,
    jacobi_symbol,
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
from .repcount import (
    CountResult,
    FormSpec,
    brute_force_count,
    parse_form,
    r2_jacobi,
    r3_signed,
    r_plus3,
    theorem57_count,
)
from .identities import (
    IdentityCheck,
    IdentityReport,
    list_ids,
    lookup,
    report_to_dict,
    run_suite,
    verify,
)
from .residues import (
    ImpossibilityOutcome,
    ResidueClassification,
    impossibility_check,
    res_count,
    th75_count,
    th78_classify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
