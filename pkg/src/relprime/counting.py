"""Möbius-sum counters for relatively prime subsets of a progression union.

The four counters share one summation core: walk the relevant divisors d,
weight the per-divisor subset count by mu(d), and accumulate positive and
negative contributions separately so the final subtraction can insist the
result is a genuine count.
"""

from math import comb

from .errors import DomainError
from .numtheory import moebius_sieve, squarefree_divisor_terms
from .setmodel import ProgressionUnion, interval, union_multiples, validate_union

# counting results are plain Python ints: exact at any size
Count = int


def binomial(n: int, k: int) -> Count:
    """Exact C(n, k); zero when k exceeds n."""
    if n < 0 or k < 0:
        raise DomainError(f"binomial arguments must be nonnegative, got {n}, {k}")
    return comb(n, k)


def power_of_two_minus_one(e: int) -> Count:
    """Exact 2^e - 1, the number of nonempty subsets of an e-element set."""
    if e < 0:
        raise DomainError(f"exponent must be nonnegative, got {e}")
    return (1 << e) - 1


def mobius_sum(terms) -> Count:
    """Fold (mu, value) pairs into an exact nonnegative total.

    A negative final value would mean a formula or kernel bug, never a
    rounding artifact (there is no floating point anywhere), so it raises
    instead of returning.
    """
    pos = 0
    neg = 0
    for mu, value in terms:
        if mu > 0:
            pos += value
        elif mu < 0:
            neg += value
    total = pos - neg
    if total < 0:
        raise ArithmeticError(f"Möbius sum collapsed to {total}; counts cannot be negative")
    return total


def phi_k(X: ProgressionUnion, n: int, k: int) -> Count:
    """Count k-element subsets of X relatively prime to n.

    Sums mu(d) * C(|X_d|, k) over squarefree divisors d of n.  Divisors
    beyond max X contribute C(0, k) = 0, so the walk stops there; that is
    what keeps factorial-sized moduli (or their primorial stand-ins)
    tractable.
    """
    _check_modulus(n)
    _check_cardinality(k)
    return mobius_sum(
        (mu, binomial(union_multiples(X, d), k))
        for d, mu in squarefree_divisor_terms(n, X.max_element)
    )


def phi(X: ProgressionUnion, n: int) -> Count:
    """Count nonempty subsets of X relatively prime to n.

    Sums mu(d) * (2^|X_d| - 1) over squarefree divisors d of n up to
    max X; in this form the truncation is exact because dropped divisors
    have |X_d| = 0.  For n > 1 the same walk also equals the plain
    mu(d) * 2^|X_d| sum over all divisors, whose -1 terms cancel.
    """
    _check_modulus(n)
    return mobius_sum(
        (mu, power_of_two_minus_one(union_multiples(X, d)))
        for d, mu in squarefree_divisor_terms(n, X.max_element)
    )


def f_k(X: ProgressionUnion, k: int) -> Count:
    """Count relatively prime k-element subsets of X.

    Sums mu(d) * C(|X_d|, k) over all squarefree d up to max X.
    """
    _check_cardinality(k)
    return mobius_sum(
        (mu, binomial(union_multiples(X, d), k))
        for d, mu in moebius_sieve(X.max_element).nonzero_terms()
    )


def f(X: ProgressionUnion) -> Count:
    """Count relatively prime nonempty subsets of X.

    Sums mu(d) * (2^|X_d| - 1) over all squarefree d up to max X.
    """
    return mobius_sum(
        (mu, power_of_two_minus_one(union_multiples(X, d)))
        for d, mu in moebius_sieve(X.max_element).nonzero_terms()
    )


def nathanson_f(n: int) -> Count:
    """f([1, n]): relatively prime nonempty subsets of the first n integers."""
    return f(_one_to(n))


def nathanson_phi(n: int) -> Count:
    """Phi([1, n], n): nonempty subsets of [1, n] relatively prime to n itself.

    The literature writes this sequence with the modulus left implicit;
    this reading is the one under which its cited congruence behaviour
    (divisibility by 3 from n = 3 on) holds.
    """
    return phi(_one_to(n), n)


def _one_to(n: int) -> ProgressionUnion:
    if n < 1:
        raise DomainError(f"sequence index must be a positive integer, got {n}")
    return validate_union([interval(1, n)])


def _check_modulus(n: int):
    if n < 1:
        raise DomainError(f"modulus must be a positive integer, got {n}")


def _check_cardinality(k: int):
    if k < 1:
        raise DomainError(f"cardinality must be a positive integer, got {k}")
