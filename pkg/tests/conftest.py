"""Shared fixtures and independent recount helpers for the test suite.

The helpers re-derive everything from definitions: element scans,
itertools recounts, and the floor-and-epsilon formulas from the
literature.  None of them call the package's fast paths, so the fast
paths are never used to check themselves.
"""

from itertools import combinations
from math import gcd

import pytest
from hypothesis import HealthCheck, settings

from relprime import (
    OverlapError,
    Progression,
    interval,
    mod_inverse,
    validate_union,
)

settings.register_profile(
    "suite",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile (or load from cache) the jitted kernels before timed tests."""
    from relprime import brute_f, brute_tuples, moebius_sieve

    moebius_sieve(10)
    brute_f(validate_union([interval(1, 4)]))
    brute_tuples(2, 2)


def scan_multiples(p: Progression, d: int) -> int:
    """|{x in p : d | x}| by walking the elements."""
    return sum(1 for x in p.elements() if x % d == 0)


def floor_eps_count(p: Progression, d: int) -> int:
    """The general floor(mk/d) + eps_d form of the AP multiple count.

    k = gcd(d, b); the count is zero when k does not divide a, and eps_d
    is 1 exactly when d does not divide mk and the index residue lands in
    the partial window {0, ..., m-1 - floor((m-1)k/d) * d/k} at the tail.
    """
    a, b, m = p.first, p.step, p.length
    k = gcd(d, b)
    if a % k:
        return 0
    base = m * k // d
    eps = 0
    if m * k % d:
        dk = d // k
        residue = (-(a // k) * mod_inverse(b // k, dk)) % dk
        if residue <= m - 1 - (m - 1) * k // d * dk:
            eps = 1
    return base + eps


def coprime_floor_eps_count(p: Progression, d: int) -> int:
    """The floor(m/d) + eps_d specialization for gcd(a, b) = 1.

    Zero when gcd(d, b) > 1; the eps window here is written
    {0, ..., m - floor(m/d)*d - 1}.
    """
    a, b, m = p.first, p.step, p.length
    if gcd(d, b) != 1:
        return 0
    base = m // d
    eps = 0
    if m % d:
        residue = (-a * mod_inverse(b, d)) % d
        if residue <= m - base * d - 1:
            eps = 1
    return base + eps


def subsets_recount(elements, n=None):
    """(total, by_cardinality) over nonempty subsets with gcd 1.

    n, when given, joins every gcd as an extra element.  Combination
    based, so it shares nothing with the package oracle's binary counter.
    """
    by_k = [0] * (len(elements) + 1)
    for k in range(1, len(elements) + 1):
        for combo in combinations(elements, k):
            g = 0 if n is None else n
            for v in combo:
                g = gcd(g, v)
                if g == 1:
                    break
            if g == 1:
                by_k[k] += 1
    return sum(by_k), by_k


def random_progression(rng, max_first=40, max_step=12, max_length=12):
    return Progression(
        rng.randint(1, max_first),
        rng.randint(1, max_step),
        rng.randint(1, max_length),
    )


def random_union(rng, max_parts=3, size_cap=18, max_first=40, max_step=12):
    """A random validated union with |X| <= size_cap; retries on overlap.

    Mixes plain intervals (step 1) in with general progressions, the way
    the acceptance criteria describe the input population.
    """
    while True:
        n_parts = rng.randint(1, max_parts)
        parts = []
        for _ in range(n_parts):
            max_length = max(1, size_cap // n_parts)
            step = 1 if rng.random() < 0.4 else rng.randint(1, max_step)
            parts.append(
                Progression(
                    rng.randint(1, max_first), step, rng.randint(1, max_length)
                )
            )
        if sum(p.length for p in parts) > size_cap:
            continue
        try:
            return validate_union(parts)
        except OverlapError:
            continue
