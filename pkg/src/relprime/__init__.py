"""Exact counting of relatively prime subsets and constrained coprime tuples.

The ground set is any disjoint union of finite arithmetic progressions;
the counters are Möbius sums over a single divisibility kernel |X_d| and
return plain Python ints, exact at any size.  A brute-force oracle
recounts everything from the definitions for verification.
"""

from ._kernels import BACKEND
from .counting import (
    Count,
    binomial,
    f,
    f_k,
    mobius_sum,
    nathanson_f,
    nathanson_phi,
    phi,
    phi_k,
    power_of_two_minus_one,
)
from .errors import (
    BudgetExceededError,
    DomainError,
    OverlapError,
    SetSpecError,
)
from .numtheory import (
    DivisorList,
    MoebiusTable,
    divisors_with_mu,
    ext_gcd,
    factorize,
    mod_inverse,
    moebius,
    moebius_sieve,
    primes_up_to,
    primorial_up_to,
    radical,
    squarefree_divisor_terms,
)
from .oracle import (
    OracleBudget,
    brute_f,
    brute_f_k,
    brute_phi,
    brute_phi_k,
    brute_tuples,
    subset_gcd_histogram,
)
from .setmodel import (
    ENUMERATION_CAP,
    Progression,
    ProgressionUnion,
    count_ap_multiples,
    count_interval_multiples,
    enumerate_elements,
    interval,
    parse_set_spec,
    union_multiples,
    validate_union,
)
from .shonhiwa import g_count, h_count, l_count, s_count, t_count

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BudgetExceededError",
    "Count",
    "DivisorList",
    "DomainError",
    "ENUMERATION_CAP",
    "MoebiusTable",
    "OracleBudget",
    "OverlapError",
    "Progression",
    "ProgressionUnion",
    "SetSpecError",
    "binomial",
    "brute_f",
    "brute_f_k",
    "brute_phi",
    "brute_phi_k",
    "brute_tuples",
    "count_ap_multiples",
    "count_interval_multiples",
    "divisors_with_mu",
    "enumerate_elements",
    "ext_gcd",
    "f",
    "f_k",
    "factorize",
    "g_count",
    "h_count",
    "interval",
    "l_count",
    "mobius_sum",
    "mod_inverse",
    "moebius",
    "moebius_sieve",
    "nathanson_f",
    "nathanson_phi",
    "parse_set_spec",
    "phi",
    "phi_k",
    "power_of_two_minus_one",
    "primes_up_to",
    "primorial_up_to",
    "radical",
    "s_count",
    "squarefree_divisor_terms",
    "subset_gcd_histogram",
    "t_count",
    "union_multiples",
    "validate_union",
]
