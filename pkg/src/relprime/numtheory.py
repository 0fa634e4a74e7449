"""Möbius function, divisor enumeration, and small factoring utilities.

Everything works on plain Python integers so results stay exact at any
size.  The sieve is the only array-backed piece; it delegates to the
backend kernels and converts to Python ints once, on construction, so
table entries never leak fixed-width scalars into big-integer sums.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import prod

from . import _kernels
from .errors import DomainError

# above this, divisor walks switch from factoring the modulus to testing
# candidates up to the relevant bound directly
_TRIAL_FACTOR_LIMIT = 10**12


@dataclass(frozen=True)
class MoebiusTable:
    """Sieved mu(d) for 1 <= d <= limit; index 0 is an unused filler."""

    limit: int
    values: tuple

    def __getitem__(self, d: int) -> int:
        if not 1 <= d <= self.limit:
            raise DomainError(f"d={d} outside sieve range 1..{self.limit}")
        return self.values[d]

    def nonzero_terms(self):
        """Yield (d, mu(d)) for squarefree d in ascending order."""
        for d in range(1, self.limit + 1):
            mu = self.values[d]
            if mu:
                yield d, mu


@dataclass(frozen=True)
class DivisorList:
    """Every divisor of a modulus in ascending order, paired with its mu."""

    modulus: int
    entries: tuple


@lru_cache(maxsize=8)
def moebius_sieve(limit: int) -> MoebiusTable:
    """Sieve mu(1)..mu(limit) in one pass."""
    if limit < 1:
        raise DomainError(f"sieve limit must be >= 1, got {limit}")
    raw = _kernels.moebius_values(limit)
    return MoebiusTable(limit, tuple(int(v) for v in raw))


def factorize(n: int) -> list:
    """Prime factorization [(p, e), ...] by trial division, ascending p."""
    if n < 1:
        raise DomainError(f"cannot factor {n}; need a positive integer")
    out = []
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if rest > 1:
        out.append((rest, 1))
    return out


def moebius(n: int) -> int:
    """Single mu(n) from the factorization of n."""
    factors = factorize(n)
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def divisors_with_mu(n: int) -> DivisorList:
    """All divisors of n with their mu values, built from the factorization."""
    entries = [(1, 1)]
    for p, e in factorize(n):
        grown = []
        for d, mu in entries:
            grown.append((d, mu))
            dp = d * p
            grown.append((dp, -mu))
            for _ in range(e - 1):
                dp *= p
                grown.append((dp, 0))
        entries = grown
    entries.sort()
    return DivisorList(n, tuple(entries))


def squarefree_divisor_terms(n: int, bound: int) -> list:
    """Pairs (d, mu(d)) over squarefree divisors d <= bound of n, ascending.

    Möbius sums over d | n only ever need these terms: non-squarefree
    divisors carry mu = 0, and callers arrange that divisors beyond their
    bound contribute nothing.  Moduli small enough to factor are expanded
    directly; for anything larger (primorials, factorial stand-ins) every
    candidate up to min(n, bound) is tested by divisibility instead, which
    never touches the far side of n.
    """
    if n < 1:
        raise DomainError(f"modulus must be a positive integer, got {n}")
    cap = min(n, bound)
    if cap < 1:
        return []
    if n <= _TRIAL_FACTOR_LIMIT:
        return [
            (d, mu)
            for d, mu in divisors_with_mu(n).entries
            if mu != 0 and d <= cap
        ]
    table = moebius_sieve(cap)
    return [
        (d, table.values[d])
        for d in range(1, cap + 1)
        if table.values[d] != 0 and n % d == 0
    ]


def ext_gcd(a: int, b: int) -> tuple:
    """Extended Euclid: (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def mod_inverse(b: int, d: int) -> int:
    """The x in [0, d) with b*x = 1 (mod d); 0 when d = 1."""
    if d < 1:
        raise DomainError(f"modulus must be a positive integer, got {d}")
    try:
        return pow(b, -1, d)
    except ValueError:
        raise DomainError(f"{b} has no inverse modulo {d}") from None


def primes_up_to(x: int) -> list:
    """All primes p <= x."""
    if x < 2:
        return []
    composite = bytearray(x + 1)
    out = []
    for p in range(2, x + 1):
        if not composite[p]:
            out.append(p)
            if p * p <= x:
                composite[p * p :: p] = b"\x01" * ((x - p * p) // p + 1)
    return out


def primorial_up_to(x: int) -> int:
    """Product of all primes p <= x; 1 when there are none.

    This is the squarefree kernel of x!, so Möbius sums over divisors of
    x! and of this product agree term for term.
    """
    if x < 1:
        raise DomainError(f"primorial bound must be >= 1, got {x}")
    return prod(primes_up_to(x))


def radical(n: int) -> int:
    """Squarefree kernel: product of the distinct primes dividing n."""
    return prod(p for p, _ in factorize(n))
