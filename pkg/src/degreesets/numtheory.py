"""Small integer utilities: primality, coprimality to m!, exact m-th roots."""
from __future__ import annotations

from itertools import count
from math import factorial, gcd, isqrt
from typing import Iterator


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for p in range(3, isqrt(n) + 1, 2):
        if n % p == 0:
            return False
    return True


def primes_from(start: int) -> Iterator[int]:
    """Yield primes >= start in increasing order."""
    for n in count(max(start, 2)):
        if is_prime(n):
            yield n


def coprime_to_factorial(k: int, m: int) -> bool:
    return gcd(k, factorial(m)) == 1


def integer_root(n: int, m: int) -> int | None:
    """Return r >= 0 with r**m == n, or None if n is not a perfect m-th power."""
    if m < 1:
        raise ValueError("root order must be positive")
    if n < 0:
        raise ValueError("integer_root expects a nonnegative integer")
    if n < 2 or m == 1:
        return n
    # Bit-length bound, then bisection; exact for arbitrarily large n.
    lo, hi = 0, 1 << (n.bit_length() // m + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**m <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo if lo**m == n else None


def smallest_power_base(bound: int, m: int) -> int:
    """Smallest k >= 1 coprime to m! with k**m strictly greater than ``bound``."""
    k = 1
    while k**m <= bound or not coprime_to_factorial(k, m):
        k += 1
    return k
