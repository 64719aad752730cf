"""Prime sieves and quadratic-residue helpers shared across the package."""

from __future__ import annotations

import functools


@functools.lru_cache(maxsize=None)
def primes_below(bound: int) -> tuple[int, ...]:
    """All primes p < bound, ascending."""
    if bound <= 2:
        return ()
    flags = bytearray([1]) * bound
    flags[0:2] = b"\x00\x00"
    for i in range(2, int(bound**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return tuple(i for i in range(bound) if flags[i])


@functools.lru_cache(maxsize=None)
def prime_index(bound: int) -> dict[int, int]:
    """Map each prime p < bound to its 0-based rank."""
    return {p: i for i, p in enumerate(primes_below(bound))}


def primes_in(lo: int, hi: int) -> tuple[int, ...]:
    """Primes in the open interval (lo, hi)."""
    return tuple(p for p in primes_below(hi) if p > lo)


def is_prime(n: int) -> bool:
    """Trial-division primality check, adequate for the small primes used here."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) for an odd prime p, with (0|p) = 0."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"legendre symbol needs an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    t = pow(a, (p - 1) // 2, p)
    return 1 if t == 1 else -1
