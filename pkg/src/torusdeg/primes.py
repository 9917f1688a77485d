"""Small prime utilities."""

from __future__ import annotations

import math


def sieve(limit: int) -> list[int]:
    """All primes <= limit."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return [i for i, is_p in enumerate(flags) if is_p]


def first_primes(t: int) -> list[int]:
    """The first t primes, in increasing order."""
    if t <= 0:
        return []
    # p_t < t (ln t + ln ln t) for t >= 6
    limit = 15 if t < 6 else int(t * (math.log(t) + math.log(math.log(t)))) + 1
    primes = sieve(limit)
    while len(primes) < t:
        limit *= 2
        primes = sieve(limit)
    return primes[:t]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    return all(p % q for q in range(3, math.isqrt(p) + 1, 2))
