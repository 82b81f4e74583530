"""Exact integer arithmetic behind the Witt necklace formula."""

from __future__ import annotations

from math import comb, gcd

__all__ = [
    "binomial",
    "divisors",
    "gcd",
    "mobius",
    "prime_factors",
    "primes_upto",
    "witt_chi",
    "witt_sum",
]

binomial = comb


def prime_factors(n: int) -> list[int]:
    """Prime factorisation of ``n`` by trial division, with multiplicity."""
    if n < 1:
        raise ValueError(f"prime_factors needs n >= 1, got {n}")
    out = []
    p = 2
    while p * p <= n:
        while n % p == 0:
            out.append(p)
            n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def primes_upto(bound: int) -> list[int]:
    """All primes p with p <= bound."""
    return [p for p in range(2, bound + 1) if prime_factors(p) == [p]]


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError(f"divisors needs n >= 1, got {n}")
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    large = [n // d for d in reversed(small) if d * d != n]
    return small + large


def mobius(n: int) -> int:
    """Möbius function: 0 unless ``n`` is squarefree, else (-1)^(#primes)."""
    if n < 1:
        raise ValueError(f"mobius is defined for n >= 1, got {n}")
    factors = prime_factors(n)
    if len(set(factors)) != len(factors):
        return 0
    return -1 if len(factors) % 2 else 1


def witt_chi(weight: int, alphabet_size: int) -> int:
    """Number of basic commutators of ``weight`` on ``alphabet_size`` letters.

    Evaluates ``(1/w) * sum_{e | w} mobius(e) * d**(w // e)`` in exact
    integers; ``alphabet_size`` may itself be a large integer.
    """
    if weight < 1:
        raise ValueError(f"weight must be >= 1, got {weight}")
    if alphabet_size < 0:
        raise ValueError(f"alphabet_size must be >= 0, got {alphabet_size}")
    total = sum(mobius(e) * alphabet_size ** (weight // e) for e in divisors(weight))
    q, r = divmod(total, weight)
    if r:
        raise ArithmeticError(f"Witt sum {total} not divisible by {weight}")
    return q


def witt_sum(alphabet_size: int, lo: int, hi: int) -> int:
    """Sum of witt_chi(i, alphabet_size) for lo <= i <= hi; empty ranges give 0."""
    return sum(witt_chi(i, alphabet_size) for i in range(max(lo, 1), hi + 1))
