"""Exact integer primitives: gcd, totient, Mobius, binomials, Legendre symbols,
Fermat quotients and a small prime sieve.

Nothing in here touches floating point.  Residues are plain ``int`` values in
``[0, modulus)``.
"""

from __future__ import annotations

import math
from functools import lru_cache

__all__ = [
    "DomainError",
    "gcd",
    "factorize",
    "divisors",
    "euler_phi",
    "mobius",
    "binomial",
    "mod_pow",
    "mod_inverse",
    "is_prime",
    "primes_up_to",
    "legendre",
    "fermat_quotient",
    "parity_sign",
]


class DomainError(ValueError):
    """An input lies outside the domain where the requested value is defined."""


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Trial-division factorization of ``n >= 1`` as ``((prime, exponent), ...)``."""
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@lru_cache(maxsize=4096)
def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of ``n`` in increasing order."""
    divs = [1]
    for prime, exp in factorize(n):
        divs = [d * prime**e for d in divs for e in range(exp + 1)]
    return tuple(sorted(divs))


def euler_phi(m: int) -> int:
    if m < 1:
        raise DomainError(f"euler_phi needs m >= 1, got {m}")
    result = m
    for prime, _ in factorize(m):
        result = result // prime * (prime - 1)
    return result


def mobius(m: int) -> int:
    if m < 1:
        raise DomainError(f"mobius needs m >= 1, got {m}")
    fac = factorize(m)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def binomial(n: int, k: int) -> int:
    """C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n."""
    if n < 0:
        raise DomainError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        # exact at every step: result is C(n - k + i, i) afterwards
        result = result * (n - k + i) // i
    return result


def mod_pow(base: int, exp: int, modulus: int) -> int:
    if modulus < 1:
        raise DomainError(f"modulus must be positive, got {modulus}")
    return pow(base, exp, modulus)


def mod_inverse(x: int, modulus: int) -> int:
    if modulus < 1:
        raise DomainError(f"modulus must be positive, got {modulus}")
    if math.gcd(x, modulus) != 1:
        raise DomainError(f"{x} is not invertible modulo {modulus}")
    return pow(x, -1, modulus)


@lru_cache(maxsize=65536)
def is_prime(n: int) -> bool:
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


def primes_up_to(bound: int) -> list[int]:
    """All primes ``<= bound`` by the sieve of Eratosthenes."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, bound + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def _require_odd_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise DomainError(f"{p} is not an odd prime")


def legendre(b: int, p: int) -> int:
    """Legendre symbol (b/p) by Euler's criterion."""
    _require_odd_prime(p)
    r = pow(b % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


def fermat_quotient(b: int, p: int) -> int:
    """q_p(b) = (b^(p-1) - 1)/p reduced mod p; negative b is fine."""
    _require_odd_prime(p)
    if b % p == 0:
        raise DomainError(f"Fermat quotient undefined: {p} divides {b}")
    p2 = p * p
    t = pow(b % p2, p - 1, p2) - 1
    return (t // p) % p


def parity_sign(e: int) -> int:
    """(-1)^e for any integer e, negative exponents included."""
    return -1 if e % 2 else 1
