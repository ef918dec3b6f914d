"""Second-order Lucas sequences u_n(A, B), v_n(A, B).

    u_0 = 0, u_1 = 1, v_0 = 2, v_1 = B,
    x_{n+1} = B x_n - A x_{n-1}      (x = u or v)

with discriminant D = B^2 - 4A.  Exact values come from fast doubling; a plain
linear iteration (``lucas_pair_naive``) is kept as the reference oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .numtheory import DomainError, is_prime, mod_inverse

__all__ = [
    "LucasParams",
    "LucasPair",
    "lucas_pair",
    "lucas_pair_naive",
    "lucas_pair_mod",
    "lucas_quotient",
    "general_quotient",
    "transform_half_disc",
    "transform_unit_b",
]


@dataclass(frozen=True)
class LucasParams:
    A: int
    B: int
    D: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "D", self.B * self.B - 4 * self.A)


@dataclass(frozen=True)
class LucasPair:
    n: int
    u: int
    v: int
    modulus: Optional[int] = None


def lucas_pair_naive(params: LucasParams, n: int) -> LucasPair:
    A, B = params.A, params.B
    u0, u1, v0, v1 = 0, 1, 2, B
    for _ in range(n):
        u0, u1 = u1, B * u1 - A * u0
        v0, v1 = v1, B * v1 - A * v0
    return LucasPair(n, u0, v0)


def _doubling(A: int, B: int, n: int, modulus: Optional[int]) -> tuple[int, int]:
    # exact: climb (u_k, v_k, A^k) through the bits of n with
    #   u_2k = u_k v_k,                 v_2k = v_k^2 - 2 A^k
    #   u_{2k+1} = (B u_2k + v_2k)/2,   v_{2k+1} = (D u_2k + B v_2k)/2
    # the halvings are exact over Z but not invertible mod an even M
    if modulus is None:
        u, v, q = 0, 2, 1
        D = B * B - 4 * A
        for bit in bin(n)[2:]:
            u, v, q = u * v, v * v - 2 * q, q * q
            if bit == "1":
                u, v, q = (B * u + v) // 2, (D * u + B * v) // 2, q * A
        return u, v
    M = modulus
    # modular: climb (u_k, u_{k+1}), division free, then v_n = 2 u_{n+1} - B u_n
    #   u_{2k}   = u_k (2 u_{k+1} - B u_k)
    #   u_{2k+1} = u_{k+1}^2 - A u_k^2
    uk, uk1 = 0, 1 % M
    for bit in bin(n)[2:]:
        u2k = uk * (2 * uk1 - B * uk) % M
        u2k1 = (uk1 * uk1 - A * uk * uk) % M
        if bit == "1":
            uk, uk1 = u2k1, (B * u2k1 - A * u2k) % M
        else:
            uk, uk1 = u2k, u2k1
    v = (2 * uk1 - B * uk) % M
    return uk, v


def lucas_pair(params: LucasParams, n: int) -> LucasPair:
    """Exact (u_n, v_n) by fast doubling."""
    if n < 0:
        raise DomainError(f"index must be >= 0, got {n}")
    u, v = _doubling(params.A, params.B, n, None)
    return LucasPair(n, u, v)


def lucas_pair_mod(params: LucasParams, n: int, modulus: int) -> LucasPair:
    """(u_n mod M, v_n mod M); valid for any modulus M >= 2, even ones included."""
    if n < 0:
        raise DomainError(f"index must be >= 0, got {n}")
    if modulus < 2:
        raise DomainError(f"modulus must be >= 2, got {modulus}")
    u, v = _doubling(params.A, params.B, n, modulus)
    return LucasPair(n, u, v, modulus)


def _require_odd_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise DomainError(f"{p} is not an odd prime")


def general_quotient(value_mod_p2: int, p: int) -> int:
    """value/p mod p for a value known mod p^2 and divisible by p."""
    r = value_mod_p2 % (p * p)
    if r % p:
        raise DomainError(f"quotient undefined: {p} does not divide {value_mod_p2}")
    return (r // p) % p


def lucas_quotient(params: LucasParams, p: int, index: int) -> int:
    """u_index / p mod p, computed from u_index mod p^2."""
    _require_odd_prime(p)
    u = lucas_pair_mod(params, index, p * p).u
    if u % p:
        raise DomainError(
            f"quotient undefined: {p} does not divide u_{index}({params.A},{params.B})"
        )
    return u // p % p


def transform_half_disc(params: LucasParams, p: int) -> LucasParams:
    """(A', B) with 4A' = B^2 - 4A (mod p), A' reduced into [0, p)."""
    if p < 3 or p % 2 == 0:
        raise DomainError(f"{p} is not odd")
    return LucasParams(params.D * mod_inverse(4, p) % p, params.B)


def transform_unit_b(params: LucasParams, p: int) -> LucasParams:
    """(A', 1) with A' = A / B^2 (mod p)."""
    if params.B % p == 0:
        raise DomainError(f"{p} divides B={params.B}")
    if params.B == 1:
        return params
    return LucasParams(params.A * mod_inverse(params.B * params.B, p) % p, 1)
