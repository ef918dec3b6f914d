"""Filtered binomial sums and the W-sequences that decompose them.

For integers n >= 1, m >= 1, r and a fixed a not in {0, 1, -1}:

    bracket(n, r, m, a) = sum over 0 <= k <= n with k = r (mod m) of C(n, k) a^k

and W_n(r, m) is the primitive part of the roots-of-unity filter, so that
``m * bracket(n, r, m, a) = sum over d | m of W_n(r, d)``.  W is never built
from complex roots of unity.  ``w_closed_form`` evaluates the Mobius weighted
integer closed form and is the ground truth; ``w_recurrence`` runs the order
phi(m) linear recurrence whose characteristic polynomial is ``a_poly(m, a)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .numtheory import (
    DomainError,
    binomial,
    divisors,
    euler_phi,
    gcd,
    mobius,
)
from .poly import IntPolynomial, cyclotomic_poly

__all__ = [
    "InvariantViolation",
    "BracketQuery",
    "WSeqContext",
    "StepKind",
    "check_a",
    "bracket_direct",
    "bracket_via_w",
    "bracket_residues_mod",
    "a_poly",
    "w_closed_form",
    "w_closed_form_mod",
    "w_context",
    "w_recurrence",
    "w_recurrence_mod",
    "mobius_weight",
    "mobius_delta_lhs",
    "mobius_delta_rhs",
    "w_coprime_expansion",
    "harmonic_sum_mod",
    "inverse_table",
]


class InvariantViolation(AssertionError):
    """An exactness guarantee failed; this indicates a bug, never bad input."""


def check_a(a: int) -> int:
    if a in (0, 1, -1):
        raise DomainError(f"a must not be 0, 1 or -1 (got {a})")
    return a


@dataclass(frozen=True)
class BracketQuery:
    n: int
    r: int
    m: int
    a: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"n must be >= 1, got {self.n}")
        if self.m < 1:
            raise DomainError(f"m must be >= 1, got {self.m}")
        check_a(self.a)


def bracket_direct(q: BracketQuery) -> int:
    total = 0
    for k in range(q.r % q.m, q.n + 1, q.m):
        total += binomial(q.n, k) * q.a**k
    return total


def a_poly(m: int, a: int) -> IntPolynomial:
    """Characteristic polynomial of W_n(., m): a^phi(m) * Phi_m((x - 1)/a).

    Monic of degree phi(m); its roots are 1 + a*zeta over the primitive m-th
    roots of unity zeta.
    """
    check_a(a)
    phi = cyclotomic_poly(m)
    deg = phi.degree
    shift = IntPolynomial((-1, 1))
    result = IntPolynomial()
    power = IntPolynomial((1,))
    for j, c in enumerate(phi.coeffs):
        if c:
            result = result + power * IntPolynomial.const(c * a ** (deg - j))
        power = power * shift
    return result


def mobius_weight(m: int, c: int) -> Fraction:
    """mu(m/(c,m)) / phi(m/(c,m)); note (0, m) = m."""
    t = m // gcd(c, m)
    return Fraction(mobius(t), euler_phi(t))


def w_closed_form(n: int, r: int, m: int, a: int) -> int:
    """W_n(r, m) from its Mobius closed form, accumulated as an exact rational."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    # group terms by g = (k - r, m) so only a handful of rationals are formed
    partial: dict[int, int] = {}
    for k in range(n + 1):
        g = gcd(k - r, m)
        partial[g] = partial.get(g, 0) + binomial(n, k) * a**k
    total = Fraction(0)
    for g, s in partial.items():
        total += Fraction(mobius(m // g), euler_phi(m // g)) * s
    total *= euler_phi(m)
    if total.denominator != 1:
        raise InvariantViolation(f"W_{n}({r},{m}) with a={a} is not an integer: {total}")
    return total.numerator


@dataclass(frozen=True)
class WSeqContext:
    """Recurrence data for W_n(r, m) at fixed (m, a), seeded eagerly for every r mod m."""

    m: int
    a: int
    char_poly: IntPolynomial = field(init=False, compare=False)
    seeds: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        check_a(self.a)
        poly = a_poly(self.m, self.a)
        order = euler_phi(self.m)
        if not poly.is_monic() or poly.degree != order:
            raise InvariantViolation(f"A_{self.m} is not monic of degree {order}: {poly}")
        seeds = {
            r: tuple(w_closed_form(n, r, self.m, self.a) for n in range(order))
            for r in range(self.m)
        }
        object.__setattr__(self, "char_poly", poly)
        object.__setattr__(self, "seeds", seeds)

    @property
    def order(self) -> int:
        return self.char_poly.degree


@lru_cache(maxsize=512)
def w_context(m: int, a: int) -> WSeqContext:
    return WSeqContext(m, a)


def w_recurrence(ctx: WSeqContext, n: int, r: int) -> int:
    """W_n(r, m) by iterating W_{n+phi} = -sum_{s<phi} b_s W_{n+s} from the seeds."""
    seq = list(ctx.seeds[r % ctx.m])
    order = ctx.order
    if n < order:
        return seq[n]
    b = ctx.char_poly.coeffs[:order]
    window = seq
    for _ in range(n - order + 1):
        nxt = -sum(bs * w for bs, w in zip(b, window))
        window = window[1:] + [nxt]
    return window[-1]


def _polymulmod(f: list[int], g: list[int], low: tuple[int, ...], modulus: int) -> list[int]:
    """f*g reduced by the monic polynomial x^d + low(x), coefficients mod modulus."""
    d = len(low)
    prod = [0] * (2 * d - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                prod[i + j] += fi * gj
    for i in range(2 * d - 2, d - 1, -1):
        c = prod[i] % modulus
        if c:
            for j in range(d):
                prod[i - d + j] -= c * low[j]
    return [c % modulus for c in prod[:d]]


def w_recurrence_mod(ctx: WSeqContext, n: int, r: int, modulus: int) -> int:
    """W_n(r, m) mod ``modulus`` from the recurrence, in O(phi^2 log n).

    Writes x^n = sum c_i x^i modulo the characteristic polynomial, then
    W_n = sum c_i W_i.
    """
    seeds = ctx.seeds[r % ctx.m]
    order = ctx.order
    if n < order:
        return seeds[n] % modulus
    low = ctx.char_poly.coeffs[:order]
    if order == 1:
        root = -low[0]
        return seeds[0] * pow(root, n, modulus) % modulus
    result = [1 % modulus] + [0] * (order - 1)
    base = [0, 1] + [0] * (order - 2)
    e = n
    while e:
        if e & 1:
            result = _polymulmod(result, base, low, modulus)
        base = _polymulmod(base, base, low, modulus)
        e >>= 1
    return sum(c * s for c, s in zip(result, seeds)) % modulus


@lru_cache(maxsize=32)
def _binomial_terms_mod(n: int, a: int, modulus: int) -> tuple[int, ...]:
    terms = []
    c = 1
    for k in range(n + 1):
        terms.append(c * pow(a, k, modulus) % modulus)
        c = c * (n - k) // (k + 1)
    return tuple(terms)


def bracket_residues_mod(n: int, m: int, a: int, modulus: int) -> list[int]:
    """[bracket(n, j, m, a) mod modulus for j in range(m)]."""
    terms = _binomial_terms_mod(n, a, modulus)
    return [sum(terms[j::m]) % modulus for j in range(m)]


def w_closed_form_mod(n: int, r: int, m: int, a: int, modulus: int) -> int:
    """W_n(r, m) mod ``modulus`` from the closed form, grouped by k mod m."""
    phi = euler_phi(m)
    residues = bracket_residues_mod(n, m, a, modulus)
    total = 0
    for j, s in enumerate(residues):
        w = mobius_weight(m, j - r) * phi
        if w.denominator != 1:
            raise InvariantViolation(f"weight {w} is not integral for m={m}")
        total += w.numerator * s
    return total % modulus


def bracket_via_w(q: BracketQuery, method: str = "recurrence") -> int:
    """(1/m) * sum_{d | m} W_n(r, d), with the division by m checked."""
    if method == "recurrence":
        total = sum(w_recurrence(w_context(d, q.a), q.n, q.r) for d in divisors(q.m))
    elif method == "closed":
        total = sum(w_closed_form(q.n, q.r, d, q.a) for d in divisors(q.m))
    else:
        raise ValueError(f"unknown method {method!r}")
    quot, rem = divmod(total, q.m)
    if rem:
        raise InvariantViolation(f"divisor sum {total} not divisible by m={q.m}")
    return quot


def mobius_delta_lhs(m: int, c: int) -> int:
    """sum_{d | m} mu(m/d) * d * [d divides c]."""
    return sum(mobius(m // d) * d for d in divisors(m) if c % d == 0)


def mobius_delta_rhs(m: int, c: int) -> Fraction:
    t = m // gcd(c, m)
    return euler_phi(m) * Fraction(mobius(t), euler_phi(t))


def w_coprime_expansion(n: int, m: int, a: int, shifted: bool = False) -> Fraction:
    """Right-hand side of the coprime-(m, n) expansion of W_n(0, m) or W_n(n, m).

    With ``shifted=False`` this should equal W_n(0,m) - phi(m) - mu(m) a^n; with
    ``shifted=True`` it should equal W_n(n,m) - phi(m) a^n - mu(m).
    """
    total = Fraction(0)
    for k in range(1, n):
        power = a ** (n - k) if shifted else a**k
        total += mobius_weight(m, k) * binomial(n - 1, k - 1) * Fraction(power, k)
    return euler_phi(m) * n * total


class StepKind(enum.Enum):
    """Denominator g(k) of a harmonic-type summand base^k / g(k)."""

    K = (1, 0)
    TWO_K_MINUS_1 = (2, -1)
    THREE_K_MINUS_1 = (3, -1)
    THREE_K_MINUS_2 = (3, -2)
    SIX_K_MINUS_1 = (6, -1)
    SIX_K_MINUS_2 = (6, -2)

    def denominator(self, k: int) -> int:
        slope, offset = self.value
        return slope * k + offset


@lru_cache(maxsize=128)
def inverse_table(p: int) -> tuple[int, ...]:
    """inv[k] = k^-1 mod p for 1 <= k < p (inv[0] = 0)."""
    inv = [0, 1] + [0] * (p - 2)
    for k in range(2, p):
        inv[k] = (p - (p // k) * inv[p % k] % p) % p
    return tuple(inv)


def harmonic_sum_mod(
    p: int,
    upper: int,
    coeff_num: int,
    coeff_den: int,
    step_kind: StepKind,
    base: tuple[int, int],
) -> int:
    """(coeff_num/coeff_den) * sum_{k=1}^{upper} base^k / g(k) reduced mod p.

    ``base`` is a (numerator, denominator) pair; g is picked by ``step_kind``.
    """
    if upper <= 0:
        return 0
    inv = inverse_table(p)
    bnum, bden = base
    if coeff_den % p == 0 or bden % p == 0:
        raise DomainError(f"denominator of coefficient or base divisible by {p}")
    b = bnum * inv[bden % p] % p
    total = 0
    power = 1
    for k in range(1, upper + 1):
        power = power * b % p
        g = step_kind.denominator(k) % p
        if g == 0:
            raise DomainError(f"summand k={k}: denominator {step_kind.denominator(k)} divisible by {p}")
        total += power * inv[g]
    return coeff_num * inv[coeff_den % p] * total % p
