"""Registry of the congruences and divisibility criteria checked by the verifier.

Every entry pairs an applicability guard with two evaluators.  The evaluators
of one entry only share numtheory primitives: Lucas-side values come from
``lucas``, W-side values from ``sums``, and the other side is built from
harmonic sums and Fermat quotients.

Each evaluator returns a tuple; entries with several congruences return one
component per congruence.  Under ``MOD_P`` integer components are compared
mod p and boolean components (divisibility classifications) exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

from .lucas import (
    LucasParams,
    general_quotient,
    lucas_pair_mod,
    lucas_quotient,
    transform_half_disc,
    transform_unit_b,
)
from .numtheory import (
    DomainError,
    euler_phi,
    fermat_quotient,
    legendre,
    mobius,
    parity_sign,
)
from .sums import (
    InvariantViolation,
    StepKind,
    inverse_table,
    harmonic_sum_mod,
    mobius_weight,
    w_closed_form_mod,
    w_context,
    w_recurrence_mod,
)

__all__ = [
    "ParamsKind",
    "ModulusKind",
    "Case",
    "Identity",
    "registry",
    "get_identity",
    "DEFAULT_M_VALUES",
]

DEFAULT_M_VALUES = tuple(range(1, 13))


class ParamsKind(enum.Enum):
    P_ONLY = "P_ONLY"
    P_AND_A = "P_AND_A"
    P_AND_AB = "P_AND_AB"


class ModulusKind(enum.Enum):
    MOD_P = "MOD_P"
    MOD_P2 = "MOD_P2"
    EXACT = "EXACT"
    BOOLEAN_EQUIV = "BOOLEAN_EQUIV"


@dataclass(frozen=True)
class Case:
    """One prime/parameter tuple; ``w_method`` picks the W backend only."""

    p: int
    a: Optional[int] = None
    A: Optional[int] = None
    B: Optional[int] = None
    m: Optional[int] = None
    w_method: str = field(default="recurrence", compare=False)

    def sort_key(self) -> tuple:
        return tuple((x is not None, x or 0) for x in (self.p, self.a, self.A, self.B, self.m))

    def params(self) -> dict:
        out = {"p": self.p}
        for name in ("a", "A", "B", "m"):
            val = getattr(self, name)
            if val is not None:
                out[name] = val
        return out


Guard = Callable[[Case], Optional[str]]
Evaluator = Callable[[Case], tuple]


@dataclass(frozen=True)
class Identity:
    id: str
    anchor: str
    params_kind: ParamsKind
    modulus_kind: ModulusKind
    applies: Guard
    lhs: Evaluator
    rhs: Evaluator
    statement: str = ""
    m_values: Optional[tuple[int, ...]] = None

    def skip_reason(self, case: Case) -> Optional[str]:
        if case.p == 2:
            return "p = 2"
        return self.applies(case)

    def agree(self, case: Case, left: tuple, right: tuple) -> bool:
        if len(left) != len(right):
            return False
        if self.modulus_kind in (ModulusKind.EXACT, ModulusKind.BOOLEAN_EQUIV):
            return left == right
        mod = case.p if self.modulus_kind is ModulusKind.MOD_P else case.p * case.p
        return all(_norm(x, mod) == _norm(y, mod) for x, y in zip(left, right))

    def normalize(self, case: Case, values: tuple) -> tuple:
        if self.modulus_kind is ModulusKind.MOD_P:
            return tuple(_norm(x, case.p) for x in values)
        if self.modulus_kind is ModulusKind.MOD_P2:
            return tuple(_norm(x, case.p * case.p) for x in values)
        return values


def _norm(x, mod):
    if isinstance(x, bool):
        return x
    return x % mod


# -- small helpers -----------------------------------------------------------


def _frac(num: int, den: int, p: int) -> int:
    """num/den mod p."""
    if den % p == 0:
        raise DomainError(f"{den} is not invertible mod {p}")
    return num * inverse_table(p)[den % p] % p


def _q(b: int, p: int) -> int:
    return fermat_quotient(b, p)


def _hs(p: int, upper: int, kind: StepKind, base: tuple[int, int], coeff=(1, 1)) -> int:
    return harmonic_sum_mod(p, upper, coeff[0], coeff[1], kind, base)


def _divides_any(p: int, *factors: tuple[str, int]) -> Optional[str]:
    for name, value in factors:
        if value % p == 0:
            return f"p | {name}"
    return None


def _residue_class(p: int, modulus: int, allowed: tuple[int, ...]) -> Optional[str]:
    if p % modulus in allowed:
        return None
    cls = ",".join(str(x) for x in allowed)
    return f"p not in {cls} (mod {modulus})"


def _uv(A: int, B: int, n: int, p: int) -> tuple[int, int]:
    pair = lucas_pair_mod(LucasParams(A, B), n, p)
    return pair.u, pair.v


# -- intro congruences -------------------------------------------------------


def _sun95_lhs(c: Case):
    p = c.p
    return (_hs(p, (p - 1) // 2, StepKind.K, (1, 2)),)


def _sun95_rhs(c: Case):
    p = c.p
    return (_hs(p, 3 * p // 4, StepKind.K, (-1, 1), coeff=(-1, 1)),)


def _sun02_lhs(c: Case):
    p = c.p
    return (_hs(p, (p - 1) // 2, StepKind.K, (3, 1)),)


def _sun02_rhs(c: Case):
    p = c.p
    return (_hs(p, p // 6, StepKind.K, (-1, 1)),)


# -- W_p quotients -----------------------------------------------------------


def _w_mod(c: Case, n: int, r: int, modulus: int) -> int:
    if c.w_method == "closed":
        return w_closed_form_mod(n, r, c.m, c.a, modulus)
    return w_recurrence_mod(w_context(c.m, c.a), n, r, modulus)


def _c28_guard(c: Case) -> Optional[str]:
    return _divides_any(c.p, ("a", c.a), ("m", c.m))


@lru_cache(maxsize=64)
def _int_weights(m: int) -> tuple[int, ...]:
    """phi(m) * mu(m/g)/phi(m/g) with g = (j, m), for j in range(m); always integral."""
    out = []
    for j in range(m):
        w = euler_phi(m) * mobius_weight(m, j)
        if w.denominator != 1:
            raise InvariantViolation(f"weight {w} for m={m} is not integral")
        out.append(w.numerator)
    return tuple(out)


@lru_cache(maxsize=64)
def _c28_terms(p: int, a: int, twisted: bool) -> tuple[int, ...]:
    """t[k] = (-a)^k / k, or 1/(k (-a)^(k-1)) when twisted, mod p; t[0] = 0."""
    inv = inverse_table(p)
    ratio = inv[(-a) % p] if twisted else (-a) % p
    power = 1 if twisted else ratio
    terms = [0]
    for k in range(1, p):
        terms.append(power * inv[k] % p)
        power = power * ratio % p
    return tuple(terms)


def _weighted_sum(p: int, m: int, terms: tuple[int, ...]) -> int:
    weights = _int_weights(m)
    return sum(w * sum(terms[j::m]) for j, w in enumerate(weights)) % p


def _c28a_lhs(c: Case):
    p, m, a = c.p, c.m, c.a
    p2 = p * p
    w = _w_mod(c, p, 0, p2)
    return (general_quotient(w - euler_phi(m) - mobius(m) * pow(a, p, p2), p),)


def _c28a_rhs(c: Case):
    return (-_weighted_sum(c.p, c.m, _c28_terms(c.p, c.a, False)) % c.p,)


def _c28b_lhs(c: Case):
    p, m, a = c.p, c.m, c.a
    p2 = p * p
    w = _w_mod(c, p, p, p2)
    return (general_quotient(w - euler_phi(m) * pow(a, p, p2) - mobius(m), p),)


def _c28b_rhs(c: Case):
    return (_weighted_sum(c.p, c.m, _c28_terms(c.p, c.a, True)),)


# -- the (A, B) = (a^2 - a + 1, 2 - a) family --------------------------------


def _family(a: int) -> LucasParams:
    return LucasParams(a * a - a + 1, 2 - a)


def _l31_guard(c: Case) -> Optional[str]:
    a = c.a
    return _divides_any(c.p, ("3", 3), ("a", a), ("2-a", 2 - a), ("a^3+1", a**3 + 1))


def _t33_guard(c: Case) -> Optional[str]:
    a = c.a
    return _divides_any(
        c.p, ("3", 3), ("a", a), ("a-1", a - 1), ("2-a", 2 - a), ("a^3+1", a**3 + 1)
    )


def _odd_square_sum(c: Case) -> int:
    """sum_{k=1}^{(p-1)/2} (-3)^(k-1)/(2k-1) * (a/(2-a))^(2k-2)."""
    p, a = c.p, c.a
    num, den = -3 * a * a, (2 - a) ** 2
    return _hs(p, (p - 1) // 2, StepKind.TWO_K_MINUS_1, (num, den), coeff=(den, num))


def _even_square_sum(c: Case) -> int:
    """sum_{k=1}^{(p-1)/2} (-3)^k/k * (a/(2-a))^(2k)."""
    p, a = c.p, c.a
    return _hs(p, (p - 1) // 2, StepKind.K, (-3 * a * a, (2 - a) ** 2))


def _l31a_lhs(c: Case):
    p = c.p
    u = lucas_pair_mod(_family(c.a), p, p * p).u
    return (general_quotient(u - legendre(-3, p), p),)


def _l31a_rhs(c: Case):
    p, a = c.p, c.a
    half = _frac(1, 2, p)
    tail = _q(a, p) - _q(2, p) + half * _q(3, p)
    return (_odd_square_sum(c) + legendre(-3, p) * tail,)


def _l31b_lhs(c: Case):
    p, a = c.p, c.a
    v = lucas_pair_mod(_family(a), p, p * p).v
    return (general_quotient(v - (2 - a), p),)


def _l31b_rhs(c: Case):
    p, a = c.p, c.a
    inner = -_frac(1, 2, p) * _even_square_sum(c) - _q(2, p) + _q(2 - a, p)
    return ((2 - a) * inner,)


def _c32_lhs(c: Case):
    p, a = c.p, c.a
    return (_hs(p, p // 3, StepKind.K, ((-a) ** 3, 1)),)


def _c32_rhs(c: Case):
    p, a = c.p, c.a
    inner = _frac(1, 2, p) * _even_square_sum(c) + _q(2, p) - _q(2 - a, p)
    return ((2 - a) * inner - (a + 1) * _q(a + 1, p),)


def _t33_guard_mod(residue: int):
    def guard(c: Case) -> Optional[str]:
        return _t33_guard(c) or _residue_class(c.p, 3, (residue,))

    return guard


def _cube_sum_minus1(c: Case) -> int:
    """sum_{k=1}^{(p-1)/3} (-a)^(3k-1)/(3k-1)."""
    p, a = c.p, c.a
    return _hs(p, (p - 1) // 3, StepKind.THREE_K_MINUS_1, ((-a) ** 3, 1), coeff=(1, -a))


def _cube_sum_minus2(c: Case) -> int:
    """sum_{k=1}^{(p+1)/3} (-a)^(3k-2)/(3k-2)."""
    p, a = c.p, c.a
    return _hs(p, (p + 1) // 3, StepKind.THREE_K_MINUS_2, ((-a) ** 3, 1), coeff=(1, a * a))


def _t33_tail(c: Case) -> int:
    """The Fermat-quotient tail shared by both sum-swap congruences."""
    p, a = c.p, c.a
    t = a * a - a + 1
    return (
        _frac(a * (a - 1), a - 2, p) * (_q(a, p) - _q(2, p) + _frac(1, 2, p) * _q(3, p))
        - _frac(a + 1, 3, p) * _q(a + 1, p)
        - _frac(t, 3 * (a - 2), p) * _q(t, p)
    )


def _t33_1a_lhs(c: Case):
    return (lucas_quotient(_family(c.a), c.p, c.p - 1),)


def _t33_1a_rhs(c: Case):
    p, a = c.p, c.a
    t = a * a - a + 1
    return (
        -_frac(2, a * (a - 1), p) * _cube_sum_minus1(c)
        + _frac(a + 1, 3 * a * (a - 1), p) * (_q(t, p) - 2 * _q(a + 1, p)),
    )


def _t33_1b_lhs(c: Case):
    return (_cube_sum_minus1(c),)


def _t33_1b_rhs(c: Case):
    p, a = c.p, c.a
    return (_frac(a * (a - 1), a - 2, p) * _odd_square_sum(c) + _t33_tail(c),)


def _t33_2a_lhs(c: Case):
    return (lucas_quotient(_family(c.a), c.p, c.p + 1),)


def _t33_2a_rhs(c: Case):
    p, a = c.p, c.a
    t = a * a - a + 1
    return (
        _frac(2 * t, a * (a - 1), p) * _cube_sum_minus2(c)
        - _frac(a**3 + 1, 3 * a * (a - 1), p) * (_q(t, p) - 2 * _q(a + 1, p)),
    )


def _t33_2b_lhs(c: Case):
    return (_cube_sum_minus2(c),)


def _t33_2b_rhs(c: Case):
    p, a = c.p, c.a
    return (-_frac(a * (a - 1), a - 2, p) * _odd_square_sum(c) + _t33_tail(c),)


# -- a = -2: the (A, B) = (7, 4) sequence ------------------------------------

SEVEN_FOUR = LucasParams(7, 4)


def _not_3_7(c: Case) -> Optional[str]:
    if c.p in (3, 7):
        return f"p = {c.p}"
    return None


def _not_3_7_mod(residue: int):
    def guard(c: Case) -> Optional[str]:
        return _not_3_7(c) or _residue_class(c.p, 3, (residue,))

    return guard


def _quarter_sum(p: int, kind: StepKind, scale: int) -> int:
    """scale * sum_{k=1}^{(p-1)/2} (-3/4)^k / g(k)."""
    return _hs(p, (p - 1) // 2, kind, (-3, 4), coeff=(scale, 1))


def _c34_1_lhs(c: Case):
    return (_hs(c.p, c.p // 3, StepKind.K, (8, 1)),)


def _c34_1_rhs(c: Case):
    p = c.p
    return (_quarter_sum(p, StepKind.K, 2) - 4 * _q(2, p),)


def _eight_minus1(p: int) -> int:
    return _hs(p, (p - 1) // 3, StepKind.THREE_K_MINUS_1, (8, 1))


def _eight_minus2(p: int) -> int:
    return _hs(p, (p + 1) // 3, StepKind.THREE_K_MINUS_2, (8, 1))


def _c34_2a_lhs(c: Case):
    return (_eight_minus1(c.p),)


def _c34_2a_rhs(c: Case):
    p = c.p
    return (
        _quarter_sum(p, StepKind.TWO_K_MINUS_1, 4)
        - _frac(3, 2, p) * _q(3, p)
        + _frac(7, 6, p) * _q(7, p),
    )


def _c34_2b_lhs(c: Case):
    return (_eight_minus2(c.p),)


def _c34_2b_rhs(c: Case):
    p = c.p
    # the middle term carries q_p(3); with q_p(2) in its place the congruence fails
    return (
        _quarter_sum(p, StepKind.TWO_K_MINUS_1, -8) - 3 * _q(3, p) + _frac(7, 3, p) * _q(7, p),
    )


def _quot_minus(c: Case):
    return (lucas_quotient(SEVEN_FOUR, c.p, c.p - 1),)


def _quot_plus(c: Case):
    return (lucas_quotient(SEVEN_FOUR, c.p, c.p + 1),)


def _c35_1_rhs(c: Case):
    p = c.p
    return (-_frac(1, 6, p) * _eight_minus1(p) - _frac(1, 18, p) * _q(7, p),)


def _c35_2_rhs(c: Case):
    p = c.p
    return (_frac(7, 12, p) * _eight_minus2(p) + _frac(7, 18, p) * _q(7, p),)


def _t36_1a_rhs(c: Case):
    p = c.p
    s = _hs(p, (p - 1) // 6, StepKind.K, (64, 1))
    return (_frac(1, 6, p) * s + _frac(1, 3, p) * _q(7, p) + _frac(1, 2, p) * _q(3, p),)


def _t36_1b_rhs(c: Case):
    p = c.p
    s = _hs(p, (p - 1) // 6, StepKind.SIX_K_MINUS_1, (64, 1))
    return (-_frac(1, 3, p) * s - _frac(1, 18, p) * _q(7, p) + _frac(1, 6, p) * _q(3, p),)


def _t36_2a_rhs(c: Case):
    p = c.p
    s = _hs(p, (p - 5) // 6, StepKind.K, (64, 1))
    return (-_frac(7, 6, p) * s - _frac(7, 3, p) * _q(7, p) - _frac(7, 2, p) * _q(3, p),)


def _t36_2b_rhs(c: Case):
    p = c.p
    s = _hs(p, (p + 1) // 6, StepKind.SIX_K_MINUS_2, (64, 1))
    return (_frac(7, 6, p) * s + _frac(7, 18, p) * _q(7, p) + _frac(7, 6, p) * _q(3, p),)


# -- general Lucas sequences ---------------------------------------------------


def _ad_guard(c: Case) -> Optional[str]:
    D = c.B * c.B - 4 * c.A
    return _divides_any(c.p, ("A", c.A), ("D", D))


def _bd_guard(c: Case) -> Optional[str]:
    D = c.B * c.B - 4 * c.A
    return _divides_any(c.p, ("B", c.B), ("D", D))


def _quarter_index(p: int) -> int:
    return (p - 1) // 4 if p % 4 == 1 else (p + 1) // 4


def _l41_lhs(c: Case):
    p = c.p
    u, v = _uv(c.A, c.B, _quarter_index(p), p)
    return (u == 0, v == 0)


def _l41_rhs(c: Case):
    p = c.p
    h = _quarter_index(p)
    _, v2 = _uv(c.A, c.B, 2 * h, p)
    t = 2 * pow(c.A, h, p)
    return ((v2 - t) % p == 0, (v2 + t) % p == 0)


def _half_values(A: int, B: int, p: int) -> tuple[int, int, int, int]:
    """(u_{(p+1)/2}, u_{(p-1)/2}, v_{(p+1)/2}, v_{(p-1)/2}) mod p."""
    up, vp = _uv(A, B, (p + 1) // 2, p)
    um, vm = _uv(A, B, (p - 1) // 2, p)
    return up, um, vp, vm


def _l4x_lhs(c: Case):
    return _half_values(c.A, c.B, c.p)


def _l42_rhs(c: Case):
    p = c.p
    primed = transform_half_disc(LucasParams(c.A, c.B), p)
    up, um, vp, vm = _half_values(primed.A, primed.B, p)
    s = legendre(2, p)
    return (_frac(s * vm, 2, p), -s * um, s * vp, 2 * s * up)


def _l44_rhs(c: Case):
    p = c.p
    primed = transform_unit_b(LucasParams(c.A, c.B), p)
    up, um, vp, vm = _half_values(primed.A, primed.B, p)
    s = legendre(c.B, p)
    return (s * up, _frac(s * um, c.B, p), c.B * s * vp, s * vm)


def _gt3(c: Case) -> Optional[str]:
    return "p = 3" if c.p == 3 else None


def _r43_st_lhs(c: Case):
    p = c.p
    s_p, s_m, t_p, t_m = _half_values(1, 4, p)
    s_q, t_q = _uv(1, 4, (p + 1) // 4, p)
    return (s_p, s_m, t_p, t_m, s_q == 0, t_q == 0)


def _r43_st_rhs(c: Case):
    p = c.p
    l2, l3 = legendre(2, p), legendre(3, p)
    return (
        _frac(l2 * (l3 + 1), 2, p),
        -_frac(l2 * (l3 - 1), 2, p),
        l2 * (3 * l3 + 1),
        l2 * (3 * l3 - 1),
        p % 24 in (1, 19),
        p % 24 in (7, 13),
    )


def _r43_pq_lhs(c: Case):
    p = c.p
    s = legendre(2, p)
    P_lo, Q_lo = _uv(-1, 2, (p - s) // 2, p)
    P_hi, Q_hi = _uv(-1, 2, (p + s) // 2, p)
    return (P_lo, Q_lo, P_hi, Q_hi)


def _r43_pq_rhs(c: Case):
    p = c.p
    if p % 4 == 1:
        P_lo = 0
        Q_lo = parity_sign(p // 8) * pow(2, (p + 3) // 4, p)
    else:
        P_lo = parity_sign((p + 5) // 8) * pow(2, (p - 3) // 4, p)
        Q_lo = 0
    P_hi = parity_sign((p + 1) // 8) * pow(2, p // 4, p)
    Q_hi = parity_sign((p + 5) // 8) * pow(2, (p + 5) // 4, p)
    return (P_lo, Q_lo, P_hi, Q_hi)


def _t45_guard(residues: tuple[int, ...]):
    def guard(c: Case) -> Optional[str]:
        if c.p == 5:
            return "p = 5"
        return _residue_class(c.p, 5, residues)

    return guard


def _t45_lhs(c: Case):
    p = c.p
    e = legendre(-1, p)
    U_hi, V_hi = _uv(5, 2, (p + e) // 2, p)
    U_lo, V_lo = _uv(5, 2, (p - e) // 2, p)
    return (U_hi, U_lo, V_hi, V_lo)


def _t45_1_rhs(c: Case):
    p = c.p
    e = legendre(-1, p)
    s = parity_sign((p + 5) // 10)
    return (
        e * s * pow(5, p // 4, p),
        0,
        2 * s * pow(5, p // 4, p),
        2 * s * pow(5, (p + 1) // 4, p),
    )


def _t45_2_rhs(c: Case):
    p = c.p
    e = legendre(-1, p)
    s = parity_sign((p + 5) // 10)
    return (
        _frac(e * s * pow(5, p // 4, p), 2, p),
        _frac(e * s * pow(5, (p + 1) // 4, p), 2, p),
        4 * parity_sign((p - 5) // 10) * pow(5, p // 4, p),
        0,
    )


def _c47_lhs(c: Case):
    p = c.p
    U, V = _uv(5, 2, _quarter_index(p), p)
    return (U == 0, V == 0)


def _c47_rhs(c: Case):
    p = c.p
    if p % 4 == 1:
        return (p % 20 == 1, p % 20 == 9)
    return (p % 20 == 19, p % 20 == 11)


def _any_odd(c: Case) -> Optional[str]:
    return None


def _not5(c: Case) -> Optional[str]:
    return "p = 5" if c.p == 5 else None


P, PA, PAB = ParamsKind.P_ONLY, ParamsKind.P_AND_A, ParamsKind.P_AND_AB
MP, BE = ModulusKind.MOD_P, ModulusKind.BOOLEAN_EQUIV

_REGISTRY: tuple[Identity, ...] = (
    Identity("SUN95", "Introduction (Sun 1995)", P, MP, _any_odd, _sun95_lhs, _sun95_rhs,
             "sum_{k<=(p-1)/2} 1/(k 2^k) = sum_{k<=[3p/4]} (-1)^(k-1)/k"),
    Identity("SUN02", "Introduction (Sun 2002)", P, MP, _any_odd, _sun02_lhs, _sun02_rhs,
             "sum_{k<=(p-1)/2} 3^k/k = sum_{k<=[p/6]} (-1)^k/k"),
    Identity("C28A", "Corollary 2.8", PA, MP, _c28_guard, _c28a_lhs, _c28a_rhs,
             "(W_p(0,m) - phi(m) - mu(m) a^p)/p", DEFAULT_M_VALUES),
    Identity("C28B", "Corollary 2.8", PA, MP, _c28_guard, _c28b_lhs, _c28b_rhs,
             "(W_p(p,m) - phi(m) a^p - mu(m))/p", DEFAULT_M_VALUES),
    Identity("L31A", "Lemma 3.1(1)", PA, MP, _l31_guard, _l31a_lhs, _l31a_rhs,
             "(u_p - (-3/p))/p for (A,B) = (a^2-a+1, 2-a)"),
    Identity("L31B", "Lemma 3.1(2)", PA, MP, _l31_guard, _l31b_lhs, _l31b_rhs,
             "(v_p - (2-a))/p for (A,B) = (a^2-a+1, 2-a)"),
    Identity("C32", "Corollary 3.2", PA, MP, _l31_guard, _c32_lhs, _c32_rhs,
             "sum_{k<=[p/3]} (-a)^(3k)/k"),
    Identity("T33_1A", "Theorem 3.3(1)", PA, MP, _t33_guard_mod(1), _t33_1a_lhs, _t33_1a_rhs,
             "u_{p-1}/p, p = 1 (mod 3)"),
    Identity("T33_1B", "Theorem 3.3(1)", PA, MP, _t33_guard_mod(1), _t33_1b_lhs, _t33_1b_rhs,
             "sum_{k<=(p-1)/3} (-a)^(3k-1)/(3k-1), p = 1 (mod 3)"),
    Identity("T33_2A", "Theorem 3.3(2)", PA, MP, _t33_guard_mod(2), _t33_2a_lhs, _t33_2a_rhs,
             "u_{p+1}/p, p = 2 (mod 3)"),
    Identity("T33_2B", "Theorem 3.3(2)", PA, MP, _t33_guard_mod(2), _t33_2b_lhs, _t33_2b_rhs,
             "sum_{k<=(p+1)/3} (-a)^(3k-2)/(3k-2), p = 2 (mod 3)"),
    Identity("C34_1", "Corollary 3.4(1)", P, MP, _not_3_7, _c34_1_lhs, _c34_1_rhs,
             "sum_{k<=[p/3]} 8^k/k"),
    Identity("C34_2A", "Corollary 3.4(2)", P, MP, _not_3_7_mod(1), _c34_2a_lhs, _c34_2a_rhs,
             "sum_{k<=(p-1)/3} 8^k/(3k-1), p = 1 (mod 3)"),
    Identity("C34_2B", "Corollary 3.4(2)", P, MP, _not_3_7_mod(2), _c34_2b_lhs, _c34_2b_rhs,
             "sum_{k<=(p+1)/3} 8^k/(3k-2), p = 2 (mod 3)"),
    Identity("C35_1", "Corollary 3.5", P, MP, _not_3_7_mod(1), _quot_minus, _c35_1_rhs,
             "u_{p-1}(7,4)/p, p = 1 (mod 3)"),
    Identity("C35_2", "Corollary 3.5", P, MP, _not_3_7_mod(2), _quot_plus, _c35_2_rhs,
             "u_{p+1}(7,4)/p, p = 2 (mod 3)"),
    Identity("T36_1A", "Theorem 3.6", P, MP, _not_3_7_mod(1), _quot_minus, _t36_1a_rhs,
             "u_{p-1}(7,4)/p via sum 64^k/k, p = 1 (mod 3)"),
    Identity("T36_1B", "Theorem 3.6", P, MP, _not_3_7_mod(1), _quot_minus, _t36_1b_rhs,
             "u_{p-1}(7,4)/p via sum 64^k/(6k-1), p = 1 (mod 3)"),
    Identity("T36_2A", "Theorem 3.6", P, MP, _not_3_7_mod(2), _quot_plus, _t36_2a_rhs,
             "u_{p+1}(7,4)/p via sum 64^k/k, p = 2 (mod 3)"),
    Identity("T36_2B", "Theorem 3.6", P, MP, _not_3_7_mod(2), _quot_plus, _t36_2b_rhs,
             "u_{p+1}(7,4)/p via sum 64^k/(6k-2), p = 2 (mod 3)"),
    Identity("L41", "Lemma 4.1", PAB, BE, _ad_guard, _l41_lhs, _l41_rhs,
             "p | u_h, p | v_h versus v_2h = +-2A^h, h = [(p+1)/4]"),
    Identity("L42", "Lemma 4.2", PAB, MP, _ad_guard, _l4x_lhs, _l42_rhs,
             "half-index u, v against (A', B), 4A' = D"),
    Identity("L44", "Lemma 4.4", PAB, MP, _bd_guard, _l4x_lhs, _l44_rhs,
             "half-index u, v against (A', 1), A' = A/B^2"),
    Identity("R43_ST", "Remark 4.3(1)", P, MP, _gt3, _r43_st_lhs, _r43_st_rhs,
             "S, T = u, v(1,4) at half indices; p | S, T at [(p+1)/4] by p mod 24"),
    Identity("R43_PQ", "Remark 4.3(2)", P, MP, _any_odd, _r43_pq_lhs, _r43_pq_rhs,
             "P, Q = u, v(-1,2) at (p -+ (2/p))/2"),
    Identity("T45_1", "Theorem 4.5(1)", P, MP, _t45_guard((1, 4)), _t45_lhs, _t45_1_rhs,
             "U, V = u, v(5,2) at (p +- (-1/p))/2, p = +-1 (mod 5)"),
    Identity("T45_2", "Theorem 4.5(2)", P, MP, _t45_guard((2, 3)), _t45_lhs, _t45_2_rhs,
             "U, V = u, v(5,2) at (p +- (-1/p))/2, p = +-2 (mod 5)"),
    Identity("C47", "Corollary 4.7", P, BE, _not5, _c47_lhs, _c47_rhs,
             "p | U_h, p | V_h by p mod 20, h = [(p+1)/4]"),
)

_BY_ID = {ident.id: ident for ident in _REGISTRY}


def registry() -> list[Identity]:
    return list(_REGISTRY)


def get_identity(identity_id: str) -> Identity:
    try:
        return _BY_ID[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity {identity_id!r}") from None
