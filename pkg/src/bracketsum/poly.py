"""Dense integer polynomials and cyclotomic polynomials."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, Sequence

from .numtheory import DomainError, divisors

__all__ = [
    "IntPolynomial",
    "poly_add",
    "poly_sub",
    "poly_mul",
    "poly_divmod",
    "poly_div_exact",
    "poly_eval",
    "cyclotomic_poly",
]


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients in ascending degree.

    The zero polynomial has an empty coefficient tuple; otherwise the
    leading coefficient is nonzero.
    """

    coeffs: tuple[int, ...] = ()

    def __init__(self, coeffs: Sequence[int] = ()):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.leading == 1

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_add(self, other)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_sub(self, other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_mul(self, other)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __pow__(self, e: int) -> "IntPolynomial":
        result = IntPolynomial((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: int) -> int:
        return poly_eval(self, x)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            body = "x" if i == 1 else f"x^{i}" if i else ""
            if body and mag == 1:
                term = body
            elif body:
                term = f"{mag}*{body}"
            else:
                term = str(mag)
            sign = "-" if c < 0 else "+"
            terms.append((sign, term))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, term in terms[1:]:
            out += f" {sign} {term}"
        return out


def poly_add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    n = max(len(p.coeffs), len(q.coeffs))
    a = p.coeffs + (0,) * (n - len(p.coeffs))
    b = q.coeffs + (0,) * (n - len(q.coeffs))
    return IntPolynomial(x + y for x, y in zip(a, b))


def poly_sub(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return poly_add(p, -q)


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    if not p.coeffs or not q.coeffs:
        return IntPolynomial()
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a:
            for j, b in enumerate(q.coeffs):
                out[i + j] += a * b
    return IntPolynomial(out)


def poly_divmod(p: IntPolynomial, q: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """Division by a divisor whose leading coefficient divides every step.

    Raises DomainError when a quotient coefficient would not be an integer.
    """
    if not q.coeffs:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p.coeffs)
    dq = q.degree
    lead = q.leading
    if len(rem) <= dq:
        return IntPolynomial(), p
    quot = [0] * (len(rem) - dq)
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        t, r = divmod(c, lead)
        if r:
            raise DomainError(f"non-integral quotient coefficient {c}/{lead}")
        quot[i - dq] = t
        for j, b in enumerate(q.coeffs):
            rem[i - dq + j] -= t * b
    return IntPolynomial(quot), IntPolynomial(rem)


def poly_div_exact(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    quot, rem = poly_divmod(p, q)
    if rem.coeffs:
        raise DomainError(f"({p}) is not divisible by ({q}); remainder {rem}")
    return quot


def poly_eval(p: IntPolynomial, x: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


_CYCLOTOMIC: dict[int, IntPolynomial] = {}
_CYCLOTOMIC_LOCK = threading.Lock()


def cyclotomic_poly(m: int) -> IntPolynomial:
    """m-th cyclotomic polynomial: x^m - 1 divided by Phi_d for every proper divisor d."""
    if m < 1:
        raise DomainError(f"cyclotomic_poly needs m >= 1, got {m}")
    cached = _CYCLOTOMIC.get(m)
    if cached is not None:
        return cached
    result = IntPolynomial([-1] + [0] * (m - 1) + [1])
    for d in divisors(m):
        if d < m:
            result = poly_div_exact(result, cyclotomic_poly(d))
    with _CYCLOTOMIC_LOCK:
        return _CYCLOTOMIC.setdefault(m, result)
