import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bracketsum.numtheory import DomainError, euler_phi, mobius
from oracles import brute_bracket, numeric_a_poly
from bracketsum.sums import (
    BracketQuery,
    StepKind,
    a_poly,
    bracket_direct,
    bracket_residues_mod,
    bracket_via_w,
    harmonic_sum_mod,
    mobius_delta_lhs,
    mobius_delta_rhs,
    w_closed_form,
    w_closed_form_mod,
    w_context,
    w_coprime_expansion,
    w_recurrence,
    w_recurrence_mod,
)

A_VALUES = [a for a in range(-6, 7) if a not in (-1, 0, 1)]
a_values = st.sampled_from(A_VALUES)


# closed forms for small m, ascending coefficients
KNOWN = {
    1: lambda a: (-1 - a, 1),
    2: lambda a: (-1 + a, 1),
    3: lambda a: (a * a - a + 1, -(2 - a), 1),
    4: lambda a: (a * a + 1, -2, 1),
    6: lambda a: (a * a + a + 1, -(a + 2), 1),
}


def a5_fixture(a):
    # linear term derived from a^4 Phi_5((x-1)/a) and checked against numeric_a_poly
    return (a**4 - a**3 + a * a - a + 1, a**3 - 2 * a * a + 3 * a - 4, a * a - 3 * a + 6, -(4 - a), 1)


def test_bracket_query_validation():
    for bad in (0, 1, -1):
        with pytest.raises(DomainError):
            BracketQuery(3, 0, 2, bad)
    with pytest.raises(DomainError):
        BracketQuery(0, 0, 2, 2)
    with pytest.raises(DomainError):
        BracketQuery(3, 0, 0, 2)


@pytest.mark.parametrize(
    "n,r,m,a,expected",
    [(4, 0, 2, 2, 41), (5, 0, 1, 3, 1024), (1, 0, 4, 2, 1), (6, 2, 4, -2, 124)],
)
def test_bracket_examples(n, r, m, a, expected):
    q = BracketQuery(n, r, m, a)
    assert expected == brute_bracket(n, r, m, a)
    assert bracket_direct(q) == expected
    assert bracket_via_w(q) == expected
    assert bracket_via_w(q, method="closed") == expected


@pytest.mark.parametrize("m", [1, 2, 3, 4, 6])
@pytest.mark.parametrize("a", A_VALUES)
def test_a_poly_known_forms(m, a):
    assert a_poly(m, a).coeffs == KNOWN[m](a)


@pytest.mark.parametrize("a", A_VALUES)
def test_a5_against_numeric_product(a):
    assert a_poly(5, a).coeffs == numeric_a_poly(5, a) == a5_fixture(a)


def test_a_poly_numeric_all_small_m():
    for m in range(1, 13):
        for a in (2, -3, 5):
            poly = a_poly(m, a)
            assert poly.is_monic() and poly.degree == euler_phi(m)
            assert poly.coeffs == numeric_a_poly(m, a)


def test_w_closed_form_examples():
    for a in A_VALUES:
        for n in range(8):
            assert w_closed_form(n, 5, 1, a) == (1 + a) ** n
            for r in range(3):
                assert w_closed_form(n, r, 2, a) == (-1) ** r * (1 - a) ** n
    assert w_closed_form(1, 0, 4, 2) == 2


def test_w_recurrence_examples():
    ctx = w_context(6, 2)
    assert w_recurrence(ctx, 7, 3) == w_closed_form(7, 3, 6, 2)
    assert w_recurrence(w_context(2, 3), 10, 1) == -1024
    ctx = w_context(12, -4)
    for n in range(ctx.order):
        for r in range(12):
            assert w_recurrence(ctx, n, r) == ctx.seeds[r][n]


def test_w_recurrence_relation():
    for m in range(1, 13):
        for a in A_VALUES:
            b = a_poly(m, a).coeffs
            for r in range(m):
                seq = [w_closed_form(n, r, m, a) for n in range(20 + len(b))]
                for n in range(20):
                    assert sum(bs * seq[n + s] for s, bs in enumerate(b)) == 0


def test_modular_w_paths_agree():
    for m in (1, 5, 7, 12):
        for a in (-5, 3):
            ctx = w_context(m, a)
            for n in (0, 3, 17, 101, 257):
                for r in range(m):
                    for mod in (2, 169, 1009**2):
                        exact = w_closed_form(n, r, m, a) % mod
                        assert w_recurrence_mod(ctx, n, r, mod) == exact
                        assert w_closed_form_mod(n, r, m, a, mod) == exact


def test_bracket_residues_mod():
    n, m, a, mod = 23, 5, -3, 97
    assert bracket_residues_mod(n, m, a, mod) == [brute_bracket(n, j, m, a) % mod for j in range(m)]


@settings(max_examples=60, deadline=None)
@given(
    st.integers(1, 30), st.integers(-40, 40), st.integers(1, 12), a_values
)
def test_periodicity_in_r(n, r, m, a):
    assert w_closed_form(n, r, m, a) == w_closed_form(n, r % m, m, a)
    assert w_closed_form(n, r + 3 * m, m, a) == w_closed_form(n, r, m, a)
    assert bracket_direct(BracketQuery(n, r, m, a)) == bracket_direct(BracketQuery(n, r % m, m, a))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 40), st.integers(1, 12), a_values)
def test_row_sum(n, m, a):
    assert sum(bracket_direct(BracketQuery(n, r, m, a)) for r in range(m)) == (1 + a) ** n


@pytest.mark.parametrize(
    "m,c,expected", [(4, 2, -2), (1, 0, 1), (1, 17, 1), (9, 0, 6)]
)
def test_mobius_delta_examples(m, c, expected):
    assert mobius_delta_lhs(m, c) == expected
    assert mobius_delta_rhs(m, c) == expected


def test_mobius_delta_identity_small():
    for m in range(1, 61):
        for c in range(m):
            assert mobius_delta_lhs(m, c) == mobius_delta_rhs(m, c)


def test_coprime_expansion_small():
    for m in range(1, 9):
        for n in range(1, 16):
            if math.gcd(m, n) != 1:
                continue
            for a in (2, -3):
                phi, mu = euler_phi(m), mobius(m)
                assert w_closed_form(n, 0, m, a) - phi - mu * a**n == w_coprime_expansion(n, m, a)
                assert (
                    w_closed_form(n, n, m, a) - phi * a**n - mu
                    == w_coprime_expansion(n, m, a, shifted=True)
                )


def direct_harmonic(p, upper, coeff, base, g):
    total = sum(Fraction(base) ** k / g(k) for k in range(1, upper + 1)) * Fraction(coeff)
    return total.numerator * pow(total.denominator, -1, p) % p


def test_harmonic_examples():
    assert harmonic_sum_mod(5, 2, 1, 1, StepKind.K, (3, 1)) == 0
    assert harmonic_sum_mod(7, 0, 1, 1, StepKind.K, (3, 1)) == 0
    assert harmonic_sum_mod(3, 2, -1, 1, StepKind.K, (-1, 1)) == 2


@pytest.mark.parametrize("kind", list(StepKind))
def test_harmonic_against_fractions(kind):
    for p in (5, 7, 11, 13, 101):
        for base in ((3, 1), (-3, 4), (1, 2), (64, 1)):
            upper = (p - 1) // kind.value[0]
            got = harmonic_sum_mod(p, upper, 2, 3, kind, base)
            assert got == direct_harmonic(p, upper, Fraction(2, 3), Fraction(*base), kind.denominator)


def test_harmonic_bad_denominator_names_k():
    with pytest.raises(DomainError, match="k=2"):
        harmonic_sum_mod(5, 4, 1, 1, StepKind.THREE_K_MINUS_1, (2, 1))
