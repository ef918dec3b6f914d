import pytest
from hypothesis import given, settings, strategies as st

from bracketsum.numtheory import DomainError, legendre, primes_up_to
from bracketsum.lucas import (
    LucasParams,
    general_quotient,
    lucas_pair,
    lucas_pair_mod,
    lucas_pair_naive,
    lucas_quotient,
    transform_half_disc,
    transform_unit_b,
)

params = st.builds(LucasParams, st.integers(-5, 5), st.integers(-5, 5))


def iterate_u(A, B, n):
    seq = [0, 1]
    while len(seq) <= n:
        seq.append(B * seq[-1] - A * seq[-2])
    return seq[n]


def test_discriminant_stored():
    assert LucasParams(5, 2).D == -16
    assert LucasParams(-1, 1).D == 5


def test_examples():
    assert [iterate_u(5, 2, n) for n in range(6)] == [0, 1, 2, -1, -12, -19]
    assert lucas_pair(LucasParams(5, 2), 5).u == -19
    assert lucas_pair(LucasParams(5, 2), 5).v == 82
    assert lucas_pair(LucasParams(-1, 1), 10).u == 55
    for A, B in [(3, -2), (0, 0), (7, 4)]:
        pair = lucas_pair(LucasParams(A, B), 0)
        assert (pair.u, pair.v) == (0, 2)


def test_mod_examples():
    assert lucas_pair(LucasParams(5, 2), 10).u == -1558
    assert lucas_pair_mod(LucasParams(5, 2), 10, 41).u == 0
    assert (lucas_pair_mod(LucasParams(7, -3), 1, 5).u, lucas_pair_mod(LucasParams(7, -3), 1, 5).v) == (1, 2)
    pair = lucas_pair_mod(LucasParams(-1, 1), 12, 7)
    assert (pair.u, pair.v) == (144 % 7, 322 % 7) == (4, 0)
    with pytest.raises(DomainError):
        lucas_pair_mod(LucasParams(1, 1), 3, 1)


@settings(max_examples=200, deadline=None)
@given(params, st.integers(0, 400), st.integers(2, 10**6))
def test_doubling_matches_naive(prm, n, mod):
    naive = lucas_pair_naive(prm, n)
    fast = lucas_pair(prm, n)
    assert (fast.u, fast.v) == (naive.u, naive.v)
    red = lucas_pair_mod(prm, n, mod)
    assert (red.u, red.v) == (naive.u % mod, naive.v % mod)


@settings(max_examples=100, deadline=None)
@given(params, st.integers(0, 100))
def test_squared_identities(prm, n):
    pair, double = lucas_pair(prm, n), lucas_pair(prm, 2 * n)
    assert pair.v**2 - prm.D * pair.u**2 == 4 * prm.A**n
    assert double.v == pair.v**2 - 2 * prm.A**n == prm.D * pair.u**2 + 2 * prm.A**n


def test_rank_of_apparition_divisibility():
    for p in primes_up_to(500)[1:]:
        for A in range(-4, 5):
            for B in range(-4, 5):
                prm = LucasParams(A, B)
                if (2 * A * prm.D) % p == 0:
                    continue
                assert lucas_pair_mod(prm, p - legendre(prm.D, p), p).u == 0


def test_lucas_quotient_examples():
    u12 = iterate_u(7, 4, 12)
    assert u12 % 13 == 0
    assert lucas_quotient(LucasParams(7, 4), 13, 12) == (u12 // 13) % 13
    assert lucas_quotient(LucasParams(5, 2), 41, 10) == (-1558 // 41) % 41 == 3
    assert iterate_u(7, 4, 11) % 13 != 0
    with pytest.raises(DomainError, match="quotient undefined"):
        lucas_quotient(LucasParams(7, 4), 13, 11)


def test_general_quotient():
    p = 11
    assert general_quotient(0, p) == 0
    assert general_quotient(p, p) == 1
    assert general_quotient((3 * p * p - 2 * p) % (p * p), p) == (-2) % p
    with pytest.raises(DomainError):
        general_quotient(5, p)


def test_transforms():
    assert transform_half_disc(LucasParams(5, 2), 7) == LucasParams(3, 2)
    assert transform_half_disc(LucasParams(1, 4), 5) == LucasParams(3, 4)
    assert transform_half_disc(LucasParams(-1, 2), 7) == LucasParams(2, 2)
    assert transform_unit_b(LucasParams(5, 2), 7) == LucasParams(3, 1)
    assert transform_unit_b(LucasParams(-1, 1), 13) == LucasParams(-1, 1)
    with pytest.raises(DomainError):
        transform_unit_b(LucasParams(3, 3), 3)


def test_closed_forms_used_by_remarks():
    # u_n(3,4) = (3^n - 1)/2, v_n(3,4) = 3^n + 1
    for n in range(30):
        pair = lucas_pair(LucasParams(3, 4), n)
        assert (pair.u, pair.v) == ((3**n - 1) // 2, 3**n + 1)


def test_period_pattern_two_two():
    # regenerated from the recurrence, not transcribed
    for n in range(15):
        by4 = [lucas_pair(LucasParams(2, 2), 4 * n + i) for i in range(4)]
        w = (-4) ** n
        assert [x.u for x in by4] == [0, w, 2 * w, 2 * w]
        assert [x.v for x in by4] == [2 * w, 2 * w, 0, -4 * w]
