import dataclasses
import re

import pytest

from bracketsum import identities
from bracketsum.identities import Case, ModulusKind, ParamsKind, get_identity, registry
from bracketsum.lucas import LucasParams, lucas_pair
from bracketsum.numtheory import fermat_quotient, primes_up_to
from bracketsum.sums import StepKind, harmonic_sum_mod
from bracketsum.verify import (
    format_record,
    format_table,
    parse_record,
    verify,
    verify_all,
)

EXPECTED_IDS = {
    "SUN95", "SUN02", "C28A", "C28B", "L31A", "L31B", "C32",
    "T33_1A", "T33_1B", "T33_2A", "T33_2B", "C34_1", "C34_2A", "C34_2B",
    "C35_1", "C35_2", "T36_1A", "T36_1B", "T36_2A", "T36_2B",
    "L41", "L42", "L44", "R43_ST", "R43_PQ", "T45_1", "T45_2", "C47",
}

SKIP_REASON = re.compile(r"^(p = \d+|p \| [\w^+\-]+|p not in [\d,]+ \(mod \d+\))$")


def test_registry_shape():
    entries = registry()
    ids = [e.id for e in entries]
    assert len(entries) >= 24
    assert len(set(ids)) == len(ids)
    assert set(ids) == EXPECTED_IDS
    assert all(e.anchor for e in entries)
    assert get_identity("C47").params_kind is ParamsKind.P_ONLY
    assert get_identity("L41").modulus_kind is ModulusKind.BOOLEAN_EQUIV
    with pytest.raises(KeyError):
        get_identity("NOPE")


def test_sun02_small_range():
    rep = verify("SUN02", (3, 5))
    assert rep.checked == 2 and rep.failed == 0
    ident = get_identity("SUN02")
    assert ident.lhs(Case(5)) == (0,) == ident.rhs(Case(5))


def test_c47_small_range():
    rep = verify("C47", (3, 50))
    assert rep.failed == 0
    assert rep.skip_histogram == {"p = 5": 1}
    assert lucas_pair(LucasParams(5, 2), 10).u % 41 == 0
    assert get_identity("C47").lhs(Case(41)) == (True, False)


def test_t45_2_at_three():
    rep = verify("T45_2", (3, 3))
    assert (rep.checked, rep.failed) == (1, 0)
    # U_1 = 1 and -1/2 = 1 (mod 3)
    assert get_identity("T45_2").lhs(Case(3))[0] == 1 == get_identity("T45_2").rhs(Case(3))[0]


def test_tiny_bound_mostly_skips():
    reports = verify_all(3, [])
    assert sum(r.skipped for r in reports) > sum(r.checked for r in reports)
    assert all(r.failed == 0 for r in reports)


def test_report_invariants_and_skip_reasons():
    reports = verify_all(150, [-3, 2, 4], [(1, 4), (5, 2), (-1, 2), (3, 0)])
    for rep in reports:
        assert rep.failed == len(rep.failures) == 0
        assert rep.checked + rep.skipped == rep.total
        assert sum(rep.skip_histogram.values()) == rep.skipped
        for reason in rep.skip_histogram:
            assert SKIP_REASON.match(reason), reason


def test_candidate_counts():
    primes = [p for p in primes_up_to(100) if p >= 3]
    rep = verify("L31A", (3, 100), [2, 3])
    assert rep.total == 2 * len(primes)
    rep = verify("C28A", (3, 100), [3])
    assert rep.total == 12 * len(primes)
    rep = verify("L44", (3, 100), ab_range=[(1, 1), (2, 3)])
    assert rep.total == 2 * len(primes)


def test_w_backends_give_identical_reports():
    for ident in ("C28A", "C28B"):
        fast = verify(ident, (3, 200), w_method="recurrence")
        slow = verify(ident, (3, 200), w_method="closed")
        assert format_record(fast) == format_record(slow)


def test_failures_are_reported(monkeypatch):
    ident = get_identity("SUN02")
    broken = dataclasses.replace(ident, rhs=lambda c: (ident.rhs(c)[0] + 1,))
    monkeypatch.setitem(identities._BY_ID, "SUN02", broken)
    rep = verify("SUN02", (3, 30))
    assert rep.failed == rep.checked == len(rep.failures) > 0
    first = rep.failures[0]
    assert first["p"] == 3 and set(first) == {"p", "lhs", "rhs"}


def test_undefined_quotient_is_a_failure(monkeypatch):
    ident = get_identity("C35_1")
    # index p - 2 is never a multiple of the rank of apparition
    from bracketsum.lucas import lucas_quotient

    broken = dataclasses.replace(ident, lhs=lambda c: (lucas_quotient(LucasParams(7, 4), c.p, c.p - 2),))
    monkeypatch.setitem(identities._BY_ID, "C35_1", broken)
    rep = verify("C35_1", (3, 60))
    assert rep.failed > 0
    assert all(str(f["lhs"][0]).startswith("undefined") for f in rep.failures)


def test_both_directions_of_classifications():
    for p in primes_up_to(400)[3:]:
        if p % 4 == 1:
            h = (p - 1) // 4
            U, V = lucas_pair(LucasParams(5, 2), h).u, lucas_pair(LucasParams(5, 2), h).v
            assert (U % p == 0) == (p % 20 == 1)
            assert (V % p == 0) == (p % 20 == 9)


def test_json_round_trip():
    reports = verify_all(60, [2, -3], [(1, 4), (0, 3)])
    for rep in reports:
        line = format_record(rep)
        assert "\n" not in line
        assert format_record(parse_record(line)) == line
    assert "identities, 0 failures" in format_table(reports)


def test_determinism_and_parallelism():
    one = [format_record(r) for r in verify_all(120, [2, 5], parallelism=1)]
    again = [format_record(r) for r in verify_all(120, [2, 5], parallelism=1)]
    four = [format_record(r) for r in verify_all(120, [2, 5], parallelism=4)]
    assert one == again == four


def test_c34_2b_middle_term_is_q3():
    """With q_p(2) in place of q_p(3) the congruence breaks at every p = 2 mod 3 tested."""
    for p in [p for p in primes_up_to(200) if p % 3 == 2 and p not in (2,)]:
        lhs = harmonic_sum_mod(p, (p + 1) // 3, 1, 1, StepKind.THREE_K_MINUS_2, (8, 1))
        quarter = harmonic_sum_mod(p, (p - 1) // 2, -8, 1, StepKind.TWO_K_MINUS_1, (-3, 4))
        tail7 = 7 * pow(3, -1, p) * fermat_quotient(7, p) if p != 7 else 0
        with_q3 = (quarter - 3 * fermat_quotient(3, p) + tail7) % p
        with_q2 = (quarter - 3 * fermat_quotient(2, p) + tail7) % p
        if p != 7:
            assert lhs == with_q3
        if p not in (5, 7):
            assert lhs != with_q2 or fermat_quotient(2, p) == fermat_quotient(3, p)


def test_t36_short_bounds_coincide():
    for p in primes_up_to(500):
        if p % 6 == 5:
            assert (p - 5) // 6 == (p - 1) // 6
