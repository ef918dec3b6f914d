"""Sweep registry identities over primes and parameters and report the outcome.

Work is split into (identity, prime) cells.  Cells may run in worker
processes; results are merged in cell order, so the report bytes never depend
on the degree of parallelism.
"""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .identities import Case, Identity, ParamsKind, get_identity, registry
from .numtheory import DomainError, primes_up_to

__all__ = [
    "DEFAULT_A_VALUES",
    "DEFAULT_AB_VALUES",
    "VerificationReport",
    "verify",
    "verify_all",
    "format_table",
    "format_record",
    "parse_record",
]

DEFAULT_A_VALUES = tuple(a for a in range(-6, 7) if a not in (-1, 0, 1))
DEFAULT_AB_VALUES = tuple((A, B) for A in range(-4, 5) for B in range(-4, 5))

_FIELDS = (
    "identity_id",
    "anchor",
    "range",
    "checked",
    "skipped",
    "failed",
    "failures",
    "skip_histogram",
)


@dataclass
class VerificationReport:
    identity_id: str
    anchor: str
    range: dict
    checked: int = 0
    skipped: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)
    skip_histogram: dict = field(default_factory=dict)

    @property
    def total(self) -> int:
        return self.checked + self.skipped

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in _FIELDS}


def _cases(ident: Identity, p: int, a_values, ab_values, w_method: str) -> list[Case]:
    if ident.params_kind is ParamsKind.P_ONLY:
        cases = [Case(p, w_method=w_method)]
    elif ident.params_kind is ParamsKind.P_AND_A:
        ms = ident.m_values or (None,)
        cases = [Case(p, a=a, m=m, w_method=w_method) for a in a_values for m in ms]
    else:
        cases = [Case(p, A=A, B=B, w_method=w_method) for A, B in ab_values]
    return sorted(cases, key=Case.sort_key)


def _jsonable(values: tuple) -> list:
    return [v if isinstance(v, (bool, int)) else str(v) for v in values]


def _evaluate(ident: Identity, case: Case, side) -> tuple:
    try:
        return ident.normalize(case, side(case))
    except DomainError as exc:
        return (f"undefined: {exc}",)


def _run_cell(args) -> tuple[int, list[str], list[dict]]:
    identity_id, p, a_values, ab_values, w_method = args
    ident = get_identity(identity_id)
    checked = 0
    skips: list[str] = []
    failures: list[dict] = []
    for case in _cases(ident, p, a_values, ab_values, w_method):
        reason = ident.skip_reason(case)
        if reason is not None:
            skips.append(reason)
            continue
        checked += 1
        left = _evaluate(ident, case, ident.lhs)
        right = _evaluate(ident, case, ident.rhs)
        undefined = any(isinstance(x, str) for x in left + right)
        if undefined or not ident.agree(case, left, right):
            record = case.params()
            record["lhs"] = _jsonable(left)
            record["rhs"] = _jsonable(right)
            failures.append(record)
    return checked, skips, failures


def _candidate_primes(lo: int, hi: int) -> list[int]:
    return [p for p in primes_up_to(hi) if p >= lo]


def _range_desc(ident: Identity, lo: int, hi: int, a_values, ab_values) -> dict:
    desc = {"primes": [lo, hi]}
    if ident.params_kind is ParamsKind.P_AND_A:
        desc["a"] = list(a_values)
        if ident.m_values:
            desc["m"] = list(ident.m_values)
    elif ident.params_kind is ParamsKind.P_AND_AB:
        desc["ab"] = [list(ab) for ab in ab_values]
    return desc


def _assemble(ident: Identity, desc: dict, results: Iterable) -> VerificationReport:
    report = VerificationReport(ident.id, ident.anchor, desc)
    hist: Counter = Counter()
    for checked, skips, failures in results:
        report.checked += checked
        report.skipped += len(skips)
        hist.update(skips)
        report.failures.extend(failures)
    report.failed = len(report.failures)
    report.skip_histogram = dict(sorted(hist.items()))
    return report


def _normalize_ranges(a_range, ab_range):
    a_values = tuple(DEFAULT_A_VALUES if a_range is None else a_range)
    ab_values = tuple(tuple(ab) for ab in (DEFAULT_AB_VALUES if ab_range is None else ab_range))
    return a_values, ab_values


def _run(
    identities: Sequence[Identity],
    lo: int,
    hi: int,
    a_values,
    ab_values,
    parallelism: int,
    w_method: str,
) -> list[VerificationReport]:
    primes = _candidate_primes(lo, hi)
    cells = [(ident.id, p, a_values, ab_values, w_method) for ident in identities for p in primes]
    if parallelism > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            results = list(pool.map(_run_cell, cells, chunksize=4))
    else:
        results = [_run_cell(cell) for cell in cells]
    reports = []
    for i, ident in enumerate(identities):
        chunk = results[i * len(primes) : (i + 1) * len(primes)]
        desc = _range_desc(ident, lo, hi, a_values, ab_values)
        reports.append(_assemble(ident, desc, chunk))
    return reports


def verify(
    identity_id: str,
    prime_range: tuple[int, int],
    a_range: Optional[Sequence[int]] = None,
    ab_range: Optional[Sequence[tuple[int, int]]] = None,
    *,
    parallelism: int = 1,
    w_method: str = "recurrence",
) -> VerificationReport:
    """Check one identity for every prime in ``[lo, hi]`` and every parameter tuple.

    ``a_range`` defaults to -6..6 without -1, 0, 1; ``ab_range`` to [-4, 4]^2.
    Raises KeyError for an unknown id.
    """
    ident = get_identity(identity_id)
    lo, hi = prime_range
    a_values, ab_values = _normalize_ranges(a_range, ab_range)
    return _run([ident], lo, hi, a_values, ab_values, parallelism, w_method)[0]


def verify_all(
    prime_bound: int,
    a_values: Optional[Sequence[int]] = None,
    ab_values: Optional[Sequence[tuple[int, int]]] = None,
    *,
    prime_min: int = 2,
    parallelism: int = 1,
    w_method: str = "recurrence",
    ids: Optional[Sequence[str]] = None,
) -> list[VerificationReport]:
    """Run every registry entry (or ``ids``) over primes ``prime_min..prime_bound``."""
    idents = registry() if ids is None else [get_identity(i) for i in ids]
    a_vals, ab_vals = _normalize_ranges(a_values, ab_values)
    return _run(idents, prime_min, prime_bound, a_vals, ab_vals, parallelism, w_method)


# -- serialization -------------------------------------------------------------


def format_record(report: VerificationReport) -> str:
    """One JSON object per report, keys in fixed order, no whitespace."""
    return json.dumps(report.as_dict(), separators=(",", ":"), ensure_ascii=True)


def parse_record(line: str) -> VerificationReport:
    data = json.loads(line)
    missing = [k for k in _FIELDS if k not in data]
    if missing:
        raise ValueError(f"record lacks fields {missing}")
    return VerificationReport(**{k: data[k] for k in _FIELDS})


def _fmt_range(desc: dict) -> str:
    lo, hi = desc["primes"]
    parts = [f"p in [{lo},{hi}]"]
    if "a" in desc:
        parts.append(f"a in {{{','.join(map(str, desc['a']))}}}")
    if "m" in desc:
        parts.append(f"m in [{min(desc['m'])},{max(desc['m'])}]")
    if "ab" in desc:
        parts.append(f"{len(desc['ab'])} (A,B) pairs")
    return "; ".join(parts)


def format_table(reports: Sequence[VerificationReport], max_failures: int = 5) -> str:
    lines = [f"{'id':<8} {'anchor':<26} {'checked':>8} {'skipped':>8} {'failed':>7}  range"]
    for rep in reports:
        lines.append(
            f"{rep.identity_id:<8} {rep.anchor:<26} {rep.checked:>8} {rep.skipped:>8} "
            f"{rep.failed:>7}  {_fmt_range(rep.range)}"
        )
        for fail in rep.failures[:max_failures]:
            params = " ".join(f"{k}={v}" for k, v in fail.items() if k not in ("lhs", "rhs"))
            lines.append(f"    FAIL {params} lhs={fail['lhs']} rhs={fail['rhs']}")
        if rep.failed > max_failures:
            lines.append(f"    ... {rep.failed - max_failures} more failures")
        if rep.skip_histogram:
            hist = ", ".join(f"{k}: {v}" for k, v in rep.skip_histogram.items())
            lines.append(f"    skips: {hist}")
    total_failed = sum(r.failed for r in reports)
    lines.append(f"{len(reports)} identities, {total_failed} failures")
    return "\n".join(lines)
