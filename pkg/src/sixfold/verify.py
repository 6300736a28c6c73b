"""Verification suites.

Every check reduces an identity to an exact polynomial residual or an exact
table comparison and returns a Report; failures are data, never exceptions.
A report passes iff its residual has no terms (respectively, no triple
mismatches), so there is no tolerance anywhere.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import partitions, recurrence
from .partitions import B0_433, B0_533, CountTable, GeneralParams, count_table
from .poly import TriPoly
from .recurrence import DEFAULT_P_TABLES, PTables, SeriesMemo


class ConfigError(ValueError):
    """Invalid suite configuration or check parameters."""


IDENTITY_ORDER: tuple[str, ...] = tuple(
    [f"Rec{k}" for k in range(16, 32)]
    + [
        "J",
        "K",
        "Link",
        "Lemma2",
        "Lemma3",
        "Lemma4",
        "Product",
        "Theorem3",
        "Theorem1",
        "Conj433",
        "Thm2Consistency",
    ]
)
_ORDER_INDEX = {name: i for i, name in enumerate(IDENTITY_ORDER)}


@dataclass(frozen=True)
class Report:
    """Outcome of one identity check.

    `n` is the check parameter: the level for per-level checks, the q bound
    for table checks, and 100*lam + 10*k + a for general-family cases
    (which have three parameters but one integer slot).  `detail` and
    `diff` are diagnostics and not part of the serialized line.
    """

    identity: str
    n: int
    passed: bool
    residual_terms: int
    ms: int
    detail: str = ""
    diff: tuple[str, ...] = ()

    def to_json_line(self) -> str:
        return json.dumps(
            {
                "identity": self.identity,
                "n": self.n,
                "pass": self.passed,
                "residual_terms": self.residual_terms,
                "ms": self.ms,
            }
        )


def all_passed(reports: list[Report]) -> bool:
    return all(r.passed for r in reports)


def _elapsed_ms(t0: float) -> int:
    return int((time.perf_counter() - t0) * 1000)


def _residual_report(
    identity: str, n: int, residual: TriPoly, t0: float, detail: str = ""
) -> Report:
    terms = residual.terms()
    diff = tuple(f"{c}*a^{ea}*b^{eb}*q^{eq}" for c, ea, eb, eq in terms[:20])
    return Report(identity, n, not terms, len(terms), _elapsed_ms(t0), detail, diff)


# ------------------------------------------------------------------ suites


def suite_oracle(n_max: int, memo: SeriesMemo | None = None) -> list[Report]:
    """Recurrence value of every series against brute-force enumeration.

    The check for class j reports as identity Rec(16+j).
    """
    memo = memo or SeriesMemo()
    out = []
    for n in range(n_max + 1):
        for j in range(16):
            t0 = time.perf_counter()
            residual = memo.s(n, j) - partitions.s_oracle(n, j)
            out.append(_residual_report(f"Rec{16 + j}", n, residual, t0))
    return out


def suite_lemma1(n_max: int, memo: SeriesMemo | None = None) -> list[Report]:
    """J(n) and K(n) are the zero polynomial."""
    memo = memo or SeriesMemo()
    out = []
    for n in range(n_max + 1):
        t0 = time.perf_counter()
        out.append(_residual_report("J", n, recurrence.J_poly(n, memo), t0))
        t0 = time.perf_counter()
        out.append(_residual_report("K", n, recurrence.K_poly(n, memo), t0))
    return out


def suite_link(n_max: int, memo: SeriesMemo | None = None) -> list[Report]:
    """The identity linking J(n), K(n) and K(n+1) vanishes."""
    memo = memo or SeriesMemo()
    return [
        _residual_report("Link", n, recurrence.link_residual(n, memo), time.perf_counter())
        for n in range(n_max + 1)
    ]


def suite_lemma2(
    n_max: int, memo: SeriesMemo | None = None, tables: PTables = DEFAULT_P_TABLES
) -> list[Report]:
    memo = memo or SeriesMemo()
    return [
        _residual_report(
            "Lemma2", n, recurrence.lemma2_residual(n, memo, tables), time.perf_counter()
        )
        for n in range(n_max + 1)
    ]


def suite_lemma3(
    n_max: int, memo: SeriesMemo | None = None, tables: PTables = DEFAULT_P_TABLES
) -> list[Report]:
    memo = memo or SeriesMemo()
    return [
        _residual_report(
            "Lemma3", n, recurrence.lemma3_residual(n, memo, tables), time.perf_counter()
        )
        for n in range(n_max + 1)
    ]


def suite_lemma4(n_max: int, memo: SeriesMemo | None = None) -> list[Report]:
    memo = memo or SeriesMemo()
    return [
        _residual_report(
            "Lemma4", n, recurrence.lemma4_residual(n, memo), time.perf_counter()
        )
        for n in range(n_max + 1)
    ]


def suite_product(q_max: int) -> list[Report]:
    """Truncation stability: three extra factor windows change nothing."""
    if q_max < 0:
        raise ConfigError(f"q_max must be >= 0, got {q_max}")
    t0 = time.perf_counter()
    residual = recurrence.product_truncated(q_max) - recurrence.product_truncated(
        q_max, extra_windows=3
    )
    return [
        _residual_report(
            "Product", q_max, residual, t0, detail="truncation stability under extra windows"
        )
    ]


# ------------------------------------------------------------ table checks


def theorem3_check(q_max: int) -> Report:
    """Three-way comparison of the side-A table, the side-B table and the
    coefficient table of the truncated generating product."""
    if q_max < 0:
        raise ConfigError(f"q_max must be >= 0, got {q_max}")
    t0 = time.perf_counter()
    table_a = count_table("A", q_max)
    table_b = count_table("B", q_max)
    product = recurrence.product_truncated(q_max)
    table_p = CountTable({(ea, eb, eq): c for c, ea, eb, eq in product.terms()})

    keys = set(table_a.entries) | set(table_b.entries) | set(table_p.entries)
    bad = [
        k
        for k in keys
        if not table_a.count(*k) == table_b.count(*k) == table_p.count(*k)
    ]
    diffs: list[str] = []
    for name, lhs, rhs in (
        ("A vs B", table_a, table_b),
        ("A vs product", table_a, table_p),
        ("B vs product", table_b, table_p),
    ):
        diffs += [f"{name} {line}" for line in lhs.diff(rhs, limit=7)]
    return Report(
        "Theorem3",
        q_max,
        not bad,
        len(bad),
        _elapsed_ms(t0),
        detail=f"{len(keys)} coefficient triples compared three ways",
        diff=tuple(diffs[:20]),
    )


def _check_theorem1_params(gp: GeneralParams) -> None:
    if gp.lam < 1 or gp.k < 1 or gp.a < 1:
        raise ConfigError(f"lam, k and a must be positive, got {gp}")
    if not (2 * gp.a >= gp.lam and gp.a <= gp.k and gp.k >= gp.lam):
        raise ConfigError(f"params {gp} violate lam/2 <= a <= k and k >= lam")


def theorem1_check(gp: GeneralParams, n_max: int) -> Report:
    """Pointwise equality of the two general families for all n <= n_max."""
    _check_theorem1_params(gp)
    if n_max < 0:
        raise ConfigError(f"n_max must be >= 0, got {n_max}")
    t0 = time.perf_counter()
    left = partitions.general_A_series(gp, n_max)
    right = partitions.general_B_series(gp, n_max)
    bad = [n for n in range(n_max + 1) if left[n] != right[n]]
    return Report(
        "Theorem1",
        100 * gp.lam + 10 * gp.k + gp.a,
        not bad,
        len(bad),
        _elapsed_ms(t0),
        detail=f"lam={gp.lam} k={gp.k} a={gp.a}, all n <= {n_max}",
        diff=tuple(f"n={n}: A={left[n]} B={right[n]}" for n in bad[:20]),
    )


def conj433_check(n_max: int) -> Report:
    """Family A at (4,3,3) against family B with the b0-433 extras."""
    if n_max < 0:
        raise ConfigError(f"n_max must be >= 0, got {n_max}")
    t0 = time.perf_counter()
    gp = GeneralParams(4, 3, 3)
    left = partitions.general_A_series(gp, n_max)
    right = partitions.general_B_series(gp, n_max, extra=B0_433)
    bad = [n for n in range(n_max + 1) if left[n] != right[n]]
    return Report(
        "Conj433",
        n_max,
        not bad,
        len(bad),
        _elapsed_ms(t0),
        detail=f"(4,3,3) with extras, all n <= {n_max}",
        diff=tuple(f"n={n}: A={left[n]} B0={right[n]}" for n in bad[:20]),
    )


def thm2_consistency(n_max: int) -> Report:
    """Family A at (5,3,3) against family B with the b0-533 extras, and the
    refined (mu, nu, N) table's row sums against the same family."""
    if n_max < 0:
        raise ConfigError(f"n_max must be >= 0, got {n_max}")
    t0 = time.perf_counter()
    gp = GeneralParams(5, 3, 3)
    left = partitions.general_A_series(gp, n_max)
    right = partitions.general_B_series(gp, n_max, extra=B0_533)
    totals = count_table("B", n_max).totals_by_n()
    bad = []
    for n in range(n_max + 1):
        if left[n] != right[n]:
            bad.append(f"n={n}: A={left[n]} B0={right[n]}")
        if totals.get(n, 0) != right[n]:
            bad.append(f"n={n}: refined-table-sum={totals.get(n, 0)} B0={right[n]}")
    return Report(
        "Thm2Consistency",
        n_max,
        not bad,
        len(bad),
        _elapsed_ms(t0),
        detail=f"pointwise A = B0 and refined-table row sums, all n <= {n_max}",
        diff=tuple(bad[:20]),
    )


# --------------------------------------------------------------- full runs


DEFAULT_GENERAL_CASES: tuple[tuple[GeneralParams, str | None, int], ...] = (
    (GeneralParams(2, 2, 2), None, 40),
    (GeneralParams(2, 3, 2), None, 40),
    (GeneralParams(2, 3, 3), None, 40),
    (GeneralParams(3, 3, 2), None, 40),
    (GeneralParams(3, 3, 3), None, 40),
    (GeneralParams(4, 3, 3), B0_433, 40),
    (GeneralParams(5, 3, 3), B0_533, 40),
)


@dataclass(frozen=True)
class SuiteConfig:
    """Bounds for a full verification run (defaults are desk scale)."""

    n_max_lemmas: int = 6  # J, K and the linking identity
    n_max_fourth_order: int = 4  # the three fourth-order residual checks
    n_max_oracle: int = 4
    q_max_theorem: int = 50
    general_cases: tuple[tuple[GeneralParams, str | None, int], ...] = DEFAULT_GENERAL_CASES
    parallelism: int = 1

    def validate(self) -> None:
        for name in ("n_max_lemmas", "n_max_fourth_order", "n_max_oracle", "q_max_theorem"):
            if getattr(self, name) < 0:
                raise ConfigError(f"{name} must be >= 0")
        if self.parallelism < 1:
            raise ConfigError("parallelism must be >= 1")
        for gp, extra, n_max in self.general_cases:
            if n_max < 0:
                raise ConfigError(f"general case {gp}: n_max must be >= 0")
            if extra is None:
                _check_theorem1_params(gp)
            else:
                try:
                    partitions.validate_extra(gp, extra)
                except ValueError as exc:
                    raise ConfigError(str(exc)) from exc


def _general_case_report(gp: GeneralParams, extra: str | None, n_max: int) -> Report:
    if extra is None:
        return theorem1_check(gp, n_max)
    if extra == B0_433:
        return conj433_check(n_max)
    return thm2_consistency(n_max)


def run_all(cfg: SuiteConfig) -> list[Report]:
    """Run every suite; report content is a pure function of cfg.

    Suites run independently (optionally on a thread pool); each builds
    series values in its own memo or a shared one, and the merged report
    list is sorted canonically by (identity, n).
    """
    cfg.validate()
    memo = SeriesMemo()
    tasks = [
        lambda: suite_oracle(cfg.n_max_oracle, memo),
        lambda: suite_lemma1(cfg.n_max_lemmas, memo),
        lambda: suite_link(cfg.n_max_lemmas - 1, memo),
        lambda: suite_lemma2(cfg.n_max_fourth_order, memo),
        lambda: suite_lemma3(cfg.n_max_fourth_order, memo),
        lambda: suite_lemma4(cfg.n_max_fourth_order, memo),
        lambda: suite_product(cfg.q_max_theorem),
        lambda: [theorem3_check(cfg.q_max_theorem)],
    ]
    for gp, extra, n_max in cfg.general_cases:
        tasks.append(
            lambda gp=gp, extra=extra, n_max=n_max: [_general_case_report(gp, extra, n_max)]
        )

    if cfg.parallelism > 1:
        with ThreadPoolExecutor(max_workers=cfg.parallelism) as pool:
            chunks = list(pool.map(lambda task: task(), tasks))
    else:
        chunks = [task() for task in tasks]
    reports = [r for chunk in chunks for r in chunk]
    reports.sort(key=lambda r: (_ORDER_INDEX[r.identity], r.n))
    return reports
