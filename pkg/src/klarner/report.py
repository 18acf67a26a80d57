"""Assembles the full verification run into one structured report."""

from __future__ import annotations

import logging
import math
import operator
from dataclasses import dataclass, field
from typing import Any

from . import enumeration as en
from . import motzkin, recurrences as rec, series
from .lattice import MarkVariant, satisfies

log = logging.getLogger(__name__)

PROVENANCE = {
    "A(70)": str(rec.A70),
    "A(70) source": "Barequet and Ben-Shachar (2024); OEIS A001168",
    "lambda lower bound from A(70)": "> 3.76049",
    "growth constant of G": "2 + 2*sqrt(2)",
    "growth constant upper estimate": "< 4.83",
    "radius of convergence of zeta": "(sqrt(2) - 1) / 2",
    "G sequence": "OEIS A071356",
}

_RELATIONS = {
    "==": operator.eq,
    "<=": operator.le,
    ">=": operator.ge,
    "<": operator.lt,
    ">": operator.gt,
}


@dataclass(frozen=True)
class CheckRecord:
    """``actual <relation> expected``; for "abs<=" the tolerance bounds |actual - expected|."""

    name: str
    inputs: dict[str, Any]
    actual: Any
    relation: str
    expected: Any
    tolerance: float | None = None

    @property
    def passed(self) -> bool:
        if self.relation == "abs<=":
            return abs(self.actual - self.expected) <= self.tolerance
        return bool(_RELATIONS[self.relation](self.actual, self.expected))

    def as_dict(self) -> dict[str, Any]:
        d = {
            "name": self.name,
            "inputs": self.inputs,
            "actual": self.actual,
            "relation": self.relation,
            "expected": self.expected,
        }
        if self.tolerance is not None:
            d["tolerance"] = self.tolerance
        d["pass"] = self.passed
        return d


@dataclass
class VerificationReport:
    checks: list[CheckRecord] = field(default_factory=list)
    provenance: dict[str, str] = field(default_factory=lambda: dict(PROVENANCE))

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, inputs: dict, actual, relation: str, expected, tolerance=None) -> None:
        self.checks.append(CheckRecord(name, inputs, actual, relation, expected, tolerance))

    def as_dict(self) -> dict[str, Any]:
        return {
            "overall": self.overall,
            "checks": [c.as_dict() for c in self.checks],
            "provenance": self.provenance,
        }


def _enumeration_checks(report: VerificationReport, max_n: int, workers: int, oracle_max: int, anchor_max: int):
    log.info("enumerating polyominoes and marked pairs up to n=%d", max_n)
    census = en.census(max_n, workers=workers)
    A, f, g = census.table("A"), census.table("f"), census.table("g")

    naive = en.naive_fixed_polyominoes(min(max_n, oracle_max))
    for n in range(1, min(max_n, oracle_max) + 1):
        report.add("enumeration.oracle_equivalence", {"n": n}, A[n], "==", len(naive[n]))

    for n in range(1, max_n + 1):
        report.add("enumeration.A<=g", {"n": n}, A[n], "<=", g[n])
        report.add("enumeration.g<=f", {"n": n}, g[n], "<=", f[n])
        report.add("enumeration.f<=n*A", {"n": n}, f[n], "<=", n * A[n])
        report.add("enumeration.mirror_invariance", {"n": n}, census.type_b_right[n], "==", g[n])
        report.add("enumeration.eden_bound", {"n": n}, A[n], "<=", en.eden_bound(n))
    for m in range(1, max_n):
        for n in range(m, max_n - m + 1):
            report.add("enumeration.supermultiplicativity", {"m": m, "n": n}, A[m + n], ">=", A[m] * A[n])

    for n in range(1, min(max_n, anchor_max) + 1):
        hits = [0]

        def witness(p, hits=hits):
            if satisfies(en.canonical_anchor(p), MarkVariant.TYPE_B_LEFT):
                hits[0] += 1

        en.visit_polyominoes(n, witness)
        report.add("enumeration.anchor_witness", {"n": n}, hits[0], "==", A[n])
    return census


def _theorem_checks(report: VerificationReport, max_n: int, census: en.Census, F, G) -> None:
    result = rec.verify_theorem(max_n, census, F, G)
    for c in result.checks:
        report.add(f"theorem.{c.name}", {"n": c.n}, c.actual, c.relation, c.bound)
    if max_n >= 3:
        report.add("theorem.tight_g3", {"n": 3}, census.table("g")[3], "==", G[3])
        report.add("theorem.tight_f3", {"n": 3}, census.table("f")[3], "==", F[3])


def build_report(
    max_n: int = 12,
    *,
    workers: int = 1,
    order: int = 200,
    ratio_n: int = 2000,
    max_len: int = 500,
    oracle_max: int = 10,
    anchor_max: int = 10,
) -> VerificationReport:
    """Run every check at the given scale. Ordering of checks is fixed."""
    report = VerificationReport()
    census = _enumeration_checks(report, max_n, workers, oracle_max, anchor_max)
    A = census.table("A")

    F, G = rec.compute_fg(max(order, max_len + 1, max_n))
    G_self = rec.compute_g_self(G.max_n)
    _theorem_checks(report, max_n, census, F, G)

    agree = sum(G[n] == G_self[n] for n in range(order + 1))
    report.add("recurrences.mutual_equals_self", {"n_max": order}, agree, "==", order + 1)
    report.add("recurrences.G_0_to_5", {}, [G[n] for n in range(6)], "==", [1, 1, 2, 6, 20, 72])
    increasing = sum(G[n] < G[n + 1] for n in range(1, order))
    report.add("recurrences.G_strictly_increasing", {"n_range": [1, order]}, increasing, "==", order - 1)
    f_above = sum(F[n] >= G[n] for n in range(2, order + 1))
    report.add("recurrences.F>=G", {"n_range": [2, order]}, f_above, "==", order - 1)
    ratios = [rec.ratio_estimate(G, n) for n in range(2, order + 1)]
    report.add("recurrences.ratio_min", {"n_range": [2, order]}, min(ratios), ">=", 2.0)
    report.add(
        "recurrences.ratio_max", {"n_range": [2, order]}, max(ratios), "<=", rec.GROWTH_CONSTANT + 0.5
    )

    log.info("computing G up to %d for the ratio estimate", ratio_n)
    G_long = rec.compute_g_self(ratio_n)
    report.add(
        "recurrences.ratio_near_growth",
        {"n": ratio_n},
        rec.ratio_estimate(G_long, ratio_n),
        "abs<=",
        rec.GROWTH_CONSTANT,
        0.01,
    )

    report.add("recurrences.lambda_lower_A70", {"n": 70}, rec.lambda_lower_bound(70, rec.A70), ">", 3.76049)
    lower = [rec.lambda_lower_bound(n, A[n]) for n in range(1, max_n + 1)]
    for n in range(2, max_n + 1):
        report.add("recurrences.lambda_lower_monotone", {"n": n}, lower[n - 1], ">=", lower[n - 2])
    report.add("recurrences.lambda_lower<=growth", {"n": max_n}, max(lower), "<=", rec.GROWTH_CONSTANT)

    log.info("series checks to order %d", order)
    zeta = series.zeta_coefficients(order + 1)
    agree = sum(zeta[n] == G[n] for n in range(order + 1))
    report.add("series.zeta_equals_G", {"n_max": order}, agree, "==", order + 1)
    residual = series.verify_functional_equation(order)
    report.add("series.functional_equation_nonzero_terms", {"order": order}, sum(1 for c in residual.coeffs if c), "==", 0)
    x = series.x_series(order)
    disc = 1 - 4 * x - 4 * x * x
    root_series = series.series_sqrt(disc)
    report.add("series.sqrt_round_trip", {"order": order}, (root_series * root_series) == disc, "==", True)

    r, growth = series.discriminant_root()
    report.add("series.root_value", {}, r, "abs<=", 0.207106781187, 1e-12)
    report.add("series.root_residual", {}, abs(1 - 4 * r - 4 * r * r), "<", 1e-12)
    report.add("series.growth_value", {}, growth, "abs<=", 4.828427124746, 1e-12)
    report.add("series.growth_below_4.83", {}, growth, "<", 4.83)
    report.add("series.root_times_growth", {}, r * growth, "abs<=", 1.0, 1e-12)
    report.add("series.growth_matches_constant", {}, growth, "abs<=", 2 + 2 * math.sqrt(2), 1e-12)

    log.info("Motzkin checks to length %d", max_len)
    brute_max = min(12, max_len)
    table = motzkin.path_table(max_len)
    brute = [motzkin.count_bicolored_paths(L, "bruteforce") for L in range(brute_max + 1)]
    report.add(
        "motzkin.bruteforce_equals_dp", {"L_max": brute_max}, brute, "==", [table[L][0] for L in range(brute_max + 1)]
    )
    report.add(
        "motzkin.bruteforce_equals_G_shifted", {"L_max": brute_max}, brute, "==", [G[L + 1] for L in range(brute_max + 1)]
    )
    agree = sum(table[L][0] == G[L + 1] for L in range(max_len + 1))
    report.add("motzkin.dp_equals_G_shifted", {"L_max": max_len}, agree, "==", max_len + 1)
    return report


def growth_payload(max_n: int, ratio_n: int, workers: int = 1) -> dict[str, Any]:
    A = en.census(max_n, classify=False, workers=workers).table("A")
    G = rec.compute_g_self(ratio_n)
    points = sorted({n for n in (2, 10, 100, 500, 1000, ratio_n) if 1 <= n <= ratio_n})
    gr = rec.growth_report(A, G, points)
    r, growth = series.discriminant_root()
    return {
        "lambda_lower": gr.lambda_lower,
        "lambda_lower_by_n": {n: rec.lambda_lower_bound(n, v) for n, v in A.items()},
        "ratio_at": gr.ratio_at,
        "ratio_error_estimate": {n: 3 * rec.GROWTH_CONSTANT / (2 * n) for n in points},
        "growth_constant": gr.growth_constant,
        "radius_of_convergence": r,
        "growth_from_radius": growth,
        "max_n_checked": gr.max_n_checked,
        "provenance": dict(PROVENANCE),
    }
