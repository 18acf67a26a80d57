"""The F/G bounding recurrences, the bound-proof verifier, and growth estimates."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import gmpy2

from .enumeration import Census
from .tables import CountTable

GROWTH_CONSTANT = 2 + 2 * math.sqrt(2)

# Number of fixed 70-cell polyominoes (Barequet & Ben-Shachar, 2024).
A70 = 18500792645885711270652890811942343400814


def _inner(G: list[int], total: int) -> int:
    """Sum of G[l] * G[m] over l, m >= 1 with l + m = total (0 if empty)."""
    return sum(G[l] * G[total - l] for l in range(1, total))


def compute_fg(max_n: int) -> tuple[CountTable, CountTable]:
    """F and G on 0..max_n from the mutual recurrence.

    F(n) = G(n) + sum_{l+m=n} G(l)G(m)
    G(n) = F(n-1) + G(n-1) + sum_{l+m=n-1} G(l)G(m)
    with F(0) = F(1) = G(0) = G(1) = 1 and l, m >= 1.
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    F = [1, 1]
    G = [1, 1]
    for n in range(2, max_n + 1):
        G.append(F[n - 1] + G[n - 1] + _inner(G, n - 1))
        F.append(G[n] + _inner(G, n))
    return CountTable("F", tuple(F)), CountTable("G", tuple(G))


def compute_g_self(max_n: int) -> CountTable:
    """G from the self-convolution G(n) = 2 * sum_{m=1}^{n-1} G(m) G(n-1-m)."""
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    G = [1, 1]
    for n in range(2, max_n + 1):
        G.append(2 * sum(G[m] * G[n - 1 - m] for m in range(1, n)))
    return CountTable("G", tuple(G))


@dataclass(frozen=True)
class Check:
    name: str
    n: int
    actual: int
    bound: int
    relation: str = "<="

    @property
    def passed(self) -> bool:
        if self.relation == "<=":
            return self.actual <= self.bound
        if self.relation == "==":
            return self.actual == self.bound
        raise ValueError(self.relation)


@dataclass
class TheoremReport:
    max_n: int
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


def verify_theorem(max_n: int, counts: Census, F: CountTable | None = None, G: CountTable | None = None) -> TheoremReport:
    """Check f <= F, g <= G and the five case-split inequalities for 1..max_n.

    The Type-B bucket checks (iii)-(v) start at n = 2, where the case split
    begins.
    """
    if counts is None or not counts.classified:
        raise ValueError("verify_theorem needs a classified census")
    if counts.max_n < max_n:
        raise ValueError(f"census covers n <= {counts.max_n}, need {max_n}")
    if F is None or G is None:
        F, G = compute_fg(max_n)
    if F.max_n < max_n or G.max_n < max_n:
        raise ValueError("F/G tables are too short")
    f = counts.table("f")
    g = counts.table("g")
    Gv = [G[k] for k in range(max_n + 1)]
    gv = [g[k] for k in range(max_n + 1)]

    report = TheoremReport(max_n)
    add = report.checks.append
    for n in range(1, max_n + 1):
        add(Check("f<=F", n, f[n], F[n]))
        add(Check("g<=G", n, g[n], G[n]))
        if n >= 2:
            b = counts.buckets_b(n)
            add(Check("B.no_right<=f(n-1)", n, b.no_right, f[n - 1]))
            add(Check("B.right_no_above<=g(n-1)", n, b.right_no_above, g[n - 1]))
            cross = sum(Gv[l] * gv[n - 1 - l] for l in range(1, n - 1))
            add(Check("B.right_and_above<=sum G(l)g(m)", n, b.right_and_above, cross))
        a = counts.buckets_a(n)
        add(Check("A.no_left<=g(n)", n, a.no_left, g[n]))
        add(Check("A.has_left<=sum G(l)G(m)", n, a.has_left, _inner(Gv, n)))
    return report


def ratio_estimate(G: CountTable, n: int) -> float:
    """G(n) / G(n-1), correctly rounded to a float."""
    if n < 1 or n not in G or n - 1 not in G:
        raise KeyError(f"ratio at n={n} needs G({n - 1}) and G({n})")
    return G[n] / G[n - 1]  # int / int true division rounds correctly


def root_floor(a: int, n: int, bits: int = 64) -> Fraction:
    """Largest ``k / 2**e`` not exceeding ``a ** (1/n)``, carrying ``bits`` bits.

    More bits never give a smaller value: the coarser dyadic grid is a
    subset of the finer one.
    """
    if a < 1 or n < 1:
        raise ValueError("need a >= 1 and n >= 1")
    e = max(0, bits - (a.bit_length() // n + 1))
    root, _ = gmpy2.iroot(gmpy2.mpz(a) << (n * e), n)
    return Fraction(int(root), 1 << e)


def lambda_lower_bound(n: int, a_n: int, bits: int = 64) -> float:
    """``a_n ** (1/n)`` rounded down to a float, certified by integer roots."""
    exact = root_floor(a_n, n, bits)
    x = float(exact)
    if Fraction(x) > exact:
        x = math.nextafter(x, 0.0)
    return x


@dataclass(frozen=True)
class GrowthReport:
    lambda_lower: float
    ratio_at: dict[int, float]
    growth_constant: float
    max_n_checked: int


def growth_report(A: CountTable, G: CountTable, ratio_points: list[int]) -> GrowthReport:
    """Best lower bound from the enumerated A table (and A(70)) plus G ratios."""
    lower = max(
        [lambda_lower_bound(k, v) for k, v in A.items()] + [lambda_lower_bound(70, A70)]
    )
    return GrowthReport(
        lambda_lower=lower,
        ratio_at={k: ratio_estimate(G, k) for k in ratio_points},
        growth_constant=GROWTH_CONSTANT,
        max_n_checked=A.max_n,
    )
