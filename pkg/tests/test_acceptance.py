"""Exit criteria. Each test prints one PASS/FAIL line (also collected in the
terminal summary)."""

import math
import time

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from klarner import enumeration as en
from klarner import motzkin, recurrences as rec, series
from klarner.cli import run
from klarner.lattice import MarkedPair, MarkVariant, Symmetry, canonicalize, satisfies, transform_pair

from conftest import connected_cells

CASES = settings(max_examples=1000, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def test_1_oracle_equivalence(acceptance):
    t0 = time.perf_counter()
    c = en.census(10, classify=False)
    naive = en.naive_fixed_polyominoes(10)
    back = [c.fixed[n] for n in range(1, 11)]
    oracle = [len(naive[n]) for n in range(1, 11)]
    elapsed = time.perf_counter() - t0
    ok = back == oracle and oracle[:5] == [1, 2, 6, 19, 63] and elapsed < 60
    acceptance(1, f"backtracking == naive oracle for n<=10, A(1..5)={oracle[:5]}, {elapsed:.1f}s < 60s", ok)


def test_2_3_theorem_and_buckets(acceptance):
    t0 = time.perf_counter()
    c = en.census(12)
    F, G = rec.compute_fg(12)
    A, f, g = c.table("A"), c.table("f"), c.table("g")
    sandwich = all(A[n] <= g[n] <= f[n] <= n * A[n] for n in range(1, 13))
    bounds = all(g[n] <= G[n] and f[n] <= F[n] for n in range(1, 13))
    tight = g[3] == G[3] == 6 and f[3] == F[3] == 10
    report = rec.verify_theorem(12, c, F, G)
    elapsed = time.perf_counter() - t0
    acceptance(
        2,
        f"A<=g<=f<=nA, g<=G, f<=F for n<=12; g(3)=G(3)=6, f(3)=F(3)=10; {elapsed:.1f}s < 600s",
        sandwich and bounds and tight and elapsed < 600,
    )
    names = {ch.name for ch in report.checks}
    bucket_ns = {ch.n for ch in report.checks if ch.name.startswith("B.")}
    acceptance(
        3,
        f"all 7 theorem checks pass for 2<=n<=12 ({len(report.checks)} checks, {len(report.failures())} failed)",
        report.passed and len(names) == 7 and bucket_ns == set(range(2, 13)),
    )


def test_4_self_recurrence(acceptance):
    t0 = time.perf_counter()
    _, G = rec.compute_fg(200)
    G_self = rec.compute_g_self(200)
    elapsed = time.perf_counter() - t0
    ok = G == G_self and G.values[:6] == (1, 1, 2, 6, 20, 72) and elapsed < 1
    acceptance(4, f"mutual G == self-convolution G for n<=200, G(0..5)={G.values[:6]}, {elapsed:.2f}s < 1s", ok)


def test_5_generating_function(acceptance):
    t0 = time.perf_counter()
    G = rec.compute_g_self(200)
    zeta = series.zeta_coefficients(201)
    residual = series.verify_functional_equation(200)
    elapsed = time.perf_counter() - t0
    ok = list(zeta.coeffs) == list(G.values) and residual.is_zero() and residual.order == 200 and elapsed < 5
    acceptance(5, f"zeta coefficients == G(n) for n<=200, residual zero at order 200, {elapsed:.2f}s < 5s", ok)


def test_6_growth_constant(acceptance):
    t0 = time.perf_counter()
    r, growth = series.discriminant_root()
    residual = abs(1 - 4 * r - 4 * r * r)
    G = rec.compute_g_self(2000)
    ratio = rec.ratio_estimate(G, 2000)
    elapsed = time.perf_counter() - t0
    ok = (
        abs(r - (math.sqrt(2) - 1) / 2) < 1e-12
        and residual < 1e-12
        and abs(growth - 4.828427124746) < 1e-12
        and growth < 4.83
        and abs(ratio - (2 + 2 * math.sqrt(2))) <= 0.01
        and elapsed < 30
    )
    acceptance(
        6,
        f"root={r!r} residual={residual:.1e}, growth={growth!r} < 4.83, "
        f"G(2000)/G(1999)={ratio:.6f} within 0.01, {elapsed:.1f}s < 30s",
        ok,
    )


def test_7_lower_bound(acceptance):
    bound70 = rec.lambda_lower_bound(70, rec.A70)
    A = en.census(12, classify=False).table("A")
    lows = [rec.lambda_lower_bound(n, A[n]) for n in range(1, 13)]
    monotone = all(a <= b for a, b in zip(lows, lows[1:]))
    acceptance(7, f"A(70)^(1/70) >= {bound70!r} > 3.76049; n-th roots nondecreasing for n<=12", bound70 > 3.76049 and monotone)


def test_8_motzkin(acceptance):
    t0 = time.perf_counter()
    G = rec.compute_g_self(501)
    brute = all(motzkin.count_bicolored_paths(L, "bruteforce") == G[L + 1] for L in range(13))
    report = motzkin.verify_motzkin_identity(500, G)
    table = motzkin.path_table(500)
    dp = all(table[L][0] == G[L + 1] for L in range(501))
    elapsed = time.perf_counter() - t0
    acceptance(8, f"paths(L) == G(L+1): brute force L<=12, DP L<=500, {elapsed:.2f}s < 10s", brute and dp and report.passed and elapsed < 10)


def _concatenate(p, q):
    """Glue q's anchor just right of p's last cell; the classic A(m)A(n) <= A(m+n) map."""
    px, py = p.cells[-1]
    qx, qy = q.cells[0]
    dx, dy = px + 1 - qx, py - qy
    return canonicalize(list(p.cells) + [(x + dx, y + dy) for x, y in q.cells])


def test_9_invariant_suite(acceptance):
    @CASES
    @given(connected_cells(), st.data())
    def mirror(cells, data):
        p = canonicalize(cells)
        pair = MarkedPair(p, data.draw(st.integers(0, len(p) - 1)))
        assert satisfies(pair, MarkVariant.TYPE_B_LEFT) == satisfies(
            transform_pair(pair, Symmetry.FLIP_X), MarkVariant.TYPE_B_RIGHT
        )

    @CASES
    @given(connected_cells(max_size=8), connected_cells(max_size=8))
    def supermultiplicative(a, b):
        p, q = canonicalize(a), canonicalize(b)
        r = _concatenate(p, q)
        assert len(r) == len(p) + len(q)
        assert canonicalize(r.cells[: len(p)]) == p
        assert canonicalize(r.cells[len(p):]) == q

    @CASES
    @given(connected_cells(), st.integers(-100, 100), st.integers(-100, 100))
    def idempotent(cells, dx, dy):
        p = canonicalize(cells)
        assert canonicalize(p.cells) == p
        assert canonicalize({(x + dx, y + dy) for x, y in cells}) == p

    @CASES
    @given(st.lists(st.fractions(-50, 50, max_denominator=20), max_size=12), st.integers(1, 14))
    def sqrt_round_trip(tail, order):
        t = series.PowerSeries.of([1, *tail], order)
        s = t * t
        assert series.series_sqrt(s) == t
        root = series.series_sqrt(s)
        assert root * root == s

    for prop in (mirror, supermultiplicative, idempotent, sqrt_round_trip):
        prop()

    c = en.census(12)
    A = c.table("A")
    exhaustive = (
        all(c.type_b_right[n] == c.type_b_left[n] for n in range(1, 13))
        and all(A[m + n] >= A[m] * A[n] for m in range(1, 12) for n in range(1, 13 - m))
        and all(A[n] <= math.comb(3 * n, n - 1) for n in range(1, 13))
    )
    acceptance(
        9,
        "mirror, supermultiplicativity (concatenation injection), canonicalize idempotence, sqrt round trip: "
        "1000 random cases each; exhaustive mirror/supermultiplicativity/Eden sweeps for n<=12",
        exhaustive,
    )


def test_10_determinism(acceptance, tmp_path):
    payloads = {}
    codes = {}
    for k in (1, 4, 8):
        out = tmp_path / f"verify-{k}.json"
        codes[k] = run(["verify", "--max-n", "10", "--workers", str(k), "--format", "json", "--out", str(out), "--no-cache"])
        payloads[k] = out.read_bytes()
    same = payloads[1] == payloads[4] == payloads[8]
    acceptance(10, f"verify --max-n 10 payloads byte-identical for workers 1/4/8, exit codes {sorted(codes.values())}", same and set(codes.values()) == {0})
