import logging
import time
from typing import Callable, Dict

import numpy as np

from src.prmweights.combinatorics import appendix
from src.prmweights.combinatorics.binomial import binom
from src.prmweights.combinatorics.formulas import (
    H,
    H_prime,
    H_prime_piecewise_m2,
    diff_ws,
    f_routes,
    profile,
    u_top_range,
)
from src.prmweights.combinatorics.omega import (
    iter_omega,
    omega_prime_rank,
    omega_prime_size,
    omega_prime_unrank,
    omega_rank,
    omega_size,
    omega_unrank,
)
from src.prmweights.constructions.builders import build_ci_grid, build_lower_bound_subspace
from src.prmweights.gf.field import field_new, is_prime
from src.prmweights.geometry.hilbert import cayley_bacharach_check, g_X, hilbert_ci_formula, residual_check
from src.prmweights.geometry.points import PointSet, enumerate_projective_points, grid_points
from src.prmweights.search.boguslavsky import boguslavsky_sweep
from src.prmweights.state.state import SuiteResult, VerificationState
from src.prmweights.utils.errors import PRMError

logger = logging.getLogger(__name__)


def next_prime(n: int) -> int:
    while not is_prime(n):
        n += 1
    return n


def _limit(state: VerificationState, key: str, default: int) -> int:
    return int(state.limits.get(key, default))


# =============================================================================
#               1. Rank / unrank bijection and the rank shift
# =============================================================================

def rank_roundtrip(state: VerificationState) -> SuiteResult:
    res = SuiteResult(name="rank-roundtrip")
    for d in range(1, _limit(state, "d_max", 8) + 1):
        for m in range(1, _limit(state, "m_max", 5) + 1):
            total = omega_size(d, m)
            prev = None
            for r, t in enumerate(iter_omega(d, m), start=1):
                res.checked += 1
                u = omega_unrank(d, m, r)
                if u != t or omega_rank(u) != r:
                    res.fail(f"Omega({d},{m}) rank {r}: unrank {u.entries}, listed {t.entries}")
                if prev is not None and not prev.entries > u.entries:
                    res.fail(f"Omega({d},{m}): rank {r - 1} is not lex-larger than rank {r}")
                prev = u
                try:
                    p = profile(d, m, r)
                except PRMError as exc:
                    res.fail(f"profile({d},{m},{r}): {exc}")
                    continue
                if r >= m and p.s is not None and omega_prime_unrank(d, m, r - (m - 1)) != omega_unrank(d, m, p.s):
                    res.fail(f"rank shift fails at d={d} m={m} r={r}")
            for rp in range(1, omega_prime_size(d, m) + 1):
                res.checked += 1
                t = omega_prime_unrank(d, m, rp)
                if not t.in_omega_prime or omega_prime_rank(t) != rp:
                    res.fail(f"Omega'({d},{m}) rank {rp} does not round-trip")
                if rp > 1 and not omega_prime_unrank(d, m, rp - 1).entries > t.entries:
                    res.fail(f"Omega'({d},{m}): rank {rp - 1} is not lex-larger than rank {rp}")
            if total != sum(1 for _ in iter_omega(d, m)):
                res.fail(f"|Omega({d},{m})| != C(m+d,d)")
    return res


# =============================================================================
#               2. Formula identities
# =============================================================================

def f_route_agreement(state: VerificationState) -> SuiteResult:
    res = SuiteResult(name="f-routes")
    d_max, m_max = _limit(state, "d_max", 8), _limit(state, "m_max", 5)
    for d in range(1, d_max + 1):
        for m in range(1, m_max + 1):
            for q in range(d + 1, d + 5):
                for r in range(1, omega_size(d, m) + 1):
                    res.checked += 1
                    a, b = f_routes(d, m, q, r)
                    if a != b:
                        res.fail(f"f_{r}({d},{m};{q}): {a} vs {b}")
            for r in range(max(m, omega_size(d, m) - d), omega_size(d, m) + 1):
                res.checked += 1
                try:
                    u_top_range(d, m, r)
                except PRMError as exc:
                    res.fail(str(exc))
    for d in range(1, _limit(state, "piecewise_d_max", 12) + 1):
        for r in range(2, binom(d + 2, 2) + 1):
            res.checked += 1
            try:
                H_prime_piecewise_m2(d, r)
            except PRMError as exc:
                res.fail(str(exc))
    return res


def hprime_le_h(state: VerificationState) -> SuiteResult:
    res = SuiteResult(name="hprime-le-h")
    for d in range(1, _limit(state, "d_max", 8) + 1):
        for m in range(1, _limit(state, "m_max", 5) + 1):
            for r in range(m, omega_size(d, m) + 1):
                hp = H_prime(d, m, r - (m - 1))
                for q in range(d + 1, d + 5):
                    res.checked += 1
                    h = H(d, m, q, r)
                    if hp > h:
                        res.fail(f"H'_{r - m + 1}({d},{m})={hp} > H_{r}({d},{m};{q})={h}")
    return res


def appendix_inequalities(state: VerificationState) -> SuiteResult:
    res = SuiteResult(name="appendix")
    top = _limit(state, "sweep_max", 12)

    def check(label, pair):
        res.checked += 1
        lhs, rhs = pair
        if lhs > rhs:
            res.fail(f"{label}: {lhs} > {rhs}")

    for d in range(1, top + 1):
        for a in range(1, top + 1):
            for b in range(1, top + 1):
                check(f"power sum d={d} a={a} b={b}", appendix.power_sum_bound(d, a, b))
                for c in range(1, min(a, b) + 1):
                    check(f"power sum minus d={d} a={a} b={b} c={c}", appendix.power_sum_minus_bound(d, a, b, c))
        for k in range(1, top + 1):
            for beta in range(1, top + 1):
                check(f"scaled gap d={d} k={k} beta={beta}", appendix.scaled_gap_bound(d, k, beta))
    for d in range(1, 17):
        for k in range(1, 17):
            check(f"power gap d={d} k={k}", appendix.power_gap_bound(d, k))

    d_max, m_max = _limit(state, "diff_d_max", 6), _limit(state, "diff_m_max", 4)
    for d in range(1, d_max + 1):
        for m in range(1, m_max + 1):
            for s in range(1, omega_size(d, m) + 1):
                t = omega_unrank(d, m, s)
                k = t.last_nonzero_head
                if k is not None:
                    for j in range(1, m + 2 - k):
                        res.checked += 1
                        ident = diff_ws(d, m, s, j)
                        if not ident.holds:
                            res.fail(f"difference identity d={d} m={m} s={s} j={j}: {ident.lhs} vs {ident.rhs}")
                if t.first_nonzero < m and s + (m - t.first_nonzero) <= omega_size(d, m):
                    check(f"shift drop d={d} m={m} s={s}", appendix.shift_drop_bound(d, m, s))
            for c in range(1, d):
                for r in range(1, omega_size(d - c, m) + 1):
                    check(f"degree shift d={d} m={m} c={c} r={r}", appendix.degree_shift_bound(d, m, c, r, d + 1))
    return res


# =============================================================================
#               3. Hilbert functions of reduced grids
# =============================================================================

def noether(state: VerificationState) -> SuiteResult:
    res = SuiteResult(name="noether")
    top = _limit(state, "ab_max", 5)
    for a in range(1, top + 1):
        for b in range(1, top + 1):
            field = field_new(next_prime(a + b))
            _, _, gamma = build_ci_grid(range(a), range(b), field)
            for k in range(0, a + b + 1):
                res.checked += 1
                by_rank = len(gamma) - g_X(gamma, k)
                closed = hilbert_ci_formula(a, b, k)
                if by_rank != closed:
                    res.fail(f"a={a} b={b} k={k}: rank gives {by_rank}, closed form {closed}")
    return res


def cayley_bacharach(state: VerificationState) -> SuiteResult:
    res = SuiteResult(name="cayley-bacharach")
    rng = np.random.default_rng(state.seed)
    top = _limit(state, "ab_max", 5)
    for _ in range(_limit(state, "instances", 200)):
        a, b = (int(v) for v in rng.integers(1, top + 1, size=2))
        if a + b < 3:
            b = 2
        s = a + b - 3
        field = field_new(next_prime(max(a, b, 2)))
        _, _, gamma = build_ci_grid(range(a), range(b), field)
        keep = rng.random(len(gamma)) < rng.random()
        gamma_prime = gamma.subset(np.nonzero(keep)[0].tolist())
        k = int(rng.integers(max(a, b) - 2, s + 1))
        res.checked += 1
        cb = cayley_bacharach_check(gamma, gamma_prime, k, a, b)
        if not cb.equal:
            res.fail(f"a={a} b={b} k={k} |G'|={len(gamma_prime)}: {cb.lhs} vs {cb.rhs}")
        rc = residual_check(gamma, gamma_prime, k, a, b)
        if not rc.equal:
            res.fail(f"residual a={a} b={b} k={k} |G'|={len(gamma_prime)}: {rc.lhs} vs {rc.rhs}")
    return res


def _sample(rng, pool: PointSet, size: int) -> PointSet:
    size = min(size, len(pool))
    return pool.subset(sorted(rng.choice(len(pool), size=size, replace=False).tolist()))


def corollary42(state: VerificationState) -> SuiteResult:
    res = SuiteResult(name="corollary42")
    rng = np.random.default_rng(state.seed)
    for d in range(1, _limit(state, "d_max", 6) + 1):
        for m in range(1, _limit(state, "m_max", 3) + 1):
            pool = enumerate_projective_points(m, field_new(next_prime(d + 1)))
            for _ in range(_limit(state, "samples", 100)):
                X = _sample(rng, pool, int(rng.integers(0, d + 2)))
                res.checked += 1
                if g_X(X, d) != 0:
                    res.fail(f"d={d} m={m} |X|={len(X)}: g_X(d)={g_X(X, d)}")
    return res


def _grid(d: int) -> PointSet:
    field = field_new(next_prime(2 * d))
    return grid_points([list(range(d)), list(range(d))], field)


def lemma52(state: VerificationState) -> SuiteResult:
    res = SuiteResult(name="lemma52")
    rng = np.random.default_rng(state.seed)
    for d in range(1, _limit(state, "d_max", 6) + 1):
        grid = _grid(d)
        for _ in range(_limit(state, "samples", 50)):
            X = _sample(rng, grid, int(rng.integers(0, 3 * d)))
            res.checked += 1
            if g_X(X, d) != 0:
                res.fail(f"d={d} |X|={len(X)}: g_X(d)={g_X(X, d)}")
    return res


def prop54(state: VerificationState) -> SuiteResult:
    res = SuiteResult(name="prop54")
    rng = np.random.default_rng(state.seed)
    for d in range(3, _limit(state, "d_max", 6) + 1):
        grid = _grid(d)
        for t in range(3, d + 1):
            for _ in range(_limit(state, "samples", 20)):
                X = _sample(rng, grid, int(rng.integers(0, t * d + d - t + 2)))
                res.checked += 1
                g = g_X(X, d)
                if g > binom(t - 1, 2):
                    res.fail(f"d={d} t={t} |X|={len(X)}: g_X(d)={g} > {binom(t - 1, 2)}")
    return res


# =============================================================================
#               4. Constructions and the plane degree bound
# =============================================================================

def construction(state: VerificationState) -> SuiteResult:
    res = SuiteResult(name="construction")
    for d in range(1, _limit(state, "d_max", 4) + 1):
        field = field_new(next_prime(d + 1))
        for m in range(1, _limit(state, "m_max", 3) + 1):
            for r in range(m, omega_size(d, m) + 1):
                res.checked += 1
                try:
                    report = build_lower_bound_subspace(d, m, r, field)
                except PRMError as exc:
                    res.fail(f"d={d} m={m} r={r}: {exc}")
                    continue
                if not report.ok:
                    res.fail(
                        f"d={d} m={m} r={r}: dim {report.verified_dim}, count {report.verified_count}, "
                        f"claim {report.claimed_lower_bound}"
                    )
    return res


def boguslavsky(state: VerificationState) -> SuiteResult:
    res = SuiteResult(name="boguslavsky")
    d, p = _limit(state, "bog_d", 2), _limit(state, "bog_q", 3)
    tally = boguslavsky_sweep(d, field_new(p), range(1, binom(d + 2, 2) + 1))
    res.checked = sum(tally.values())
    if tally["false"]:
        res.fail(f"{tally['false']} subspaces violate the degree bound (d={d}, q={p})")
    logger.info("degree bound verdicts: %s", tally)
    return res


SUITES: Dict[str, Callable[[VerificationState], SuiteResult]] = {
    "rank-roundtrip": rank_roundtrip,
    "f-routes": f_route_agreement,
    "hprime-le-h": hprime_le_h,
    "appendix": appendix_inequalities,
    "noether": noether,
    "cayley-bacharach": cayley_bacharach,
    "corollary42": corollary42,
    "lemma52": lemma52,
    "prop54": prop54,
    "construction": construction,
    "boguslavsky": boguslavsky,
}


def run_suite(name: str, state: VerificationState) -> SuiteResult:
    logger.info("running suite %s", name)
    start = time.perf_counter()
    try:
        result = SUITES[name](state)
    except PRMError as exc:
        result = SuiteResult(name=name)
        result.fail(f"{type(exc).__name__}: {exc}")
    logger.info("suite %s: %s (%d checks, %.2fs)", name, "pass" if result.passed else "FAIL",
                result.checked, time.perf_counter() - start)
    return result
