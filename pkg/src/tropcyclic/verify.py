"""Self-check suites behind ``tropcyclic verify``.

Each suite is a list of named checks; a check returns ``(ok, detail)``.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .bounds import (
    alternating_pattern,
    attained_or_none,
    checkerboard_pattern,
    mcmullen_U,
    natural_lower_bound,
    natural_pattern,
    trop_upper_bound,
)
from .cyclic import SignedCyclicSpec, enumerate_extreme_rays, oracle_extreme_rays, ray_set
from .deform import deformed_member, lse_sandwich_check
from .linalg import IndexPair, cramer_determinants, cramer_solution, cyclic_matrix, sdet
from .paths import (
    LatticePath,
    count_allowed_paths,
    count_tropical_paths,
    enumerate_allowed_paths,
    enumerate_gale_subsets,
    enumerate_tropical_paths,
    gale_to_path,
    is_allowed,
    path_to_gale,
)
from .patterns import SignPattern
from .semiring import BOT, SignedScalar, Sign, balances, splus, stimes

__all__ = ["Check", "CheckResult", "SUITES", "run_suite", "growing_t"]


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    ok: bool
    seconds: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f"  {self.detail}" if self.detail else ""
        return f"{status}  {self.suite}/{self.name}  ({self.seconds:.2f}s){tail}"


Check = Callable[[], tuple[bool, str]]


def growing_t(p: int) -> tuple[int, ...]:
    """0, 3, 7, 12, ... (gaps 3, 4, 5, ...)."""
    t = [0]
    for k in range(1, p):
        t.append(t[-1] + k + 2)
    return tuple(t)


def _all_patterns(p: int, d: int):
    for code in range(1 << (p * d)):
        yield SignPattern.from_code(code, p, d)


def _random_scalar(rng: random.Random) -> SignedScalar:
    kind = rng.choice([Sign.POS, Sign.NEG, Sign.BAL, Sign.ZERO])
    if kind is Sign.ZERO:
        return SignedScalar(BOT, Sign.ZERO)
    return SignedScalar(rng.randint(-4, 4), kind)


# semiring


def _semiring_laws() -> tuple[bool, str]:
    rng = random.Random(11)
    for _ in range(5000):
        a, b, c = (_random_scalar(rng) for _ in range(3))
        if splus(a, b) != splus(b, a) or stimes(a, b) != stimes(b, a):
            return False, f"commutativity fails on {a}, {b}"
        if splus(splus(a, b), c) != splus(a, splus(b, c)):
            return False, f"sum associativity fails on {a}, {b}, {c}"
        if stimes(stimes(a, b), c) != stimes(a, stimes(b, c)):
            return False, f"product associativity fails on {a}, {b}, {c}"
        if stimes(a, splus(b, c)) != splus(stimes(a, b), stimes(a, c)):
            return False, f"distributivity fails on {a}, {b}, {c}"
    return True, "5000 random triples"


def _balance_laws() -> tuple[bool, str]:
    rng = random.Random(12)
    for _ in range(5000):
        a, b = _random_scalar(rng), _random_scalar(rng)
        if not balances(a, a):
            return False, f"{a} does not balance itself"
        if balances(a, b) != balances(b, a):
            return False, f"balance is not symmetric on {a}, {b}"
        if a.is_signed and b.is_signed and balances(a, b) and a != b:
            return False, f"distinct signed {a}, {b} balance"
    return True, "5000 random pairs"


# cramer


def _random_pair(rng: random.Random, p: int, d: int, k: int) -> IndexPair:
    I = sorted(rng.sample(range(1, p + 1), k))
    J = sorted(rng.sample(range(1, d + 1), k + 1))
    return IndexPair(tuple(I), tuple(J))


def _cramer_vs_sdet() -> tuple[bool, str]:
    rng = random.Random(21)
    n = 0
    for _ in range(300):
        p, d = rng.randint(1, 6), rng.randint(2, 7)
        k = rng.randint(1, min(p, d - 1))
        pattern = SignPattern.from_code(rng.getrandbits(p * d), p, d)
        t = growing_t(p) if rng.random() < 0.5 else tuple(range(p))
        ij = _random_pair(rng, p, d, k)
        C = cyclic_matrix(pattern, t)
        rows = [i - 1 for i in ij.I]
        closed = cramer_determinants(pattern, t, ij)
        for r, D in enumerate(closed):
            cols = [j - 1 for j in ij.J if j != ij.J[r]]
            if sdet(C.submatrix(rows, cols)) != D:
                return False, f"D_{r + 1} mismatch for {pattern!r}, t={t}, {ij}"
        n += 1
    return True, f"{n} random systems"


def _cramer_solutions() -> tuple[bool, str]:
    rng = random.Random(22)
    for _ in range(500):
        p, d = rng.randint(1, 6), rng.randint(2, 7)
        k = rng.randint(0, min(p, d - 1))
        pattern = SignPattern.from_code(rng.getrandbits(p * d), p, d)
        t = growing_t(p)
        ij = _random_pair(rng, p, d, k)
        sol = cramer_solution(pattern, t, ij)
        opposite = all(pattern[i, ij.J[r]] * pattern[i, ij.J[r + 1]] == -1 for r, i in enumerate(ij.I))
        if sol.feasible != opposite:
            return False, f"feasibility wrong for {pattern!r}, {ij}"
        if not sol.feasible:
            continue
        # each row of C(I, J) must attain its maximum on both signs
        for i in ij.I:
            pos = max(((j - 1) * t[i - 1] + z for j, z in zip(ij.J, sol.z) if pattern[i, j] > 0), default=BOT)
            neg = max(((j - 1) * t[i - 1] + z for j, z in zip(ij.J, sol.z) if pattern[i, j] < 0), default=BOT)
            if pos != neg:
                return False, f"row {i} not balanced for {pattern!r}, {ij}, z={sol.z}"
    return True, "500 random systems"


# oracle


def _oracle_exhaustive() -> tuple[bool, str]:
    n = 0
    for p in range(1, 4):
        for d in range(1, 5):
            for pattern in _all_patterns(p, d):
                for t in (tuple(range(p)), growing_t(p)):
                    spec = SignedCyclicSpec(pattern, t)
                    if ray_set(enumerate_extreme_rays(spec)) != ray_set(oracle_extreme_rays(spec)):
                        return False, f"mismatch on {pattern!r}, t={t}"
                    n += 1
    return True, f"{n} specs"


def _oracle_random() -> tuple[bool, str]:
    rng = random.Random(31)
    for _ in range(200):
        p, d = rng.randint(1, 5), rng.randint(1, 5)
        pattern = SignPattern.from_code(rng.getrandbits(p * d), p, d)
        for t in (tuple(range(p)), growing_t(p)):
            spec = SignedCyclicSpec(pattern, t)
            if ray_set(enumerate_extreme_rays(spec)) != ray_set(oracle_extreme_rays(spec)):
                return False, f"mismatch on {pattern!r}, t={t}"
    return True, "200 random patterns, 2 t-vectors each"


# paths


def _dp_vs_enumeration() -> tuple[bool, str]:
    n = 0
    for p in range(1, 13):
        for d in range(1, 13 // p + 1):
            if p * d > 12:
                continue
            for pattern in _all_patterns(p, d):
                if count_tropical_paths(pattern) != len(enumerate_tropical_paths(pattern)):
                    return False, f"tropical count mismatch on {pattern!r}"
                n += 1
    rng = random.Random(41)
    for _ in range(1000):
        p = rng.randint(1, 30)
        d = rng.randint(1, 30 // p)
        pattern = SignPattern.from_code(rng.getrandbits(p * d), p, d)
        if count_tropical_paths(pattern) != len(enumerate_tropical_paths(pattern)):
            return False, f"tropical count mismatch on {pattern!r}"
        if count_allowed_paths(pattern) != len(enumerate_allowed_paths(pattern)):
            return False, f"allowed count mismatch on {pattern!r}"
    return True, f"{n} exhaustive + 1000 random patterns"


# gale


def _gale_counts() -> tuple[bool, str]:
    for n in range(1, 15):
        for k in range(0, n):
            if len(enumerate_gale_subsets(n, k)) != mcmullen_U(n, k):
                return False, f"n={n}, k={k}"
    return True, "n <= 14, 0 <= k < n"


def _alternating_counts() -> tuple[bool, str]:
    for p in range(1, 14):
        for d in range(1, 15 - p):
            if count_allowed_paths(alternating_pattern(p, d)) != mcmullen_U(p + d, d - 1):
                return False, f"p={p}, d={d}"
    return True, "p + d <= 14"


def _gale_round_trip() -> tuple[bool, str]:
    n = 0
    for p in range(1, 12):
        for d in range(1, 13 - p):
            pattern = alternating_pattern(p, d)
            # subsets to paths works at every size
            for Q in enumerate_gale_subsets(p + d, d - 1):
                q = gale_to_path(Q, p, d)
                if not is_allowed(q, pattern) or path_to_gale(q, p, d) != Q:
                    return False, f"round trip fails on p={p}, d={d}, Q={Q.Q}"
                n += 1
            for q in enumerate_allowed_paths(pattern):
                Q = path_to_gale(q, p, d)
                if not Q.is_even() or gale_to_path(Q, p, d) != q:
                    return False, f"round trip fails on p={p}, d={d}, {q}"
                n += 1
    return True, f"{n} round trips"


def _gale_worked_example() -> tuple[bool, str]:
    path = LatticePath((1, 2, 4, 5), (1, 4, 5, 6, 9))
    Q = path_to_gale(path, 7, 9)
    expected = (2, 3, 7, 8, 10, 11, 13, 14)
    return Q.Q == expected, f"Q = {Q.Q}"


# bounds


def _random_sandwich() -> tuple[bool, str]:
    rng = np.random.default_rng(51)
    from .paths import count_paths_signs

    for p in range(1, 9):
        for d in range(1, 9):
            negs = rng.random((1000, p, d)) < 0.5
            ntrop = count_paths_signs(negs)
            nclass = count_paths_signs(negs, classical=True)
            if np.any(ntrop > trop_upper_bound(p, d)):
                return False, f"trop bound fails at p={p}, d={d}"
            if np.any(ntrop > nclass) or np.any(nclass > mcmullen_U(p + d, d - 1)):
                return False, f"ntrop <= nclass <= U fails at p={p}, d={d}"
    return True, "1000 random patterns per size up to 8 x 8"


def _named_patterns() -> tuple[bool, str]:
    if count_tropical_paths(natural_pattern(14, 7)) < natural_lower_bound(14, 7):
        return False, "natural pattern (14, 7)"
    for p, d in [(1, 3), (1, 5), (2, 5), (2, 7), (3, 7)]:
        if count_tropical_paths(checkerboard_pattern(p, d)) < mcmullen_U(d, d - p - 1):
            return False, f"checkerboard ({p}, {d})"
    covered = 0
    for p in range(1, 12):
        for d in range(1, 13 - p):
            pattern = attained_or_none(p, d)
            if pattern is None:
                continue
            covered += 1
            if count_tropical_paths(pattern) != mcmullen_U(p + d, d - 1):
                return False, f"attained ({p}, {d})"
    return True, f"{covered} attained cases"


# deform


def _lse() -> tuple[bool, str]:
    rng = np.random.default_rng(61)
    for _ in range(10_000):
        d = int(rng.integers(1, 9))
        v = [BOT if rng.random() < 0.2 else int(x) for x in rng.integers(-50, 50, d)]
        if all(x == BOT for x in v):
            v[0] = 0
        beta = float(rng.choice([0.5, 1.0, 10.0]))
        if not lse_sandwich_check(v, beta):
            return False, f"v={v}, beta={beta}"
    return True, "10000 random vectors"


def _deformed_rays() -> tuple[bool, str]:
    specs = [SignedCyclicSpec(SignPattern.from_string("+-+/+-+")),
             SignedCyclicSpec(SignPattern.from_function(5, 3, lambda i, j: j == 2))]
    for spec in specs:
        for x in enumerate_extreme_rays(spec):
            for beta in (1, 4, 16):
                if not deformed_member(spec, x, beta):
                    return False, f"ray {x}, beta={beta}"
    return True, "rays of both small cones, beta in {1, 4, 16}"


SUITES: dict[str, list[tuple[str, Check]]] = {
    "semiring": [("laws", _semiring_laws), ("balance", _balance_laws)],
    "cramer": [("closed-form-vs-sdet", _cramer_vs_sdet), ("positive-solution", _cramer_solutions)],
    "paths": [("dp-vs-enumeration", _dp_vs_enumeration)],
    "oracle": [("exhaustive", _oracle_exhaustive), ("random", _oracle_random)],
    "gale": [("counts", _gale_counts), ("alternating", _alternating_counts),
             ("round-trip", _gale_round_trip), ("worked-example", _gale_worked_example)],
    "bounds": [("sandwich", _random_sandwich), ("named-patterns", _named_patterns)],
    "deform": [("lse-sandwich", _lse), ("deformed-rays", _deformed_rays)],
}


def run_suite(name: str) -> list[CheckResult]:
    if name == "all":
        return [r for suite in SUITES for r in run_suite(suite)]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    out = []
    for check_name, check in SUITES[name]:
        t0 = time.perf_counter()
        try:
            ok, detail = check()
        except Exception as exc:  # a crashing check is a failing check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(name, check_name, ok, time.perf_counter() - t0, detail))
    return out
