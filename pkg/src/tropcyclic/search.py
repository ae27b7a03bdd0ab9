"""Maximizing the number of tropically allowed paths over sign patterns.

Exhaustive mode runs the batched counting DP over every pd-bit pattern code.
Random mode scores seeded random patterns and hill-climbs from the best ones
and from the named patterns; its result is only a lower bound.
"""

from __future__ import annotations

import heapq
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import GuardError
from .bounds import (
    alternating_pattern,
    attained_or_none,
    checkerboard_pattern,
    mcmullen_U,
    natural_pattern,
)
from .paths import count_paths_batch, count_paths_signs, count_tropical_paths
from .patterns import SignPattern

__all__ = [
    "SearchResult",
    "CountTable",
    "TableCell",
    "max_ntrop",
    "emit_table",
    "reverse_codes",
    "MAX_EXHAUSTIVE_CELLS",
    "CHUNK",
]

MAX_EXHAUSTIVE_CELLS = 24
CHUNK = 1 << 18
DEFAULT_RANDOM_BUDGET = 20_000


@dataclass
class SearchResult:
    p: int
    d: int
    max_count: int
    witnesses: list[SignPattern]
    patterns_scanned: int
    elapsed: float
    exhaustive: bool

    def witness_bitstrings(self) -> list[str]:
        return [w.bitstring() for w in self.witnesses]


def reverse_codes(codes: np.ndarray, n_bits: int) -> np.ndarray:
    """Bit reversal within ``n_bits``: the code of the 180 degree rotated pattern."""
    codes = np.asarray(codes, dtype=np.uint64)
    out = np.zeros_like(codes)
    one = np.uint64(1)
    for k in range(n_bits):
        out |= ((codes >> np.uint64(k)) & one) << np.uint64(n_bits - 1 - k)
    return out


class _Best:
    """Running maximum with the ``w`` least codes attaining it."""

    def __init__(self, w: int):
        self.w = w
        self.value = -1
        self.codes: list[int] = []

    def offer(self, value: int, codes) -> None:
        if value < self.value:
            return
        if value > self.value:
            self.value, self.codes = value, []
        self.codes = heapq.nsmallest(self.w, set(self.codes) | set(int(c) for c in codes))

    def merge(self, other: _Best) -> None:
        self.offer(other.value, other.codes)


def _scan_range(lo: int, hi: int, p: int, d: int, w: int, symmetry: bool) -> tuple[_Best, int]:
    best = _Best(w)
    n = p * d
    scanned = 0
    for start in range(lo, hi, CHUNK):
        codes = np.arange(start, min(start + CHUNK, hi), dtype=np.uint64)
        rev = None
        if symmetry:
            rev = reverse_codes(codes, n)
            keep = codes <= rev
            codes, rev = codes[keep], rev[keep]
        counts = count_paths_batch(codes, p, d)
        scanned += len(codes)
        top = int(counts.max())
        hit = counts == top
        winners = codes[hit]
        if symmetry:
            winners = np.unique(np.concatenate([winners, rev[hit]]))
        best.offer(top, winners[:w].tolist())
    return best, scanned


def _exhaustive(p: int, d: int, threads: int, w: int, symmetry: bool) -> tuple[_Best, int]:
    total = 1 << (p * d)
    n_parts = max(1, min(threads * 4, -(-total // CHUNK)))
    edges = [total * k // n_parts for k in range(n_parts + 1)]
    ranges = list(zip(edges, edges[1:]))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda r: _scan_range(r[0], r[1], p, d, w, symmetry), ranges))
    else:
        parts = [_scan_range(lo, hi, p, d, w, symmetry) for lo, hi in ranges]
    best = _Best(w)
    scanned = 0
    for part, n in parts:
        best.merge(part)
        scanned += n
    return best, scanned


def _seed_patterns(p: int, d: int) -> list[SignPattern]:
    seeds = [alternating_pattern(p, d), SignPattern.from_function(p, d, lambda i, j: j == 2)]
    for board in (checkerboard_pattern(p, d).signs, -checkerboard_pattern(p, d).signs):
        for corners in range(4):
            arr = board.copy()
            if corners & 1:
                arr[0, 0] = 1
            if corners & 2:
                arr[-1, -1] = 1
            seeds.append(SignPattern(arr))
    if p >= 2 * d:
        seeds.append(natural_pattern(p, d))
    attained = attained_or_none(p, d)
    if attained is not None:
        seeds.append(attained)
    return seeds


def _hill_climb(neg: np.ndarray, score: int, rng: np.random.Generator, rounds: int) -> tuple[np.ndarray, int, int]:
    """Best single-cell flips, batched; stops at a local maximum or after ``rounds``."""
    p, d = neg.shape
    used = 0
    flips = np.eye(p * d, dtype=bool).reshape(p * d, p, d)
    for _ in range(rounds):
        neigh = neg[None] ^ flips
        counts = count_paths_signs(neigh)
        used += len(counts)
        top = int(counts.max())
        if top < score:
            break
        candidates = np.flatnonzero(counts == top)
        sideways = top == score
        # a sideways move helps escape plateaus, but only for a while
        pick = rng.choice(candidates) if sideways else candidates[0]
        neg, score = neigh[pick], top
        if sideways and rng.random() < 0.2:
            break
    return neg, score, used


def _random_search(p: int, d: int, budget: int, seed: int, w: int) -> tuple[int, list[SignPattern], int]:
    rng = np.random.default_rng(seed)
    pool: dict[bytes, tuple[int, np.ndarray]] = {}

    def record(neg, score):
        pool[neg.tobytes()] = (score, neg)

    scanned = 0
    for s in _seed_patterns(p, d):
        neg = s.signs < 0
        record(neg, count_tropical_paths(s))
        scanned += 1
    sample = max(1, budget // 2)
    for start in range(0, sample, 4096):
        n = min(4096, sample - start)
        negs = rng.random((n, p, d)) < rng.uniform(0.2, 0.8)
        counts = count_paths_signs(negs)
        scanned += n
        for k in np.argsort(-counts, kind="stable")[:8]:
            record(negs[k], int(counts[k]))
    starts = sorted(pool.values(), key=lambda v: -v[0])
    k = 0
    while scanned < budget and starts:
        score, neg = starts[k % len(starts)]
        neg, score, used = _hill_climb(neg.copy(), score, rng, rounds=4 * p * d)
        scanned += used
        record(neg, score)
        k += 1
        if k % len(starts) == 0:
            starts = sorted(pool.values(), key=lambda v: -v[0])[: max(4, len(starts) // 2)]
            # perturb the current best to restart
            base = starts[0][1].copy()
            base ^= rng.random(base.shape) < 0.1
            starts.append((count_tropical_paths(SignPattern(np.where(base, -1, 1))), base))
    top = max(v[0] for v in pool.values())
    winners = [SignPattern(np.where(neg, -1, 1)) for score, neg in pool.values() if score == top]
    winners.sort(key=lambda s: s.bitstring())
    return top, winners[:w], scanned


def max_ntrop(p: int, d: int, mode: str = "auto", budget: int | None = None, threads: int = 1,
              witnesses: int = 1, seed: int = 0, symmetry: bool = True,
              exhaustive_limit: int = MAX_EXHAUSTIVE_CELLS) -> SearchResult:
    """Largest path count over p x d patterns.

    ``mode`` is ``"exhaustive"``, ``"random"`` or ``"auto"`` (exhaustive when
    ``p*d <= exhaustive_limit``).  Exhaustive results are exact and do not
    depend on ``threads``; random results are lower bounds.
    """
    if p < 1 or d < 1:
        raise ValueError("p and d must be positive")
    if witnesses < 1:
        raise ValueError("need at least one witness")
    if mode == "auto":
        mode = "exhaustive" if p * d <= exhaustive_limit else "random"
    t0 = time.perf_counter()
    if mode == "exhaustive":
        if p * d > exhaustive_limit:
            raise GuardError(f"exhaustive search limited to p*d <= {exhaustive_limit}, got {p * d}")
        best, scanned = _exhaustive(p, d, max(1, threads), witnesses, symmetry)
        wit = [SignPattern.from_code(c, p, d) for c in best.codes]
        top, exhaustive = best.value, True
    elif mode == "random":
        top, wit, scanned = _random_search(p, d, budget or DEFAULT_RANDOM_BUDGET, seed, witnesses)
        exhaustive = False
    else:
        raise ValueError(f"unknown search mode {mode!r}")
    for w in wit:
        if count_tropical_paths(w) != top:
            raise AssertionError(f"witness {w.bitstring()} does not reach {top}")
    return SearchResult(p, d, top, wit, scanned, time.perf_counter() - t0, exhaustive)


@dataclass
class TableCell:
    p: int
    d: int
    lower: int | None
    upper: int
    mode: str
    witness: str = ""

    @property
    def exact(self) -> bool:
        return self.mode == "exhaustive" or self.lower == self.upper

    def display(self) -> str:
        if self.lower is None:
            return str(self.upper)
        return str(self.upper) if self.lower == self.upper else f"{self.lower} {self.upper}"


@dataclass
class CountTable:
    cells: list[TableCell] = field(default_factory=list)

    def cell(self, p: int, d: int) -> TableCell:
        for c in self.cells:
            if (c.p, c.d) == (p, d):
                return c
        raise KeyError((p, d))

    def to_tsv(self) -> str:
        lines = ["p\td\tlower\tupper\texact\twitness\tmode"]
        for c in self.cells:
            lower = "" if c.lower is None else str(c.lower)
            lines.append(f"{c.p}\t{c.d}\t{lower}\t{c.upper}\t{str(c.exact).lower()}\t{c.witness}\t{c.mode}")
        return "\n".join(lines) + "\n"

    def to_json(self, indent: int | None = 2) -> str:
        rows = [{"p": c.p, "d": c.d, "lower": c.lower, "upper": c.upper, "exact": c.exact,
                 "witness": c.witness, "mode": c.mode} for c in self.cells]
        return json.dumps(rows, indent=indent)

    def grid(self) -> str:
        """Rows indexed by d, columns by p, like the usual table layout."""
        ps = sorted({c.p for c in self.cells})
        ds = sorted({c.d for c in self.cells})
        head = "d\\p\t" + "\t".join(str(p) for p in ps)
        body = [str(d) + "\t" + "\t".join(self.cell(p, d).display() for p in ps) for d in ds]
        return "\n".join([head] + body) + "\n"


def emit_table(p_range, d_range, mode: str = "auto", threads: int = 1, budget: int | None = None,
               seed: int = 0, exhaustive_limit: int = MAX_EXHAUSTIVE_CELLS) -> CountTable:
    """Interval ``[max path count, U(p+d, d-1)]`` for each (p, d).

    ``mode="formula-only"`` skips the search and fills upper bounds only.
    """
    table = CountTable()
    for d in d_range:
        for p in p_range:
            upper = mcmullen_U(p + d, d - 1)
            if mode == "formula-only":
                table.cells.append(TableCell(p, d, None, upper, "formula-only"))
                continue
            res = max_ntrop(p, d, mode=mode, budget=budget, threads=threads, seed=seed,
                            exhaustive_limit=exhaustive_limit)
            cell_mode = "exhaustive" if res.exhaustive else "random"
            table.cells.append(TableCell(p, d, res.max_count, upper, cell_mode, res.witnesses[0].bitstring()))
    return table
