"""Lattice paths over a sign pattern and their counting automaton.

A lattice path goes from row 1 down to row p of a p x d pattern, moving down or
right.  It is stored as ``I`` (rows of its horizontal segments) and ``J``
(columns of its vertical segments), both 1-based.  As a word over ``{D, R}`` it
starts at the dummy position (0, 1), so it has exactly ``p + 1`` letters ``D``.

Tropical allowedness is defined by running the five-state automaton below on
the path word, reading the sign of the current cell before each move.  The
sign conditions on segments (:func:`satisfies_conditions`) are an equivalent
description for paths with at least one horizontal segment.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import GuardError
from .linalg import IndexPair
from .patterns import SignPattern

__all__ = [
    "LatticePath",
    "GaleSubset",
    "INITIAL_STATE",
    "FINAL_STATES",
    "TRANSITIONS",
    "CLASSICAL_EXTRA",
    "transitions",
    "automaton_is_unambiguous",
    "run_automaton",
    "is_tropically_allowed",
    "is_allowed",
    "satisfies_conditions",
    "candidate_paths",
    "enumerate_tropical_paths",
    "enumerate_allowed_paths",
    "count_tropical_paths",
    "count_allowed_paths",
    "count_paths_batch",
    "count_paths_signs",
    "reverse_path_type_counts",
    "path_type",
    "is_gale_even",
    "enumerate_gale_subsets",
    "path_to_gale",
    "gale_to_path",
    "render_path",
    "parse_path_art",
    "MAX_ENUMERATION_CANDIDATES",
    "candidate_count",
    "MAX_GALE_N",
    "COUNT_LIMIT",
]

MAX_ENUMERATION_CANDIDATES = 250_000
MAX_GALE_N = 20
COUNT_LIMIT = 2**64 - 1


class LatticePath(IndexPair):
    """A monotone staircase path, also usable wherever an :class:`IndexPair` is."""

    def word(self, p: int) -> str:
        I, J = self.I, self.J
        parts = ["R" * (J[0] - 1)]
        row = 0
        for r, i in enumerate(I):
            parts.append("D" * (i - row))
            parts.append("R" * (J[r + 1] - J[r]))
            row = i
        parts.append("D" * (p + 1 - row))
        return "".join(parts)

    @classmethod
    def from_word(cls, word: str) -> LatticePath:
        word = word.strip().upper()
        if not word or set(word) - {"D", "R"}:
            raise ValueError(f"a path word uses only D and R: {word!r}")
        if not word.endswith("D"):
            raise ValueError("a path word must end with a downward move")
        row, col = 0, 1
        I, J = [], []
        for a, b in zip(word, word[1:] + "$"):
            if a == "D":
                row += 1
                if b == "R":
                    if row == 0:
                        continue
                    I.append(row)
                    J.append(col)
            else:
                col += 1
        J.append(col)
        # the final D run ends on the dummy row p+1; I must lie strictly above it
        if I and I[-1] >= row:
            raise ValueError("horizontal move on the dummy bottom row")
        return cls(tuple(I), tuple(J))

    def cells(self, p: int) -> list[tuple[int, int]]:
        """Positions (row, col) visited inside the p x d table."""
        out = []
        I, J = self.I, self.J
        top = 1
        for r in range(self.k + 1):
            bottom = I[r] if r < self.k else p
            out.extend((i, J[r]) for i in range(top, bottom + 1))
            if r < self.k:
                out.extend((I[r], j) for j in range(J[r] + 1, J[r + 1]))
            top = bottom
        # drop duplicates caused by segment junctions
        seen = set()
        return [c for c in out if not (c in seen or seen.add(c))]

    def horizontal_pairs(self, pattern: SignPattern) -> list[tuple[int, int]]:
        return [(pattern[i, self.J[r]], pattern[i, self.J[r + 1]]) for r, i in enumerate(self.I)]

    def as_dict(self) -> dict:
        return {"I": list(self.I), "J": list(self.J)}


@dataclass(frozen=True)
class GaleSubset:
    n: int
    Q: tuple[int, ...]

    def __post_init__(self):
        q = tuple(sorted(set(int(x) for x in self.Q)))
        if q and (q[0] < 1 or q[-1] > self.n):
            raise ValueError(f"subset {q} not contained in 1..{self.n}")
        object.__setattr__(self, "Q", q)

    @property
    def k(self) -> int:
        return len(self.Q)

    def is_even(self) -> bool:
        return is_gale_even(self.Q, self.n)


# Automaton.  Each transition is (letter, required sign or None, target).
INITIAL_STATE = "1"
FINAL_STATES = frozenset({"+-", "-+"})
TRANSITIONS: dict[str, tuple[tuple[str, int | None, str], ...]] = {
    "1": (("R", None, "1"), ("D", None, "+-")),
    "+-": (("D", 1, "+-"), ("R", 1, "+"), ("R", -1, "-")),
    "+": (("R", None, "+"), ("D", -1, "+-")),
    "-": (("R", None, "-"), ("D", 1, "-+")),
    "-+": (("D", 1, "-+"), ("R", -1, "-")),
}
# non-tropical allowedness drops the ordering condition on horizontal pairs
CLASSICAL_EXTRA = {"-+": (("R", 1, "+"),)}


def transitions(classical: bool = False) -> dict[str, tuple]:
    if not classical:
        return TRANSITIONS
    return {s: arcs + CLASSICAL_EXTRA.get(s, ()) for s, arcs in TRANSITIONS.items()}


def automaton_is_unambiguous(classical: bool = False) -> bool:
    """At most one arc per (state, letter, sign)."""
    for arcs in transitions(classical).values():
        for letter in "DR":
            for sign in (1, -1):
                n = sum(1 for a, s, _ in arcs if a == letter and s in (None, sign))
                if n > 1:
                    return False
    return True


def _step(arcs, letter: str, sign: int | None):
    for a, s, target in arcs:
        if a == letter and (s is None or s == sign):
            return target
    return None


def run_automaton(word: str, pattern: SignPattern, classical: bool = False) -> list[str] | None:
    """State sequence of the unique run on ``word``, or None if it is rejected."""
    table = transitions(classical)
    p, d = pattern.shape
    signs = pattern.signs
    state = INITIAL_STATE
    row, col = 0, 1
    states = [state]
    for letter in word:
        if row > p:
            return None
        sign = None if row == 0 else int(signs[row - 1, col - 1])
        state = _step(table[state], letter, sign)
        if state is None:
            return None
        if letter == "D":
            row += 1
        else:
            col += 1
            if col > d:
                return None
        states.append(state)
    if row != p + 1 or state not in FINAL_STATES:
        return None
    return states


def _check_path(path: IndexPair, pattern: SignPattern) -> LatticePath:
    if not isinstance(path, LatticePath):
        path = LatticePath(path.I, path.J)
    path.check_bounds(pattern.p, pattern.d)
    return path


def is_tropically_allowed(path: IndexPair, pattern: SignPattern) -> bool:
    path = _check_path(path, pattern)
    return run_automaton(path.word(pattern.p), pattern) is not None


def is_allowed(path: IndexPair, pattern: SignPattern) -> bool:
    """Allowed in the non-tropical sense (no ordering condition on pairs)."""
    path = _check_path(path, pattern)
    return run_automaton(path.word(pattern.p), pattern, classical=True) is not None


def satisfies_conditions(path: IndexPair, pattern: SignPattern, tropical: bool = True) -> bool:
    """Segment-wise sign conditions.

    Vertical segments must be positive apart from their junction cells, the
    extreme signs of each horizontal segment must be (+,-) or (-,+), and, if
    ``tropical``, no (+,-) pair may follow a (-,+) pair.  A purely vertical
    path (k = 0) must be positive on its whole column.
    """
    path = _check_path(path, pattern)
    I, J, k, p = path.I, path.J, path.k, pattern.p
    if k == 0:
        return all(pattern[i, J[0]] == 1 for i in range(1, p + 1))
    # vertical segment r runs down column J[r] between rows `top` and `bottom`
    for r in range(k + 1):
        top = 0 if r == 0 else I[r - 1]
        bottom = p + 1 if r == k else I[r]
        if any(pattern[i, J[r]] != 1 for i in range(top + 1, bottom)):
            return False
    pairs = path.horizontal_pairs(pattern)
    if any(a != -b for a, b in pairs):
        return False
    if tropical:
        seen_mp = False
        for a, _ in pairs:
            if a == -1:
                seen_mp = True
            elif seen_mp:
                return False
    return True


@functools.lru_cache(maxsize=64)
def candidate_paths(p: int, d: int) -> tuple[LatticePath, ...]:
    """Every (I, J) shape for a p x d table, sorted by (J, I)."""
    out = []
    for k in range(0, min(p, d - 1) + 1):
        for J in itertools.combinations(range(1, d + 1), k + 1):
            for I in itertools.combinations(range(1, p + 1), k):
                out.append(LatticePath(I, J))
    out.sort(key=lambda q: (q.J, q.I))
    return tuple(out)


def candidate_count(p: int, d: int) -> int:
    """Number of (I, J) shapes, ``C(p + d, p + 1)``."""
    return math.comb(p + d, p + 1)


def _enumerate(pattern: SignPattern, classical: bool) -> list[LatticePath]:
    p, d = pattern.shape
    n = candidate_count(p, d)
    if n > MAX_ENUMERATION_CANDIDATES:
        raise GuardError(f"path enumeration limited to {MAX_ENUMERATION_CANDIDATES} candidate paths, "
                         f"a {p} x {d} table has {n}")
    return [q for q in candidate_paths(p, d)
            if run_automaton(q.word(p), pattern, classical) is not None]


def enumerate_tropical_paths(pattern: SignPattern) -> list[LatticePath]:
    return _enumerate(pattern, classical=False)


def enumerate_allowed_paths(pattern: SignPattern) -> list[LatticePath]:
    return _enumerate(pattern, classical=True)


def _count(pattern: SignPattern, classical: bool) -> int:
    p, d = pattern.shape
    plus = (pattern.signs > 0).tolist()
    # row p+1: the closed states accept, open segments do not; column d+1 is dead
    n_pm_below = [1] * d + [0]
    n_mp_below = [1] * d + [0]
    for i in range(p - 1, -1, -1):
        n_p = n_m = 0  # N_+(i, j+1), N_-(i, j+1)
        n_pm = [0] * (d + 1)
        n_mp = [0] * (d + 1)
        for j in range(d - 1, -1, -1):
            if plus[i][j]:
                n_pm[j] = n_pm_below[j] + n_p
                n_mp[j] = n_mp_below[j] + (n_p if classical else 0)
                n_m = n_m + n_mp_below[j]
            else:
                n_pm[j] = n_m
                n_mp[j] = n_m
                n_p = n_p + n_pm_below[j]
        n_pm_below, n_mp_below = n_pm, n_mp
    total = sum(n_pm_below[:d])  # N_1(0, 1)
    if total > COUNT_LIMIT:
        raise OverflowError(f"path count {total} exceeds 64 bits")
    return total


def count_tropical_paths(pattern: SignPattern) -> int:
    """Number of tropically allowed paths, by the automaton recurrences in O(p d)."""
    return _count(pattern, classical=False)


def count_allowed_paths(pattern: SignPattern) -> int:
    """Number of allowed paths (automaton with the extra ``-+ -> +`` arc)."""
    return _count(pattern, classical=True)


def count_paths_batch(codes, p: int, d: int, classical: bool = False) -> np.ndarray:
    """Vectorized path counts for many patterns given as integer codes.

    ``codes`` follows the :class:`SignPattern` bit layout (so ``p*d <= 64``).
    """
    if p * d > 64:
        raise ValueError("integer codes hold at most 64 cells; use count_paths_signs")
    codes = np.asarray(codes, dtype=np.uint64)
    shifts = np.arange(p * d - 1, -1, -1, dtype=np.uint64)
    neg = ((codes[:, None] >> shifts) & np.uint64(1)).astype(bool)
    return count_paths_signs(neg.reshape(-1, p, d), classical)


def count_paths_signs(negative, classical: bool = False) -> np.ndarray:
    """Vectorized path counts for a stack of patterns, ``negative[n, i, j]`` true for ``-``.

    Counts are int64; sizes whose count bound does not fit are rejected.
    """
    from .bounds import mcmullen_U, trop_upper_bound

    negative = np.asarray(negative, dtype=bool)
    n, p, d = negative.shape
    bound = mcmullen_U(p + d, d - 1)
    if not classical:
        bound = min(bound, trop_upper_bound(p, d))
    if bound >= 2**63:
        raise OverflowError(f"counts for {p}x{d} patterns may exceed int64")
    # cell-major layout keeps each per-cell slice contiguous
    neg_cells = np.ascontiguousarray(negative.transpose(1, 2, 0))
    n_pm_below = np.ones((d + 1, n), dtype=np.int64)
    n_mp_below = np.ones((d + 1, n), dtype=np.int64)
    n_pm_below[d] = 0
    n_mp_below[d] = 0
    for i in range(p - 1, -1, -1):
        n_p = np.zeros(n, dtype=np.int64)
        n_m = np.zeros(n, dtype=np.int64)
        n_pm = np.zeros((d + 1, n), dtype=np.int64)
        n_mp = np.zeros((d + 1, n), dtype=np.int64)
        for j in range(d - 1, -1, -1):
            neg = neg_cells[i, j]
            below_pm = n_pm_below[j]
            below_mp = n_mp_below[j]
            n_pm[j] = np.where(neg, n_m, below_pm + n_p)
            n_mp[j] = np.where(neg, n_m, below_mp + n_p if classical else below_mp)
            n_m = np.where(neg, n_m, n_m + below_mp)
            n_p = np.where(neg, n_p + below_pm, n_p)
        n_pm_below, n_mp_below = n_pm, n_mp
    return n_pm_below[:d].sum(axis=0)


def path_type(path: IndexPair, pattern: SignPattern) -> str:
    """``"+-"``, ``"-+"``, ``"mixed"`` or ``"vertical"`` from the horizontal pairs."""
    pairs = LatticePath(path.I, path.J).horizontal_pairs(pattern)
    if not pairs:
        return "vertical"
    firsts = {a for a, _ in pairs}
    if firsts == {1}:
        return "+-"
    if firsts == {-1}:
        return "-+"
    return "mixed"


def reverse_path_type_counts(pattern: SignPattern) -> tuple[int, int]:
    """Counts of tropically allowed paths of pure (+,-) type and pure (-,+) type.

    Purely vertical paths count towards both.
    """
    n_pm = n_mp = 0
    for q in enumerate_tropical_paths(pattern):
        kind = path_type(q, pattern)
        n_pm += kind in ("+-", "vertical")
        n_mp += kind in ("-+", "vertical")
    return n_pm, n_mp


def is_gale_even(Q, n: int) -> bool:
    """Between any two non-members of ``Q`` lie an even number of members."""
    members = set(Q)
    run = None  # members seen since the last non-member
    for x in range(1, n + 1):
        if x in members:
            if run is not None:
                run += 1
        else:
            if run is not None and run % 2:
                return False
            run = 0
    return True


def enumerate_gale_subsets(n: int, k: int) -> list[GaleSubset]:
    if n > MAX_GALE_N:
        raise GuardError(f"Gale enumeration limited to n <= {MAX_GALE_N}")
    return [GaleSubset(n, Q) for Q in itertools.combinations(range(1, n + 1), k) if is_gale_even(Q, n)]


def path_to_gale(path: IndexPair, p: int, d: int) -> GaleSubset:
    path.check_bounds(p, d)
    J = set(path.J)
    Q = {i + d for i in path.I} | {d - j + 1 for j in range(1, d + 1) if j not in J}
    return GaleSubset(p + d, tuple(Q))


def gale_to_path(Q, p: int, d: int) -> LatticePath:
    if isinstance(Q, GaleSubset):
        if Q.n != p + d:
            raise ValueError(f"ground set 1..{Q.n} does not match p + d = {p + d}")
        Q = Q.Q
    Q = set(Q)
    if len(Q) != d - 1:
        raise ValueError(f"need |Q| = d - 1 = {d - 1}, got {len(Q)}")
    if any(q < 1 or q > p + d for q in Q):
        raise ValueError(f"Q must lie in 1..{p + d}")
    if not is_gale_even(Q, p + d):
        raise ValueError(f"{sorted(Q)} violates the evenness condition")
    I = sorted(q - d for q in Q if q > d)
    J = sorted(d - j + 1 for j in range(1, d + 1) if j not in Q)
    return LatticePath(tuple(I), tuple(J))


def render_path(path: IndexPair, pattern: SignPattern) -> str:
    """ASCII picture: signs on path cells, ``*`` where the sign is irrelevant, ``.`` elsewhere."""
    path = _check_path(path, pattern)
    p, d = pattern.shape
    grid = [["."] * d for _ in range(p)]
    for i, j in path.cells(p):
        grid[i - 1][j - 1] = "+" if pattern[i, j] > 0 else "-"
    for r, i in enumerate(path.I):
        for j in range(path.J[r] + 1, path.J[r + 1]):
            grid[i - 1][j - 1] = "*"
    return "\n".join("".join(row) for row in grid)


def parse_path_art(text: str) -> LatticePath:
    """Inverse of :func:`render_path`: any character other than ``.`` is on the path."""
    rows = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    on = {(i + 1, j + 1) for i, ln in enumerate(rows) for j, ch in enumerate(ln) if ch != "."}
    p = len(rows)
    start = [j for (i, j) in on if i == 1]
    if len(start) < 1:
        raise ValueError("path picture has no cell in the first row")
    i, j = 1, min(start)
    word = "R" * (j - 1) + "D"
    while True:
        if (i, j + 1) in on:
            word += "R"
            j += 1
        elif i == p:
            word += "D"
            break
        elif (i + 1, j) in on:
            word += "D"
            i += 1
        else:
            raise ValueError(f"path picture is broken at ({i}, {j})")
    path = LatticePath.from_word(word)
    if set(path.cells(p)) != on:
        raise ValueError("path picture is not a single monotone path")
    return path


def iter_words(p: int, d: int) -> Iterator[str]:
    """All path words for a p x d table."""
    for q in candidate_paths(p, d):
        yield q.word(p)
