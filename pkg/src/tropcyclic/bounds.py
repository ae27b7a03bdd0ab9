"""Closed-form bounds on path counts and the named sign patterns that approach them."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .patterns import SignPattern

__all__ = [
    "binomial",
    "mcmullen_U",
    "trop_upper_bound",
    "natural_lower_bound",
    "alternating_pattern",
    "natural_pattern",
    "checkerboard_pattern",
    "attained_pattern",
    "attained_or_none",
    "NotCovered",
    "BoundReport",
    "bound_report",
    "decomposition_bound",
    "typed_path_counts",
]


def binomial(n: int, k: int) -> int:
    """``C(n, k)``, zero outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def mcmullen_U(n: int, k: int) -> int:
    """Maximal number of facets of a k-polytope with n vertices (exact integer)."""
    if not 0 <= k < n:
        raise ValueError(f"need 0 <= k < n, got n={n}, k={k}")
    h = k // 2
    if k % 2 == 0:
        return binomial(n - h, h) + binomial(n - h - 1, h - 1)
    return 2 * binomial(n - h - 1, h)


def trop_upper_bound(p: int, d: int) -> int:
    if p < 1 or d < 1:
        raise ValueError("p and d must be positive")
    return (p * (d - 1) + 1) * 2 ** (d - 1)


def natural_lower_bound(p: int, d: int) -> int:
    """Path count guaranteed by :func:`natural_pattern` (for ``p >= 2d``)."""
    return (p - 2 * d + 7) * (2 ** (d - 2) - 2)


def alternating_pattern(p: int, d: int) -> SignPattern:
    """Column signs alternate, starting with ``+``."""
    return SignPattern.from_function(p, d, lambda i, j: j % 2 == 0)


def natural_pattern(p: int, d: int) -> SignPattern:
    """Pattern whose negative cells form two diagonal bands plus two side columns.

    Columns 1 and d are positive.  Column 2 is negative on the last four rows,
    column d-1 on all but the last ``d - 4``; an inner column c is negative
    above row ``c - 1`` and below row ``c + p - d + 1``.
    """
    if p < 2 * d:
        raise ValueError(f"natural pattern needs p >= 2d, got p={p}, d={d}")

    def negative(r, c):
        if c == 2 and r >= d - 3:
            return True
        if c == d - 1 and r <= p - d + 4:
            return True
        return 3 <= c <= d - 2 and (r <= c - 2 or r >= c + p - d + 2)

    return SignPattern.from_function(p, d, negative)


def checkerboard_pattern(p: int, d: int) -> SignPattern:
    return SignPattern.from_function(p, d, lambda i, j: (i + j) % 2 == 1)


class NotCovered(ValueError):
    """No explicit pattern attaining the upper bound is known for this size."""

    def __init__(self, p: int, d: int):
        super().__init__(f"no attaining pattern is known for p={p}, d={d}")
        self.p = p
        self.d = d


def _with_corners(pattern: SignPattern, top_left: bool, bottom_right: bool) -> SignPattern:
    arr = pattern.signs.copy()
    if top_left:
        arr[0, 0] = 1
    if bottom_right:
        arr[-1, -1] = 1
    return SignPattern(arr)


def attained_pattern(p: int, d: int) -> SignPattern:
    """A pattern whose path count equals ``mcmullen_U(p + d, d - 1)``.

    Covered sizes: d <= 4, p <= 3, and p = 4 with d even.  Where both apply,
    d = 4 uses the column rule and the other sizes the parity rules.  Raises
    :class:`NotCovered` otherwise.
    """
    if p < 1 or d < 1:
        raise ValueError("p and d must be positive")
    column = SignPattern.from_function(p, d, lambda i, j: j == 2)
    if d == 4 or (d < 4 and p > 3):
        return column
    if p == 1:
        return SignPattern.from_function(p, d, lambda i, j: j % 2 == 0)
    odd = checkerboard_pattern(p, d)
    even = SignPattern.from_function(p, d, lambda i, j: (i + j) % 2 == 0)
    if p == 2:
        return _with_corners(odd, False, d % 2 == 1)
    if p == 3 and d % 2 == 0:
        return _with_corners(odd, False, True)
    if p == 3:
        return _with_corners(even, True, True)
    if p == 4 and d % 2 == 0:
        return _with_corners(even, True, True)
    raise NotCovered(p, d)


def attained_or_none(p: int, d: int) -> SignPattern | None:
    try:
        return attained_pattern(p, d)
    except NotCovered:
        return None


@dataclass(frozen=True)
class BoundReport:
    p: int
    d: int
    upper_mcmullen: int
    upper_trop: int
    lower_natural: int | None
    lower_checkerboard: int

    def consistent(self) -> bool:
        lows = [v for v in (self.lower_natural, self.lower_checkerboard) if v is not None]
        return all(v <= self.upper_mcmullen for v in lows)


def bound_report(p: int, d: int) -> BoundReport:
    """Upper bounds and the path counts of the named lower-bound patterns."""
    from .paths import count_tropical_paths

    natural = count_tropical_paths(natural_pattern(p, d)) if p >= 2 * d else None
    return BoundReport(
        p=p,
        d=d,
        upper_mcmullen=mcmullen_U(p + d, d - 1),
        upper_trop=trop_upper_bound(p, d),
        lower_natural=natural,
        lower_checkerboard=count_tropical_paths(checkerboard_pattern(p, d)),
    )


def typed_path_counts(pattern: SignPattern) -> tuple[int, int, int]:
    """``(n_pm, n_mp, n_pm_last)`` where ``n_pm_last`` only counts (+,-) paths ending in column d."""
    from .paths import enumerate_tropical_paths, path_type

    n_pm = n_mp = n_pm_last = 0
    for q in enumerate_tropical_paths(pattern):
        kind = path_type(q, pattern)
        if kind in ("+-", "vertical"):
            n_pm += 1
            n_pm_last += q.J[-1] == pattern.d
        if kind in ("-+", "vertical"):
            n_mp += 1
    return n_pm, n_mp, n_pm_last


def decomposition_bound(pattern: SignPattern) -> int:
    """Upper bound on the path count from splitting at the first (-,+) segment.

    A path whose first (-,+) horizontal segment starts at cell (r, m) is a
    (+,-) path of the upper-left (r-1) x m block ending in its last column,
    followed by a (-,+) path of the lower-right (p-r) x (d-m) block.
    """
    p, d = pattern.shape
    signs = pattern.signs
    total = typed_path_counts(pattern)[0]
    for r in range(1, p + 1):
        for m in range(1, d):
            if r == 1:
                head = 1
            else:
                head = typed_path_counts(SignPattern(signs[: r - 1, :m]))[2]
            if r == p:
                tail = d - m
            else:
                tail = typed_path_counts(SignPattern(np.ascontiguousarray(signs[r:, m:])))[1]
            total += head * tail
    return total
