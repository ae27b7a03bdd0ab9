"""Tropical polyhedral cones ``{x : A x <= B x}`` over the max-plus semiring.

Vectors are tuples of max-plus scalars (ints, or ``BOT``).  Functions that
return index sets (saturated rows, argmax sets, supports) use 1-based indices,
like the rest of the combinatorial API.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import GuardError
from .linalg import MAX_PERMUTATION_SIZE, tper
from .semiring import BOT, as_maxplus, format_maxplus, otimes

__all__ = [
    "TropicalIneqSystem",
    "TangentCone",
    "as_vector",
    "support",
    "scale",
    "vector_oplus",
    "canonical",
    "projectively_equal",
    "format_vector",
    "row_value",
    "member",
    "saturated_rows",
    "tangent_cone",
    "is_extreme",
    "extreme_witnesses",
    "check_saturation_bound",
    "in_general_position",
    "MAX_EXTREME_DIM",
    "MAX_GENERAL_POSITION_SUBMATRICES",
]

MAX_EXTREME_DIM = 24
MAX_GENERAL_POSITION_SUBMATRICES = 10**6
_ENUMERATION_DIM = 16


def as_vector(x) -> tuple:
    return tuple(as_maxplus(v) for v in x)


def support(x) -> frozenset[int]:
    return frozenset(j + 1 for j, v in enumerate(x) if v != BOT)


def scale(lam, x) -> tuple:
    """Tropical scalar multiple ``lam x``."""
    lam = as_maxplus(lam)
    return tuple(otimes(lam, v) for v in x)


def vector_oplus(x, y) -> tuple:
    return tuple(max(a, b) for a, b in zip(x, y, strict=True))


def canonical(x) -> tuple:
    """Representative of the ray of ``x`` whose last finite coordinate is 0."""
    x = as_vector(x)
    finite = [v for v in x if v != BOT]
    if not finite:
        raise ValueError("the zero vector does not span a ray")
    shift = finite[-1]
    return tuple(BOT if v == BOT else v - shift for v in x)


def projectively_equal(x, y) -> bool:
    """Same support and a constant difference on it."""
    return canonical(x) == canonical(y)


def format_vector(x) -> str:
    return "(" + ", ".join(format_maxplus(v) for v in x) + ")"


def row_value(row: Sequence, x: Sequence):
    """``max_j row[j] + x[j]`` with ``BOT`` handled exactly."""
    best = BOT
    for a, v in zip(row, x):
        if a != BOT and v != BOT and a + v > best:
            best = a + v
    return best


def _argmax(row, x, value) -> frozenset[int]:
    return frozenset(
        j + 1 for j, (a, v) in enumerate(zip(row, x)) if a != BOT and v != BOT and a + v == value
    )


@dataclass(frozen=True)
class TropicalIneqSystem:
    """The system ``A x <= B x`` with p x d max-plus matrices ``A`` and ``B``."""

    A: tuple[tuple, ...]
    B: tuple[tuple, ...]

    def __post_init__(self):
        A = tuple(as_vector(r) for r in self.A)
        B = tuple(as_vector(r) for r in self.B)
        if len(A) != len(B) or any(len(a) != len(b) for a, b in zip(A, B)):
            raise ValueError("A and B must have the same shape")
        if A and any(len(r) != len(A[0]) for r in A):
            raise ValueError("A and B must be rectangular")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)

    @property
    def p(self) -> int:
        return len(self.A)

    @property
    def d(self) -> int:
        return len(self.A[0]) if self.A else 0

    @property
    def C(self) -> tuple[tuple, ...]:
        """``A (+) B``."""
        return tuple(vector_oplus(a, b) for a, b in zip(self.A, self.B))

    def has_disjoint_supports(self) -> bool:
        return all(a == BOT or b == BOT for ra, rb in zip(self.A, self.B) for a, b in zip(ra, rb))

    def _check(self, x) -> tuple:
        x = as_vector(x)
        if len(x) != self.d:
            raise ValueError(f"vector of length {len(x)} for a system in dimension {self.d}")
        return x


@dataclass(frozen=True)
class TangentCone:
    """Rows ``max_{lhs} x <= max_{rhs} x`` (1-based index sets)."""

    d: int
    rows: tuple[tuple[frozenset[int], frozenset[int]], ...]

    def contains(self, x) -> bool:
        for lhs, rhs in self.rows:
            if max(x[j - 1] for j in lhs) > max(x[j - 1] for j in rhs):
                return False
        return True

    def masks(self) -> list[tuple[int, int]]:
        """Rows as bitmasks, bit ``j-1`` for index ``j``."""
        return [(sum(1 << (j - 1) for j in lhs), sum(1 << (j - 1) for j in rhs)) for lhs, rhs in self.rows]


def member(sys: TropicalIneqSystem, x) -> bool:
    x = sys._check(x)
    return all(row_value(a, x) <= row_value(b, x) for a, b in zip(sys.A, sys.B))


def saturated_rows(sys: TropicalIneqSystem, x) -> frozenset[int]:
    """Rows with ``A_i x = B_i x``, including rows where both sides are ``BOT``."""
    x = sys._check(x)
    return frozenset(i + 1 for i, (a, b) in enumerate(zip(sys.A, sys.B)) if row_value(a, x) == row_value(b, x))


def tangent_cone(sys: TropicalIneqSystem, y) -> TangentCone:
    y = sys._check(y)
    if not member(sys, y):
        raise ValueError(f"{format_vector(y)} is not in the cone")
    rows = []
    for a, b in zip(sys.A, sys.B):
        va, vb = row_value(a, y), row_value(b, y)
        if va == vb and va != BOT:
            rows.append((_argmax(a, y, va), _argmax(b, y, vb)))
    return TangentCone(sys.d, tuple(rows))


def _feasible(x: int, masks) -> bool:
    for lhs, rhs in masks:
        if x & lhs and not x & rhs:
            return False
    return True


def _good_s_enumerate(masks, d: int, supp_mask: int, candidates) -> list[int]:
    good = []
    for s in candidates:
        sbit = 1 << (s - 1)
        low = sbit - 1
        ok = True
        for m in range(1 << (d - 1)):
            x = (m & low) | sbit | ((m & ~low) << 1)
            if x & supp_mask != supp_mask and _feasible(x, masks):
                ok = False
                break
        if ok:
            good.append(s)
    return good


def _greatest_feasible_subset(masks, ground: int) -> int:
    # every feasible subset of `ground` survives each removal step
    S = ground
    changed = True
    while changed:
        changed = False
        for lhs, rhs in masks:
            if S & lhs and not S & rhs:
                S &= ~lhs
                changed = True
    return S


def _good_s_fixpoint(masks, d: int, supp_mask: int, candidates) -> list[int]:
    full = (1 << d) - 1
    bad = 0
    for r in range(1, d + 1):
        if supp_mask >> (r - 1) & 1:
            bad |= _greatest_feasible_subset(masks, full & ~(1 << (r - 1)))
    return [s for s in candidates if not bad >> (s - 1) & 1]


def extreme_witnesses(sys: TropicalIneqSystem, y, method: str = "auto",
                      restrict_to_support: bool = True) -> list[int]:
    """Indices ``s`` for which the boolean tangent-cone test certifies ``y`` extreme.

    ``method`` is ``"enumerate"`` (scan ``{0, 1}^d``), ``"fixpoint"`` (greatest
    feasible subsets, polynomial) or ``"auto"`` (enumerate for d <= 16).
    """
    y = sys._check(y)
    d = sys.d
    if d > MAX_EXTREME_DIM:
        raise GuardError(f"extremality test limited to d <= {MAX_EXTREME_DIM}, got d={d}")
    supp = support(y)
    if not supp:
        raise ValueError("the zero vector is not on a ray")
    masks = tangent_cone(sys, y).masks()
    supp_mask = sum(1 << (j - 1) for j in supp)
    candidates = sorted(supp) if restrict_to_support else list(range(1, d + 1))
    if method == "auto":
        method = "enumerate" if d <= _ENUMERATION_DIM else "fixpoint"
    if method == "enumerate":
        return _good_s_enumerate(masks, d, supp_mask, candidates)
    if method == "fixpoint":
        return _good_s_fixpoint(masks, d, supp_mask, candidates)
    raise ValueError(f"unknown method {method!r}")


def is_extreme(sys: TropicalIneqSystem, y, method: str = "auto",
               restrict_to_support: bool = True) -> bool:
    """Whether ``y`` lies on an extreme ray of the cone (requires ``y`` in the cone)."""
    return bool(extreme_witnesses(sys, y, method, restrict_to_support))


def check_saturation_bound(sys: TropicalIneqSystem, y) -> bool:
    """An extreme ``y`` with ``n`` zero entries saturates at least ``d - n - 1`` rows."""
    y = sys._check(y)
    zeros = sum(1 for v in y if v == BOT)
    return len(saturated_rows(sys, y)) >= sys.d - zeros - 1


def in_general_position(sys: TropicalIneqSystem) -> bool:
    """Every square submatrix of ``A (+) B`` is tropically non-singular."""
    C = sys.C
    p, d = sys.p, sys.d
    kmax = min(p, d)
    total = sum(math.comb(p, k) * math.comb(d, k) for k in range(1, kmax + 1))
    if total > MAX_GENERAL_POSITION_SUBMATRICES:
        raise GuardError(f"{total} submatrices exceed the limit of {MAX_GENERAL_POSITION_SUBMATRICES}")
    if kmax > MAX_PERMUTATION_SIZE:
        raise GuardError(f"submatrices up to {kmax}x{kmax} exceed the permanent size limit")
    for k in range(1, kmax + 1):
        for rows in itertools.combinations(range(p), k):
            for cols in itertools.combinations(range(d), k):
                _, unique = tper([[C[i][j] for j in cols] for i in rows])
                if not unique:
                    return False
    return True
