"""Signed determinants, tropical permanents and the Cramer rule for C(I, J).

``C(eps, t)`` is the p x d signed matrix with ``C[i, j] = eps[i, j] t_i^(j-1)``
(tropical power, so modulus ``(j-1) * t_i``).  For index sequences ``I`` (rows)
and ``J`` (columns, one more than ``I``) the homogeneous system
``C(I, J) z (balance) 0`` has closed-form Cramer determinants, implemented in
:func:`cramer_determinants`.  :func:`sdet` is the slow, definitional route
used to check them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import GuardError
from .patterns import SignPattern
from .semiring import (
    BOT,
    MINUS_ONE,
    ONE,
    ZERO,
    SignedScalar,
    as_maxplus,
    mp_power,
    otimes,
    splus,
    stimes,
)

__all__ = [
    "MAX_PERMUTATION_SIZE",
    "SignedMatrix",
    "IndexPair",
    "check_t",
    "default_t",
    "cyclic_matrix",
    "permutation_sign",
    "sdet",
    "tper",
    "cramer_determinants",
    "cramer_solution",
    "balance_solution",
    "CramerSolution",
]

MAX_PERMUTATION_SIZE = 10


def _coerce(x) -> SignedScalar:
    if isinstance(x, SignedScalar):
        return x
    if isinstance(x, str):
        return SignedScalar.parse(x)
    return SignedScalar.pos(x)


class SignedMatrix:
    """Dense rectangular matrix of :class:`SignedScalar` (0-based indexing)."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        rows = [tuple(_coerce(x) for x in row) for row in entries]
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("signed matrix rows have different lengths")
        self.entries = tuple(rows)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, ij) -> SignedScalar:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, SignedMatrix) and self.entries == other.entries

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"SignedMatrix([{body}])"

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> SignedMatrix:
        """Keep the given 0-based rows and columns, in the given order."""
        return SignedMatrix([[self.entries[i][j] for j in cols] for i in rows])

    def moduli(self) -> list[list]:
        return [[x.modulus for x in row] for row in self.entries]


@dataclass(frozen=True)
class IndexPair:
    """Row indices ``I`` and column indices ``J`` (1-based, strictly increasing).

    ``len(J) == len(I) + 1``; ``k = len(I)``.
    """

    I: tuple[int, ...]
    J: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "I", tuple(int(i) for i in self.I))
        object.__setattr__(self, "J", tuple(int(j) for j in self.J))
        if len(self.J) != len(self.I) + 1:
            raise ValueError(f"need |J| = |I| + 1, got |I|={len(self.I)}, |J|={len(self.J)}")
        for name, seq in (("I", self.I), ("J", self.J)):
            if any(a >= b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"{name} must be strictly increasing: {seq}")
            if seq and seq[0] < 1:
                raise ValueError(f"{name} indices are 1-based: {seq}")

    @property
    def k(self) -> int:
        return len(self.I)

    def check_bounds(self, p: int, d: int) -> None:
        if (self.I and self.I[-1] > p) or self.J[-1] > d:
            raise ValueError(f"indices {self.I}, {self.J} exceed a {p}x{d} pattern")


def check_t(t, p: int) -> tuple[int, ...]:
    """Validate a strictly increasing length-``p`` sequence of finite integers."""
    t = tuple(as_maxplus(x) for x in t)
    if len(t) != p:
        raise ValueError(f"t must have length p={p}, got {len(t)}")
    if any(x == BOT for x in t):
        raise ValueError("t entries must be finite")
    if any(a >= b for a, b in zip(t, t[1:])):
        raise ValueError(f"t must be strictly increasing: {t}")
    return t


def default_t(p: int) -> tuple[int, ...]:
    return tuple(range(p))


def cyclic_matrix(pattern: SignPattern, t) -> SignedMatrix:
    t = check_t(t, pattern.p)
    return SignedMatrix(
        [[SignedScalar.from_sign(int(pattern.signs[i, j]), mp_power(t[i], j)) for j in range(pattern.d)]
         for i in range(pattern.p)]
    )


def permutation_sign(perm: Sequence[int]) -> int:
    """+1 for even permutations, -1 for odd ones."""
    seen = [False] * len(perm)
    parity = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        parity += length - 1
    return -1 if parity % 2 else 1


def _square_size(M) -> int:
    rows = M.entries if isinstance(M, SignedMatrix) else [list(r) for r in M]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("matrix must be square and non-empty")
    if n > MAX_PERMUTATION_SIZE:
        raise GuardError(f"permutation expansion limited to n <= {MAX_PERMUTATION_SIZE}, got n={n}")
    return n


def sdet(M: SignedMatrix) -> SignedScalar:
    """Determinant over the symmetrized semiring, by permutation expansion."""
    if not isinstance(M, SignedMatrix):
        M = SignedMatrix(M)
    n = _square_size(M)
    a = M.entries
    total = ZERO
    for sigma in itertools.permutations(range(n)):
        term = ONE if permutation_sign(sigma) == 1 else MINUS_ONE
        for col in range(n):
            term = stimes(term, a[sigma[col]][col])
            if term.is_zero:
                break
        total = splus(total, term)
    return total


def tper(M) -> tuple[int | float, bool]:
    """Tropical permanent and whether its maximum is finite and attained once.

    ``M`` may be a :class:`SignedMatrix` (moduli are used) or a nested sequence
    of max-plus scalars.
    """
    if isinstance(M, SignedMatrix):
        a = M.moduli()
    else:
        a = [[as_maxplus(x) for x in row] for row in M]
    n = _square_size(a)
    best = BOT
    count = 0
    for sigma in itertools.permutations(range(n)):
        v = 0
        for i in range(n):
            v = otimes(v, a[i][sigma[i]])
            if v == BOT:
                break
        if v == BOT:
            continue
        if v > best:
            best, count = v, 1
        elif v == best:
            count += 1
    return best, (best != BOT and count == 1)


def _pair_for(pattern: SignPattern, ij) -> IndexPair:
    if not isinstance(ij, IndexPair):
        ij = IndexPair(*ij)
    ij.check_bounds(pattern.p, pattern.d)
    return ij


def _entry(pattern: SignPattern, t, i: int, j: int) -> SignedScalar:
    return SignedScalar.from_sign(pattern[i, j], mp_power(t[i - 1], j - 1))


def cramer_determinants(pattern: SignPattern, t, ij) -> list[SignedScalar]:
    """Closed-form Cramer determinants ``D_1 .. D_{k+1}`` of ``C(I, J) z (balance) 0``.

    ``D_r`` is the determinant of ``C(I, J minus {j_r})``: the identity
    permutation is the unique maximizer, so row ``i_s`` pairs with column
    ``j_s`` for ``s < r`` and with ``j_{s+1}`` for ``s >= r``.
    """
    t = check_t(t, pattern.p)
    ij = _pair_for(pattern, ij)
    if ij.k < 1:
        raise ValueError("Cramer determinants need k >= 1")
    I, J = ij.I, ij.J
    out = []
    for r in range(1, ij.k + 2):
        D = ONE
        for s in range(1, ij.k + 1):
            col = J[s - 1] if s < r else J[s]
            D = stimes(D, _entry(pattern, t, I[s - 1], col))
        out.append(D)
    return out


def balance_solution(pattern: SignPattern, t, ij) -> tuple[SignedScalar, ...]:
    """Signed solution of ``C(I, J) z (balance) 0`` normalized by ``z_{k+1} = 1``.

    ``z_r = (minus) t_{i_r}^(j_{r+1} - j_r) eps[i_r, j_r] eps[i_r, j_{r+1}] z_{r+1}``.
    """
    t = check_t(t, pattern.p)
    ij = _pair_for(pattern, ij)
    I, J = ij.I, ij.J
    z = [ONE]
    for r in range(ij.k, 0, -1):
        i = I[r - 1]
        s = -pattern[i, J[r - 1]] * pattern[i, J[r]]
        step = SignedScalar.from_sign(s, mp_power(t[i - 1], J[r] - J[r - 1]))
        z.append(stimes(step, z[-1]))
    return tuple(reversed(z))


class CramerSolution(NamedTuple):
    feasible: bool
    z: tuple[int, ...] | None


def cramer_solution(pattern: SignPattern, t, ij) -> CramerSolution:
    """Positive solution ``z(I, J)`` of ``C+(I, J) z = C-(I, J) z`` if one exists.

    Feasible iff every horizontal pair has opposite signs,
    ``eps[i_r, j_r] * eps[i_r, j_{r+1}] = -1``; ``k = 0`` is feasible with
    ``z = (0,)``.
    """
    t = check_t(t, pattern.p)
    ij = _pair_for(pattern, ij)
    I, J = ij.I, ij.J
    for r in range(ij.k):
        if pattern[I[r], J[r]] * pattern[I[r], J[r + 1]] != -1:
            return CramerSolution(False, None)
    z = [0]
    for r in range(ij.k, 0, -1):
        z.append(otimes(mp_power(t[I[r - 1] - 1], J[r] - J[r - 1]), z[-1]))
    return CramerSolution(True, tuple(reversed(z)))
