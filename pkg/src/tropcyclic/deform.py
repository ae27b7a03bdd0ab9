"""Floating-point checks of the exponential deformation of tropical cones.

``E_beta`` sends a max-plus vector x to ``exp(beta x)`` and ``L_beta`` is its
inverse.  Everything is evaluated in the log domain with ``logsumexp`` so that
large ``beta * x`` never overflows.  This module is a sanity bridge only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp

from .cone import TropicalIneqSystem
from .semiring import BOT

__all__ = [
    "SLACK",
    "DeformParams",
    "e_beta",
    "l_beta",
    "lse",
    "lse_sandwich_check",
    "deformed_member",
    "deformed_row_margins",
]

SLACK = 1e-9


@dataclass(frozen=True)
class DeformParams:
    beta: float
    d: int

    def __post_init__(self):
        if not self.beta > 0:
            raise ValueError(f"beta must be positive, got {self.beta}")


def _check_beta(beta: float) -> float:
    beta = float(beta)
    if not beta > 0:
        raise ValueError(f"beta must be positive, got {beta}")
    return beta


def _as_float(x) -> np.ndarray:
    return np.array([-np.inf if v == BOT else float(v) for v in x], dtype=float)


def e_beta(x, beta: float) -> np.ndarray:
    return np.exp(_check_beta(beta) * _as_float(x))


def l_beta(y, beta: float) -> np.ndarray:
    beta = _check_beta(beta)
    y = np.asarray(y, dtype=float)
    if np.any(y < 0) or np.any(np.isnan(y)):
        raise ValueError("l_beta needs a nonnegative vector")
    with np.errstate(divide="ignore"):
        return np.log(y) / beta


def lse(v, beta: float) -> float:
    """``beta^-1 log sum_j exp(beta v_j)``."""
    beta = _check_beta(beta)
    return float(logsumexp(beta * _as_float(v))) / beta


def lse_sandwich_check(v, beta: float, slack: float = SLACK) -> bool:
    """``max v <= lse(v) <= max v + log(d) / beta`` up to ``slack``."""
    arr = _as_float(v)
    if np.all(np.isneginf(arr)):
        raise ValueError("the sandwich needs a vector with a finite entry")
    top = float(arr.max())
    mid = lse(v, beta)
    tol = slack * max(1.0, abs(top))
    return top - tol <= mid <= top + math.log(len(arr)) / beta + tol


def deformed_row_margins(sys: TropicalIneqSystem, x, beta: float) -> list[float]:
    """Per row, ``log sum exp(beta(b + x)) - log(sum exp(beta(a + x)) / d)``, divided by beta.

    Rows with an empty left side give ``inf``; rows with only a left side give ``-inf``.
    """
    from .cyclic import SignedCyclicSpec, build_polar

    if isinstance(sys, SignedCyclicSpec):
        sys = build_polar(sys)
    beta = _check_beta(beta)
    xs = _as_float(x)
    if len(xs) != sys.d:
        raise ValueError(f"vector of length {len(xs)} for a system in dimension {sys.d}")
    log_d = math.log(sys.d)
    out = []
    for a, b in zip(sys.A, sys.B):
        left = beta * (_as_float(a) + xs)
        right = beta * (_as_float(b) + xs)
        lhs = float(logsumexp(left)) - log_d if np.any(np.isfinite(left)) else -np.inf
        rhs = float(logsumexp(right)) if np.any(np.isfinite(right)) else -np.inf
        if lhs == -np.inf:
            out.append(np.inf)
        else:
            out.append((rhs - lhs) / beta)
    return out


def deformed_member(sys, x, beta: float, slack: float = SLACK) -> bool:
    """Whether ``E_beta(x)`` satisfies ``(1/d) sum e^{beta a} y <= sum e^{beta b} y`` row by row."""
    scale = max([1.0] + [abs(float(v)) for v in x if v != BOT])
    return all(m >= -slack * scale for m in deformed_row_margins(sys, x, beta))
