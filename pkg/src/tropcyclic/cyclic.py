"""Polars of signed cyclic cones and their extreme rays.

Row i of the cyclic matrix has entries ``eps[i, j] * (j - 1) t_i``.  Negative
entries go to ``A`` and positive ones to ``B``; the polar is ``A x <= B x``.
Its extreme rays come from tropically allowed paths (:func:`enumerate_extreme_rays`)
and, independently, from filtering every Cramer candidate
(:func:`oracle_extreme_rays`).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import GuardError
from .cone import (
    TropicalIneqSystem,
    canonical,
    check_saturation_bound,
    is_extreme,
    member,
    saturated_rows,
)
from .linalg import IndexPair, check_t, cramer_solution, default_t
from .paths import LatticePath, candidate_paths, enumerate_tropical_paths, is_tropically_allowed
from .patterns import SignPattern
from .semiring import BOT, format_maxplus, mp_power

__all__ = [
    "SignedCyclicSpec",
    "Ray",
    "build_polar",
    "path_to_ray",
    "enumerate_extreme_rays",
    "enumerate_rays_with_paths",
    "oracle_extreme_rays",
    "rays_to_json",
    "ray_set",
    "MAX_ORACLE_CELLS",
]

MAX_ORACLE_CELLS = 25


@dataclass(frozen=True)
class SignedCyclicSpec:
    pattern: SignPattern
    t: tuple[int, ...] = field(default=None)

    def __post_init__(self):
        t = default_t(self.pattern.p) if self.t is None else self.t
        object.__setattr__(self, "t", check_t(t, self.pattern.p))

    @property
    def p(self) -> int:
        return self.pattern.p

    @property
    def d(self) -> int:
        return self.pattern.d


@dataclass(frozen=True)
class Ray:
    coords: tuple
    path: LatticePath

    def as_dict(self) -> dict:
        return {
            "coords": [v if v != BOT else "-inf" for v in self.coords],
            "path": self.path.as_dict(),
        }


def build_polar(spec: SignedCyclicSpec) -> TropicalIneqSystem:
    A, B = [], []
    for i in range(spec.p):
        a_row, b_row = [], []
        for j in range(spec.d):
            value = mp_power(spec.t[i], j)
            negative = spec.pattern.signs[i, j] < 0
            a_row.append(value if negative else BOT)
            b_row.append(BOT if negative else value)
        A.append(a_row)
        B.append(b_row)
    return TropicalIneqSystem(tuple(A), tuple(B))


def _embed(z, J, d) -> tuple:
    x = [BOT] * d
    for value, j in zip(z, J):
        x[j - 1] = value
    return tuple(x)


def path_to_ray(spec: SignedCyclicSpec, path: IndexPair) -> tuple:
    """Ray attached to a tropically allowed path, last support coordinate 0."""
    if not is_tropically_allowed(path, spec.pattern):
        raise ValueError(f"path I={path.I}, J={path.J} is not tropically allowed")
    sol = cramer_solution(spec.pattern, spec.t, path)
    return _embed(sol.z, path.J, spec.d)


def enumerate_rays_with_paths(spec: SignedCyclicSpec, check: bool = True) -> list[Ray]:
    """Rays in (J, I) path order, each paired with its path.

    With ``check`` every ray is re-verified against the polar; a failure is an
    internal error.
    """
    sys = build_polar(spec)
    out = []
    for path in enumerate_tropical_paths(spec.pattern):
        x = _embed(cramer_solution(spec.pattern, spec.t, path).z, path.J, spec.d)
        if check:
            ok = member(sys, x) and is_extreme(sys, x) and check_saturation_bound(sys, x)
            ok = ok and len(saturated_rows(sys, x)) == path.k
            if not ok:
                raise AssertionError(f"ray {x} from path I={path.I}, J={path.J} fails verification")
        out.append(Ray(x, path))
    if check and len({r.coords for r in out}) != len(out):
        raise AssertionError("two paths produced the same ray")
    return out


def enumerate_extreme_rays(spec: SignedCyclicSpec) -> list[tuple]:
    return [r.coords for r in enumerate_rays_with_paths(spec)]


def oracle_extreme_rays(spec: SignedCyclicSpec) -> list[tuple]:
    """Extreme rays found by testing every Cramer candidate, with no path conditions.

    Returns canonical representatives in sorted order.
    """
    p, d = spec.p, spec.d
    if p * d > MAX_ORACLE_CELLS:
        raise GuardError(f"oracle limited to p*d <= {MAX_ORACLE_CELLS}, got {p * d}")
    sys = build_polar(spec)
    found = set()
    for ij in candidate_paths(p, d):
        sol = cramer_solution(spec.pattern, spec.t, ij)
        if not sol.feasible:
            continue
        x = canonical(_embed(sol.z, ij.J, d))
        if x in found:
            continue
        if member(sys, x) and is_extreme(sys, x):
            found.add(x)
    return sorted(found, key=_sort_key)


def _sort_key(x):
    return tuple((0, 0) if v == BOT else (1, v) for v in x)


def ray_set(rays) -> frozenset:
    return frozenset(canonical(x) for x in rays)


def rays_to_json(rays: list[Ray], indent: int | None = None) -> str:
    return json.dumps([r.as_dict() for r in rays], indent=indent)


def format_ray(x) -> str:
    return "(" + ", ".join(format_maxplus(v) for v in x) + ")"
