import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import Eps, box_extreme_rays
from tropcyclic.cone import is_extreme, member, saturated_rows, support
from tropcyclic.cyclic import (
    SignedCyclicSpec,
    build_polar,
    enumerate_extreme_rays,
    enumerate_rays_with_paths,
    oracle_extreme_rays,
    path_to_ray,
    ray_set,
    rays_to_json,
)
from tropcyclic.errors import GuardError
from tropcyclic.paths import LatticePath
from tropcyclic.patterns import SignPattern
from tropcyclic.semiring import BOT

from conftest import random_patterns

B_ = BOT
FIG2_RAYS = {(0, B_, B_), (B_, B_, 0), (1, 0, B_), (1, 1, 0), (B_, 0, 0)}


def test_polar_of_small_pattern(fig2):
    sys = build_polar(SignedCyclicSpec(fig2, (0, 1)))
    assert sys.A == ((B_, 0, B_), (B_, 1, B_))
    assert sys.B == ((0, B_, 0), (0, B_, 2))
    assert sys.has_disjoint_supports()


def test_polar_of_all_plus_pattern():
    sys = build_polar(SignedCyclicSpec(SignPattern.full(3, 4)))
    assert all(v == B_ for row in sys.A for v in row)
    assert member(sys, (5, -2, B_, 0))


def test_default_t_and_validation(fig2):
    assert SignedCyclicSpec(fig2).t == (0, 1)
    with pytest.raises(ValueError):
        SignedCyclicSpec(fig2, (1, 1))
    with pytest.raises(ValueError):
        SignedCyclicSpec(fig2, (0, 1, 2))


def test_path_to_ray_examples(fig2):
    spec = SignedCyclicSpec(fig2, (0, 1))
    assert path_to_ray(spec, LatticePath((1, 2), (1, 2, 3))) == (1, 1, 0)
    assert path_to_ray(spec, LatticePath((2,), (1, 2))) == (1, 0, B_)
    assert path_to_ray(spec, LatticePath((), (1,))) == (0, B_, B_)
    with pytest.raises(ValueError):
        path_to_ray(spec, LatticePath((), (2,)))


def test_small_pattern_rays(fig2, fig2_tall):
    spec = SignedCyclicSpec(fig2, (0, 1))
    assert set(enumerate_extreme_rays(spec)) == FIG2_RAYS
    assert set(oracle_extreme_rays(spec)) == FIG2_RAYS
    tall = SignedCyclicSpec(fig2_tall, (0, 1, 2, 3, 4))
    assert len(enumerate_extreme_rays(tall)) == 8
    assert ray_set(enumerate_extreme_rays(tall)) == ray_set(oracle_extreme_rays(tall))


def test_all_plus_rays_are_units():
    spec = SignedCyclicSpec(SignPattern.full(2, 4))
    units = {tuple(0 if j == k else B_ for j in range(4)) for k in range(4)}
    assert set(enumerate_extreme_rays(spec)) == units
    assert set(oracle_extreme_rays(spec)) == units


def test_rays_match_box_oracle():
    # the box oracle shares no code with the library
    for pattern in random_patterns(30, 9, seed=3, max_p=3, max_d=3):
        eps = Eps(pattern.to_string("\n").split("\n"))
        t = tuple(range(pattern.p))
        bound = (pattern.d - 1) * max(t) + 1
        assert ray_set(enumerate_extreme_rays(SignedCyclicSpec(pattern, t))) == box_extreme_rays(eps, t, bound)


def test_small_pattern_box_oracle(fig2):
    assert box_extreme_rays(Eps(["+-+", "+-+"]), (0, 1), 3) == FIG2_RAYS


def test_oracle_equivalence_on_random_patterns():
    for pattern in random_patterns(60, 25, seed=9, max_p=5, max_d=5):
        for t in (tuple(range(pattern.p)), tuple(3 * i for i in range(pattern.p))):
            spec = SignedCyclicSpec(pattern, t)
            assert ray_set(enumerate_extreme_rays(spec)) == ray_set(oracle_extreme_rays(spec))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 5), st.data())
def test_rays_saturate_exactly_k_rows(p, d, data):
    pattern = SignPattern.from_code(data.draw(st.integers(0, 2 ** (p * d) - 1)), p, d)
    spec = SignedCyclicSpec(pattern)
    sys = build_polar(spec)
    for ray in enumerate_rays_with_paths(spec):
        x = ray.coords
        assert member(sys, x) and is_extreme(sys, x)
        assert support(x) == set(ray.path.J)
        assert len(saturated_rows(sys, x)) == len(support(x)) - 1


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 5), st.data())
def test_ray_count_does_not_depend_on_t(p, d, data):
    pattern = SignPattern.from_code(data.draw(st.integers(0, 2 ** (p * d) - 1)), p, d)
    t = tuple(sorted(data.draw(st.sets(st.integers(-20, 20), min_size=p, max_size=p))))
    base = enumerate_extreme_rays(SignedCyclicSpec(pattern))
    other = enumerate_extreme_rays(SignedCyclicSpec(pattern, t))
    assert len(base) == len(other) == len(ray_set(other))


def test_rays_follow_t(fig2):
    spec = SignedCyclicSpec(fig2, (0, 3))
    assert set(enumerate_extreme_rays(spec)) == {(0, B_, B_), (B_, B_, 0), (3, 0, B_), (3, 3, 0), (B_, 0, 0)}


def test_json_output(fig2):
    rays = enumerate_rays_with_paths(SignedCyclicSpec(fig2))
    data = json.loads(rays_to_json(rays))
    assert data[0] == {"coords": [0, "-inf", "-inf"], "path": {"I": [], "J": [1]}}
    assert [tuple(r["path"]["J"]) for r in data] == sorted(tuple(r["path"]["J"]) for r in data)


def test_oracle_guard():
    with pytest.raises(GuardError):
        oracle_extreme_rays(SignedCyclicSpec(SignPattern.full(5, 6)))
