import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tropcyclic.cone import (
    TropicalIneqSystem,
    canonical,
    check_saturation_bound,
    extreme_witnesses,
    in_general_position,
    is_extreme,
    member,
    projectively_equal,
    saturated_rows,
    scale,
    support,
    tangent_cone,
    vector_oplus,
)
from tropcyclic.cyclic import SignedCyclicSpec, build_polar, enumerate_extreme_rays
from tropcyclic.patterns import SignPattern
from tropcyclic.semiring import BOT

from conftest import random_patterns

B_ = BOT
FIG2 = TropicalIneqSystem(A=((B_, 0, B_), (B_, 1, B_)), B=((0, B_, 0), (0, B_, 2)))


def test_membership_examples():
    assert member(FIG2, (1, 1, 0))
    assert not member(FIG2, (B_, 0, B_))
    assert member(FIG2, (B_, B_, B_))


def test_saturation_examples():
    assert saturated_rows(FIG2, (1, 1, 0)) == {1, 2}
    assert saturated_rows(FIG2, (0, B_, B_)) == set()
    assert saturated_rows(FIG2, (B_, B_, B_)) == {1, 2}
    # only the second row is tight at (1, 0, -inf)
    assert saturated_rows(FIG2, (1, 0, B_)) == {2}


def test_tangent_cone_examples():
    cone = tangent_cone(FIG2, (1, 1, 0))
    assert set(cone.rows) == {(frozenset({2}), frozenset({1})), (frozenset({2}), frozenset({3}))}
    assert tangent_cone(FIG2, (0, B_, B_)).rows == ()
    assert tangent_cone(FIG2, (5, B_, 5)).rows == ()
    with pytest.raises(ValueError):
        tangent_cone(FIG2, (B_, 0, B_))


def test_extremality_examples():
    assert extreme_witnesses(FIG2, (1, 1, 0)) == [2]
    assert not is_extreme(FIG2, (1, 0, 0))
    unit = TropicalIneqSystem(A=((B_, B_),), B=((0, 0),))
    assert is_extreme(unit, (0, B_))
    assert is_extreme(unit, (B_, 7))
    assert not is_extreme(unit, (0, 0))


def test_saturation_bound_examples():
    assert check_saturation_bound(FIG2, (1, 1, 0))
    assert check_saturation_bound(FIG2, (0, B_, B_))
    assert check_saturation_bound(FIG2, (1, 0, B_))


def test_general_position_examples():
    assert in_general_position(FIG2)
    twin = TropicalIneqSystem(A=((B_, B_), (B_, B_)), B=((0, 1), (0, 1)))
    assert not in_general_position(twin)
    assert in_general_position(TropicalIneqSystem(A=((B_,),), B=((3,),)))


def test_extremality_methods_agree_exhaustively():
    # every cone point of a small box, on every 2 x 3 pattern
    values = [B_, 0, 1, 2]
    for code in range(64):
        sys = build_polar(SignedCyclicSpec(SignPattern.from_code(code, 2, 3), (0, 1)))
        for x in itertools.product(values, repeat=3):
            if x == (B_, B_, B_) or not member(sys, x):
                continue
            a = extreme_witnesses(sys, x, method="enumerate")
            b = extreme_witnesses(sys, x, method="fixpoint")
            c = extreme_witnesses(sys, x, method="enumerate", restrict_to_support=False)
            assert a == b
            assert bool(a) == bool(c)


def test_extremality_methods_agree_on_random_systems():
    rng = random.Random(3)
    for _ in range(300):
        p, d = rng.randint(1, 4), rng.randint(1, 5)
        sys = build_polar(SignedCyclicSpec(SignPattern.from_code(rng.getrandbits(p * d), p, d)))
        x = tuple(rng.choice([B_, 0, 1, 2, 3]) for _ in range(d))
        if all(v == B_ for v in x) or not member(sys, x):
            continue
        assert extreme_witnesses(sys, x, "enumerate") == extreme_witnesses(sys, x, "fixpoint")


def test_extreme_rays_are_not_sums_of_other_rays():
    for pattern in random_patterns(40, 12, seed=4, max_p=3, max_d=4):
        spec = SignedCyclicSpec(pattern)
        sys = build_polar(spec)
        rays = enumerate_extreme_rays(spec)
        for x in rays:
            assert check_saturation_bound(sys, x)
            others = [y for y in rays if not projectively_equal(x, y) and support(y) <= support(x)]
            # the largest multiples of the other rays lying below x
            combo = (B_,) * len(x)
            for y in others:
                lam = min(x[j] - y[j] for j in range(len(x)) if y[j] != B_)
                combo = vector_oplus(combo, scale(lam, y))
            assert combo != x


@given(st.integers(-30, 30))
def test_scaling_invariance(lam):
    for x in [(1, 1, 0), (1, 0, B_), (B_, 0, 0), (1, 0, 0), (3, 1, 0)]:
        y = scale(lam, x)
        assert member(FIG2, y) == member(FIG2, x)
        if member(FIG2, x):
            assert is_extreme(FIG2, y) == is_extreme(FIG2, x)


def test_canonical_form():
    assert canonical((3, 2, B_)) == (1, 0, B_)
    assert projectively_equal((4, 4, 3), (1, 1, 0))
    with pytest.raises(ValueError):
        canonical((B_, B_))


def test_shape_checks():
    with pytest.raises(ValueError):
        TropicalIneqSystem(A=((0, 0),), B=((0,),))
    with pytest.raises(ValueError):
        member(FIG2, (0, 0))
