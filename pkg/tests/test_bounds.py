import numpy as np
import pytest

from oracles import gale_count
from tropcyclic.bounds import (
    NotCovered,
    alternating_pattern,
    attained_or_none,
    attained_pattern,
    binomial,
    bound_report,
    checkerboard_pattern,
    decomposition_bound,
    mcmullen_U,
    natural_lower_bound,
    natural_pattern,
    trop_upper_bound,
    typed_path_counts,
)
from tropcyclic.paths import count_allowed_paths, count_paths_signs, count_tropical_paths

from conftest import random_patterns

NATURAL_14_7 = [
    "++----+", "+++---+", "++++--+",
    *["+-+++-+"] * 8,
    "+--++++", "+---+++", "+----++",
]


def test_mcmullen_examples():
    assert mcmullen_U(5, 2) == 5
    assert mcmullen_U(8, 2) == 8
    assert mcmullen_U(6, 4) == 9
    assert mcmullen_U(9, 4) == 27
    assert mcmullen_U(7, 4) == 14
    assert mcmullen_U(5, 3) == 6
    with pytest.raises(ValueError):
        mcmullen_U(3, 3)


def test_mcmullen_matches_gale_count():
    for n in range(1, 13):
        for k in range(n):
            assert mcmullen_U(n, k) == gale_count(n, k)


def test_mcmullen_is_exact_for_large_inputs():
    assert mcmullen_U(200, 100) > 2**64
    assert binomial(3, 5) == 0 and binomial(-1, 0) == 0


def test_trop_upper_bound_examples():
    assert trop_upper_bound(5, 3) == 44
    assert trop_upper_bound(1, 1) == 1
    assert trop_upper_bound(14, 7) == 5440


def test_natural_pattern_reproduces_the_drawing():
    pattern = natural_pattern(14, 7)
    assert pattern.to_string("\n").split("\n") == NATURAL_14_7
    assert natural_lower_bound(14, 7) == 210
    assert count_tropical_paths(pattern) >= 210


def test_natural_pattern_shape():
    for d in range(4, 8):
        for p in range(2 * d, 2 * d + 4):
            pattern = natural_pattern(p, d)
            assert (pattern.signs[:, 0] == 1).all() and (pattern.signs[:, -1] == 1).all()
            assert count_tropical_paths(pattern) >= natural_lower_bound(p, d)
    with pytest.raises(ValueError):
        natural_pattern(13, 7)


def test_checkerboard_pattern():
    assert checkerboard_pattern(1, 3).to_string() == "+-+"
    for p, d in [(1, 3), (1, 5), (2, 5), (2, 7), (3, 7)]:
        assert count_tropical_paths(checkerboard_pattern(p, d)) >= mcmullen_U(d, d - p - 1)


def test_attained_examples():
    assert count_tropical_paths(attained_pattern(2, 3)) == 5
    assert attained_pattern(2, 3).to_string("/") == "+-+/-++"
    for p in range(1, 9):
        assert count_tropical_paths(attained_pattern(p, 4)) == 2 * (p + 2) == mcmullen_U(p + 4, 3)
    assert attained_pattern(1, 5).to_string() == "+-+-+"
    assert count_tropical_paths(attained_pattern(1, 5)) == 9


def test_attained_patterns_reach_the_upper_bound():
    covered = set()
    for p in range(1, 12):
        for d in range(1, 13 - p):
            pattern = attained_or_none(p, d)
            if pattern is None:
                continue
            covered.add((p, d))
            assert count_tropical_paths(pattern) == mcmullen_U(p + d, d - 1)
    assert {(3, 5), (3, 6), (4, 6), (4, 8), (2, 9)} <= covered


def test_attained_reports_uncovered_sizes():
    for p, d in [(4, 5), (5, 5), (6, 6)]:
        with pytest.raises(NotCovered):
            attained_pattern(p, d)
        assert attained_or_none(p, d) is None


def test_single_row_tightness():
    # one inequality: every pattern count stays below U(d + 1, d - 2)
    for d in range(3, 13):
        assert count_tropical_paths(attained_pattern(1, d)) == mcmullen_U(d + 1, d - 1)


def test_sandwich_on_random_patterns():
    rng = np.random.default_rng(12)
    for p in range(1, 9):
        for d in range(1, 9):
            negs = rng.random((1000, p, d)) < 0.5
            ntrop = count_paths_signs(negs)
            nclass = count_paths_signs(negs, classical=True)
            assert (ntrop <= trop_upper_bound(p, d)).all()
            assert (ntrop <= nclass).all()
            assert (nclass <= mcmullen_U(p + d, d - 1)).all()


def test_decomposition_bound_spot_check():
    for pattern in random_patterns(150, 16, seed=13, max_p=4, max_d=4):
        assert count_tropical_paths(pattern) <= decomposition_bound(pattern)
    for pattern in [attained_pattern(3, 4), alternating_pattern(4, 4), checkerboard_pattern(4, 4)]:
        assert count_tropical_paths(pattern) <= decomposition_bound(pattern)


def test_minus_plus_type_count_is_bounded():
    for pattern in random_patterns(300, 25, seed=14, max_p=5, max_d=5):
        n_pm, n_mp, n_pm_last = typed_path_counts(pattern)
        d = pattern.d
        assert n_mp <= 2**d - 1
        assert n_pm <= 2**d - 1
        assert n_pm_last <= 2 ** (d - 1)


def test_bound_report():
    report = bound_report(14, 7)
    assert report.upper_trop == 5440
    assert report.upper_mcmullen == mcmullen_U(21, 6)
    assert report.lower_natural >= 210
    assert report.consistent()
    assert bound_report(2, 5).lower_natural is None


def test_alternating_pattern_counts():
    assert alternating_pattern(2, 4).to_string("/") == "+-+-/+-+-"
    assert count_allowed_paths(alternating_pattern(3, 4)) == mcmullen_U(7, 3)
