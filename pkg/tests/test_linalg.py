import itertools
import random

import pytest

from oracles import pair_sdet
from tropcyclic.linalg import (
    IndexPair,
    SignedMatrix,
    balance_solution,
    check_t,
    cramer_determinants,
    cramer_solution,
    cyclic_matrix,
    sdet,
    tper,
)
from tropcyclic.patterns import SignPattern
from tropcyclic.semiring import BOT, MINUS_ONE, ONE, ZERO, SignedScalar, balances, stimes

pos, neg, bal = SignedScalar.pos, SignedScalar.neg, SignedScalar.bal


def from_pair(plus, minus):
    """Collapse (max positive term, max negative term) to one signed scalar."""
    if plus > minus:
        return pos(plus)
    if minus > plus:
        return neg(minus)
    return bal(plus)


def pair_entries(M):
    return [[None if x.is_zero else (x.sgn, x.modulus) for x in row] for row in M.entries]


def test_sdet_examples():
    assert sdet(SignedMatrix([[ONE, ZERO], [ZERO, ONE]])) == ONE
    assert sdet(SignedMatrix([[0, 0], [0, 0]])) == bal(0)


def test_sdet_small_pattern_minor(fig2):
    C = cyclic_matrix(fig2, (0, 1))
    # rows {1, 2}, columns {1, 2}
    assert sdet(C.submatrix([0, 1], [0, 1])) == neg(1)
    assert cramer_determinants(fig2, (0, 1), IndexPair((1, 2), (1, 2, 3)))[2] == neg(1)


def test_sdet_against_pair_oracle():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(1, 4)
        M = SignedMatrix([[rng.choice([ZERO, pos(rng.randint(-3, 3)), neg(rng.randint(-3, 3))])
                           for _ in range(n)] for _ in range(n)])
        assert sdet(M) == from_pair(*pair_sdet(pair_entries(M)))


def test_sdet_guard():
    with pytest.raises(ValueError):
        sdet(SignedMatrix([[0] * 11 for _ in range(11)]))
    with pytest.raises(ValueError):
        sdet(SignedMatrix([[0, 0]]))


def test_tper_examples():
    assert tper([[0, BOT], [BOT, 0]]) == (0, True)
    assert tper([[0, 0], [0, 0]]) == (0, False)
    assert tper([[0, 1], [2, 0]]) == (3, True)
    assert tper([[BOT, BOT], [0, 0]]) == (BOT, False)


def test_cramer_examples(fig2):
    t = (0, 1)
    assert cramer_solution(fig2, t, IndexPair((1, 2), (1, 2, 3))) == (True, (1, 1, 0))
    assert cramer_solution(fig2, t, IndexPair((), (2,))) == (True, (0,))
    assert cramer_solution(fig2, t, IndexPair((1,), (1, 3))).feasible is False


def test_one_by_one_determinants(fig2):
    D = cramer_determinants(fig2, (0, 1), IndexPair((2,), (1, 3)))
    # D_2 = eps_21 t_2^0, D_1 = eps_23 t_2^2
    assert D == [pos(2), pos(0)]
    with pytest.raises(ValueError):
        cramer_determinants(fig2, (0, 1), IndexPair((), (1,)))


def all_pairs(p, d):
    for k in range(1, min(p, d - 1) + 1):
        for I in itertools.combinations(range(1, p + 1), k):
            for J in itertools.combinations(range(1, d + 1), k + 1):
                yield IndexPair(I, J)


def check_all_minors(pattern, t):
    C = cyclic_matrix(pattern, t)
    for ij in all_pairs(pattern.p, pattern.d):
        closed = cramer_determinants(pattern, t, ij)
        for r, D in enumerate(closed):
            assert D.is_signed and not D.is_zero
            cols = [j - 1 for j in ij.J if j != ij.J[r]]
            assert sdet(C.submatrix([i - 1 for i in ij.I], cols)) == D


def test_closed_forms_match_expansion_exhaustively():
    for p in range(1, 4):
        for d in range(2, 4):
            for code in range(1 << (p * d)):
                check_all_minors(SignPattern.from_code(code, p, d), tuple(range(p)))


def test_closed_forms_match_expansion_on_random_patterns():
    rng = random.Random(7)
    for _ in range(25):
        p, d = rng.randint(1, 5), rng.randint(2, 5)
        t = tuple(sorted(rng.sample(range(-5, 15), p)))
        check_all_minors(SignPattern.from_code(rng.getrandbits(p * d), p, d), t)


def test_positive_solution_solves_split_system():
    rng = random.Random(8)
    for _ in range(300):
        p, d = rng.randint(1, 5), rng.randint(2, 6)
        pattern = SignPattern.from_code(rng.getrandbits(p * d), p, d)
        t = tuple(sorted(rng.sample(range(0, 20), p)))
        for ij in all_pairs(p, d):
            sol = cramer_solution(pattern, t, ij)
            want = all(pattern[i, ij.J[r]] != pattern[i, ij.J[r + 1]] for r, i in enumerate(ij.I))
            assert sol.feasible == want
            if not sol.feasible:
                continue
            assert sol.z[-1] == 0
            for i in ij.I:
                terms = [((j - 1) * t[i - 1] + z, pattern[i, j]) for j, z in zip(ij.J, sol.z)]
                assert max(v for v, s in terms if s > 0) == max(v for v, s in terms if s < 0)


def test_signed_solution_satisfies_cramer_relation():
    rng = random.Random(9)
    for _ in range(200):
        p, d = rng.randint(1, 5), rng.randint(2, 6)
        pattern = SignPattern.from_code(rng.getrandbits(p * d), p, d)
        t = tuple(range(p))
        ij = rng.choice(list(all_pairs(p, d)))
        z = balance_solution(pattern, t, ij)
        D = cramer_determinants(pattern, t, ij)
        k = ij.k
        for r in range(k + 1):
            left = stimes(D[k], z[r])
            sign = MINUS_ONE if (k - r) % 2 else ONE
            right = stimes(stimes(sign, D[r]), z[k])
            assert balances(left, right)
        # each row of C(I, J) z balances zero
        C = cyclic_matrix(pattern, t)
        for i in ij.I:
            total = ZERO
            for j, zr in zip(ij.J, z):
                total = total + stimes(C[i - 1, j - 1], zr)
            assert total.is_balanced


def test_index_pair_validation():
    with pytest.raises(ValueError):
        IndexPair((1,), (1,))
    with pytest.raises(ValueError):
        IndexPair((2, 1), (1, 2, 3))
    with pytest.raises(ValueError):
        IndexPair((), (0,))
    with pytest.raises(ValueError):
        IndexPair((3,), (1, 2)).check_bounds(2, 3)


def test_t_validation():
    assert check_t([0, 2, 5], 3) == (0, 2, 5)
    for bad in ([0, 0], [1, 0], [0, BOT], [0, 1.5]):
        with pytest.raises((ValueError, TypeError)):
            check_t(bad, 2)
