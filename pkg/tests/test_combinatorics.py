from itertools import permutations
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from narylie.combinatorics import permutation_parity, sort_with_sign, unshuffles


def _brute_parity(seq):
    """Parity by explicit transposition counting (selection sort)."""
    s, sign = list(seq), 1
    for i in range(len(s)):
        j = s.index(min(s[i:]), i)
        if j != i:
            s[i], s[j] = s[j], s[i]
            sign = -sign
    return sign


def test_sort_with_sign_examples():
    assert sort_with_sign((2, 1, 3)) == ((1, 2, 3), -1)
    assert sort_with_sign((1, 1, 2)) is None
    assert sort_with_sign((3, 2, 1)) == ((1, 2, 3), -1)
    assert sort_with_sign(()) == ((), 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_sort_with_sign_against_brute_force(n):
    for perm in permutations(range(1, n + 1)):
        assert sort_with_sign(perm) == (tuple(range(1, n + 1)), _brute_parity(perm))


@given(st.lists(st.integers(1, 9), min_size=0, max_size=6, unique=True), st.randoms())
def test_permuting_input_multiplies_sign(idx, rnd):
    perm = list(range(len(idx)))
    rnd.shuffle(perm)
    shuffled = [idx[i] for i in perm]
    base, s0 = sort_with_sign(idx)
    again, s1 = sort_with_sign(shuffled)
    assert base == again
    assert s1 == s0 * permutation_parity(perm)


def test_unshuffles_examples():
    assert unshuffles(3, 2) == (((1, 2), (3,), 1), ((1, 3), (2,), -1), ((2, 3), (1,), 1))
    assert unshuffles(4, 4) == (((1, 2, 3, 4), (), 1),)
    assert unshuffles(2, 1) == (((1,), (2,), 1), ((2,), (1,), -1))
    with pytest.raises(ValueError):
        unshuffles(2, 3)


@pytest.mark.parametrize("total", range(0, 7))
def test_unshuffle_counts_and_signs(total):
    for k in range(total + 1):
        splits = unshuffles(total, k)
        assert len(splits) == comb(total, k)
        assert sum(s * s for _, _, s in splits) == comb(total, k)
        for I, J, s in splits:
            assert s == _brute_parity(I + J)


@pytest.mark.parametrize("total", range(0, 7))
def test_unshuffle_complement_bijection(total):
    for k in range(total + 1):
        fwd = {(I, J): s for I, J, s in unshuffles(total, k)}
        back = {(J, I): s for I, J, s in unshuffles(total, total - k)}
        assert fwd.keys() == back.keys()
        ratio = (-1) ** (k * (total - k))
        assert all(back[key] == ratio * s for key, s in fwd.items())
