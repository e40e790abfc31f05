import itertools
from collections import deque

import pytest
from hypothesis import given, strategies as st

from nckschur.affine import (AffinePermutation, canonical_reflection,
                             from_word, grassmannian_factorize, identity,
                             is_reduced, multiply, reduced_word, simple,
                             transposition)

from conftest import affine_elements


def test_identity_window():
    assert identity(2).window == (1, 2, 3)
    assert identity(4).length == 0
    assert identity(2) == from_word(2, [])


def test_s0_swaps_zero_and_one():
    s0 = simple(2, 0)
    assert s0.window == (0, 2, 4)
    assert s0(0) == 1 and s0(1) == 0


def test_apply_beyond_window():
    assert identity(2)(7) == 7
    y = from_word(2, [1, 2, 0])
    assert (y(1), y(4)) == (-2, 1)


def test_window_validation():
    with pytest.raises(ValueError):
        AffinePermutation(2, (1, 2, 4))
    with pytest.raises(ValueError):
        AffinePermutation(2, (1, 4, 1))
    with pytest.raises(ValueError):
        AffinePermutation(2, (1, 2))


def test_lengths_of_named_words():
    assert from_word(2, [0, 1, 2, 0]).length == 4
    assert from_word(5, [4, 1, 0, 5, 2, 1, 0]).length == 7


def test_is_reduced_examples():
    assert is_reduced(2, [0, 1, 2, 0])
    assert not is_reduced(3, [1, 2, 1, 2])
    assert not is_reduced(2, [0, 0])


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_squares_of_cycles_not_reduced(k):
    for a in range(1, k + 1):
        for b in range(a + 1, k + 2):
            cycle = list(range(a, b))
            assert not is_reduced(k, [i % (k + 1) for i in cycle * 2])


def test_transposition_examples():
    assert transposition(2, 1, 2) == simple(2, 1)
    w = from_word(2, [0, 1, 2, 0])
    y = from_word(2, [1, 2, 0])
    assert y.inverse() * w == transposition(2, -4, 1) == transposition(2, -1, 4)
    assert canonical_reflection(2, -4, 1) == canonical_reflection(2, -1, 4)
    with pytest.raises(ValueError):
        transposition(2, 1, 4)


def test_hook_cell_transposition():
    big = from_word(5, [4, 1, 0, 5, 2, 1, 0])
    small = from_word(5, [4, 1, 5, 2, 1, 0])
    assert big == small * transposition(5, -1, 2)


def test_multiply_examples():
    w = from_word(2, [0, 1, 2, 0])
    assert multiply(w, identity(2)) == w
    assert from_word(2, [1, 2]) == multiply(simple(2, 1), simple(2, 2))
    assert multiply(w, w.inverse()) == identity(2)
    with pytest.raises(ValueError):
        multiply(w, identity(3))


def _bfs_lengths(k, depth):
    seen = {identity(k): 0}
    queue = deque([identity(k)])
    while queue:
        w = queue.popleft()
        if seen[w] == depth:
            continue
        for i in range(k + 1):
            v = w * simple(k, i)
            if v not in seen:
                seen[v] = seen[w] + 1
                queue.append(v)
    return seen


@pytest.mark.parametrize("k", [1, 2, 3])
def test_length_matches_bfs(k):
    for w, d in _bfs_lengths(k, 5).items():
        assert w.length == d


def test_reduced_word_is_lex_smallest():
    k = 2
    w = from_word(k, [0, 1, 2, 0])
    words = [list(p) for p in itertools.product(range(k + 1), repeat=4)
             if from_word(k, p) == w and is_reduced(k, p)]
    assert reduced_word(w) == min(words)


@given(affine_elements())
def test_reduced_word_round_trip(w):
    word = reduced_word(w)
    assert len(word) == w.length
    assert from_word(w.k, word) == w


@given(affine_elements(), st.data())
def test_simple_multiplication_changes_length_by_one(w, data):
    i = data.draw(st.integers(0, w.k))
    assert abs((w * simple(w.k, i)).length - w.length) == 1
    assert (i in w.right_descents()) == ((w * simple(w.k, i)).length < w.length)
    assert (i in w.left_descents()) == ((simple(w.k, i) * w).length < w.length)


@given(affine_elements(), st.data())
def test_reflections_change_length_by_odd_amount(w, data):
    a = data.draw(st.integers(-6, 6))
    b = data.draw(st.integers(-6, 6).filter(lambda b: (b - a) % (w.k + 1)))
    assert abs((w * transposition(w.k, a, b)).length - w.length) % 2 == 1


@given(affine_elements(), st.integers(-50, 50))
def test_periodicity(w, i):
    assert w(i + w.k + 1) == w(i) + w.k + 1


@given(affine_elements(), st.integers(0, 4))
def test_grassmannian_factorization(w, m):
    m = m % (w.k + 1)
    left, right = grassmannian_factorize(w, m)
    assert left * right == w
    assert left.length + right.length == w.length
    assert left.is_grassmannian(m)
    assert m not in [i for i in range(w.k + 1) if i in reduced_word(right)]


def test_grassmannian_factorization_examples():
    g = from_word(2, [1, 0])
    assert grassmannian_factorize(g) == (g, identity(2))
    assert grassmannian_factorize(identity(3)) == (identity(3), identity(3))
    left, right = grassmannian_factorize(from_word(5, [4, 1, 5, 2, 1, 0]))
    assert (reduced_word(left), reduced_word(right)) == ([2, 1, 4, 5, 0], [2])


def test_serialization_round_trip():
    w = from_word(3, [0, 1, 3, 2])
    assert AffinePermutation.from_dict(w.to_dict()) == w
    assert w.to_dict() == {"k": 3, "window": list(w.window)}
