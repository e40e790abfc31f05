from collections import Counter
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from nckschur.affine import from_word, identity, transposition
from nckschur.nilcoxeter import h_lambda, one, u, u_from_word
from nckschur.strong import (D, D_J, _translates, ascent_composition,
                             down_covers, emit_graph, format_edges,
                             label_paths, marked_down_edges, strong_strips,
                             to_dot, translate_count)

from conftest import affine_elements

# (source word, target word, label) for k = 2 below length 4
K2_EDGES = [
    ("2,0", "2", 1), ("1,2,0", "1,0", 0), ("0,1,2,0", "0,1,2", 2), ("1,0", "1", 2),
    ("0,2,1", "2,1", 1), ("2,1,0", "1,0", 0), ("2,1,0", "1,0", 3), ("1,2,0", "2,0", -1),
    ("1,2,0", "2,0", 2), ("0,1", "1", 1), ("0,2,0", "0,2", 0), ("1,2,1,0", "2,1,0", -1),
    ("1,0", "0", 2), ("0,1,2,0", "0,1,0", 1), ("0,1,2,0", "0,2,0", -1),
    ("0,1,2,0", "0,2,0", 2), ("0", "", 1), ("0,2", "2", 1), ("0,1,2", "1,2", 1),
    ("1,2,0", "1,2", 2), ("2,0", "0", 0), ("0,1,2,0", "1,2,0", -2),
    ("0,1,2,0", "1,2,0", 1), ("0,2,1,0", "0,2,1", 4), ("0,1,0", "0,1", 2),
    ("2,1,0", "2,1", 3), ("1,2,1,0", "1,2,1", 3), ("0,2,1,0", "0,2,0", 4),
    ("2,1,0", "2,0", 3), ("0,2,1,0", "2,1,0", 1), ("0,2,1,0", "2,1,0", 4),
    ("1,2,1,0", "1,2,0", 3), ("0,2,1,0", "0,1,0", 1), ("0,2,1,0", "0,1,0", 4),
]


def _w(text):
    return from_word(2, [int(t) for t in text.split(",") if t])


def U(*word, k=2):
    return u_from_word(k, list(word))


def test_graph_below_length_4():
    vertices, edges = emit_graph(2, 4)
    expected = Counter((_w(s), _w(t), label) for s, t, label in K2_EDGES)
    got = Counter((e.source, e.target, e.label) for e in edges)
    assert got == expected
    named = {_w(s) for s, _, _ in K2_EDGES} | {_w(t) for _, t, _ in K2_EDGES}
    assert set(vertices) == named
    assert len(vertices) == 20 and len(edges) == 34


def test_graph_small_cases():
    vertices, edges = emit_graph(2, 0)
    assert vertices == [identity(2)] and edges == []
    assert len(emit_graph(2, 2)[1]) == 5
    with pytest.raises(ValueError):
        emit_graph(2, -1)


def test_double_edge_labels():
    x, y = _w("0,1,2,0"), _w("1,2,0")
    assert sorted(e.label for e in marked_down_edges(x) if e.target == y) == [-2, 1]
    assert sorted(e.label for e in marked_down_edges(x)) == [-2, -1, 1, 1, 2, 2]
    assert {y for y, _ in down_covers(x)} == {_w("1,2,0"), _w("0,2,0"), _w("0,1,0"), _w("0,1,2")}


def test_down_covers_of_identity():
    assert down_covers(identity(3)) == ()


@pytest.mark.parametrize("k", [1, 2, 3])
def test_down_covers_against_subword_oracle(k):
    # every cover of w is w with one letter of a reduced word deleted
    for word in [[0, 1, 2, 0][: k + 2], [1, 0, 2, 1, 0][: k + 3], [k, 0, 1]]:
        word = [a % (k + 1) for a in word]
        w = from_word(k, word)
        if w.length != len(word):
            continue
        oracle = set()
        for pos in range(len(word)):
            v = from_word(k, word[:pos] + word[pos + 1:])
            if v.length == w.length - 1:
                oracle.add(v)
        assert {y for y, _ in down_covers(w)} == oracle


def test_dot_output():
    vertices, edges = emit_graph(2, 1)
    assert to_dot(vertices, edges) == 'digraph G {\n  "1";\n  "s0";\n  "s0" -> "1" [label="1"];\n}\n'
    assert format_edges(edges) == "s0 1 1\n"


def test_down_operator_examples():
    x = U(0, 1, 2, 0)
    assert D(x, 1) == 2 * U(0, 2, 0) + U(0, 1, 2) + 2 * U(1, 2, 0) + U(0, 1, 0)
    assert D(x, 2) == U(0, 2) + U(1, 2) + U(2, 0) + U(1, 0)
    assert D(x, 0) == x


def test_D_J_examples():
    x = U(1, 2, 1, 0)
    assert D_J(x, [3]) == U(2) + U(0)
    assert D_J(x, [2, 1]) == U(2) + 2 * U(0) + U(1)
    assert D_J(x, [1, 2]) == U(2) + 2 * U(0) + U(1)
    assert D_J(x, [1, 1, 1]) == U(0) + U(1)


def test_ascent_composition():
    assert ascent_composition([3, 2, 0, 3, 4, 1]) == (3, 1, 2)
    assert ascent_composition([5, 3, 1]) == (3,)
    assert ascent_composition([1, 3, 5]) == (1, 1, 1)
    with pytest.raises(ValueError):
        ascent_composition([])
    with pytest.raises(ValueError):
        label_paths(identity(2), [2, 0])


@given(st.integers(1, 4), st.integers(-8, 8), st.integers(1, 12), st.integers(0, 4))
def test_translate_count_matches_enumeration(k, a, d, m):
    m %= k + 1
    b = a + d
    assert translate_count(k, (a, b), m) == len(_translates(k, (a, b), m))
    n = k + 1
    brute = [r for r in range(-20, 21) if a + r * n <= m < b + r * n]
    assert translate_count(k, (a, b), m) == len(brute)


@settings(max_examples=60)
@given(affine_elements(k_max=3, max_len=6), st.integers(0, 3))
def test_edge_labels_and_translates(w, m):
    m %= w.k + 1
    for e in marked_down_edges(w, m):
        i, j = e.instance
        assert i <= m < j
        assert e.target * transposition(w.k, i, j) == w
        assert e.label == e.source(i) == e.target(j)
        assert e.target.length == w.length - 1


@settings(max_examples=40)
@given(affine_elements(k_max=3, max_len=6), st.integers(1, 3))
def test_strip_endpoint_lengths(w, size):
    for path in strong_strips(w, size):
        assert path[-1].target.length == w.length - size
        assert all(a.label > b.label for a, b in zip(path, path[1:]))


@settings(max_examples=40)
@given(affine_elements(k_max=3, max_len=6), st.integers(1, 3))
def test_single_part_composition_is_strip(w, i):
    assert D_J(u(w), [i]) == D(u(w), i)


@pytest.mark.parametrize("k", [2, 3])
def test_D_on_B_independent_of_marking(k):
    for lam in [(1,), (2,), (1, 1), (2, 1)]:
        if lam[0] > k:
            continue
        b = h_lambda(k, lam)
        for i in range(1, sum(lam) + 1):
            results = {D(b, i, m) for m in range(k + 1)}
            assert len(results) == 1


def test_module_property_examples():
    k = 2
    for wword, vword in product([[1, 0], [0, 2, 1, 0], [2, 1, 0]], [[1], [2, 1], [1, 2]]):
        w, v = from_word(k, wword), from_word(k, vword)
        if (w * v).length != w.length + v.length:
            continue
        for i in range(1, 4):
            assert D(u(w) * u(v), i) == D(u(w), i) * u(v)


def test_marking_range():
    with pytest.raises(ValueError):
        marked_down_edges(identity(2), 3)
    with pytest.raises(ValueError):
        D(one(2), -1)
