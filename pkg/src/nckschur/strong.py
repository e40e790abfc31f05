"""
The marked strong order graph and the down operators ``D_J``.

For a marking ``m`` in ``{0, ..., k}`` there is an edge ``x -> y`` for every
pair ``i <= m < j`` with ``y * t_{i,j} = x`` and ``length(x) = length(y) + 1``;
the edge is labelled ``y(j) = x(i)``.  Several pairs may give the same
``y``, so the graph has multi-edges.

>>> from .affine import from_word
>>> x = from_word(2, [0, 1, 2, 0])
>>> sorted(e.label for e in marked_down_edges(x) if e.target == from_word(2, [1, 2, 0]))
[-2, 1]
>>> ascent_composition([3, 2, 0, 3, 4, 1])
(3, 1, 2)
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .affine import (AffinePermutation, Reflection, identity, reduced_word,
                     transposition)
from .nilcoxeter import NilCoxeterElement, format_word

__all__ = [
    "MarkedEdge", "down_covers", "translate_count", "marked_down_edges",
    "strong_strips", "D", "D_J", "ascent_composition", "label_paths",
    "emit_graph", "to_dot", "format_edges",
]


@dataclass(frozen=True)
class MarkedEdge:
    source: AffinePermutation
    target: AffinePermutation
    label: int
    instance: Reflection  # the translate (i, j) with i <= m < j


@lru_cache(maxsize=None)
def down_covers(w: AffinePermutation) -> tuple[tuple[AffinePermutation, Reflection], ...]:
    """All ``(y, (a, b))`` with ``y * t_{a,b} = w`` and ``length(y) = length(w) - 1``.

    One entry per reflection class; ``1 <= a <= k+1``.  If ``w(a) > w(b)``
    with ``b = a + d``, the pairs ``(a, b - r(k+1))`` are inversions as well,
    which caps ``d`` below ``(k+1) * (length(w) + 1)``.
    """
    n, lw = w.k + 1, w.length
    out = []
    for a in range(1, n + 1):
        wa = w(a)
        for b in range(a + 1, a + n * (lw + 1) + 1):
            if (b - a) % n == 0 or w(b) > wa:
                continue
            y = w * transposition(w.k, a, b)
            if y.length == lw - 1:
                out.append((y, (a, b)))
    return tuple(out)


def translate_count(k: int, refl: Reflection, m: int) -> int:
    """Number of translates ``(a + r(k+1), b + r(k+1))`` with ``a + r(k+1) <= m < b + r(k+1)``."""
    n = k + 1
    a, b = refl
    # floor((m - a) / n) - ceil((m + 1 - b) / n) + 1
    return max(0, (m - a) // n + (b - m - 1) // n + 1)


def _translates(k: int, refl: Reflection, m: int) -> list[Reflection]:
    n = k + 1
    a, b = refl
    r_lo = -((b - m - 1) // n)  # ceil((m + 1 - b) / n)
    r_hi = (m - a) // n
    return [(a + r * n, b + r * n) for r in range(r_lo, r_hi + 1)]


@lru_cache(maxsize=None)
def marked_down_edges(w: AffinePermutation, m: int = 0) -> tuple[MarkedEdge, ...]:
    if not 0 <= m <= w.k:
        raise ValueError(f"marking {m} out of range for k={w.k}")
    edges = []
    for y, refl in down_covers(w):
        for i, j in _translates(w.k, refl, m):
            edges.append(MarkedEdge(w, y, y(j), (i, j)))
    return tuple(edges)


def ascent_composition(labels: Sequence[int]) -> tuple[int, ...]:
    if not labels:
        raise ValueError("ascent composition of an empty sequence")
    parts, run = [], 1
    for prev, cur in zip(labels, labels[1:]):
        if prev < cur:
            parts.append(run)
            run = 1
        else:
            run += 1
    parts.append(run)
    return tuple(parts)


def _ascent_positions(J: Sequence[int]) -> set[int]:
    pos, acc = set(), 0
    for part in J[:-1]:
        acc += part
        pos.add(acc)
    return pos


def label_paths(w: AffinePermutation, J: Sequence[int], m: int = 0
                ) -> list[list[MarkedEdge]]:
    """All paths from ``w`` whose label sequence has ascent composition ``J``."""
    J = tuple(J)
    if not J or any(p <= 0 for p in J):
        raise ValueError(f"not a composition: {J}")
    total = sum(J)
    ascents = _ascent_positions(J)
    out: list[list[MarkedEdge]] = []
    path: list[MarkedEdge] = []

    def rec(cur):
        depth = len(path)
        if depth == total:
            out.append(list(path))
            return
        for e in marked_down_edges(cur, m):
            if depth:
                prev = path[-1].label
                # position `depth` follows an ascent iff it starts a new part
                if (depth in ascents) != (prev < e.label):
                    continue
            path.append(e)
            rec(e.target)
            path.pop()

    rec(w)
    return out


def strong_strips(w: AffinePermutation, size: int, m: int = 0
                  ) -> list[list[MarkedEdge]]:
    """Paths of ``size`` edges from ``w`` with strictly decreasing labels."""
    out: list[list[MarkedEdge]] = []
    path: list[MarkedEdge] = []

    def rec(cur):
        if len(path) == size:
            out.append(list(path))
            return
        for e in marked_down_edges(cur, m):
            if path and e.label >= path[-1].label:
                continue
            path.append(e)
            rec(e.target)
            path.pop()

    rec(w)
    return out


def _apply(element: NilCoxeterElement, paths_of) -> NilCoxeterElement:
    out: dict[AffinePermutation, int] = defaultdict(int)
    for w, c in element.items():
        for path in paths_of(w):
            end = path[-1].target if path else w
            out[end] += c
    return NilCoxeterElement(element.k, out)


def D(element: NilCoxeterElement, i: int, m: int = 0) -> NilCoxeterElement:
    """The down operator ``D_i^(m)``: sum over strong strips of size ``i``."""
    if i < 0:
        raise ValueError(f"negative strip size {i}")
    return _apply(element, lambda w: strong_strips(w, i, m))


def D_J(element: NilCoxeterElement, J: Sequence[int], m: int = 0) -> NilCoxeterElement:
    """The down operator ``D_J^(m)`` for a composition ``J``."""
    return _apply(element, lambda w: label_paths(w, J, m))


def emit_graph(k: int, max_length: int, m: int = 0
               ) -> tuple[list[AffinePermutation], list[MarkedEdge]]:
    """The part of the marked graph below the m-Grassmannian elements of
    length ``max_length``.

    Returns the vertices reached by following marked edges down from those
    elements, and every marked edge leaving a reached vertex.
    """
    if max_length < 0:
        raise ValueError("max_length must be nonnegative")
    # removing a left letter keeps an element m-Grassmannian
    top = {identity(k)}
    for level in range(1, max_length + 1):
        top = {v for w in top for v in (w.left_mult_simple(i) for i in range(k + 1))
               if v.length == level and v.is_grassmannian(m)}
    seen = set(top)
    stack = list(top)
    edges: list[MarkedEdge] = []
    while stack:
        w = stack.pop()
        for e in marked_down_edges(w, m):
            edges.append(e)
            if e.target not in seen:
                seen.add(e.target)
                stack.append(e.target)
    vertices = sorted(seen, key=lambda w: (w.length, w.window))
    edges.sort(key=lambda e: (e.source.length, e.source.window, e.target.window, e.label))
    return vertices, edges


def _node_name(w: AffinePermutation) -> str:
    word = reduced_word(w)
    return "1" if not word else format_word(word, w.k).replace("u", "s")


def to_dot(vertices: Iterable[AffinePermutation], edges: Iterable[MarkedEdge]) -> str:
    lines = ["digraph G {"]
    for w in vertices:
        lines.append(f'  "{_node_name(w)}";')
    for e in edges:
        lines.append(f'  "{_node_name(e.source)}" -> "{_node_name(e.target)}" '
                     f'[label="{e.label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def format_edges(edges: Iterable[MarkedEdge]) -> str:
    return "".join(f"{_node_name(e.source)} {_node_name(e.target)} {e.label}\n"
                   for e in edges)
