"""
Bounce paths and the cell-set description of ``D_n`` and ``D_{1^n}`` on
``u_lam`` for ``lam`` inside a k-rectangle.

A strong strip of size ``n`` out of ``w_lam`` strikes ``n`` cells out of the
diagram of ``lam``.  The struck-out sets are exactly those with no two cells
in one column (C1) and no south-west/north-east pair whose corner
``(i_a, j_b)`` lies in ``lam`` (C2).  For ``D_{1^n}`` the column condition is
replaced by a row condition.

>>> lam = (11, 9, 8, 8, 7, 7, 6, 5)
>>> X = {(2, 2), (2, 6), (4, 2), (4, 6), (6, 1), (6, 4)}
>>> east_south_bounce(lam, X, (2, 2)).terminal, east_south_bounce(lam, X, (6, 1)).terminal
(5, -4)
>>> len(combinatorial_D_n((2, 2, 1), 2, 4))
5
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .affine import from_word
from .nilcoxeter import NilCoxeterElement
from .shapes import (Cell, Diagram, Partition, cells, conjugate, in_shape,
                     normalize, reading_word, rectangle_for)

__all__ = [
    "BounceResult", "check_C1", "check_C2", "rows_distinct",
    "east_south_bounce", "north_west_bounce", "west_north_bounce",
    "hook_factorize", "valid_cell_sets", "combinatorial_D_n",
    "combinatorial_D_1n", "strip_ordering",
]


@dataclass(frozen=True)
class BounceResult:
    terminal: int  # content of the last cell of the path
    path: tuple[Cell, ...]


def check_C1(X: Iterable[Cell]) -> bool:
    cols = [j for _, j in X]
    return len(cols) == len(set(cols))


def rows_distinct(X: Iterable[Cell]) -> bool:
    rows = [i for i, _ in X]
    return len(rows) == len(set(rows))


def check_C2(lam: Sequence[int], X: Iterable[Cell]) -> bool:
    X = list(X)
    for ia, ja in X:
        for ib, jb in X:
            if ia > ib and ja < jb and in_shape(lam, (ia, jb)):
                return False
    return True


def _walk(lam, X, x, first, second, exits):
    """Alternate between two directions, turning on entering a cell of ``X``.

    ``exits`` maps a direction to whether leaving ``lam`` that way ends the
    path on the outside cell (True) or on the last inside cell (False).
    """
    X = set(X)
    cur = x
    path = [x]
    heading = first
    while True:
        nxt = (cur[0] + heading[0], cur[1] + heading[1])
        if not in_shape(lam, nxt):
            if exits[heading]:
                path.append(nxt)
                cur = nxt
            return BounceResult(cur[1] - cur[0], tuple(path))
        path.append(nxt)
        cur = nxt
        if nxt in X:
            heading = second if heading == first else first


EAST, SOUTH, WEST, NORTH = (0, 1), (1, 0), (0, -1), (-1, 0)
# East and North exits land just outside the diagram; South and West exits
# stop on the border cell.
_EXITS = {EAST: True, NORTH: True, SOUTH: False, WEST: False}


def east_south_bounce(lam: Sequence[int], X: Iterable[Cell], x: Cell) -> BounceResult:
    """East until a cell of ``X``, then South until a cell of ``X``, and so on."""
    return _walk(tuple(lam), X, x, EAST, SOUTH, _EXITS)


def north_west_bounce(lam: Sequence[int], X: Iterable[Cell], x: Cell) -> BounceResult:
    return _walk(tuple(lam), X, x, NORTH, WEST, _EXITS)


def west_north_bounce(lam: Sequence[int], X: Iterable[Cell], x: Cell) -> BounceResult:
    return _walk(tuple(lam), X, x, WEST, NORTH, _EXITS)


def hook_factorize(lam: Sequence[int], x: Cell, k: int) -> tuple[Partition, list[int]]:
    """Split ``w_{lam minus x}`` as ``w_{lam_x} * Gamma``.

    ``lam_x`` removes the hook of ``x`` and slides the cells below and right
    of the hook one step up and left.  ``Gamma`` reads the residues of the
    top row above the arm, right to left, then the first column beside the
    leg, bottom to top.
    """
    lam = normalize(lam)
    i, j = x
    if not in_shape(lam, x):
        raise ValueError(f"{x} is not a cell of {lam}")
    padded = list(lam) + [0]
    rows = list(lam[:i - 1])
    for r in range(i, len(lam) + 1):
        left = j - 1 if r == i else min(padded[r - 1], j - 1)
        rows.append(left + max(0, padded[r] - j))
    leg = conjugate(lam)[j - 1]
    n = k + 1
    gamma = [a % n for a in range(lam[i - 1] - 1, j - 1, -1)]
    gamma += [a % n for a in range(-leg + 1, -i + 1)]
    return normalize(rows), gamma


def valid_cell_sets(lam: Sequence[int], n: int, column_distinct: bool = True,
                    allowed: Iterable[Cell] | None = None) -> Iterator[frozenset[Cell]]:
    """``n``-subsets of ``allowed`` (default: all cells of ``lam``) satisfying
    (C2) and either distinct columns (C1) or distinct rows."""
    lam = tuple(lam)
    pool = sorted(allowed if allowed is not None else cells(lam),
                  key=lambda c: (c[1], c[0]) if column_distinct else c)
    key = 1 if column_distinct else 0

    def rec(start, chosen):
        if len(chosen) == n:
            yield frozenset(chosen)
            return
        for idx in range(start, len(pool)):
            cell = pool[idx]
            if chosen and chosen[-1][key] == cell[key]:
                continue
            if not _c2_with(lam, chosen, cell):
                continue
            chosen.append(cell)
            yield from rec(idx + 1, chosen)
            chosen.pop()

    yield from rec(0, [])


def _c2_with(lam, chosen, cell):
    ic, jc = cell
    for i, j in chosen:
        if ic > i and jc < j and in_shape(lam, (ic, j)):
            return False
        if i > ic and j < jc and in_shape(lam, (i, jc)):
            return False
    return True


def _sum_over(lam, k, sets) -> NilCoxeterElement:
    terms: dict = defaultdict(int)
    for X in sets:
        terms[from_word(k, reading_word(Diagram(lam, X), k))] += 1
    return NilCoxeterElement(k, terms)


def _require_rectangle(lam, k):
    if rectangle_for(lam, k) is None:
        raise ValueError(f"{tuple(lam)} is not inside a {k}-rectangle")


def combinatorial_D_n(lam: Sequence[int], n: int, k: int) -> NilCoxeterElement:
    """``D_n(u_lam)`` as a sum over (C1)/(C2) cell sets."""
    lam = normalize(lam)
    _require_rectangle(lam, k)
    return _sum_over(lam, k, valid_cell_sets(lam, n, column_distinct=True))


def combinatorial_D_1n(lam: Sequence[int], n: int, k: int) -> NilCoxeterElement:
    """``D_{1^n}(u_lam)`` as a sum over (C2) cell sets with distinct rows."""
    lam = normalize(lam)
    _require_rectangle(lam, k)
    return _sum_over(lam, k, valid_cell_sets(lam, n, column_distinct=False))


def strip_ordering(lam: Sequence[int], X: Iterable[Cell]) -> list[tuple[Cell, int]]:
    """The order in which a strong strip strikes out the cells of ``X``,
    with each edge label.

    Within a row, cells go right to left; across rows, cells are merged by
    decreasing East-South bounce content.
    """
    lam = normalize(lam)
    X = list(X)
    if not (check_C1(X) and check_C2(lam, X)):
        raise ValueError(f"{sorted(X)} violates (C1) or (C2) in {lam}")

    def provisional(x):
        right = [c for c in X if c[0] == x[0] and c[1] >= x[1]]
        return east_south_bounce(lam, right, x).terminal

    order = sorted(X, key=provisional, reverse=True)
    out = []
    struck: list[Cell] = []
    for x in order:
        struck.append(x)
        out.append((x, east_south_bounce(lam, struck, x).terminal))
    labels = [label for _, label in out]
    assert all(a > b for a, b in zip(labels, labels[1:])), labels
    return out
