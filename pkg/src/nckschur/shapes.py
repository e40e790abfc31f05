"""
Partitions, cells, k-bounded partitions, (k+1)-cores and diagrams with
removed cells.

Cells are ``(row, col)`` pairs in English notation, row 1 on top.  The
content of ``(i, j)`` is ``j - i`` and its residue is the content modulo
``k + 1``.

Three avatars of the same object are connected here:

* k-bounded partitions (all parts ``<= k``),
* (k+1)-cores (no hook length divisible by ``k + 1``),
* 0-Grassmannian elements of the affine symmetric group.

>>> bounded_to_core(4, (3, 2, 1, 1))
(4, 2, 1, 1)
>>> core_to_bounded(4, (5, 2, 2))
(3, 2, 2)
>>> act_word_on_core(4, [3, 2, 0, 3], (2, 1))
(4, 2, 1, 1)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .affine import AffinePermutation, from_word, reduced_word

__all__ = [
    "Partition", "Cell", "Diagram",
    "normalize", "conjugate", "contains", "cells", "size",
    "content", "residue", "rectangle", "rectangle_for", "partitions_inside",
    "bounded_partitions", "hook_length", "is_core", "is_bounded",
    "bounded_to_core", "core_to_bounded", "act_u_on_core", "act_word_on_core",
    "core_to_grassmannian", "grassmannian_to_core", "bounded_to_grassmannian",
    "grassmannian_to_bounded", "reading_word", "removable_cells", "addable_cells",
]

Partition = tuple[int, ...]
Cell = tuple[int, int]


def normalize(parts: Iterable[int]) -> Partition:
    """Validate a partition and drop trailing zeros."""
    parts = tuple(int(p) for p in parts)
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"not weakly decreasing: {parts}")
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    return tuple(p for p in parts if p > 0)


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True when the diagram of ``mu`` sits inside the diagram of ``lam``."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for l, m in zip(lam, mu))


def cells(lam: Sequence[int]) -> list[Cell]:
    return [(i, j) for i, row in enumerate(lam, start=1) for j in range(1, row + 1)]


def in_shape(lam: Sequence[int], cell: Cell) -> bool:
    i, j = cell
    return 1 <= i <= len(lam) and 1 <= j <= lam[i - 1]


def content(cell: Cell) -> int:
    return cell[1] - cell[0]


def residue(cell: Cell, k: int) -> int:
    return (cell[1] - cell[0]) % (k + 1)


def rectangle(k: int, c: int) -> Partition:
    """The k-rectangle ``(c^(k+1-c))``."""
    if not 0 <= c <= k:
        raise ValueError(f"c={c} out of range for k={k}")
    return normalize((c,) * (k + 1 - c))


def rectangle_for(lam: Sequence[int], k: int) -> int | None:
    """Smallest ``c`` with ``lam`` inside ``rectangle(k, c)``, or None."""
    for c in range(k + 1):
        if contains(rectangle(k, c), lam) or not lam:
            return c
    return None


def partitions_inside(outer: Sequence[int]) -> Iterator[Partition]:
    """All partitions contained in ``outer``, smallest rows first."""
    outer = tuple(outer)

    def rec(row, bound):
        if row == len(outer):
            yield ()
            return
        for p in range(min(bound, outer[row]) + 1):
            if p == 0:
                yield ()
            else:
                for rest in rec(row + 1, p):
                    yield (p,) + rest

    yield from rec(0, outer[0] if outer else 0)


def bounded_partitions(n: int, k: int) -> list[Partition]:
    """k-bounded partitions of ``n`` in reverse lexicographic order."""
    out = []

    def rec(remaining, bound, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(bound, remaining), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, k, [])
    return out


def is_bounded(lam: Sequence[int], k: int) -> bool:
    return not lam or lam[0] <= k


def hook_length(lam: Sequence[int], cell: Cell) -> int:
    i, j = cell
    lam_conj = conjugate(lam)
    return (lam[i - 1] - j) + (lam_conj[j - 1] - i) + 1


def is_core(lam: Sequence[int], k: int) -> bool:
    n = k + 1
    return all(hook_length(lam, c) % n for c in cells(lam))


def removable_cells(lam: Sequence[int]) -> list[Cell]:
    lam = tuple(lam)
    return [(i, lam[i - 1]) for i in range(1, len(lam) + 1)
            if i == len(lam) or lam[i] < lam[i - 1]]


def addable_cells(lam: Sequence[int]) -> list[Cell]:
    lam = tuple(lam)
    out = [(i, lam[i - 1] + 1) for i in range(1, len(lam) + 1)
           if i == 1 or lam[i - 2] > lam[i - 1]]
    out.append((len(lam) + 1, 1))
    return out


def core_to_bounded(k: int, core: Sequence[int]) -> Partition:
    """Row ``i`` of the result counts cells of row ``i`` with hook ``<= k``."""
    core = normalize(core)
    if not is_core(core, k):
        raise ValueError(f"{core} is not a {k + 1}-core")
    return normalize(sum(1 for j in range(1, core[i - 1] + 1)
                         if hook_length(core, (i, j)) <= k)
                     for i in range(1, len(core) + 1))


def bounded_to_core(k: int, lam: Sequence[int]) -> Partition:
    """Inverse of :func:`core_to_bounded`.

    Rows are placed bottom to top; each row is pushed right until every one
    of its cells has hook length at most ``k``.
    """
    lam = normalize(lam)
    if not is_bounded(lam, k):
        raise ValueError(f"{lam} is not {k}-bounded")
    rows: list[int] = []  # core rows built so far, bottom row first
    for part in reversed(lam):
        shift = 0
        while True:
            length = part + shift
            # cells below column j in the rows already placed
            below = [sum(1 for r in rows if r >= j) for j in range(1, length + 1)]
            # the leftmost bounded cell sits in column shift+1
            hook = (length - (shift + 1)) + below[shift] + 1
            if hook <= k:
                break
            shift += 1
        rows.append(part + shift)
    return tuple(reversed(rows))


def act_u_on_core(k: int, core: Sequence[int], i: int) -> Partition | None:
    """The nilCoxeter action of ``u_i`` on a (k+1)-core.

    Adds every addable cell of residue ``i``; returns ``None`` (zero) when
    there is none.
    """
    core = tuple(core)
    add = [c for c in addable_cells(core) if residue(c, k) == i]
    if not add:
        return None
    rows = list(core) + [0]
    for r, _ in add:
        rows[r - 1] += 1
    return normalize(rows)


def act_word_on_core(k: int, word: Sequence[int], core: Sequence[int]
                     ) -> Partition | None:
    """``u_{i1} ... u_{il}`` applied to ``core``; the rightmost letter acts first."""
    cur: Partition | None = tuple(core)
    for letter in reversed(word):
        cur = act_u_on_core(k, cur, letter % (k + 1))
        if cur is None:
            return None
    return cur


def core_to_grassmannian(k: int, core: Sequence[int]) -> AffinePermutation:
    """Peel off all removable cells of one residue at a time."""
    core = normalize(core)
    if not is_core(core, k):
        raise ValueError(f"{core} is not a {k + 1}-core")
    word = []
    cur = core
    while cur:
        i = residue(removable_cells(cur)[0], k)
        rows = list(cur)
        for r, _ in removable_cells(cur):
            if residue((r, cur[r - 1]), k) == i:
                rows[r - 1] -= 1
        word.append(i)
        cur = normalize(rows)
    return from_word(k, word)


def grassmannian_to_core(w: AffinePermutation) -> Partition:
    if not w.is_grassmannian():
        raise ValueError(f"{w} is not 0-Grassmannian")
    core = act_word_on_core(w.k, reduced_word(w), ())
    assert core is not None
    return core


def bounded_to_grassmannian(k: int, lam: Sequence[int]) -> AffinePermutation:
    return core_to_grassmannian(k, bounded_to_core(k, lam))


def grassmannian_to_bounded(w: AffinePermutation) -> Partition:
    return core_to_bounded(w.k, grassmannian_to_core(w))


@dataclass(frozen=True)
class Diagram:
    """A partition shape with some of its cells struck out."""
    shape: Partition
    removed: frozenset[Cell] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "shape", normalize(self.shape))
        object.__setattr__(self, "removed", frozenset(tuple(c) for c in self.removed))
        bad = [c for c in self.removed if not in_shape(self.shape, c)]
        if bad:
            raise ValueError(f"removed cells {bad} not in shape {self.shape}")

    def cells(self) -> list[Cell]:
        return [c for c in cells(self.shape) if c not in self.removed]

    def to_dict(self) -> dict:
        return {"shape": list(self.shape),
                "removed": [list(c) for c in sorted(self.removed)]}

    @classmethod
    def from_dict(cls, data: dict) -> Diagram:
        return cls(tuple(data["shape"]), frozenset(tuple(c) for c in data["removed"]))


def reading_word(diagram: Diagram | Sequence[int], k: int) -> list[int]:
    """Residues read right to left along rows, rows from bottom to top,
    skipping removed cells."""
    if not isinstance(diagram, Diagram):
        diagram = Diagram(tuple(diagram))
    word = []
    for i in range(len(diagram.shape), 0, -1):
        for j in range(diagram.shape[i - 1], 0, -1):
            if (i, j) not in diagram.removed:
                word.append(residue((i, j), k))
    return word
