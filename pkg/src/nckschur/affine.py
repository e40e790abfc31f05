"""
The affine symmetric group of type A, rank parameter ``k``.

Elements are stored in window notation ``[w(1), ..., w(k+1)]`` and extended
to all integers by ``w(i + k + 1) = w(i) + k + 1``.

Products follow function composition: ``(a * b)(i) = a(b(i))``.  A word
``[i1, i2, ..., il]`` denotes ``s_i1 s_i2 ... s_il``, so the leftmost letter
is applied last.

>>> w = from_word(2, [0, 1, 2, 0])
>>> w.length
4
>>> y = from_word(2, [1, 2, 0])
>>> y.inverse() * w == transposition(2, -4, 1) == transposition(2, -1, 4)
True
>>> y(1), y(4)
(-2, 1)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "AffinePermutation", "Reflection",
    "identity", "simple", "from_word", "transposition", "multiply",
    "length", "is_reduced", "reduced_word", "grassmannian_factorize",
    "canonical_reflection",
]


@dataclass(frozen=True)
class AffinePermutation:
    k: int
    window: tuple[int, ...]

    def __post_init__(self):
        n = self.k + 1
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        if len(self.window) != n:
            raise ValueError(f"window must have {n} entries, got {self.window}")
        if len({v % n for v in self.window}) != n:
            raise ValueError(f"window entries not distinct mod {n}: {self.window}")
        if sum(self.window) != n * (n + 1) // 2:
            raise ValueError(f"window sum must be {n * (n + 1) // 2}: {self.window}")

    @property
    def n(self) -> int:
        return self.k + 1

    def __call__(self, i: int) -> int:
        q, r = divmod(i - 1, self.k + 1)
        return self.window[r] + q * (self.k + 1)

    def __mul__(self, other: AffinePermutation) -> AffinePermutation:
        return multiply(self, other)

    def __repr__(self):
        return f"AffinePermutation(k={self.k}, window={list(self.window)})"

    def inverse(self) -> AffinePermutation:
        n = self.k + 1
        inv = [0] * n
        for p, v in enumerate(self.window, start=1):
            q, r = divmod(v - 1, n)
            inv[r] = p - q * n
        return AffinePermutation(self.k, tuple(inv))

    @cached_property
    def length(self) -> int:
        # Shi's formula; equal to the inversion count (checked in tests).
        n, win = self.k + 1, self.window
        return sum(abs((win[b] - win[a]) // n)
                   for a in range(n) for b in range(a + 1, n))

    def right_descents(self) -> list[int]:
        """Residues ``i`` with ``length(w s_i) < length(w)``."""
        return [i for i in range(self.k + 1) if self(i) > self(i + 1)]

    def left_descents(self) -> list[int]:
        return self.inverse().right_descents()

    def is_grassmannian(self, m: int = 0) -> bool:
        """True when ``w`` is minimal in its coset modulo the parabolic
        subgroup generated by all ``s_i`` with ``i != m``."""
        return all(i == m for i in self.right_descents())

    def right_mult_simple(self, i: int) -> AffinePermutation:
        """``w * s_i`` without building ``s_i``."""
        n = self.k + 1
        win = list(self.window)
        if i == 0:
            # w(0) = w(n) - n and w(n+1) = w(1) + n
            win[0], win[-1] = win[-1] - n, win[0] + n
        else:
            win[i - 1], win[i] = win[i], win[i - 1]
        return AffinePermutation(self.k, tuple(win))

    def left_mult_simple(self, i: int) -> AffinePermutation:
        """``s_i * w``."""
        n = self.k + 1
        win = []
        for v in self.window:
            r = v % n
            if r == i % n:
                v += 1
            elif r == (i + 1) % n:
                v -= 1
            win.append(v)
        return AffinePermutation(self.k, tuple(win))

    def to_dict(self) -> dict:
        return {"k": self.k, "window": list(self.window)}

    @classmethod
    def from_dict(cls, data: dict) -> AffinePermutation:
        return cls(int(data["k"]), tuple(int(v) for v in data["window"]))


def identity(k: int) -> AffinePermutation:
    return AffinePermutation(k, tuple(range(1, k + 2)))


def simple(k: int, i: int) -> AffinePermutation:
    """The generator ``s_i``; ``i`` is read modulo ``k + 1``."""
    return identity(k).right_mult_simple(i % (k + 1))


def from_word(k: int, word: Iterable[int]) -> AffinePermutation:
    """``s_{i1} s_{i2} ... s_{il}``; letters are reduced modulo ``k + 1``."""
    w = identity(k)
    for letter in word:
        w = w.right_mult_simple(letter % (k + 1))
    return w


def multiply(a: AffinePermutation, b: AffinePermutation) -> AffinePermutation:
    if a.k != b.k:
        raise ValueError(f"rank mismatch: k={a.k} and k={b.k}")
    return AffinePermutation(a.k, tuple(a(v) for v in b.window))


def length(w: AffinePermutation) -> int:
    return w.length


def is_reduced(k: int, word: Sequence[int]) -> bool:
    return from_word(k, word).length == len(word)


def reduced_word(w: AffinePermutation) -> list[int]:
    """The lexicographically smallest reduced word of ``w``.

    Greedy on left descents: every reduced word has the same length, so
    picking the smallest available first letter at each step is optimal.
    """
    word = []
    while w.length:
        i = min(w.left_descents())
        word.append(i)
        w = w.left_mult_simple(i)
    return word


# A reflection t_{i,j} is stored as the pair (i, j) with 1 <= i <= k+1.
Reflection = tuple[int, int]


def canonical_reflection(k: int, i: int, j: int) -> Reflection:
    n = k + 1
    if i > j:
        i, j = j, i
    if (j - i) % n == 0:
        raise ValueError(f"t_{{{i},{j}}} is not a reflection for k={k}")
    shift = (i - 1) // n * n
    return i - shift, j - shift


def transposition(k: int, i: int, j: int) -> AffinePermutation:
    """``t_{i,j}``: swaps ``i + r(k+1)`` and ``j + r(k+1)`` for every ``r``."""
    n = k + 1
    if (j - i) % n == 0:
        raise ValueError(f"t_{{{i},{j}}} is not a reflection for k={k}")
    d = j - i
    win = []
    for p in range(1, n + 1):
        if (p - i) % n == 0:
            win.append(p + d)
        elif (p - j) % n == 0:
            win.append(p - d)
        else:
            win.append(p)
    return AffinePermutation(k, tuple(win))


def grassmannian_factorize(w: AffinePermutation, m: int = 0
                           ) -> tuple[AffinePermutation, AffinePermutation]:
    """Split ``w = w^(m) * w_(m)`` with ``w^(m)`` minimal in its coset modulo
    the parabolic subgroup generated by ``{s_i : i != m}``.

    The lengths of the two factors add up to ``length(w)``.
    """
    if not 0 <= m <= w.k:
        raise ValueError(f"marking {m} out of range for k={w.k}")
    left, right = w, identity(w.k)
    while True:
        desc = [i for i in left.right_descents() if i != m]
        if not desc:
            return left, right
        i = desc[0]
        left = left.right_mult_simple(i)
        right = right.left_mult_simple(i)
