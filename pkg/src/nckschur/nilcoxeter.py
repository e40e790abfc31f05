"""
The affine nilCoxeter algebra with integer coefficients.

Elements are sparse maps from affine permutations to nonzero integers.  The
basis multiplies by ``u_v u_w = u_{vw}`` when lengths add and ``0``
otherwise.

>>> h1 = h(2, 1)
>>> h2 = h(2, 2)
>>> h1 * h2 == h2 * h1
True
>>> len(h2)
3
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

from .affine import AffinePermutation, from_word, identity, reduced_word

__all__ = [
    "NilCoxeterElement", "u", "u_from_word", "zero", "one", "product",
    "inner_product", "cyclically_decreasing_word", "cyclically_decreasing",
    "h", "h_lambda", "format_word",
]


class NilCoxeterElement:
    """A finite integer combination of basis elements ``u_w``."""

    __slots__ = ("k", "_terms")

    def __init__(self, k: int, terms: Mapping[AffinePermutation, int] | None = None):
        self.k = k
        clean = {}
        for w, c in (terms or {}).items():
            if w.k != k:
                raise ValueError(f"basis element of rank {w.k} in rank-{k} element")
            if c:
                clean[w] = int(c)
        self._terms = clean

    @property
    def terms(self) -> dict[AffinePermutation, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __iter__(self) -> Iterator[AffinePermutation]:
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __getitem__(self, w: AffinePermutation) -> int:
        return self._terms.get(w, 0)

    def coefficient(self, word: Sequence[int]) -> int:
        """Coefficient of ``u_{s_i1 ... s_il}``; the word is assumed reduced."""
        return self._terms.get(from_word(self.k, word), 0)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, NilCoxeterElement):
            return NotImplemented
        return self.k == other.k and self._terms == other._terms

    def __hash__(self):
        return hash((self.k, frozenset(self._terms.items())))

    def _check(self, other: NilCoxeterElement):
        if not isinstance(other, NilCoxeterElement):
            raise TypeError(f"cannot combine with {type(other).__name__}")
        if other.k != self.k:
            raise ValueError(f"rank mismatch: k={self.k} and k={other.k}")

    def __add__(self, other: NilCoxeterElement) -> NilCoxeterElement:
        self._check(other)
        out = defaultdict(int, self._terms)
        for w, c in other._terms.items():
            out[w] += c
        return NilCoxeterElement(self.k, out)

    def __neg__(self):
        return NilCoxeterElement(self.k, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: NilCoxeterElement) -> NilCoxeterElement:
        return self + (-other)

    def __rmul__(self, scalar: int) -> NilCoxeterElement:
        if not isinstance(scalar, int):
            return NotImplemented
        return NilCoxeterElement(self.k, {w: scalar * c for w, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        return product(self, other)

    def degree_parts(self) -> dict[int, NilCoxeterElement]:
        by_len: dict[int, dict] = defaultdict(dict)
        for w, c in self._terms.items():
            by_len[w.length][w] = c
        return {d: NilCoxeterElement(self.k, t) for d, t in by_len.items()}

    def sorted_terms(self) -> list[tuple[AffinePermutation, int]]:
        """Terms ordered by length, then by window."""
        return sorted(self._terms.items(), key=lambda t: (t[0].length, t[0].window))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            mono = format_word(reduced_word(w), self.k)
            if c in (1, -1) and mono != "1":
                parts.append(mono if c == 1 else f"-{mono}")
            elif mono == "1":
                parts.append(str(c))
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"NilCoxeterElement(k={self.k}, {self})"

    def to_dict(self) -> dict:
        terms = sorted(self._terms.items(), key=lambda t: t[0].window)
        return {"k": self.k,
                "terms": [{"window": list(w.window), "coeff": c} for w, c in terms]}

    @classmethod
    def from_dict(cls, data: dict) -> NilCoxeterElement:
        k = int(data["k"])
        return cls(k, {AffinePermutation(k, tuple(t["window"])): int(t["coeff"])
                       for t in data["terms"]})


def format_word(word: Sequence[int], k: int) -> str:
    if not word:
        return "1"
    sep = "" if k < 10 else "*"
    return sep.join(f"u{i}" for i in word)


def zero(k: int) -> NilCoxeterElement:
    return NilCoxeterElement(k)


def one(k: int) -> NilCoxeterElement:
    return NilCoxeterElement(k, {identity(k): 1})


def u(w: AffinePermutation) -> NilCoxeterElement:
    return NilCoxeterElement(w.k, {w: 1})


def u_from_word(k: int, word: Sequence[int]) -> NilCoxeterElement:
    """``u_{i1} ... u_{il}``: the basis element ``u_w`` if the word is
    reduced, zero otherwise."""
    w = from_word(k, word)
    if w.length != len(word):
        return zero(k)
    return u(w)


def product(a: NilCoxeterElement, b: NilCoxeterElement) -> NilCoxeterElement:
    a._check(b)
    out: dict[AffinePermutation, int] = defaultdict(int)
    for v, cv in a.items():
        lv = v.length
        for w, cw in b.items():
            vw = v * w
            if vw.length == lv + w.length:
                out[vw] += cv * cw
    return NilCoxeterElement(a.k, out)


def inner_product(a: NilCoxeterElement, b: NilCoxeterElement) -> int:
    a._check(b)
    small, big = (a, b) if len(a) <= len(b) else (b, a)
    return sum(c * big[w] for w, c in small.items())


def cyclically_decreasing_word(k: int, subset: Iterable[int]) -> list[int]:
    """The letters of ``subset`` in cyclically decreasing order.

    Reading residues downward starting just below a residue missing from
    the subset puts ``s_{m+1}`` before ``s_m`` whenever both occur.
    """
    n = k + 1
    d = set(subset)
    if any(not 0 <= i <= k for i in d):
        raise ValueError(f"letters of {sorted(d)} out of range for k={k}")
    if len(d) == n:
        raise ValueError("the full set of residues has no cyclically decreasing element")
    gap = min(set(range(n)) - d)
    return [r for r in ((gap - t) % n for t in range(1, n)) if r in d]


def cyclically_decreasing(k: int, subset: Iterable[int]) -> NilCoxeterElement:
    return u(from_word(k, cyclically_decreasing_word(k, subset)))


@lru_cache(maxsize=None)
def h(k: int, i: int) -> NilCoxeterElement:
    """The Fomin-Stanley generator: sum of ``u_D`` over ``i``-subsets ``D``."""
    if not 0 <= i <= k:
        raise ValueError(f"h_{i} undefined for k={k}")
    terms = {from_word(k, cyclically_decreasing_word(k, d)): 1
             for d in combinations(range(k + 1), i)}
    return NilCoxeterElement(k, terms)


def h_lambda(k: int, lam: Sequence[int]) -> NilCoxeterElement:
    """``h_{lam_1} h_{lam_2} ...`` for a k-bounded partition."""
    return _h_lambda(k, tuple(lam))


@lru_cache(maxsize=None)
def _h_lambda(k: int, lam: tuple[int, ...]) -> NilCoxeterElement:
    out = one(k)
    for part in lam:
        out = out * h(k, part)
    return out
