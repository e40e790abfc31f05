"""
Non-commutative k-Schur functions and k-Littlewood-Richardson products.

Closed-form expansions cover three families inside a k-rectangle
``R = (c^(k+1-c))``:

* ``R`` itself: one monomial per ``lam`` inside ``R``, read off the diagram
  ``R`` with ``lam`` glued underneath and ``lam`` struck out of the top-left;
* ``(c^(k-c), c-i)``: additionally strike ``i`` cells from the glued rows,
  no two in a column, subject to the corner condition (C2);
* ``(c^(k+1-c-i), (c-1)^i)``: the same with no two struck cells in a row.

Any k-bounded ``lam`` can also be expanded by inverting the unitriangular
pairing ``<h_mu, u_{w_nu}>``; that route is independent of the formulas
above and serves as their oracle.

>>> len(nckschur_rectangle(4, 3)), len(nckschur_rectangle_strip(4, 3, 2))
(10, 30)
>>> multiply_kschur(4, (3, 1), (2, 1))
CoeffVector(kschur, k=4, {(3, 2, 1, 1): 1, (3, 2, 2): 1, (3, 3, 1): 1, (4, 1, 1, 1): 1})
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .affine import AffinePermutation, from_word, identity, reduced_word
from .diagrams import valid_cell_sets
from .nilcoxeter import (NilCoxeterElement, cyclically_decreasing_word,
                         h_lambda, one)
from .shapes import (Cell, Diagram, Partition, act_word_on_core,
                     bounded_partitions, bounded_to_core,
                     bounded_to_grassmannian, cells, core_to_bounded,
                     grassmannian_to_bounded, is_bounded, normalize,
                     partitions_inside, reading_word, rectangle)

__all__ = [
    "CoeffVector", "BASES", "skew_rectangle_diagram", "nckschur_rectangle",
    "nckschur_rectangle_strip", "nckschur_rectangle_column",
    "strip_shape", "column_shape", "family_parameters", "nckschur",
    "affine_stanley_coefficient", "affine_stanley", "h_in_kschur",
    "kschur_in_h", "nckschur_general", "pieri", "multiply_kschur",
    "grassmannian_support", "expansion_by_source",
]

BASES = ("kschur", "monomial", "affine-schur", "h")


class CoeffVector:
    """A sparse integer vector indexed by k-bounded partitions in a declared
    basis.  Vectors in different bases do not mix."""

    __slots__ = ("basis", "k", "_terms")

    def __init__(self, basis: str, k: int, terms: Mapping[Sequence[int], int] | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.k = k
        self._terms = {normalize(p): int(c) for p, c in (terms or {}).items() if c}

    @property
    def terms(self) -> dict[Partition, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __getitem__(self, lam: Sequence[int]) -> int:
        return self._terms.get(normalize(lam), 0)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, CoeffVector):
            return (self.basis, self.k, self._terms) == (other.basis, other.k, other._terms)
        if isinstance(other, Mapping):
            return self._terms == {normalize(p): c for p, c in other.items() if c}
        return NotImplemented

    def __add__(self, other: CoeffVector) -> CoeffVector:
        if not isinstance(other, CoeffVector):
            return NotImplemented
        if (other.basis, other.k) != (self.basis, self.k):
            raise ValueError(f"cannot add {other.basis} (k={other.k}) to "
                             f"{self.basis} (k={self.k})")
        out = defaultdict(int, self._terms)
        for p, c in other._terms.items():
            out[p] += c
        return CoeffVector(self.basis, self.k, out)

    def __rmul__(self, scalar: int) -> CoeffVector:
        if not isinstance(scalar, int):
            return NotImplemented
        return CoeffVector(self.basis, self.k, {p: scalar * c for p, c in self._terms.items()})

    def sorted_items(self) -> list[tuple[Partition, int]]:
        return sorted(self._terms.items())

    def __repr__(self):
        body = ", ".join(f"{p}: {c}" for p, c in self.sorted_items())
        return f"CoeffVector({self.basis}, k={self.k}, {{{body}}})"

    def __str__(self):
        if not self._terms:
            return "0"
        sym = {"kschur": "s", "monomial": "m", "affine-schur": "F", "h": "h"}[self.basis]
        parts = []
        for p, c in self.sorted_items():
            name = f"{sym}[{','.join(map(str, p))}]"
            parts.append({1: name, -1: f"-{name}"}.get(c, f"{c}*{name}"))
        return " + ".join(parts).replace("+ -", "- ")

    def to_dict(self) -> dict:
        return {"basis": self.basis, "k": self.k,
                "terms": [{"partition": list(p), "coeff": c} for p, c in self.sorted_items()]}

    @classmethod
    def from_dict(cls, data: dict) -> CoeffVector:
        return cls(data["basis"], int(data["k"]),
                   {tuple(t["partition"]): int(t["coeff"]) for t in data["terms"]})


def skew_rectangle_diagram(k: int, c: int, lam: Sequence[int]) -> Diagram:
    """``R`` with ``lam`` glued below it and the cells of ``lam`` struck out
    of the top-left corner of ``R``."""
    R = rectangle(k, c)
    lam = normalize(lam)
    return Diagram(R + lam, frozenset(cells(lam)))


def _glued_cells(k: int, c: int, lam: Partition) -> list[Cell]:
    depth = len(rectangle(k, c))
    return [(i + depth, j) for i, j in cells(lam)]


def expansion_by_source(k: int, c: int, i: int = 0, column_distinct: bool = True
                        ) -> dict[Partition, NilCoxeterElement]:
    """Contribution of each ``lam`` inside ``R`` to the family expansion.

    ``i = 0`` gives the rectangle; otherwise ``i`` glued cells are struck,
    distinct in columns (``column_distinct``) or in rows.
    """
    R = rectangle(k, c)
    out = {}
    for lam in sorted(partitions_inside(R), key=lambda p: (sum(p), p)):
        base = skew_rectangle_diagram(k, c, lam)
        terms: dict[AffinePermutation, int] = defaultdict(int)
        glued = _glued_cells(k, c, lam)
        for X in valid_cell_sets(base.shape, i, column_distinct, allowed=glued):
            diagram = Diagram(base.shape, base.removed | X)
            terms[from_word(k, reading_word(diagram, k))] += 1
        out[lam] = NilCoxeterElement(k, terms)
    return out


def _sum(k, parts: Iterable[NilCoxeterElement]) -> NilCoxeterElement:
    total = NilCoxeterElement(k)
    for part in parts:
        total = total + part
    return total


def nckschur_rectangle(k: int, c: int) -> NilCoxeterElement:
    return _sum(k, expansion_by_source(k, c).values())


def nckschur_rectangle_strip(k: int, c: int, i: int) -> NilCoxeterElement:
    """The non-commutative k-Schur function of ``(c^(k-c), c-i)``."""
    if not 0 <= c <= k or not 0 <= i <= c:
        raise ValueError(f"need 0 <= i <= c <= k, got k={k}, c={c}, i={i}")
    return _sum(k, expansion_by_source(k, c, i, column_distinct=True).values())


def nckschur_rectangle_column(k: int, c: int, i: int) -> NilCoxeterElement:
    """The non-commutative k-Schur function of ``(c^(k+1-c-i), (c-1)^i)``."""
    if not 1 <= c <= k or not 0 <= i <= k + 1 - c:
        raise ValueError(f"need 1 <= c <= k and 0 <= i <= k+1-c, got k={k}, c={c}, i={i}")
    return _sum(k, expansion_by_source(k, c, i, column_distinct=False).values())


def strip_shape(k: int, c: int, i: int) -> Partition:
    return normalize((c,) * (k - c) + (c - i,))


def column_shape(k: int, c: int, i: int) -> Partition:
    return normalize((c,) * (k + 1 - c - i) + (c - 1,) * i)


def family_parameters(k: int, lam: Sequence[int]) -> tuple[str, int, int] | None:
    """``("strip", c, i)`` or ``("column", c, i)`` if ``lam`` belongs to a
    family with a closed-form expansion."""
    lam = normalize(lam)
    for c in range(1, k + 1):
        for i in range(c + 1):
            if strip_shape(k, c, i) == lam:
                return "strip", c, i
        for i in range(k + 2 - c):
            if column_shape(k, c, i) == lam:
                return "column", c, i
    return None


def nckschur(k: int, lam: Sequence[int], general: bool = False) -> NilCoxeterElement:
    """Closed-form expansion when available, the duality route otherwise."""
    lam = normalize(lam)
    if not lam:
        return one(k)
    params = None if general else family_parameters(k, lam)
    if params is None:
        return nckschur_general(k, lam)
    family, c, i = params
    if family == "strip":
        return nckschur_rectangle_strip(k, c, i)
    return nckschur_rectangle_column(k, c, i)


@lru_cache(maxsize=None)
def _factorization_count(w: AffinePermutation, parts: tuple[int, ...]) -> int:
    """Number of ways to write ``w = w_{D1} w_{D2} ...`` with ``|Di| = parts[i]``
    and lengths adding."""
    if not parts:
        return 1 if w.length == 0 else 0
    if sum(parts) != w.length:
        return 0
    k = w.k
    first, rest = parts[0], parts[1:]
    total = 0
    for D in combinations(range(k + 1), first):
        v = w
        ok = True
        # strip the letters of w_D off the left of w
        for letter in cyclically_decreasing_word(k, D):
            if letter not in v.left_descents():
                ok = False
                break
            v = v.left_mult_simple(letter)
        if ok:
            total += _factorization_count(v, rest)
    return total


def affine_stanley_coefficient(w: AffinePermutation, lam: Sequence[int]) -> int:
    """``<h_lam, u_w>``: the coefficient of ``m_lam`` in the affine Stanley
    function of ``w``."""
    return _factorization_count(w, normalize(lam))


def affine_stanley(w: AffinePermutation) -> CoeffVector:
    """The affine Stanley symmetric function of ``w`` in the monomial basis."""
    return CoeffVector("monomial", w.k, {
        lam: affine_stanley_coefficient(w, lam)
        for lam in bounded_partitions(w.length, w.k)})


def h_in_kschur(k: int, mu: Sequence[int]) -> CoeffVector:
    """``h_mu = sum_lam <h_mu, u_{w_lam}> s_lam``."""
    mu = normalize(mu)
    if not is_bounded(mu, k):
        raise ValueError(f"{mu} is not {k}-bounded")
    return CoeffVector("kschur", k, {
        lam: affine_stanley_coefficient(bounded_to_grassmannian(k, lam), mu)
        for lam in bounded_partitions(sum(mu), k)})


@lru_cache(maxsize=None)
def _kschur_in_h(k: int, n: int) -> dict[Partition, dict[Partition, int]]:
    parts = bounded_partitions(n, k)
    # pairing[mu][lam] = coefficient of s_lam in h_mu
    pairing = {mu: h_in_kschur(k, mu).terms for mu in parts}
    for mu in parts:
        if pairing[mu].get(mu) != 1:
            raise ArithmeticError(f"diagonal entry for {mu} is {pairing[mu].get(mu)}, not 1")
    # order so that h_mu involves s_mu plus s_lam already solved for
    order: list[Partition] = []
    placed: set[Partition] = set()
    while len(order) < len(parts):
        ready = [mu for mu in parts if mu not in placed
                 and all(lam in placed or lam == mu for lam in pairing[mu])]
        if not ready:
            raise ArithmeticError(f"pairing matrix for k={k}, n={n} is not unitriangular")
        for mu in ready:
            order.append(mu)
            placed.add(mu)
    solved: dict[Partition, dict[Partition, int]] = {}
    for mu in order:
        # s_mu = h_mu - sum_{lam != mu} pairing[mu][lam] s_lam
        expr: dict[Partition, int] = defaultdict(int)
        expr[mu] += 1
        for lam, coeff in pairing[mu].items():
            if lam == mu:
                continue
            for nu, d in solved[lam].items():
                expr[nu] -= coeff * d
        solved[mu] = {nu: d for nu, d in expr.items() if d}
    return solved


def kschur_in_h(k: int, lam: Sequence[int]) -> CoeffVector:
    """The k-Schur function ``s^(k)_lam`` in the ``h`` basis."""
    lam = normalize(lam)
    return CoeffVector("h", k, _kschur_in_h(k, sum(lam))[lam])


def nckschur_general(k: int, lam: Sequence[int]) -> NilCoxeterElement:
    """``s^(k)_lam`` written in the ``h`` basis and evaluated in the
    nilCoxeter algebra."""
    lam = normalize(lam)
    if not is_bounded(lam, k):
        raise ValueError(f"{lam} is not {k}-bounded")
    total = NilCoxeterElement(k)
    for mu, coeff in kschur_in_h(k, lam).items():
        total = total + coeff * h_lambda(k, mu)
    return total


def pieri(k: int, lam: Sequence[int], i: int) -> list[Partition]:
    """All ``nu`` with ``w_nu w_lam^{-1}`` cyclically decreasing of length ``i``."""
    if not 0 <= i <= k:
        raise ValueError(f"i={i} out of range for k={k}")
    w = bounded_to_grassmannian(k, lam)
    out = []
    for D in combinations(range(k + 1), i):
        v = from_word(k, cyclically_decreasing_word(k, D)) * w
        if v.length == w.length + i and v.is_grassmannian():
            out.append(grassmannian_to_bounded(v))
    return sorted(out)


def grassmannian_support(e: NilCoxeterElement) -> CoeffVector:
    """Coefficients of the 0-Grassmannian terms, keyed by bounded partition."""
    return CoeffVector("kschur", e.k, {
        grassmannian_to_bounded(w): c for w, c in e.items() if w.is_grassmannian()})


def multiply_kschur(k: int, lam: Sequence[int], mu: Sequence[int],
                    general: bool = False) -> CoeffVector:
    """``s^(k)_lam * s^(k)_mu`` in the k-Schur basis.

    Each monomial of the expansion of ``lam`` acts on the core of ``mu``;
    surviving cores are read back as bounded partitions.
    """
    lam, mu = normalize(lam), normalize(mu)
    for p in (lam, mu):
        if not is_bounded(p, k):
            raise ValueError(f"{p} is not {k}-bounded")
    if lam and not general and family_parameters(k, lam) is None:
        raise ValueError(f"{lam} has no closed-form expansion for k={k}; "
                         "use the general route")
    core = bounded_to_core(k, mu)
    out: dict[Partition, int] = defaultdict(int)
    for w, c in nckschur(k, lam, general=general).items():
        image = act_word_on_core(k, reduced_word(w), core)
        if image is not None:
            out[core_to_bounded(k, image)] += c
    return CoeffVector("kschur", k, out)
