"""Exact linear algebra over Q on sparse vectors.

Vectors are ``dict[int, Fraction]`` holding only nonzero entries. All
eliminations go through :class:`sympy.polys.matrices.DomainMatrix` over
``QQ`` in sparse format. Algebras over Q(zeta_N) reach this module by
restriction of scalars, so one exact field suffices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Vector = dict[int, Fraction]


def _to_qq(x: Fraction):
    return QQ(x.numerator, x.denominator)


def _to_fraction(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def _domain_matrix(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> DomainMatrix:
    dod = {}
    for i, row in enumerate(rows):
        entries = {j: _to_qq(Fraction(v)) for j, v in row.items() if v}
        if entries:
            dod[i] = entries
    return DomainMatrix(dod, (len(rows), ncols), QQ)


def rref(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> tuple[list[Vector], tuple[int, ...]]:
    """Reduced row echelon form: (nonzero rows, pivot columns)."""
    if not rows or ncols == 0:
        return [], ()
    reduced, pivots = _domain_matrix(rows, ncols).rref()
    dod = reduced.to_dod()
    out: list[Vector] = []
    for i in range(len(pivots)):
        row = dod.get(i, {})
        out.append({j: _to_fraction(v) for j, v in row.items() if v})
    return out, tuple(pivots)


def rank(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> list[Vector]:
    """Basis of {v : row . v = 0 for every row}."""
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis: list[Vector] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec: Vector = {free: Fraction(1)}
        for row, p in zip(reduced, pivots):
            c = row.get(free)
            if c:
                vec[p] = -c
        basis.append(vec)
    return basis


def solve(rows: Sequence[Mapping[int, Fraction]], ncols: int, rhs: Mapping[int, Fraction]) -> Vector | None:
    """One solution v of ``rows . v = rhs`` (rhs indexed by row), or None."""
    augmented = []
    for i, row in enumerate(rows):
        r = dict(row)
        if rhs.get(i):
            r[ncols] = Fraction(rhs[i])
        augmented.append(r)
    for i in rhs:
        if i >= len(rows) and rhs[i]:
            return None
    reduced, pivots = rref(augmented, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    sol: Vector = {}
    for row, p in zip(reduced, pivots):
        c = row.get(ncols)
        if c:
            sol[p] = c
    return sol


def add_scaled(target: Vector, source: Mapping[int, Fraction], scale: Fraction = Fraction(1)) -> None:
    for k, v in source.items():
        nv = target.get(k, 0) + scale * v
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^ambient stored by its canonical RREF basis.

    ``degree`` is [K:Q] when the subspace is the restriction of scalars of a
    K-subspace; :attr:`dim` then reports the K-dimension.
    """

    ambient: int
    rows: tuple[tuple[tuple[int, Fraction], ...], ...]
    pivots: tuple[int, ...]
    degree: int = 1

    @classmethod
    def span(cls, vectors: Iterable[Mapping[int, Fraction]], ambient: int, degree: int = 1) -> "Subspace":
        vecs = [v for v in vectors if any(v.values())]
        reduced, pivots = rref(vecs, ambient)
        rows = tuple(tuple(sorted(r.items())) for r in reduced)
        return cls(ambient, rows, pivots, degree)

    @classmethod
    def zero(cls, ambient: int, degree: int = 1) -> "Subspace":
        return cls(ambient, (), (), degree)

    @classmethod
    def coordinates(cls, indices: Iterable[int], ambient: int, degree: int = 1) -> "Subspace":
        return cls.span(({i: Fraction(1)} for i in sorted(set(indices))), ambient, degree)

    @property
    def qdim(self) -> int:
        return len(self.rows)

    @property
    def dim(self) -> int:
        return len(self.rows) // self.degree

    def is_zero(self) -> bool:
        return not self.rows

    def basis(self) -> list[Vector]:
        return [dict(r) for r in self.rows]

    def reduce(self, vector: Mapping[int, Fraction]) -> Vector:
        """Remainder of ``vector`` after eliminating the pivot columns."""
        v: Vector = {k: Fraction(x) for k, x in vector.items() if x}
        for row, p in zip(self.rows, self.pivots):
            c = v.get(p)
            if c:
                add_scaled(v, dict(row), -c)
        return v

    def contains(self, vector: Mapping[int, Fraction]) -> bool:
        return not self.reduce(vector)

    def __contains__(self, vector: Mapping[int, Fraction]) -> bool:
        return self.contains(vector)

    def issubspace(self, other: "Subspace") -> bool:
        return all(other.contains(dict(r)) for r in self.rows)

    def __le__(self, other: "Subspace") -> bool:
        return self.issubspace(other)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.basis() + other.basis(), self.ambient, self.degree)

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.ambient, self.degree)
        u = self.basis()
        w = other.basis()
        r = len(u)
        # columns u_1..u_r, -w_1..-w_s; null vectors give common elements
        rows: list[Vector] = [dict() for _ in range(self.ambient)]
        for i, vec in enumerate(u):
            for k, x in vec.items():
                rows[k][i] = x
        for j, vec in enumerate(w):
            for k, x in vec.items():
                rows[k][r + j] = -x
        common = []
        for null in nullspace(rows, r + len(w)):
            x: Vector = {}
            for i, c in null.items():
                if i < r:
                    add_scaled(x, u[i], c)
            common.append(x)
        return Subspace.span(common, self.ambient, self.degree)

    def restrict(self, coords: Sequence[int]) -> "Subspace":
        """Image under the coordinate projection onto ``coords`` (renumbered 0..)."""
        pos = {c: i for i, c in enumerate(coords)}
        images = [{pos[k]: x for k, x in dict(r).items() if k in pos} for r in self.rows]
        return Subspace.span(images, len(coords), self.degree)

    def embed(self, coords: Sequence[int], ambient: int) -> "Subspace":
        """Inverse of :meth:`restrict` for a subspace of the coordinate block."""
        images = [{coords[k]: x for k, x in dict(r).items()} for r in self.rows]
        return Subspace.span(images, ambient, self.degree)

    def _check(self, other: "Subspace") -> None:
        if self.ambient != other.ambient:
            raise ValueError(f"ambient mismatch: {self.ambient} vs {other.ambient}")
