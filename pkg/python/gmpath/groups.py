"""Finite groups and their one-dimensional characters.

Abelian groups are products of cyclic factors with exponent-vector
elements. Nonabelian groups come from a Cayley table, which can be built
from a sympy permutation group.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import lcm
from pathlib import Path
from typing import Hashable, Mapping, Sequence

from sympy.combinatorics import Permutation, PermutationGroup

from .errors import ParseError
from .scalar import Cyclotomic, Scalar, primitive_root_order, zeta

Element = Hashable


class FiniteGroup:
    """Shared interface: ``elements`` (identity first), ``mul``, ``inv``."""

    name: str
    elements: tuple[Element, ...]
    identity: Element

    def mul(self, g: Element, h: Element) -> Element:
        raise NotImplementedError

    def inv(self, g: Element) -> Element:
        raise NotImplementedError

    def label(self, g: Element) -> str:
        return str(g)

    @property
    def order(self) -> int:
        return len(self.elements)

    def power(self, g: Element, k: int) -> Element:
        if k < 0:
            g, k = self.inv(g), -k
        out = self.identity
        for _ in range(k):
            out = self.mul(out, g)
        return out

    def element_order(self, g: Element) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.mul(x, g)
            k += 1
        return k

    @cached_property
    def exponent(self) -> int:
        return lcm(*(self.element_order(g) for g in self.elements))

    def is_central(self, g: Element) -> bool:
        return all(self.mul(g, h) == self.mul(h, g) for h in self.elements)

    def is_abelian(self) -> bool:
        return all(self.is_central(g) for g in self.elements)

    def index(self, g: Element) -> int:
        return self._positions[g]

    @cached_property
    def _positions(self) -> dict[Element, int]:
        return {g: i for i, g in enumerate(self.elements)}

    def parse_element(self, text: str) -> Element:
        for g in self.elements:
            if self.label(g) == text:
                return g
        raise KeyError(f"{self.name}: unknown element {text!r}")


class AbelianGroup(FiniteGroup):
    """Z_{m_1} x ... x Z_{m_r} on exponent vectors."""

    def __init__(self, orders: Sequence[int]):
        if any(m < 1 for m in orders):
            raise ValueError("cyclic factor orders must be positive")
        self.orders = tuple(int(m) for m in orders)
        self.name = "x".join(f"Z{m}" for m in self.orders) or "trivial"
        self.elements = tuple(product(*(range(m) for m in self.orders)))
        self.identity = tuple(0 for _ in self.orders)

    def __repr__(self) -> str:
        return f"AbelianGroup({self.name})"

    @classmethod
    def parse(cls, text: str) -> "AbelianGroup":
        if text in ("trivial", "1"):
            return cls(())
        factors = text.split("x")
        if not all(re.fullmatch(r"Z\d+", f) for f in factors):
            raise ParseError(f"expected a group like Z2xZ4, got {text!r}")
        return cls([int(f[1:]) for f in factors])

    def mul(self, g, h):
        return tuple((a + b) % m for a, b, m in zip(g, h, self.orders))

    def inv(self, g):
        return tuple((-a) % m for a, m in zip(g, self.orders))

    def generators(self) -> list[tuple[int, ...]]:
        return [tuple(1 if k == i else 0 for k in range(len(self.orders))) for i in range(len(self.orders))]

    def element(self, exponents: Sequence[int]) -> tuple[int, ...]:
        if len(exponents) != len(self.orders):
            raise ValueError(f"{self.name}: expected {len(self.orders)} exponents")
        return tuple(int(e) % m for e, m in zip(exponents, self.orders))

    def label(self, g) -> str:
        if g == self.identity:
            return "1"
        parts = []
        for k, e in enumerate(g):
            if e:
                gen = f"g{k + 1}" if len(self.orders) > 1 else "g"
                parts.append(gen if e == 1 else f"{gen}^{e}")
        return "".join(parts)


class CayleyGroup(FiniteGroup):
    """Group from a multiplication table on string labels; axioms are checked."""

    permutations: dict[str, Permutation] | None = None

    def __init__(self, labels: Sequence[str], table: Mapping[tuple[str, str], str], name: str = "G"):
        self.name = name
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise ValueError(f"{name}: duplicate element labels")
        self._table = dict(table)
        known = set(labels)
        for g in labels:
            for h in labels:
                if self._table.get((g, h)) not in known:
                    raise ValueError(f"{name}: table entry {g}*{h} missing or outside the group")
        ids = [e for e in labels if all(self._table[(e, g)] == g == self._table[(g, e)] for g in labels)]
        if not ids:
            raise ValueError(f"{name}: no identity element")
        self.identity = ids[0]
        self.elements = (self.identity,) + tuple(g for g in labels if g != self.identity)
        self._inverse = {}
        for g in labels:
            inv = [h for h in labels if self._table[(g, h)] == self.identity]
            if not inv:
                raise ValueError(f"{name}: {g} has no inverse")
            self._inverse[g] = inv[0]
        for a in labels:
            for b in labels:
                ab = self._table[(a, b)]
                for c in labels:
                    if self._table[(ab, c)] != self._table[(a, self._table[(b, c)])]:
                        raise ValueError(f"{name}: table is not associative at ({a}, {b}, {c})")

    def __repr__(self) -> str:
        return f"CayleyGroup({self.name}, order={self.order})"

    def mul(self, g, h):
        return self._table[(g, h)]

    def inv(self, g):
        return self._inverse[g]

    @classmethod
    def from_permutation_group(cls, group: PermutationGroup, name: str = "G") -> "CayleyGroup":
        elems = sorted(group.elements, key=lambda p: (p.order(), p.array_form))
        identity = [p for p in elems if p.is_Identity][0]
        elems.remove(identity)
        elems.insert(0, identity)
        labels = ["1"] + [f"p{i}" for i in range(1, len(elems))]
        lookup = {tuple(p.array_form): lab for p, lab in zip(elems, labels)}
        table = {
            (la, lb): lookup[tuple((pa * pb).array_form)]
            for pa, la in zip(elems, labels)
            for pb, lb in zip(elems, labels)
        }
        grp = cls(labels, table, name=name)
        grp.permutations = dict(zip(labels, elems))
        return grp

    def center(self) -> tuple[str, ...]:
        return tuple(g for g in self.elements if self.is_central(g))


def parse_cayley(text: str, path: str | None = None, name: str = "G") -> CayleyGroup:
    """First non-comment line lists labels; each following line is one table row."""
    rows = [raw.split("#", 1)[0].split() for raw in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows:
        raise ParseError("empty Cayley table", path=path)
    labels = rows[0]
    if len(rows) != len(labels) + 1 or any(len(r) != len(labels) + 1 for r in rows[1:]):
        raise ParseError("Cayley table must have one row per element: '<g> <g*h1> <g*h2> ...'", path=path)
    table = {(row[0], h): row[k + 1] for row in rows[1:] for k, h in enumerate(labels)}
    try:
        return CayleyGroup(labels, table, name=name)
    except ValueError as exc:
        raise ParseError(str(exc), path=path) from None


def load_cayley(path: str | Path) -> CayleyGroup:
    p = Path(path)
    return parse_cayley(p.read_text(encoding="utf-8"), path=str(p), name=p.stem)


@dataclass(frozen=True)
class Character:
    """Homomorphism G -> roots of unity, stored by its value table."""

    group: FiniteGroup
    values: tuple[Cyclotomic, ...]

    @classmethod
    def from_exponents(cls, group: AbelianGroup, exponents: Sequence[int], conductor: int | None = None) -> "Character":
        """Value zeta_{m_k}^{e_k} on the k-th cyclic generator."""
        if len(exponents) != len(group.orders):
            raise ValueError(f"{group.name}: expected {len(group.orders)} character exponents")
        n = conductor or group.exponent
        vals = []
        for g in group.elements:
            v = Cyclotomic(1, n)
            for e, m, x in zip(exponents, group.orders, g):
                v = v * zeta(m, e * x)
            vals.append(v.lift(lcm(v.conductor, n)))
        return cls(group, tuple(vals))

    @classmethod
    def from_values(cls, group: FiniteGroup, values: Mapping[Element, Scalar]) -> "Character":
        vals = tuple(Cyclotomic.coerce(values[g]) for g in group.elements)
        n = lcm(*(v.conductor for v in vals))
        ch = cls(group, tuple(v.lift(n) for v in vals))
        for g in group.elements:
            if primitive_root_order(ch(g)) is None:
                raise ValueError(f"character value at {group.label(g)} is not a root of unity")
            for h in group.elements:
                if ch(group.mul(g, h)) != ch(g) * ch(h):
                    raise ValueError(f"values are not multiplicative at ({group.label(g)}, {group.label(h)})")
        return ch

    @classmethod
    def trivial(cls, group: FiniteGroup) -> "Character":
        return cls(group, tuple(Cyclotomic(1) for _ in group.elements))

    def __call__(self, g: Element) -> Cyclotomic:
        return self.values[self.group.index(g)]

    def __mul__(self, other: "Character") -> "Character":
        return Character(self.group, tuple(a * b for a, b in zip(self.values, other.values)))

    def __pow__(self, k: int) -> "Character":
        return Character(self.group, tuple(v**k for v in self.values))

    def inverse(self) -> "Character":
        return self ** -1

    def is_trivial(self) -> bool:
        return all(v == 1 for v in self.values)

    @property
    def conductor(self) -> int:
        return lcm(*(v.conductor for v in self.values)) if self.values else 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self.group is other.group and all(a == b for a, b in zip(self.values, other.values))

    def __hash__(self) -> int:
        return hash(tuple(self.values))

