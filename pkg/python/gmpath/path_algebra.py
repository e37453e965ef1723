"""Path algebras kD and generalized path algebras k(D, Omega).

A generalized path interleaves arrows with slots; slot p holds a basis
element of the vertex algebra Omega at vertex i_p. Elements are kept
expanded over those bases, so equality of coefficient maps is equality in
k(D, Omega). For plain kD every vertex algebra is the field and the single
slot basis element is its unit.

Monomial literal syntax: dot-separated tokens, where a token is an arrow
name, a slot ``[b]`` (basis element b of the vertex algebra at that point)
or ``e(v)`` / ``e(v)[b]`` for length-zero paths::

    2*x12.y23 - (1 + z3)*e(1)
    x12.[g].y23
"""

from __future__ import annotations

import logging
import re
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm
from typing import Iterator, Mapping, Sequence

import networkx as nx

from .errors import (
    AmbientMismatchError,
    InfiniteDimensionError,
    NonUnitalError,
    OmegaRadicalWarning,
    ParseError,
    RelationError,
)
from .findim import FinDimAlgebra, KVector, jacobson_oracle, kadd
from .linalg import Subspace
from .quiver import Quiver, regular_pairs
from .scalar import Cyclotomic, Scalar, field_degree, parse_combination, zeta

logger = logging.getLogger(__name__)

RADICAL_KINDS = ("baer", "levitzki", "nil", "jacobson")


@dataclass(frozen=True)
class GeneralizedPath:
    vertices: tuple[str, ...]
    arrows: tuple[str, ...]
    slots: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) != len(self.arrows) + 1 or len(self.slots) != len(self.vertices):
            raise ValueError("malformed generalized path")

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def source(self) -> str:
        return self.vertices[0]

    @property
    def target(self) -> str:
        return self.vertices[-1]


class PathAlgebra:
    """k(D, Omega) for a finite quiver; ``omega`` defaults to the field at every vertex."""

    def __init__(
        self,
        quiver: Quiver,
        omega: Mapping[str, FinDimAlgebra] | None = None,
        conductor: int = 1,
    ):
        self.quiver = quiver
        omega = dict(omega or {})
        for v in omega:
            quiver.check_vertex(v)
        n = conductor
        for alg in omega.values():
            n = lcm(n, alg.conductor)
        self.conductor = n
        self.omega: dict[str, FinDimAlgebra] = {}
        for v in quiver.vertices:
            alg = omega.get(v) or FinDimAlgebra.field(n, name="k")
            if alg.unit is None:
                raise NonUnitalError(f"vertex algebra at {v!r} has no unit")
            self.omega[v] = alg
        self.plain = all(alg.dim == 1 for alg in self.omega.values())
        for v, alg in omega.items():
            if alg.dim > 1 and not jacobson_oracle(alg).is_zero():
                warnings.warn(f"vertex algebra at {v!r} has nonzero Jacobson radical", OmegaRadicalWarning, stacklevel=2)
        self._sort = {v: i for i, v in enumerate(quiver.vertices)}

    def __repr__(self) -> str:
        kind = "kD" if self.plain else "k(D,Omega)"
        return f"PathAlgebra({kind}, {self.quiver!r})"

    # basis paths

    def path_key(self, p: GeneralizedPath) -> tuple:
        return (p.length, tuple(self._sort[v] for v in p.vertices), p.arrows, p.slots)

    def slot_name(self, v: str, k: int) -> str:
        return self.omega[v].names[k]

    def _slot_expansions(self, vertices: Sequence[str]) -> Iterator[tuple[int, ...]]:
        return product(*(range(self.omega[v].dim) for v in vertices))

    def paths(self, max_length: int | None = None) -> list[GeneralizedPath]:
        """All basis paths of length <= max_length (every path when the quiver is acyclic)."""
        if max_length is None and not self.quiver.is_acyclic():
            raise InfiniteDimensionError("quiver has a cycle; give a length bound")
        skeletons: list[tuple[tuple[str, ...], tuple[str, ...]]] = [((v,), ()) for v in self.quiver.vertices]
        frontier = list(skeletons)
        length = 0
        while frontier and (max_length is None or length < max_length):
            nxt = []
            for verts, arrs in frontier:
                for a in self.quiver.out_arrows(verts[-1]):
                    nxt.append((verts + (a.target,), arrs + (a.name,)))
            skeletons += nxt
            frontier = nxt
            length += 1
        out = [
            GeneralizedPath(verts, arrs, slots)
            for verts, arrs in skeletons
            for slots in self._slot_expansions(verts)
        ]
        out.sort(key=self.path_key)
        return out

    # elements

    def zero(self) -> "PathElement":
        return PathElement(self, {})

    def element(self, terms: Mapping[GeneralizedPath, Scalar]) -> "PathElement":
        return PathElement(self, {p: Cyclotomic.coerce(c, self.conductor) for p, c in terms.items()})

    def _unit_slots(self, v: str) -> KVector:
        return self.omega[v].unit  # type: ignore[return-value]

    def vertex(self, v: str, slot: str | None = None) -> "PathElement":
        """e(v), or the vertex-algebra basis element ``slot`` at v."""
        self.quiver.check_vertex(v)
        if slot is not None:
            return self.element({GeneralizedPath((v,), (), (self.omega[v].index(slot),)): 1})
        return self.element({GeneralizedPath((v,), (), (k,)): c for k, c in self._unit_slots(v).items()})

    def arrow(self, name: str) -> "PathElement":
        a = self.quiver.arrow(name)
        terms: dict[GeneralizedPath, Cyclotomic] = {}
        for k, x in self._unit_slots(a.source).items():
            for l, y in self._unit_slots(a.target).items():
                terms[GeneralizedPath((a.source, a.target), (name,), (k, l))] = x * y
        return self.element(terms)

    def omega_element(self, v: str, value: Mapping[int, Scalar]) -> "PathElement":
        return self.element({GeneralizedPath((v,), (), (k,)): c for k, c in value.items()})

    def path_element(self, p: GeneralizedPath) -> "PathElement":
        return self.element({p: 1})

    def multiply_paths(self, p: GeneralizedPath, q: GeneralizedPath) -> dict[GeneralizedPath, Cyclotomic]:
        """Concatenation with the meeting slots multiplied in the vertex algebra."""
        if p.target != q.source:
            return {}
        alg = self.omega[p.target]
        middle = alg.mul(alg.basis_vector(p.slots[-1]), alg.basis_vector(q.slots[0]))
        verts = p.vertices + q.vertices[1:]
        arrs = p.arrows + q.arrows
        return {
            GeneralizedPath(verts, arrs, p.slots[:-1] + (k,) + q.slots[1:]): c
            for k, c in middle.items()
        }

    def multiply(self, x: "PathElement", y: "PathElement") -> "PathElement":
        if x.algebra is not self or y.algebra is not self:
            raise AmbientMismatchError("operands belong to different path algebras")
        out: dict[GeneralizedPath, Cyclotomic] = {}
        for p, a in x.terms.items():
            for q, b in y.terms.items():
                for r, c in self.multiply_paths(p, q).items():
                    _accumulate(out, r, a * b * c)
        return PathElement(self, out)

    # literal syntax

    def format_path(self, p: GeneralizedPath) -> str:
        if p.length == 0:
            v = p.source
            return f"e({v})" if self.omega[v].dim == 1 else f"e({v})[{self.slot_name(v, p.slots[0])}]"
        tokens: list[str] = []
        for i, v in enumerate(p.vertices):
            if self.omega[v].dim > 1:
                tokens.append(f"[{self.slot_name(v, p.slots[i])}]")
            if i < p.length:
                tokens.append(p.arrows[i])
        return ".".join(tokens)

    def literal(self, x: "PathElement") -> str:
        parts = []
        for p in sorted(x.terms, key=self.path_key):
            c = x.terms[p]
            mono = self.format_path(p)
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            elif c.is_rational():
                parts.append(f"{c}*{mono}")
            else:
                parts.append(f"({c})*{mono}")
        return (" + ".join(parts) if parts else "0").replace("+ -", "- ")

    def parse_monomial(self, text: str) -> "PathElement":
        tokens = [t for t in text.strip().split(".") if t]
        if not tokens:
            raise ParseError(f"empty path monomial in {text!r}")
        factors: list[PathElement] = []
        for pos, tok in enumerate(tokens):
            m = re.fullmatch(r"e\((?P<v>[^)]+)\)(?:\[(?P<b>[^\]]+)\])?", tok)
            if m:
                try:
                    factors.append(self.vertex(m.group("v"), m.group("b")))
                except KeyError as exc:
                    raise ParseError(str(exc)) from None
                continue
            m = re.fullmatch(r"\[(?P<b>[^\]]+)\]", tok)
            if m:
                if pos > 0 and self.quiver.has_arrow(tokens[pos - 1]):
                    v = self.quiver.arrow(tokens[pos - 1]).target
                elif pos + 1 < len(tokens) and self.quiver.has_arrow(tokens[pos + 1]):
                    v = self.quiver.arrow(tokens[pos + 1]).source
                else:
                    raise ParseError(f"slot {tok!r} is not attached to an arrow in {text!r}")
                try:
                    factors.append(self.vertex(v, m.group("b")))
                except KeyError as exc:
                    raise ParseError(str(exc)) from None
                continue
            try:
                factors.append(self.arrow(tok))
            except KeyError:
                raise ParseError(f"unknown arrow {tok!r} in {text!r}") from None
        out = factors[0]
        for f in factors[1:]:
            out = out * f
        return out

    def parse_element(self, text: str) -> "PathElement":
        out = self.zero()
        for coeff, atom in parse_combination(text, self.conductor):
            out = out + self.parse_monomial(atom) * coeff
        return out


def _accumulate(out: dict, key, value: Cyclotomic) -> None:
    nv = out[key] + value if key in out else value
    if nv:
        out[key] = nv
    else:
        out.pop(key, None)


class PathElement:
    """Finite linear combination of generalized paths; immutable."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: PathAlgebra, terms: Mapping[GeneralizedPath, Cyclotomic]):
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "terms", {p: c for p, c in terms.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("PathElement is immutable")

    def _check(self, other: "PathElement") -> None:
        if other.algebra is not self.algebra:
            raise AmbientMismatchError("operands belong to different path algebras")

    def __add__(self, other: "PathElement") -> "PathElement":
        self._check(other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            _accumulate(out, p, c)
        return PathElement(self.algebra, out)

    def __neg__(self) -> "PathElement":
        return PathElement(self.algebra, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other: "PathElement") -> "PathElement":
        return self + (-other)

    def __mul__(self, other: "PathElement | Scalar") -> "PathElement":
        if isinstance(other, PathElement):
            return self.algebra.multiply(self, other)
        return PathElement(self.algebra, {p: c * other for p, c in self.terms.items()})

    def __rmul__(self, other: Scalar) -> "PathElement":
        return self * other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PathElement):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[tuple[GeneralizedPath, Cyclotomic]]:
        key = self.algebra.path_key
        return iter(sorted(self.terms.items(), key=lambda item: key(item[0])))

    def __repr__(self) -> str:
        return f"PathElement({self.algebra.literal(self)!r})"

    def support(self) -> list[GeneralizedPath]:
        return sorted(self.terms, key=self.algebra.path_key)

    def component(self, i: str, j: str) -> "PathElement":
        """Projection to A_ij: paths from i to j."""
        return PathElement(self.algebra, {p: c for p, c in self.terms.items() if p.source == i and p.target == j})

    def truncate(self, bound: int) -> "PathElement":
        return PathElement(self.algebra, {p: c for p, c in self.terms.items() if p.length < bound})

    @property
    def min_length(self) -> int | None:
        return min((p.length for p in self.terms), default=None)


# -- relations and materialization --------------------------------------------


@dataclass(frozen=True)
class RelationSet:
    """Generators rho with truncation exponent t (J^t inside (rho)).

    ``weak`` relaxes the lower containment from J^2 to J.
    """

    generators: tuple[PathElement, ...]
    truncation: int
    weak: bool = False

    def __post_init__(self):
        if self.truncation < 1:
            raise ValueError("truncation exponent must be at least 1")


def _check_relations(pa: PathAlgebra, rel: RelationSet) -> None:
    lowest = 1 if rel.weak else 2
    for r in rel.generators:
        if r.algebra is not pa:
            raise AmbientMismatchError("relation belongs to a different path algebra")
        for p in r.terms:
            if p.length < lowest:
                where = "J" if rel.weak else "J^2"
                raise RelationError(f"relation term {pa.format_path(p)} is not in {where}", pa.format_path(p))
    t = rel.truncation
    # J^t in (rho) is tested modulo J^(t+1); exact for homogeneous rho or when J is nilpotent
    if not pa.quiver.is_acyclic():
        for r in rel.generators:
            if len({p.length for p in r.terms}) > 1:
                lit = pa.literal(r)
                raise RelationError(
                    f"relation {lit} mixes path lengths on a quiver with a cycle; J^{t} in the ideal is undecided", lit
                )
    ideal = _ideal_span(pa, rel, t + 1)
    for p in pa.paths(t):
        if p.length == t and not ideal.contains(ideal_coords(ideal, {p: Cyclotomic(1, pa.conductor)})):
            raise RelationError(f"path {pa.format_path(p)} of length {t} is not in the relation ideal", pa.format_path(p))


@dataclass
class _IdealSpan:
    paths: list[GeneralizedPath]
    column: dict[GeneralizedPath, int]
    degree: int
    conductor: int
    space: Subspace

    def contains(self, q: Mapping[int, Fraction]) -> bool:
        return self.space.contains(q)


def ideal_coords(ideal: _IdealSpan, terms: Mapping[GeneralizedPath, Cyclotomic]) -> dict[int, Fraction]:
    d = ideal.degree
    out: dict[int, Fraction] = {}
    for p, c in terms.items():
        col = ideal.column.get(p)
        if col is None:
            continue
        for a, x in enumerate(Cyclotomic.coerce(c, ideal.conductor).coeffs):
            if x:
                out[col * d + a] = x
    return out


def _ideal_span(pa: PathAlgebra, rel: RelationSet | None, bound: int) -> _IdealSpan:
    """span{u r v} for basis paths u, v, truncated to lengths < bound.

    Columns run in descending path order so RREF pivots are leading terms.
    """
    paths = pa.paths(bound - 1)
    n = len(paths)
    column = {p: n - 1 - i for i, p in enumerate(paths)}
    d = field_degree(pa.conductor)
    ideal = _IdealSpan(paths, column, d, pa.conductor, Subspace.zero(n * d, d))
    if rel is None or not rel.generators:
        return ideal
    zs = [zeta(pa.conductor, a) for a in range(d)]
    vectors = []
    for r in rel.generators:
        low = r.min_length or 0
        for u in paths:
            if u.length + low >= bound:
                continue
            ur = pa.path_element(u) * r
            if not ur:
                continue
            for v in paths:
                if u.length + low + v.length >= bound:
                    continue
                urv = (ur * pa.path_element(v)).truncate(bound)
                for z in zs:
                    vec = ideal_coords(ideal, {p: c * z for p, c in urv.terms.items()})
                    if vec:
                        vectors.append(vec)
    ideal.space = Subspace.span(vectors, n * d, d)
    logger.debug("relation ideal: %d of %d dimensions below length %d", ideal.space.dim, n, bound)
    return ideal


class PathQuotient(FinDimAlgebra):
    """Finite-dimensional image of a path algebra on a normal-form path basis."""

    def __init__(self, pa: PathAlgebra, bound: int | None, ideal: _IdealSpan):
        self.path_algebra = pa
        self.bound = bound
        self._ideal = ideal
        d = ideal.degree
        pivot_cols = {p // d for p in ideal.space.pivots}
        normal = [p for p in ideal.paths if ideal.column[p] not in pivot_cols]
        self.paths = tuple(normal)
        self._pos = {p: i for i, p in enumerate(normal)}
        products: dict[tuple[int, int], KVector] = {}
        for i, p in enumerate(normal):
            for j, q in enumerate(normal):
                prod = pa.multiply_paths(p, q)
                if prod:
                    vec = self._coords(prod)
                    if vec:
                        products[(i, j)] = vec
        unit: KVector = {}
        for v in pa.quiver.vertices:
            for k, c in pa.vertex(v).terms.items():
                kadd(unit, {self._pos[k]: c})
        names = [pa.format_path(p) for p in normal]
        super().__init__(names, products, conductor=pa.conductor, unit=unit, name=_quotient_name(pa, bound))
        logger.debug("%s: %d normal paths", self.name, self.dim)

    def _coords(self, terms: Mapping[GeneralizedPath, Cyclotomic]) -> KVector:
        ideal = self._ideal
        kept = {p: c for p, c in terms.items() if self.bound is None or p.length < self.bound}
        if not kept:
            return {}
        if ideal.space.is_zero():
            out: KVector = {}
            for p, c in kept.items():
                kadd(out, {self._pos[p]: c})
            return out
        rem = ideal.space.reduce(ideal_coords(ideal, kept))
        d = ideal.degree
        grouped: dict[int, list[Fraction]] = {}
        for idx, x in rem.items():
            grouped.setdefault(idx // d, [Fraction(0)] * d)[idx % d] = x
        n = len(ideal.paths)
        out = {}
        for col, coeffs in grouped.items():
            c = Cyclotomic(coeffs, ideal.conductor)
            if c:
                out[self._pos[ideal.paths[n - 1 - col]]] = c
        return out

    def reduce(self, x: PathElement) -> KVector:
        """Normal-form coordinates of x modulo the relations and the length bound."""
        if x.algebra is not self.path_algebra:
            raise AmbientMismatchError("element belongs to a different path algebra")
        return self._coords(x.terms)

    def lift(self, v: Mapping[int, Cyclotomic]) -> PathElement:
        return self.path_algebra.element({self.paths[i]: c for i, c in v.items()})

    def path_span(self, predicate) -> Subspace:
        """Span of the normal paths satisfying ``predicate``."""
        return self.coordinate_span(i for i, p in enumerate(self.paths) if predicate(p))


def _quotient_name(pa: PathAlgebra, bound: int | None) -> str:
    base = "kD" if pa.plain else "k(D,Omega)"
    return base if bound is None else f"{base}/J^{bound}"


def materialize(
    q: Quiver | PathAlgebra,
    omega: Mapping[str, FinDimAlgebra] | None = None,
    relations: RelationSet | None = None,
    cap: int | None = None,
) -> PathQuotient:
    """Finite-dimensional algebra k(D, Omega)/((rho) + J^cap) on normal-form paths.

    The length bound is the truncation exponent of ``relations`` (or the
    smaller ``cap``), else ``cap``, else none for an acyclic quiver.
    """
    pa = q if isinstance(q, PathAlgebra) else PathAlgebra(q, omega)
    if relations is not None:
        _check_relations(pa, relations)
        bound = relations.truncation if cap is None else min(relations.truncation, cap)
    elif cap is not None:
        bound = cap
    elif pa.quiver.is_acyclic():
        bound = None
    else:
        raise InfiniteDimensionError("quiver has a cycle: give relations or a length cap")
    if bound is not None and bound < 1:
        raise ValueError("length cap must be at least 1")
    if bound is None:
        paths = pa.paths()
        d = field_degree(pa.conductor)
        n = len(paths)
        ideal = _IdealSpan(paths, {p: n - 1 - i for i, p in enumerate(paths)}, d, pa.conductor, Subspace.zero(n * d, d))
    else:
        ideal = _ideal_span(pa, relations, bound)
    return PathQuotient(pa, bound, ideal)


# -- closed-form formulas -----------------------------------------------------


@dataclass(frozen=True)
class RadicalDescription:
    """The radical of kD as the span of paths with regular endpoints."""

    kind: str
    pairs: frozenset[tuple[str, str]]

    def is_regular(self, p: GeneralizedPath) -> bool:
        return (p.source, p.target) in self.pairs

    def contains(self, x: PathElement) -> bool:
        return all(self.is_regular(p) for p in x.terms)

    def __contains__(self, x: PathElement) -> bool:
        return self.contains(x)

    def span_in(self, quotient: PathQuotient) -> Subspace:
        return quotient.path_span(self.is_regular)

    @property
    def is_zero(self) -> bool:
        return not self.pairs


def radical_description(q: Quiver, kind: str = "jacobson") -> RadicalDescription:
    if kind not in RADICAL_KINDS:
        raise ValueError(f"unknown radical kind {kind!r}; expected one of {', '.join(RADICAL_KINDS)}")
    return RadicalDescription(kind, frozenset(regular_pairs(q)))


def vn_radical_description(q: Quiver) -> tuple[str, ...]:
    """Vertices i with k e_i inside the von Neumann radical: the isolated ones."""
    return q.isolated_vertices()


def regular_path_count(q: Quiver) -> int | None:
    """dim k R(D), or None when some regular path runs through a cycle.

    Every vertex on a path between distinct strong classes lies in a class
    that reaches or is reached by another class. R(D) is finite iff all those
    vertices are loop-free singletons, and then it is the set of nontrivial
    paths among them, counted by one pass in reverse topological order.
    """
    rep = q.connectivity()
    size = {v: len(cls) for cls in rep.strong for v in cls}
    linked = {v for s, t in rep.reach if not rep.reachable(t, s) for v in (s, t)}
    if any(size[v] > 1 or q.has_loop(v) for v in linked):
        return None
    ways: dict[str, int] = {}
    for v in reversed(list(nx.topological_sort(q.graph.subgraph(linked)))):
        ways[v] = sum(1 + ways[a.target] for a in q.out_arrows(v))
    return sum(ways.values())


def regular_paths(q: Quiver) -> list[GeneralizedPath]:
    """The basis R(D) of the radical of kD, without enumerating other paths."""
    if regular_path_count(q) is None:
        raise InfiniteDimensionError("a regular path runs through a cycle; R(D) is infinite")
    rep = q.connectivity()
    out: list[GeneralizedPath] = []
    for s, t in regular_pairs(q):
        stack: list[tuple[tuple[str, ...], tuple[str, ...]]] = [((s,), ())]
        while stack:
            verts, arrs = stack.pop()
            if verts[-1] == t:
                out.append(GeneralizedPath(verts, arrs, (0,) * len(verts)))
                continue
            for a in q.out_arrows(verts[-1]):
                if rep.reachable(a.target, t):
                    stack.append((verts + (a.target,), arrs + (a.name,)))
    out.sort(key=PathAlgebra(q).path_key)
    return out


def is_prime(q: Quiver) -> bool:
    return bool(q.vertices) and len(q.connectivity().strong) == 1


def gamma_block_radical(q: Quiver, s: str, t: str, kind: str = "jacobson") -> str:
    """Radical of the block A_st as a Gamma-ring over A_ts: "zero" or "full"."""
    q.check_vertex(s)
    q.check_vertex(t)
    rep = q.connectivity()
    if kind == "vn":
        if s != t:
            return "zero"
        # A_ss = k e_s exactly when no cycle passes through s
        through = len(rep.strong_class(s)) > 1 or q.has_loop(s)
        return "zero" if through else "full"
    if kind not in RADICAL_KINDS:
        raise ValueError(f"unknown radical kind {kind!r}")
    if not rep.reachable(s, t):
        raise ValueError(f"A_{s}{t} = 0: the block radical needs a nonzero block")
    return "zero" if rep.reachable(t, s) else "full"


@dataclass(frozen=True)
class EquivalenceReport:
    weak_is_strong: bool
    unilateral_is_strong: bool
    all_components_coincide: bool
    arrows_within_strong: bool
    no_regular_pairs: bool
    reach_symmetric: bool
    sum_of_primes: bool
    semiprime: bool
    blocks_semiprime: bool
    blocks_radical_free: bool
    radical_zero: bool

    def verdicts(self) -> dict[str, bool]:
        return {name: getattr(self, name) for name in self.__dataclass_fields__}

    @property
    def consistent(self) -> bool:
        return len(set(self.verdicts().values())) == 1


def equivalence_report(q: Quiver) -> EquivalenceReport:
    """Evaluate each equivalent form of "no regular path" by its own route."""
    rep = q.connectivity()
    strong = set(map(frozenset, rep.strong))
    weak = set(map(frozenset, rep.weak))
    covered = {a.name for cls in rep.strong for a in q.subquiver(cls).arrows}
    pairs = [(i, j) for i in q.vertices for j in q.vertices]
    reachable = [(i, j) for i, j in pairs if i != j and rep.reachable(i, j)]
    return EquivalenceReport(
        weak_is_strong=weak == strong,
        unilateral_is_strong=rep.condensation_edges == 0,
        all_components_coincide=weak == strong and rep.condensation_edges == 0,
        arrows_within_strong=covered == {a.name for a in q.arrows},
        no_regular_pairs=not regular_pairs(q),
        reach_symmetric=all(rep.reachable(i, j) == rep.reachable(j, i) for i, j in pairs),
        sum_of_primes=all(is_prime(q.subquiver(cls)) for cls in rep.weak),
        semiprime=radical_description(q).is_zero,
        blocks_semiprime=all(rep.reachable(j, i) for i, j in reachable),
        blocks_radical_free=all(gamma_block_radical(q, i, j) == "zero" for i, j in reachable),
        radical_zero=not any(
            a.source != a.target and not rep.reachable(a.target, a.source) for a in q.arrows
        ),
    )


@dataclass(frozen=True)
class OmegaRadicalComparison:
    predicted_dim: int
    oracle_dim: int
    equal: bool
    algebra_dim: int


def omega_radical_conjecture(pa: PathAlgebra, cap: int | None = None) -> OmegaRadicalComparison:
    """Compare the oracle radical of k(D, Omega) with the span of regular generalized paths.

    Observation only: no claim is made either way.
    """
    quotient = materialize(pa, cap=cap)
    predicted = radical_description(pa.quiver).span_in(quotient)
    oracle = jacobson_oracle(quotient)
    return OmegaRadicalComparison(predicted.dim, oracle.dim, predicted == oracle, quotient.dim)


def draw_acyclic_quiver(
    rng, max_vertices: int = 7, max_arrows: int = 12, max_paths: int | None = None
) -> tuple[Quiver, int]:
    """Random DAG (arrows only from lower to higher vertex index) and the number of rejected draws.

    With ``max_paths`` the draw is repeated until kD has at most that many paths,
    which biases the sample towards sparse quivers; the rejection count says by how much.
    """
    rejected = 0
    while True:
        nv = rng.randint(1, max_vertices)
        verts = [str(i + 1) for i in range(nv)]
        arrows = []
        if nv > 1:
            for k in range(rng.randint(0, max_arrows)):
                i, j = sorted(rng.sample(range(nv), 2))
                arrows.append((f"a{k + 1}", verts[i], verts[j]))
        q = Quiver(verts, arrows)
        if max_paths is None or len(PathAlgebra(q).paths()) <= max_paths:
            return q, rejected
        rejected += 1


def random_quiver(rng, max_vertices: int = 8, max_arrows: int = 12) -> Quiver:
    """Random digraph with loops and parallel arrows."""
    nv = rng.randint(1, max_vertices)
    verts = [str(i + 1) for i in range(nv)]
    arrows = [
        (f"a{k + 1}", rng.choice(verts), rng.choice(verts)) for k in range(rng.randint(0, max_arrows))
    ]
    return Quiver(verts, arrows)
