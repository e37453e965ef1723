"""Finite-dimensional algebras and brute-force oracles.

:class:`FinDimAlgebra` stores sparse structure constants over Q(zeta_N).
Each oracle works on the restriction of scalars to Q, which ``rational``
exposes. A subspace returned by an oracle is a :class:`~gmpath.linalg.Subspace`
of Q^(dim * phi(N)) whose ``dim`` reports the K-dimension.

Oracles:

* :func:`jacobson_oracle` is the trace criterion
  rad A = {x : tr L_(x b) = 0 for all b}, valid in characteristic zero.
* :func:`largest_nilpotent_check` computes powers of an ideal.
* :func:`vn_regular_element` solves the linear system x y x = x.
* :func:`prime_bruteforce` / :func:`semiprime_bruteforce` decide exactly.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable, Mapping, Sequence

from sympy import Poly, Rational, Symbol

from .errors import (
    AssociativityError,
    DimensionBoundError,
    NonUnitalError,
    NotAnIdealError,
    OracleInconsistencyError,
)
from .linalg import Subspace, Vector, add_scaled, nullspace, rank, solve
from .scalar import Cyclotomic, Scalar, common_conductor, field_degree, parse_combination, zeta

logger = logging.getLogger(__name__)

KVector = dict[int, Cyclotomic]

DEFAULT_MAX_DIM = 64


def kadd(target: KVector, source: Mapping[int, Cyclotomic], scale: Scalar = 1) -> None:
    """target += scale * source, in place, dropping zeros."""
    for k, v in source.items():
        nv = target[k] + v * scale if k in target else v * scale
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


def kscale(v: Mapping[int, Cyclotomic], scale: Scalar) -> KVector:
    out: KVector = {}
    for k, x in v.items():
        y = x * scale
        if y:
            out[k] = y
    return out


class _RationalForm:
    """Restriction of scalars of a K-algebra to Q; basis z^a b_i at i*d + a."""

    def __init__(self, algebra: "FinDimAlgebra"):
        n, d = algebra.conductor, algebra.degree
        self.dim = algebra.dim * d
        self.degree = d
        zetas = [zeta(n, e) for e in range(2 * d)]
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (p, q), prod in algebra.structure.items():
            for a in range(d):
                for c in range(d):
                    out: dict[int, Fraction] = {}
                    for k, coef in prod.items():
                        val = coef * zetas[a + c] if d > 1 else coef
                        for e, x in enumerate(val.coeffs):
                            if x:
                                out[k * d + e] = out.get(k * d + e, 0) + x
                    out = {k: x for k, x in out.items() if x}
                    if out:
                        table[(p * d + a, q * d + c)] = out
        self.table = table
        self.unit = algebra.to_q(algebra.unit) if algebra.unit is not None else None

    def mul(self, u: Mapping[int, Fraction], v: Mapping[int, Fraction]) -> Vector:
        out: Vector = {}
        table = self.table
        for p, x in u.items():
            for q, y in v.items():
                prod = table.get((p, q))
                if prod:
                    add_scaled(out, prod, x * y)
        return out

    def basis(self, p: int) -> Vector:
        return {p: Fraction(1)}


class FinDimAlgebra:
    """Associative algebra on a named basis with structure constants in Q(zeta_N).

    ``products[(p, q)]`` maps k to the coefficient of b_k in b_p * b_q; missing
    pairs multiply to zero. ``unit`` may be declared (it is verified) and is
    otherwise searched for on first use.
    """

    def __init__(
        self,
        names: Sequence[str],
        products: Mapping[tuple[int, int], Mapping[int, Scalar]],
        *,
        conductor: int | None = None,
        unit: Mapping[int, Scalar] | None = None,
        name: str = "algebra",
    ):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"{name}: duplicate basis names")
        self.name = name
        scalars = [c for prod in products.values() for c in prod.values()]
        if unit:
            scalars += list(unit.values())
        n = common_conductor(scalars)
        if conductor is not None:
            n = _lcm(n, conductor)
        self.conductor = n
        self.degree = field_degree(n)
        structure: dict[tuple[int, int], dict[int, Cyclotomic]] = {}
        dim = len(self.names)
        for (p, q), prod in products.items():
            if not (0 <= p < dim and 0 <= q < dim):
                raise ValueError(f"{name}: structure constant index out of range: {(p, q)}")
            clean = {k: Cyclotomic.coerce(c, n) for k, c in prod.items() if c}
            clean = {k: c for k, c in clean.items() if c}
            if clean:
                structure[(p, q)] = clean
        self.structure = structure
        self._index = {nm: i for i, nm in enumerate(self.names)}
        self._declared_unit = unit is not None
        self._unit: KVector | None = None
        self._cache: dict[str, object] = {}
        if unit is not None:
            u = {k: Cyclotomic.coerce(c, n) for k, c in unit.items() if c}
            for i in range(dim):
                b = self.basis_vector(i)
                if self.mul(u, b) != b or self.mul(b, u) != b:
                    raise NonUnitalError(f"{name}: declared unit does not act as identity on {self.names[i]!r}")
            self._unit = u

    def __repr__(self) -> str:
        return f"FinDimAlgebra({self.name!r}, dim={self.dim}, conductor={self.conductor})"

    @property
    def dim(self) -> int:
        return len(self.names)

    @classmethod
    def field(cls, conductor: int = 1, name: str = "k") -> "FinDimAlgebra":
        return cls(["1"], {(0, 0): {0: 1}}, conductor=conductor, unit={0: 1}, name=name)

    # elements

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"{self.name}: unknown basis element {name!r}") from None

    def one(self) -> Cyclotomic:
        return Cyclotomic(1, self.conductor)

    def basis_vector(self, i: int) -> KVector:
        return {i: self.one()}

    def element(self, terms: Mapping[str, Scalar]) -> KVector:
        out: KVector = {}
        for nm, c in terms.items():
            kadd(out, self.basis_vector(self.index(nm)), Cyclotomic.coerce(c, self.conductor))
        return out

    def parse_element(self, text: str) -> KVector:
        out: KVector = {}
        for coeff, atom in parse_combination(text, self.conductor):
            kadd(out, self.basis_vector(self.index(atom)), coeff)
        return out

    def literal(self, v: Mapping[int, Cyclotomic]) -> str:
        parts = []
        for k in sorted(v):
            c = v[k]
            nm = self.names[k]
            if c == 1:
                parts.append(nm)
            elif c == -1:
                parts.append(f"-{nm}")
            elif c.is_rational():
                parts.append(f"{c}*{nm}")
            else:
                parts.append(f"({c})*{nm}")
        text = " + ".join(parts) if parts else "0"
        return text.replace("+ -", "- ")

    def mul(self, u: Mapping[int, Cyclotomic], v: Mapping[int, Cyclotomic]) -> KVector:
        out: KVector = {}
        structure = self.structure
        for p, x in u.items():
            for q, y in v.items():
                prod = structure.get((p, q))
                if prod:
                    kadd(out, prod, x * y)
        return out

    # checks

    def check_associativity(self) -> tuple[str, str, str] | None:
        """First basis triple (a, b, c) with (ab)c != a(bc), or None."""
        n = self.dim
        for p in range(n):
            bp = self.basis_vector(p)
            for q in range(n):
                left = self.mul(bp, self.basis_vector(q))
                for r in range(n):
                    br = self.basis_vector(r)
                    if self.mul(left, br) != self.mul(bp, self.mul(self.basis_vector(q), br)):
                        return (self.names[p], self.names[q], self.names[r])
        return None

    def require_associative(self) -> None:
        witness = self.check_associativity()
        if witness is not None:
            raise AssociativityError(f"{self.name}: (ab)c != a(bc) for basis triple {witness}", witness)

    @property
    def unit(self) -> KVector | None:
        if self._unit is None and not self._declared_unit and "unit" not in self._cache:
            self._cache["unit"] = self.find_unit()
            self._unit = self._cache["unit"]  # type: ignore[assignment]
        return self._unit

    def is_unital(self) -> bool:
        return self.unit is not None

    def find_unit(self) -> KVector | None:
        """Solve u b = b u = b for all basis b; None if no unit exists."""
        if self.dim == 0:
            return None
        r = self.rational
        m = r.dim
        rows: dict[tuple[int, int, int], dict[int, Fraction]] = {}
        rhs: dict[tuple[int, int, int], Fraction] = {}
        for j in range(m):
            bj = r.basis(j)
            for side in (0, 1):
                for p in range(m):
                    bp = r.basis(p)
                    prod = r.mul(bp, bj) if side == 0 else r.mul(bj, bp)
                    for k, x in prod.items():
                        rows.setdefault((j, side, k), {})[p] = x
                rhs[(j, side, j)] = Fraction(1)
                rows.setdefault((j, side, j), {})
        keys = sorted(rows)
        pos = {key: i for i, key in enumerate(keys)}
        sol = solve([rows[k] for k in keys], m, {pos[k]: v for k, v in rhs.items()})
        if sol is None:
            return None
        return self.from_q(sol)

    def unitization(self) -> "FinDimAlgebra":
        """Adjoin a fresh unit ``1`` as the last basis element."""
        n = self.dim
        one = "1" if "1" not in self._index else "1'"
        products: dict[tuple[int, int], dict[int, Scalar]] = {k: dict(v) for k, v in self.structure.items()}
        for i in range(n + 1):
            products[(n, i)] = {i: 1}
            products[(i, n)] = {i: 1}
        return FinDimAlgebra(
            self.names + (one,), products, conductor=self.conductor, unit={n: 1}, name=f"{self.name}+1"
        )

    # restriction of scalars

    @cached_property
    def rational(self) -> _RationalForm:
        form = _RationalForm(self)
        logger.debug("%s: rational form of dimension %d", self.name, form.dim)
        return form

    def to_q(self, v: Mapping[int, Cyclotomic]) -> Vector:
        d = self.degree
        out: Vector = {}
        for i, c in v.items():
            c = Cyclotomic.coerce(c, self.conductor)
            for a, x in enumerate(c.coeffs):
                if x:
                    out[i * d + a] = x
        return out

    def from_q(self, v: Mapping[int, Fraction]) -> KVector:
        d = self.degree
        grouped: dict[int, list[Fraction]] = {}
        for idx, x in v.items():
            grouped.setdefault(idx // d, [Fraction(0)] * d)[idx % d] = Fraction(x)
        out: KVector = {}
        for i, coeffs in grouped.items():
            c = Cyclotomic(coeffs, self.conductor)
            if c:
                out[i] = c
        return out

    def span(self, vectors: Iterable[Mapping[int, Cyclotomic]]) -> Subspace:
        """Q-form of the K-span of ``vectors``."""
        d = self.degree
        zs = [zeta(self.conductor, a) for a in range(d)]
        qvecs = [self.to_q(kscale(v, z)) for v in vectors for z in zs]
        return Subspace.span(qvecs, self.dim * d, d)

    def coordinate_span(self, indices: Iterable[int]) -> Subspace:
        d = self.degree
        return Subspace.coordinates((i * d + a for i in indices for a in range(d)), self.dim * d, d)

    def whole(self) -> Subspace:
        return self.coordinate_span(range(self.dim))

    def zero_subspace(self) -> Subspace:
        return Subspace.zero(self.dim * self.degree, self.degree)

    def kbasis(self, sub: Subspace) -> list[KVector]:
        """A K-basis of a K-stable Q-subspace."""
        chosen: list[KVector] = []
        current = self.zero_subspace()
        for row in sub.basis():
            cand = self.from_q(row)
            if not current.contains(self.to_q(cand)):
                chosen.append(cand)
                current = self.span(chosen)
            if current.qdim == sub.qdim:
                break
        return chosen

    def literals(self, sub: Subspace) -> list[str]:
        return [self.literal(v) for v in self.kbasis(sub)]


def _lcm(a: int, b: int) -> int:
    from math import lcm

    return lcm(a, b)


# -- subspace products and ideals ---------------------------------------------


def product_space(a: FinDimAlgebra, left: Subspace, right: Subspace) -> Subspace:
    r = a.rational
    prods = [r.mul(x, y) for x in left.basis() for y in right.basis()]
    return Subspace.span(prods, r.dim, a.degree)


def ideal_violation(a: FinDimAlgebra, sub: Subspace) -> tuple[str, str, str] | None:
    """A witness (side, basis name, literal) showing ``sub`` is not an ideal."""
    r = a.rational
    for p in range(r.dim):
        bp = r.basis(p)
        for vec in sub.basis():
            for side, prod in (("left", r.mul(bp, vec)), ("right", r.mul(vec, bp))):
                if not sub.contains(prod):
                    return (side, a.names[p // a.degree], a.literal(a.from_q(vec)))
    return None


def is_ideal(a: FinDimAlgebra, sub: Subspace) -> bool:
    return ideal_violation(a, sub) is None


def require_ideal(a: FinDimAlgebra, sub: Subspace) -> None:
    witness = ideal_violation(a, sub)
    if witness is not None:
        side, name, lit = witness
        raise NotAnIdealError(f"{a.name}: {side} product of {name} with {lit} leaves the subspace", witness)


def ideal_closure(a: FinDimAlgebra, sub: Subspace) -> Subspace:
    """Smallest two-sided ideal containing ``sub``."""
    r = a.rational
    current = sub
    while True:
        new = list(current.basis())
        for p in range(r.dim):
            bp = r.basis(p)
            for vec in current.basis():
                new.append(r.mul(bp, vec))
                new.append(r.mul(vec, bp))
        grown = Subspace.span(new, r.dim, a.degree)
        if grown == current:
            return current
        current = grown


def power_chain(a: FinDimAlgebra, sub: Subspace) -> list[Subspace]:
    """[B, B^2, ...] ending at the first zero power or the first repeat."""
    chain = [sub]
    while not chain[-1].is_zero():
        nxt = product_space(a, chain[-1], sub)
        if nxt == chain[-1]:
            break
        chain.append(nxt)
    return chain


def annihilator(a: FinDimAlgebra, sub: Subspace) -> Subspace:
    """Two-sided annihilator {x : x s = s x = 0 for all s in sub}."""
    r = a.rational
    rows: dict[tuple[int, int, int], dict[int, Fraction]] = {}
    for j, s in enumerate(sub.basis()):
        for p in range(r.dim):
            bp = r.basis(p)
            for side, prod in ((0, r.mul(bp, s)), (1, r.mul(s, bp))):
                for k, x in prod.items():
                    rows.setdefault((j, side, k), {})[p] = x
    return Subspace.span(nullspace([rows[k] for k in sorted(rows)], r.dim), r.dim, a.degree)


def center(a: FinDimAlgebra) -> Subspace:
    r = a.rational
    rows: dict[tuple[int, int], dict[int, Fraction]] = {}
    for q in range(r.dim):
        bq = r.basis(q)
        for p in range(r.dim):
            bp = r.basis(p)
            diff = r.mul(bp, bq)
            add_scaled(diff, r.mul(bq, bp), Fraction(-1))
            for k, x in diff.items():
                rows.setdefault((q, k), {})[p] = x
    return Subspace.span(nullspace([rows[k] for k in sorted(rows)], r.dim), r.dim, a.degree)


# -- oracles -------------------------------------------------------------------


def jacobson_oracle(a: FinDimAlgebra) -> Subspace:
    """Jacobson radical by the characteristic-zero trace criterion.

    The result is checked to be an ideal, nilpotent, and to leave a
    nondegenerate trace form on the quotient.
    """
    cached = a._cache.get("jacobson")
    if cached is not None:
        return cached  # type: ignore[return-value]
    if a.unit is None:
        raise NonUnitalError(f"{a.name}: trace criterion needs a unital algebra; adjoin a unit first")
    r = a.rational
    m = r.dim
    tau = [Fraction(0)] * m
    for (p, q), prod in r.table.items():
        if q in prod:
            tau[p] += prod[q]
    form: list[dict[int, Fraction]] = [dict() for _ in range(m)]
    for (p, q), prod in r.table.items():
        t = sum((x * tau[k] for k, x in prod.items()), Fraction(0))
        if t:
            form[p][q] = t
    rad = Subspace.span(nullspace(form, m), m, a.degree)
    # free columns of the radical's RREF span a complement; the form must be nondegenerate there
    complement = sorted(set(range(m)) - set(rad.pivots))
    pos = {c: i for i, c in enumerate(complement)}
    restricted = [{pos[q]: x for q, x in form[p].items() if q in pos} for p in complement]
    if rank(restricted, len(complement)) != len(complement):
        raise OracleInconsistencyError(f"{a.name}: trace form degenerate on the quotient")
    if not is_ideal(a, rad):
        raise OracleInconsistencyError(f"{a.name}: trace radical is not an ideal")
    if not power_chain(a, rad)[-1].is_zero():
        raise OracleInconsistencyError(f"{a.name}: trace radical is not nilpotent")
    logger.debug("%s: jacobson radical of dimension %d in %d", a.name, rad.dim, a.dim)
    a._cache["jacobson"] = rad
    return rad


@dataclass(frozen=True)
class NilpotencyVerdict:
    nilpotent: bool
    index: int | None

    def __bool__(self) -> bool:
        return self.nilpotent


def largest_nilpotent_check(a: FinDimAlgebra, sub: Subspace) -> NilpotencyVerdict:
    """Whether the ideal ``sub`` is nilpotent, with its nilpotency index."""
    require_ideal(a, sub)
    chain = power_chain(a, sub)
    if not chain[-1].is_zero():
        return NilpotencyVerdict(False, None)
    index = len(chain) if not sub.is_zero() else 1
    if a.unit is not None and not sub.issubspace(jacobson_oracle(a)):
        raise OracleInconsistencyError(f"{a.name}: nilpotent ideal outside the trace radical")
    return NilpotencyVerdict(True, index)


def vn_regular_element(a: FinDimAlgebra, x: Mapping[int, Cyclotomic]) -> KVector | None:
    """Some y with x y x = x, or None when the linear system is inconsistent."""
    r = a.rational
    xq = a.to_q(x)
    if not xq:
        return {}
    rows: list[dict[int, Fraction]] = [dict() for _ in range(r.dim)]
    for j in range(r.dim):
        col = r.mul(r.mul(xq, r.basis(j)), xq)
        for k, v in col.items():
            rows[k][j] = v
    sol = solve(rows, r.dim, xq)
    return None if sol is None else a.from_q(sol)


def regular_witness_in_ideal(a: FinDimAlgebra, x: Mapping[int, Cyclotomic], y: Mapping[int, Cyclotomic]) -> KVector:
    """Map an ambient witness y of x = xyx to yxy, which lies in any ideal containing x."""
    return a.mul(a.mul(y, x), y)


@dataclass(frozen=True)
class VnRegularityCheck:
    status: str  # verified | counterexample | inconclusive
    witness: KVector | None = None
    tested: int = 0

    @property
    def verified(self) -> bool:
        return self.status == "verified"


def vn_regular_ideal_check(
    a: FinDimAlgebra, sub: Subspace, samples: int = 200, seed: int = 0
) -> VnRegularityCheck:
    """Test von Neumann regularity on a basis of ``sub`` plus random combinations.

    A counterexample is conclusive. ``verified`` is sampling evidence only,
    since regular elements do not form a subspace.
    """
    if sub.is_zero():
        return VnRegularityCheck("verified", None, 0)
    basis = a.kbasis(sub)
    rng = random.Random(seed)
    candidates: list[KVector] = list(basis)
    for _ in range(samples):
        v: KVector = {}
        while not v:
            for b in basis:
                c = rng.randint(-3, 3)
                if c:
                    kadd(v, b, c)
        candidates.append(v)
    for tested, x in enumerate(candidates, start=1):
        if vn_regular_element(a, x) is None:
            return VnRegularityCheck("counterexample", x, tested)
    status = "verified" if samples > 0 else "inconclusive"
    return VnRegularityCheck(status, None, len(candidates))


def essential_element_check(
    a: FinDimAlgebra, x: Mapping[int, Cyclotomic], samples: int = 200, seed: int = 0
) -> KVector | None:
    """Look for a nonzero y whose ideal closure misses ``x``.

    None means every basis element and every sampled combination generates an
    ideal containing ``x``; a returned y is conclusive.
    """
    target = a.to_q(x)
    rng = random.Random(seed)
    candidates: list[KVector] = [a.basis_vector(i) for i in range(a.dim)]
    for _ in range(samples):
        v: KVector = {}
        while not v and a.dim:
            for i in range(a.dim):
                c = rng.randint(-2, 2)
                if c:
                    kadd(v, a.basis_vector(i), c)
        candidates.append(v)
    for y in candidates:
        if y and target not in ideal_closure(a, a.span([y])):
            return y
    return None


def _check_bound(a: FinDimAlgebra, max_dim: int) -> None:
    if a.dim > max_dim:
        raise DimensionBoundError(a.dim, max_dim)


def _radical_of(a: FinDimAlgebra) -> tuple[FinDimAlgebra, Subspace]:
    """(unital algebra containing a, its radical); J(a) = J(a + 1) for non-unital a."""
    if a.unit is not None:
        return a, jacobson_oracle(a)
    u = a.unitization()
    return u, jacobson_oracle(u)


def radical(a: FinDimAlgebra) -> Subspace:
    """Jacobson radical for unital or non-unital algebras, in the coordinates of ``a``."""
    if a.dim == 0:
        return a.zero_subspace()
    host, rad = _radical_of(a)
    if host is a:
        return rad
    return rad.restrict(range(a.dim * a.degree))


def semiprime_bruteforce(a: FinDimAlgebra, max_dim: int = DEFAULT_MAX_DIM) -> bool:
    """Semiprime iff the lower radical (here the Jacobson radical) vanishes."""
    _check_bound(a, max_dim)
    if a.dim == 0:
        return True
    _, rad = _radical_of(a)
    return rad.is_zero()


@dataclass(frozen=True)
class PrimeVerdict:
    prime: bool
    reason: str
    witness: tuple[KVector, KVector] | None = field(default=None, compare=False)

    def __bool__(self) -> bool:
        return self.prime


def _zero_pair_screen(a: FinDimAlgebra) -> tuple[int, int] | None:
    for p in range(a.dim):
        bp = a.basis_vector(p)
        rows = [a.mul(bp, a.basis_vector(r)) for r in range(a.dim)]
        rows = [v for v in rows if v]
        for q in range(a.dim):
            bq = a.basis_vector(q)
            if all(not a.mul(v, bq) for v in rows):
                return (p, q)
    return None


def _evaluate(a: FinDimAlgebra, poly_coeffs: Sequence[Fraction], z: Vector, one: Vector) -> Vector:
    r = a.rational
    acc: Vector = {}
    for c in poly_coeffs:  # highest degree first
        acc = r.mul(acc, z)
        add_scaled(acc, one, c)
    return acc


def prime_analysis(a: FinDimAlgebra, max_dim: int = DEFAULT_MAX_DIM) -> PrimeVerdict:
    """Exact primeness decision with a witness pair x, y (x A y = 0) when not prime."""
    _check_bound(a, max_dim)
    if a.dim == 0:
        return PrimeVerdict(False, "zero algebra")
    pair = _zero_pair_screen(a)
    if pair is not None:
        p, q = pair
        return PrimeVerdict(
            False,
            f"{a.names[p]} * A * {a.names[q]} = 0",
            (a.basis_vector(p), a.basis_vector(q)),
        )
    host, rad = _radical_of(a)
    if not rad.is_zero():
        chain = power_chain(host, rad)
        last = chain[-2] if len(chain) >= 2 else rad
        x = host.from_q(last.basis()[0])
        # J^(k-1) * A * J^(k-1) lies in J^k = 0
        x = {i: c for i, c in x.items() if i < a.dim}
        return PrimeVerdict(False, "nonzero nilpotent ideal", (x, x))
    r = a.rational
    one = r.unit
    if one is None:
        raise OracleInconsistencyError(f"{a.name}: semisimple algebra without unit")
    zspace = center(a)
    zbasis = zspace.basis()
    d = len(zbasis)
    if d == 1:
        return PrimeVerdict(True, "simple: centre is the base field")
    # a moment-curve point z_c is primitive for all but finitely many c
    bound = (d - 1) * d * (d - 1) // 2 + 1
    t = Symbol("t")
    for c in range(bound + 1):
        z: Vector = {}
        for j, vec in enumerate(zbasis):
            add_scaled(z, vec, Fraction(c) ** j if j else Fraction(1))
        powers = [one]
        coeffs = None
        while True:
            nxt = r.mul(powers[-1], z)
            rows: list[dict[int, Fraction]] = [dict() for _ in range(r.dim)]
            for i, vec in enumerate(powers):
                for k, x in vec.items():
                    rows[k][i] = x
            coeffs = solve(rows, len(powers), nxt)
            if coeffs is not None:
                break
            powers.append(nxt)
        if len(powers) < d:
            continue
        k = len(powers)
        poly_coeffs = [Fraction(1)] + [-coeffs.get(i, Fraction(0)) for i in reversed(range(k))]
        f = Poly([Rational(x.numerator, x.denominator) for x in poly_coeffs], t)
        if f.is_irreducible:
            return PrimeVerdict(True, f"centre is a field of degree {d} over Q")
        _, factors = f.factor_list()
        g = factors[0][0] ** factors[0][1]
        h = f.exquo(g)
        to_frac = lambda p: [Fraction(int(x.p), int(x.q)) for x in p.all_coeffs()]  # noqa: E731
        x = a.from_q(_evaluate(a, to_frac(g), z, one))
        y = a.from_q(_evaluate(a, to_frac(h), z, one))
        return PrimeVerdict(False, "centre is not a field", (x, y))
    raise OracleInconsistencyError(f"{a.name}: no primitive element found in the centre")


def prime_bruteforce(a: FinDimAlgebra, max_dim: int = DEFAULT_MAX_DIM) -> bool:
    return prime_analysis(a, max_dim).prime


# -- standard algebras ---------------------------------------------------------


def _entry_name(r: int, c: int, n: int) -> str:
    return f"E{r}{c}" if n < 10 else f"E{r}_{c}"


def matrix_algebra(n: int, conductor: int = 1) -> FinDimAlgebra:
    names = [_entry_name(r, c, n) for r in range(1, n + 1) for c in range(1, n + 1)]
    idx = lambda r, c: (r - 1) * n + (c - 1)  # noqa: E731
    products = {
        (idx(r, c), idx(c, s)): {idx(r, s): 1}
        for r in range(1, n + 1)
        for c in range(1, n + 1)
        for s in range(1, n + 1)
    }
    unit = {idx(i, i): 1 for i in range(1, n + 1)}
    return FinDimAlgebra(names, products, conductor=conductor, unit=unit, name=f"M{n}")


def upper_triangular(n: int, strict: bool = False) -> FinDimAlgebra:
    pairs = [(r, c) for r in range(1, n + 1) for c in range(1, n + 1) if (r < c if strict else r <= c)]
    pos = {rc: i for i, rc in enumerate(pairs)}
    products = {}
    for (r, c), i in pos.items():
        for (c2, s), j in pos.items():
            if c == c2 and (r, s) in pos:
                products[(i, j)] = {pos[(r, s)]: 1}
    return FinDimAlgebra([_entry_name(r, c, n) for r, c in pairs], products, name=f"T{n}")


def truncated_polynomial(n: int, var: str = "x", with_unit: bool = True, conductor: int = 1) -> FinDimAlgebra:
    """k[x]/(x^n), or its augmentation ideal x k[x]/(x^n) when ``with_unit`` is False."""
    low = 0 if with_unit else 1
    exps = list(range(low, n))
    names = ["1" if e == 0 else (var if e == 1 else f"{var}^{e}") for e in exps]
    pos = {e: i for i, e in enumerate(exps)}
    products = {(pos[e], pos[f]): {pos[e + f]: 1} for e in exps for f in exps if e + f < n}
    unit = {pos[0]: 1} if with_unit else None
    return FinDimAlgebra(names, products, conductor=conductor, unit=unit, name=f"k[{var}]/({var}^{n})")


def direct_sum(*algebras: FinDimAlgebra) -> FinDimAlgebra:
    names: list[str] = []
    products: dict[tuple[int, int], dict[int, Scalar]] = {}
    units: dict[int, Scalar] = {}
    offset = 0
    all_unital = True
    for i, alg in enumerate(algebras):
        names += [f"{nm}@{i}" for nm in alg.names]
        for (p, q), prod in alg.structure.items():
            products[(p + offset, q + offset)] = {k + offset: c for k, c in prod.items()}
        if alg.unit is None:
            all_unital = False
        else:
            units.update({k + offset: c for k, c in alg.unit.items()})
        offset += alg.dim
    return FinDimAlgebra(names, products, unit=units if all_unital else None, name="+".join(a.name for a in algebras))


def tensor_product(a: FinDimAlgebra, b: FinDimAlgebra) -> FinDimAlgebra:
    names = [f"{x}(x){y}" for x, y in product(a.names, b.names)]
    nb = b.dim
    products: dict[tuple[int, int], dict[int, Scalar]] = {}
    for (p, q), pa in a.structure.items():
        for (r, s), pb in b.structure.items():
            out: dict[int, Cyclotomic] = {}
            for k, x in pa.items():
                for l, y in pb.items():
                    out[k * nb + l] = x * y
            products[(p * nb + r, q * nb + s)] = out
    unit = None
    if a.unit is not None and b.unit is not None:
        unit = {k * nb + l: x * y for k, x in a.unit.items() for l, y in b.unit.items()}
    return FinDimAlgebra(names, products, unit=unit, name=f"{a.name}(x){b.name}")
