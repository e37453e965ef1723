"""Pointed Hopf algebras H(C, n, c, c*, a, b) on the PBW basis {X^p g}.

Products come from rewriting words in the skew generators X_1..X_t:

* group elements move right, ``g X_j = c*_j(g)^-1 X_j g``;
* out-of-order pairs are sorted, ``X_k X_i = c*_k(c_i) X_i X_k + b_ik (c_i c_k - 1)``
  for ``i < k``;
* full powers are lowered, ``X_i^{n_i} = a_i (c_i^{n_i} - 1)``.

The resulting structure constants feed a :class:`~gmpath.findim.FinDimAlgebra`,
so confluence of the rewriting is established by checking associativity
on every basis triple rather than assumed.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field, replace
from itertools import product
from math import lcm
from pathlib import Path
from typing import Callable, Mapping, Sequence

import numpy as np
from sympy import isprime
from sympy.combinatorics.group_constructs import DirectProduct
from sympy.combinatorics.named_groups import CyclicGroup, DihedralGroup

from .errors import (
    FormulaNotApplicableError,
    ModuleAlgebraError,
    ParameterConstraintError,
    ParseError,
)
from .findim import (
    DEFAULT_MAX_DIM,
    FinDimAlgebra,
    KVector,
    jacobson_oracle,
    kadd,
    largest_nilpotent_check,
)
from .groups import AbelianGroup, CayleyGroup, Character, Element, FiniteGroup, load_cayley
from .linalg import Subspace
from .scalar import Cyclotomic, Scalar, common_conductor, parse_scalar, primitive_root_order

logger = logging.getLogger(__name__)

Word = tuple[int, ...]
Monomial = tuple[tuple[int, ...], Element]
Tensor = dict[tuple[int, int], Cyclotomic]

FAMILIES = ("group", "taft", "two-generator", "linked", "nonabelian", "nonabelian-lifted")

CORRUPTIONS = ("group-commutation", "skew-commutation", "antipode-sign", "parameter-xi")


# -- parameters ----------------------------------------------------------------


@dataclass(frozen=True)
class HopfParams:
    """Data (C, n, c, c*, a, b). Generator indices are 0-based; ``b`` is keyed by (i, j)."""

    group: FiniteGroup
    n: tuple[int, ...]
    c: tuple[Element, ...]
    cstar: tuple[Character, ...]
    a: tuple[int, ...]
    b: Mapping[tuple[int, int], Cyclotomic] = field(default_factory=dict)
    name: str = "H"

    @property
    def t(self) -> int:
        return len(self.c)

    def b_of(self, i: int, j: int) -> Cyclotomic:
        return self.b.get((i, j), Cyclotomic(0))

    def with_b(self, i: int, j: int, value: Scalar) -> "HopfParams":
        b = dict(self.b)
        b[(i, j)] = Cyclotomic.coerce(value)
        return replace(self, b=b)

    @property
    def conductor(self) -> int:
        n = lcm(*(ch.conductor for ch in self.cstar)) if self.cstar else 1
        return lcm(n, common_conductor(self.b.values()))

    @property
    def is_plain(self) -> bool:
        """a = 0 and b = 0, the case written H(C, n, c, c*)."""
        return not any(self.a) and not any(v for v in self.b.values())

    @property
    def dimension(self) -> int:
        d = self.group.order
        for n in self.n:
            d *= n
        return d


@dataclass(frozen=True)
class Violation:
    condition: str
    indices: tuple[int, ...]
    detail: str

    def __str__(self) -> str:
        where = ",".join(str(i + 1) for i in self.indices)
        return f"{self.condition}[{where}]: {self.detail}" if where else f"{self.condition}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def conditions(self) -> set[str]:
        return {v.condition for v in self.violations}

    def summary(self) -> str:
        return "; ".join(str(v) for v in self.violations) if self.violations else "ok"


def validate(params: HopfParams) -> ValidationReport:
    """Check every parameter condition; all violations are listed with their indices."""
    out: list[Violation] = []
    G = params.group
    t = params.t
    if not (len(params.n) == len(params.cstar) == len(params.a) == t):
        out.append(Violation("shape", (), f"t={t} but n, c*, a have lengths {len(params.n)}, {len(params.cstar)}, {len(params.a)}"))
        return ValidationReport(tuple(out))
    for (i, j) in params.b:
        if not (0 <= i < t and 0 <= j < t):
            out.append(Violation("shape", (), f"b index ({i + 1}, {j + 1}) outside 1..{t}"))
    for i in range(t):
        if params.n[i] < 1:
            out.append(Violation("shape", (i,), f"n_i must be positive, got {params.n[i]}"))
        if params.a[i] not in (0, 1):
            out.append(Violation("shape", (i,), f"a_i must be 0 or 1, got {params.a[i]}"))
        if params.c[i] not in G.elements:
            out.append(Violation("shape", (i,), f"c_i is not an element of {G.name}"))
        if params.cstar[i].group is not G:
            out.append(Violation("shape", (i,), "character defined on a different group"))
    if out:
        return ValidationReport(tuple(out))
    if not G.is_abelian():
        if t > 1:
            out.append(Violation("shape", (), "a nonabelian group is supported with a single skew generator only"))
        for i in range(t):
            if not G.is_central(params.c[i]):
                out.append(Violation("central-grouplike", (i,), f"c_i = {G.label(params.c[i])} is not central"))
    ch, c, n = params.cstar, params.c, params.n
    for i in range(t):
        for j in range(t):
            if i == j:
                continue
            if i < j and ch[i](c[j]) * ch[j](c[i]) != 1:
                out.append(Violation("skew-symmetry", (i, j), "c*_i(c_j) c*_j(c_i) != 1"))
            bij = params.b_of(i, j)
            if bij and not (ch[i] * ch[j]).is_trivial():
                out.append(Violation("b-character", (i, j), f"b_ij = {bij} but c*_i c*_j is not trivial"))
            if bij and G.mul(c[i], c[j]) == G.identity:
                out.append(Violation("b-grouplike", (i, j), f"c_i c_j = 1 but b_ij = {bij}"))
            if bij != -(ch[i](c[j]) * params.b_of(j, i)):
                out.append(Violation("b-antisymmetry", (i, j), f"b_ij = {bij} != -c*_i(c_j) b_ji"))
    for i in range(t):
        q = ch[i](c[i])
        order = primitive_root_order(q)
        if order != n[i]:
            out.append(Violation("primitive-root", (i,), f"c*_i(c_i) = {q} is not a primitive {n[i]}-th root of unity"))
        if params.a[i] == 1 and not (ch[i] ** n[i]).is_trivial():
            out.append(Violation("power-character", (i,), "a_i = 1 but (c*_i)^n_i is not trivial"))
        if G.power(c[i], n[i]) == G.identity and params.a[i] != 0:
            out.append(Violation("power-grouplike", (i,), "c_i^n_i = 1 but a_i != 0"))
    return ValidationReport(tuple(out))


# -- rewriting -------------------------------------------------------------------


def _acc(out: dict, src: Mapping, scale: Cyclotomic) -> None:
    for key, v in src.items():
        prev = out.get(key)
        out[key] = v * scale if prev is None else prev + v * scale


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


def _word(p: Sequence[int]) -> Word:
    return tuple(j for j, e in enumerate(p) for _ in range(e))


class _Rewriter:
    """Normal forms X^r k of words in the skew generators, memoized per word.

    ``twist`` and ``skew`` override single commutation coefficients; they
    exist for the negative controls. ``powers=False`` drops the power
    relations (the algebra A_t) and ``cap`` discards monomials of higher
    total degree.
    """

    def __init__(
        self,
        params: HopfParams,
        *,
        powers: bool = True,
        cap: int | None = None,
        twist: Mapping[tuple[int, Element], Cyclotomic] | None = None,
        skew: Mapping[tuple[int, int], Cyclotomic] | None = None,
    ):
        self.params = params
        self.group = params.group
        self.powers = powers
        self.cap = cap
        self._twist = dict(twist or {})
        self._skew = dict(skew or {})
        self.conductor = lcm(
            params.conductor, common_conductor(list(self._twist.values()) + list(self._skew.values()))
        )
        self.one = Cyclotomic(1, self.conductor)
        self._memo: dict[Word, dict[Monomial, Cyclotomic]] = {}

    def twist(self, j: int, g: Element) -> Cyclotomic:
        if (j, g) in self._twist:
            return self._twist[(j, g)]
        return self.params.cstar[j](g)

    def skew(self, k: int, i: int) -> Cyclotomic:
        if (k, i) in self._skew:
            return self._skew[(k, i)]
        return self.params.cstar[k](self.params.c[i])

    def normal_form(self, word: Word) -> dict[Monomial, Cyclotomic]:
        hit = self._memo.get(word)
        if hit is None:
            hit = self._rewrite(word)
            self._memo[word] = hit
        return hit

    def _inject(self, out: dict, prefix: Word, suffix: Word, g: Element, scale: Cyclotomic) -> None:
        """Add scale * (prefix g suffix - prefix suffix)."""
        move = self.one
        for j in suffix:
            move = move * self.twist(j, g).inverse()
        rest = self.normal_form(prefix + suffix)
        shifted = {(r, self.group.mul(k, g)): v for (r, k), v in rest.items()}
        _acc(out, shifted, scale * move)
        _acc(out, rest, -scale)

    def _rewrite(self, word: Word) -> dict[Monomial, Cyclotomic]:
        P, G = self.params, self.group
        if self.cap is not None and not self.powers and P.is_plain and len(word) > self.cap:
            return {}
        for pos in range(len(word) - 1):
            k, i = word[pos], word[pos + 1]
            if k > i:
                prefix, suffix = word[:pos], word[pos + 2 :]
                out: dict[Monomial, Cyclotomic] = {}
                _acc(out, self.normal_form(prefix + (i, k) + suffix), self.skew(k, i))
                bik = P.b_of(i, k)
                if bik:
                    cc = G.mul(P.c[i], P.c[k])
                    if cc != G.identity:
                        self._inject(out, prefix, suffix, cc, bik)
                return _clean(out)
        exps = tuple(word.count(j) for j in range(P.t))
        if self.powers:
            for i, e in enumerate(exps):
                if e >= P.n[i]:
                    if not P.a[i]:
                        return {}
                    pos = word.index(i)
                    out = {}
                    lifted = G.power(P.c[i], P.n[i])
                    if lifted != G.identity:
                        self._inject(out, word[:pos], word[pos + P.n[i] :], lifted, self.one * P.a[i])
                    return _clean(out)
        if self.cap is not None and sum(exps) > self.cap:
            return {}
        return {(exps, G.identity): self.one}

    def product(self, left: Monomial, right: Monomial) -> dict[Monomial, Cyclotomic]:
        """(X^p g)(X^q h) = prod_j c*_j(g)^{-q_j} X^p X^q gh."""
        (p, g), (q, h) = left, right
        coeff = self.one
        for j, e in enumerate(q):
            if e:
                coeff = coeff * self.twist(j, g) ** (-e)
        gh = self.group.mul(g, h)
        out: dict[Monomial, Cyclotomic] = {}
        for (r, k), v in self.normal_form(_word(p) + _word(q)).items():
            key = (r, self.group.mul(k, gh))
            prev = out.get(key)
            out[key] = v * coeff if prev is None else prev + v * coeff
        return _clean(out)


def _x_name(p: Sequence[int]) -> str:
    parts = []
    for j, e in enumerate(p):
        if e:
            gen = "X" if len(p) == 1 else f"X{j + 1}"
            parts.append(gen if e == 1 else f"{gen}^{e}")
    return "".join(parts)


def monomial_name(group: FiniteGroup, p: Sequence[int], g: Element) -> str:
    xs = _x_name(p)
    if g == group.identity:
        return xs or "1"
    return f"{xs}*{group.label(g)}" if xs else group.label(g)


def _materialize(rw: _Rewriter, exponents: Sequence[tuple[int, ...]], name: str) -> tuple[FinDimAlgebra, list[Monomial]]:
    G = rw.group
    basis: list[Monomial] = [(p, g) for p in exponents for g in G.elements]
    pos = {m: i for i, m in enumerate(basis)}
    products: dict[tuple[int, int], dict[int, Cyclotomic]] = {}
    for i, u in enumerate(basis):
        for j, v in enumerate(basis):
            prod = rw.product(u, v)
            if prod:
                products[(i, j)] = {pos[m]: c for m, c in prod.items()}
    zero = tuple(0 for _ in range(rw.params.t))
    names = [monomial_name(G, p, g) for p, g in basis]
    alg = FinDimAlgebra(names, products, conductor=rw.conductor, unit={pos[(zero, G.identity)]: 1}, name=name)
    logger.debug("%s: materialized %d basis monomials", name, len(basis))
    return alg, basis


# -- the Hopf algebra ------------------------------------------------------------


class HopfAlgebra:
    """H(C, n, c, c*, a, b) with product, coproduct, counit and antipode.

    Tables are built on construction and not modified afterwards.
    """

    def __init__(
        self,
        params: HopfParams,
        *,
        check: bool = True,
        twist: Mapping[tuple[int, Element], Cyclotomic] | None = None,
        skew: Mapping[tuple[int, int], Cyclotomic] | None = None,
        antipode_sign: int = -1,
        name: str | None = None,
    ):
        self.name = name or params.name
        if check:
            report = validate(params)
            if not report.ok:
                raise ParameterConstraintError(f"{self.name}: {report.summary()}")
        self.params = params
        self.antipode_sign = antipode_sign
        self._rewriter = _Rewriter(params, twist=twist, skew=skew)
        exps = list(product(*(range(n) for n in params.n)))
        self.algebra, self.basis = _materialize(self._rewriter, exps, self.name)
        self._pos = {m: i for i, m in enumerate(self.basis)}
        self.conductor = self.algebra.conductor
        self._coproduct = [self._basis_coproduct(m) for m in self.basis]
        self._antipode = [self._basis_antipode(m) for m in self.basis]

    def __repr__(self) -> str:
        return f"HopfAlgebra({self.name!r}, dim={self.dim})"

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def names(self) -> tuple[str, ...]:
        return self.algebra.names

    def _one(self) -> Cyclotomic:
        return Cyclotomic(1, self.conductor)

    # elements

    def index(self, p: Sequence[int], g: Element) -> int:
        return self._pos[(tuple(p), g)]

    def monomial(self, p: Sequence[int], g: Element | None = None) -> KVector:
        g = self.params.group.identity if g is None else g
        return {self.index(p, g): self._one()}

    def x(self, j: int) -> KVector:
        """The skew generator X_{j+1}."""
        p = [0] * self.params.t
        p[j] = 1
        return self.monomial(p)

    def grouplike(self, g: Element) -> KVector:
        return self.monomial([0] * self.params.t, g)

    def unit(self) -> KVector:
        return self.grouplike(self.params.group.identity)

    def mul(self, u: KVector, v: KVector) -> KVector:
        return self.algebra.mul(u, v)

    def normal_form(self, word: str | Sequence[str]) -> KVector:
        """Multiply out a word such as ``"X2 X1 g"`` into the PBW basis."""
        tokens = word.replace("*", " ").split() if isinstance(word, str) else list(word)
        out = self.unit()
        for tok in tokens:
            out = self.mul(out, self._token(tok))
        return out

    def _token(self, tok: str) -> KVector:
        try:
            return self.grouplike(self.params.group.parse_element(tok))
        except KeyError:
            pass
        base, _, power = tok.partition("^")
        k = int(power) if power else 1
        t = self.params.t
        gen = None
        if base == "X" and t == 1:
            gen = 0
        elif base.startswith("X") and base[1:].isdigit() and 1 <= int(base[1:]) <= t:
            gen = int(base[1:]) - 1
        if gen is not None:
            factor = self.x(gen)
        else:
            try:
                factor = self.grouplike(self.params.group.parse_element(base))
            except KeyError:
                raise ParseError(f"{self.name}: unknown word letter {tok!r}") from None
        out = self.unit()
        for _ in range(k):
            out = self.mul(out, factor)
        return out

    # coalgebra

    def tensor_mul(self, u: Tensor, v: Tensor) -> Tensor:
        st = self.algebra.structure
        out: Tensor = {}
        for (a, b), x in u.items():
            for (c, d), y in v.items():
                left, right = st.get((a, c)), st.get((b, d))
                if not left or not right:
                    continue
                s = x * y
                for k, lx in left.items():
                    for m, ry in right.items():
                        key = (k, m)
                        prev = out.get(key)
                        val = s * lx * ry
                        out[key] = val if prev is None else prev + val
        return _clean(out)

    def _basis_coproduct(self, m: Monomial) -> Tensor:
        p, g = m
        G, P = self.params.group, self.params
        one = self.index([0] * P.t, G.identity)
        out: Tensor = {(one, one): self._one()}
        for j, e in enumerate(p):
            xj = next(iter(self.x(j)))
            cj = self.index([0] * P.t, P.c[j])
            delta = {(xj, one): self._one(), (cj, xj): self._one()}
            for _ in range(e):
                out = self.tensor_mul(out, delta)
        gi = self.index([0] * P.t, g)
        return self.tensor_mul(out, {(gi, gi): self._one()})

    def _basis_antipode(self, m: Monomial) -> KVector:
        p, g = m
        G, P = self.params.group, self.params
        out = self.grouplike(G.inv(g))
        for j in reversed(range(P.t)):
            sj = self.mul(self.grouplike(G.inv(P.c[j])), self.x(j))
            sj = {k: v * self.antipode_sign for k, v in sj.items()}
            for _ in range(p[j]):
                out = self.mul(out, sj)
        return out

    def coproduct(self, v: KVector) -> Tensor:
        out: Tensor = {}
        for i, c in v.items():
            _acc(out, self._coproduct[i], c)
        return _clean(out)

    def counit(self, v: KVector) -> Cyclotomic:
        total = Cyclotomic(0, self.conductor)
        for i, c in v.items():
            if not any(self.basis[i][0]):
                total = total + c
        return total

    def antipode(self, v: KVector) -> KVector:
        out: KVector = {}
        for i, c in v.items():
            kadd(out, self._antipode[i], c)
        return out

    def literal(self, v: KVector) -> str:
        return self.algebra.literal(v)

    def tensor_literal(self, v: Tensor) -> str:
        parts = [f"({c})*{self.names[a]}(x){self.names[b]}" for (a, b), c in sorted(v.items())]
        return " + ".join(parts) if parts else "0"


# -- axiom harness ---------------------------------------------------------------

HOPF_AXIOMS = (
    "associativity",
    "unit",
    "coassociativity",
    "counit",
    "coproduct-multiplicative",
    "counit-multiplicative",
    "antipode",
)


@dataclass(frozen=True)
class HopfAxiomReport:
    name: str
    results: Mapping[str, str | None]  # axiom -> first witness, None when it holds

    @property
    def passed(self) -> bool:
        return all(w is None for w in self.results.values())

    def failures(self) -> list[str]:
        return [axiom for axiom in HOPF_AXIOMS if self.results.get(axiom) is not None]


def check_hopf_axioms(H: HopfAlgebra) -> HopfAxiomReport:
    """Exhaustive exact check of the bialgebra and antipode laws on basis elements."""
    names = H.names
    n = H.dim
    results: dict[str, str | None] = dict.fromkeys(HOPF_AXIOMS)
    triple = H.algebra.check_associativity()
    if triple is not None:
        results["associativity"] = "(%s %s) %s" % triple
    one = H.unit()
    for i in range(n):
        b = H.algebra.basis_vector(i)
        if H.mul(one, b) != b or H.mul(b, one) != b:
            results["unit"] = names[i]
            break

    def lift_left(t: Tensor) -> dict[tuple[int, int, int], Cyclotomic]:
        out: dict[tuple[int, int, int], Cyclotomic] = {}
        for (a, b), c in t.items():
            _acc(out, {(x, y, b): v for (x, y), v in H._coproduct[a].items()}, c)
        return _clean(out)

    def lift_right(t: Tensor) -> dict[tuple[int, int, int], Cyclotomic]:
        out: dict[tuple[int, int, int], Cyclotomic] = {}
        for (a, b), c in t.items():
            _acc(out, {(a, x, y): v for (x, y), v in H._coproduct[b].items()}, c)
        return _clean(out)

    for i in range(n):
        delta = H._coproduct[i]
        b = H.algebra.basis_vector(i)
        if results["coassociativity"] is None and lift_left(delta) != lift_right(delta):
            results["coassociativity"] = names[i]
        if results["counit"] is None:
            left: KVector = {}
            right: KVector = {}
            for (x, y), c in delta.items():
                kadd(left, {y: H.counit({x: c})}, 1)
                kadd(right, {x: H.counit({y: c})}, 1)
            left = _clean(left)
            right = _clean(right)
            if left != b or right != b:
                results["counit"] = names[i]
        if results["antipode"] is None:
            eps = H.counit(b)
            target = {k: v * eps for k, v in one.items()} if eps else {}
            left = {}
            right = {}
            for (x, y), c in delta.items():
                kadd(left, H.mul(H._antipode[x], {y: c}), 1)
                kadd(right, H.mul({x: c}, H._antipode[y]), 1)
            if _clean(left) != target or _clean(right) != target:
                results["antipode"] = names[i]
    for i in range(n):
        for j in range(n):
            prod = H.mul(H.algebra.basis_vector(i), H.algebra.basis_vector(j))
            if results["coproduct-multiplicative"] is None:
                if H.coproduct(prod) != H.tensor_mul(H._coproduct[i], H._coproduct[j]):
                    results["coproduct-multiplicative"] = f"{names[i]}, {names[j]}"
            if results["counit-multiplicative"] is None:
                bi, bj = H.algebra.basis_vector(i), H.algebra.basis_vector(j)
                if H.counit(prod) != H.counit(bi) * H.counit(bj):
                    results["counit-multiplicative"] = f"{names[i]}, {names[j]}"
    report = HopfAxiomReport(H.name, results)
    logger.debug("%s: hopf axioms %s", H.name, "pass" if report.passed else report.failures())
    return report


# -- smash products --------------------------------------------------------------

Action = Callable[[Element, int], KVector]


def smash_product(base: FinDimAlgebra, group: FiniteGroup, action: Action, name: str | None = None) -> FinDimAlgebra:
    """R # kC on R (x) kC with (u # g)(v # h) = u (g.v) # gh.

    ``action(g, i)`` is g acting on the i-th basis element of ``base``; it is
    checked to make ``base`` a kC-module algebra first.
    """
    els = group.elements
    n = base.dim
    acted = {(g, i): action(g, i) for g in els for i in range(n)}

    def act(g: Element, v: KVector) -> KVector:
        out: KVector = {}
        for i, c in v.items():
            kadd(out, acted[(g, i)], c)
        return out

    for i in range(n):
        if act(group.identity, base.basis_vector(i)) != base.basis_vector(i):
            raise ModuleAlgebraError(f"identity does not act trivially on {base.names[i]}", (group.identity, i))
    for g in els:
        for h in els:
            for i in range(n):
                if act(group.mul(g, h), base.basis_vector(i)) != act(g, acted[(h, i)]):
                    raise ModuleAlgebraError(
                        f"(gh).v != g.(h.v) for g={group.label(g)}, h={group.label(h)}, v={base.names[i]}", (g, h, i)
                    )
    for g in els:
        for i in range(n):
            for j in range(n):
                lhs = act(g, base.mul(base.basis_vector(i), base.basis_vector(j)))
                if lhs != base.mul(acted[(g, i)], acted[(g, j)]):
                    raise ModuleAlgebraError(
                        f"g.(uv) != (g.u)(g.v) for g={group.label(g)}, u={base.names[i]}, v={base.names[j]}", (g, i, j)
                    )
        if base.unit is not None and act(g, base.unit) != base.unit:
            raise ModuleAlgebraError(f"g.1 != 1 for g={group.label(g)}", (g,))
    m = len(els)
    gpos = {g: k for k, g in enumerate(els)}
    names = [f"{base.names[i]}#{group.label(g)}" for i in range(n) for g in els]
    products: dict[tuple[int, int], dict[int, Cyclotomic]] = {}
    for i in range(n):
        bi = base.basis_vector(i)
        for gk, g in enumerate(els):
            for j in range(n):
                uv = base.mul(bi, acted[(g, j)])
                if not uv:
                    continue
                for hk, h in enumerate(els):
                    gh = gpos[group.mul(g, h)]
                    products[(i * m + gk, j * m + hk)] = {k * m + gh: c for k, c in uv.items()}
    unit = None
    if base.unit is not None:
        unit = {k * m + gpos[group.identity]: c for k, c in base.unit.items()}
    return FinDimAlgebra(
        names, products, conductor=base.conductor, unit=unit, name=name or f"{base.name}#k{group.name}"
    )


def quantum_base(params: HopfParams) -> FinDimAlgebra:
    """k(D, rho): the skew generators alone, with X_i^{n_i} = 0 (requires a = b = 0)."""
    if not params.is_plain:
        raise FormulaNotApplicableError(f"{params.name}: the quantum base needs a = 0 and b = 0")
    rw = _Rewriter(params)
    trivial = AbelianGroup(())
    exps = list(product(*(range(n) for n in params.n)))
    pos = {p: i for i, p in enumerate(exps)}
    products: dict[tuple[int, int], dict[int, Cyclotomic]] = {}
    for i, p in enumerate(exps):
        for j, q in enumerate(exps):
            nf = rw.normal_form(_word(p) + _word(q))
            if nf:
                products[(i, j)] = {pos[r]: c for (r, _), c in nf.items()}
    names = [monomial_name(trivial, p, ()) for p in exps]
    return FinDimAlgebra(names, products, conductor=rw.conductor, unit={pos[exps[0]]: 1}, name=f"{params.name}-base")


def grading_action(params: HopfParams) -> Action:
    """h . X^p = prod_i c*_i(h^-1)^{p_i} X^p."""
    exps = list(product(*(range(n) for n in params.n)))
    G = params.group

    def action(h: Element, i: int) -> KVector:
        coeff = Cyclotomic(1, params.conductor)
        hinv = G.inv(h)
        for j, e in enumerate(exps[i]):
            coeff = coeff * params.cstar[j](hinv) ** e
        return {i: coeff}

    return action


def verify_smash_iso(H: HopfAlgebra) -> bool:
    """Check X^p # g -> X^p g is a bijective algebra map on all basis pairs."""
    P = H.params
    if not P.is_plain:
        raise FormulaNotApplicableError(f"{H.name}: the smash decomposition needs a = 0 and b = 0")
    base = quantum_base(P)
    S = smash_product(base, P.group, grading_action(P))
    exps = list(product(*(range(n) for n in P.n)))
    G = P.group
    phi = [H.index(p, g) for p in exps for g in G.elements]
    if S.dim != H.dim or sorted(phi) != list(range(H.dim)):
        return False
    for i in range(S.dim):
        for j in range(S.dim):
            lhs = {phi[k]: c for k, c in S.mul(S.basis_vector(i), S.basis_vector(j)).items()}
            rhs = H.mul(H.algebra.basis_vector(phi[i]), H.algebra.basis_vector(phi[j]))
            if lhs != rhs:
                logger.debug("%s: smash map fails on (%s, %s)", H.name, S.names[i], S.names[j])
                return False
    return True


# -- radical ---------------------------------------------------------------------


@dataclass(frozen=True)
class HopfRadicalCheck:
    predicted: Subspace
    oracle: Subspace | None
    equal: bool | None
    baer_equal: bool | None

    @property
    def verified(self) -> bool:
        return self.oracle is not None


def radical_check(H: HopfAlgebra, max_dim: int = DEFAULT_MAX_DIM) -> HopfRadicalCheck:
    """Predicted radical span{X^p g : p != 0} against the trace oracle."""
    if not H.params.is_plain:
        raise FormulaNotApplicableError(f"{H.name}: the radical formula needs a = 0 and b = 0")
    predicted = H.algebra.coordinate_span(i for i, (p, _) in enumerate(H.basis) if any(p))
    if H.dim > max_dim:
        logger.info("%s: dimension %d over oracle bound %d, predicted only", H.name, H.dim, max_dim)
        return HopfRadicalCheck(predicted, None, None, None)
    oracle = jacobson_oracle(H.algebra)
    equal = oracle == predicted
    baer = equal and largest_nilpotent_check(H.algebra, predicted).nilpotent
    return HopfRadicalCheck(predicted, oracle, equal, baer)


# -- representations -------------------------------------------------------------


@dataclass(frozen=True)
class RepresentationCheck:
    violations: tuple[str, ...]
    action: Mapping[int, np.ndarray] | None = None

    @property
    def ok(self) -> bool:
        return not self.violations


def _matrix(rows, conductor: int) -> np.ndarray:
    arr = np.array(rows, dtype=object)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    return np.vectorize(lambda x: Cyclotomic.coerce(x, conductor), otypes=[object])(arr)


def _identity(d: int, conductor: int) -> np.ndarray:
    out = np.empty((d, d), dtype=object)
    for r in range(d):
        for c in range(d):
            out[r, c] = Cyclotomic(1 if r == c else 0, conductor)
    return out


def _same(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def representation_to_module(H: HopfAlgebra, group_images: Mapping[Element, object], arrows: Sequence[object]) -> RepresentationCheck:
    """Turn (V, rho, f_1..f_t) into an H-module, or report the broken relations.

    ``group_images`` needs matrices for a generating set of the group; the
    rest of rho is generated and checked to be a homomorphism.
    """
    P, G = H.params, H.params.group
    N = H.conductor
    if len(arrows) != P.t:
        return RepresentationCheck((f"expected {P.t} arrow maps, got {len(arrows)}",))
    images = {g: _matrix(m, N) for g, m in group_images.items()}
    f = [_matrix(m, N) for m in arrows]
    dims = {m.shape[0] for m in list(images.values()) + f}
    if len(dims) > 1:
        return RepresentationCheck((f"matrices of different sizes {sorted(dims)}",))
    d = dims.pop() if dims else 0
    eye = _identity(d, N)
    rho: dict[Element, np.ndarray] = {G.identity: eye}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s, ms in images.items():
                gs = G.mul(g, s)
                if gs not in rho:
                    rho[gs] = rho[g] @ ms
                    nxt.append(gs)
        frontier = nxt
    violations: list[str] = []
    if len(rho) != G.order:
        violations.append(f"group images generate only {len(rho)} of {G.order} elements")
        return RepresentationCheck(tuple(violations))
    for s, ms in images.items():
        if not _same(rho[s], ms):
            violations.append(f"rho({G.label(s)}) is inconsistent with the group law")
    for g in G.elements:
        for h in G.elements:
            if not _same(rho[g] @ rho[h], rho[G.mul(g, h)]):
                violations.append(f"rho({G.label(g)}) rho({G.label(h)}) != rho({G.label(G.mul(g, h))})")
                break
    for i in range(P.t):
        for h in G.elements:
            if not _same(f[i] @ rho[h], rho[h] @ f[i] * P.cstar[i](h)):
                violations.append(f"f{i + 1} {G.label(h)} != c*_{i + 1}({G.label(h)}) {G.label(h)} f{i + 1}")
        power = eye
        for _ in range(P.n[i]):
            power = power @ f[i]
        lifted = (rho[G.power(P.c[i], P.n[i])] - eye) * P.a[i]
        if not _same(power, lifted):
            violations.append(f"f{i + 1}^{P.n[i]} != a_{i + 1}(c_{i + 1}^{P.n[i]} - 1)")
        for k in range(i + 1, P.t):
            q = P.cstar[k](P.c[i])
            rhs = f[i] @ f[k] * q + (rho[G.mul(P.c[i], P.c[k])] - eye) * P.b_of(i, k)
            if not _same(f[k] @ f[i], rhs):
                violations.append(f"f{k + 1} f{i + 1} != c*_{k + 1}(c_{i + 1}) f{i + 1} f{k + 1} + b-term")
    if violations:
        return RepresentationCheck(tuple(violations))
    action: dict[int, np.ndarray] = {}
    for idx, (p, g) in enumerate(H.basis):
        m = eye
        for j, e in enumerate(p):
            for _ in range(e):
                m = m @ f[j]
        action[idx] = m @ rho[g]

    def image(v: KVector) -> np.ndarray:
        out = _identity(d, N) * 0
        for k, c in v.items():
            out = out + action[k] * c
        return out

    for i in range(H.dim):
        for j in range(H.dim):
            prod = H.mul(H.algebra.basis_vector(i), H.algebra.basis_vector(j))
            if not _same(image(prod), action[i] @ action[j]):
                violations.append(f"module axiom fails on ({H.names[i]}, {H.names[j]})")
                return RepresentationCheck(tuple(violations))
    return RepresentationCheck((), action)


# -- classification families -------------------------------------------------------


def _cyclic(p: int, e: int = 1) -> AbelianGroup:
    return AbelianGroup([p**e])


def _default_nonabelian(p: int, central_order: int) -> tuple[CayleyGroup, str, Character]:
    if p != 2:
        raise ParameterConstraintError(
            f"no built-in nonabelian group for p={p}; pass group=, c= and cstar= explicitly"
        )
    G = CayleyGroup.from_permutation_group(
        DirectProduct(DihedralGroup(4), CyclicGroup(central_order)), name=f"D4xZ{central_order}"
    )
    assert G.permutations is not None
    # the cyclic factor acts on points 4 .. 4 + central_order - 1
    shift = {lab: (perm.array_form[4] - 4) % central_order for lab, perm in G.permutations.items()}
    c = [lab for lab, perm in G.permutations.items() if shift[lab] == 1 and perm.array_form[:4] == [0, 1, 2, 3]][0]
    chi = Character.from_values(G, {lab: (-1) ** shift[lab] for lab in G.elements})
    return G, c, chi


def classify_instance(
    family: str,
    p: int,
    *,
    m: int = 1,
    i: int = 1,
    k: int = 1,
    group: FiniteGroup | None = None,
    c: Element | None = None,
    cstar: Character | None = None,
) -> HopfAlgebra:
    """Build one member of the prime-power classification.

    ``group``: the group algebra kZ_{p^m}. ``taft``: H_{p^2} with
    lambda = zeta_p^k. ``two-generator``: C = Z_p, c = (g, g^i),
    c* = (chi, chi^-i). ``linked``: C = Z_p, c = (g, g), c* = (chi, chi^-1),
    b_12 = 1. ``nonabelian`` and ``nonabelian-lifted``: t = 1, n = p, c
    central, with a = 0 and a = 1 respectively; the default group at p = 2
    is D4 x Z2 (resp. D4 x Z4) with c generating the cyclic factor.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    if not isprime(p):
        raise ParameterConstraintError(f"p = {p} is not prime")
    if family == "group":
        if m < 1:
            raise ParameterConstraintError("m must be positive")
        params = HopfParams(_cyclic(p, m), (), (), (), (), name=f"kZ{p**m}")
    elif family == "taft":
        if not 1 <= k <= p - 1:
            raise ParameterConstraintError(f"need 1 <= k <= p-1, got k={k}")
        C = _cyclic(p)
        params = HopfParams(C, (p,), ((1,),), (Character.from_exponents(C, [k]),), (0,), name=f"H{p * p}")
    elif family in ("two-generator", "linked"):
        C = _cyclic(p)
        chi = Character.from_exponents(C, [1])
        if family == "two-generator":
            if not 1 <= i <= p - 1:
                raise ParameterConstraintError(f"need 1 <= i <= p-1, got i={i}")
            params = HopfParams(C, (p, p), ((1,), (i % p,)), (chi, chi ** (-i)), (0, 0), name=f"H{p**3}-two-{i}")
        else:
            params = HopfParams(C, (p, p), ((1,), (1,)), (chi, chi.inverse()), (0, 0), name=f"H{p**3}-linked")
            params = params.with_b(0, 1, 1)
            params = params.with_b(1, 0, -params.cstar[1](params.c[0]))
    else:
        lifted = family == "nonabelian-lifted"
        if group is None:
            group, c, cstar = _default_nonabelian(p, 4 if lifted else 2)
        if c is None or cstar is None:
            raise ParameterConstraintError("a supplied group needs both c= and cstar=")
        params = HopfParams(group, (p,), (c,), (cstar,), (1 if lifted else 0,), name=f"H({group.name})")
        if lifted and group.power(c, p) == group.identity:
            raise ParameterConstraintError("the lifted family needs c^p != 1")
    H = HopfAlgebra(params)
    d, e = H.dim, 0
    while d % p == 0:
        d //= p
        e += 1
    if d != 1:
        raise ParameterConstraintError(f"{H.name}: dimension {H.dim} is not a power of {p}")
    logger.info("%s: family %s, dimension %d = %d^%d", H.name, family, H.dim, p, e)
    return H


# -- A_t truncations -------------------------------------------------------------


def truncated_a_t(params: HopfParams, degree: int) -> tuple[FinDimAlgebra, list[Monomial]]:
    """A_t(C, c, c*) modulo monomials of total degree above ``degree``."""
    if not params.is_plain:
        raise FormulaNotApplicableError(f"{params.name}: truncations are built for a = 0 and b = 0")
    rw = _Rewriter(params, powers=False, cap=degree)
    exps = [e for e in product(range(degree + 1), repeat=params.t) if sum(e) <= degree]
    exps.sort(key=lambda e: (sum(e), e))
    return _materialize(rw, exps, f"{params.name}-A{params.t}<={degree}")


@dataclass(frozen=True)
class EvidenceRecord:
    element: str
    min_degree: int
    witness: str | None  # some basis b with x b x != 0


@dataclass(frozen=True)
class TruncationEvidence:
    degree: int
    seed: int
    records: tuple[EvidenceRecord, ...]

    @property
    def ok(self) -> bool:
        return all(r.witness is not None for r in self.records)


def truncation_evidence(
    params: HopfParams, degree: int = 6, samples: int = 20, seed: int = 0, support_degree: int = 2
) -> TruncationEvidence:
    """Sampled evidence that A_t has no nonzero nilpotent ideals.

    For each random x with support in degree <= ``support_degree`` look for a
    basis element b with x b x != 0 inside the degree-capped truncation, so
    the ideal generated by x is not square-zero.
    """
    if 2 * support_degree > degree:
        raise ValueError("degree must be at least twice the support degree")
    alg, basis = truncated_a_t(params, degree)
    low = [i for i, (p, _) in enumerate(basis) if sum(p) <= support_degree]
    rng = random.Random(seed)
    records = []
    for _ in range(samples):
        x: KVector = {}
        while not x:
            for idx in rng.sample(low, min(len(low), rng.randint(1, 3))):
                coeff = rng.randint(-3, 3)
                if coeff:
                    kadd(x, {idx: Cyclotomic(coeff, alg.conductor)}, 1)
        dmin = min(sum(basis[i][0]) for i in x)
        witness = None
        for j, (q, _) in enumerate(basis):
            if sum(q) > degree - 2 * dmin:
                break
            if alg.mul(alg.mul(x, alg.basis_vector(j)), x):
                witness = alg.names[j]
                break
        records.append(EvidenceRecord(alg.literal(x), dmin, witness))
    ev = TruncationEvidence(degree, seed, tuple(records))
    logger.debug("%s: truncation evidence %d/%d", params.name, sum(r.witness is not None for r in records), samples)
    return ev


# -- negative controls -------------------------------------------------------------


def corrupt(H: HopfAlgebra, kind: str) -> HopfAlgebra | HopfParams:
    """A deliberately broken copy of H; ``parameter-xi`` returns params instead."""
    P, G = H.params, H.params.group
    if kind not in CORRUPTIONS:
        raise ValueError(f"unknown corruption {kind!r}; expected one of {', '.join(CORRUPTIONS)}")
    if kind == "antipode-sign":
        if P.t < 1:
            raise ValueError(f"{kind} needs a skew generator")
        return HopfAlgebra(P, check=False, antipode_sign=-H.antipode_sign, name=f"{H.name}~{kind}")
    if kind == "group-commutation":
        if P.t < 1 or G.order < 2:
            raise ValueError(f"{kind} needs a skew generator and a nontrivial group")
        g0 = G.elements[1]
        return HopfAlgebra(P, check=False, twist={(0, g0): P.cstar[0](g0) * 2}, name=f"{H.name}~{kind}")
    if P.t < 2:
        raise ValueError(f"{kind} needs two skew generators")
    if kind == "skew-commutation":
        return HopfAlgebra(P, check=False, skew={(1, 0): P.cstar[1](P.c[0]) * 2}, name=f"{H.name}~{kind}")
    return replace(P.with_b(1, 0, P.b_of(1, 0) + 1), name=f"{P.name}~{kind}")


# -- file format -------------------------------------------------------------------


def _split_vectors(rest: list[str]) -> list[list[str]]:
    text = " ".join(rest)
    return [chunk.split() for chunk in text.split(";")]


def parse_hopf(text: str, path: str | None = None, name: str = "H") -> HopfParams:
    """Parse a Hopf parameter file.

    Lines (``#`` comments allowed)::

        group Z2xZ4            | cayley d4z2.cayley
        t 2
        n 3 3
        c 1 ; 2                  exponent vectors (or element labels), one per generator
        cstar 1 ; 2              character exponents per cyclic factor
                                 (Cayley mode: values on every element in table order)
        a 0 0
        b 1 2 1                  b_12 = 1, 1-based indices, any number of lines
    """
    entries: dict[str, tuple[int, list[str]]] = {}
    b_lines: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *rest = line.split()
        if key == "b":
            b_lines.append((lineno, rest))
        elif key in ("group", "cayley", "t", "n", "c", "cstar", "a"):
            if key in entries:
                raise ParseError(f"duplicate {key!r} line", path=path, line=lineno)
            entries[key] = (lineno, rest)
        else:
            raise ParseError(f"unknown key {key!r}", path=path, line=lineno)

    def need(key: str) -> tuple[int, list[str]]:
        if key not in entries:
            raise ParseError(f"missing {key!r} line", path=path)
        return entries[key]

    if ("group" in entries) == ("cayley" in entries):
        raise ParseError("exactly one of 'group' or 'cayley' is required", path=path)
    if "group" in entries:
        lineno, rest = entries["group"]
        try:
            group: FiniteGroup = AbelianGroup.parse(rest[0] if rest else "")
        except ParseError as exc:
            raise ParseError(str(exc), path=path, line=lineno) from None
    else:
        lineno, rest = entries["cayley"]
        table = Path(rest[0]) if rest else Path()
        if path is not None and not table.is_absolute():
            table = Path(path).parent / table
        try:
            group = load_cayley(table)
        except OSError as exc:
            raise ParseError(f"cannot read Cayley table: {exc}", path=path, line=lineno) from None
    lineno, rest = need("t")
    try:
        t = int(rest[0])
    except (IndexError, ValueError):
        raise ParseError("t needs an integer", path=path, line=lineno) from None

    def ints(key: str) -> tuple[int, ...]:
        if t == 0 and key not in entries:
            return ()
        ln, vals = need(key)
        try:
            out = tuple(int(v) for v in vals)
        except ValueError:
            raise ParseError(f"{key} needs integers", path=path, line=ln) from None
        if len(out) != t:
            raise ParseError(f"{key} needs {t} entries, got {len(out)}", path=path, line=ln)
        return out

    n = ints("n")
    a = ints("a")
    c: list[Element] = []
    cstar: list[Character] = []
    if t:
        ln, rest = need("c")
        vecs = _split_vectors(rest)
        if len(vecs) != t:
            raise ParseError(f"c needs {t} entries separated by ';'", path=path, line=ln)
        for vec in vecs:
            try:
                if isinstance(group, AbelianGroup):
                    c.append(group.element([int(v) for v in vec]))
                else:
                    c.append(group.parse_element(vec[0]))
            except (ValueError, KeyError, IndexError) as exc:
                raise ParseError(f"bad grouplike {' '.join(vec)!r}: {exc}", path=path, line=ln) from None
        ln, rest = need("cstar")
        vecs = _split_vectors(rest)
        if len(vecs) != t:
            raise ParseError(f"cstar needs {t} entries separated by ';'", path=path, line=ln)
        for vec in vecs:
            try:
                if isinstance(group, AbelianGroup):
                    cstar.append(Character.from_exponents(group, [int(v) for v in vec]))
                else:
                    if len(vec) != group.order:
                        raise ValueError(f"expected {group.order} values")
                    cstar.append(Character.from_values(group, dict(zip(group.elements, map(parse_scalar, vec)))))
            except (ValueError, ParseError) as exc:
                raise ParseError(f"bad character {' '.join(vec)!r}: {exc}", path=path, line=ln) from None
    b: dict[tuple[int, int], Cyclotomic] = {}
    for ln, rest in b_lines:
        if len(rest) < 3:
            raise ParseError("b lines read 'b <i> <j> <scalar>'", path=path, line=ln)
        try:
            i, j = int(rest[0]) - 1, int(rest[1]) - 1
        except ValueError:
            raise ParseError("b indices must be integers", path=path, line=ln) from None
        b[(i, j)] = parse_scalar(" ".join(rest[2:]))
    return HopfParams(group, n, tuple(c), tuple(cstar), a, b, name=name)


def load_hopf(path: str | Path) -> HopfParams:
    p = Path(path)
    return parse_hopf(p.read_text(encoding="utf-8"), path=str(p), name=p.stem)
