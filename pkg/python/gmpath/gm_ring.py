"""Gamma_I-systems and generalized matrix algebras.

A :class:`GammaSystem` holds blocks A_ij with named bases and structure
constants for the products A_ij x A_jl -> A_il. :func:`assemble` flattens it
into one :class:`~gmpath.findim.FinDimAlgebra`; block coordinates stay
contiguous, so block projections are coordinate restrictions.

System file::

    gmring upper
    index 1 2
    block 1 1 dim=1 basis=a
    block 1 2 dim=1 basis=x
    block 2 2 dim=1 basis=b
    mu 1 1 1 : a a -> a
    mu 1 1 2 : a x -> x
    mu 1 2 2 : x b -> x
    mu 2 2 2 : b b -> b

The single-block variant uses ``algebra <name>``, ``basis ...``,
``mu : a b -> combo`` and an optional ``unit <combo>``.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import FormulaNotApplicableError, NotAnIdealError, ParseError
from .findim import (
    FinDimAlgebra,
    KVector,
    VnRegularityCheck,
    annihilator,
    ideal_violation,
    kadd,
    product_space,
    radical,
    vn_regular_ideal_check,
)
from .linalg import Subspace, Vector, rank, solve
from .path_algebra import PathAlgebra
from .quiver import Quiver
from .scalar import Cyclotomic, Scalar, common_conductor, parse_combination

logger = logging.getLogger(__name__)

Block = tuple[str, str]
JACOBSON_FAMILY = ("baer", "levitzki", "jacobson")


class GammaSystem:
    """Finite Gamma_I-system given by structure constants.

    ``mu[(i, j, l)][(a, b)]`` maps c to the coefficient of basis c of A_il in
    the product of basis a of A_ij with basis b of A_jl.
    """

    def __init__(
        self,
        index: Sequence[str],
        blocks: Mapping[Block, Sequence[str]],
        mu: Mapping[tuple[str, str, str], Mapping[tuple[int, int], Mapping[int, Scalar]]],
        *,
        name: str = "system",
        unit: Mapping[str, Scalar] | None = None,
        verify: bool = True,
    ):
        self.index = tuple(str(i) for i in index)
        if len(set(self.index)) != len(self.index):
            raise ValueError(f"{name}: duplicate index labels")
        known = set(self.index)
        self.name = name
        self.blocks: dict[Block, tuple[str, ...]] = {}
        for (i, j), names in blocks.items():
            if i not in known or j not in known:
                raise ValueError(f"{name}: block ({i}, {j}) outside the index set")
            if names:
                self.blocks[(i, j)] = tuple(names)
        self.mu: dict[tuple[str, str, str], dict[tuple[int, int], dict[int, Scalar]]] = {}
        for (i, j, l), table in mu.items():
            for (a, b), combo in table.items():
                if a >= self.dim_of(i, j) or b >= self.dim_of(j, l):
                    raise ValueError(f"{name}: mu {i} {j} {l} refers to a missing basis element")
                if any(c >= self.dim_of(i, l) for c in combo):
                    raise ValueError(f"{name}: mu {i} {j} {l} lands outside block ({i}, {l})")
            self.mu[(i, j, l)] = {k: dict(v) for k, v in table.items()}
        self.conductor = common_conductor(
            c for table in self.mu.values() for combo in table.values() for c in combo.values()
        )
        self._unit = dict(unit) if unit else None
        offsets: dict[Block, int] = {}
        pos = 0
        for i in self.index:
            for j in self.index:
                offsets[(i, j)] = pos
                pos += self.dim_of(i, j)
        self.offsets = offsets
        self.total_dim = pos
        if verify:
            self.assembled.require_associative()

    def __repr__(self) -> str:
        return f"GammaSystem({self.name!r}, index={self.index}, dim={self.total_dim})"

    def dim_of(self, i: str, j: str) -> int:
        return len(self.blocks.get((i, j), ()))

    def coords(self, i: str, j: str) -> range:
        """K-coordinates of block A_ij inside the assembled algebra."""
        start = self.offsets[(i, j)]
        return range(start, start + self.dim_of(i, j))

    def qcoords(self, i: str, j: str) -> list[int]:
        d = self.assembled.degree
        return [k * d + a for k in self.coords(i, j) for a in range(d)]

    def global_names(self) -> list[str]:
        names = [nm for i in self.index for j in self.index for nm in self.blocks.get((i, j), ())]
        if len(set(names)) == len(names):
            return names
        return [f"{nm}@{i}{j}" for i in self.index for j in self.index for nm in self.blocks.get((i, j), ())]

    @cached_property
    def assembled(self) -> FinDimAlgebra:
        return assemble(self)

    def to_global(self, i: str, j: str, v: Mapping[int, Cyclotomic]) -> KVector:
        start = self.offsets[(i, j)]
        return {start + k: c for k, c in v.items()}

    def corner(self, indices: Iterable[str]) -> "GammaSystem":
        """Subsystem on the given indices (the corner algebra e A e)."""
        keep = [i for i in self.index if i in set(indices)]
        blocks = {(i, j): self.blocks[(i, j)] for i in keep for j in keep if (i, j) in self.blocks}
        mu = {k: v for k, v in self.mu.items() if all(x in keep for x in k)}
        return GammaSystem(keep, blocks, mu, name=f"{self.name}[{','.join(keep)}]", verify=False)


def assemble(system: GammaSystem) -> FinDimAlgebra:
    """The gm algebra: x y = {sum_k x_ik y_kj} on the flattened block basis."""
    products: dict[tuple[int, int], dict[int, Scalar]] = {}
    for (i, j, l), table in system.mu.items():
        oij, ojl, oil = system.offsets[(i, j)], system.offsets[(j, l)], system.offsets[(i, l)]
        for (a, b), combo in table.items():
            out = {oil + c: x for c, x in combo.items() if x}
            if out:
                products[(oij + a, ojl + b)] = out
    unit = None
    if system._unit:
        names = system.global_names()
        pos = {nm: k for k, nm in enumerate(names)}
        unit = {pos[nm]: c for nm, c in system._unit.items()}
    alg = FinDimAlgebra(system.global_names(), products, conductor=system.conductor, unit=unit, name=system.name)
    logger.debug("%s: assembled algebra of dimension %d", system.name, alg.dim)
    return alg


# -- gm units -----------------------------------------------------------------


@dataclass(frozen=True)
class GmUnit:
    """e_ii in A_ii for each index, in global coordinates."""

    idempotents: dict[str, KVector]

    def total(self) -> KVector:
        out: KVector = {}
        for v in self.idempotents.values():
            kadd(out, v)
        return out


def find_gm_unit(system: GammaSystem) -> GmUnit | None:
    """Solve e_ii x = x = x e_jj for every basis x, or None when impossible."""
    if system.total_dim == 0 or any(system.dim_of(i, i) == 0 for i in system.index):
        return None
    alg = system.assembled
    r = alg.rational
    unknown = [q for i in system.index for q in system.qcoords(i, i)]
    rows: dict[tuple[int, int, int], dict[int, Fraction]] = {}
    rhs: dict[tuple[int, int, int], Fraction] = {}
    for j in range(r.dim):
        bj = r.basis(j)
        rhs[(j, 0, j)] = rhs[(j, 1, j)] = Fraction(1)
        for col, p in enumerate(unknown):
            bp = r.basis(p)
            for side, prod in ((0, r.mul(bp, bj)), (1, r.mul(bj, bp))):
                for k, x in prod.items():
                    rows.setdefault((j, side, k), {})[col] = x
        rows.setdefault((j, 0, j), {})
        rows.setdefault((j, 1, j), {})
    keys = sorted(rows)
    where = {key: n for n, key in enumerate(keys)}
    sol = solve([rows[k] for k in keys], len(unknown), {where[k]: v for k, v in rhs.items()})
    if sol is None:
        return None
    total = alg.from_q({unknown[c]: x for c, x in sol.items()})
    parts = {i: {k: c for k, c in total.items() if k in system.coords(i, i)} for i in system.index}
    return GmUnit(parts)


# -- gm non-zero divisors -----------------------------------------------------


@dataclass(frozen=True)
class DivisorVerdict:
    status: str  # found | none_possible | unknown
    element: KVector | None = field(default=None, compare=False)
    reason: str = ""
    tried: int = 0

    @property
    def found(self) -> bool:
        return self.status == "found"


def _map_rank(system: GammaSystem, sources: list[int], d: Vector, left: bool) -> int:
    r = system.assembled.rational
    images = [r.mul(r.basis(p), d) if left else r.mul(d, r.basis(p)) for p in sources]
    # rank of the image list equals rank of the linear map on the block
    return rank(images, r.dim)


def _certifies(system: GammaSystem, d: KVector, s: str, t: str) -> bool:
    """x -> x d injective on every A_is and y -> d y injective on every A_tj."""
    dq = system.assembled.to_q(d)
    if not dq:
        return False
    for i in system.index:
        src = system.qcoords(i, s)
        if src and _map_rank(system, src, dq, left=True) != len(src):
            return False
    for j in system.index:
        src = system.qcoords(t, j)
        if src and _map_rank(system, src, dq, left=False) != len(src):
            return False
    return True


def _obstruction(system: GammaSystem, s: str, t: str) -> str | None:
    if system.dim_of(s, t) == 0:
        return f"A_{s}{t} = 0"
    for i in system.index:
        if system.dim_of(i, s) > system.dim_of(i, t):
            return f"dim A_{i}{s} > dim A_{i}{t}: x -> x d cannot be injective"
    for j in system.index:
        if system.dim_of(t, j) > system.dim_of(s, j):
            return f"dim A_{t}{j} > dim A_{s}{j}: y -> d y cannot be injective"
    alg = system.assembled
    block = alg.coordinate_span(system.coords(s, t))
    for i in system.index:
        if system.dim_of(i, s) and product_space(alg, alg.coordinate_span(system.coords(i, s)), block).is_zero():
            return f"A_{i}{s} A_{s}{t} = 0"
    for j in system.index:
        if system.dim_of(t, j) and product_space(alg, block, alg.coordinate_span(system.coords(t, j))).is_zero():
            return f"A_{s}{t} A_{t}{j} = 0"
    return None


def divisor_at(
    system: GammaSystem, s: str, t: str, budget: int = 64, seed: int = 0, unit: GmUnit | None = None
) -> DivisorVerdict:
    reason = _obstruction(system, s, t)
    if reason is not None:
        return DivisorVerdict("none_possible", None, reason)
    one = Cyclotomic(1, system.conductor)
    coords = list(system.coords(s, t))
    candidates: list[KVector] = []
    if unit is not None and s == t and unit.idempotents.get(s):
        candidates.append(unit.idempotents[s])
    candidates += [{k: one} for k in coords]
    candidates.append({k: one for k in coords})
    rng = random.Random(seed)
    for _ in range(budget):
        cand = {k: Cyclotomic(rng.randint(-2, 2), system.conductor) for k in coords}
        cand = {k: c for k, c in cand.items() if c}
        if cand:
            candidates.append(cand)
    for tried, d in enumerate(candidates, start=1):
        if _certifies(system, d, s, t):
            return DivisorVerdict("found", d, "injective multiplication certified by rank", tried)
    return DivisorVerdict("unknown", None, f"no certificate among {len(candidates)} candidates", len(candidates))


def gm_nonzero_divisor(
    system: GammaSystem, side: str = "left", budget: int = 64, seed: int = 0
) -> dict[Block, DivisorVerdict]:
    """Per-(s, t) search for a gm non-zero divisor d_st.

    Left and right divisors are defined by the same pair of injectivity
    conditions, so ``side`` only labels the result.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    unit = find_gm_unit(system)
    return {
        (s, t): divisor_at(system, s, t, budget=budget, seed=seed, unit=unit)
        for s in system.index
        for t in system.index
    }


def has_gm_nonzero_divisors(system: GammaSystem, budget: int = 64, seed: int = 0) -> bool:
    return all(v.found for v in gm_nonzero_divisor(system, "left", budget, seed).values())


# -- projections and radicals -------------------------------------------------


def project(system: GammaSystem, sub: Subspace, s: str, t: str) -> Subspace:
    """{x in A_st : some y in sub has y_st = x}, in block coordinates."""
    return sub.restrict(system.qcoords(s, t))


def embed(system: GammaSystem, sub: Subspace, s: str, t: str) -> Subspace:
    return sub.embed(system.qcoords(s, t), system.assembled.rational.dim)


def reassemble(system: GammaSystem, sub: Subspace) -> Subspace:
    """Sum of the embedded block projections of ``sub``."""
    out = system.assembled.zero_subspace()
    for s in system.index:
        for t in system.index:
            if system.dim_of(s, t):
                out = out + embed(system, project(system, sub, s, t), s, t)
    return out


def block_degree(system: GammaSystem, s: str, t: str, modulus: int | None = None) -> int:
    """Degree t - s of block A_st for the grading by Z/modulus on integer index labels."""
    n = modulus or len(system.index)
    try:
        return (int(t) - int(s)) % n
    except ValueError:
        raise ValueError(f"{system.name}: index labels {s!r}, {t!r} are not integers") from None


def degree_span(system: GammaSystem, degree: int, modulus: int | None = None) -> Subspace:
    """Homogeneous component of the given degree: the sum of the blocks of that degree."""
    a = system.assembled
    out = a.zero_subspace()
    for s, t in system.blocks:
        if block_degree(system, s, t, modulus) == degree:
            out = out + a.coordinate_span(system.coords(s, t))
    return out


def homogeneous_parts(system: GammaSystem, sub: Subspace, modulus: int | None = None) -> dict[int, Subspace]:
    """Intersections of ``sub`` with each homogeneous component."""
    n = modulus or len(system.index)
    return {d: sub.intersection(degree_span(system, d, n)) for d in range(n)}


def is_graded(system: GammaSystem, sub: Subspace, modulus: int | None = None) -> bool:
    """Whether ``sub`` is spanned by homogeneous elements."""
    out = system.assembled.zero_subspace()
    for part in homogeneous_parts(system, sub, modulus).values():
        out = out + part
    return out == sub


@dataclass
class GmIdeal:
    system: GammaSystem
    kind: str
    blocks: dict[Block, Subspace]
    space: Subspace
    verified: bool = True
    check: VnRegularityCheck | None = None

    @property
    def dim(self) -> int:
        return self.space.dim

    def literals(self) -> dict[Block, list[str]]:
        alg = self.system.assembled
        return {
            blk: alg.literals(embed(self.system, sub, *blk))
            for blk, sub in self.blocks.items()
            if not sub.is_zero()
        }


def _corner_for(system: GammaSystem, s: str, t: str) -> GammaSystem:
    return system.corner([s] if s == t else [s, t])


def _corner_block(system: GammaSystem, corner: GammaSystem, sub: Subspace, s: str, t: str) -> Subspace:
    """Block (s, t) of a corner subspace, in block coordinates."""
    return sub.intersection(corner.assembled.coordinate_span(corner.coords(s, t))).restrict(corner.qcoords(s, t))


def block_radical(system: GammaSystem, s: str, t: str) -> Subspace:
    """Radical of A_st as an A_ts-ring: r(corner on {s, t}) meet A_st."""
    corner = _corner_for(system, s, t)
    return _corner_block(system, corner, radical(corner.assembled), s, t)


def corner_vn_radical(algebra: FinDimAlgebra) -> Subspace:
    """Von Neumann regular radical of a finite-dimensional algebra: T T with T = Ann(rad)."""
    t = annihilator(algebra, radical(algebra))
    return product_space(algebra, t, t)


def block_vn_radical(system: GammaSystem, s: str, t: str) -> Subspace:
    corner = _corner_for(system, s, t)
    return _corner_block(system, corner, corner_vn_radical(corner.assembled), s, t)


def block_vn_radicals(system: GammaSystem) -> dict[Block, Subspace]:
    return {
        (s, t): block_vn_radical(system, s, t)
        for s in system.index
        for t in system.index
        if system.dim_of(s, t)
    }


def gm_radical_formula(
    system: GammaSystem,
    kind: str = "jacobson",
    *,
    require_divisors: bool = True,
    samples: int = 200,
    seed: int = 0,
    budget: int = 64,
) -> GmIdeal:
    """Sum of the block radicals r(A_ij), checked to be an ideal of the assembled algebra."""
    alg = system.assembled
    if kind in JACOBSON_FAMILY:
        blocks = {
            (s, t): block_radical(system, s, t)
            for s in system.index
            for t in system.index
            if system.dim_of(s, t)
        }
    elif kind == "vn":
        if require_divisors and not has_gm_nonzero_divisors(system, budget=budget, seed=seed):
            raise FormulaNotApplicableError(
                f"{system.name}: no verified left and right gm non-zero divisors; "
                "the block formula for the von Neumann radical does not apply"
            )
        blocks = block_vn_radicals(system)
    else:
        raise ValueError(f"unknown radical kind {kind!r} for gm rings")
    space = alg.zero_subspace()
    for (s, t), sub in blocks.items():
        space = space + embed(system, sub, s, t)
    witness = ideal_violation(alg, space)
    if kind != "vn":
        if witness is not None:
            raise NotAnIdealError(f"{system.name}: sum of block radicals is not an ideal", witness)
        return GmIdeal(system, kind, blocks, space)
    check = vn_regular_ideal_check(alg, space, samples=samples, seed=seed)
    verified = witness is None and check.verified
    if not verified:
        reason = "not an ideal" if witness is not None else f"regularity check: {check.status}"
        raise FormulaNotApplicableError(f"{system.name}: sum of block von Neumann radicals fails ({reason})")
    logger.debug("%s: %s radical of dimension %d", system.name, kind, space.dim)
    return GmIdeal(system, kind, blocks, space, True, check)


# -- standard systems ---------------------------------------------------------


def _unit_name(r: int, c: int, n: int) -> str:
    return f"E{r}{c}" if n < 10 else f"E{r}_{c}"


def matrix_system(sizes: Sequence[int], pattern: str = "full", ring: FinDimAlgebra | None = None) -> GammaSystem:
    """A_ij = M_{n_i x n_j}(R) on the blocks allowed by ``pattern`` (full, upper, diagonal)."""
    if pattern not in ("full", "upper", "diagonal"):
        raise ValueError(f"unknown block pattern {pattern!r}")
    ring = ring or FinDimAlgebra.field()
    total = sum(sizes)
    index = [str(i + 1) for i in range(len(sizes))]
    start = [sum(sizes[:i]) for i in range(len(sizes))]
    allowed = lambda i, j: pattern == "full" or (pattern == "upper" and i <= j) or i == j  # noqa: E731

    def entries(i: int, j: int) -> list[tuple[int, int, int]]:
        return [
            (start[i] + r + 1, start[j] + c + 1, b)
            for r in range(sizes[i])
            for c in range(sizes[j])
            for b in range(ring.dim)
        ]

    def label(rr: int, cc: int, b: int) -> str:
        unit = _unit_name(rr, cc, total)
        return unit if ring.dim == 1 else f"{ring.names[b]}{unit}"

    blocks: dict[Block, list[str]] = {}
    layout: dict[tuple[int, int], dict[tuple[int, int, int], int]] = {}
    for i in range(len(sizes)):
        for j in range(len(sizes)):
            if allowed(i, j) and sizes[i] and sizes[j]:
                ents = entries(i, j)
                blocks[(index[i], index[j])] = [label(*e) for e in ents]
                layout[(i, j)] = {e: k for k, e in enumerate(ents)}
    mu: dict[tuple[str, str, str], dict[tuple[int, int], dict[int, Scalar]]] = {}
    for (i, j), left in layout.items():
        for (j2, l), right in layout.items():
            if j2 != j or (i, l) not in layout:
                continue
            target = layout[(i, l)]
            table: dict[tuple[int, int], dict[int, Scalar]] = {}
            for (r, c, b1), a in left.items():
                for (c2, s, b2), b in right.items():
                    if c != c2:
                        continue
                    prod = ring.mul(ring.basis_vector(b1), ring.basis_vector(b2))
                    combo = {target[(r, s, k)]: x for k, x in prod.items()}
                    if combo:
                        table[(a, b)] = combo
            if table:
                mu[(index[i], index[j], index[l])] = table
    suffix = "" if ring.dim == 1 else f" over {ring.name}"
    return GammaSystem(index, blocks, mu, name=f"{pattern} {tuple(sizes)}{suffix}")


def path_system(quiver: Quiver) -> GammaSystem:
    """Blocks A_ij = span of paths i -> j of an acyclic quiver."""
    pa = PathAlgebra(quiver)
    paths = pa.paths()
    blocks: dict[Block, list] = {}
    for p in paths:
        blocks.setdefault((p.source, p.target), []).append(p)
    pos = {p: k for blk in blocks.values() for k, p in enumerate(blk)}
    mu: dict[tuple[str, str, str], dict[tuple[int, int], dict[int, Scalar]]] = {}
    for p in paths:
        for q in paths:
            for r, c in pa.multiply_paths(p, q).items():
                mu.setdefault((p.source, p.target, q.target), {})[(pos[p], pos[q])] = {pos[r]: c}
    names = {blk: [pa.format_path(p) for p in ps] for blk, ps in blocks.items()}
    return GammaSystem(quiver.vertices, names, mu, name="kD")


# -- parsing ------------------------------------------------------------------


def _parse_block_args(parts: list[str], path: str | None, lineno: int) -> tuple[int | None, list[str]]:
    dim = None
    basis: list[str] = []
    for arg in parts:
        if arg.startswith("dim="):
            try:
                dim = int(arg[4:])
            except ValueError:
                raise ParseError(f"bad dimension {arg!r}", path=path, line=lineno) from None
        elif arg.startswith("basis="):
            basis = [b for b in arg[6:].split(",") if b]
        else:
            raise ParseError(f"unexpected block argument {arg!r}", path=path, line=lineno)
    return dim, basis


def _parse_product(
    rest: str, left: Sequence[str], right: Sequence[str], target: Sequence[str], path: str | None, lineno: int
) -> tuple[tuple[int, int], dict[int, Cyclotomic]]:
    if "->" not in rest:
        raise ParseError("expected '<a> <b> -> <combination>'", path=path, line=lineno)
    lhs, rhs = rest.split("->", 1)
    operands = lhs.split()
    if len(operands) != 2:
        raise ParseError(f"expected two basis names before '->', got {lhs.strip()!r}", path=path, line=lineno)
    try:
        a, b = left.index(operands[0]), right.index(operands[1])
    except ValueError:
        raise ParseError(f"unknown basis element in {lhs.strip()!r}", path=path, line=lineno) from None
    combo: dict[int, Cyclotomic] = {}
    try:
        terms = parse_combination(rhs)
    except ParseError as exc:
        raise ParseError(str(exc), path=path, line=lineno) from None
    for coeff, atom in terms:
        if atom not in target:
            raise ParseError(f"unknown basis element {atom!r} in product", path=path, line=lineno)
        k = target.index(atom)
        combo[k] = combo[k] + coeff if k in combo else coeff
    return (a, b), {k: c for k, c in combo.items() if c}


def parse_system(text: str, path: str | None = None) -> GammaSystem:
    """Parse a ``gmring`` file or its single-block ``algebra`` variant."""
    lines = [
        (n, raw.split("#", 1)[0].strip()) for n, raw in enumerate(text.splitlines(), start=1)
    ]
    lines = [(n, line) for n, line in lines if line]
    if not lines:
        raise ParseError("empty system file", path=path)
    head = lines[0][1].split(maxsplit=1)
    if head[0] == "algebra":
        return _parse_algebra(lines, path)
    if head[0] != "gmring":
        raise ParseError("expected 'gmring <name>' or 'algebra <name>' header", path=path, line=lines[0][0])
    name = head[1] if len(head) > 1 else "system"
    index: list[str] = []
    blocks: dict[Block, list[str]] = {}
    mu: dict[tuple[str, str, str], dict[tuple[int, int], dict[int, Cyclotomic]]] = {}
    for lineno, line in lines[1:]:
        parts = line.split()
        kind = parts[0]
        if kind == "index":
            index = parts[1:]
        elif kind == "block":
            if len(parts) < 3 or parts[1] not in index or parts[2] not in index:
                raise ParseError("expected 'block i j dim=<d> basis=<names>' with declared indices", path=path, line=lineno)
            dim, basis = _parse_block_args(parts[3:], path, lineno)
            if dim is not None and dim != len(basis):
                raise ParseError(f"dim={dim} but {len(basis)} basis names", path=path, line=lineno)
            blocks[(parts[1], parts[2])] = basis
        elif kind == "mu":
            head_part, _, rest = line.partition(":")
            ids = head_part.split()[1:]
            if len(ids) != 3 or not rest:
                raise ParseError("expected 'mu i j l : <a> <b> -> <combination>'", path=path, line=lineno)
            i, j, l = ids
            key, combo = _parse_product(
                rest, blocks.get((i, j), []), blocks.get((j, l), []), blocks.get((i, l), []), path, lineno
            )
            mu.setdefault((i, j, l), {})[key] = combo
        else:
            raise ParseError(f"unknown declaration {kind!r}", path=path, line=lineno)
    if not index:
        raise ParseError("missing 'index' declaration", path=path)
    return GammaSystem(index, blocks, mu, name=name)


def _parse_algebra(lines: list[tuple[int, str]], path: str | None) -> GammaSystem:
    head = lines[0][1].split(maxsplit=1)
    name = head[1] if len(head) > 1 else "algebra"
    basis: list[str] = []
    table: dict[tuple[int, int], dict[int, Cyclotomic]] = {}
    unit: dict[str, Scalar] | None = None
    for lineno, line in lines[1:]:
        kind, _, rest = line.partition(" ")
        if kind == "basis":
            basis = rest.split()
        elif kind == "mu":
            _, _, body = line.partition(":")
            key, combo = _parse_product(body, basis, basis, basis, path, lineno)
            table[key] = combo
        elif kind == "unit":
            unit = {}
            for coeff, atom in parse_combination(rest):
                if atom not in basis:
                    raise ParseError(f"unknown basis element {atom!r} in unit", path=path, line=lineno)
                unit[atom] = coeff
        else:
            raise ParseError(f"unknown declaration {kind!r}", path=path, line=lineno)
    return GammaSystem(["1"], {("1", "1"): basis}, {("1", "1", "1"): table}, name=name, unit=unit)


def load_system(path: str | Path) -> GammaSystem:
    p = Path(path)
    return parse_system(p.read_text(encoding="utf-8"), path=str(p))

