"""Finite quivers and the connectivity data the radical formulas consume.

A :class:`Quiver` is a finite directed multigraph with named vertices and
arrows (loops and parallel arrows allowed). Vertex order is fixed at
construction and every partition is reported in that order.

File format (UTF-8, one declaration per line, ``#`` starts a comment)::

    vertex 1
    vertex 2
    arrow x12 1 2
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import networkx as nx

from .errors import ParseError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str

    @property
    def is_loop(self) -> bool:
        return self.source == self.target


@dataclass(frozen=True)
class CycleFacts:
    has_cycle: bool
    same_cycle: tuple[tuple[str, str], ...]

    def related(self, s: str, t: str) -> bool:
        return (s, t) in self.same_cycle or (t, s) in self.same_cycle


@dataclass(frozen=True)
class ConnectivityReport:
    vertices: tuple[str, ...]
    strong: tuple[tuple[str, ...], ...]
    weak: tuple[tuple[str, ...], ...]
    reach: frozenset[tuple[str, str]]
    # arrows of the condensation, i.e. reachability between distinct strong classes
    condensation_edges: int
    chain_count: int

    def reachable(self, i: str, j: str) -> bool:
        return i == j or (i, j) in self.reach

    def strong_class(self, v: str) -> tuple[str, ...]:
        for cls in self.strong:
            if v in cls:
                return cls
        raise KeyError(v)

    def reach_matrix(self) -> list[list[bool]]:
        return [[self.reachable(i, j) for j in self.vertices] for i in self.vertices]


class Quiver:
    """Finite directed multigraph D = (D_0, D_1)."""

    def __init__(self, vertices: Iterable[str], arrows: Iterable[Arrow | tuple[str, str, str]] = ()):
        verts = tuple(str(v) for v in vertices)
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertex names")
        known = set(verts)
        arrs: list[Arrow] = []
        seen: set[str] = set()
        for a in arrows:
            arrow = a if isinstance(a, Arrow) else Arrow(*(str(x) for x in a))
            if arrow.name in seen:
                raise ValueError(f"duplicate arrow name {arrow.name!r}")
            for end in (arrow.source, arrow.target):
                if end not in known:
                    raise ValueError(f"arrow {arrow.name!r} references unknown vertex {end!r}")
            seen.add(arrow.name)
            arrs.append(arrow)
        self.vertices = verts
        self.arrows = tuple(arrs)
        self.order = {v: i for i, v in enumerate(verts)}
        self._by_name = {a.name: a for a in arrs}

    def __repr__(self) -> str:
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.vertices == other.vertices and self.arrows == other.arrows

    def __hash__(self) -> int:
        return hash((self.vertices, self.arrows))

    def arrow(self, name: str) -> Arrow:
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f"unknown arrow {name!r}") from None

    def has_arrow(self, name: str) -> bool:
        return name in self._by_name

    def check_vertex(self, v: str) -> str:
        if v not in self.order:
            raise KeyError(f"unknown vertex {v!r}")
        return v

    def out_arrows(self, v: str) -> tuple[Arrow, ...]:
        return self._out.get(v, ())

    @cached_property
    def _out(self) -> dict[str, tuple[Arrow, ...]]:
        out: dict[str, list[Arrow]] = {}
        for a in self.arrows:
            out.setdefault(a.source, []).append(a)
        return {v: tuple(arrs) for v, arrs in out.items()}

    def arrows_between(self, s: str, t: str) -> tuple[Arrow, ...]:
        return tuple(a for a in self.arrows if a.source == s and a.target == t)

    def has_loop(self, v: str) -> bool:
        return any(a.is_loop and a.source == v for a in self.arrows)

    def isolated_vertices(self) -> tuple[str, ...]:
        """Vertices with no incident arrow at all (loops count as incident)."""
        touched = {a.source for a in self.arrows} | {a.target for a in self.arrows}
        return tuple(v for v in self.vertices if v not in touched)

    def is_acyclic(self) -> bool:
        return not cycle_facts(self).has_cycle

    def subquiver(self, vertices: Iterable[str]) -> "Quiver":
        keep = set(vertices)
        return Quiver(
            [v for v in self.vertices if v in keep],
            [a for a in self.arrows if a.source in keep and a.target in keep],
        )

    @cached_property
    def graph(self) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.vertices)
        for a in self.arrows:
            g.add_edge(a.source, a.target, key=a.name)
        return g

    def _sorted(self, groups: Iterable[Iterable[str]]) -> tuple[tuple[str, ...], ...]:
        parts = [tuple(sorted(g, key=self.order.__getitem__)) for g in groups]
        return tuple(sorted(parts, key=lambda p: [self.order[v] for v in p]))

    def connectivity(self) -> ConnectivityReport:
        return self._connectivity

    @cached_property
    def _connectivity(self) -> ConnectivityReport:
        g = nx.DiGraph(self.graph)
        strong = self._sorted(nx.strongly_connected_components(g))
        weak = self._sorted(nx.weakly_connected_components(g))
        reach = frozenset((v, w) for v in self.vertices for w in nx.descendants(g, v))
        between = self._condensation.number_of_edges()
        chains = self._chain_count()
        logger.debug("connectivity: %d strong, %d weak, %d maximal chains", len(strong), len(weak), chains)
        return ConnectivityReport(self.vertices, strong, weak, reach, between, chains)

    @cached_property
    def _condensation(self) -> nx.DiGraph:
        return nx.condensation(nx.DiGraph(self.graph))

    @cached_property
    def _hasse(self) -> nx.DiGraph:
        """Hasse diagram of the reachability order on strong classes."""
        return nx.transitive_reduction(self._condensation)

    @cached_property
    def _members(self) -> dict[int, set[str]]:
        return nx.get_node_attributes(self._condensation, "members")

    def _chain_count(self) -> int:
        hasse = self._hasse
        paths: dict[int, int] = {}
        for node in reversed(list(nx.topological_sort(hasse))):
            succ = list(hasse.successors(node))
            paths[node] = sum(paths[s] for s in succ) if succ else 1
        return sum(paths[n] for n in hasse if hasse.in_degree(n) == 0)

    def maximal_chains(self, limit: int | None = None) -> tuple[tuple[str, ...], ...] | None:
        """Unilateral components: unions of strong classes along maximal chains.

        Maximal chains of the reachability order are the source-to-sink paths
        of the Hasse diagram. Returns None when there are more than ``limit``.
        """
        if limit is not None and self.connectivity().chain_count > limit:
            return None
        return self._unilateral

    @cached_property
    def _unilateral(self) -> tuple[tuple[str, ...], ...]:
        hasse, members = self._hasse, self._members
        sinks = {n for n in hasse if hasse.out_degree(n) == 0}
        chains: list[set[str]] = []
        for src in sorted(n for n in hasse if hasse.in_degree(n) == 0):
            stack = [(src, [src])]
            while stack:
                node, path = stack.pop()
                if node in sinks:
                    chains.append(set().union(*(members[n] for n in path)))
                    continue
                for nxt in sorted(hasse.successors(node), reverse=True):
                    stack.append((nxt, path + [nxt]))
        return self._sorted(chains)

    def to_text(self) -> str:
        lines = [f"vertex {v}" for v in self.vertices]
        lines += [f"arrow {a.name} {a.source} {a.target}" for a in self.arrows]
        return "\n".join(lines) + "\n"


# -- connectivity operations ------------------------------------------------


def strong_components(q: Quiver) -> tuple[tuple[str, ...], ...]:
    return q.connectivity().strong


def weak_components(q: Quiver) -> tuple[tuple[str, ...], ...]:
    return q.connectivity().weak


def unilateral_components(q: Quiver) -> tuple[tuple[str, ...], ...]:
    return q.maximal_chains() or ()


def reachable(q: Quiver, i: str, j: str) -> bool:
    """True iff i == j or a directed path of length >= 1 runs from i to j."""
    q.check_vertex(i)
    q.check_vertex(j)
    return q.connectivity().reachable(i, j)


def regular_pairs(q: Quiver) -> tuple[tuple[str, str], ...]:
    """Pairs (s, t) with a path s -> t but none t -> s."""
    rep = q.connectivity()
    return tuple(
        (s, t)
        for s in q.vertices
        for t in q.vertices
        if s != t and rep.reachable(s, t) and not rep.reachable(t, s)
    )


def cycle_facts(q: Quiver) -> CycleFacts:
    rep = q.connectivity()
    loops = any(a.is_loop for a in q.arrows)
    pairs = tuple((cls[i], cls[j]) for cls in rep.strong for i in range(len(cls)) for j in range(i + 1, len(cls)))
    has_cycle = loops or any(len(cls) > 1 for cls in rep.strong)
    return CycleFacts(has_cycle, pairs)


# -- parsing -----------------------------------------------------------------


def parse_quiver(text: str, path: str | None = None) -> Quiver:
    vertices: list[str] = []
    arrows: list[Arrow] = []
    known: set[str] = set()
    names: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "quiver":
            continue
        if kind == "vertex" and len(parts) == 2:
            if parts[1] in known:
                raise ParseError(f"duplicate vertex {parts[1]!r}", path=path, line=lineno)
            vertices.append(parts[1])
            known.add(parts[1])
        elif kind == "arrow" and len(parts) == 4:
            name, src, dst = parts[1:]
            if name in names:
                raise ParseError(f"duplicate arrow {name!r}", path=path, line=lineno)
            for end in (src, dst):
                if end not in known:
                    raise ParseError(f"arrow {name!r} uses undeclared vertex {end!r}", path=path, line=lineno)
            names.add(name)
            arrows.append(Arrow(name, src, dst))
        else:
            raise ParseError(f"expected 'vertex <name>' or 'arrow <name> <src> <dst>', got {line!r}", path=path, line=lineno)
    return Quiver(vertices, arrows)


def load_quiver(path: str | Path) -> Quiver:
    p = Path(path)
    return parse_quiver(p.read_text(encoding="utf-8"), path=str(p))


@dataclass(frozen=True)
class EdgeListIngest:
    quiver: Quiver
    problems: tuple[tuple[int, str], ...]


def parse_edge_list(text: str) -> EdgeListIngest:
    """Read ``src dst [label]`` lines; every line is one arrow.

    Malformed lines are collected in ``problems`` and skipped.
    """
    vertices: list[str] = []
    known: set[str] = set()
    arrows: list[Arrow] = []
    names: set[str] = set()
    problems: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            problems.append((lineno, f"expected 'src dst [label]', got {line!r}"))
            continue
        src, dst = parts[0], parts[1]
        for v in (src, dst):
            if v not in known:
                known.add(v)
                vertices.append(v)
        label = parts[2] if len(parts) == 3 else f"a{len(arrows) + 1}"
        if label in names:
            base, suffix = label, len(arrows) + 1
            label = f"{base}_{suffix}"
            while label in names:
                suffix += 1
                label = f"{base}_{suffix}"
        names.add(label)
        arrows.append(Arrow(label, src, dst))
    return EdgeListIngest(Quiver(vertices, arrows), tuple(problems))
