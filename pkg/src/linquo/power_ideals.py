"""Generators of edge-ideal powers with full factorization bookkeeping.

For an equigenerated ideal the distinct products of q edges are exactly the
minimal generators of the q-th power (equal degree 2q, so none divides
another).  Every size-q edge multiset is recorded under the generator it
multiplies out to, which makes factorization-divisibility queries (does some
factorization of w use edge e?) plain lookups.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Sequence

from .graphs import Graph
from .monomials import Monomial, from_vars

DEFAULT_CAP = 10**7


class CapExceeded(RuntimeError):
    """Raised when an enumeration would exceed the configured multiset cap."""


class EdgeIdeal:
    """Edge ideal of a graph with a fixed generator (= edge) sequence."""

    __slots__ = ("graph", "edges", "gens")

    def __init__(self, graph: Graph, edge_order: Sequence[tuple[int, int]] | None = None):
        if edge_order is None:
            edge_order = graph.edges
        else:
            edge_order = tuple(
                (u, v) if u < v else (v, u) for u, v in edge_order
            )
            if sorted(edge_order) != sorted(graph.edges):
                raise ValueError("edge_order must be a permutation of the graph's edges")
        self.graph = graph
        self.edges = tuple(edge_order)
        self.gens = tuple(from_vars(graph.n, e) for e in self.edges)

    @property
    def nvars(self) -> int:
        return self.graph.n

    @property
    def nedges(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"EdgeIdeal({self.graph!r})"


def edge_ideal(g: Graph) -> EdgeIdeal:
    """One squarefree quadratic generator per edge, in the graph's edge order."""
    return EdgeIdeal(g)


class PowerGenerators:
    """Minimal generators of I^q together with all edge-multiset factorizations."""

    __slots__ = ("ideal", "q", "gens", "factorizations", "index", "multiset_index")

    def __init__(self, ideal: EdgeIdeal, q: int, cap: int = DEFAULT_CAP):
        if q < 1:
            raise ValueError("power must be >= 1")
        s = ideal.nedges
        total = comb(s + q - 1, q) if s > 0 else 0
        if total > cap:
            raise CapExceeded(
                f"{total} edge multisets for q={q} over {s} edges exceeds cap {cap}"
            )
        gens: list[Monomial] = []
        factorizations: list[list[tuple[int, ...]]] = []
        index: dict[Monomial, int] = {}
        multiset_index: dict[tuple[int, ...], int] = {}
        edge_gens = ideal.gens
        nvars = ideal.nvars
        for multiset in combinations_with_replacement(range(s), q):
            exps = [0] * nvars
            for j in multiset:
                u, v = ideal.edges[j]
                exps[u] += 1
                exps[v] += 1
            m = Monomial(exps)
            at = index.get(m)
            if at is None:
                at = len(gens)
                index[m] = at
                gens.append(m)
                factorizations.append([])
            factorizations[at].append(multiset)
            multiset_index[multiset] = at
        self.ideal = ideal
        self.q = q
        self.gens = tuple(gens)
        self.factorizations = tuple(tuple(f) for f in factorizations)
        self.index = index
        self.multiset_index = multiset_index
        assert len(edge_gens) == s

    @property
    def count(self) -> int:
        return len(self.gens)

    def coincidences(self) -> list[tuple[Monomial, tuple[tuple[int, ...], ...]]]:
        """Generators with more than one factorization (merged multisets)."""
        return [
            (self.gens[i], self.factorizations[i])
            for i in range(self.count)
            if len(self.factorizations[i]) > 1
        ]

    def __repr__(self) -> str:
        return f"PowerGenerators(q={self.q}, count={self.count})"


def power_generators(ideal: EdgeIdeal, q: int, cap: int = DEFAULT_CAP) -> PowerGenerators:
    return PowerGenerators(ideal, q, cap)


def edge_factorizations(pg: PowerGenerators, gen_index: int) -> tuple[tuple[int, ...], ...]:
    return pg.factorizations[gen_index]


def has_edge_factor(pg: PowerGenerators, gen_index: int, edge_index: int) -> bool:
    """Factorization-divisibility: some stored factorization contains the edge."""
    return any(edge_index in f for f in pg.factorizations[gen_index])


def duplicate_ideal(gens: Iterable[Monomial], x: int) -> list[Monomial]:
    """Duplicate a squarefree equigenerated ideal by variable ``x``.

    The fresh variable y gets index nvars; the output lives over nvars + 1
    variables and consists of the original generators followed by m/x * y for
    every generator m divisible by x.  Without any x-divisible generator the
    ideal is returned unchanged (over the original ring).
    """
    gens = list(gens)
    if not gens:
        return []
    nvars = gens[0].nvars
    degs = {m.degree() for m in gens}
    if len(degs) != 1:
        raise ValueError("generators are not equigenerated")
    if any(not m.is_squarefree() for m in gens):
        raise ValueError("duplicate ideal requires squarefree generators")
    if all(m.deg_var(x) == 0 for m in gens):
        return gens
    out = [m.extend(nvars + 1) for m in gens]
    y = nvars
    for m in out[: len(gens)]:
        if m.deg_var(x) > 0:
            exps = list(m.exps)
            exps[x] -= 1
            exps[y] += 1
            out.append(Monomial(exps))
    return out


def expansion_new_generators(u: Monomial, x: int, y: int) -> list[Monomial]:
    """The deg_x(u) monomials u * y^k / x^k for k = 1..deg_x(u), in order."""
    d = u.deg_var(x)
    out = []
    exps = list(u.exps)
    for _ in range(d):
        exps[x] -= 1
        exps[y] += 1
        out.append(Monomial(exps))
    return out
