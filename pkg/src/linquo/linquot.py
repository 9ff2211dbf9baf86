"""Linear-quotients verification and order construction.

The verification criterion: an ordering u_1 > ... > u_r of equal-degree
monomials has linear quotients iff for every position t and every earlier i
with deg(u_i : u_t) > 1 there is an earlier j whose colon u_j : u_t is a
single variable dividing u_i : u_t.  Verification therefore precomputes, per
position t, the set of variables arising as degree-one colons against earlier
generators, then scans all earlier generators; O(r^2 * n) overall.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graphs import Graph, duplicate_vertex, expand_vertex, is_independent
from .monomials import Monomial
from .power_ideals import (
    DEFAULT_CAP,
    EdgeIdeal,
    PowerGenerators,
    expansion_new_generators,
    power_generators,
)


class NotGapfree(ValueError):
    """The expansion gate failed: the expanded graph would not be gapfree."""


class OrderingPreconditionError(ValueError):
    """A construction was handed an ordering that fails its precondition."""


@dataclass(frozen=True)
class GeneratorOrdering:
    """A total order on the generators of a power, as a permutation of indices."""

    base: PowerGenerators
    sequence: tuple[int, ...]
    provenance: str = "given"

    def __post_init__(self):
        r = self.base.count
        if sorted(self.sequence) != list(range(r)):
            raise ValueError("sequence must be a permutation of the generator indices")

    def __len__(self) -> int:
        return len(self.sequence)

    def monomials(self) -> list[Monomial]:
        gens = self.base.gens
        return [gens[i] for i in self.sequence]

    def multisets(self) -> list[tuple[int, ...]]:
        """One representative factorization per generator, in order."""
        facs = self.base.factorizations
        return [min(facs[i]) for i in self.sequence]


def ordering_from_multisets(
    pg: PowerGenerators,
    multisets: Iterable[Sequence[int]],
    provenance: str = "given",
) -> GeneratorOrdering:
    """Resolve a sequence of edge multisets against the enumerated generators.

    Each multiset must be a valid size-q factorization, and the sequence must
    hit every generator exactly once.
    """
    seq: list[int] = []
    for ms in multisets:
        key = tuple(sorted(int(j) for j in ms))
        if len(key) != pg.q:
            raise ValueError(f"multiset {key} does not have q={pg.q} edges")
        if key not in pg.multiset_index:
            raise ValueError(f"{key} is not a factorization of any generator")
        seq.append(pg.multiset_index[key])
    if sorted(seq) != list(range(pg.count)):
        raise ValueError("multisets do not enumerate each generator exactly once")
    return GeneratorOrdering(pg, tuple(seq), provenance)


def ordering_from_monomials(
    pg: PowerGenerators,
    monomials: Iterable[Monomial],
    provenance: str = "given",
) -> GeneratorOrdering:
    seq = []
    for m in monomials:
        if m not in pg.index:
            raise ValueError(f"{m} is not a generator")
        seq.append(pg.index[m])
    return GeneratorOrdering(pg, tuple(seq), provenance)


@dataclass(frozen=True)
class LqWitness:
    """First failing pair: position t fails against earlier position i."""

    t: int
    i: int
    colon: Monomial


@dataclass(frozen=True)
class LqReport:
    passed: bool
    witness: LqWitness | None
    per_index_variables: tuple[frozenset[int], ...]


def _exponent_matrix(monomials: Sequence[Monomial]) -> np.ndarray:
    return np.array([m.exps for m in monomials], dtype=np.int64)


def verify_linear_quotients(o: GeneratorOrdering) -> LqReport:
    """Check the ordering against the pairwise colon criterion.

    The witness, when present, is the first failing pair (lowest t, then
    lowest i); verification still finishes collecting the per-position
    variable sets.
    """
    mons = o.monomials()
    r = len(mons)
    if r <= 1:
        return LqReport(True, None, (frozenset(),) * r)
    E = _exponent_matrix(mons)
    per_index: list[frozenset[int]] = [frozenset()]
    witness: LqWitness | None = None
    for t in range(1, r):
        C = E[:t] - E[t]
        np.maximum(C, 0, out=C)
        degs = C.sum(axis=1)
        var_rows = np.nonzero(degs == 1)[0]
        vars_t = frozenset(int(C[j].argmax()) for j in var_rows)
        per_index.append(vars_t)
        if witness is not None:
            continue
        bad = degs > 1
        if bad.any():
            if vars_t:
                cols = sorted(vars_t)
                bad &= C[:, cols].max(axis=1) == 0
            failing = np.nonzero(bad)[0]
            if failing.size:
                i = int(failing[0])
                witness = LqWitness(t, i, Monomial(C[i]))
    return LqReport(witness is None, witness, tuple(per_index))


def colon_min_gens(o: GeneratorOrdering, t: int) -> list[Monomial]:
    """Minimal monomial generators of (u_1, ..., u_t) : u_{t+1}.

    ``t`` is the 0-based position; the colon against an empty prefix is the
    zero ideal, returned as an empty list.  Output is sorted for determinism.
    """
    mons = o.monomials()
    if not 0 <= t < len(mons):
        raise ValueError(f"position {t} out of range")
    colons = {mons[j].colon(mons[t]) for j in range(t)}
    minimal = [
        c
        for c in colons
        if not any(d != c and d.divides(c) for d in colons)
    ]
    return sorted(minimal, key=lambda m: m.exps)


@dataclass(frozen=True)
class SearchResult:
    status: str  # "found" | "none" | "unknown"
    ordering: GeneratorOrdering | None
    nodes: int
    backtracks: int

    @property
    def found(self) -> bool:
        return self.status == "found"


class _BudgetExhausted(Exception):
    pass


def find_lq_order(pg: PowerGenerators, budget: int = 10**6) -> SearchResult:
    """Backtracking search for a linear-quotients order.

    Prefixes are extended by any generator whose colon ideal against the
    prefix is variable-generated; candidates sharing the most support
    variables with the prefix are tried first.  Exhausting the tree proves no
    order exists; hitting the node budget reports unknown.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    r = pg.count
    if r == 0:
        return SearchResult("found", GeneratorOrdering(pg, (), "search"), 0, 0)
    E = _exponent_matrix(pg.gens)
    supports = [frozenset(m.support()) for m in pg.gens]
    prefix: list[int] = []
    in_prefix = [False] * r
    prefix_support: set[int] = set()
    nodes = 0
    backtracks = 0

    def can_extend(c: int) -> bool:
        C = E[prefix] - E[c]
        np.maximum(C, 0, out=C)
        degs = C.sum(axis=1)
        if degs.max(initial=0) <= 1:
            return True
        one = degs == 1
        if not one.any():
            return False
        cols = np.nonzero(C[one].max(axis=0) > 0)[0]
        bad = degs > 1
        return bool((C[np.ix_(bad, cols)].max(axis=1) > 0).all())

    def dfs() -> bool:
        nonlocal nodes, backtracks
        if len(prefix) == r:
            return True
        order = sorted(
            (c for c in range(r) if not in_prefix[c]),
            key=lambda c: (-len(supports[c] & prefix_support), c),
        )
        for c in order:
            if not can_extend(c):
                continue
            nodes += 1
            if nodes > budget:
                raise _BudgetExhausted
            prefix.append(c)
            in_prefix[c] = True
            added = supports[c] - prefix_support
            prefix_support.update(added)
            if dfs():
                return True
            prefix.pop()
            in_prefix[c] = False
            prefix_support.difference_update(
                v for v in added if not any(v in supports[p] for p in prefix)
            )
            backtracks += 1
        return False

    try:
        if dfs():
            ordering = GeneratorOrdering(pg, tuple(prefix), "search")
            return SearchResult("found", ordering, nodes, backtracks)
        return SearchResult("none", None, nodes, backtracks)
    except _BudgetExhausted:
        return SearchResult("unknown", None, nodes, backtracks)


def _require_verified(o: GeneratorOrdering, what: str) -> None:
    report = verify_linear_quotients(o)
    if not report.passed:
        w = report.witness
        raise OrderingPreconditionError(
            f"{what} requires a verified linear-quotients order; "
            f"fails at position {w.t} against {w.i} with colon {w.colon!r}"
        )


def duplication_order(
    o: GeneratorOrdering, x: int, cap: int = DEFAULT_CAP
) -> GeneratorOrdering:
    """Extend a verified order on I(G)^s to one on I(G^x)^s.

    Each generator u with deg_x(u) = d is followed immediately by the d
    substitutes u * y^k / x^k, k = 1..d.  The power of the duplicated ideal is
    recomputed from the duplicated graph, never transformed syntactically.
    """
    pg = o.base
    ideal = pg.ideal
    if any(not m.is_squarefree() for m in ideal.gens):
        raise OrderingPreconditionError("duplication requires a squarefree base ideal")
    g = ideal.graph
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} out of range")
    _require_verified(o, "duplication_order")
    gx = duplicate_vertex(g, x)
    pg_x = power_generators(EdgeIdeal(gx), pg.q, cap)
    y = g.n
    emitted: list[Monomial] = []
    for m in o.monomials():
        m1 = m.extend(gx.n)
        emitted.append(m1)
        emitted.extend(expansion_new_generators(m1, x, y))
    seq = tuple(pg_x.index[m] for m in emitted)
    if sorted(seq) != list(range(pg_x.count)):
        raise AssertionError("duplication insertion did not enumerate all generators")
    return GeneratorOrdering(pg_x, seq, "duplication")


@dataclass(frozen=True)
class ExpansionContext:
    """Book-keeping for ordering the generators of I(G^[x])^s.

    Z = {x, y}; A = N_G(x); B = the remaining vertices (independent when the
    expansion is gapfree); mu stratifies generators by the least number of xy
    factors any factorization needs.
    """

    graph: Graph
    x: int
    y: int
    s: int
    expanded: PowerGenerators
    xy_edge: int
    A: frozenset[int]
    B: tuple[int, ...]
    b_order: tuple[int, ...]
    mu_values: tuple[int, ...]


def expansion_context(
    g: Graph,
    x: int,
    s: int,
    b_order: Sequence[int] | None = None,
    cap: int = DEFAULT_CAP,
) -> ExpansionContext:
    """Build the expansion G^[x], its power generators, and the mu values.

    Raises NotGapfree when the exterior V(G) minus N[x] is not independent,
    which is exactly when G^[x] fails to be gapfree.
    """
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} out of range")
    exterior = set(range(g.n)) - {x} - set(g.adj[x])
    if not is_independent(g, exterior):
        raise NotGapfree(
            f"expansion at vertex {x} rejected: V minus N[{x}] contains an edge, "
            "so the expanded graph is not gapfree"
        )
    y = g.n
    gexp = expand_vertex(g, x)
    pg_exp = power_generators(EdgeIdeal(gexp), s, cap)
    xy_edge = gexp.edges.index((x, y))
    mu_values = tuple(
        min(f.count(xy_edge) for f in pg_exp.factorizations[i])
        for i in range(pg_exp.count)
    )
    A = frozenset(g.adj[x])
    B = tuple(sorted(set(range(gexp.n)) - {x, y} - A))
    if b_order is None:
        b_order = B
    else:
        b_order = tuple(int(b) for b in b_order)
        if sorted(b_order) != sorted(B):
            raise ValueError(f"b_order must be a permutation of B = {B}")
    return ExpansionContext(
        g, x, y, s, pg_exp, xy_edge, A, B, b_order, mu_values
    )


def mu(w: Monomial, ctx: ExpansionContext) -> int:
    """Least i with w / (xy)^i a generator of the duplicated ideal's power s-i."""
    at = ctx.expanded.index.get(w)
    if at is None:
        raise ValueError(f"{w} is not a generator of the expanded power")
    return ctx.mu_values[at]


def expansion_order(
    o: GeneratorOrdering,
    x: int,
    b_order: Sequence[int] | None = None,
    cap: int = DEFAULT_CAP,
) -> GeneratorOrdering:
    """Extend a verified order on I(G)^s to one on I(G^[x])^s.

    The prefix is the duplication order (the mu = 0 generators); the new
    generators follow, sorted by (mu, deg on {x,y}, |deg_x - deg_y|, then the
    B-part lexicographically along b_order, largest first).  Those four rules
    leave x/y-mirror ties, broken by larger deg_x then by full exponent-vector
    lex, largest first; the verifier certifies the result, not the proof.
    """
    pg = o.base
    g = pg.ideal.graph
    ctx = expansion_context(g, x, pg.q, b_order, cap)
    prefix = duplication_order(o, x, cap)
    pg_exp = ctx.expanded
    seq = [pg_exp.index[m] for m in prefix.monomials()]
    if any(ctx.mu_values[i] != 0 for i in seq):
        raise AssertionError("duplication prefix contains a generator with mu > 0")

    xv, yv = ctx.x, ctx.y

    def key(i: int):
        m = pg_exp.gens[i]
        dx, dy = m.exps[xv], m.exps[yv]
        return (
            ctx.mu_values[i],
            dx + dy,
            abs(dx - dy),
            tuple(-m.exps[b] for b in ctx.b_order),
            -dx,
            tuple(-e for e in m.exps),
        )

    suffix = sorted(
        (i for i in range(pg_exp.count) if ctx.mu_values[i] > 0), key=key
    )
    return GeneratorOrdering(pg_exp, tuple(seq + suffix), "expansion")
