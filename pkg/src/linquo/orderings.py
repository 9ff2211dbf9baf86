"""Order constructions on power generators: the recursive pure-power
("efficient") orders, bucket classification, admissible edge orders, and the
compatible orders built from an admissible edge order plus a square order.

Both recursive constructions share one extension step: given an order
u_1 > ... > u_r of the generators of I^q and an edge sequence f_1, ..., f_s,
the next power is ordered u_1 f_1 > ... > u_r f_1 > u_1 f_2 > ... > u_r f_s
with a product omitted when it already appeared (first-appearance dedup by
exponent vector).  They differ only in where the edge sequence comes from.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .graphs import Graph
from .linquot import (
    GeneratorOrdering,
    OrderingPreconditionError,
    verify_linear_quotients,
)
from .monomials import Monomial, from_vars
from .power_ideals import DEFAULT_CAP, PowerGenerators, power_generators


def _extend_once(
    base: Sequence[Monomial], edge_monomials: Sequence[Monomial]
) -> list[Monomial]:
    emitted: list[Monomial] = []
    seen: set[Monomial] = set()
    for e in edge_monomials:
        for u in base:
            m = u * e
            if m not in seen:
                seen.add(m)
                emitted.append(m)
    return emitted


def pure_power_edge_sequence(o: GeneratorOrdering) -> tuple[int, ...]:
    """Edge indices in the order their pure powers appear in the ordering."""
    pg = o.base
    ideal = pg.ideal
    q = pg.q
    pure: dict[Monomial, int] = {}
    for j, e in enumerate(ideal.gens):
        m = e
        for _ in range(q - 1):
            m = m * e
        pure[m] = j
    seq = [pure[m] for m in o.monomials() if m in pure]
    if sorted(seq) != list(range(ideal.nedges)):
        raise OrderingPreconditionError(
            "pure powers of the edges are not totally ordered by the base order"
        )
    return tuple(seq)


def efficient_ordering(
    o: GeneratorOrdering, target_s: int, cap: int = DEFAULT_CAP
) -> GeneratorOrdering:
    """Recursive pure-power construction from a base order of I^q up to I^s.

    The edge sequence is read off the appearance order of the pure powers in
    the base order.  target_s == q returns the base order unchanged.
    """
    pg = o.base
    if target_s < pg.q:
        raise ValueError(f"target power {target_s} below base power {pg.q}")
    if target_s == pg.q:
        return o
    edge_seq = pure_power_edge_sequence(o)
    edge_mons = [pg.ideal.gens[j] for j in edge_seq]
    mons = o.monomials()
    for _ in range(pg.q, target_s):
        mons = _extend_once(mons, edge_mons)
    pg_s = power_generators(pg.ideal, target_s, cap)
    seq = tuple(pg_s.index[m] for m in mons)
    if sorted(seq) != list(range(pg_s.count)):
        raise AssertionError("efficient ordering lost or duplicated a generator")
    return GeneratorOrdering(pg_s, seq, "efficient")


def classify_buckets(
    o: GeneratorOrdering, pure_power_order: Sequence[int]
) -> tuple[int, ...]:
    """Assign each generator to the earliest edge any factorization uses.

    ``pure_power_order`` lists the edge indices from largest to smallest pure
    power.  The result is aligned with the base generator indices: entry i is
    the edge index of the class containing generator i.
    """
    pg = o.base
    rank = {j: k for k, j in enumerate(pure_power_order)}
    if sorted(rank) != list(range(pg.ideal.nedges)):
        raise ValueError("pure_power_order must be a permutation of the edges")
    out = []
    for facs in pg.factorizations:
        best = min((j for f in facs for j in f), key=lambda j: rank[j])
        out.append(best)
    return tuple(out)


def admissible_order(g: Graph) -> tuple[int, ...]:
    """Peel vertices in label order; each vertex contributes its remaining
    incident edges (sorted by the far endpoint) ahead of the rest."""
    remaining = set(range(len(g.edges)))
    order: list[int] = []

    def far_end(j: int, x: int) -> int:
        u, v = g.edges[j]
        return v if u == x else u

    for x in range(g.n):
        incident = sorted(
            (j for j in remaining if x in g.edges[j]),
            key=lambda j: far_end(j, x),
        )
        order.extend(incident)
        remaining.difference_update(incident)
    return tuple(order)


def is_admissible(g: Graph, eo: Sequence[int]) -> bool:
    """Check the disjoint-pair condition of an admissible edge ordering.

    For every disjoint pair ab > cd, all edges at a, or all edges at b, must
    come before cd.
    """
    s = len(g.edges)
    if sorted(eo) != list(range(s)):
        raise ValueError("edge ordering must be a permutation of the edges")
    pos = [0] * s
    for k, j in enumerate(eo):
        pos[j] = k
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for j, (u, v) in enumerate(g.edges):
        incident[u].append(j)
        incident[v].append(j)
    last_at = [max((pos[j] for j in incident[v]), default=-1) for v in range(g.n)]
    for j1, j2 in combinations(range(s), 2):
        e1, e2 = g.edges[eo[j1]], g.edges[eo[j2]]
        if set(e1) & set(e2):
            continue
        a, b = e1
        if last_at[a] > j2 and last_at[b] > j2:
            return False
    return True


def compatible_orders(
    g: Graph,
    eo: Sequence[int],
    o2: GeneratorOrdering,
    target_q: int,
    cap: int = DEFAULT_CAP,
) -> GeneratorOrdering:
    """Build the compatible order for I^target_q from (edge order, square order).

    The edge order must be admissible and the square order must verify; the
    recursion then multiplies block-by-block along the edge order with
    first-appearance dedup.  target_q == 2 returns the square order itself.
    """
    pg2 = o2.base
    if pg2.ideal.graph != g:
        raise ValueError("square order belongs to a different graph")
    if pg2.q != 2:
        raise ValueError("the base order must order the generators of the square")
    if target_q < 2:
        raise ValueError("target power must be >= 2")
    if not is_admissible(g, eo):
        raise OrderingPreconditionError(
            "compatible_orders rejected: the edge ordering is not admissible"
        )
    report = verify_linear_quotients(o2)
    if not report.passed:
        raise OrderingPreconditionError(
            "compatible_orders rejected: the square order fails verification"
        )
    if target_q == 2:
        return o2
    edge_mons = [from_vars(g.n, g.edges[j]) for j in eo]
    mons = o2.monomials()
    for _ in range(2, target_q):
        mons = _extend_once(mons, edge_mons)
    pg_q = power_generators(pg2.ideal, target_q, cap)
    seq = tuple(pg_q.index[m] for m in mons)
    if sorted(seq) != list(range(pg_q.count)):
        raise AssertionError("compatible order lost or duplicated a generator")
    return GeneratorOrdering(pg_q, seq, "compatible")
