import random
from itertools import combinations, permutations

import pytest

from linquo.fixtures import (
    FIG2_SQUARE,
    FIG4_SQUARE,
    ISTANBUL,
    c5,
    fig2,
    fig4,
    two_k2,
)
from linquo.graphs import Graph
from linquo.linquot import (
    GeneratorOrdering,
    NotGapfree,
    OrderingPreconditionError,
    colon_min_gens,
    duplication_order,
    expansion_context,
    expansion_order,
    find_lq_order,
    mu,
    ordering_from_multisets,
    verify_linear_quotients,
)
from linquo.monomials import from_vars
from linquo.orderings import efficient_ordering
from linquo.power_ideals import edge_ideal, power_generators

A, B, C, D, E = range(5)


def ordering(g, q, multisets):
    pg = power_generators(edge_ideal(g), q)
    return ordering_from_multisets(pg, multisets)


def first_power_ordering(g, edge_sequence):
    pg = power_generators(edge_ideal(g), 1)
    return ordering_from_multisets(pg, [(j,) for j in edge_sequence])


def test_istanbul_passes():
    rep = verify_linear_quotients(ordering(c5(), 2, ISTANBUL))
    assert rep.passed and rep.witness is None


def test_fig2_square_order_passes():
    assert verify_linear_quotients(ordering(fig2(), 2, FIG2_SQUARE)).passed


def test_two_k2_fails_with_colon_witness():
    o = first_power_ordering(two_k2(), (0, 1))
    rep = verify_linear_quotients(o)
    assert not rep.passed
    assert rep.witness.t == 1 and rep.witness.i == 0
    assert rep.witness.colon == from_vars(4, [0, 1])  # a*b


# A 42-entry variant of the fig4 square order that groups every ab-multiple
# up front; it cannot verify, and pins the deterministic first-failure report.
FIG4_SQUARE_BLOCKED = [
    (0, 0), (0, 2), (0, 3), (0, 1), (0, 5), (0, 4), (0, 6), (0, 7),
    (0, 8), (1, 7), (1, 2), (1, 6), (1, 8), (1, 4), (1, 5), (2, 7),
    (2, 3), (2, 6), (2, 8), (2, 5), (3, 7), (3, 6), (3, 8), (3, 4),
    (3, 5), (4, 8), (4, 5), (4, 7), (4, 6), (5, 8), (5, 7), (5, 6),
    (6, 8), (7, 8), (1, 1), (2, 2), (3, 3), (4, 4), (5, 5), (6, 6),
    (7, 7), (8, 8),
]


def test_blocked_fig4_variant_fails_deterministically():
    o = ordering(fig4(), 2, FIG4_SQUARE_BLOCKED)
    rep = verify_linear_quotients(o)
    assert not rep.passed
    assert (rep.witness.t, rep.witness.i) == (7, 5)
    assert rep.witness.colon == from_vars(6, [1, 3])  # b*q
    assert rep.per_index_variables[7] == {0, 4}  # only a and x are witnessed


def test_per_index_variables():
    o = ordering(c5(), 2, ISTANBUL)
    rep = verify_linear_quotients(o)
    # position 1 is e1*e2; its only earlier colon e1^2 : e1e2 = a
    assert rep.per_index_variables[0] == frozenset()
    assert rep.per_index_variables[1] == {A}


def test_sequence_must_be_permutation():
    pg = power_generators(edge_ideal(two_k2()), 1)
    with pytest.raises(ValueError):
        GeneratorOrdering(pg, (0, 0))
    with pytest.raises(ValueError):
        ordering_from_multisets(pg, [(0,), (0,)])
    with pytest.raises(ValueError):
        ordering_from_multisets(pg, [(0, 1)])


def test_colon_min_gens():
    ist = ordering(c5(), 2, ISTANBUL)
    assert colon_min_gens(ist, 0) == []
    names = ("a", "b", "c", "d", "e")
    # last position is e4^2 = d^2 e^2
    got = [m.format(names) for m in colon_min_gens(ist, 14)]
    assert got == ["c", "a"]
    # independent route: colon every earlier generator, keep divisibility-minimal
    mons = ist.monomials()
    cols = {mons[j].colon(mons[14]) for j in range(14)}
    minimal = {x for x in cols if not any(y != x and y.divides(x) for y in cols)}
    assert set(colon_min_gens(ist, 14)) == minimal


def test_colon_min_gens_cube_last_position():
    o3 = efficient_ordering(ordering(c5(), 2, ISTANBUL), 3)
    mons = o3.monomials()
    t = mons.index(from_vars(5, [D, E, D, E, D, E]))
    assert t == 34
    assert {m.format(("a", "b", "c", "d", "e")) for m in colon_min_gens(o3, t)} == {"a", "c"}


def test_find_lq_order_c5_square():
    pg = power_generators(edge_ideal(c5()), 2)
    res = find_lq_order(pg)
    assert res.found
    assert verify_linear_quotients(res.ordering).passed
    assert res.ordering.provenance == "search"


def test_find_lq_order_definite_no():
    for q in (1, 2):
        pg = power_generators(edge_ideal(two_k2()), q)
        res = find_lq_order(pg)
        assert res.status == "none"
    # the pentagon itself (first power) has no such order
    pg1 = power_generators(edge_ideal(c5()), 1)
    assert find_lq_order(pg1).status == "none"


def test_find_lq_order_budget_exhaustion():
    pg = power_generators(edge_ideal(c5()), 1)
    res = find_lq_order(pg, budget=1)
    assert res.status == "unknown"
    with pytest.raises(ValueError):
        find_lq_order(pg, budget=0)


def test_duplication_order_pentagon_every_vertex():
    ist = ordering(c5(), 2, ISTANBUL)
    for x in range(5):
        o = duplication_order(ist, x)
        assert verify_linear_quotients(o).passed
        assert o.provenance == "duplication"
        # each x-divisible generator contributes its substitution chain
        extra = sum(m.deg_var(x) for m in ist.monomials())
        assert len(o) == len(ist) + extra


def test_duplication_order_fixture_chain_q_le_3():
    cases = [
        (ordering(c5(), 2, ISTANBUL), 5),
        (efficient_ordering(ordering(c5(), 2, ISTANBUL), 3), 5),
        (ordering(fig2(), 2, FIG2_SQUARE), 6),
        (ordering(fig4(), 2, FIG4_SQUARE), 6),
    ]
    for base, n in cases:
        for x in range(n):
            assert verify_linear_quotients(duplication_order(base, x)).passed


def test_duplication_order_without_the_vertex_is_identity():
    g = Graph(4, [(0, 1), (1, 2)])  # vertex 3 isolated
    pg = power_generators(edge_ideal(g), 1)
    base = ordering_from_multisets(pg, [(0,), (1,)])
    o = duplication_order(base, 3)
    assert [m.exps[:4] for m in o.monomials()] == [m.exps for m in base.monomials()]
    assert len(o) == len(base)


def test_duplication_order_rejects_failing_base():
    o = first_power_ordering(two_k2(), (0, 1))
    with pytest.raises(OrderingPreconditionError):
        duplication_order(o, 0)


P3 = Graph(3, [(0, 1), (1, 2)], labels=("a", "x", "b"))


def test_expansion_order_p3_all_b_orders():
    for s in (1, 2):
        pg = power_generators(edge_ideal(P3), s)
        base = find_lq_order(pg).ordering
        ctx = expansion_context(P3, 1, s)
        assert ctx.B == ()  # nothing outside the closed neighborhood
        o = expansion_order(base, 1)
        assert verify_linear_quotients(o).passed
        assert o.provenance == "expansion"


def test_expansion_order_fig2_both_b_orders():
    base = ordering(fig2(), 2, FIG2_SQUARE)
    ctx = expansion_context(fig2(), 4, 2)
    assert set(ctx.B) == {2, 3}  # p and q
    for b in permutations(ctx.B):
        o = expansion_order(base, 4, b)
        assert verify_linear_quotients(o).passed


def test_expansion_gate_rejects_dependent_exterior():
    ist = ordering(c5(), 2, ISTANBUL)
    with pytest.raises(NotGapfree):
        expansion_order(ist, 0)
    with pytest.raises(NotGapfree):
        expansion_context(c5(), 0, 2)


def test_expansion_context_b_order_validation():
    with pytest.raises(ValueError):
        expansion_context(fig2(), 4, 2, b_order=(2, 2))
    with pytest.raises(ValueError):
        expansion_context(fig2(), 4, 2, b_order=(2, 3, 4))


def test_mu_values():
    ctx = expansion_context(fig2(), 4, 2)
    y = 6
    # a generator of the duplicated ideal's power keeps mu = 0
    w0 = from_vars(7, [0, 4, 0, 4])  # (ax)^2
    assert mu(w0, ctx) == 0
    # (xy)^s needs every factor
    top = from_vars(7, [4, y, 4, y])
    assert mu(top, ctx) == 2
    # (xy) * ab refactors as (xa)(yb) since a and b both neighbor x
    w1 = from_vars(7, [4, y, 0, 1])
    assert mu(w1, ctx) == 0
    # (xy) * pz cannot avoid the clique edge: p is outside N(x)
    w2 = from_vars(7, [4, y, 2, 5])
    assert mu(w2, ctx) == 1
    with pytest.raises(ValueError):
        mu(from_vars(7, [0, 0, 0, 0]), ctx)  # a^4 is not a generator


def test_mu_against_direct_minimum():
    # mu equals the least number of clique-edge factors over all factorizations
    ctx = expansion_context(P3, 1, 2)
    pg = ctx.expanded
    for i in range(pg.count):
        direct = min(f.count(ctx.xy_edge) for f in pg.factorizations[i])
        assert ctx.mu_values[i] == direct


def test_expansion_prefix_is_duplication_order():
    base = ordering(fig2(), 2, FIG2_SQUARE)
    o = expansion_order(base, 4)
    ctx = expansion_context(fig2(), 4, 2)
    dup = duplication_order(base, 4)
    prefix = o.monomials()[: len(dup)]
    assert [m.exps for m in prefix] == [m.exps for m in dup.monomials()]
    suffix_mus = [mu(m, ctx) for m in o.monomials()[len(dup):]]
    assert all(v > 0 for v in suffix_mus)
    assert suffix_mus == sorted(suffix_mus)  # rule 1 dominates the suffix sort


def test_search_verdict_matches_oracle_on_random_graphs():
    rng = random.Random(31)
    checked = 0
    while checked < 25:
        n = rng.randint(3, 5)
        g = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < 0.5])
        pg = power_generators(edge_ideal(g), 1)
        if not 1 <= pg.count <= 6:
            continue
        checked += 1
        res = find_lq_order(pg)
        assert res.status in ("found", "none")
        mons = pg.gens
        exists = False
        for perm in permutations(range(pg.count)):
            o = GeneratorOrdering(pg, perm)
            if verify_linear_quotients(o).passed:
                exists = True
                break
        assert (res.status == "found") == exists
