"""Finite simple graphs: classifiers, small-pattern detection, duplication
and expansion constructions.

Vertices are dense integers 0..n-1.  Edges are unordered pairs stored as
``(u, v)`` with ``u < v``; the input edge sequence is preserved because edge
ideals downstream key their generators by it.  Optional ``labels`` name the
vertices for rendering only.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterable, Sequence


class Graph:
    """Finite simple graph on vertices 0..n-1 with an ordered edge sequence."""

    __slots__ = ("n", "edges", "labels", "_adj")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Sequence[str] | None = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        normalized: list[tuple[int, int]] = []
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) has an endpoint outside 0..{n-1}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                continue
            seen.add(e)
            normalized.append(e)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("labels must cover every vertex")
        self.n = n
        self.edges = tuple(normalized)
        self.labels = labels
        self._adj: tuple[frozenset[int], ...] | None = None

    @property
    def adj(self) -> tuple[frozenset[int], ...]:
        if self._adj is None:
            sets: list[set[int]] = [set() for _ in range(self.n)]
            for u, v in self.edges:
                sets[u].add(v)
                sets[v].add(u)
            self._adj = tuple(frozenset(s) for s in sets)
        return self._adj

    @property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def vertex_names(self) -> tuple[str, ...]:
        return self.labels if self.labels is not None else tuple(
            f"x{i}" for i in range(self.n)
        )

    def with_labels(self, labels: Sequence[str]) -> "Graph":
        return Graph(self.n, self.edges, labels)

    def __eq__(self, other) -> bool:
        # Set semantics on edges: the stored sequence is presentation only.
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edge_set == other.edge_set
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edge_set))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


# --- reference patterns (Cricket, Diamond, C4, C5), drawn on 4/5 vertices ---

CRICKET = Graph(5, [(0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
DIAMOND = Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
C4 = Graph(4, [(0, 1), (1, 3), (2, 3), (0, 2)])
C5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])

PATTERNS: dict[str, Graph] = {
    "cricket": CRICKET,
    "diamond": DIAMOND,
    "c4": C4,
    "c5": C5,
}


def neighborhood(g: Graph, x: int, closed: bool = False) -> frozenset[int]:
    """Open or closed neighborhood of ``x``."""
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} out of range")
    nb = g.adj[x]
    return nb | {x} if closed else nb


def is_independent(g: Graph, w: Iterable[int]) -> bool:
    """True iff no edge of ``g`` has both endpoints in ``w``."""
    ws = set(w)
    return not any(u in ws and v in ws for u, v in g.edges)


def induced_subgraph(g: Graph, w: Iterable[int]) -> Graph:
    """Induced subgraph on ``w``, relabeled to 0..|w|-1 in sorted order."""
    verts = sorted(set(w))
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    labels = None
    if g.labels is not None:
        labels = tuple(g.labels[v] for v in verts)
    return Graph(len(verts), edges, labels)


def is_gapfree(g: Graph) -> bool:
    """No pair of vertex-disjoint edges without a third edge meeting both."""
    masks = [(1 << u) | (1 << v) for u, v in g.edges]
    m = len(masks)
    for i in range(m):
        a = masks[i]
        for j in range(i + 1, m):
            b = masks[j]
            if a & b:
                continue
            if not any(h & a and h & b for h in masks):
                return False
    return True


def _induced_edge_count(g: Graph, verts: tuple[int, ...]) -> int:
    adj = g.adj
    return sum(1 for u, v in combinations(verts, 2) if v in adj[u])


def contains_induced(g: Graph, pattern: str | Graph) -> bool:
    """True iff some vertex subset of ``g`` induces a copy of the pattern.

    Subset-first enumeration: for each subset of the right size whose induced
    edge count matches, try injective maps (as permutations of the subset).
    Edges and non-edges must both match, which the edge-count filter plus
    edge-only check guarantees.
    """
    p = PATTERNS[pattern] if isinstance(pattern, str) else pattern
    k = p.n
    if g.n < k:
        return False
    target = len(p.edges)
    adj = g.adj
    pedges = p.edges
    for subset in combinations(range(g.n), k):
        if _induced_edge_count(g, subset) != target:
            continue
        for perm in permutations(subset):
            if all(perm[v] in adj[perm[u]] for u, v in pedges):
                return True
    return False


def _contains_induced_extension(g: Graph, pattern: str | Graph) -> bool:
    """Independent cross-check: extend a partial injective map vertex by
    vertex, enforcing induced-adjacency equality at every step."""
    p = PATTERNS[pattern] if isinstance(pattern, str) else pattern
    k = p.n
    if g.n < k:
        return False
    padj = p.adj
    gadj = g.adj

    def extend(mapped: list[int], used: set[int]) -> bool:
        i = len(mapped)
        if i == k:
            return True
        for cand in range(g.n):
            if cand in used:
                continue
            ok = True
            for j in range(i):
                if (j in padj[i]) != (mapped[j] in gadj[cand]):
                    ok = False
                    break
            if ok:
                mapped.append(cand)
                used.add(cand)
                if extend(mapped, used):
                    return True
                mapped.pop()
                used.discard(cand)
        return False

    return extend([], set())


def is_cdcc(g: Graph) -> bool:
    """Gapfree and containing induced cricket, diamond, C4 and C5."""
    # Pattern checks first: they reject far more graphs, far more cheaply,
    # than the gapfree scan.
    return (
        contains_induced(g, "c5")
        and contains_induced(g, "cricket")
        and contains_induced(g, "c4")
        and contains_induced(g, "diamond")
        and is_gapfree(g)
    )


def complement(g: Graph) -> Graph:
    edges = [
        (u, v)
        for u, v in combinations(range(g.n), 2)
        if v not in g.adj[u]
    ]
    return Graph(g.n, edges, g.labels)


def _mcs_order(g: Graph) -> list[int]:
    """Maximum-cardinality search visit order (ties to the smallest label)."""
    weight = [0] * g.n
    visited = [False] * g.n
    order: list[int] = []
    for _ in range(g.n):
        v = max(
            (u for u in range(g.n) if not visited[u]),
            key=lambda u: (weight[u], -u),
        )
        visited[v] = True
        order.append(v)
        for u in g.adj[v]:
            if not visited[u]:
                weight[u] += 1
    return order


def _is_perfect_elimination_ordering(g: Graph, peo: Sequence[int]) -> bool:
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [u for u in g.adj[v] if pos[u] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        if any(u != parent and u not in g.adj[parent] for u in later):
            return False
    return True


def is_chordal(g: Graph) -> bool:
    """Chordality via maximum-cardinality search plus elimination-order check.

    MCS yields a perfect elimination ordering exactly when one exists, so the
    verification pass decides chordality.
    """
    if g.n == 0:
        return True
    peo = list(reversed(_mcs_order(g)))
    return _is_perfect_elimination_ordering(g, peo)


def is_cochordal(g: Graph) -> bool:
    return is_chordal(complement(g))


def duplicate_vertex(g: Graph, x: int) -> Graph:
    """Duplication at ``x``: new vertex y = n with N(y) = N(x); xy not an edge."""
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} out of range")
    y = g.n
    new_edges = list(g.edges) + [(b, y) for b in sorted(g.adj[x])]
    labels = None
    if g.labels is not None:
        labels = g.labels + (g.labels[x] + "'",)
    return Graph(g.n + 1, new_edges, labels)


def expand_vertex(g: Graph, x: int) -> Graph:
    """Expansion at ``x``: duplication plus the edge xy (xy is the last edge)."""
    gx = duplicate_vertex(g, x)
    return Graph(gx.n, list(gx.edges) + [(x, g.n)], gx.labels)


def matching_number(g: Graph) -> int:
    """Maximum number of pairwise disjoint edges, by branch and bound.

    Exact at desk scale (n <= 16); the bound is size + floor(free/2).
    """
    edges = g.edges
    best = 0
    used: set[int] = set()

    def extend(start: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if size + (g.n - len(used)) // 2 <= best:
            return
        for j in range(start, len(edges)):
            u, v = edges[j]
            if u not in used and v not in used:
                used.add(u)
                used.add(v)
                extend(j + 1, size + 1)
                used.discard(u)
                used.discard(v)

    extend(0, 0)
    return best


def parse_graph(text: str) -> Graph:
    """Parse the text format: first non-comment line ``n``, then ``u v`` lines.

    Lines starting with ``#`` (and blank lines) are ignored.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1:
                raise ValueError(f"line {lineno}: expected vertex count, got {raw!r}")
            n = int(parts[0])
            continue
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        raise ValueError("empty graph file")
    return Graph(n, edges)


def format_graph(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
