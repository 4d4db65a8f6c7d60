"""Rigid pairs, the chord graph, and the structural audit gating the pipeline.

A rigid pair is an induced 4-cycle x1-y1-y2-x2 with both x's in X_a union X_b
and both y's in Y; its two chords x1y2 and x2y1 are the non-edges forced into
one interval completion each. The chord graph has one node per X-Y non-edge
and joins two nodes exactly when they are the chords of a common rigid pair.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import BabPartition, Graph, bits, ny_mask
from .errors import InputError


@dataclass(frozen=True, order=True)
class RigidPair:
    """An induced 4-cycle x1-y1-y2-x2; (x1, y1) is the lexicographically
    least of the two edge endpoints pairs, fixing the orientation."""

    x1: int
    y1: int
    x2: int
    y2: int

    @property
    def chords(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """The two non-edges (x1,y2) and (x2,y1) completed by this pair."""
        return ((self.x1, self.y2), (self.x2, self.y1))

    @property
    def edge_pairs(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.x1, self.y1), (self.x2, self.y2))


def make_rigid_pair(ex: tuple[int, int], ey: tuple[int, int]) -> RigidPair:
    """Build a RigidPair from its two x-y edges, normalizing the orientation."""
    first, second = sorted((ex, ey))
    return RigidPair(first[0], first[1], second[0], second[1])


def enumerate_rigid_pairs(g: Graph, p: BabPartition) -> tuple[RigidPair, ...]:
    """All rigid pairs, sorted by their normalized coordinates.

    For each adjacent pair x < x' in X the crossing parts of their
    Y-neighborhoods generate exactly the rigid pairs anchored at that pair;
    Y is a clique so the y1~y2 requirement always holds.
    """
    xs = sorted(p.x_all)
    out = []
    for i, x in enumerate(xs):
        nyx = ny_mask(g, p, x)
        for xp in xs[i + 1:]:
            if not g.adjacent(x, xp):
                continue
            nyxp = ny_mask(g, p, xp)
            left = nyx & ~nyxp
            right = nyxp & ~nyx
            for y in bits(left):
                for yp in bits(right):
                    out.append(make_rigid_pair((x, y), (xp, yp)))
    return tuple(sorted(out))


@dataclass(frozen=True)
class ChordGraph:
    """The graph on X-Y non-edges induced by rigid pairs.

    ``nodes`` is lexicographically sorted; ``adj[i]`` is a bitmask over node
    indices. ``a_vertex_mask``/``b_vertex_mask`` mark nodes whose x-end is a
    private X_a (resp. X_b) vertex.
    """

    nodes: tuple[tuple[int, int], ...]
    adj: tuple[int, ...]
    a_vertex_mask: int
    b_vertex_mask: int

    def node_index(self, pair: tuple[int, int]) -> int:
        import bisect

        i = bisect.bisect_left(self.nodes, pair)
        if i == len(self.nodes) or self.nodes[i] != pair:
            raise InputError(f"{pair} is not an X-Y non-edge")
        return i

    def node_count(self) -> int:
        return len(self.nodes)

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as index pairs (i, j), i < j, lexicographically."""
        out = []
        for i, a in enumerate(self.adj):
            for j in bits(a >> (i + 1) << (i + 1)):
                out.append((i, j))
        return out

    @property
    def non_isolated_mask(self) -> int:
        m = 0
        for i, a in enumerate(self.adj):
            if a:
                m |= 1 << i
        return m

    @property
    def isolated_mask(self) -> int:
        return ~self.non_isolated_mask & ((1 << len(self.nodes)) - 1)

    def witness(self, i: int, j: int) -> RigidPair:
        """The unique rigid pair whose chords are nodes i and j."""
        if not (self.adj[i] >> j) & 1:
            raise InputError(f"nodes {self.nodes[i]} and {self.nodes[j]} are not adjacent")
        (x, y), (xp, yp) = self.nodes[i], self.nodes[j]
        return make_rigid_pair((x, yp), (xp, y))

    def components(self) -> list[tuple[int, ...]]:
        """Connected components over non-isolated nodes, as sorted tuples."""
        seen = 0
        comps = []
        live = self.non_isolated_mask
        for s in bits(live):
            if (seen >> s) & 1:
                continue
            frontier = 1 << s
            comp = 0
            while frontier:
                comp |= frontier
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
            seen |= comp
            comps.append(tuple(bits(comp)))
        return comps


def build_chord_graph(g: Graph, p: BabPartition) -> ChordGraph:
    """Construct the chord graph of (g, p).

    Nodes are all X-Y non-edges. From node (x, y), neighbors are the nodes
    (x', y') with x' adjacent to both x and y, and y' a Y-neighbor of x (the
    node property already gives x' !~ y'). Neighborhood masks per candidate
    x' are precomputed over each x'-block, keeping the work within a small
    constant times n^4 while staying on integer bit operations.
    """
    xs = sorted(p.x_all)
    nodes: list[tuple[int, int]] = []
    block_start: dict[int, int] = {}
    block_ys: dict[int, list[int]] = {}
    for x in xs:
        non_nb = sorted(bits(p.y_mask & ~g.adj[x]))
        block_start[x] = len(nodes)
        block_ys[x] = non_nb
        nodes.extend((x, y) for y in non_nb)

    # row_select[xp] maps a Y-neighborhood mask owner x to the node-index mask
    # of xp's block restricted to N_Y(x); built lazily per (xp, x).
    cache: dict[tuple[int, int], int] = {}

    def block_mask(xp: int, x: int) -> int:
        key = (xp, x)
        got = cache.get(key)
        if got is not None:
            return got
        nyx = g.adj[x] & p.y_mask
        m = 0
        base = block_start[xp]
        for off, y in enumerate(block_ys[xp]):
            if (nyx >> y) & 1:
                m |= 1 << (base + off)
        cache[key] = m
        return m

    x_mask = p.x_mask
    adj = []
    for x, y in nodes:
        cand = g.adj[x] & g.adj[y] & x_mask
        m = 0
        for xp in bits(cand):
            m |= block_mask(xp, x)
        adj.append(m)

    a_mask = 0
    b_mask = 0
    for i, (x, _) in enumerate(nodes):
        if (p.a_only_mask >> x) & 1:
            a_mask |= 1 << i
        elif (p.b_only_mask >> x) & 1:
            b_mask |= 1 << i
    return ChordGraph(tuple(nodes), tuple(adj), a_mask, b_mask)


@dataclass(frozen=True)
class AbVertexSets:
    """Nodes of the chord graph whose color is forced.

    ``script_a``: non-isolated a-vertices with at least one neighbor that is
    not itself an a-vertex; ``script_b`` symmetrically.
    """

    script_a: frozenset[tuple[int, int]]
    script_b: frozenset[tuple[int, int]]
    script_a_mask: int
    script_b_mask: int


def compute_ab_sets(cg: ChordGraph, p: BabPartition) -> AbVertexSets:
    sa = 0
    sb = 0
    for i in range(len(cg.nodes)):
        if (cg.a_vertex_mask >> i) & 1 and cg.adj[i] & ~cg.a_vertex_mask:
            sa |= 1 << i
        if (cg.b_vertex_mask >> i) & 1 and cg.adj[i] & ~cg.b_vertex_mask:
            sb |= 1 << i
    return AbVertexSets(
        script_a=frozenset(cg.nodes[i] for i in bits(sa)),
        script_b=frozenset(cg.nodes[i] for i in bits(sb)),
        script_a_mask=sa,
        script_b_mask=sb,
    )


@dataclass(frozen=True)
class AssumptionReport:
    """Audit of the structural preconditions the decision rules need.

    ``compliant`` is the conjunction of the four flags; non-compliance routes
    the pipeline to UNDECIDED (or to the brute-force oracle when allowed),
    never to a hard failure.
    """

    chord_connected: bool
    degree_bounds_ok: bool
    b_non_dominated: bool
    has_core_edge: bool
    failures: tuple[str, ...]

    @property
    def compliant(self) -> bool:
        return (
            self.chord_connected
            and self.degree_bounds_ok
            and self.b_non_dominated
            and self.has_core_edge
        )


def audit_assumption1(g: Graph, p: BabPartition, cg: ChordGraph) -> AssumptionReport:
    failures = []

    components = cg.components()
    chord_connected = len(components) <= 1
    if not chord_connected:
        failures.append(f"chord graph splits into {len(components)} non-isolated components")

    y_size = len(p.y)
    degree_ok = True
    for v in sorted(p.a_only | p.b_only):
        d = ny_mask(g, p, v).bit_count()
        if not 0 < d < y_size:
            degree_ok = False
            failures.append(f"private vertex {v} has {d} Y-neighbors out of {y_size}")

    b_ok = True
    for b in sorted(p.b_only):
        nyb = ny_mask(g, p, b)
        if all(nyb & ~ny_mask(g, p, u) == 0 for u in sorted(p.x_all) if u != b):
            b_ok = False
            failures.append(f"N_Y({b}) nests inside every other X vertex's Y-neighborhood")

    ab_mask = cg.a_vertex_mask | cg.b_vertex_mask
    core = False
    for i in range(len(cg.nodes)):
        if not (ab_mask >> i) & 1 and cg.adj[i] & ~ab_mask:
            core = True
            break
    if not core:
        failures.append("no chord-graph edge avoids the forced-color nodes")

    return AssumptionReport(
        chord_connected=chord_connected,
        degree_bounds_ok=degree_ok,
        b_non_dominated=b_ok,
        has_core_edge=core,
        failures=tuple(failures),
    )


@dataclass(frozen=True)
class NonEdgeClasses:
    """X-Y non-edges split into isolated (class 1) and non-isolated (class 2)
    chord-graph nodes, plus the private-to-private pairs (class 3)."""

    isolated: frozenset[tuple[int, int]]
    linked: frozenset[tuple[int, int]]
    cross: frozenset[tuple[int, int]]


def classify_nonedges(g: Graph, p: BabPartition, cg: ChordGraph) -> NonEdgeClasses:
    iso = cg.isolated_mask
    isolated = frozenset(cg.nodes[i] for i in bits(iso))
    linked = frozenset(cg.nodes[i] for i in bits(cg.non_isolated_mask))
    cross = frozenset((a, b) for a in p.a_only for b in p.b_only)
    return NonEdgeClasses(isolated=isolated, linked=linked, cross=cross)
