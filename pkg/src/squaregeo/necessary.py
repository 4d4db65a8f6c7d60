"""Necessary conditions: constrained 2-coloring and the rigid-free test.

A square geometric instance must have a bipartite chord graph admitting a
proper 2-coloring with every forced-red node red and every forced-blue node
blue, and at least one private side must be rigid-free. Failures come with
re-checkable witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .chords import (
    AbVertexSets,
    ChordGraph,
    RigidPair,
    audit_assumption1,
    build_chord_graph,
    compute_ab_sets,
)
from .errors import ScopeError
from .graph import BabPartition, Graph, bits, ny_mask

RED = "red"
BLUE = "blue"


@dataclass(frozen=True)
class TwoColoring:
    """A proper 2-coloring of the non-isolated chord-graph nodes."""

    red: frozenset[tuple[int, int]]
    blue: frozenset[tuple[int, int]]

    def color_of(self, node: tuple[int, int]) -> str | None:
        if node in self.red:
            return RED
        if node in self.blue:
            return BLUE
        return None


@dataclass(frozen=True)
class ColoringRefutation:
    """Why no admissible coloring exists.

    kind 'odd-cycle' carries a shortest odd cycle (tuple of nodes); kind
    'forced-conflict' carries two nodes whose forced or propagated colors
    clash together with the even-length path connecting them when same-set,
    here reported simply as the node pair.
    """

    kind: str
    cycle: tuple[tuple[int, int], ...] = ()
    conflict: tuple[tuple[int, int], ...] = ()
    detail: str = ""


def _bfs_coloring(cg: ChordGraph):
    """Color all non-isolated nodes by BFS; returns (color list, conflict edges)."""
    color: list[int | None] = [None] * len(cg.nodes)
    conflicts = []
    live = cg.non_isolated_mask
    for root in bits(live):
        if color[root] is not None:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            u = queue.pop(0)
            for v in bits(cg.adj[u]):
                if color[v] is None:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    conflicts.append((min(u, v), max(u, v)))
    return color, sorted(set(conflicts))


def _shortest_odd_cycle(cg: ChordGraph) -> tuple[int, ...]:
    """Shortest odd cycle, found by BFS layering from every non-isolated node."""
    best: tuple[int, ...] | None = None
    live = list(bits(cg.non_isolated_mask))
    for root in live:
        dist = {root: 0}
        parent = {root: None}
        queue = [root]
        while queue:
            u = queue.pop(0)
            for v in bits(cg.adj[u]):
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
        for u in dist:
            for v in bits(cg.adj[u]):
                if v in dist and u < v and dist[u] == dist[v]:
                    pu, pv = [], []
                    a, b = u, v
                    while a is not None:
                        pu.append(a)
                        a = parent[a]
                    while b is not None:
                        pv.append(b)
                        b = parent[b]
                    common = set(pu) & set(pv)
                    ai = next(i for i, x in enumerate(pu) if x in common)
                    bi = next(i for i, x in enumerate(pv) if x in common)
                    if pu[ai] != pv[bi]:
                        continue
                    cycle = pu[: ai + 1] + pv[:bi][::-1]
                    if len(cycle) % 2 == 1 and (best is None or len(cycle) < len(best)):
                        best = tuple(cycle)
    assert best is not None
    return best


def color_constrained(cg: ChordGraph, ab: AbVertexSets) -> TwoColoring | ColoringRefutation:
    """2-color the chord graph with script-A red and script-B blue.

    Requires the non-isolated part to be connected (audit upstream); a
    disconnected chord graph raises ScopeError. The coloring is canonical:
    BFS from the lexicographically least node, then a global swap so the
    constraint holds (root red when no constraint applies).
    """
    comps = cg.components()
    if len(comps) > 1:
        raise ScopeError("chord graph has several non-isolated components")
    color, conflicts = _bfs_coloring(cg)
    if conflicts:
        cyc = _shortest_odd_cycle(cg)
        return ColoringRefutation(
            kind="odd-cycle",
            cycle=tuple(cg.nodes[i] for i in cyc),
            detail=f"odd cycle of length {len(cyc)}",
        )

    sa = list(bits(ab.script_a_mask))
    sb = list(bits(ab.script_b_mask))
    for group, name in ((sa, "forced-red"), (sb, "forced-blue")):
        hues = {color[i] for i in group}
        if len(hues) > 1:
            lo = min(i for i in group if color[i] == 0)
            hi = min(i for i in group if color[i] == 1)
            return ColoringRefutation(
                kind="forced-conflict",
                conflict=(cg.nodes[lo], cg.nodes[hi]),
                detail=f"{name} nodes fall in both color classes",
            )
    if sa and sb and color[sa[0]] == color[sb[0]]:
        return ColoringRefutation(
            kind="forced-conflict",
            conflict=(cg.nodes[sa[0]], cg.nodes[sb[0]]),
            detail="a forced-red and a forced-blue node share a color class",
        )

    red_value = 0
    if sa:
        red_value = color[sa[0]]
    elif sb:
        red_value = 1 - color[sb[0]]
    red = frozenset(cg.nodes[i] for i, c in enumerate(color) if c == red_value)
    blue = frozenset(
        cg.nodes[i] for i, c in enumerate(color) if c is not None and c != red_value
    )
    return TwoColoring(red=red, blue=blue)


def rigid_region_sets(cg: ChordGraph, p: BabPartition) -> tuple[frozenset[int], frozenset[int]]:
    """R(X_a), R(X_b): y's appearing in a non-isolated node whose x-end lies
    in X_a (resp. X_b); shared x-ends contribute to both."""
    ra: set[int] = set()
    rb: set[int] = set()
    live = cg.non_isolated_mask
    for i in bits(live):
        x, y = cg.nodes[i]
        if (p.xa_mask >> x) & 1:
            ra.add(y)
        if (p.xb_mask >> x) & 1:
            rb.add(y)
    return frozenset(ra), frozenset(rb)


@dataclass(frozen=True)
class RigidFreeReport:
    """Emptiness test per private side.

    Side a holds when no vertex v of X_a minus X_b admits a rigid pair whose
    x-ends are both shared, or split between a shared and a private-b vertex,
    with both y-ends inside N_Y(v). Side b is symmetric. The *_wide variants
    quantify v over the whole of X_a (resp. X_b) instead of the private part
    only; they are informational. Violations pair each trapped vertex with a
    witnessing rigid pair.

    The region sets act as a screen: a violating pair drops both of its y's
    into the opposite side's region set, so a vertex meeting that set in at
    most one y is clean without scanning pairs. The converse is false; a
    vertex can meet the region set twice through unrelated rigid pairs.
    """

    r_xa: frozenset[int]
    r_xb: frozenset[int]
    side_a_ok: bool
    side_b_ok: bool
    side_a_ok_wide: bool
    side_b_ok_wide: bool
    a_violations: tuple[tuple[int, RigidPair], ...]
    b_violations: tuple[tuple[int, RigidPair], ...]

    @property
    def holds(self) -> bool:
        return self.side_a_ok or self.side_b_ok


def check_rigid_free(g: Graph, p: BabPartition, cg: ChordGraph) -> RigidFreeReport:
    r_xa, r_xb = rigid_region_sets(cg, p)
    ra_mask = sum(1 << y for y in r_xa)
    rb_mask = sum(1 << y for y in r_xb)
    pairs = [cg.witness(i, j) for i, j in cg.edges()]

    def permitted(other_mask: int) -> list[RigidPair]:
        allowed = p.shared_mask | other_mask
        keep = []
        for rp in pairs:
            xm = (1 << rp.x1) | (1 << rp.x2)
            if not (xm & ~allowed) and (xm & p.shared_mask):
                keep.append(rp)
        return keep

    def trapped(members, candidates, region_mask):
        out = []
        for v in sorted(members):
            ny = ny_mask(g, p, v)
            if (ny & region_mask).bit_count() <= 1:
                continue
            for rp in candidates:
                if (ny >> rp.y1) & 1 and (ny >> rp.y2) & 1:
                    out.append((v, rp))
                    break
        return tuple(out)

    cand_a = permitted(p.b_only_mask)
    cand_b = permitted(p.a_only_mask)
    a_wide = trapped(p.x_a, cand_a, rb_mask)
    b_wide = trapped(p.x_b, cand_b, ra_mask)
    a_viol = tuple(t for t in a_wide if t[0] in p.a_only)
    b_viol = tuple(t for t in b_wide if t[0] in p.b_only)
    return RigidFreeReport(
        r_xa=r_xa,
        r_xb=r_xb,
        side_a_ok=not a_viol,
        side_b_ok=not b_viol,
        side_a_ok_wide=not a_wide,
        side_b_ok_wide=not b_wide,
        a_violations=a_viol,
        b_violations=b_viol,
    )


class NecessaryStatus(Enum):
    PASS = "pass"
    FAIL = "fail"
    OUT_OF_SCOPE = "out-of-scope"


@dataclass(frozen=True)
class NecessaryVerdict:
    status: NecessaryStatus
    coloring: TwoColoring | None = None
    refutation: ColoringRefutation | None = None
    rigid_free: RigidFreeReport | None = None
    reason: str = ""


def check_necessary(g: Graph, p: BabPartition, cg: ChordGraph | None = None) -> NecessaryVerdict:
    """Evaluate both necessary conditions; out-of-scope when the audit fails."""
    if cg is None:
        cg = build_chord_graph(g, p)
    report = audit_assumption1(g, p, cg)
    if not report.compliant:
        return NecessaryVerdict(
            status=NecessaryStatus.OUT_OF_SCOPE,
            reason="; ".join(report.failures),
        )
    ab = compute_ab_sets(cg, p)
    colored = color_constrained(cg, ab)
    if isinstance(colored, ColoringRefutation):
        return NecessaryVerdict(
            status=NecessaryStatus.FAIL,
            refutation=colored,
            reason=colored.kind,
        )
    rfr = check_rigid_free(g, p, cg)
    if not rfr.holds:
        return NecessaryVerdict(
            status=NecessaryStatus.FAIL,
            coloring=colored,
            rigid_free=rfr,
            reason="rigid-free",
        )
    return NecessaryVerdict(status=NecessaryStatus.PASS, coloring=colored, rigid_free=rfr)
