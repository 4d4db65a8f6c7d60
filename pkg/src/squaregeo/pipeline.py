"""Recognition pipeline: audit, refute, construct, or fall back to search.

The decision flow for an instance (g, p):

1. audit the structural preconditions; failing them ends in UNDECIDED
   unless the brute-force search may run,
2. test the necessary conditions; a refutation is a definitive NO,
3. test the sufficient conditions and build the two orders; success is a
   YES carrying orders, forced sets and an exact embedding,
4. otherwise UNDECIDED, or the verdict of the exhaustive search when it
   is allowed and the instance is small enough.

Every YES certificate re-verifies from its own fields alone.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chords import build_chord_graph, compute_ab_sets
from .embedding import (
    Embedding,
    brute_force_orders,
    completion,
    embed,
    make_order_pair,
    verify_embedding,
)
from .errors import StructuralError
from .graph import BabPartition, Graph
from .necessary import NecessaryStatus, NecessaryVerdict, check_necessary
from .orders import LinearOrder, SufficiencyVerdict, check_sufficient

YES = "yes"
NO = "no"
UNDECIDED = "undecided"

Pair = tuple[int, int]


@dataclass(frozen=True)
class Certificate:
    """Outcome of recognition plus everything needed to re-check it.

    ``route`` names the deciding step: "sufficient" or "oracle" for YES,
    "necessary" or "oracle" for NO, "assumption" or "sufficiency" for
    UNDECIDED. The analysis fields are not serialized.
    """

    verdict: str
    route: str
    reason: str = ""
    order1: LinearOrder | None = None
    order2: LinearOrder | None = None
    completion1: frozenset[Pair] | None = None
    completion2: frozenset[Pair] | None = None
    embedding: Embedding | None = None
    necessary: NecessaryVerdict | None = None
    sufficiency: SufficiencyVerdict | None = None


def _necessary_reason(nec: NecessaryVerdict) -> str:
    if nec.refutation is not None:
        r = nec.refutation
        if r.kind == "odd-cycle":
            nodes = " ".join(f"({x},{y})" for x, y in r.cycle)
            return f"coloring: odd chord-graph cycle {nodes}"
        nodes = " ".join(f"({x},{y})" for x, y in r.conflict)
        return f"coloring: {r.detail} ({nodes})"
    rfr = nec.rigid_free
    parts = []
    for side, viol in (("a", rfr.a_violations), ("b", rfr.b_violations)):
        for v, rp in viol:
            pair = f"({rp.x1},{rp.y1}),({rp.x2},{rp.y2})"
            parts.append(f"side {side}: rigid pair {pair} sits inside N_Y({v})")
    return "rigid-free: " + "; ".join(parts)


def _oracle_certificate(g: Graph, bound: int, note: str = "") -> Certificate:
    found = brute_force_orders(g, bound)
    if found is None:
        reason = "no order pair with disjoint forced sets"
        if note:
            reason = f"{note}; {reason}"
        return Certificate(verdict=NO, route="oracle", reason=reason)
    o1, o2 = found
    pair = make_order_pair(g, o1, o2)
    return Certificate(
        verdict=YES,
        route="oracle",
        reason=note,
        order1=o1,
        order2=o2,
        completion1=pair.c1,
        completion2=pair.c2,
        embedding=embed(g, pair),
    )


def recognize(
    g: Graph,
    p: BabPartition,
    allow_oracle: bool = False,
    oracle_bound: int = 6,
) -> Certificate:
    """Decide whether (g, p) embeds in the plane under the max metric."""
    cg = build_chord_graph(g, p)
    nec = check_necessary(g, p, cg)
    if nec.status is NecessaryStatus.OUT_OF_SCOPE:
        if allow_oracle and g.n <= oracle_bound:
            return _oracle_certificate(g, oracle_bound, note=f"audit: {nec.reason}")
        return Certificate(verdict=UNDECIDED, route="assumption", reason=nec.reason, necessary=nec)
    if nec.status is NecessaryStatus.FAIL:
        return Certificate(
            verdict=NO, route="necessary", reason=_necessary_reason(nec), necessary=nec
        )

    suff = check_sufficient(g, p, cg, compute_ab_sets(cg, p))
    if suff.satisfied:
        o1, o2 = suff.orders
        pair = make_order_pair(g, o1, o2)
        if pair.valid:
            return Certificate(
                verdict=YES,
                route="sufficient",
                order1=o1,
                order2=o2,
                completion1=pair.c1,
                completion2=pair.c2,
                embedding=embed(g, pair),
                necessary=nec,
                sufficiency=suff,
            )
        if p.a_only and p.b_only:
            raise StructuralError(
                "constructed orders have intersecting forced sets on a two-sided instance"
            )
        note = "construction left unverified on a one-sided instance"
    else:
        note = f"sufficiency: {suff.reason}"

    if allow_oracle and g.n <= oracle_bound:
        return _oracle_certificate(g, oracle_bound, note=note)
    return Certificate(
        verdict=UNDECIDED, route="sufficiency", reason=note, necessary=nec, sufficiency=suff
    )


@dataclass(frozen=True)
class CertificateCheck:
    ok: bool
    problems: tuple[str, ...] = ()


def verify_certificate(g: Graph, cert: Certificate) -> CertificateCheck:
    """Re-check a certificate from its own fields.

    For YES: both orders are permutations of V, the stored forced sets match
    the ones the orders induce, they are disjoint, and the coordinates pass
    the exact adjacency test. NO and UNDECIDED certificates only need a
    consistent shape.
    """
    problems = []
    if cert.verdict not in (YES, NO, UNDECIDED):
        problems.append(f"unknown verdict {cert.verdict!r}")
    if cert.verdict != YES:
        if cert.verdict == NO and not cert.reason:
            problems.append("refutation without a reason")
        return CertificateCheck(ok=not problems, problems=tuple(problems))

    want = frozenset(range(g.n))
    for name, o in (("order1", cert.order1), ("order2", cert.order2)):
        if o is None:
            problems.append(f"{name} missing")
        elif frozenset(o.seq) != want or len(o.seq) != g.n:
            problems.append(f"{name} is not a permutation of the vertices")
    if cert.completion1 is None or cert.completion2 is None:
        problems.append("forced sets missing")
    if cert.embedding is None:
        problems.append("embedding missing")
    if problems:
        return CertificateCheck(ok=False, problems=tuple(problems))

    if completion(g, cert.order1) != cert.completion1:
        problems.append("stored first forced set differs from the order's")
    if completion(g, cert.order2) != cert.completion2:
        problems.append("stored second forced set differs from the order's")
    if cert.completion1 & cert.completion2:
        problems.append("forced sets intersect")
    check = verify_embedding(g, cert.embedding)
    if not check.ok:
        problems.append(f"embedding fails on pair {check.violation}")
    return CertificateCheck(ok=not problems, problems=tuple(problems))
