"""Shared fixtures: the worked examples every module is checked against."""

from __future__ import annotations

import itertools

import pytest

from squaregeo import build_graph, validate_bab

# Vertex ids used throughout for the 8-vertex worked example:
# 0 = a (private to X_a), 1, 2 = shared, 3 = b (private to X_b), 4..7 = y1..y4.
G8_EDGES = [
    (0, 1), (0, 2), (1, 2),          # X_a clique
    (1, 3), (2, 3),                  # rest of the X_b clique
    (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7),  # Y clique
    (0, 4),                          # N_Y(a)  = {y1}
    (1, 4), (1, 5),                  # N_Y(x1) = {y1, y2}
    (2, 5), (2, 6), (2, 7),          # N_Y(x2) = {y2, y3, y4}
    (3, 6), (3, 7),                  # N_Y(b)  = {y3, y4}
]


@pytest.fixture
def c4():
    g = build_graph(4, [(0, 1), (2, 3), (0, 2), (1, 3)])
    p = validate_bab(g, [0, 1], [0, 1], [2, 3])
    return g, p


@pytest.fixture
def g8():
    g = build_graph(8, G8_EDGES)
    p = validate_bab(g, [0, 1, 2], [1, 2, 3], [4, 5, 6, 7])
    return g, p


@pytest.fixture
def triangle6():
    """Three shared x's whose y-neighborhoods chain cyclically; the chord
    graph is a triangle, so the 2-coloring refutation fires."""
    g = build_graph(6, [
        (0, 1), (0, 2), (1, 2),
        (3, 4), (3, 5), (4, 5),
        (0, 3), (0, 4), (1, 4), (1, 5), (2, 5), (2, 3),
    ])
    p = validate_bab(g, [0, 1, 2], [0, 1, 2], [3, 4, 5])
    return g, p


@pytest.fixture
def disconnected7():
    """Each x sees its own private y; the chord graph splits into three
    components, putting the instance outside the audited scope."""
    g = build_graph(7, [
        (0, 1), (0, 2), (1, 2),
        (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6),
        (0, 3), (1, 4), (2, 5),
    ])
    p = validate_bab(g, [0, 1, 2], [0, 1, 2], [3, 4, 5, 6])
    return g, p


def bab_shapes(n: int):
    """All (private-a, shared, private-b, y) size splits of n vertices."""
    out = []
    for a in range(n):
        for s in range(1, n):
            for b in range(n):
                y = n - a - s - b
                if y >= 1:
                    out.append((a, s, b, y))
    return out


def enumerate_bab_instances(n: int):
    """Every instance on n vertices, one representative per isomorphism
    class. Blocks are [a | shared | b | y] in id order; the symmetry group
    permutes within blocks and, when the private blocks have equal size,
    swaps the two clique roles."""
    seen = set()
    for a, s, b, y in bab_shapes(n):
        a_ids = list(range(a))
        s_ids = list(range(a, a + s))
        b_ids = list(range(a + s, a + s + b))
        y_ids = list(range(a + s + b, n))
        xs = a_ids + s_ids + b_ids
        cross = [(x, yy) for x in xs for yy in y_ids]
        base = []
        for part in (a_ids + s_ids, s_ids + b_ids, y_ids):
            base.extend(itertools.combinations(part, 2))

        group = []
        for pa in itertools.permutations(a_ids):
            for ps in itertools.permutations(s_ids):
                for pb in itertools.permutations(b_ids):
                    for py in itertools.permutations(y_ids):
                        m = dict(zip(a_ids, pa))
                        m.update(zip(s_ids, ps))
                        m.update(zip(b_ids, pb))
                        m.update(zip(y_ids, py))
                        group.append(m)
                        if a == b:
                            m2 = dict(zip(a_ids, pb))
                            m2.update(zip(s_ids, ps))
                            m2.update(zip(b_ids, pa))
                            m2.update(zip(y_ids, py))
                            group.append(m2)

        for bitsum in range(1 << len(cross)):
            chosen = frozenset(
                cross[i] for i in range(len(cross)) if (bitsum >> i) & 1
            )
            canon = min(
                frozenset(tuple(sorted((m[u], m[v]))) for u, v in chosen)
                for m in group
            )
            key = (a, s, b, y, canon)
            if key in seen:
                continue
            seen.add(key)
            g = build_graph(n, base + sorted(chosen))
            p = validate_bab(g, a_ids + s_ids, s_ids + b_ids, y_ids)
            yield g, p
