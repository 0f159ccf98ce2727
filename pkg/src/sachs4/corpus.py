"""Seeded random graph corpora for fuzzing and oracle tests.

Everything here is driven by an explicit random.Random instance or seed, so
identical seeds give identical corpora.
"""

import random

from .compression import audit_vertex_compression
from .graph import Graph, from_edges


def random_graph(rng: random.Random, n_min: int = 2, n_max: int = 9) -> Graph:
    """General simple graph; may be disconnected, may contain odd cycles."""
    n = rng.randint(n_min, n_max)
    p = rng.choice((0.15, 0.3, 0.5, 0.7, 0.85))
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return from_edges(n, edges)


def random_connected_bipartite(
    rng: random.Random, n_min: int = 4, n_max: int = 12
) -> Graph:
    """Connected bipartite graph: random cross-part spanning tree plus random
    extra cross edges."""
    n = rng.randint(n_min, n_max)
    b = rng.randint(1, n // 2)
    a = n - b
    side_a = list(range(a))
    side_b = list(range(a, n))

    pending = side_a[1:] + side_b
    rng.shuffle(pending)
    # the first attachment must come from the B side: only vertex 0 is placed
    first_b = next(i for i, w in enumerate(pending) if w >= a)
    pending[0], pending[first_b] = pending[first_b], pending[0]

    covered_a = [0]
    covered_b: list[int] = []
    edges = set()
    for w in pending:
        if w >= a:
            partner = rng.choice(covered_a)
            covered_b.append(w)
        else:
            partner = rng.choice(covered_b)
            covered_a.append(w)
        edges.add((min(w, partner), max(w, partner)))

    m = rng.randint(n - 1, a * b)
    pool = sorted(
        (u, v) for u in side_a for v in side_b if (u, v) not in edges
    )
    extra = rng.sample(pool, m - (n - 1))
    edges.update(extra)
    return from_edges(n, sorted(edges))


def compression_fuzz(
    seed: int,
    trials: int = 1000,
    n_min: int = 4,
    n_max: int = 12,
    k_max: int = 4,
) -> dict:
    """Random compressions on random connected bipartite graphs.

    Checks, per trial: m_k never increases for 2 <= k <= k_max; a4 never
    increases when dis(u, v) >= 2; and all counts are unchanged when either
    private neighborhood is empty. Violations are collected verbatim.
    """
    rng = random.Random(seed)
    matching_checks = 0
    a4_checks = 0
    violations = []
    for trial in range(trials):
        g = random_connected_bipartite(rng, n_min, n_max)
        u, v = rng.sample(range(g.n), 2)
        report = audit_vertex_compression(g, u, v, k_max)
        matching_checks += len(report["matchings"])
        if report["a4"]["applicable"]:
            a4_checks += 1
        if report["violations"]:
            violations.append(
                {
                    "trial": trial,
                    "graph": g.edges(),
                    "u": u,
                    "v": v,
                    "report": report,
                }
            )
    return {
        "seed": seed,
        "trials": trials,
        "n_min": n_min,
        "n_max": n_max,
        "k_max": k_max,
        "matching_checks": matching_checks,
        "a4_checks": a4_checks,
        "violation_count": len(violations),
        "violations": violations,
    }
