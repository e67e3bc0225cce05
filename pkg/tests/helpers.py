"""Shared test utilities: a seeded random-graph model and a deliberately
naive induced-4-cycle oracle that shares no code with the package."""

from __future__ import annotations

import random
from itertools import combinations

from blowup_census import Graph


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Seeded G(n, p); deterministic across platforms (Mersenne Twister)."""
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def brute_force_c4_count(g: Graph) -> int:
    """Reference oracle: test every 4-subset directly against the definition."""
    count = 0
    for quad in combinations(range(g.n), 4):
        degs = dict.fromkeys(quad, 0)
        edges = 0
        for u, v in combinations(quad, 2):
            if (g.rows[u] >> v) & 1:
                edges += 1
                degs[u] += 1
                degs[v] += 1
        if edges == 4 and all(d == 2 for d in degs.values()):
            count += 1
    return count
