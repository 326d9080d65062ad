"""Reference checks written independently of the package internals.

None of these reuse ``square_graph`` or the backtracking colourer: distance
is measured by networkx BFS and colourings are brute-forced.
"""

from __future__ import annotations

import itertools
import random

import networkx as nx

from tdma_psa import BLACK, GRAY, WHITE, Topology


def to_nx(t: Topology) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(t.nodes)
    g.add_edges_from(t.edges)
    return g


def bfs_within_two(t: Topology, u: int) -> set[int]:
    dist = nx.single_source_shortest_path_length(to_nx(t), u, cutoff=2)
    return {v for v, d in dist.items() if 0 < d <= 2}


def naive_is_valid(t: Topology, frames) -> bool:
    """Pairwise check over every frame and every node pair, distances by BFS."""
    g = to_nx(t)
    dist = dict(nx.all_pairs_shortest_path_length(g, cutoff=2))
    covered = set()
    for f in frames:
        owners = [i + 1 for i, x in enumerate(f) if x is BLACK]
        covered.update(owners)
        for u in owners:
            for v in owners:
                if u != v and v in dist[u]:
                    return False
    return covered == set(t.nodes)


def brute_force_chromatic_square(t: Topology) -> int:
    """Smallest k such that some k-colouring of the nodes has no conflict within two hops."""
    n = t.node_count
    conflicts = [(u, v) for u in t.nodes for v in bfs_within_two(t, u) if u < v]
    for k in range(1, n + 1):
        for colours in itertools.product(range(k), repeat=n - 1):
            c = (0, *colours)
            if all(c[u - 1] != c[v - 1] for u, v in conflicts):
                return k
    return n


MATCH_TABLE = {
    # (a, b): does slot pair satisfy one of the three clauses?
    (GRAY, GRAY): True,
    (GRAY, BLACK): True,
    (GRAY, WHITE): True,
    (BLACK, GRAY): True,
    (BLACK, BLACK): False,
    (BLACK, WHITE): False,
    (WHITE, GRAY): True,
    (WHITE, WHITE): True,
    (WHITE, BLACK): False,
}


def table_match(a, b) -> bool:
    return all(MATCH_TABLE[(x, y)] for x, y in zip(a, b))


def random_topology(rng: random.Random, n: int, p: float) -> Topology:
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]
    return Topology.from_edges(n, edges)


def path(n: int) -> Topology:
    return Topology.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Topology:
    return Topology.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def edgeless(n: int) -> Topology:
    return Topology(n)
