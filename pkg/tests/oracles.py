"""Independent brute-force oracles the library implementations are checked against.

Everything here favors obviousness over speed: straight enumeration of
injections, edge subsets, vertex subsets, and colorings.  None of it shares
code with the library search paths.
"""

from __future__ import annotations

import itertools

import numpy as np

from ramseylab.graphs import Graph


def injection_embeds(host: Graph, pattern: Graph) -> bool:
    """Does pattern embed into host?  Checked over all injective vertex maps."""
    if pattern.n > host.n:
        return False
    for perm in itertools.permutations(range(host.n), pattern.n):
        if all(host.has_edge(perm[u], perm[v]) for u, v in pattern.edges):
            return True
    return False


def injection_embeds_colored(host: Graph, pattern: Graph, allowed: set) -> bool:
    allowed = {tuple(sorted(e)) for e in allowed}
    if pattern.n > host.n:
        return False
    for perm in itertools.permutations(range(host.n), pattern.n):
        if all(tuple(sorted((perm[u], perm[v]))) in allowed for u, v in pattern.edges):
            return True
    return False


def brute_clique_number(g: Graph) -> int:
    best = 0
    for size in range(g.n, 0, -1):
        if size <= best:
            break
        for combo in itertools.combinations(range(g.n), size):
            if all(g.has_edge(u, v) for u, v in itertools.combinations(combo, 2)):
                best = size
                break
    return best


def brute_max_matching_size(g: Graph) -> int:
    best = 0
    for r in range(len(g.edges), 0, -1):
        if r <= best:
            break
        for combo in itertools.combinations(g.edges, r):
            touched = set()
            ok = True
            for u, v in combo:
                if u in touched or v in touched:
                    ok = False
                    break
                touched.update((u, v))
            if ok:
                best = r
                break
    return best


def brute_has_k_factor(g: Graph, k: int) -> bool:
    """Vectorized scan of all edge subsets for an exactly-k-regular one."""
    m = g.m
    if m > 22:
        raise ValueError("oracle capped at 22 edges")
    if k == 0:
        return True
    subsets = np.arange(1 << m, dtype=np.uint32)
    ok = np.ones(1 << m, dtype=bool)
    for v in range(g.n):
        vmask = np.uint32(sum(1 << i for i, e in enumerate(g.edges) if v in e))
        ok &= np.bitwise_count(subsets & vmask) == k
    return bool(ok.any())


def brute_k_colorable(g: Graph, k: int) -> bool:
    for assignment in itertools.product(range(k), repeat=g.n):
        if all(assignment[u] != assignment[v] for u, v in g.edges):
            return True
    return False


def brute_hypergraph_cycles(hyperedges, max_len: int) -> list[int]:
    """All hypergraph cycle lengths up to max_len, by direct sequence enumeration.

    A cycle of length s is a sequence of s distinct hyperedges and s distinct
    vertices with v_i in e_i and e_{i+1} (cyclically).
    """
    edges = [set(e) for e in hyperedges]
    found = []
    for s in range(2, max_len + 1):
        for combo in itertools.permutations(range(len(edges)), s):
            if combo[0] != min(combo):
                continue
            link_sets = [edges[combo[i]] & edges[combo[(i + 1) % s]] for i in range(s)]
            for vs in itertools.product(*[sorted(ls) for ls in link_sets]):
                if len(set(vs)) == s:
                    found.append(s)
                    break
            else:
                continue
            break
    return found
