"""Deterministic generators for the named extremal hypergraphs.

Labeling conventions are fixed so outputs are bit-reproducible: core
vertices come first, enlargement blocks follow in pair-lexicographic order,
partition classes take consecutive ascending labels.
"""

from __future__ import annotations

import itertools
import random
from math import comb

from .hcore import Hypergraph, Partition, ValidationError, blow_up

__all__ = [
    "turan_count",
    "turan_hypergraph",
    "turan_partition",
    "complete_r_graph",
    "expanded_clique",
    "generalized_fan",
    "complete_k_partite",
    "semibipartite_max",
    "semibipartite_partition",
    "g62",
    "g62_blowup",
    "g62_extremal",
    "m1_pattern",
    "random_hypergraph",
]


def _part_sizes(n: int, k: int) -> list:
    # part i (1-based) has floor((n+i-1)/k) vertices; sizes differ by <= 1
    return [(n + i) // k for i in range(k)]


def turan_count(n: int, k: int, r: int) -> int:
    """Edge count of the balanced complete k-partite r-graph on n vertices."""
    if r < 2 or k < r:
        raise ValidationError(f"need k >= r >= 2, got k={k}, r={r}")
    if n < 1:
        raise ValidationError("need n >= 1")
    sizes = _part_sizes(n, k)
    total = 0
    for S in itertools.combinations(range(k), r):
        prod = 1
        for i in S:
            prod *= sizes[i]
        total += prod
    return total


def turan_partition(n: int, k: int) -> Partition:
    """Defining partition of turan_hypergraph: consecutive ascending blocks."""
    sizes = _part_sizes(n, k)
    assignment = []
    for i, s in enumerate(sizes):
        assignment.extend([i] * s)
    return Partition(k, tuple(assignment))


def turan_hypergraph(n: int, k: int, r: int) -> Hypergraph:
    """Balanced complete k-partite r-graph; parts take consecutive labels."""
    if r < 2 or k < r:
        raise ValidationError(f"need k >= r >= 2, got k={k}, r={r}")
    if n < k:
        raise ValidationError(f"need n >= k so no part is empty, got n={n}, k={k}")
    return complete_k_partite(_part_sizes(n, k), r)


def complete_r_graph(t: int, r: int) -> Hypergraph:
    """All C(t, r) edges on t vertices."""
    if t < r:
        raise ValidationError(f"need t >= r, got t={t}, r={r}")
    return Hypergraph(t, r, itertools.combinations(range(t), r))


def expanded_clique(t: int, r: int, disjoint_enlargements: bool = True) -> Hypergraph:
    """K_t with each pair enlarged by a fresh (r-2)-set.

    Enlargement sets are pairwise disjoint by default, placed after the core
    in pair-lexicographic order. With disjoint_enlargements=False every pair
    shares one common enlargement block instead (an experimental weaker
    reading; not used by any standard construction here).
    """
    if r < 2 or t < r:
        raise ValidationError(f"need t >= r >= 2, got t={t}, r={r}")
    pairs = list(itertools.combinations(range(t), 2))
    return _enlarge_pairs(t, r, pairs, base_edges=[], disjoint=disjoint_enlargements)


def generalized_fan(t: int, r: int, disjoint_enlargements: bool = True) -> Hypergraph:
    """One edge on the first r core vertices plus enlarged edges covering the
    remaining core pairs."""
    if r < 2 or t < r:
        raise ValidationError(f"need t >= r >= 2, got t={t}, r={r}")
    inner = tuple(range(r))
    inner_pairs = set(itertools.combinations(range(r), 2))
    pairs = [p for p in itertools.combinations(range(t), 2) if p not in inner_pairs]
    return _enlarge_pairs(t, r, pairs, base_edges=[inner], disjoint=disjoint_enlargements)


def _enlarge_pairs(t, r, pairs, base_edges, disjoint):
    edges = list(base_edges)
    if r == 2:
        edges.extend(pairs)
        return Hypergraph(t, 2, edges)
    block = r - 2
    if disjoint:
        n = t + block * len(pairs)
        nxt = t
        for (i, j) in pairs:
            fresh = tuple(range(nxt, nxt + block))
            nxt += block
            edges.append((i, j) + fresh)
    else:
        n = t + block
        fresh = tuple(range(t, t + block))
        for (i, j) in pairs:
            edges.append((i, j) + fresh)
    return Hypergraph(n, r, edges)


def complete_k_partite(sizes, r: int) -> Hypergraph:
    """All edges meeting r distinct parts, one vertex from each."""
    sizes = list(sizes)
    k = len(sizes)
    if r < 2 or k < r:
        raise ValidationError(f"need at least r parts, got k={k}, r={r}")
    if any(s < 1 for s in sizes):
        raise ValidationError("all part sizes must be >= 1")
    parts = []
    start = 0
    for s in sizes:
        parts.append(range(start, start + s))
        start += s
    edges = []
    for combo in itertools.combinations(range(k), r):
        edges.extend(itertools.product(*(parts[i] for i in combo)))
    return Hypergraph(start, r, edges)


def semibipartite_max(n: int) -> Hypergraph:
    """Edge-maximal semibipartite 3-graph: A = first floor(n/3) labels,
    edges are the triples with exactly one vertex in A."""
    if n < 3:
        raise ValidationError(f"need n >= 3, got n={n}")
    a = n // 3
    A = range(a)
    B = range(a, n)
    edges = [
        (u,) + pair for u in A for pair in itertools.combinations(B, 2)
    ]
    return Hypergraph(n, 3, edges)


def semibipartite_partition(n: int) -> Partition:
    a = n // 3
    return Partition(2, tuple(0 if v < a else 1 for v in range(n)))


_G62_COMPLEMENT = ((0, 1, 2), (0, 1, 5), (2, 3, 4), (3, 4, 5))


def g62() -> Hypergraph:
    """The 16-edge 3-graph on 6 vertices whose complement has 4 edges."""
    missing = set(_G62_COMPLEMENT)
    edges = [e for e in itertools.combinations(range(6), 3) if e not in missing]
    return Hypergraph(6, 3, edges)


def g62_blowup(part_sizes) -> Hypergraph:
    """Blow-up of g62 with the given six class sizes."""
    part_sizes = list(part_sizes)
    if len(part_sizes) != 6:
        raise ValidationError(f"need exactly 6 part sizes, got {len(part_sizes)}")
    if any(s < 1 for s in part_sizes):
        raise ValidationError("all part sizes must be >= 1")
    return blow_up(g62(), part_sizes)


def g62_extremal(n: int) -> Hypergraph:
    """Edge-maximal blow-up of g62 on n vertices.

    Parts get floor(n/6) or ceil(n/6) vertices; the placement of the larger
    parts is chosen by exhausting all C(6, n mod 6) placements and keeping
    the edge maximum (lexicographically first among ties).
    """
    if n < 6:
        raise ValidationError(f"need n >= 6, got n={n}")
    q, extra = divmod(n, 6)
    if extra == 0:
        return g62_blowup([q] * 6)
    best = None
    for big in itertools.combinations(range(6), extra):
        sizes = [q + 1 if i in big else q for i in range(6)]
        G = g62_blowup(sizes)
        if best is None or G.m > best.m:
            best = G
    return best


def m1_pattern() -> Hypergraph:
    """Complete 3-graph on five vertices with one edge removed."""
    edges = [e for e in itertools.combinations(range(5), 3) if e != (2, 3, 4)]
    return Hypergraph(5, 3, edges)


def random_hypergraph(n: int, r: int, edge_probability: float, seed: int) -> Hypergraph:
    """Each r-set included independently with the given probability."""
    if not 0.0 <= edge_probability <= 1.0:
        raise ValidationError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [
        e for e in itertools.combinations(range(n), r) if rng.random() < edge_probability
    ]
    return Hypergraph(n, r, edges)
