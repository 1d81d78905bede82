"""Uniform hypergraph data model and basic combinatorics.

Vertices are integer labels 0..n-1. Edges are r-element subsets stored as
strictly increasing tuples; the edge list is kept in lexicographic order so
that equal hypergraphs compare equal structurally.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial

import numpy as np

__all__ = [
    "ValidationError",
    "CapacityError",
    "BudgetExceededError",
    "Hypergraph",
    "Partition",
    "EditDelta",
    "is_strong_independent",
    "is_k_partite",
    "transversal_number",
    "blow_up",
    "partition_score",
    "edit_delta",
    "canonical_form",
    "is_isomorphic",
    "intersection_lower_bound",
    "induced_subgraph",
    "covered_pair_adjacency",
    "cliques_of_size",
    "maximal_cliques",
]

CANONICAL_CAP = 12  # exact canonicalization refuses larger instances


class ValidationError(ValueError):
    """Raised when construction input violates a structural precondition."""


class CapacityError(RuntimeError):
    """Raised when an exact operation is asked to exceed its size cap."""


class BudgetExceededError(RuntimeError):
    """Raised when a search exhausts its node budget before deciding."""


def _canonical_edge(edge, r: int, n: int):
    e = tuple(sorted(edge))
    if len(e) != len(set(e)):
        raise ValidationError(f"edge {tuple(edge)} has a repeated vertex")
    if len(e) != r:
        raise ValidationError(f"edge {e} has {len(e)} vertices, expected {r}")
    if e[0] < 0 or e[-1] >= n:
        raise ValidationError(f"edge {e} has a vertex outside 0..{n - 1}")
    return e


@dataclass(frozen=True)
class Hypergraph:
    """Immutable r-uniform hypergraph on labeled vertices 0..n-1.

    The constructor accepts edges in any order, each as any iterable of
    vertices, and canonicalizes: edges become sorted tuples, the edge list
    is sorted lexicographically, duplicates are rejected.
    """

    n: int
    r: int
    edges: tuple = ()

    def __post_init__(self):
        if self.r < 2:
            raise ValidationError(f"uniformity r={self.r} must be >= 2")
        if self.n < self.r:
            raise ValidationError(f"need n >= r, got n={self.n}, r={self.r}")
        canon = []
        seen = set()
        for edge in self.edges:
            e = _canonical_edge(edge, self.r, self.n)
            if e in seen:
                raise ValidationError(f"duplicate edge {e}")
            seen.add(e)
            canon.append(e)
        canon.sort()
        object.__setattr__(self, "edges", tuple(canon))
        object.__setattr__(self, "_edge_set", frozenset(canon))

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @property
    def edge_set(self) -> frozenset:
        return self._edge_set

    def has_edge(self, edge) -> bool:
        return tuple(sorted(edge)) in self._edge_set

    def degree(self, v: int) -> int:
        """Number of edges containing v."""
        self._check_vertex(v)
        return sum(1 for e in self.edges if v in e)

    def codegree(self, u: int, v: int) -> int:
        """Number of edges containing both u and v (u != v)."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValidationError("codegree requires two distinct vertices")
        return sum(1 for e in self.edges if u in e and v in e)

    def link(self, v: int) -> frozenset:
        """Set of (r-1)-tuples e \\ {v} over edges e containing v."""
        self._check_vertex(v)
        return frozenset(
            tuple(w for w in e if w != v) for e in self.edges if v in e
        )

    def edges_at(self, v: int) -> tuple:
        return tuple(e for e in self.edges if v in e)

    def degrees(self) -> list:
        degs = [0] * self.n
        for e in self.edges:
            for v in e:
                degs[v] += 1
        return degs

    def add_edge(self, edge) -> "Hypergraph":
        e = _canonical_edge(edge, self.r, self.n)
        if e in self._edge_set:
            raise ValidationError(f"duplicate edge {e}")
        return Hypergraph(self.n, self.r, self.edges + (e,))

    def remove_edge(self, edge) -> "Hypergraph":
        e = tuple(sorted(edge))
        if e not in self._edge_set:
            raise ValidationError(f"edge {e} not present")
        return Hypergraph(self.n, self.r, tuple(f for f in self.edges if f != e))

    def with_edges(self, edges) -> "Hypergraph":
        return Hypergraph(self.n, self.r, tuple(edges))

    def relabel(self, perm) -> "Hypergraph":
        """Apply the vertex bijection v -> perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValidationError("relabeling must be a permutation of 0..n-1")
        return Hypergraph(
            self.n, self.r, tuple(tuple(perm[v] for v in e) for e in self.edges)
        )

    def _check_vertex(self, v: int):
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range 0..{self.n - 1}")

    def __iter__(self):
        return iter(self.edges)


@dataclass(frozen=True)
class Partition:
    """Assignment of every vertex to one of k classes (classes may be empty)."""

    k: int
    assignment: tuple

    def __post_init__(self):
        if self.k < 1:
            raise ValidationError("partition needs at least one class")
        assignment = tuple(self.assignment)
        for v, c in enumerate(assignment):
            if not 0 <= c < self.k:
                raise ValidationError(f"vertex {v} assigned to class {c} not in 0..{self.k - 1}")
        object.__setattr__(self, "assignment", assignment)

    @classmethod
    def from_blocks(cls, n: int, blocks) -> "Partition":
        """Build from an iterable of disjoint vertex sets covering 0..n-1."""
        assignment = [-1] * n
        blocks = [set(b) for b in blocks]
        for i, block in enumerate(blocks):
            for v in block:
                if not 0 <= v < n:
                    raise ValidationError(f"vertex {v} outside 0..{n - 1}")
                if assignment[v] != -1:
                    raise ValidationError(f"vertex {v} assigned twice")
                assignment[v] = i
        if any(c == -1 for c in assignment):
            missing = [v for v, c in enumerate(assignment) if c == -1]
            raise ValidationError(f"vertices {missing} not covered by any block")
        return cls(len(blocks), tuple(assignment))

    @property
    def n(self) -> int:
        return len(self.assignment)

    def blocks(self) -> list:
        out = [set() for _ in range(self.k)]
        for v, c in enumerate(self.assignment):
            out[c].add(v)
        return out

    def renumbered(self) -> "Partition":
        """Classes renumbered in order of first appearance (canonical under class permutation)."""
        mapping = {}
        for c in self.assignment:
            if c not in mapping:
                mapping[c] = len(mapping)
        # classes that never appear keep relative order at the end
        for c in range(self.k):
            if c not in mapping:
                mapping[c] = len(mapping)
        return Partition(self.k, tuple(mapping[c] for c in self.assignment))


@dataclass(frozen=True)
class EditDelta:
    """Labeled symmetric difference between two edge sets."""

    added: frozenset
    removed: frozenset

    def __post_init__(self):
        if self.added & self.removed:
            raise ValidationError("added and removed edge sets must be disjoint")

    @property
    def total(self) -> int:
        return len(self.added) + len(self.removed)


# ---------------------------------------------------------------------------
# pure operations


def is_strong_independent(H: Hypergraph, vertices) -> bool:
    """True iff every edge meets the vertex set at most once."""
    S = set(vertices)
    for v in S:
        H._check_vertex(v)
    return all(len(S.intersection(e)) < 2 for e in H.edges)


def is_k_partite(H: Hypergraph, sigma: Partition) -> bool:
    """True iff every edge meets every class of sigma at most once."""
    _check_cover(H, sigma)
    a = sigma.assignment
    for e in H.edges:
        classes = [a[v] for v in e]
        if len(set(classes)) != len(classes):
            return False
    return True


def partition_score(H: Hypergraph, sigma: Partition) -> int:
    """Sum over edges of the number of classes the edge meets."""
    _check_cover(H, sigma)
    a = sigma.assignment
    return sum(len({a[v] for v in e}) for e in H.edges)


def _check_cover(H: Hypergraph, sigma: Partition):
    if sigma.n != H.n:
        raise ValidationError(
            f"partition covers {sigma.n} vertices, hypergraph has {H.n}"
        )


def transversal_number(H: Hypergraph, cap: int = 30) -> int:
    """Exact minimum size of a vertex set meeting every edge.

    Branch-and-bound over uncovered edges; exponential, so instances with
    n > cap are rejected.
    """
    if H.n > cap:
        raise CapacityError(f"transversal_number capped at n <= {cap}, got n={H.n}")
    if H.m == 0:
        return 0
    edges = [frozenset(e) for e in H.edges]

    # greedy upper bound: repeatedly take a max-degree vertex
    remaining = list(edges)
    upper = 0
    while remaining:
        counts = {}
        for e in remaining:
            for v in e:
                counts[v] = counts.get(v, 0) + 1
        best = max(counts, key=lambda v: (counts[v], -v))
        remaining = [e for e in remaining if best not in e]
        upper += 1

    best_found = upper

    def search(uncovered, chosen):
        nonlocal best_found
        if not uncovered:
            best_found = min(best_found, chosen)
            return
        if chosen + 1 >= best_found:
            return
        e = min(uncovered, key=lambda f: sorted(f))
        for v in sorted(e):
            search([f for f in uncovered if v not in f], chosen + 1)

    search(edges, 0)
    return best_found


def blow_up(H: Hypergraph, sizes) -> Hypergraph:
    """Replace vertex v by a class of sizes[v] fresh vertices; each edge
    becomes the complete r-partite bundle across its classes.

    Labels are assigned block-wise in original vertex order. A zero size
    deletes the class.
    """
    sizes = list(sizes)
    if len(sizes) != H.n:
        raise ValidationError(f"need {H.n} sizes, got {len(sizes)}")
    if any(s < 0 for s in sizes):
        raise ValidationError("sizes must be nonnegative")
    offsets = [0] * H.n
    total = 0
    for v in range(H.n):
        offsets[v] = total
        total += sizes[v]
    if total < H.r:
        raise ValidationError(
            f"blow-up has {total} vertices, fewer than the uniformity {H.r}"
        )
    new_edges = []
    for e in H.edges:
        ranges = [range(offsets[v], offsets[v] + sizes[v]) for v in e]
        new_edges.extend(itertools.product(*ranges))
    return Hypergraph(total, H.r, new_edges)


def edit_delta(H: Hypergraph, T: Hypergraph) -> EditDelta:
    """Edges to add to and remove from H to reach T."""
    if H.n != T.n or H.r != T.r:
        raise ValidationError("edit_delta requires matching n and r")
    return EditDelta(
        added=frozenset(T.edge_set - H.edge_set),
        removed=frozenset(H.edge_set - T.edge_set),
    )


def induced_subgraph(H: Hypergraph, vertices) -> Hypergraph:
    """Subgraph on the given vertex set, relabeled to 0..|S|-1 in sorted order."""
    S = sorted(set(vertices))
    for v in S:
        H._check_vertex(v)
    if len(S) < H.r:
        raise ValidationError("induced subgraph smaller than the uniformity")
    pos = {v: i for i, v in enumerate(S)}
    keep = set(S)
    edges = [tuple(pos[v] for v in e) for e in H.edges if keep.issuperset(e)]
    return Hypergraph(len(S), H.r, edges)


def intersection_lower_bound(set_sizes, union_size: int) -> int:
    """Lower bound sum(|A_i|) - (k-1)|union A_i| on a k-fold intersection."""
    sizes = list(set_sizes)
    if any(s < 0 for s in sizes) or union_size < 0:
        raise ValidationError("sizes must be nonnegative")
    if any(s > union_size for s in sizes):
        raise ValidationError("every set size must be at most the union size")
    k = len(sizes)
    return sum(sizes) - (k - 1) * union_size


# ---------------------------------------------------------------------------
# canonical forms and isomorphism
#
# Two exact strategies behind one definition of correctness
# (label-invariance plus form-equality iff isomorphism, at fixed n and r):
#   n <= 7  -- vectorized minimum over all n! relabelings, via cached
#              permutation tables (fast enough for exhaustive enumeration);
#   n <= 12 -- degree/codegree color refinement, then backtracking over
#              color-preserving bijections with branch-and-bound pruning.
# Larger n fails loudly with CapacityError.

_SMALL_CANONICAL_N = 7


@lru_cache(maxsize=None)
def _edge_positions(n: int, r: int):
    """All r-subsets of 0..n-1 in lex order, with index lookup."""
    all_edges = list(itertools.combinations(range(n), r))
    index = {e: i for i, e in enumerate(all_edges)}
    return all_edges, index


@lru_cache(maxsize=8)
def _perm_weight_table(n: int, r: int):
    """Permutation action on edge positions, with bit weights.

    pos_table[pi, i] is where position i lands under permutation pi; the
    weight of position p is 2^(C-1-p), so that for equal edge counts a
    larger weighted sum corresponds to a lexicographically smaller edge list.
    """
    all_edges, index = _edge_positions(n, r)
    C = len(all_edges)
    perms = list(itertools.permutations(range(n)))
    pos_table = np.empty((len(perms), C), dtype=np.int64)
    for pi, perm in enumerate(perms):
        row = pos_table[pi]
        for i, e in enumerate(all_edges):
            row[i] = index[tuple(sorted(perm[v] for v in e))]
    return perms, pos_table, (1 << (C - 1 - pos_table))


def _canonical_small(H: Hypergraph):
    all_edges, index = _edge_positions(H.n, H.r)
    if not H.edges:
        return ()
    perms, _pos, weights = _perm_weight_table(H.n, H.r)
    positions = [index[e] for e in H.edges]
    scores = weights[:, positions].sum(axis=1)
    best = int(np.argmax(scores))
    perm = perms[best]
    return tuple(sorted(tuple(sorted(perm[v] for v in e)) for e in H.edges))


def _stable_colors(H: Hypergraph):
    """Isomorphism-invariant vertex colors via degree/codegree refinement."""
    n = H.n
    codeg = [[0] * n for _ in range(n)]
    for e in H.edges:
        for u, v in itertools.combinations(e, 2):
            codeg[u][v] += 1
            codeg[v][u] += 1
    colors = _rank([(d,) for d in H.degrees()])
    while True:
        sigs = [
            (colors[v], tuple(sorted((colors[u], codeg[v][u]) for u in range(n) if u != v)))
            for v in range(n)
        ]
        new = _rank(sigs)
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _rank(signatures):
    order = {s: i for i, s in enumerate(sorted(set(signatures)))}
    return [order[s] for s in signatures]


def _canonical_refined(H: Hypergraph):
    """Colex-maximal indicator over color-preserving bijections.

    Vertices are assigned target labels class block by class block (classes
    ordered by invariant color); within the blocks all orders are explored
    with incremental pruning against the incumbent.
    """
    n, r = H.n, H.r
    if not H.edges:
        return ()
    colors = _stable_colors(H)
    classes = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    order = [classes[c] for c in sorted(classes)]
    slots = [v for block in order for v in block]  # source vertices in class order
    block_of = []
    for bi, block in enumerate(order):
        block_of.extend([bi] * len(block))

    edge_set = H.edge_set
    best: list = [None]

    # target[t] = source vertex assigned label t
    target = [-1] * n

    def new_row(t):
        # indicator over r-sets with max label t, smaller labels already fixed
        row = []
        src_t = target[t]
        for rest in itertools.combinations(range(t), r - 1):
            e = tuple(sorted([target[i] for i in rest] + [src_t]))
            row.append(1 if e in edge_set else 0)
        return row

    def dfs(t, used, prefix):
        if t == n:
            if best[0] is None:
                best[0] = (list(prefix), target.copy())
            return
        bi = block_of[t]
        for v in order[bi]:
            if v in used:
                continue
            target[t] = v
            row = new_row(t) if t + 1 >= r else []
            if best[0] is not None:
                ref = best[0][0][len(prefix):len(prefix) + len(row)]
                if row < ref:
                    continue
                if row > ref:
                    # incumbent dominated; this subtree will install a new one
                    best[0] = None
            used.add(v)
            prefix.extend(row)
            dfs(t + 1, used, prefix)
            del prefix[len(prefix) - len(row):]
            used.remove(v)
        target[t] = -1

    dfs(0, set(), [])
    _, assignment = best[0]
    inv = [0] * n
    for t, v in enumerate(assignment):
        inv[v] = t
    return tuple(sorted(tuple(sorted(inv[v] for v in e)) for e in H.edges))


def canonical_form(H: Hypergraph):
    """Label-invariant canonical edge list; equal forms iff isomorphic (same n, r)."""
    if H.n > CANONICAL_CAP:
        raise CapacityError(
            f"exact canonical form capped at n <= {CANONICAL_CAP}, got n={H.n}"
        )
    if H.n <= _SMALL_CANONICAL_N:
        return _canonical_small(H)
    return _canonical_refined(H)


def is_isomorphic(H1: Hypergraph, H2: Hypergraph) -> bool:
    if H1.n != H2.n or H1.r != H2.r:
        return False
    if H1.m != H2.m or sorted(H1.degrees()) != sorted(H2.degrees()):
        return False
    return canonical_form(H1) == canonical_form(H2)


# ---------------------------------------------------------------------------
# covered-pair auxiliary graph and clique search (used by detection and by
# the Lagrangian support enumeration)


def covered_pair_adjacency(H: Hypergraph) -> list:
    """adj[v] = vertices sharing an edge with v (codegree >= 1)."""
    adj = [set() for _ in range(H.n)]
    for e in H.edges:
        for u, v in itertools.combinations(e, 2):
            adj[u].add(v)
            adj[v].add(u)
    return adj


def cliques_of_size(adj: list, t: int):
    """Yield all t-cliques of a simple graph in lexicographic order."""
    n = len(adj)
    if t == 0:
        yield ()
        return

    def extend(clique, candidates):
        if len(clique) == t:
            yield tuple(clique)
            return
        need = t - len(clique)
        for i, v in enumerate(candidates):
            if len(candidates) - i < need:
                return
            yield from extend(clique + [v], [u for u in candidates[i + 1:] if u in adj[v]])

    yield from extend([], list(range(n)))


def maximal_cliques(adj: list):
    """Bron-Kerbosch with pivoting; yields maximal cliques as sorted tuples."""
    n = len(adj)

    def bk(R, P, X):
        if not P and not X:
            yield tuple(sorted(R))
            return
        pivot = max(P | X, key=lambda v: len(adj[v] & P))
        for v in sorted(P - adj[pivot]):
            yield from bk(R | {v}, P & adj[v], X & adj[v])
            P = P - {v}
            X = X | {v}

    yield from bk(set(), set(range(n)), set())


def falling_factorial(k: int, r: int) -> int:
    out = 1
    for i in range(r):
        out *= k - i
    return out


def binom(n: int, k: int) -> int:
    if k < 0 or n < 0:
        return 0
    return comb(n, k)


def r_factorial(r: int) -> int:
    return factorial(r)
