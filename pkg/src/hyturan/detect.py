"""Containment and freeness tests for the forbidden structures.

Family containment is decided through core characterizations (pair
coverage, plus an inner edge for the fan family) rather than by
enumerating family members; explicit patterns use exact backtracking
embedding search with degree and codegree pruning.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .hcore import (
    BudgetExceededError,
    Hypergraph,
    ValidationError,
    covered_pair_adjacency,
    cliques_of_size,
    induced_subgraph,
    transversal_number,
)
from . import construct

__all__ = [
    "Pattern",
    "contains_subgraph",
    "contains_hom",
    "clique_family_core",
    "fan_family_core",
    "contains_berge_clique",
    "is_semibipartite_colorable",
    "is_g62_colorable",
    "contains_m1",
    "find_pattern",
    "is_free",
    "MFamilyProbe",
    "m_family_probe",
]

EMBED_VERTEX_CAP = 64
DEFAULT_NODE_BUDGET = 2_000_000


@dataclass(frozen=True)
class Pattern:
    """A forbidden-structure specification.

    kind is one of: explicit, expanded_clique, generalized_fan,
    clique_family, fan_family, berge_clique, m1, semibipartite_colorable,
    g62_colorable.
    """

    kind: str
    t: int | None = None
    r: int | None = None
    graph: Hypergraph | None = None

    _KINDS = (
        "explicit",
        "expanded_clique",
        "generalized_fan",
        "clique_family",
        "fan_family",
        "berge_clique",
        "m1",
        "semibipartite_colorable",
        "g62_colorable",
    )

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValidationError(f"unknown pattern kind {self.kind!r}")
        if self.kind == "explicit" and self.graph is None:
            raise ValidationError("explicit pattern needs a hypergraph")
        if self.kind in ("expanded_clique", "generalized_fan") and (
            self.t is None or self.r is None
        ):
            raise ValidationError(f"{self.kind} pattern needs t and r")
        if self.kind in ("clique_family", "fan_family", "berge_clique") and self.t is None:
            raise ValidationError(f"{self.kind} pattern needs t")

    @classmethod
    def explicit(cls, F: Hypergraph) -> "Pattern":
        return cls("explicit", graph=F)

    @classmethod
    def expanded_clique(cls, t: int, r: int) -> "Pattern":
        return cls("expanded_clique", t=t, r=r)

    @classmethod
    def generalized_fan(cls, t: int, r: int) -> "Pattern":
        return cls("generalized_fan", t=t, r=r)

    @classmethod
    def clique_family(cls, t: int, r: int | None = None) -> "Pattern":
        return cls("clique_family", t=t, r=r)

    @classmethod
    def fan_family(cls, t: int, r: int | None = None) -> "Pattern":
        return cls("fan_family", t=t, r=r)

    @classmethod
    def berge_clique(cls, t: int) -> "Pattern":
        return cls("berge_clique", t=t)

    def describe(self) -> dict:
        out = {"kind": self.kind}
        if self.t is not None:
            out["t"] = self.t
        if self.r is not None:
            out["r"] = self.r
        if self.graph is not None:
            out["graph"] = {"n": self.graph.n, "r": self.graph.r,
                            "edges": [list(e) for e in self.graph.edges]}
        return out


# ---------------------------------------------------------------------------
# explicit subgraph embedding


def contains_subgraph(H: Hypergraph, F: Hypergraph,
                      node_budget: int = DEFAULT_NODE_BUDGET):
    """Injective vertex map sending every edge of F to an edge of H, or None.

    Backtracking ordered rarest-first by degree with connectivity preference;
    prunes on degree and pairwise codegree domination.
    """
    if H.r != F.r:
        raise ValidationError(f"uniformity mismatch: host r={H.r}, pattern r={F.r}")
    if H.n > EMBED_VERTEX_CAP:
        raise BudgetExceededError(
            f"embedding host capped at n <= {EMBED_VERTEX_CAP}, got n={H.n}")
    if F.n > H.n or F.m > H.m:
        return None
    if F.m == 0:
        return {v: v for v in range(F.n)}

    deg_F = F.degrees()
    deg_H = H.degrees()
    if sorted(deg_F, reverse=True) > sorted(deg_H, reverse=True)[: F.n]:
        return None

    codeg_F = _codegree_table(F)
    codeg_H = _codegree_table(H)

    # order pattern vertices: highest degree first, then prefer vertices
    # adjacent to already-ordered ones (keeps partial edges checkable early)
    order = []
    placed = set()
    remaining = set(range(F.n))
    while remaining:
        adjacent = [v for v in remaining if any(codeg_F[v].get(u, 0) for u in placed)]
        pool = adjacent if adjacent else list(remaining)
        v = max(pool, key=lambda w: (deg_F[w], -w))
        order.append(v)
        placed.add(v)
        remaining.remove(v)

    pos = {v: i for i, v in enumerate(order)}
    # edges become checkable once their last vertex (in the order) is placed
    edges_done_at = [[] for _ in range(F.n)]
    for e in F.edges:
        last = max(pos[v] for v in e)
        edges_done_at[last].append(e)

    mapping = {}
    used = set()
    budget = [node_budget]

    def feasible(fv, hv):
        if deg_F[fv] > deg_H[hv]:
            return False
        for fu, c in codeg_F[fv].items():
            if fu in mapping and codeg_H[mapping[fu]].get(hv, 0) < c:
                return False
        return True

    def extend(idx):
        if idx == len(order):
            return True
        if budget[0] <= 0:
            raise BudgetExceededError(
                f"embedding search exceeded {node_budget} nodes")
        fv = order[idx]
        for hv in range(H.n):
            if hv in used:
                continue
            budget[0] -= 1
            if not feasible(fv, hv):
                continue
            mapping[fv] = hv
            used.add(hv)
            ok = all(
                tuple(sorted(mapping[u] for u in e)) in H.edge_set
                for e in edges_done_at[idx]
            )
            if ok and extend(idx + 1):
                return True
            del mapping[fv]
            used.remove(hv)
        return False

    if extend(0):
        return dict(mapping)
    return None


def _codegree_table(G: Hypergraph):
    table = [dict() for _ in range(G.n)]
    for e in G.edges:
        for u, v in itertools.combinations(e, 2):
            table[u][v] = table[u].get(v, 0) + 1
            table[v][u] = table[v].get(u, 0) + 1
    return table


def contains_hom(H: Hypergraph, F: Hypergraph,
                 node_budget: int = DEFAULT_NODE_BUDGET):
    """Edge-preserving (not necessarily injective) map from F into H, or None."""
    if H.r != F.r:
        raise ValidationError(f"uniformity mismatch: host r={H.r}, pattern r={F.r}")
    if F.m == 0:
        return {v: 0 for v in range(F.n)} if H.n > 0 else None
    if H.m == 0:
        return None

    adj_H = covered_pair_adjacency(H)
    codeg_F = _codegree_table(F)

    order = sorted(range(F.n), key=lambda v: (-F.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    edges_done_at = [[] for _ in range(F.n)]
    for e in F.edges:
        last = max(pos[v] for v in e)
        edges_done_at[last].append(e)

    mapping = {}
    budget = [node_budget]

    def extend(idx):
        if idx == len(order):
            return True
        if budget[0] <= 0:
            raise BudgetExceededError(f"homomorphism search exceeded {node_budget} nodes")
        fv = order[idx]
        for hv in range(H.n):
            budget[0] -= 1
            # vertices sharing an F-edge must land on distinct covered vertices
            ok = True
            for fu in codeg_F[fv]:
                if fu in mapping:
                    hu = mapping[fu]
                    if hu == hv or hu not in adj_H[hv]:
                        ok = False
                        break
            if not ok:
                continue
            mapping[fv] = hv
            images_ok = True
            for e in edges_done_at[idx]:
                img = set(mapping[u] for u in e)
                if len(img) != H.r or tuple(sorted(img)) not in H.edge_set:
                    images_ok = False
                    break
            if images_ok and extend(idx + 1):
                return True
            del mapping[fv]
        return False

    if extend(0):
        return dict(mapping)
    return None


# ---------------------------------------------------------------------------
# family cores


def clique_family_core(H: Hypergraph, t: int):
    """First t-set (lex order) whose pairs are all covered by edges, or None."""
    if t > H.n:
        return None
    adj = covered_pair_adjacency(H)
    for clique in cliques_of_size(adj, t):
        return clique
    return None


def fan_family_core(H: Hypergraph, t: int):
    """A t-set with all pairs covered and at least one edge of H inside,
    found by a deterministic scan over edges and extensions, or None.

    In the degenerate regime t <= r the inner-edge requirement makes every
    edge (extended to a covered t-set) a candidate core; the intended use
    is t >= r + 1.
    """
    if t > H.n or t < H.r:
        return None
    adj = covered_pair_adjacency(H)
    seen = set()
    for e in H.edges:
        common = set(range(H.n)) - set(e)
        for u in e:
            common &= adj[u]
        need = t - H.r
        for extra in itertools.combinations(sorted(common), need):
            core = tuple(sorted(set(e) | set(extra)))
            if core in seen:
                continue
            seen.add(core)
            if all(v in adj[u] for u, v in itertools.combinations(core, 2)):
                return core
    return None


# ---------------------------------------------------------------------------
# Berge cliques


def contains_berge_clique(H: Hypergraph, t: int):
    """A t-set C plus an injective assignment of a distinct containing edge
    to every pair of C, or None.

    Candidate cores are the t-cliques of the covered-pair graph; the
    distinctness condition is a bipartite matching decided by augmenting
    paths (Hall's condition).
    """
    if t < 2:
        raise ValidationError("berge clique needs t >= 2")
    if t > H.n:
        return None
    adj = covered_pair_adjacency(H)
    pair_edges = {}
    for idx, e in enumerate(H.edges):
        for u, v in itertools.combinations(e, 2):
            pair_edges.setdefault((u, v), []).append(idx)
    for core in cliques_of_size(adj, t):
        pairs = list(itertools.combinations(core, 2))
        candidates = [pair_edges.get(p, []) for p in pairs]
        match = _bipartite_match(candidates)
        if match is not None:
            return core, {pairs[i]: H.edges[match[i]] for i in range(len(pairs))}
    return None


def _bipartite_match(candidates):
    """Kuhn's algorithm: match every left node (pair index) to a distinct
    right node (edge index); returns matches or None."""
    matched_right = {}
    match_left = [None] * len(candidates)

    def augment(i, visited):
        for e in candidates[i]:
            if e in visited:
                continue
            visited.add(e)
            if e not in matched_right or augment(matched_right[e], visited):
                matched_right[e] = i
                match_left[i] = e
                return True
        return False

    order = sorted(range(len(candidates)), key=lambda i: len(candidates[i]))
    for i in order:
        if not augment(i, set()):
            return None
    return match_left


# ---------------------------------------------------------------------------
# 3-graph colorability tests


def is_semibipartite_colorable(F: Hypergraph):
    """Partition A|B with every edge having exactly one vertex in A, or None.

    Backtracking two-coloring with per-edge count propagation; returns the
    lexicographically first valid assignment (A preferred)."""
    if F.r != 3:
        raise ValidationError("semibipartite colorability is defined for 3-graphs")
    n = F.n
    edges = [list(e) for e in F.edges]
    at = [[] for _ in range(n)]
    for i, e in enumerate(edges):
        for v in e:
            at[v].append(i)
    a_count = [0] * len(edges)
    assigned = [0] * len(edges)
    color = [-1] * n  # 0 = A, 1 = B

    def consistent(i):
        if a_count[i] > 1:
            return False
        if assigned[i] == 3 and a_count[i] != 1:
            return False
        return True

    def place(v, c):
        color[v] = c
        for i in at[v]:
            assigned[i] += 1
            if c == 0:
                a_count[i] += 1

    def unplace(v, c):
        color[v] = -1
        for i in at[v]:
            assigned[i] -= 1
            if c == 0:
                a_count[i] -= 1

    def dfs(v):
        if v == n:
            return all(a_count[i] == 1 for i in range(len(edges)))
        for c in (0, 1):
            place(v, c)
            if all(consistent(i) for i in at[v]) and dfs(v + 1):
                return True
            unplace(v, c)
        return False

    if dfs(0):
        from .hcore import Partition

        return Partition(2, tuple(color))
    return None


def is_g62_colorable(F: Hypergraph, node_budget: int = DEFAULT_NODE_BUDGET):
    """F is a subgraph of a blow-up of g62 iff it maps homomorphically into
    g62; returns the homomorphism or None."""
    if F.r != 3:
        raise ValidationError("g62 colorability is defined for 3-graphs")
    return contains_hom(construct.g62(), F, node_budget=node_budget)


def contains_m1(H: Hypergraph, node_budget: int = DEFAULT_NODE_BUDGET):
    """Embedding of the 9-edge pattern (K_5 minus an edge, 3-uniform), or None."""
    if H.r != 3:
        raise ValidationError("the M_1 pattern is 3-uniform")
    return contains_subgraph(H, construct.m1_pattern(), node_budget=node_budget)


# ---------------------------------------------------------------------------
# pattern dispatch


def find_pattern(H: Hypergraph, pattern: Pattern,
                 node_budget: int = DEFAULT_NODE_BUDGET):
    """Witness for the pattern inside H, or None.

    Witness shapes: an embedding dict, a core tuple, a (core, matching)
    pair, a Partition for semibipartite colorability, or a homomorphism
    dict for g62 colorability.
    """
    k = pattern.kind
    if k == "explicit":
        return contains_subgraph(H, pattern.graph, node_budget=node_budget)
    if k == "expanded_clique":
        F = construct.expanded_clique(pattern.t, pattern.r)
        return contains_subgraph(H, F, node_budget=node_budget)
    if k == "generalized_fan":
        F = construct.generalized_fan(pattern.t, pattern.r)
        return contains_subgraph(H, F, node_budget=node_budget)
    if k == "clique_family":
        return clique_family_core(H, pattern.t)
    if k == "fan_family":
        return fan_family_core(H, pattern.t)
    if k == "berge_clique":
        return contains_berge_clique(H, pattern.t)
    if k == "m1":
        return contains_m1(H, node_budget=node_budget)
    if k == "semibipartite_colorable":
        return is_semibipartite_colorable(H)
    if k == "g62_colorable":
        return is_g62_colorable(H, node_budget=node_budget)
    raise ValidationError(f"unknown pattern kind {k!r}")


def is_free(H: Hypergraph, pattern: Pattern,
            node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
    return find_pattern(H, pattern, node_budget=node_budget) is None


# ---------------------------------------------------------------------------
# best-effort probe for the Liu-Mubayi family
#
# The full family is out of reach of a complete decision procedure here;
# this probe is sound in one direction (empty probe means no M_1 member and
# no M_2 member) while the M_3 filter is heuristic evidence only.


@dataclass(frozen=True)
class MFamilyProbe:
    m1_embedding: dict | None
    m2_cores: tuple
    m3_suspect_cores: tuple

    @property
    def clean(self) -> bool:
        return (self.m1_embedding is None and not self.m2_cores
                and not self.m3_suspect_cores)


def m_family_probe(H: Hypergraph, max_cores: int = 200) -> MFamilyProbe:
    """Desk-scale screening for the three components of the family.

    M_1: exact. M_2: every 7-set with all pairs covered whose induced
    subgraph has transversal number >= 2 (necessary for containment, so an
    empty list certifies M_2-freeness). M_3: 6-sets with all pairs covered
    whose covering-edge union is neither semibipartite- nor g62-colorable;
    suspicion only, not proof of containment.
    """
    if H.r != 3:
        raise ValidationError("the family probe is defined for 3-graphs")
    m1 = contains_m1(H)
    adj = covered_pair_adjacency(H)

    m2 = []
    for core in cliques_of_size(adj, 7):
        if transversal_number(induced_subgraph(H, core)) >= 2:
            m2.append(core)
        if len(m2) >= max_cores:
            break

    m3 = []
    count = 0
    for core in cliques_of_size(adj, 6):
        count += 1
        if count > max_cores:
            break
        cset = set(core)
        union_edges = [e for e in H.edges if len(cset.intersection(e)) >= 2]
        sub = Hypergraph(H.n, 3, union_edges)
        if is_semibipartite_colorable(sub) is None and is_g62_colorable(sub) is None:
            m3.append(core)
    return MFamilyProbe(m1, tuple(m2), tuple(m3))
