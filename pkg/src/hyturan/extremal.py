"""Exhaustive and heuristic extremal search plus stability diagnostics.

The exhaustive engine enumerates pattern-free r-graphs up to isomorphism
by orderly generation on edge bitmasks: a graph is extended one edge at a
time and a child survives only when the current graph is its designated
canonical parent, so every isomorphism class is visited exactly once.
Pattern containment is monotone under edge addition, which makes pruning
sound.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .hcore import (
    BudgetExceededError,
    CapacityError,
    Hypergraph,
    Partition,
    ValidationError,
    _edge_positions,
    _perm_weight_table,
    canonical_form,
    is_isomorphic,
    is_k_partite,
    partition_score,
)
from . import construct, detect
from .spectral import SolverConfig, evaluate_poly, p_spectral_radius

__all__ = [
    "SearchRecord",
    "StabilityReport",
    "KPartiteComparison",
    "enumerate_free",
    "ex_search",
    "spex_search",
    "symmetrize",
    "hill_climb",
    "stability_report",
    "lambda_vs_kpartite_check",
]

RAW_POSITION_CAP = 24
HARD_POSITION_CAP = 35


@dataclass(frozen=True)
class SearchRecord:
    n: int
    r: int
    pattern: dict | None
    objective: str  # "edges" | "lambda"
    best_value: float
    witnesses: tuple
    explored_count: int
    mode: str  # "exhaustive" | "hill-climb"
    p: float | None = None
    witness_status: tuple = ()
    turan_reference: dict | None = None
    trace: tuple = ()


@dataclass(frozen=True)
class StabilityReport:
    k: int
    best_partition: Partition
    score: int
    missing: int
    bad: int
    codegree_threshold: int
    sparse_pairs: frozenset
    heavy_sparse_vertices: frozenset
    heavy_missing_vertices: frozenset
    edit_distance_to_turan: int
    epsilon: float
    sparse_threshold: float
    missing_threshold: float


@dataclass(frozen=True)
class KPartiteComparison:
    holds: bool
    lambda_h: float
    lambda_turan: float
    isomorphic_to_turan: bool | None  # None when above the canonicalization cap
    strict: bool

    def __bool__(self) -> bool:
        return self.holds


# ---------------------------------------------------------------------------
# exhaustive enumeration


def _mask_predicate(n: int, r: int, pattern: detect.Pattern | None):
    """Compile a fast bitmask containment test where the pattern allows it."""
    all_edges, _ = _edge_positions(n, r)
    if pattern is None:
        return lambda mask: False

    if pattern.kind in ("clique_family", "fan_family"):
        t = pattern.t
        inner_needed = pattern.kind == "fan_family"
        checks = []
        for core in itertools.combinations(range(n), t):
            cset = set(core)
            pair_masks = []
            for u, v in itertools.combinations(core, 2):
                pm = 0
                for i, e in enumerate(all_edges):
                    if u in e and v in e:
                        pm |= 1 << i
                pair_masks.append(pm)
            inner = 0
            for i, e in enumerate(all_edges):
                if cset.issuperset(e):
                    inner |= 1 << i
            if inner_needed and not inner:
                continue
            checks.append((pair_masks, inner))

        def contains(mask):
            for pair_masks, inner in checks:
                if inner_needed and not mask & inner:
                    continue
                if all(mask & pm for pm in pair_masks):
                    return True
            return False

        return contains

    def contains(mask):
        H = _mask_to_graph(n, r, mask)
        return detect.find_pattern(H, pattern) is not None

    return contains


def _mask_to_graph(n: int, r: int, mask: int) -> Hypergraph:
    all_edges, _ = _edge_positions(n, r)
    return Hypergraph(n, r, [all_edges[i] for i in range(len(all_edges)) if mask >> i & 1])


class _Canonicalizer:
    """Canonical bitmask via the cached permutation-position table."""

    def __init__(self, n: int, r: int):
        _, self.pos, self.weights = _perm_weight_table(n, r)
        self.C = self.pos.shape[1]
        self.cache: dict = {}

    def key_and_mask(self, mask: int):
        hit = self.cache.get(mask)
        if hit is not None:
            return hit
        positions = [i for i in range(self.C) if mask >> i & 1]
        if not positions:
            out = (0, 0)
        else:
            scores = self.weights[:, positions].sum(axis=1)
            row = int(np.argmax(scores))
            canon_positions = self.pos[row, positions]
            cmask = 0
            for pc in canon_positions:
                cmask |= 1 << int(pc)
            out = (int(scores[row]), cmask)
        if len(self.cache) > 400_000:
            self.cache.clear()
        self.cache[mask] = out
        return out


def enumerate_free(n: int, r: int, pattern: detect.Pattern | None = None,
                   callback=None, max_positions: int = RAW_POSITION_CAP,
                   node_budget: int | None = None):
    """Visit every pattern-free r-graph on n labeled vertices exactly once
    up to isomorphism; returns the visit count.

    The callback, when given, receives each class's canonical representative
    as a Hypergraph. Graphs with C(n, r) > max_positions are rejected;
    max_positions above 35 is never allowed.
    """
    C = comb(n, r)
    cap = min(max_positions, HARD_POSITION_CAP)
    if C > cap:
        raise CapacityError(
            f"enumeration needs C(n,r) <= {cap}, got C({n},{r}) = {C}")
    contains = _mask_predicate(n, r, pattern)
    canon = _Canonicalizer(n, r)
    budget = [node_budget if node_budget is not None else float("inf")]

    visited = 0
    stack = [0]  # canonical masks
    while stack:
        mask = stack.pop()
        visited += 1
        if callback is not None:
            callback(_mask_to_graph(n, r, mask))
        key_here = canon.key_and_mask(mask)[0]
        seen_children = set()
        for i in range(C):
            bit = 1 << i
            if mask & bit:
                continue
            budget[0] -= 1
            if budget[0] < 0:
                raise BudgetExceededError("enumeration exceeded its node budget")
            child = mask | bit
            if contains(child):
                continue
            ckey, cmask = canon.key_and_mask(child)
            if ckey in seen_children:
                continue
            seen_children.add(ckey)
            # designated parent: canonical child minus its highest position
            top = cmask.bit_length() - 1
            pkey = canon.key_and_mask(cmask ^ (1 << top))[0]
            if pkey == key_here:
                stack.append(cmask)
    return visited


def _exhaustive_scan(n, r, pattern, max_positions, node_budget):
    """Enumerate free classes, tracking edge counts and edge-maximal classes."""
    C = comb(n, r)
    cap = min(max_positions, HARD_POSITION_CAP)
    if C > cap:
        raise CapacityError(
            f"enumeration needs C(n,r) <= {cap}, got C({n},{r}) = {C}")
    contains = _mask_predicate(n, r, pattern)
    canon = _Canonicalizer(n, r)
    budget = node_budget if node_budget is not None else float("inf")

    visited = 0
    best_m = -1
    best_masks: list = []
    maximal: list = []
    stack = [0]
    while stack:
        mask = stack.pop()
        visited += 1
        m = bin(mask).count("1")
        if m > best_m:
            best_m, best_masks = m, [mask]
        elif m == best_m:
            best_masks.append(mask)
        key_here = canon.key_and_mask(mask)[0]
        seen_children = set()
        extendable = False
        for i in range(C):
            bit = 1 << i
            if mask & bit:
                continue
            budget -= 1
            if budget < 0:
                raise BudgetExceededError("enumeration exceeded its node budget")
            child = mask | bit
            if contains(child):
                continue
            extendable = True
            ckey, cmask = canon.key_and_mask(child)
            if ckey in seen_children:
                continue
            seen_children.add(ckey)
            top = cmask.bit_length() - 1
            pkey = canon.key_and_mask(cmask ^ (1 << top))[0]
            if pkey == key_here:
                stack.append(cmask)
        if not extendable:
            maximal.append(mask)
    return visited, best_m, best_masks, maximal


def _turan_reference(n, r, pattern, p=None, config=None):
    if pattern is None or pattern.t is None:
        return None
    k = pattern.t - 1
    if k < r:
        return None
    ref = {"k": k, "turan_edges": construct.turan_count(n, k, r)}
    if p is not None:
        T = construct.turan_hypergraph(n, k, r)
        ref["turan_lambda"] = p_spectral_radius(T, config).lambda_estimate
    return ref


def ex_search(n: int, r: int, pattern: detect.Pattern | None,
              max_positions: int = RAW_POSITION_CAP,
              node_budget: int | None = None) -> SearchRecord:
    """Maximum edge count over pattern-free r-graphs on n vertices, with all
    witness classes."""
    visited, best_m, best_masks, _ = _exhaustive_scan(
        n, r, pattern, max_positions, node_budget)
    witnesses = tuple(_mask_to_graph(n, r, mk) for mk in sorted(best_masks))
    ref = _turan_reference(n, r, pattern)
    if ref is not None:
        ref["witness_is_turan"] = any(
            is_isomorphic(w, construct.turan_hypergraph(n, ref["k"], r)) for w in witnesses
        )
    return SearchRecord(
        n=n, r=r, pattern=pattern.describe() if pattern else None,
        objective="edges", best_value=float(best_m), witnesses=witnesses,
        explored_count=visited, mode="exhaustive", turan_reference=ref,
    )


def spex_search(n: int, r: int, pattern: detect.Pattern | None, p: float,
                config: SolverConfig | None = None,
                max_positions: int = RAW_POSITION_CAP,
                node_budget: int | None = None) -> SearchRecord:
    """Maximum p-spectral radius over pattern-free r-graphs on n vertices.

    The radius is monotone under edge addition, so the maximum over the
    class is attained on edge-maximal free graphs; only those are solved,
    and the reported witnesses are the edge-maximal attainers.
    """
    cfg = config if config is not None else SolverConfig(
        p=p, restarts=6, max_iter=4000, seed=0)
    visited, _, _, maximal = _exhaustive_scan(
        n, r, pattern, max_positions, node_budget)
    best_val = -1.0
    best: list = []
    for mask in sorted(maximal):
        H = _mask_to_graph(n, r, mask)
        res = p_spectral_radius(H, cfg)
        val = res.lambda_estimate
        if val > best_val + cfg.tol:
            best_val, best = val, [(H, res.status)]
        elif abs(val - best_val) <= cfg.tol:
            best.append((H, res.status))
    witnesses = tuple(h for h, _ in best)
    statuses = tuple(s for _, s in best)
    ref = _turan_reference(n, r, pattern, p=p, config=cfg)
    if ref is not None:
        ref["witness_is_turan"] = any(
            is_isomorphic(w, construct.turan_hypergraph(n, ref["k"], r)) for w in witnesses
        )
    return SearchRecord(
        n=n, r=r, pattern=pattern.describe() if pattern else None,
        objective="lambda", best_value=best_val, witnesses=witnesses,
        explored_count=visited, mode="exhaustive", p=p,
        witness_status=statuses, turan_reference=ref,
    )


# ---------------------------------------------------------------------------
# symmetrization and hill climbing


def symmetrize(H: Hypergraph, u: int, z: int, excluded=None) -> Hypergraph:
    """Remove every edge at u, then add the u-for-z substitution of each
    non-excluded edge at z (substitutions meeting u are skipped)."""
    if u == z:
        raise ValidationError("symmetrize needs two distinct vertices")
    H._check_vertex(u)
    H._check_vertex(z)
    kept = {e for e in H.edges if u not in e}
    new = set(kept)
    for e in H.edges:
        if z not in e or u in e:
            continue
        if excluded is not None and excluded(e):
            continue
        new.add(tuple(sorted((set(e) - {z}) | {u})))
    return H.with_edges(new)


def hill_climb(H0: Hypergraph, pattern: detect.Pattern | None, p: float,
               budget: int = 500, seed: int = 0,
               config: SolverConfig | None = None) -> SearchRecord:
    """First-improvement local search over add-edge, remove-edge, and
    symmetrize moves; deterministic for a fixed seed.

    The move target z of symmetrization is the current optimizer's
    max-weight vertex. The budget counts solver evaluations.
    """
    cfg = config if config is not None else SolverConfig(
        p=p, restarts=4, max_iter=3000, seed=seed)
    if pattern is not None and not detect.is_free(H0, pattern):
        raise ValidationError("hill_climb requires a pattern-free start")
    rng = random.Random(seed)
    all_edges = list(itertools.combinations(range(H0.n), H0.r))
    cur = H0
    res = p_spectral_radius(cur, cfg)
    cur_val = res.lambda_estimate
    trace = [("start", cur_val)]
    evals = 1
    while evals < budget:
        weights = res.vector.values
        z = max(range(cur.n), key=lambda v: (weights[v], -v))
        moves = [("add", e) for e in all_edges if e not in cur.edge_set]
        moves += [("remove", e) for e in cur.edges]
        moves += [("sym", v) for v in range(cur.n) if v != z]
        rng.shuffle(moves)
        improved = False
        for kind, arg in moves:
            if evals >= budget:
                break
            if kind == "add":
                cand = cur.add_edge(arg)
            elif kind == "remove":
                cand = cur.remove_edge(arg)
            else:
                cand = symmetrize(cur, arg, z)
            if pattern is not None and not detect.is_free(cand, pattern):
                continue
            cand_res = p_spectral_radius(cand, cfg)
            evals += 1
            if cand_res.lambda_estimate > cur_val + cfg.tol:
                cur, cur_val, res = cand, cand_res.lambda_estimate, cand_res
                trace.append((f"{kind}:{arg}", cur_val))
                improved = True
                break
        if not improved:
            break
    return SearchRecord(
        n=H0.n, r=H0.r, pattern=pattern.describe() if pattern else None,
        objective="lambda", best_value=cur_val, witnesses=(cur,),
        explored_count=evals, mode="hill-climb", p=p, trace=tuple(trace),
    )


# ---------------------------------------------------------------------------
# stability diagnostics


def _score_all_partitions(H: Hypergraph, k: int):
    """Exact maximizer of the partition score over all k^n assignments,
    vectorized; returns the lexicographically smallest maximizer."""
    n = H.n
    N = k ** n
    codes = np.arange(N, dtype=np.int64)
    digits = np.empty((N, n), dtype=np.int8)
    for v in range(n):
        digits[:, v] = (codes // (k ** (n - 1 - v))) % k
    scores = np.zeros(N, dtype=np.int32)
    for e in H.edges:
        cols = digits[:, list(e)]
        cols = np.sort(cols, axis=1)
        distinct = 1 + (cols[:, 1:] != cols[:, :-1]).sum(axis=1)
        scores += distinct.astype(np.int32)
    best = int(np.argmax(scores))  # first occurrence = lex smallest assignment
    return tuple(int(c) for c in digits[best]), int(scores[best])


def _ascent_partition(H: Hypergraph, k: int, restarts: int, seed: int):
    """Steepest-ascent vertex moves from seeded random starts."""
    n = H.n
    rng = random.Random(seed)
    edges_at = [[] for _ in range(n)]
    for e in H.edges:
        for v in e:
            edges_at[v].append(e)

    def local_score(assign, v):
        return sum(len({assign[u] for u in e}) for e in edges_at[v])

    best_assign, best_score = None, -1
    starts = [tuple(v % k for v in range(n))]
    for _ in range(restarts - 1):
        starts.append(tuple(rng.randrange(k) for _ in range(n)))
    for start in starts:
        assign = list(start)
        improved = True
        while improved:
            improved = False
            for v in range(n):
                here = local_score(assign, v)
                orig = assign[v]
                best_c, best_gain = orig, 0
                for c in range(k):
                    if c == orig:
                        continue
                    assign[v] = c
                    gain = local_score(assign, v) - here
                    if gain > best_gain or (gain == best_gain and gain > 0 and c < best_c):
                        best_c, best_gain = c, gain
                    assign[v] = orig
                if best_gain > 0:
                    assign[v] = best_c
                    improved = True
        score = partition_score(H, Partition(k, tuple(assign)))
        if (best_assign is None or score > best_score
                or (score == best_score and tuple(assign) < best_assign)):
            best_assign, best_score = tuple(assign), score
    return best_assign, best_score


def stability_report(H: Hypergraph, k: int, epsilon: float,
                     exact_limit: int = 10 ** 6, ascent_restarts: int = 10,
                     seed: int = 0) -> StabilityReport:
    """Best-partition diagnostics for closeness to the complete k-partite
    reference graph: missing and bad edges, sparse pairs, and the heavy
    vertex sets, with thresholds instantiated at the supplied epsilon."""
    if k < H.r:
        raise ValidationError(f"need k >= r, got k={k}, r={H.r}")
    n, r = H.n, H.r
    if k ** n <= exact_limit:
        assignment, score = _score_all_partitions(H, k)
    else:
        assignment, score = _ascent_partition(H, k, ascent_restarts, seed)
    sigma = Partition(k, assignment)

    blocks = sigma.blocks()
    sizes = [len(b) for b in blocks]
    # reference complete k-partite graph T on sigma: count its edges
    t_edges = 0
    for combo in itertools.combinations(range(k), r):
        prod = 1
        for i in combo:
            prod *= sizes[i]
        t_edges += prod
    bad = sum(1 for e in H.edges if len({assignment[v] for v in e}) < r)
    missing = t_edges - (H.m - bad)

    d = 0
    if r >= 3:
        d = (k + 1 + (r - 2) * comb(k + 1, 2)) * comb(n, r - 3)

    codeg = {}
    for e in H.edges:
        for u, v in itertools.combinations(e, 2):
            codeg[(u, v)] = codeg.get((u, v), 0) + 1
    sparse = set()
    for u in range(n):
        for v in range(u + 1, n):
            if assignment[u] != assignment[v] and codeg.get((u, v), 0) <= d:
                sparse.add((u, v))

    sparse_threshold = epsilon ** (1.0 / r ** 2) * n
    sparse_count = [0] * n
    for u, v in sparse:
        sparse_count[u] += 1
        sparse_count[v] += 1
    heavy_sparse = frozenset(v for v in range(n) if sparse_count[v] >= sparse_threshold)

    missing_threshold = epsilon ** (5.0 / (4.0 * r ** 2)) * n ** (r - 1)
    missing_count = [0] * n
    present = H.edge_set
    for combo in itertools.combinations(range(k), r):
        for choice in itertools.product(*(sorted(blocks[i]) for i in combo)):
            e = tuple(sorted(choice))
            if e not in present:
                for v in e:
                    missing_count[v] += 1
    heavy_missing = frozenset(
        v for v in range(n) if missing_count[v] >= missing_threshold)

    return StabilityReport(
        k=k, best_partition=sigma, score=score, missing=missing, bad=bad,
        codegree_threshold=d, sparse_pairs=frozenset(sparse),
        heavy_sparse_vertices=heavy_sparse, heavy_missing_vertices=heavy_missing,
        edit_distance_to_turan=missing + bad, epsilon=epsilon,
        sparse_threshold=sparse_threshold, missing_threshold=missing_threshold,
    )


def lambda_vs_kpartite_check(H: Hypergraph, sigma: Partition, p: float,
                             config: SolverConfig | None = None) -> KPartiteComparison:
    """Compare the solver estimate on a k-partite H against the balanced
    complete k-partite graph of the same order."""
    if not is_k_partite(H, sigma):
        raise ValidationError("lambda_vs_kpartite_check needs a k-partite input")
    cfg = config if config is not None else SolverConfig(p=p, restarts=6, max_iter=4000)
    T = construct.turan_hypergraph(H.n, sigma.k, H.r)
    lam_h = p_spectral_radius(H, cfg).lambda_estimate
    lam_t = p_spectral_radius(T, cfg).lambda_estimate
    iso = is_isomorphic(H, T) if H.n <= 12 else None
    return KPartiteComparison(
        holds=lam_h <= lam_t + 3 * cfg.tol,
        lambda_h=lam_h,
        lambda_turan=lam_t,
        isomorphic_to_turan=iso,
        strict=lam_h < lam_t - 3 * cfg.tol,
    )
