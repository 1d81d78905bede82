"""Solvers and closed-form bounds for the p-spectral radius and Lagrangian.

The maximization of the edge polynomial over a p-norm sphere is nonconvex;
the solver contract is best-of-multistart with a feasibility certificate:
every reported value is the polynomial evaluated at a nonnegative unit
vector, hence a valid lower bound, and convergence is certified by the
eigen-equation residual.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from math import factorial

import numpy as np

from .hcore import Hypergraph, ValidationError, covered_pair_adjacency, maximal_cliques
from .oracle import oracle_p_spectral

__all__ = [
    "WeightVector",
    "SolverConfig",
    "SolverResult",
    "evaluate_poly",
    "p_spectral_radius",
    "lagrangian",
    "residual",
    "size_upper_bound",
    "turan_lower_bound",
    "maclaurin_bound",
    "lambda_upper_from_density",
    "weyl_check",
    "oracle_p_spectral",
]


@dataclass(frozen=True)
class WeightVector:
    """Nonnegative vertex weights with a p-norm contract."""

    values: tuple
    p: float
    norm_tol: float = 1e-8

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        if any(v < 0 for v in vals):
            raise ValidationError("weights must be nonnegative")
        object.__setattr__(self, "values", vals)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values)

    def norm(self) -> float:
        return _pnorm(self.as_array(), self.p)

    def is_unit(self) -> bool:
        return abs(self.norm() - 1.0) <= self.norm_tol


@dataclass(frozen=True)
class SolverConfig:
    p: float
    tol: float = 1e-10
    max_iter: int = 10_000
    restarts: int = 32
    seed: int = 0
    shift: float | None = None
    threads: int = 1

    def __post_init__(self):
        if self.p < 1:
            raise ValidationError("need p >= 1")
        if self.tol <= 0 or self.restarts < 1:
            raise ValidationError("need tol > 0 and restarts >= 1")


@dataclass(frozen=True)
class SolverResult:
    lambda_estimate: float
    vector: WeightVector
    residual: float
    iterations: int
    status: str  # converged | iteration-capped | degenerate-input
    restart_spread: float = 0.0


def _pnorm(x: np.ndarray, p: float) -> float:
    if math.isinf(p):
        return float(np.max(np.abs(x))) if x.size else 0.0
    return float((np.abs(x) ** p).sum() ** (1.0 / p))


def evaluate_poly(H: Hypergraph, x) -> float:
    """r! * sum over edges of the product of vertex weights.

    Summation is numpy pairwise, which keeps the error small enough for the
    residual certificates even at large edge counts.
    """
    arr = x.as_array() if isinstance(x, WeightVector) else np.asarray(x, dtype=float)
    if arr.shape != (H.n,):
        raise ValidationError(f"weight vector has shape {arr.shape}, expected ({H.n},)")
    if H.m == 0:
        return 0.0
    E = _edge_array(H)
    return factorial(H.r) * float(arr[E].prod(axis=1).sum())


_EDGE_ARRAYS: dict = {}


def _edge_array(H: Hypergraph) -> np.ndarray:
    key = (H.n, H.r, H.edges)
    arr = _EDGE_ARRAYS.get(key)
    if arr is None:
        arr = np.array(H.edges, dtype=np.intp)
        if len(_EDGE_ARRAYS) > 4096:
            _EDGE_ARRAYS.clear()
        _EDGE_ARRAYS[key] = arr
    return arr


def _leave_one_out(x: np.ndarray, E: np.ndarray) -> np.ndarray:
    """loo[j, s] = product of x over edge j excluding slot s."""
    X = x[E]
    m, r = X.shape
    left = np.ones_like(X)
    for s in range(1, r):
        left[:, s] = left[:, s - 1] * X[:, s - 1]
    right = np.ones_like(X)
    for s in range(r - 2, -1, -1):
        right[:, s] = right[:, s + 1] * X[:, s + 1]
    return left * right


def _edge_sums(x: np.ndarray, E: np.ndarray, n: int) -> np.ndarray:
    """S_i = sum over edges containing i of the product of the other weights."""
    loo = _leave_one_out(x, E)
    return np.bincount(E.ravel(), weights=loo.ravel(), minlength=n)


def _internal_residual(lam, x, S, p, r, active_cut) -> float:
    active = x > active_cut
    if not np.any(active):
        return 0.0
    lhs = lam * x[active] ** (p - 1.0)
    rhs = factorial(r - 1) * S[active]
    return float(np.max(np.abs(lhs - rhs)))


def _fixed_point_run(H, p, x0, config, E):
    """Normalized shifted fixed-point iteration from one start.

    Objective decreases trigger doubling of the damping shift instead of the
    step being taken, so the sweep is monotone in practice; the best iterate
    is tracked so the returned value never falls below the start value.
    """
    n, r = H.n, H.r
    rfact1 = factorial(r - 1)
    expo = 1.0 / (p - 1.0)
    degs = np.bincount(E.ravel(), minlength=n)
    shift0 = config.shift if config.shift is not None else rfact1 * float(degs.max())
    shift = max(shift0, 1e-12)
    active_cut = math.sqrt(config.tol)

    x = np.maximum(np.asarray(x0, dtype=float), 0.0)
    x = x / _pnorm(x, p)
    lam = factorial(r) * float(x[E].prod(axis=1).sum())
    best_x, best_lam = x, lam
    it = 0
    while it < config.max_iter:
        it += 1
        S = _edge_sums(x, E, n)
        res = _internal_residual(lam, x, S, p, r, active_cut)
        if res <= config.tol:
            return x, lam, res, it, True
        base = shift * x ** (p - 1.0) + rfact1 * S
        top = base.max()
        if top <= 0.0:
            break
        y = (base / top) ** expo
        y /= _pnorm(y, p)
        lam_y = factorial(r) * float(y[E].prod(axis=1).sum())
        if lam_y < lam - 1e-14 * max(1.0, abs(lam)):
            shift *= 2.0
            if shift > 1e14 * max(shift0, 1.0):
                break
            continue
        x, lam = y, lam_y
        if lam > best_lam:
            best_x, best_lam = x, lam
    # not converged through the fixed point; polish by monotone ascent
    x, lam = best_x, best_lam
    x, lam, extra = _ascent_polish(H, p, x, lam, E, budget=400)
    it += extra
    S = _edge_sums(x, E, n)
    res = _internal_residual(lam, x, S, p, r, active_cut)
    return x, lam, res, it, res <= config.tol


def _ascent_polish(H, p, x, lam, E, budget):
    """Accept-if-improve normalized gradient steps; monotone by construction."""
    n, r = H.n, H.r
    eta = 0.25
    steps = 0
    for _ in range(budget):
        steps += 1
        g = _edge_sums(x, E, n)
        gn = np.linalg.norm(g)
        if gn <= 0.0:
            break
        y = x + eta * g / gn
        y /= _pnorm(y, p)
        lam_y = factorial(r) * float(y[E].prod(axis=1).sum())
        if lam_y > lam + 1e-16:
            x, lam = y, lam_y
            eta = min(eta * 1.5, 1.0)
        else:
            eta *= 0.5
            if eta < 1e-13:
                break
    return x, lam, steps


def _starting_points(H, p, config, E):
    n = H.n
    starts = []
    uniform = np.ones(n)
    starts.append(uniform / _pnorm(uniform, p))
    degs = np.bincount(E.ravel(), minlength=n).astype(float)
    if degs.max() > 0:
        degs = degs / _pnorm(degs, p)
        starts.append(degs)
    rng = np.random.default_rng(config.seed)
    while len(starts) < config.restarts:
        v = rng.random(n) + 1e-6
        starts.append(v / _pnorm(v, p))
    return starts[: max(config.restarts, len(starts))]


def _select_best(outcomes, tol):
    # highest lambda, then lexicographically smallest rounded vector
    def key(o):
        x, lam = o[0], o[1]
        return (-lam, tuple(np.round(x, 12)))

    best = min(outcomes, key=key)
    conv = [o[1] for o in outcomes if o[4]]
    spread = (max(conv) - min(conv)) if len(conv) > 1 else 0.0
    return best, spread


def p_spectral_radius(H: Hypergraph, config: SolverConfig) -> SolverResult:
    """Best local maximum of the edge polynomial on the unit p-sphere over
    seeded multistarts; the estimate is always a certified lower bound."""
    p = config.p
    if p == 1:
        return lagrangian(H, config)
    if H.m == 0:
        return SolverResult(0.0, WeightVector((0.0,) * H.n, p), 0.0, 0, "converged")
    if math.isinf(p):
        ones = WeightVector((1.0,) * H.n, p)
        return SolverResult(factorial(H.r) * H.m, ones, 0.0, 0, "converged")

    E = _edge_array(H)
    starts = _starting_points(H, p, config, E)

    def run(x0):
        return _fixed_point_run(H, p, x0, config, E)

    if config.threads > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            outcomes = list(pool.map(run, starts))
    else:
        outcomes = [run(x0) for x0 in starts]

    (x, lam, _res, iters, ok), spread = _select_best(outcomes, config.tol)
    lam = evaluate_poly(H, x)
    vector = WeightVector(tuple(x), p)
    result = SolverResult(lam, vector, 0.0, iters, "converged" if ok else "iteration-capped",
                          restart_spread=spread)
    res = residual(H, p, result, active_cut=math.sqrt(config.tol))
    status = "converged" if res <= config.tol else "iteration-capped"
    return replace(result, residual=res, status=status)


# ---------------------------------------------------------------------------
# Lagrangian (p = 1)


def _growth_transform_run(H, x0, config, E):
    """Baum-Eagon growth transform on the simplex: monotone for polynomials
    with nonnegative coefficients."""
    n, r = H.n, H.r
    x = np.maximum(np.asarray(x0, dtype=float), 0.0)
    s = x.sum()
    if s <= 0:
        x = np.ones(n)
        s = float(n)
    x /= s
    lam = factorial(r) * float(x[E].prod(axis=1).sum()) if H.m else 0.0
    it = 0
    cut = math.sqrt(config.tol)
    while it < config.max_iter:
        it += 1
        S = _edge_sums(x, E, n)
        res = _kkt_residual(lam, x, S, r, cut)
        if res <= config.tol:
            return x, lam, res, it, True
        G = x * S
        tot = G.sum()
        if tot <= 0.0:
            break
        x = G / tot
        lam = factorial(r) * float(x[E].prod(axis=1).sum())
    S = _edge_sums(x, E, n)
    res = _kkt_residual(lam, x, S, r, cut)
    return x, lam, res, it, res <= config.tol


def _kkt_residual(lam, x, S, r, cut):
    active = x > cut
    if not np.any(active):
        return 0.0
    return float(np.max(np.abs(lam - factorial(r - 1) * S[active])))


def _shift_uncovered_mass(H, x, E):
    """Enforce the covered-support property: if two supported vertices share
    no edge, the polynomial is linear in their mass split, so all mass moves
    to the weakly better endpoint without decreasing the value."""
    n = H.n
    adj = covered_pair_adjacency(H)
    x = x.copy()
    changed = True
    while changed:
        changed = False
        support = [i for i in range(n) if x[i] > 1e-12]
        for a in range(len(support)):
            for b in range(a + 1, len(support)):
                u, v = support[a], support[b]
                if v in adj[u]:
                    continue
                S = _edge_sums(x, E, n)
                keep, drop = (u, v) if S[u] >= S[v] else (v, u)
                x[keep] += x[drop]
                x[drop] = 0.0
                changed = True
                break
            if changed:
                break
    return x


def lagrangian(H: Hypergraph, config: SolverConfig | None = None) -> SolverResult:
    """Maximum of the edge polynomial over the standard simplex.

    Strategy: growth-transform multistart seeded with the uniform and
    degree vectors, uniform starts on every maximal clique of the
    covered-pair graph (supports of optimizers can be assumed pairwise
    covered), then random starts; finally the covered-support cleanup so
    the returned vector has minimal support among value ties.
    """
    if config is None:
        config = SolverConfig(p=1.0)
    if H.m == 0:
        return SolverResult(0.0, WeightVector((0.0,) * H.n, 1.0), 0.0, 0, "converged")
    E = _edge_array(H)
    n = H.n

    starts = []
    uniform = np.ones(n) / n
    starts.append(uniform)
    degs = np.bincount(E.ravel(), minlength=n).astype(float)
    starts.append(degs / degs.sum())
    if n <= 16:
        adj = covered_pair_adjacency(H)
        cliques = []
        for cl in maximal_cliques(adj):
            if len(cl) >= H.r:
                cliques.append(cl)
            if len(cliques) >= 2000:
                break
        for cl in cliques:
            v = np.zeros(n)
            v[list(cl)] = 1.0 / len(cl)
            starts.append(v)
    rng = np.random.default_rng(config.seed)
    for _ in range(max(config.restarts - 2, 4)):
        v = rng.random(n) + 1e-6
        starts.append(v / v.sum())

    outcomes = []
    for x0 in starts:
        x, lam, res, it, ok = _growth_transform_run(H, x0, config, E)
        x = _shift_uncovered_mass(H, x, E)
        # cleanup may have opened room for another ascent on the smaller support
        x, lam, res, it2, ok = _growth_transform_run(H, x, config, E)
        outcomes.append((x, lam, res, it + it2, ok))

    def key(o):
        x, lam = o[0], o[1]
        support = int((x > 1e-12).sum())
        return (-round(lam, 12), support, tuple(np.round(x, 12)))

    x, lam, _res, iters, ok = min(outcomes, key=key)
    conv = [o[1] for o in outcomes if o[4]]
    spread = (max(conv) - min(conv)) if len(conv) > 1 else 0.0
    lam = evaluate_poly(H, x)
    result = SolverResult(lam, WeightVector(tuple(x), 1.0), 0.0, iters,
                          "converged" if ok else "iteration-capped", restart_spread=spread)
    res = residual(H, 1.0, result, active_cut=math.sqrt(config.tol))
    status = "converged" if res <= config.tol else "iteration-capped"
    return replace(result, residual=res, status=status)


# ---------------------------------------------------------------------------
# independent residual and the closed-form bounds


def residual(H: Hypergraph, p: float, candidate: SolverResult,
             active_cut: float = 1e-5) -> float:
    """Worst eigen-equation violation across supported vertices.

    Written as plain loops on purpose: this is the certificate path and it
    stays independent of the vectorized solver internals.
    """
    if math.isinf(p):
        return 0.0
    x = list(candidate.vector.values)
    lam = candidate.lambda_estimate
    n, r = H.n, H.r
    sums = [0.0] * n
    for e in H.edges:
        for v in e:
            prod = 1.0
            for u in e:
                if u != v:
                    prod *= x[u]
            sums[v] += prod
    coeff = factorial(r - 1)
    worst = 0.0
    for i in range(n):
        if x[i] > active_cut:
            worst = max(worst, abs(lam * x[i] ** (p - 1.0) - coeff * sums[i]))
    return worst


def size_upper_bound(m: int, r: int, p: float) -> float:
    """lambda^(p) <= (r! m)^(1 - 1/p) for p > 1."""
    if m == 0:
        return 0.0
    return (factorial(r) * m) ** (1.0 - 1.0 / p)


def turan_lower_bound(n: int, k: int, r: int, p: float) -> float:
    """Uniform-vector value r! t_r(n,k) / n^(r/p) for the Turan hypergraph."""
    from .construct import turan_count

    return factorial(r) * turan_count(n, k, r) / n ** (r / p)


def maclaurin_bound(k: int, r: int) -> float:
    """(k)_r / k^r, the Lagrangian-density bound for the fan family."""
    out = 1.0
    for i in range(r):
        out *= (k - i) / k
    return out


def lambda_upper_from_density(m: int, r: int, p: float, pi: float) -> float:
    """lambda^(p) <= (r! m)^(1-1/p) * pi^(1/p) for F-free graphs with
    Lagrangian density at most pi."""
    if m == 0:
        return 0.0
    return (factorial(r) * m) ** (1.0 - 1.0 / p) * pi ** (1.0 / p)


def weyl_check(H: Hypergraph, split, p: float, config: SolverConfig | None = None) -> bool:
    """Subadditivity of lambda^(p) across an edge bipartition of H."""
    split = {tuple(sorted(e)) for e in split}
    if not split.issubset(H.edge_set):
        raise ValidationError("split must be a subset of the edges of H")
    cfg = config if config is not None else SolverConfig(p=p, restarts=8, max_iter=3000)
    cfg = replace(cfg, p=p)
    H1 = H.with_edges(split)
    H2 = H.with_edges(H.edge_set - split)
    whole = p_spectral_radius(H, cfg).lambda_estimate
    part = (p_spectral_radius(H1, cfg).lambda_estimate
            + p_spectral_radius(H2, cfg).lambda_estimate)
    return whole <= part + 3 * cfg.tol
