"""Brute-force ground truth for the p-spectral radius at desk scale.

Deliberately independent of the iterative solver: its own polynomial
evaluation, a dense grid over the nonnegative unit p-sphere, and 1-D
coordinate ascent for refinement. Capped at n <= 6.
"""

from __future__ import annotations

import itertools
from math import factorial

import numpy as np

from .hcore import CapacityError, Hypergraph

__all__ = ["oracle_p_spectral"]

ORACLE_CAP = 6


def _grid_resolution(n: int, min_samples: int) -> int:
    # smallest T with C(T + n - 1, n - 1) >= min_samples
    from math import comb

    T = n
    while comb(T + n - 1, n - 1) < min_samples:
        T += 1
    return T


def _poly_rows(H: Hypergraph, X: np.ndarray) -> np.ndarray:
    """r! * sum of edge products, evaluated row-wise on the matrix X."""
    if H.m == 0:
        return np.zeros(X.shape[0])
    out = np.zeros(X.shape[0])
    for e in H.edges:
        prod = X[:, e[0]].copy()
        for v in e[1:]:
            prod *= X[:, v]
        out += prod
    return factorial(H.r) * out


def _coordinate_ascent(H: Hypergraph, p: float, x: np.ndarray, sweeps: int = 24) -> tuple:
    """Optimize one coordinate at a time on the nonnegative p-sphere.

    With the other coordinates fixed up to rescaling, the objective along
    coordinate i is a(u) * t * c^(r-1) + b(u) * c^r with c = (1 - t^p)^(1/p);
    that 1-D problem is solved by dense scan plus golden-section polish.
    """
    n, r = H.n, H.r
    rfact = factorial(r)
    x = x.copy()
    ts = np.linspace(0.0, 1.0, 65)[:-1]

    def section(f, lo, hi, iters=60):
        golden = (np.sqrt(5.0) - 1.0) / 2.0
        a, b = lo, hi
        c = b - golden * (b - a)
        d = a + golden * (b - a)
        fc, fd = f(c), f(d)
        for _ in range(iters):
            if fc >= fd:
                b, d, fd = d, c, fc
                c = b - golden * (b - a)
                fc = f(c)
            else:
                a, c, fc = c, d, fd
                d = a + golden * (b - a)
                fd = f(d)
        t = (a + b) / 2.0
        return t, f(t)

    best_val = _poly_rows(H, x[None, :])[0]
    for _ in range(sweeps):
        improved = False
        for i in range(n):
            xi = x[i]
            rest_mass = 1.0 - xi ** p
            if rest_mass <= 0.0:
                u = np.zeros(n)
            else:
                u = x.copy()
                u[i] = 0.0
                u /= rest_mass ** (1.0 / p)
            # edge sums with and without coordinate i at the direction u
            a = 0.0
            b = 0.0
            for e in H.edges:
                if i in e:
                    prod = 1.0
                    for v in e:
                        if v != i:
                            prod *= u[v]
                    a += prod
                else:
                    prod = 1.0
                    for v in e:
                        prod *= u[v]
                    b += prod
            a *= rfact
            b *= rfact

            def val(t):
                c = max(1.0 - t ** p, 0.0) ** (1.0 / p)
                return a * t * c ** (r - 1) + b * c ** r

            vals = np.array([val(t) for t in ts])
            k = int(np.argmax(vals))
            lo = ts[max(k - 1, 0)]
            hi = ts[min(k + 1, len(ts) - 1)]
            t_star, v_star = section(val, lo, hi)
            coarse = vals[k]
            if coarse > v_star:
                t_star, v_star = ts[k], coarse
            if v_star > best_val + 1e-15:
                best_val = v_star
                c = max(1.0 - t_star ** p, 0.0) ** (1.0 / p)
                x = u * c
                x[i] = t_star
                improved = True
        if not improved:
            break
    return best_val, x


def oracle_p_spectral(H: Hypergraph, p: float, min_samples: int = 100_000,
                      refine_top: int = 24) -> float:
    """Brute-force estimate of the maximum of the edge polynomial over the
    nonnegative unit p-sphere."""
    if H.n > ORACLE_CAP:
        raise CapacityError(f"oracle capped at n <= {ORACLE_CAP}, got n={H.n}")
    if p < 1:
        raise ValueError("need p >= 1")
    if H.m == 0:
        return 0.0
    n = H.n
    T = _grid_resolution(n, min_samples)
    compositions = itertools.combinations(range(T + n - 1), n - 1)
    rows = []
    prev = -1
    for cuts in compositions:
        parts = []
        prev = -1
        for c in cuts:
            parts.append(c - prev - 1)
            prev = c
        parts.append(T + n - 2 - prev)
        rows.append(parts)
    X = np.array(rows, dtype=float)
    X = X[X.sum(axis=1) > 0]
    norms = (X ** p).sum(axis=1) ** (1.0 / p)
    X /= norms[:, None]
    values = _poly_rows(H, X)
    order = np.argsort(values)[::-1][:refine_top]
    best = float(values[order[0]])
    for idx in order:
        val, _ = _coordinate_ascent(H, p, X[idx])
        best = max(best, val)
    return best
