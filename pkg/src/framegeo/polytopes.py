"""Origin-symmetric polytopes attached to frames.

A certified frame v_1, ..., v_n in R^k defines two polar bodies: the cube
section {y : |<v_i, y>| <= 1 for all i} (an H-representation) and the
cross-polytope projection, the absolute convex hull of the v_i (a
V-representation).  Both representations store one row per +/- pair.
Exact volumes are computed by enumerating vertices and triangulating the
convex hull; a hit-or-miss Monte Carlo estimator covers dimensions beyond
the exact range.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np
from scipy.optimize import linprog
from scipy.spatial import ConvexHull, QhullError

from .ellipsoids import ellipsoid_volume, lowner_symmetric
from .frames import (TAU_CERT, CertificationError, FrameSet, Subspace,
                     certify_unit_decomposition)

TAU_GEO = 1e-9  # geometric dedup / feasibility tolerance
K_EXACT = 5     # exact volume supported up to this dimension
M_EXACT = 14    # and up to this many collapsed functionals
_ESTIMATE_EPS = 1e-7


class DegenerateBodyError(ValueError):
    """Body is lower-dimensional (or empty) where full dimension is required."""


class UnsupportedDimensionError(ValueError):
    """Exact computation requested outside the supported size range."""


class UnboundedBodyError(ValueError):
    """H-representation does not bound the body (functionals fail to span)."""


@dataclass(frozen=True)
class Polytope:
    """Origin-symmetric polytope; rows store one representative per +/- pair.

    ``vrep`` rows are vertex representatives (the body is the convex hull of
    them and their negatives); ``hrep`` rows g cut {y : |<g, y>| <= 1}.  At
    least one representation must be present.  ``multiplicity`` counts
    collapsed duplicate rows when the constructor tracked them.
    """

    k: int
    vrep: Optional[np.ndarray] = None
    hrep: Optional[np.ndarray] = None
    multiplicity: Optional[np.ndarray] = None

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        if self.vrep is None and self.hrep is None:
            raise ValueError("polytope needs a V- or H-representation")
        for name in ("vrep", "hrep"):
            rep = getattr(self, name)
            if rep is None:
                continue
            rep = np.array(rep, dtype=float)
            if rep.ndim != 2 or rep.shape[1] != self.k:
                raise ValueError(f"{name} must have shape (m, {self.k})")
            if not np.all(np.isfinite(rep)):
                raise ValueError(f"{name} contains non-finite entries")
            rep.setflags(write=False)
            object.__setattr__(self, name, rep)
        if self.multiplicity is not None:
            mult = np.array(self.multiplicity, dtype=int)
            mult.setflags(write=False)
            object.__setattr__(self, "multiplicity", mult)


class VolumeEstimate(NamedTuple):
    value: float
    standard_error: float


def _canonicalize_signs(rows: np.ndarray, tol: float = TAU_GEO) -> np.ndarray:
    """Flip each row so its first coordinate larger than ``tol`` is positive."""
    out = np.array(rows, dtype=float)
    for row in out:
        for x in row:
            if abs(x) > tol:
                if x < 0.0:
                    row *= -1.0
                break
    return out


def _collapse_rows(rows: np.ndarray, tol: float = TAU_GEO):
    """Drop near-zero rows and merge +/- duplicates; returns (reps, counts)."""
    k = rows.shape[1] if rows.ndim == 2 else 0
    canon = _canonicalize_signs(rows, tol)
    canon = canon[np.linalg.norm(canon, axis=1) > tol]
    reps: list[np.ndarray] = []
    counts: list[int] = []
    for row in canon:
        for idx, rep in enumerate(reps):
            if np.max(np.abs(rep - row)) <= tol:
                counts[idx] += 1
                break
        else:
            reps.append(row.copy())
            counts.append(1)
    if not reps:
        return np.zeros((0, k)), np.zeros(0, dtype=int)
    return np.array(reps), np.array(counts, dtype=int)


def _require_certified(frame: FrameSet, tol: float) -> None:
    cert = certify_unit_decomposition(frame, tol)
    if not cert.ok:
        raise CertificationError(
            f"frame must certify as a unit decomposition within {tol:g}: "
            f"deviation {cert.deviation:.3e}", cert.deviation)


def polytope_from_frame(frame: FrameSet, tol: float = TAU_CERT) -> Polytope:
    """Cube section {y : |<v_i, y>| <= 1} of a certified frame (H-rep).

    Zero vectors impose no constraint and are dropped; duplicate functionals
    are collapsed with their multiplicity recorded.
    """
    _require_certified(frame, tol)
    reps, mult = _collapse_rows(frame.vectors)
    if reps.shape[0] == 0:
        raise DegenerateBodyError("all frame vectors are zero")
    return Polytope(k=frame.k, hrep=reps, multiplicity=mult)


def absolute_hull_gauge(generators, point) -> float:
    """Gauge of the absolute convex hull of ``generators`` at ``point``.

    The minimum of sum |lambda_i| subject to sum lambda_i w_i = point; the
    point lies in the hull of the +/- generators exactly when the value is
    at most 1.  Returns inf when the point is outside the generators' span.
    """
    W = np.asarray(generators, dtype=float)
    y = np.asarray(point, dtype=float)
    m = W.shape[0]
    res = linprog(c=np.ones(2 * m), A_eq=np.hstack([W.T, -W.T]), b_eq=y,
                  bounds=(0, None), method="highs")
    if res.status == 2:
        return math.inf
    if res.status != 0:
        raise ArithmeticError(f"gauge program failed: {res.message}")
    return float(res.fun)


def _extreme_indices(W: np.ndarray, tol: float = TAU_GEO) -> np.ndarray:
    """Indices of rows that are vertices of the absolute convex hull."""
    m, k = W.shape
    if k == 1:
        return np.array([int(np.argmax(np.abs(W[:, 0])))])
    if m <= 1:
        return np.arange(m)
    S = np.vstack([W, -W])
    try:
        hull = ConvexHull(S)
        return np.array(sorted({int(v) % m for v in hull.vertices}), dtype=int)
    except QhullError:
        # Robust fallback: w_i is a vertex of conv(S) exactly when it is not a
        # convex combination of the remaining points of S.
        keep = []
        for i in range(m):
            rest = np.delete(W, i, axis=0)
            gens = np.vstack([rest, -rest, -W[i][None, :]])
            res = linprog(c=np.zeros(gens.shape[0]),
                          A_eq=np.vstack([gens.T, np.ones((1, gens.shape[0]))]),
                          b_eq=np.concatenate([W[i], [1.0]]),
                          bounds=(0, None), method="highs")
            if res.status != 0:
                keep.append(i)
        return np.array(keep, dtype=int)


def cross_projection(frame: FrameSet, tol: float = TAU_CERT) -> Polytope:
    """Projection of the cross-polytope: absolute convex hull of the frame (V-rep).

    Duplicates are collapsed with multiplicity and non-extreme points are
    removed, so the stored rows are exactly the vertex representatives.
    """
    _require_certified(frame, tol)
    reps, mult = _collapse_rows(frame.vectors)
    if reps.shape[0] == 0:
        raise DegenerateBodyError("all frame vectors are zero")
    keep = _extreme_indices(reps)
    return Polytope(k=frame.k, vrep=reps[keep], multiplicity=mult[keep])


def enumerate_vertices(p: Polytope, tol: float = TAU_GEO) -> Polytope:
    """All vertices of an H-rep body by enumerating active constraint sets.

    Every vertex lies on k independent constraints <g_i, y> = +/-1, so the
    C(m, k) index subsets and 2^{k-1} sign patterns (one per +/- pair) are
    solved in a batch and filtered for feasibility.
    """
    if p.hrep is None:
        raise ValueError("enumerate_vertices needs an H-representation")
    G = p.hrep
    m, k = G.shape
    if k > K_EXACT or m > M_EXACT:
        raise UnsupportedDimensionError(
            f"vertex enumeration supports k <= {K_EXACT} and m <= {M_EXACT}, "
            f"got k={k}, m={m}; use estimate_volume for larger bodies")
    if m < k or np.linalg.matrix_rank(G) < k:
        raise UnboundedBodyError("functionals do not span R^k; the body is unbounded")
    if k == 1:
        t = 1.0 / float(np.max(np.abs(G[:, 0])))
        return Polytope(k=1, vrep=np.array([[t]]))
    combos = np.array(list(itertools.combinations(range(m), k)))
    signs = np.array(list(itertools.product([1.0], *([[1.0, -1.0]] * (k - 1)))))
    sub = G[combos]
    keep = np.abs(np.linalg.det(sub)) > 1e-12
    if not np.any(keep):
        raise DegenerateBodyError("all constraint subsets are singular")
    rhs = np.tile(signs.T[None, :, :], (int(np.count_nonzero(keep)), 1, 1))
    sols = np.linalg.solve(sub[keep], rhs)
    cand = sols.transpose(0, 2, 1).reshape(-1, k)
    feasible = cand[np.max(np.abs(cand @ G.T), axis=1) <= 1.0 + tol]
    verts, _ = _collapse_rows(feasible, tol)
    if verts.shape[0] == 0:
        raise DegenerateBodyError("no vertices found; the body has empty interior")
    return Polytope(k=k, vrep=verts)


def volume(p: Polytope) -> float:
    """Exact volume via the convex hull of the symmetrized vertex set."""
    if p.k > K_EXACT:
        raise UnsupportedDimensionError(
            f"exact volume supports k <= {K_EXACT}; use estimate_volume")
    verts = p.vrep if p.vrep is not None else enumerate_vertices(p).vrep
    if p.k == 1:
        return float(2.0 * np.max(np.abs(verts)))
    S = np.vstack([verts, -verts])
    if np.linalg.matrix_rank(S) < p.k:
        raise DegenerateBodyError("body is not full-dimensional")
    return float(ConvexHull(S).volume)


def support_function(p: Polytope, direction) -> float:
    """h(u) = max over the body of <u, y>.

    V-rep: the maximum of |<w_i, u>| over vertex representatives.  H-rep:
    the optimal value of the bounded linear program over the constraints.
    """
    u = np.asarray(direction, dtype=float)
    if u.shape != (p.k,):
        raise ValueError(f"direction must have shape ({p.k},)")
    if p.vrep is not None:
        return float(np.max(np.abs(p.vrep @ u)))
    G = p.hrep
    res = linprog(c=-u, A_ub=np.vstack([G, -G]), b_ub=np.ones(2 * G.shape[0]),
                  bounds=[(None, None)] * p.k, method="highs")
    if res.status == 3:
        raise UnboundedBodyError("support is unbounded in this direction")
    if res.status != 0:
        raise ArithmeticError(f"support program failed: {res.message}")
    return float(-res.fun)


def polar(p: Polytope) -> Polytope:
    """Polar body: vertex representatives and functionals swap roles."""
    if p.vrep is not None and np.linalg.matrix_rank(p.vrep) < p.k:
        raise DegenerateBodyError(
            "origin is not interior: vertex representatives do not span R^k")
    new_v = None if p.hrep is None else np.array(p.hrep)
    new_h = None if p.vrep is None else np.array(p.vrep)
    return Polytope(k=p.k, vrep=new_v, hrep=new_h, multiplicity=p.multiplicity)


def estimate_volume(p: Polytope, samples: int, seed: int) -> VolumeEstimate:
    """Hit-or-miss Monte Carlo volume, sampling uniformly in a covering ellipsoid.

    The container is the Lowner ellipsoid of the body's vertices, so the
    estimate hits/samples * vol(container) is unbiased.  The standard error
    is the binomial one, sqrt(p(1-p)/samples) * vol(container).
    """
    if samples < 1:
        raise ValueError("samples must be positive")
    k = p.k
    verts = p.vrep if p.vrep is not None else enumerate_vertices(p).vrep
    fit = lowner_symmetric(verts, eps=_ESTIMATE_EPS)
    vol_container = ellipsoid_volume(fit.ellipsoid)
    L_inv = np.linalg.inv(np.linalg.cholesky(fit.ellipsoid.matrix))

    if p.hrep is not None:
        functionals = p.hrep
    elif k <= K_EXACT:
        functionals = enumerate_vertices(polar(p)).vrep
    else:
        functionals = None

    rng = np.random.default_rng(seed)
    hits = 0
    done = 0
    while done < samples:
        count = min(100_000, samples - done)
        z = rng.standard_normal((count, k))
        z /= np.linalg.norm(z, axis=1, keepdims=True)
        radii = rng.random(count) ** (1.0 / k)
        batch = (z * radii[:, None]) @ L_inv
        if functionals is not None:
            inside = np.max(np.abs(batch @ functionals.T), axis=1) <= 1.0
            hits += int(np.count_nonzero(inside))
        else:
            hits += sum(1 for y in batch
                        if absolute_hull_gauge(verts, y) <= 1.0 + TAU_GEO)
        done += count
    frac = hits / samples
    value = frac * vol_container
    err = math.sqrt(frac * (1.0 - frac) / samples) * vol_container
    return VolumeEstimate(value=value, standard_error=err)


def equality_subspace(n: int, k: int) -> Subspace:
    """Block-averaging subspace attaining the section/projection volume bounds.

    Row j of the basis is sqrt(k/n) on coordinates j*(n/k) .. (j+1)*(n/k)-1
    and zero elsewhere, so the projected standard basis has all squared
    norms equal to k/n.  Requires k to divide n.
    """
    if k < 1 or n < k:
        raise ValueError(f"need n >= k >= 1, got n={n}, k={k}")
    if n % k != 0:
        raise ValueError(f"k must divide n for the equality construction, got n={n}, k={k}")
    block = n // k
    val = math.sqrt(k / n)
    basis = np.zeros((k, n))
    for j in range(k):
        basis[j, j * block:(j + 1) * block] = val
    return Subspace(n=n, k=k, basis=basis)
