"""Origin-centered ellipsoids: volumes, polars, and minimum-volume covers.

An ellipsoid is stored as the symmetric positive-definite matrix A of its
quadratic form {x : <A x, x> <= 1}.  The minimum-volume cover of a
symmetric point set (the Lowner ellipsoid of the points' absolute convex
hull) is computed by Frank-Wolfe ascent with away steps on the design
objective log det(sum_i u_i p_i p_i^T) over the weight simplex, the
standard multiplicative-weights scheme for D-optimal design.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .frames import FrameSet, Subspace, project_standard_basis

DEFAULT_EPS = 1e-7
MAX_ITERATIONS = 10 ** 6
_REFACTOR_PERIOD = 1000


class SpanError(ValueError):
    """Points fail to span R^k; ``rank`` holds the dimension they do span."""

    def __init__(self, message: str, rank: int):
        super().__init__(message)
        self.rank = rank


class ConvergenceError(RuntimeError):
    """Solver hit its iteration cap; ``gap`` is the remaining optimality gap."""

    def __init__(self, message: str, gap: float):
        super().__init__(message)
        self.gap = gap


@dataclass(frozen=True)
class Ellipsoid:
    """{x in R^k : <A x, x> <= 1} for symmetric positive-definite A."""

    k: int
    matrix: np.ndarray

    def __post_init__(self):
        mat = np.array(self.matrix, dtype=float)
        if mat.shape != (self.k, self.k):
            raise ValueError(f"matrix must be {self.k} x {self.k}, got {mat.shape}")
        if not np.all(np.isfinite(mat)):
            raise ValueError("matrix contains non-finite entries")
        mat = 0.5 * (mat + mat.T)
        try:
            np.linalg.cholesky(mat)
        except np.linalg.LinAlgError:
            raise ValueError("matrix is not positive-definite") from None
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)


class LownerFit(NamedTuple):
    ellipsoid: Ellipsoid
    weights: np.ndarray


@dataclass(frozen=True)
class CoveringReport:
    """Covering and volume-ratio report for a frame against (k/n)^{k/2}."""

    covers: bool
    ratio: float
    bound: float
    equality_profile: bool
    bound_holds: bool


def unit_ball_volume(k: int) -> float:
    """Volume of the Euclidean unit ball in R^k."""
    return math.pi ** (k / 2) / math.gamma(k / 2 + 1)


def ellipsoid_volume(e: Ellipsoid) -> float:
    """vol(e) = vol(B^k) / sqrt(det A)."""
    sign, logdet = np.linalg.slogdet(e.matrix)
    if sign <= 0:
        raise ValueError("ellipsoid matrix must be positive-definite")
    return unit_ball_volume(e.k) * math.exp(-0.5 * logdet)


def polar_ellipsoid(e: Ellipsoid) -> Ellipsoid:
    """Polar body of an origin-centered ellipsoid: A maps to A^{-1}."""
    inv = np.linalg.inv(e.matrix)
    return Ellipsoid(k=e.k, matrix=0.5 * (inv + inv.T))


def lowner_symmetric(points, eps: float = DEFAULT_EPS,
                     max_iterations: int = MAX_ITERATIONS) -> LownerFit:
    """Minimum-volume origin-centered ellipsoid covering +/- p for each point.

    Maximizes log det M(u) for M(u) = sum_i u_i p_i p_i^T over the simplex.
    Each iteration takes either a Frank-Wolfe step toward the point with the
    largest leverage g_i = p_i^T M^{-1} p_i or a Wolfe away step shrinking
    the weight of the support point with the smallest leverage, whichever
    gap is larger; both step sizes come from the exact line search
    lambda = (g - k) / (k (g - 1)).  The inverse of M is maintained by
    rank-one updates and refactorized periodically (and on weight-dropping
    steps) to control drift.  On exit A = (k M(u))^{-1} satisfies
    max_i <A p_i, p_i> <= 1 + eps, and every surviving support point has
    <A p_i, p_i> >= 1 - eps.

    Zero input vectors carry no constraint and are dropped before solving;
    their returned weight is zero.
    """
    P_in = np.asarray(points, dtype=float)
    if P_in.ndim != 2 or P_in.shape[0] == 0:
        raise ValueError("points must be a nonempty (m, k) array")
    if not np.all(np.isfinite(P_in)):
        raise ValueError("points contain non-finite entries")
    if eps <= 0:
        raise ValueError("eps must be positive")
    keep = np.einsum("ij,ij->i", P_in, P_in) > 0.0
    P = P_in[keep]
    k = P_in.shape[1]
    m = P.shape[0]
    rank = int(np.linalg.matrix_rank(P)) if m else 0
    if rank < k:
        raise SpanError(f"points span a {rank}-dimensional subspace of R^{k}", rank)

    u = np.full(m, 1.0 / m)
    Minv = np.linalg.inv((P.T * u) @ P)
    since_refactor = 0
    threshold = k * (1.0 + eps)
    floor = k * (1.0 - eps)
    gap = math.inf

    for _ in range(max_iterations):
        g = np.einsum("ij,jk,ik->i", P, Minv, P)
        i_fw = int(np.argmax(g))
        g_sup = np.where(u > 0.0, g, math.inf)
        i_aw = int(np.argmin(g_sup))
        gap = max(g[i_fw] - k, k - g_sup[i_aw])
        if g[i_fw] <= threshold and g_sup[i_aw] >= floor:
            if since_refactor == 0:
                break
            u = u / u.sum()
            Minv = np.linalg.inv((P.T * u) @ P)
            since_refactor = 0
            continue
        if g[i_fw] - k >= k - g_sup[i_aw]:
            j = i_fw
            gj = float(g[j])
            lam = (gj - k) / (k * (gj - 1.0))
            u *= 1.0 - lam
            u[j] += lam
            denom = 1.0 - lam + lam * gj
            if 1.0 - lam < 1e-12 or denom < 1e-12:
                Minv = np.linalg.inv((P.T * u) @ P)
                since_refactor = 0
                continue
            Mp = Minv @ P[j]
            Minv = (Minv - np.outer(Mp, Mp) * (lam / denom)) / (1.0 - lam)
        else:
            j = i_aw
            gj = float(g[j])
            lam_max = u[j] / (1.0 - u[j]) if u[j] < 1.0 else math.inf
            lam_unc = (k - gj) / (k * (gj - 1.0)) if gj > 1.0 else math.inf
            lam = min(lam_unc, lam_max)
            drop = lam >= lam_max
            u *= 1.0 + lam
            u[j] -= lam
            if drop:
                u[j] = 0.0
            denom = 1.0 + lam - lam * gj
            if drop or denom < 1e-12:
                u = u / u.sum()
                Minv = np.linalg.inv((P.T * u) @ P)
                since_refactor = 0
                continue
            Mp = Minv @ P[j]
            Minv = (Minv + np.outer(Mp, Mp) * (lam / denom)) / (1.0 + lam)
        since_refactor += 1
        if since_refactor >= _REFACTOR_PERIOD:
            u = u / u.sum()
            Minv = np.linalg.inv((P.T * u) @ P)
            since_refactor = 0
    else:
        raise ConvergenceError(
            f"no convergence within {max_iterations} iterations "
            f"(remaining gap {gap:.3e})", float(gap))

    A = np.linalg.inv((P.T * u) @ P) / k
    ell = Ellipsoid(k=k, matrix=0.5 * (A + A.T))
    weights = np.zeros(P_in.shape[0])
    weights[keep] = u
    return LownerFit(ellipsoid=ell, weights=weights)


def john_of_cube_section(subspace: Subspace, eps: float = DEFAULT_EPS) -> Ellipsoid:
    """Largest ellipsoid inside the cube section, in subspace coordinates.

    The section of the unit cube by the subspace and the projection of the
    cross-polytope onto it are polar to each other, so the John ellipsoid
    of the section is the polar of the Lowner ellipsoid of the projected
    standard basis.
    """
    frame = project_standard_basis(subspace)
    fit = lowner_symmetric(frame.vectors, eps=eps)
    return polar_ellipsoid(fit.ellipsoid)


def check_covering_bound(frame: FrameSet, e: Ellipsoid, tol: float = 1e-6) -> CoveringReport:
    """Volume bound report for an ellipsoid covering a unit decomposition.

    Any origin-centered ellipsoid containing the frame vectors has volume at
    least (k/n)^{k/2} times the unit-ball volume, with equality exactly when
    every squared norm equals k/n.  The caller is responsible for passing a
    certified frame; ``bound_holds`` records whether the inequality held
    whenever ``covers`` did.
    """
    quad = np.einsum("ij,jk,ik->i", frame.vectors, e.matrix, frame.vectors)
    covers = bool(np.all(quad <= 1.0 + tol))
    ratio = ellipsoid_volume(e) / unit_ball_volume(e.k)
    bound = (frame.k / frame.n) ** (frame.k / 2)
    profile = frame.squared_norms()
    equality_profile = bool(np.max(np.abs(profile - frame.k / frame.n)) <= tol)
    bound_holds = (not covers) or ratio >= bound - tol
    return CoveringReport(covers=covers, ratio=ratio, bound=bound,
                          equality_profile=equality_profile, bound_holds=bound_holds)
