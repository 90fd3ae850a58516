"""Majorization order and frames with prescribed squared norms.

A nonnegative profile (c_1, ..., c_n) is the squared-norm sequence of some
unit decomposition of R^k exactly when the indicator vector with k ones
majorizes it.  The constructive direction is implemented with plane
rotations acting on the rows of an n x k matrix with orthonormal columns:
each rotation moves one row's squared norm exactly onto its target while
preserving the column Gram identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .frames import FrameSet, FrameStructureError, _float_array

TAU_MAJ = 1e-9  # majorization / realizability tolerance
TAU_SH = 1e-8   # verification tolerance for constructed realizations


class NotRealizableError(ValueError):
    """Profile cannot be the squared-norm sequence of a unit decomposition.

    ``prefix`` is the length of the first violated prefix-sum condition,
    or 0 when the total sum is wrong.
    """

    def __init__(self, message: str, prefix: int):
        super().__init__(message)
        self.prefix = prefix


@dataclass(frozen=True)
class NormProfile:
    """Candidate squared norms for a unit decomposition of R^k."""

    k: int
    entries: np.ndarray

    def __post_init__(self):
        if self.k < 1:
            raise FrameStructureError(f"k must be positive, got {self.k}")
        ent = _float_array(self.entries, "entries")
        if ent.ndim != 1 or ent.size == 0:
            raise FrameStructureError("entries must be a nonempty 1-d array")
        if np.any(ent < 0):
            raise FrameStructureError("entries must be nonnegative")
        ent.setflags(write=False)
        object.__setattr__(self, "entries", ent)

    @property
    def n(self) -> int:
        return self.entries.shape[0]


def majorizes(a, b, tol: float = TAU_MAJ) -> bool:
    """True when every descending prefix sum of ``a`` dominates the one of
    ``b`` within ``tol`` and the totals agree within ``tol``."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.ndim != 1 or a.shape != b.shape:
        raise FrameStructureError("majorizes expects two 1-d vectors of equal length")
    if a.size == 0:
        return True
    pa = np.cumsum(np.sort(a)[::-1])
    pb = np.cumsum(np.sort(b)[::-1])
    if abs(pa[-1] - pb[-1]) > tol:
        return False
    return bool(np.all(pa >= pb - tol))


def _first_violation(entries: np.ndarray, k: int, tol: float) -> int:
    """First violated realizability condition: prefix length m >= 1, 0 for a
    total-sum mismatch, or -1 when none is violated."""
    prefix = np.cumsum(np.sort(entries)[::-1])
    n = entries.size
    cap = np.minimum(np.arange(1, n + 1), k)
    bad = np.nonzero(prefix > cap + tol)[0]
    if bad.size:
        return int(bad[0]) + 1
    if abs(prefix[-1] - k) > tol:
        return 0
    return -1


def is_realizable(profile: NormProfile, n: int | None = None,
                  tol: float = TAU_MAJ) -> bool:
    """Whether some unit decomposition of R^k has these squared norms."""
    if n is not None and n != profile.n:
        raise FrameStructureError(f"profile has {profile.n} entries, expected n={n}")
    if profile.k > profile.n:
        raise FrameStructureError(
            f"k={profile.k} exceeds the number of entries n={profile.n}")
    indicator = np.zeros(profile.n)
    indicator[:profile.k] = 1.0
    return majorizes(indicator, profile.entries, tol)


def _rotate_rows(B: np.ndarray, i: int, j: int, norms: np.ndarray, target: float) -> None:
    """Left-rotate rows i and j of B so row i's squared norm becomes ``target``.

    With a = |B_i|^2, b = |B_j|^2 and g = <B_i, B_j>, the squared norm of
    cos(t) B_i + sin(t) B_j equals (a+b)/2 + R cos(2t - phi) for
    R = hypot((a-b)/2, g) and phi = atan2(g, (a-b)/2), so the angle solving
    for ``target`` is closed-form whenever target lies between the row norms.
    """
    a = norms[i]
    b = norms[j]
    g = float(B[i] @ B[j])
    mid = 0.5 * (a + b)
    radius = math.hypot(0.5 * (a - b), g)
    if radius < 1e-300:
        return
    x = min(1.0, max(-1.0, (target - mid) / radius))
    phi = math.atan2(g, 0.5 * (a - b))
    theta = 0.5 * (phi + math.acos(x))
    c, s = math.cos(theta), math.sin(theta)
    row_i = c * B[i] + s * B[j]
    row_j = -s * B[i] + c * B[j]
    B[i] = row_i
    B[j] = row_j
    norms[i] = float(row_i @ row_i)
    norms[j] = float(row_j @ row_j)


def construct_realization(profile: NormProfile, n: int | None = None) -> FrameSet:
    """Build a unit decomposition whose squared norms match the profile.

    Starting from the standard basis padded with zero rows (squared norms
    1, ..., 1, 0, ..., 0) and processing targets in decreasing order, each
    step pairs the two unassigned rows whose norms straddle the target most
    tightly and rotates that plane so one row meets the target exactly.
    That pairing keeps the remaining norms majorizing the remaining
    targets, so every later target stays reachable.  Rotations act
    orthogonally on the left, so the k columns stay orthonormal throughout;
    at most n - 1 rotations are spent and the rows are returned in the
    original entry order.
    """
    if n is not None and n != profile.n:
        raise FrameStructureError(f"profile has {profile.n} entries, expected n={n}")
    k, size = profile.k, profile.n
    if k > size:
        raise FrameStructureError(f"k={k} exceeds the number of entries n={size}")
    bad = _first_violation(profile.entries, k, TAU_MAJ)
    if bad == 0:
        raise NotRealizableError(
            f"profile sums to {profile.entries.sum():.12g}, expected k={k}", 0)
    if bad > 0:
        raise NotRealizableError(
            f"sum of the {bad} largest entries exceeds {min(bad, k)}", bad)

    order = np.argsort(-profile.entries, kind="stable")
    targets = profile.entries[order]
    B = np.zeros((size, k))
    B[np.arange(k), np.arange(k)] = 1.0
    norms = np.concatenate([np.ones(k), np.zeros(size - k)])
    active = list(range(size))
    source_row = np.empty(size, dtype=int)

    for m, target in enumerate(targets):
        if len(active) == 1:
            source_row[m] = active.pop()
            continue
        nearest = min(active, key=lambda r: abs(norms[r] - target))
        if abs(norms[nearest] - target) <= 1e-12:
            chosen = nearest
        else:
            above = [r for r in active if norms[r] > target]
            below = [r for r in active if norms[r] < target]
            if not above or not below:
                # only reachable when the profile is realizable merely up to
                # tolerance; the nearest row is then within that slack
                chosen = nearest
            else:
                hi = min(above, key=norms.__getitem__)
                lo = max(below, key=norms.__getitem__)
                _rotate_rows(B, hi, lo, norms, float(target))
                chosen = hi
        source_row[m] = chosen
        active.remove(chosen)

    vectors = np.empty((size, k))
    vectors[order] = B[source_row]
    return FrameSet(n=size, k=k, vectors=vectors)


def random_realizable_profile(n: int, k: int, seed: int) -> NormProfile:
    """Deterministic sampler of realizable profiles (interior-biased).

    Exponential variates are normalized to sum k; any mass above the cap of
    1 per entry is redistributed proportionally among the entries with
    headroom until no entry exceeds 1, resampling afresh if 100 rounds do
    not settle.
    """
    if not 1 <= k <= n:
        raise FrameStructureError(f"need 1 <= k <= n, got n={n}, k={k}")
    rng = np.random.default_rng(seed)
    for _ in range(1000):
        x = rng.exponential(size=n)
        x *= k / x.sum()
        for _ in range(100):
            if x.max() <= 1.0 + 1e-12:
                break
            over = x > 1.0
            excess = float(np.sum(x[over] - 1.0))
            x[over] = 1.0
            under = x < 1.0
            pool = float(x[under].sum())
            if pool <= 0.0:
                x[under] += excess / max(1, int(np.count_nonzero(under)))
            else:
                x[under] += excess * x[under] / pool
        if x.max() <= 1.0 + 1e-12:
            x = np.minimum(x, 1.0)
            x *= k / x.sum()
            return NormProfile(k=k, entries=x)
    raise ArithmeticError(f"failed to sample a realizable profile for n={n}, k={k}")
