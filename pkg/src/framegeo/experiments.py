"""Randomized end-to-end verification of the ellipsoid and volume bounds.

Each trial draws a rotation-invariant random subspace, projects the
standard basis onto it, and compares the resulting ellipsoid and polytope
volume ratios against their proved bounds:

    vol(Lowner of projection) / vol(B^k)   >= (k/n)^{k/2}
    vol(John of section)      / vol(B^k)   <= (n/k)^{k/2}
    vol(cube section)         / vol(Q^k)   <= (n/k)^{k/2}
    vol(cross projection)     / vol(D^k)   >= (k/n)^{k/2}

together with the sandwich between polytope and ellipsoid ratios.  The
conjecture scan additionally tracks the two-power bounds 2^{±(n-k)/2}; the
upper one for cube sections is proved (a violation indicates a solver or
volume bug), the lower one for cross projections is exploratory and is
reported without being asserted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .ellipsoids import (DEFAULT_EPS, ellipsoid_volume, lowner_symmetric,
                         polar_ellipsoid, unit_ball_volume)
from .frames import Subspace, project_standard_basis
from .polytopes import (K_EXACT, UnsupportedDimensionError, cross_projection,
                        polytope_from_frame, volume)
from . import frames as _frames
from . import majorization as _majorization
from . import polytopes as _polytopes

BOUND_TOL = 1e-6
_MASK64 = (1 << 64) - 1

CSV_COLUMNS = (
    "n", "k", "trial_id", "seed",
    "lowner_ratio", "john_ratio", "cube_section_ratio", "cross_projection_ratio",
    "bound_kn", "bound_nk",
    "pass_lowner", "pass_john", "pass_cube", "pass_cross",
    "equality_flags", "profile_uniform",
)

_RATIO_COLUMNS = {
    "lowner_ratio": "lowner",
    "john_ratio": "john",
    "cube_section_ratio": "cube",
    "cross_projection_ratio": "cross",
}


def splitmix64(value: int) -> int:
    """One SplitMix64 scrambling round of a 64-bit integer."""
    z = (value + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def trial_seed(master_seed: int, trial_id: int) -> int:
    """Per-trial seed: SplitMix64 mix of master seed + trial id.

    The mix decorrelates neighbouring trial streams while staying a pure
    function of (master_seed, trial_id), so trials can be evaluated in any
    order or in parallel without changing their draws.
    """
    return splitmix64((master_seed + trial_id) & _MASK64)


def random_subspace(n: int, k: int, seed: int) -> Subspace:
    """Rotation-invariant random subspace via QR of a Gaussian matrix.

    The basis rows are the orthonormalized columns of an n x k standard
    normal sample (signs fixed by the R diagonal); a numerically degenerate
    draw is resampled internally.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    rng = np.random.default_rng(seed)
    while True:
        gauss = rng.standard_normal((n, k))
        q, r = np.linalg.qr(gauss)
        diag = np.diag(r)
        if np.min(np.abs(diag)) > 1e-12:
            return Subspace(n=n, k=k, basis=(q * np.sign(diag)).T)


@dataclass(frozen=True)
class ExperimentReport:
    """Per-trial ratios, bounds, pass flags, and equality flags."""

    trial_id: int
    n: int
    k: int
    seed: int
    ratios: dict
    bounds: dict
    passes: dict
    equality: dict
    profile_uniform: bool
    extras: dict = field(default_factory=dict)

    def __post_init__(self):
        for key in self.ratios:
            if key not in self.bounds or key not in self.passes or key not in self.equality:
                raise ValueError(f"ratio {key!r} lacks a matching bound/pass/equality entry")

    @property
    def proved_ok(self) -> bool:
        return all(self.passes.values())


def _equality_flag(ratio: float, bound: float, tol: float) -> bool:
    return abs(ratio - bound) <= tol * abs(bound)


def _profile_uniform(frame, tol: float) -> bool:
    return bool(np.max(np.abs(frame.squared_norms() - frame.k / frame.n)) <= tol)


def verify_ellipsoid_bounds(subspace: Subspace, eps: float = DEFAULT_EPS,
                            tol: float = BOUND_TOL, trial_id: int = 0,
                            seed: int = 0) -> ExperimentReport:
    """Check the Lowner/John volume-ratio bounds on one subspace."""
    n, k = subspace.n, subspace.k
    frame = project_standard_basis(subspace)
    fit = lowner_symmetric(frame.vectors, eps=eps)
    ball = unit_ball_volume(k)
    lowner_ratio = ellipsoid_volume(fit.ellipsoid) / ball
    john_ratio = ellipsoid_volume(polar_ellipsoid(fit.ellipsoid)) / ball
    bound_kn = (k / n) ** (k / 2)
    bound_nk = (n / k) ** (k / 2)
    ratios = {"lowner_ratio": lowner_ratio, "john_ratio": john_ratio}
    bounds = {"lowner_ratio": bound_kn, "john_ratio": bound_nk}
    passes = {"lowner_ratio": bool(lowner_ratio >= bound_kn - tol),
              "john_ratio": bool(john_ratio <= bound_nk + tol)}
    equality = {key: _equality_flag(ratios[key], bounds[key], tol) for key in ratios}
    extras = {"ellipsoid_equality_concordant":
              equality["lowner_ratio"] == equality["john_ratio"]}
    return ExperimentReport(trial_id=trial_id, n=n, k=k, seed=seed,
                            ratios=ratios, bounds=bounds, passes=passes,
                            equality=equality,
                            profile_uniform=_profile_uniform(frame, tol),
                            extras=extras)


def verify_volume_bounds(subspace: Subspace, eps: float = DEFAULT_EPS,
                         tol: float = BOUND_TOL, trial_id: int = 0,
                         seed: int = 0) -> ExperimentReport:
    """Check the polytope volume bounds, the ellipsoid bounds, and the sandwich
    between them on one subspace (k must be within the exact-volume range)."""
    n, k = subspace.n, subspace.k
    if k > K_EXACT:
        raise UnsupportedDimensionError(
            f"exact volumes require k <= {K_EXACT}, got k={k}")
    base = verify_ellipsoid_bounds(subspace, eps=eps, tol=tol,
                                   trial_id=trial_id, seed=seed)
    frame = project_standard_basis(subspace)
    vol_section = volume(polytope_from_frame(frame))
    vol_cross = volume(cross_projection(frame))
    cube_ratio = vol_section / 2.0 ** k
    cross_ratio = vol_cross / (2.0 ** k / math.factorial(k))
    bound_kn = base.bounds["lowner_ratio"]
    bound_nk = base.bounds["john_ratio"]
    ratios = dict(base.ratios,
                  cube_section_ratio=cube_ratio,
                  cross_projection_ratio=cross_ratio)
    bounds = dict(base.bounds,
                  cube_section_ratio=bound_nk,
                  cross_projection_ratio=bound_kn)
    passes = dict(base.passes,
                  cube_section_ratio=bool(cube_ratio <= bound_nk + tol),
                  cross_projection_ratio=bool(cross_ratio >= bound_kn - tol),
                  chain_cube=bool(cube_ratio <= base.ratios["john_ratio"] + tol),
                  chain_cross=bool(cross_ratio >= base.ratios["lowner_ratio"] - tol))
    equality = dict(base.equality,
                    cube_section_ratio=_equality_flag(cube_ratio, bound_nk, tol),
                    cross_projection_ratio=_equality_flag(cross_ratio, bound_kn, tol))
    extras = dict(base.extras, volume_product=vol_section * vol_cross)
    return ExperimentReport(trial_id=trial_id, n=n, k=k, seed=seed,
                            ratios=ratios, bounds=bounds, passes=passes,
                            equality=equality, profile_uniform=base.profile_uniform,
                            extras=extras)


@dataclass(frozen=True)
class ConjectureScanSummary:
    """Extremes of the volume ratios over a batch of random subspaces."""

    n: int
    k: int
    trials: int
    seed: int
    min_cross_ratio: float
    bound_2pow: float        # exploratory lower bound 2^{(k-n)/2} for cross projections
    max_cube_ratio: float
    bound_ball2: float       # proved upper bound 2^{(n-k)/2} for cube sections
    ball2_violations: tuple  # trial ids exceeding the proved bound (solver/volume bug)
    counterexample: Optional[dict]  # first trial below the exploratory bound, if any


def conjecture_scan(n: int, k: int, trials: int, seed: int,
                    slack: float = 1e-9) -> ConjectureScanSummary:
    """Scan random subspaces for the two-power volume bounds.

    The cube-section ratio must stay below 2^{(n-k)/2} (proved; violations
    are collected as evidence of a solver or volume bug).  The running
    minimum of the cross-projection ratio is compared against 2^{(k-n)/2}
    without being asserted; the first trial below that bound, if any, is
    serialized as a counterexample candidate.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    if k > K_EXACT:
        raise UnsupportedDimensionError(
            f"exact volumes require k <= {K_EXACT}, got k={k}")
    bound_2pow = 2.0 ** ((k - n) / 2)
    bound_ball2 = 2.0 ** ((n - k) / 2)
    min_cross = math.inf
    max_cube = -math.inf
    violations = []
    counterexample = None
    for t in range(trials):
        s = trial_seed(seed, t)
        sub = random_subspace(n, k, s)
        frame = project_standard_basis(sub)
        cube_ratio = volume(polytope_from_frame(frame)) / 2.0 ** k
        cross_ratio = volume(cross_projection(frame)) / (2.0 ** k / math.factorial(k))
        max_cube = max(max_cube, cube_ratio)
        min_cross = min(min_cross, cross_ratio)
        if cube_ratio > bound_ball2 + slack:
            violations.append(t)
        if cross_ratio < bound_2pow - slack and counterexample is None:
            counterexample = {
                "trial_id": t,
                "seed": s,
                "cross_projection_ratio": cross_ratio,
                "subspace": {"n": n, "k": k, "basis": sub.basis.tolist()},
            }
    return ConjectureScanSummary(n=n, k=k, trials=trials, seed=seed,
                                 min_cross_ratio=min_cross, bound_2pow=bound_2pow,
                                 max_cube_ratio=max_cube, bound_ball2=bound_ball2,
                                 ball2_violations=tuple(violations),
                                 counterexample=counterexample)


@dataclass(frozen=True)
class SuiteSpec:
    """One batch of the verification suite."""

    n: int
    k: int
    trials: int
    seed: int
    experiments: tuple = ("ellipsoid", "volume")

    def __post_init__(self):
        extra = set(self.experiments) - {"ellipsoid", "volume"}
        if extra:
            raise ValueError(f"unknown experiments: {sorted(extra)}")


def run_suite(config) -> tuple[list[ExperimentReport], str]:
    """Run the verification suite for every spec in ``config``.

    Returns the reports sorted by (n, k, trial_id) together with their CSV
    rendering.  Determinism: the per-trial seed is trial_seed(seed, t), so
    the output is a pure function of the config.
    """
    reports = []
    for spec in config:
        for t in range(spec.trials):
            s = trial_seed(spec.seed, t)
            sub = random_subspace(spec.n, spec.k, s)
            if "volume" in spec.experiments:
                reports.append(verify_volume_bounds(sub, trial_id=t, seed=s))
            elif "ellipsoid" in spec.experiments:
                reports.append(verify_ellipsoid_bounds(sub, trial_id=t, seed=s))
    reports.sort(key=lambda r: (r.n, r.k, r.trial_id))
    return reports, render_csv(reports)


def _csv_float(value) -> str:
    return "" if value is None else repr(float(value))


def _csv_flag(value) -> str:
    return "" if value is None else str(bool(value))


def render_csv(reports) -> str:
    """Deterministic CSV rendering with the tolerance ledger in the header."""
    lines = [
        "# tolerance ledger: tau_orth=%g tau_cert=%g tau_maj=%g tau_sh=%g "
        "tau_geo=%g mvee_eps=%g bound_tol=%g" % (
            _frames.TAU_ORTH, _frames.TAU_CERT, _majorization.TAU_MAJ,
            _majorization.TAU_SH, _polytopes.TAU_GEO, DEFAULT_EPS, BOUND_TOL),
        ",".join(CSV_COLUMNS),
    ]
    for r in reports:
        flags = "|".join(short for key, short in _RATIO_COLUMNS.items()
                         if r.equality.get(key))
        row = [
            str(r.n), str(r.k), str(r.trial_id), str(r.seed),
            _csv_float(r.ratios.get("lowner_ratio")),
            _csv_float(r.ratios.get("john_ratio")),
            _csv_float(r.ratios.get("cube_section_ratio")),
            _csv_float(r.ratios.get("cross_projection_ratio")),
            _csv_float(r.bounds.get("lowner_ratio")),
            _csv_float(r.bounds.get("john_ratio")),
            _csv_flag(r.passes.get("lowner_ratio")),
            _csv_flag(r.passes.get("john_ratio")),
            _csv_flag(r.passes.get("cube_section_ratio")),
            _csv_flag(r.passes.get("cross_projection_ratio")),
            flags,
            str(bool(r.profile_uniform)),
        ]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def suite_exit_status(reports) -> int:
    """0 when every proved-bound pass flag holds, 1 otherwise."""
    return 0 if all(r.proved_ok for r in reports) else 1
