import math

import numpy as np
import pytest

from framegeo.ellipsoids import (ConvergenceError, Ellipsoid, SpanError,
                                 check_covering_bound, ellipsoid_volume,
                                 john_of_cube_section, lowner_symmetric,
                                 polar_ellipsoid, unit_ball_volume)
from framegeo.frames import Subspace, project_standard_basis
from framegeo.polytopes import equality_subspace
from framegeo.experiments import random_subspace


def test_unit_ball_volumes():
    assert unit_ball_volume(1) == pytest.approx(2.0)
    assert unit_ball_volume(2) == pytest.approx(math.pi)
    assert unit_ball_volume(3) == pytest.approx(4.0 * math.pi / 3.0)


def test_ellipsoid_volume_diagonal():
    e = Ellipsoid(k=2, matrix=2.0 * np.eye(2))
    assert ellipsoid_volume(e) == pytest.approx(math.pi / 2.0, rel=1e-12)


def test_ellipsoid_rejects_non_positive_definite():
    with pytest.raises(ValueError):
        Ellipsoid(k=2, matrix=np.array([[1.0, 0.0], [0.0, -1.0]]))


def test_polar_is_an_involution():
    rng = np.random.default_rng(2)
    B = rng.standard_normal((3, 3))
    e = Ellipsoid(k=3, matrix=B @ B.T + np.eye(3))
    back = polar_ellipsoid(polar_ellipsoid(e))
    assert np.max(np.abs(back.matrix - e.matrix)) <= 1e-12
    # volume product of an ellipsoid and its polar is the squared ball volume
    prod = ellipsoid_volume(e) * ellipsoid_volume(polar_ellipsoid(e))
    assert prod == pytest.approx(unit_ball_volume(3) ** 2, rel=1e-9)


def test_single_pair_interval():
    fit = lowner_symmetric(np.array([[0.5]]))
    assert abs(fit.ellipsoid.matrix[0, 0] - 4.0) <= 1e-12
    assert fit.weights[0] == pytest.approx(1.0)


def test_interval_oracle_exact():
    # in one dimension the cover is the interval of half-length max |p_i|
    rng = np.random.default_rng(11)
    for _ in range(20):
        pts = rng.standard_normal((6, 1)) * rng.uniform(0.1, 5.0)
        fit = lowner_symmetric(pts)
        expected = 1.0 / float(np.max(np.abs(pts))) ** 2
        assert abs(fit.ellipsoid.matrix[0, 0] - expected) <= 1e-12 * expected


def test_equality_frame_gives_round_ellipsoid():
    frame = project_standard_basis(equality_subspace(4, 2))
    fit = lowner_symmetric(frame.vectors)
    assert np.max(np.abs(fit.ellipsoid.matrix - 2.0 * np.eye(2))) <= 1e-9
    assert np.allclose(fit.weights, 0.25, atol=1e-9)


def test_axis_aligned_john_is_unit_ball():
    basis = np.zeros((2, 5))
    basis[0, 0] = basis[1, 1] = 1.0
    ell = john_of_cube_section(Subspace(n=5, k=2, basis=basis))
    assert np.max(np.abs(ell.matrix - np.eye(2))) <= 1e-9


@pytest.mark.parametrize("seed", range(8))
def test_containment_and_support_certificates(seed):
    rng = np.random.default_rng(seed)
    m, k = int(rng.integers(5, 12)), int(rng.integers(2, 5))
    pts = rng.standard_normal((m, k))
    eps = 1e-7
    fit = lowner_symmetric(pts, eps=eps)
    quad = np.einsum("ij,jk,ik->i", pts, fit.ellipsoid.matrix, pts)
    assert np.max(quad) <= 1.0 + eps
    assert np.max(quad) >= 1.0 - eps * k
    support = fit.weights > eps
    assert np.all(quad[support] >= 1.0 - 10.0 * eps)
    assert fit.weights.min() >= 0.0
    assert fit.weights.sum() == pytest.approx(1.0, abs=1e-9)


def test_scale_equivariance():
    rng = np.random.default_rng(33)
    pts = rng.standard_normal((7, 3))
    base = lowner_symmetric(pts).ellipsoid.matrix
    for c in (0.5, 2.0):
        scaled = lowner_symmetric(c * pts).ellipsoid.matrix
        assert np.max(np.abs(scaled - base / c ** 2)) <= 1e-10 * np.max(np.abs(base))


def test_rotation_leaves_volume_invariant():
    rng = np.random.default_rng(44)
    pts = rng.standard_normal((9, 3))
    vol = ellipsoid_volume(lowner_symmetric(pts).ellipsoid)
    for seed in range(3):
        q, r = np.linalg.qr(np.random.default_rng(seed).standard_normal((3, 3)))
        q = q * np.sign(np.diag(r))
        vol_rot = ellipsoid_volume(lowner_symmetric(pts @ q.T).ellipsoid)
        assert vol_rot == pytest.approx(vol, rel=1e-8)


def test_zero_vectors_are_dropped():
    pts = np.array([[1.0, 0.0], [0.0, 0.0], [0.0, 2.0]])
    fit = lowner_symmetric(pts)
    assert fit.weights[1] == 0.0
    ref = lowner_symmetric(pts[[0, 2]])
    assert np.max(np.abs(fit.ellipsoid.matrix - ref.ellipsoid.matrix)) <= 1e-12


def test_rank_deficient_points_raise():
    pts = np.array([[1.0, 1.0], [2.0, 2.0], [-1.0, -1.0]])
    with pytest.raises(SpanError) as err:
        lowner_symmetric(pts)
    assert err.value.rank == 1


def test_eps_must_be_positive():
    with pytest.raises(ValueError):
        lowner_symmetric(np.eye(2), eps=0.0)


def test_iteration_cap_raises_with_gap():
    rng = np.random.default_rng(7)
    pts = rng.standard_normal((30, 4))
    with pytest.raises(ConvergenceError) as err:
        lowner_symmetric(pts, eps=1e-12, max_iterations=3)
    assert err.value.gap > 0.0


def test_covering_bound_report_on_equality_case():
    frame = project_standard_basis(equality_subspace(6, 3))
    fit = lowner_symmetric(frame.vectors)
    report = check_covering_bound(frame, fit.ellipsoid)
    assert report.covers
    assert report.bound == pytest.approx(0.5 ** 1.5, rel=1e-12)
    assert report.ratio == pytest.approx(report.bound, rel=1e-9)
    assert report.equality_profile
    assert report.bound_holds


def test_covering_bound_detects_non_cover():
    frame = project_standard_basis(equality_subspace(4, 2))
    tiny = Ellipsoid(k=2, matrix=100.0 * np.eye(2))
    report = check_covering_bound(frame, tiny)
    assert not report.covers
    assert report.bound_holds  # vacuous when the ellipsoid does not cover


@pytest.mark.parametrize("n,k,seed", [(5, 2, 0), (7, 3, 1), (8, 4, 2)])
def test_projected_frames_respect_volume_bound(n, k, seed):
    frame = project_standard_basis(random_subspace(n, k, seed))
    fit = lowner_symmetric(frame.vectors)
    report = check_covering_bound(frame, fit.ellipsoid)
    assert report.covers and report.bound_holds
    assert report.ratio >= report.bound - 1e-6


def test_k2_grid_oracle_local_optimality():
    # no nearby covering ellipse does better than the solver by more than it should
    rng = np.random.default_rng(101)
    pts = rng.standard_normal((8, 2))
    A = lowner_symmetric(pts).ellipsoid.matrix
    evals, evecs = np.linalg.eigh(A)
    axes = 1.0 / np.sqrt(evals)
    vol_solver = axes[0] * axes[1]
    theta0 = math.atan2(evecs[1, 0], evecs[0, 0])
    best = math.inf
    thetas = theta0 + np.linspace(-0.02, 0.02, 21)
    scales = np.linspace(0.99, 1.01, 21)
    for theta in thetas:
        c, s = math.cos(theta), math.sin(theta)
        x = pts @ np.array([c, s])
        y = pts @ np.array([-s, c])
        for fa in scales:
            for fb in scales:
                a, b = axes[0] * fa, axes[1] * fb
                if np.all((x / a) ** 2 + (y / b) ** 2 <= 1.0 + 1e-9):
                    best = min(best, a * b)
    assert best >= vol_solver * (1.0 - 0.003)
