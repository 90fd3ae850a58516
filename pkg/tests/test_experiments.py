import csv
import io
import math

import numpy as np
import pytest

from framegeo.experiments import (CSV_COLUMNS, ConjectureScanSummary,
                                  ExperimentReport, SuiteSpec, conjecture_scan,
                                  random_subspace, render_csv, run_suite,
                                  splitmix64, suite_exit_status, trial_seed,
                                  verify_ellipsoid_bounds, verify_volume_bounds)
from framegeo.frames import Subspace, project_standard_basis
from framegeo.majorization import NormProfile, construct_realization
from framegeo.polytopes import UnsupportedDimensionError, equality_subspace


def skew_subspace(entries, k):
    """Subspace whose projected standard basis realizes the given profile."""
    frame = construct_realization(NormProfile(k=k, entries=np.asarray(entries, dtype=float)))
    return Subspace(n=frame.n, k=frame.k, basis=frame.vectors.T.copy())


def test_splitmix64_reference_values():
    # first outputs of the reference stream seeded at 0
    assert splitmix64(0) == 0xE220A8397B1DCDAF
    assert splitmix64(0x9E3779B97F4A7C15) == 0x6E789E6AA1B965F4
    assert splitmix64(0) == splitmix64(0)


def test_trial_seed_mixes_and_wraps():
    assert trial_seed(42, 0) == splitmix64(42)
    assert trial_seed(42, 1) == splitmix64(43)
    assert trial_seed(2 ** 64 - 1, 1) == splitmix64(0)
    seeds = {trial_seed(7, t) for t in range(100)}
    assert len(seeds) == 100


def test_random_subspace_is_deterministic_and_orthonormal():
    a = random_subspace(6, 3, seed=5)
    b = random_subspace(6, 3, seed=5)
    assert np.array_equal(a.basis, b.basis)
    assert np.max(np.abs(a.basis @ a.basis.T - np.eye(3))) <= 1e-12
    with pytest.raises(ValueError):
        random_subspace(2, 3, seed=0)


def test_random_subspace_norm_statistics():
    # |P e_1|^2 is uniform on [0, 1] for n=4, k=2, so the mean over many
    # draws sits near 1/2 (3.3 standard deviations here)
    vals = [project_standard_basis(random_subspace(4, 2, trial_seed(99, t))).squared_norms()[0]
            for t in range(1000)]
    assert abs(float(np.mean(vals)) - 0.5) <= 0.03


def test_ellipsoid_report_on_equality_subspace():
    r = verify_ellipsoid_bounds(equality_subspace(6, 2), trial_id=3, seed=17)
    assert (r.n, r.k, r.trial_id, r.seed) == (6, 2, 3, 17)
    assert r.ratios["lowner_ratio"] == pytest.approx(r.bounds["lowner_ratio"], rel=1e-9)
    assert r.ratios["john_ratio"] == pytest.approx(r.bounds["john_ratio"], rel=1e-9)
    assert r.bounds["lowner_ratio"] == pytest.approx((2 / 6) ** 1.0)
    assert r.proved_ok
    assert r.equality["lowner_ratio"] and r.equality["john_ratio"]
    assert r.profile_uniform
    assert r.extras["ellipsoid_equality_concordant"]


def test_ellipsoid_report_on_skew_subspace():
    r = verify_ellipsoid_bounds(skew_subspace([1.0, 0.6, 0.3, 0.1], k=2))
    assert r.proved_ok
    assert not r.profile_uniform
    assert not r.equality["lowner_ratio"]
    assert not r.equality["john_ratio"]
    assert r.extras["ellipsoid_equality_concordant"]


def test_lowner_john_ratios_are_reciprocal():
    for seed in range(5):
        r = verify_ellipsoid_bounds(random_subspace(7, 3, seed))
        prod = r.ratios["lowner_ratio"] * r.ratios["john_ratio"]
        assert prod == pytest.approx(1.0, rel=1e-9)


def test_volume_report_on_equality_subspace():
    r = verify_volume_bounds(equality_subspace(6, 3))
    for key in ("lowner_ratio", "john_ratio", "cube_section_ratio",
                "cross_projection_ratio"):
        assert r.ratios[key] == pytest.approx(r.bounds[key], rel=1e-9), key
        assert r.equality[key], key
    assert r.proved_ok
    assert r.passes["chain_cube"] and r.passes["chain_cross"]
    assert r.extras["volume_product"] == pytest.approx(4.0 ** 3 / 6.0, rel=1e-9)


@pytest.mark.parametrize("seed", range(6))
def test_volume_report_sandwich_on_random_subspaces(seed):
    n, k = 5 + seed % 3, 2 + seed % 2
    r = verify_volume_bounds(random_subspace(n, k, seed))
    assert r.proved_ok
    assert r.ratios["cube_section_ratio"] <= r.ratios["john_ratio"] + 1e-6
    assert r.ratios["cross_projection_ratio"] >= r.ratios["lowner_ratio"] - 1e-6


def test_equality_flag_tracks_uniform_profile():
    reports = [verify_volume_bounds(random_subspace(4, 2, trial_seed(5, t)))
               for t in range(10)]
    reports.append(verify_volume_bounds(equality_subspace(4, 2)))
    for r in reports:
        assert r.equality["lowner_ratio"] == r.profile_uniform


def test_volume_report_requires_exact_range():
    with pytest.raises(UnsupportedDimensionError):
        verify_volume_bounds(random_subspace(8, 6, 0))


def test_report_invariant_rejects_mismatched_keys():
    with pytest.raises(ValueError):
        ExperimentReport(trial_id=0, n=4, k=2, seed=0,
                         ratios={"lowner_ratio": 0.5}, bounds={},
                         passes={}, equality={}, profile_uniform=False)


def test_suite_spec_rejects_unknown_experiments():
    with pytest.raises(ValueError):
        SuiteSpec(n=4, k=2, trials=1, seed=0, experiments=("volume", "frobnicate"))


def test_run_suite_is_deterministic_and_sorted():
    config = [SuiteSpec(n=6, k=3, trials=2, seed=11),
              SuiteSpec(n=4, k=2, trials=3, seed=11)]
    reports_a, csv_a = run_suite(config)
    reports_b, csv_b = run_suite(config)
    assert csv_a == csv_b
    assert [(r.n, r.k, r.trial_id) for r in reports_a] == \
           [(4, 2, 0), (4, 2, 1), (4, 2, 2), (6, 3, 0), (6, 3, 1)]
    for r in reports_a:
        assert r.seed == trial_seed(11, r.trial_id)
    assert suite_exit_status(reports_a) == 0
    assert reports_a == reports_b


def test_run_suite_csv_shape():
    config = [SuiteSpec(n=4, k=2, trials=2, seed=3),
              SuiteSpec(n=5, k=2, trials=1, seed=3, experiments=("ellipsoid",))]
    reports, text = run_suite(config)
    lines = text.splitlines()
    assert lines[0].startswith("# tolerance ledger:")
    assert lines[1] == ",".join(CSV_COLUMNS)
    rows = list(csv.reader(io.StringIO("\n".join(lines[2:]))))
    assert len(rows) == 3
    assert all(len(row) == len(CSV_COLUMNS) for row in rows)
    # the ellipsoid-only row leaves the polytope columns empty
    ell_row = rows[-1]
    assert ell_row[0] == "5"
    idx = CSV_COLUMNS.index("cube_section_ratio")
    assert ell_row[idx] == "" and ell_row[idx + 1] == ""
    full_row = rows[0]
    assert full_row[idx] != ""
    # floats round-trip exactly through repr
    assert float(full_row[4]) == reports[0].ratios["lowner_ratio"]


def test_empty_suite_renders_header_only():
    reports, text = run_suite([])
    assert reports == []
    assert len(text.splitlines()) == 2
    assert suite_exit_status(reports) == 0


def test_exit_status_flags_failures():
    r = verify_ellipsoid_bounds(equality_subspace(4, 2))
    bad = ExperimentReport(trial_id=0, n=4, k=2, seed=0,
                           ratios=r.ratios, bounds=r.bounds,
                           passes={key: False for key in r.passes},
                           equality=r.equality, profile_uniform=True)
    assert suite_exit_status([r, bad]) == 1


def test_equality_csv_flags_column():
    text = render_csv([verify_volume_bounds(equality_subspace(4, 2))])
    row = text.splitlines()[2].split(",")
    assert row[CSV_COLUMNS.index("equality_flags")] == "lowner|john|cube|cross"
    assert row[CSV_COLUMNS.index("profile_uniform")] == "True"


def test_conjecture_scan_line_in_plane():
    summary = conjecture_scan(2, 1, trials=64, seed=9)
    assert isinstance(summary, ConjectureScanSummary)
    assert summary.bound_2pow == pytest.approx(2.0 ** -0.5)
    assert summary.bound_ball2 == pytest.approx(2.0 ** 0.5)
    assert summary.ball2_violations == ()
    assert summary.counterexample is None
    assert summary.min_cross_ratio >= summary.bound_2pow - 1e-9
    assert summary.max_cube_ratio <= summary.bound_ball2 + 1e-9
    assert summary.min_cross_ratio < 1.0 < summary.max_cube_ratio


def test_conjecture_scan_bound_attained_by_diagonal_line():
    r = verify_volume_bounds(equality_subspace(2, 1))
    assert r.ratios["cross_projection_ratio"] == pytest.approx(2.0 ** -0.5, rel=1e-12)
    assert r.ratios["cube_section_ratio"] == pytest.approx(2.0 ** 0.5, rel=1e-12)


def test_conjecture_scan_validation():
    with pytest.raises(ValueError):
        conjecture_scan(3, 2, trials=0, seed=0)
    with pytest.raises(UnsupportedDimensionError):
        conjecture_scan(8, 6, trials=1, seed=0)
