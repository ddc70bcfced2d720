# SPDX-FileCopyrightText: Copyright 2025 UK Research and Innovation, Science and Technology Facilities Council, ISIS
#
# SPDX-License-Identifier: BSD-3-Clause

import math

import pytest
from pt_naimark.src.utils.errors import InvariantViolation
from pt_naimark.src.verification import (
    BaseSuite,
    CheckResult,
    VerificationGrid,
    registered_suites,
    run_verification,
)


@pytest.fixture
def small_grid():
    return VerificationGrid(
        alphas=(-0.5, 0.5),
        scales=(1.0,),
        energies=(0.0, 0.7),
        epsilons=(0.3, 0.1),
        timing_alphas=(-0.5, 0.0),
        trajectory_samples=20,
        povm_instances=3,
    )


class ToySuite(BaseSuite):
    name = 'toy'
    tolerances = {'small': 1e-12, 'scaled': 1e-12, 'unused': 1e-12}

    def collect(self, grid, record):
        record('small', 1e-13)
        record('scaled', 5e-12, scale=10.0)


class BrokenSuite(BaseSuite):
    name = 'broken'
    tolerances = {'first': 1e-12}

    def collect(self, grid, record):
        record('first', 0.0)
        raise InvariantViolation('first', 1.0, 1e-12)


def test_check_result_line():
    result = CheckResult(
        suite='algebra', name='pt_norms', max_error=2e-13, raw_error=8e-13, tolerance=1e-12, points=4
    )
    assert result.passed
    assert result.line() == (
        'PASS algebra.pt_norms max_error=2.000e-13 raw_error=8.000e-13 tol=1.0e-12 points=4'
    )


@pytest.mark.parametrize(
    'max_error, points',
    [(1e-9, 4), (math.nan, 4), (math.inf, 4), (0.0, 0)],
)
def test_check_result_fails(max_error, points):
    result = CheckResult(suite='s', name='n', max_error=max_error, tolerance=1e-12, points=points)
    assert not result.passed
    assert result.line().startswith('FAIL s.n')


def test_suite_scales_and_flags_unevaluated():
    results = {r.name: r for r in ToySuite().run(VerificationGrid())}
    assert results['small'].passed
    assert results['scaled'].max_error == pytest.approx(5e-13)
    assert results['scaled'].raw_error == pytest.approx(5e-12)
    assert results['small'].raw_error == pytest.approx(1e-13)
    assert results['scaled'].passed
    assert not results['unused'].passed
    assert results['unused'].detail == 'not evaluated'


def test_suite_tolerance_override():
    results = {r.name: r for r in ToySuite(tol=1e-14).run(VerificationGrid())}
    assert not results['small'].passed
    assert results['small'].tolerance == 1e-14


def test_suite_reports_aborted_run(caplog):
    (result,) = BrokenSuite().run(VerificationGrid())
    assert not result.passed
    assert result.max_error == math.inf
    assert result.raw_error == math.inf
    assert 'first' in result.detail
    assert 'Suite broken aborted' in caplog.text


def test_unknown_invariant_is_a_bug():
    class Typo(BaseSuite):
        name = 'typo'
        tolerances = {'a': 1.0}

        def collect(self, grid, record):
            record('b', 0.0)

    with pytest.raises(KeyError):
        Typo().run(VerificationGrid())


def test_registered_suites_order():
    assert list(registered_suites) == [
        'linalg',
        'algebra',
        'evolution',
        'embedding',
        'timing',
        'spectral',
        'regime',
        'protocol',
        'naimark',
    ]


def test_grid_points():
    grid = VerificationGrid()
    assert len(grid.direct_points()) == 8 * 3 * 2
    assert len(grid.regime_points()) == 4 * 2
    assert len(grid.regime_points(E0=0.0)) == 4
    assert all(p.alpha == 0.0 for p in grid.hermitian_points())


def test_small_grid_passes(small_grid):
    results = run_verification(small_grid)
    failed = [r.line() for r in results if not r.passed]
    assert failed == []
    assert {r.suite for r in results} == set(registered_suites)


def test_selected_suites(small_grid):
    results = run_verification(small_grid, suites=['timing'])
    assert [r.name for r in results] == ['first_flip_oracle', 'speedup_at_minus_pi_over_3']
    assert all(r.passed for r in results)


def test_tolerance_override_applies(small_grid):
    results = run_verification(small_grid, tol=1e-300, suites=['timing'])
    flip = next(r for r in results if r.name == 'first_flip_oracle')
    assert flip.tolerance == 1e-300


def test_linalg_suite_random_identities(small_grid):
    results = {r.name: r for r in run_verification(small_grid, suites=['linalg'])}
    for name in (
        'kron_bilinear',
        'kron_mixed_product',
        'expm_adjoint',
        'expm_anti_hermitian_unitary',
        'eigen_random_hermitian',
    ):
        assert results[name].passed, results[name].line()
        assert results[name].points == 20
