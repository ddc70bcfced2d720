# SPDX-FileCopyrightText: Copyright 2025 UK Research and Innovation, Science and Technology Facilities Council, ISIS
#
# SPDX-License-Identifier: BSD-3-Clause

import math

import numpy as np
import pytest
from pt_naimark.src.naimark import dilate
from pt_naimark.src.protocol import (
    ANALYSIS_COLUMNS,
    REGIME_COLUMNS,
    analysis_record,
    energy_moments,
    prepare_initial,
    regime_frame,
    regime_report,
    regime_row,
)
from pt_naimark.src.pt_system import PTParams
from pt_naimark.src.utils.errors import ParameterDomainError

EPSILONS = [0.3, 0.1, 0.03, 0.01]


def test_regime_report_sorted_and_linear():
    reports = regime_report(1.0, EPSILONS)
    assert [r.epsilon for r in reports] == pytest.approx(sorted(EPSILONS))
    for r in reports:
        assert r.tau == pytest.approx(2 * r.epsilon, abs=1e-10)
        assert r.tau_h == pytest.approx(math.pi, abs=1e-12)
        assert r.delta4 == pytest.approx(2 * r.epsilon, abs=1e-10)
        assert r.delta2 == pytest.approx(math.pi)
        assert r.p_success == pytest.approx(math.sin(r.epsilon) ** 2 / 2, abs=1e-10)
        assert r.energy_spread == pytest.approx(0.5, abs=1e-10)
        assert r.aa_product == pytest.approx(r.delta4, abs=1e-10)
        assert r.delta_h == pytest.approx(r.delta4, abs=1e-10)
        assert r.speedup == pytest.approx(r.tau_h / r.tau)


def test_regime_report_monotone():
    reports = regime_report(1.0, EPSILONS)
    ratios = [r.tau / r.tau_h for r in reports]
    assert ratios == sorted(ratios)
    assert len(set(ratios)) == len(ratios)
    assert [r.delta4 for r in reports] == sorted(r.delta4 for r in reports)
    assert [r.p_success for r in reports] == sorted(r.p_success for r in reports)


def test_regime_row_example():
    row = regime_row(PTParams.from_regime(0.1, 1.0))
    assert row.tau == pytest.approx(0.2, abs=1e-10)
    assert row.tau_h == pytest.approx(math.pi, abs=1e-12)
    assert row.delta4 == pytest.approx(0.2, abs=1e-10)


def test_regime_row_hermitian_limit():
    row = regime_row(PTParams.from_regime(math.pi / 2, 1.0))
    assert row.tau == pytest.approx(row.tau_h, abs=1e-12)
    assert row.delta4 == pytest.approx(math.pi, abs=1e-10)
    assert row.delta4 == pytest.approx(row.delta2, abs=1e-10)


@pytest.mark.parametrize('alpha', [-1.4, -0.5, 0.0, 0.3, 1.2])
@pytest.mark.parametrize('s, E0', [(0.5, 0.0), (2.0, 0.7)])
def test_anandan_aharonov_product(alpha, s, E0):
    row = regime_row(PTParams(E0=E0, s=s, alpha=alpha))
    assert row.energy_spread == pytest.approx(s * math.cos(alpha), abs=1e-10)
    assert row.aa_product >= row.delta4 - 1e-10
    if alpha <= 0:
        assert row.aa_product == pytest.approx(row.delta4, abs=1e-10)
    else:
        assert row.aa_product > row.delta4


def test_energy_moments_mean_is_offset(make_system):
    sys = make_system(alpha=0.8, s=1.1, E0=0.7)
    mean, spread = energy_moments(dilate(sys).H4, prepare_initial(sys))
    assert mean == pytest.approx(0.7, abs=1e-10)
    assert spread == pytest.approx(sys.params.omega0 / 2, abs=1e-10)


@pytest.mark.parametrize('epsilons', [[0.0], [-0.1], [math.pi / 2 + 0.01], [0.1, 2.0]])
def test_regime_report_rejects_epsilon(epsilons):
    with pytest.raises(ParameterDomainError):
        regime_report(1.0, epsilons)


def test_regime_report_rejects_omega0():
    with pytest.raises(ParameterDomainError):
        regime_report(0.0, [0.1])


def test_regime_frame_columns():
    frame = regime_frame(regime_report(2.0, [0.5, 0.05]))
    assert list(frame.columns) == REGIME_COLUMNS
    assert len(frame) == 2
    assert frame['tau'].iloc[0] == pytest.approx(0.05, abs=1e-12)


def test_analysis_record():
    record = analysis_record(PTParams(E0=0.2, s=1.0, alpha=-math.pi / 3))
    assert list(record) == ANALYSIS_COLUMNS
    assert record['E_plus'] == pytest.approx(0.7)
    assert record['E_minus'] == pytest.approx(-0.3)
    assert record['omega0'] == pytest.approx(1.0)
    assert record['speedup'] == pytest.approx(3.0)
    assert record['flip_fidelity'] == pytest.approx(1.0, abs=1e-10)
    assert np.tanh(record['beta']) == pytest.approx(-math.sqrt(3) / 2)


@pytest.mark.parametrize('E0', [1e3, 1e6])
def test_large_offset_keeps_spread_and_saturation(E0):
    params = PTParams(E0=E0, s=1.0, alpha=-0.5)
    row = regime_row(params)
    assert row.energy_spread == pytest.approx(params.omega0 / 2, abs=1e-10)
    assert row.aa_product == pytest.approx(row.delta4, abs=1e-10)
    assert row.delta4 == pytest.approx(2 * params.epsilon, abs=1e-10)


@pytest.mark.parametrize('E0', [1e3, 1e6])
def test_energy_moments_with_large_offset(make_system, E0):
    sys = make_system(alpha=-0.5, s=1.0, E0=E0)
    mean, spread = energy_moments(dilate(sys).H4, prepare_initial(sys))
    assert mean == pytest.approx(E0, rel=1e-14)
    assert spread == pytest.approx(sys.params.omega0 / 2, abs=1e-12)
