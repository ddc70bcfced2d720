# SPDX-FileCopyrightText: Copyright 2025 UK Research and Innovation, Science and Technology Facilities Council, ISIS
#
# SPDX-License-Identifier: BSD-3-Clause

import math

import numpy as np
import pytest
import scipy.linalg
from pt_naimark.src.linalg import I2, max_abs_diff, max_entry
from pt_naimark.src.pt_system import (
    PSI_I,
    TRAJECTORY_COLUMNS,
    PTParams,
    build_system,
    evolution,
    final_state,
    first_flip_time,
    passage_times,
    subsystem_state,
    trajectory,
    trajectory_frame,
)
from pt_naimark.src.utils.errors import ParameterDomainError


def test_evolution_at_zero_is_identity(system):
    assert max_abs_diff(evolution(system, 0.0), I2) < 1e-15


def test_evolution_reaches_flipped_state(system):
    tau = system.params.tau
    psi = evolution(system, tau) @ PSI_I
    assert max_abs_diff(psi, [0, -1j]) < 1e-10


@pytest.mark.parametrize('alpha', [-1.4, -0.5, 0.0, math.pi / 6, 1.2])
@pytest.mark.parametrize('E0', [0.0, 0.7])
def test_evolution_matches_scipy_expm(make_system, alpha, E0):
    sys = make_system(alpha=alpha, s=1.0, E0=E0)
    tau = sys.params.tau
    for t in (0.1, 1.0, tau, 5 * tau):
        U = evolution(sys, t)
        reference = scipy.linalg.expm(-1j * t * np.asarray(sys.H))
        assert max_abs_diff(U, reference) < 1e-10 * max(1.0, max_entry(reference))


@pytest.mark.parametrize('alpha', [-1.0, -0.3, 0.4, 1.3])
def test_evolution_determinant_has_unit_modulus(make_system, alpha):
    sys = make_system(alpha=alpha, s=2.0, E0=0.7)
    for t in np.linspace(0.0, 3 * sys.params.tau, 7):
        assert abs(np.linalg.det(np.asarray(evolution(sys, t)))) == pytest.approx(1.0, abs=1e-10)


@pytest.mark.parametrize('alpha', [-1.2, 0.8])
def test_evolution_intertwines_with_hermitian_equivalent(make_system, alpha):
    sys = make_system(alpha=alpha, s=0.5)
    t = 0.7 * sys.params.tau
    via_h = sys.rho_inv @ scipy.linalg.expm(-1j * t * np.asarray(sys.h)) @ sys.rho
    assert max_abs_diff(evolution(sys, t), via_h) < 1e-10


def test_evolution_is_not_unitary_off_hermitian_limit(make_system):
    U = np.asarray(evolution(make_system(alpha=0.5), 0.8))
    assert max_abs_diff(U @ U.conj().T, I2) > 1e-3


def test_passage_times(system):
    tau, tau_h = passage_times(system.params)
    assert tau == pytest.approx(math.pi / 3, abs=1e-12)
    assert tau_h == pytest.approx(math.pi, abs=1e-12)
    assert tau_h / tau == pytest.approx(3.0, abs=1e-12)


def test_passage_time_vanishes_towards_exceptional_point():
    taus = [PTParams.from_regime(e, 1.0).tau for e in (0.3, 0.1, 0.03, 0.01)]
    assert taus == sorted(taus, reverse=True)
    assert taus[-1] == pytest.approx(0.02, abs=1e-12)


def test_final_state_phase():
    params = PTParams(E0=0.5, s=1.0, alpha=-0.4)
    mu = -1j * np.exp(-1j * 0.5 * params.tau)
    assert max_abs_diff(final_state(params), [0, mu]) < 1e-15


@pytest.mark.parametrize('alpha', [-1.2, -0.5, 0.0, 0.5])
def test_first_flip_time_matches_closed_form(make_system, alpha):
    sys = make_system(alpha=alpha, s=1.0)
    assert first_flip_time(sys) == pytest.approx(sys.params.tau, abs=1e-8)


def test_first_flip_time_with_offset_and_scale(make_system):
    sys = make_system(alpha=-0.8, s=2.0, E0=0.7)
    assert first_flip_time(sys) == pytest.approx(sys.params.tau, abs=1e-8)


def test_subsystem_state_vectorised(system):
    times = np.array([0.0, 0.3, system.params.tau])
    states = subsystem_state(system.params, times)
    assert states.shape == (3, 2)
    for t, psi in zip(times, states):
        assert max_abs_diff(psi, evolution(system, t) @ PSI_I) < 1e-14


def test_trajectory_samples(system):
    tau = system.params.tau
    traj = trajectory(system, tau, 200)
    assert traj.times.shape == (200,)
    assert traj.times[0] == 0.0
    assert traj.times[-1] == pytest.approx(tau)
    assert np.all(np.diff(traj.times) > 0)
    assert not traj.times.flags.writeable

    alpha = system.params.alpha
    assert max_abs_diff(traj.psi[0], PSI_I) < 1e-15
    chi_initial = np.array([1, 1j * math.sin(alpha)]) / math.cos(alpha)
    assert max_abs_diff(traj.chi[0], chi_initial) < 1e-14

    # at tau psi lies on (0, 1) and chi on (sin alpha, i)
    assert abs(traj.psi[-1][0]) < 1e-10
    chi_final = np.asarray(system.eta) @ np.asarray(final_state(system.params))
    assert max_abs_diff(traj.chi[-1], chi_final) < 1e-10
    assert chi_final[1] / chi_final[0] == pytest.approx(1j / math.sin(alpha))

    for t, psi, chi in zip(traj.times, traj.psi, traj.chi):
        expected = evolution(system, t) @ PSI_I
        assert max_abs_diff(psi, expected) < 1e-10
        assert max_abs_diff(chi, np.asarray(system.eta) @ expected) < 1e-10


def test_trajectory_hermitian_limit_chi_equals_psi(make_system):
    traj = trajectory(make_system(alpha=0.0), 2.0, 25)
    assert np.array_equal(traj.chi, traj.psi)


@pytest.mark.parametrize('t_max, n', [(1.0, 1), (0.0, 10), (-1.0, 10)])
def test_trajectory_rejects_bad_grid(system, t_max, n):
    with pytest.raises(ParameterDomainError):
        trajectory(system, t_max, n)


def test_trajectory_frame(system):
    frame = trajectory_frame(trajectory(system, system.params.tau, 11))
    assert list(frame.columns) == TRAJECTORY_COLUMNS
    assert len(frame) == 11
    assert frame['re_psi0'].iloc[0] == 1.0
    assert frame['t'].iloc[-1] == pytest.approx(system.params.tau)
