"""
Concrete verification suites.

Each suite rebuilds the objects it needs from the grid parameters and
compares them against an independent route: closed form against the
series exponential, block form against the spectral form, closed-form
timing against a bisection oracle and so on.
"""

import math

import numpy as np

from pt_naimark.src.linalg import (
    I2,
    I4,
    SIGMA_X,
    dagger,
    expm,
    hermitian_eigen,
    kron,
    max_abs_diff,
    max_entry,
)
from pt_naimark.src.naimark import (
    ancilla_closed_form,
    ancilla_state,
    build_povm,
    dilate,
    dilated_evolution,
    dilated_evolution_from_subsystem,
    dilation_residuals,
    general_naimark,
    random_rank_one_povm,
    row_space_projector,
    spectral_evolution,
)
from pt_naimark.src.protocol import (
    BOLD_P_PLUS,
    energy_moments,
    prepare_initial,
    regime_row,
    run_protocol,
    spin_expectations,
)
from pt_naimark.src.pt_system import (
    PSI_I,
    PTParams,
    build_system,
    evolution,
    first_flip_time,
    pt_inner,
    system_residuals,
    trajectory,
)
from pt_naimark.src.verification.suite import BaseSuite, Recorder, VerificationGrid

IDENTITY_TOL = 1e-12
ORACLE_TOL = 1e-10
TIMING_TOL = 1e-8
# top rows of a completion are copied, not recomputed
EXACT_TOL = 1e-15


class LinalgSuite(BaseSuite):
    name = 'linalg'
    tolerances = {
        'kron_identity': IDENTITY_TOL,
        'kron_bilinear': IDENTITY_TOL,
        'kron_mixed_product': IDENTITY_TOL,
        'expm_pauli_rotation': IDENTITY_TOL,
        'expm_adjoint': IDENTITY_TOL,
        'expm_anti_hermitian_unitary': IDENTITY_TOL,
        'eigen_reconstruction': IDENTITY_TOL,
        'eigen_random_hermitian': IDENTITY_TOL,
        'eigenvectors_unitary': IDENTITY_TOL,
    }
    random_samples = 20

    def collect(self, grid: VerificationGrid, record: Recorder):
        record('kron_identity', max_abs_diff(kron(I2, I2), I4))
        for theta in np.linspace(-2 * math.pi, 2 * math.pi, 17):
            closed = math.cos(theta) * I2 - 1j * math.sin(theta) * SIGMA_X
            record('expm_pauli_rotation', max_abs_diff(expm(-1j * theta * SIGMA_X), closed))

        for params in grid.points():
            h = build_system(params).h
            values, vectors = hermitian_eigen(h)
            rebuilt = vectors @ np.diag(values) @ dagger(vectors)
            record('eigen_reconstruction', max_abs_diff(rebuilt, h), max_entry(h))
            record('eigenvectors_unitary', max_abs_diff(dagger(vectors) @ vectors, I2))

        rng = np.random.default_rng(grid.seed)
        for _ in range(self.random_samples):
            self._random_checks(rng, record)

    @staticmethod
    def _random_checks(rng: np.random.Generator, record: Recorder):
        def sample(n):
            return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))

        A, B, C, D = (sample(2) for _ in range(4))
        a, b = rng.standard_normal(2)
        size = max(max_entry(m) for m in (A, B, C, D)) ** 2
        record(
            'kron_bilinear',
            max(
                max_abs_diff(kron(a * A + b * B, C), a * kron(A, C) + b * kron(B, C)),
                max_abs_diff(kron(C, a * A + b * B), a * kron(C, A) + b * kron(C, B)),
            ),
            (abs(a) + abs(b)) * size,
        )
        record(
            'kron_mixed_product',
            max_abs_diff(kron(A, B) @ kron(C, D), kron(A @ C, B @ D)),
            size**2,
        )

        X = 0.5 * sample(2)
        exp_X = expm(X)
        record('expm_adjoint', max_abs_diff(dagger(exp_X), expm(dagger(X))), max_entry(exp_X))

        Y = 0.5 * sample(4)
        U = expm(Y - dagger(Y))
        record('expm_anti_hermitian_unitary', max_abs_diff(dagger(U) @ U, I4))

        Z = sample(4)
        hermitian = (Z + dagger(Z)) / 2
        values, vectors = hermitian_eigen(hermitian)
        rebuilt = vectors @ np.diag(values) @ dagger(vectors)
        record('eigen_random_hermitian', max_abs_diff(rebuilt, hermitian), max_entry(hermitian))
        record('eigenvectors_unitary', max_abs_diff(dagger(vectors) @ vectors, I4))


class AlgebraSuite(BaseSuite):
    name = 'algebra'
    tolerances = {
        **{key: IDENTITY_TOL for key in (
            'pt_symmetry',
            'pseudo_hermiticity',
            'rho_squared',
            'rho_mirror',
            'biorthonormality',
            'metric_from_xi',
            'inverse_metric_from_psi',
            'eigen_H',
            'eigen_Hdag',
            'h_hermitian',
            'phi_unitary',
            'h_eigen',
            'psi_from_phi',
            'xi_from_phi',
        )},
        'pt_norms': IDENTITY_TOL,
        'povm_completeness': IDENTITY_TOL,
    }

    def collect(self, grid: VerificationGrid, record: Recorder):
        for params in grid.points():
            sys = build_system(params)
            for name, (error, scale) in system_residuals(sys).items():
                record(name, error, scale)
            norms = (pt_inner(sys.Psi[:, 0], sys.Psi[:, 0]), pt_inner(sys.Psi[:, 1], sys.Psi[:, 1]))
            record('pt_norms', max(abs(norms[0] - 1), abs(norms[1] + 1)))
            record('povm_completeness', max_abs_diff(build_povm(sys).total(), I2))


class EvolutionSuite(BaseSuite):
    name = 'evolution'
    tolerances = {
        'U_closed_vs_expm': ORACLE_TOL,
        'U_intertwining': ORACLE_TOL,
        'U_det_modulus': ORACLE_TOL,
        'U4_blocks_vs_expm': ORACLE_TOL,
        'U4_blocks_vs_spectral': ORACLE_TOL,
        'U4_blocks_vs_subsystem': ORACLE_TOL,
        'U4_unitary': IDENTITY_TOL,
    }

    def collect(self, grid: VerificationGrid, record: Recorder):
        for params in grid.points():
            sys = build_system(params)
            ds = dilate(sys)
            tau = params.tau
            for t in (0.1, 1.0, tau / 2, tau, 3 * tau, 5 * tau):
                U = evolution(sys, t)
                record(
                    'U_closed_vs_expm',
                    max_abs_diff(U, expm(-1j * t * sys.H)),
                    max_entry(U) * max(1.0, t * max_entry(sys.H)),
                )
                record(
                    'U_intertwining',
                    max_abs_diff(U, sys.rho_inv @ expm(-1j * t * sys.h) @ sys.rho),
                    max_entry(sys.rho) * max_entry(sys.rho_inv) * max(1.0, t * max_entry(sys.h)),
                )
                record('U_det_modulus', abs(abs(np.linalg.det(U)) - 1), max_entry(U) ** 2)
                U4 = dilated_evolution(ds, t)
                record('U4_blocks_vs_expm', max_abs_diff(U4, expm(-1j * t * ds.H4)))
                record('U4_blocks_vs_spectral', max_abs_diff(U4, spectral_evolution(ds, t)))
                record(
                    'U4_blocks_vs_subsystem',
                    max_abs_diff(U4, dilated_evolution_from_subsystem(sys, t)),
                    max_entry(sys.eta) * max_entry(U),
                )
                record('U4_unitary', max_abs_diff(U4 @ dagger(U4), I4))


class EmbeddingSuite(BaseSuite):
    name = 'embedding'
    tolerances = {
        'projected_state': ORACLE_TOL,
        'ancilla_sync': ORACLE_TOL,
        'ancilla_closed_form': ORACLE_TOL,
        'generator_identity': ORACLE_TOL,
        'generator_route': ORACLE_TOL,
        'state_norm': IDENTITY_TOL,
    }

    def collect(self, grid: VerificationGrid, record: Recorder):
        for params in grid.points():
            sys = build_system(params)
            ds = dilate(sys)
            g = params.g
            initial = prepare_initial(sys).vec
            traj = trajectory(sys, params.tau, grid.trajectory_samples)
            Lambda, Omega = ds.Lambda, ds.Omega

            for t, psi, chi in zip(traj.times, traj.psi, traj.chi):
                phi = dilated_evolution(ds, float(t)) @ initial
                record('projected_state', max_abs_diff((BOLD_P_PLUS @ phi)[:2], g * psi))
                record('ancilla_sync', max_abs_diff(phi[2:], g * chi))
                record('state_norm', abs(np.linalg.norm(phi) - 1))
                record(
                    'ancilla_closed_form',
                    max_abs_diff(chi, ancilla_closed_form(sys, float(t))),
                    max_entry(sys.eta) * max_entry(psi),
                )
                record(
                    'generator_identity',
                    max_abs_diff(Lambda @ psi + Omega @ chi, sys.H @ psi),
                    max_entry(sys.H) * max_entry(chi),
                )

            half = params.tau / 2
            psi = evolution(sys, half) @ PSI_I
            omega_size = params.omega0 / 2 * abs(math.sin(params.alpha))
            record(
                'generator_route',
                max_abs_diff(
                    ancilla_state(sys, half, route='generator'),
                    ancilla_state(sys, half, route='metric'),
                ),
                max_entry(sys.H) * max_entry(psi) / omega_size,
            )


class TimingSuite(BaseSuite):
    name = 'timing'
    tolerances = {
        'first_flip_oracle': TIMING_TOL,
        'speedup_at_minus_pi_over_3': IDENTITY_TOL,
    }

    def collect(self, grid: VerificationGrid, record: Recorder):
        for alpha in grid.timing_alphas:
            sys = build_system(PTParams(E0=0.0, s=1.0, alpha=alpha))
            record('first_flip_oracle', abs(first_flip_time(sys) - sys.params.tau))

        params = PTParams(E0=0.0, s=1.0, alpha=-math.pi / 3)
        record(
            'speedup_at_minus_pi_over_3',
            max(
                abs(params.tau - math.pi / 3),
                abs(params.tau_h - math.pi),
                abs(params.tau_h / params.tau - 3),
            ),
        )


class SpectralSuite(BaseSuite):
    name = 'spectral'
    tolerances = {
        'H4_eigenvalues': ORACLE_TOL,
        'H4_eigen_reconstruction': ORACLE_TOL,
        'H4_square': ORACLE_TOL,
        'h_eigenvalues': ORACLE_TOL,
    }

    def collect(self, grid: VerificationGrid, record: Recorder):
        for params in grid.points():
            sys = build_system(params)
            ds = dilate(sys)
            half = params.omega0 / 2
            expected = np.array([params.E0 + half] * 2 + [params.E0 - half] * 2)

            size = max_entry(ds.H4)
            values, vectors = hermitian_eigen(ds.H4)
            record('H4_eigenvalues', float(np.max(np.abs(values - expected))), size)
            rebuilt = vectors @ np.diag(values) @ dagger(vectors)
            record('H4_eigen_reconstruction', max_abs_diff(rebuilt, ds.H4), size)

            shifted = ds.H4 - params.E0 * I4
            record('H4_square', max_abs_diff(shifted @ shifted, half**2 * I4), size**2)

            h_values, _ = hermitian_eigen(sys.h)
            record(
                'h_eigenvalues',
                float(np.max(np.abs(h_values - np.array(sys.Epair)))),
                max_entry(sys.h),
            )


class RegimeSuite(BaseSuite):
    name = 'regime'
    tolerances = {
        'tau_linear': ORACLE_TOL,
        'delta4_linear': ORACLE_TOL,
        'p_success_regime': ORACLE_TOL,
        'regime_monotone': IDENTITY_TOL,
        'energy_spread': ORACLE_TOL,
        'aa_inequality': ORACLE_TOL,
        'aa_equality': ORACLE_TOL,
        'delta4_closed_form': ORACLE_TOL,
        'hermitian_picture_distance': ORACLE_TOL,
    }

    def collect(self, grid: VerificationGrid, record: Recorder):
        for energy in grid.energies:
            rows = [regime_row(p) for p in grid.regime_points(energy)]
            rows.sort(key=lambda r: r.epsilon)
            omega0 = grid.regime_omega0
            for row in rows:
                e = row.epsilon
                record('tau_linear', abs(row.tau - 2 * e / omega0))
                record('delta4_linear', abs(row.delta4 - 2 * e))
                record('p_success_regime', abs(row.p_success - math.sin(e) ** 2 / 2))
            # rows ascend in epsilon, so each column must strictly ascend too
            columns = (
                [row.tau / row.tau_h for row in rows],
                [row.delta4 for row in rows],
                [row.p_success for row in rows],
            )
            for values in columns:
                for lower, upper in zip(values, values[1:]):
                    record('regime_monotone', 0.0 if lower < upper else 1.0)

        for params in grid.points():
            row = regime_row(params)
            record('energy_spread', abs(row.energy_spread - params.omega0 / 2))
            record('aa_inequality', max(0.0, row.delta4 - row.aa_product))
            if params.alpha <= 0:
                record('aa_equality', abs(row.aa_product - row.delta4))
            expected = 2 * math.acos(abs(math.sin(params.alpha)))
            record('delta4_closed_form', abs(row.delta4 - expected))
            record('hermitian_picture_distance', abs(row.delta_h - expected))


class ProtocolSuite(BaseSuite):
    name = 'protocol'
    tolerances = {
        'flip_fidelity': ORACLE_TOL,
        'sigma2_down': ORACLE_TOL,
        'p_success': ORACLE_TOL,
        'sigma1_expectation': IDENTITY_TOL,
        'initial_energy': ORACLE_TOL,
        'hermitian_limit_metric': IDENTITY_TOL,
        'hermitian_limit_H4': IDENTITY_TOL,
        'hermitian_limit_p_success': IDENTITY_TOL,
    }

    def collect(self, grid: VerificationGrid, record: Recorder):
        for params in grid.points():
            sys = build_system(params)
            ds = dilate(sys)
            result = run_protocol(sys, ds)
            record('flip_fidelity', abs(result.flip_fidelity - 1))
            record('sigma2_down', abs(result.p_sigma2_down - 1))
            record('p_success', abs(result.p_sigma1_up - math.cos(params.alpha) ** 2 / 2))
            sigma1, _ = spin_expectations(result.final_state)
            record('sigma1_expectation', abs(sigma1 - (2 * result.p_sigma1_up - 1)))
            mean, _ = energy_moments(ds.H4, prepare_initial(sys))
            record('initial_energy', abs(mean - params.E0))

        for params in grid.hermitian_points():
            sys = build_system(params)
            ds = dilate(sys)
            record('hermitian_limit_metric', max_abs_diff(sys.eta, I2))
            record('hermitian_limit_H4', max_abs_diff(ds.H4, kron(I2, sys.h)))
            result = run_protocol(sys, ds)
            record('hermitian_limit_p_success', abs(result.p_sigma1_up - 0.5))


class NaimarkSuite(BaseSuite):
    name = 'naimark'
    tolerances = {
        **{key: IDENTITY_TOL for key in (
            'partial_isometry',
            'V_unitary_left',
            'V_unitary_right',
            'V_top_block',
            'V_factored_form',
            'projector_completeness',
            'projector_orthogonality',
            'H4_hermitian',
            'H4_block_form',
            'Lambda_direct',
            'Omega_direct',
            'H4_square',
        )},
        'general_unitary': ORACLE_TOL,
        'general_top_rows': EXACT_TOL,
        'explicit_row_space': ORACLE_TOL,
    }

    def collect(self, grid: VerificationGrid, record: Recorder):
        for params in grid.points():
            ds = dilate(build_system(params))
            for name, (error, scale) in dilation_residuals(ds).items():
                record(name, error, scale)

        rng = np.random.default_rng(grid.seed)
        for _ in range(grid.povm_instances):
            N = int(rng.integers(1, 4))
            n = int(rng.integers(N, 7))
            x = random_rank_one_povm(N, n, rng)
            W = general_naimark(x)
            record(
                'general_unitary',
                max(max_abs_diff(W @ dagger(W), np.eye(n)), max_abs_diff(dagger(W) @ W, np.eye(n))),
            )
            record('general_top_rows', max_abs_diff(W[:N, :], np.column_stack(x)))

        ds = dilate(build_system(PTParams(E0=0.0, s=1.0, alpha=math.pi / 6)))
        completed = general_naimark([ds.M[:, k] for k in range(4)])
        record(
            'explicit_row_space',
            max_abs_diff(row_space_projector(completed[2:]), row_space_projector(ds.V[2:])),
        )
