# SPDX-FileCopyrightText: Copyright 2025 UK Research and Innovation, Science and Technology Facilities Council, ISIS
#
# SPDX-License-Identifier: BSD-3-Clause

import math

import pydantic
import pytest
from pt_naimark.src.config import CliConfig, parse_grid


def test_parse_grid():
    assert parse_grid('0.3, 0.1,0.03') == [0.3, 0.1, 0.03]
    assert parse_grid([1, 2]) == [1.0, 2.0]
    assert parse_grid(None) is None
    with pytest.raises(ValueError):
        parse_grid(' , ')


def test_direct_parameters_resolve():
    config = CliConfig(command='analyze', alpha=0.2, s=1.5, E0=0.1)
    params = config.resolve_params()
    assert (params.alpha, params.s, params.E0) == (0.2, 1.5, 0.1)
    assert config.resolved_format() == 'csv'
    assert config.construction_tol == 1e-10
    assert config.n_samples == 200


def test_regime_parameters_resolve():
    params = CliConfig(command='trajectory', epsilon=0.1, omega0=2.0).resolve_params()
    assert params.alpha == pytest.approx(0.1 - math.pi / 2)
    assert params.omega0 == pytest.approx(2.0)


@pytest.mark.parametrize(
    'options',
    [
        {'command': 'analyze'},
        {'command': 'analyze', 'alpha': 0.1},
        {'command': 'analyze', 'epsilon': 0.1},
        {'command': 'analyze', 'alpha': 0.1, 's': 1.0, 'epsilon': 0.1, 'omega0': 1.0},
        {'command': 'analyze', 'alpha': 2.0, 's': 1.0},
        {'command': 'dilate', 'alpha': 0.1, 's': -1.0},
        {'command': 'dilate', 'alpha': 0.1, 's': 1.0, 'format': 'csv'},
        {'command': 'trajectory', 'epsilon': 0.1, 'omega0': 1.0, 'n_samples': 0},
        {'command': 'trajectory', 'epsilon': 0.1, 'omega0': 1.0, 'n_samples': 1},
        {'command': 'sweep'},
        {'command': 'sweep', 'eps_grid': '0.1', 'alpha': 0.1},
        {'command': 'sweep', 'eps_grid': '0.1,2.0'},
        {'command': 'sweep', 'eps_grid': '0.1', 'omega0': -1.0},
        {'command': 'verify', 'alpha': 0.1},
        {'command': 'verify', 'E0': 0.5},
        {'command': 'verify', 'tol': -1.0},
        {'command': 'plot'},
    ],
)
def test_invalid_configs(options):
    with pytest.raises(pydantic.ValidationError):
        CliConfig(**options)


def test_sweep_defaults():
    config = CliConfig(command='sweep', eps_grid='0.3,0.1')
    assert config.eps_grid == [0.3, 0.1]
    assert config.sweep_omega0 == 1.0


def test_dilate_defaults_to_json():
    config = CliConfig(command='dilate', alpha=0.1, s=1.0)
    assert config.resolved_format() == 'json'


def test_two_samples_is_the_minimum():
    config = CliConfig(command='trajectory', epsilon=0.1, omega0=1.0, n_samples=2)
    assert config.n_samples == 2
