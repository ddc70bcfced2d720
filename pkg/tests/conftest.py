# SPDX-FileCopyrightText: Copyright 2025 UK Research and Innovation, Science and Technology Facilities Council, ISIS
#
# SPDX-License-Identifier: BSD-3-Clause

import math

import pytest
from pt_naimark.src.logging_utils import reset_logging
from pt_naimark.src.naimark import dilate
from pt_naimark.src.pt_system import PTParams, build_system


@pytest.fixture(autouse=True)
def clean_logging():
    reset_logging()
    yield
    reset_logging()


@pytest.fixture
def make_system():
    def _make(alpha=-math.pi / 3, s=1.0, E0=0.0):
        return build_system(PTParams(E0=E0, s=s, alpha=alpha))

    return _make


@pytest.fixture
def system(make_system):
    """The alpha = -pi/3, s = 1 system: tau = pi/3 and tau_h = pi."""
    return make_system()


@pytest.fixture
def dilated(system):
    return dilate(system)
