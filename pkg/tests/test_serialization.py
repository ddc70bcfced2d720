# SPDX-FileCopyrightText: Copyright 2025 UK Research and Innovation, Science and Technology Facilities Council, ISIS
#
# SPDX-License-Identifier: BSD-3-Clause

import json

import numpy as np
import pydantic
import pytest
from pt_naimark.src.linalg import (
    SIGMA_Y,
    MatrixDocument,
    matrices_from_json,
    matrices_to_json,
    matrix_from_dict,
    matrix_to_dict,
)


def test_matrix_to_dict_layout():
    doc = matrix_to_dict(SIGMA_Y)
    assert doc['rows'] == 2
    assert doc['cols'] == 2
    assert doc['data'] == [[0.0, 0.0], [0.0, -1.0], [0.0, 1.0], [0.0, 0.0]]


def test_matrix_from_dict():
    m = matrix_from_dict({'rows': 1, 'cols': 2, 'data': [[1.5, 0.0], [0.0, -2.0]]})
    assert m.shape == (1, 2)
    assert m[0, 1] == -2j


def test_document_rejects_wrong_length():
    with pytest.raises(pydantic.ValidationError):
        MatrixDocument(rows=2, cols=2, data=[(0.0, 0.0)])


def test_document_rejects_non_finite():
    with pytest.raises(pydantic.ValidationError):
        MatrixDocument(rows=1, cols=1, data=[(float('nan'), 0.0)])


def test_matrices_to_json_keeps_order_and_values():
    a = np.array([[1 + 2j, 0.1], [1e-300, -3j]])
    text = matrices_to_json({'b': SIGMA_Y, 'a': a})
    assert list(json.loads(text)) == ['b', 'a']
    restored = matrices_from_json(text)
    assert np.array_equal(restored['a'], a)
    assert np.array_equal(restored['b'], SIGMA_Y)
