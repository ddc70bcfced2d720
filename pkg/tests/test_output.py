# SPDX-FileCopyrightText: Copyright 2025 UK Research and Innovation, Science and Technology Facilities Council, ISIS
#
# SPDX-License-Identifier: BSD-3-Clause

import json
import math

import pandas as pd
import pytest
from pt_naimark.src.utils import emit, frame_to_csv, frame_to_json, record_to_json


def test_frame_to_csv_round_trips_doubles():
    frame = pd.DataFrame({'a': [0.1, 1 / 3], 'b': [math.pi, -2.5e-300]})
    text = frame_to_csv(frame)
    assert text.splitlines()[0] == 'a,b'
    assert '\r' not in text
    assert text.endswith('\n')
    values = [float(v) for v in text.splitlines()[1].split(',')]
    assert values == [0.1, math.pi]
    assert float(text.splitlines()[2].split(',')[0]) == 1 / 3


def test_frame_to_json():
    rows = json.loads(frame_to_json(pd.DataFrame({'x': [1.5], 'y': [2.0]})))
    assert rows == [{'x': 1.5, 'y': 2.0}]


def test_record_to_json_rejects_non_finite():
    assert json.loads(record_to_json({'tau': 0.2})) == {'tau': 0.2}
    with pytest.raises(ValueError):
        record_to_json({'tau': math.inf})
    with pytest.raises(ValueError):
        record_to_json({'tau': math.nan})


def test_emit_to_file(tmp_path):
    target = tmp_path / 'out.csv'
    emit('a,b\n1,2\n', str(target))
    assert target.read_bytes() == b'a,b\n1,2\n'


def test_emit_to_stdout(capsys):
    emit('a\n')
    emit('b', '-')
    assert capsys.readouterr().out == 'a\nb\n'
