import json
import math

import click
import pandas as pd

# 17 significant digits round-trip every IEEE-754 double
FLOAT_FORMAT = '%.17g'


def frame_to_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator='\n')


def frame_to_json(frame: pd.DataFrame) -> str:
    return json.dumps(frame.to_dict(orient='records'), indent=2)


def record_to_json(record: dict) -> str:
    for key, value in record.items():
        if isinstance(value, float) and not math.isfinite(value):
            raise ValueError(f'{key} is not finite: {value}')
    return json.dumps(record, indent=2)


def emit(document: str, output: str | None = None):
    """Write ``document`` to ``output`` or, when no path is given, to stdout."""
    if output is None or output == '-':
        click.echo(document, nl=not document.endswith('\n'))
        return
    with open(output, 'w', newline='') as stream:
        stream.write(document)
