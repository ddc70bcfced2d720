import json

import numpy as np
from pydantic import BaseModel, FiniteFloat, PositiveInt, model_validator

from pt_naimark.src.linalg.matrix_ops import as_cmatrix, frozen


class MatrixDocument(BaseModel):
    """Row-major JSON form of a complex matrix: ``data`` holds ``[re, im]`` pairs."""

    rows: PositiveInt
    cols: PositiveInt
    data: list[tuple[FiniteFloat, FiniteFloat]]

    @model_validator(mode='after')
    def check_length(self):
        if len(self.data) != self.rows * self.cols:
            raise ValueError(
                f'data holds {len(self.data)} entries, expected {self.rows}x{self.cols}'
            )
        return self

    @classmethod
    def from_matrix(cls, a) -> 'MatrixDocument':
        a = as_cmatrix(a)
        rows, cols = a.shape
        data = [(float(z.real), float(z.imag)) for z in a.reshape(-1)]
        return cls(rows=rows, cols=cols, data=data)

    def to_matrix(self) -> np.ndarray:
        flat = np.array([complex(re, im) for re, im in self.data], dtype=np.complex128)
        return frozen(flat.reshape(self.rows, self.cols))


def matrix_to_dict(a) -> dict:
    doc = MatrixDocument.from_matrix(a)
    return {'rows': doc.rows, 'cols': doc.cols, 'data': [list(pair) for pair in doc.data]}


def matrix_from_dict(data: dict) -> np.ndarray:
    return MatrixDocument(**data).to_matrix()


def matrices_to_json(matrices: dict[str, np.ndarray]) -> str:
    """Dump named matrices as one JSON document, keys kept in insertion order."""
    return json.dumps(
        {name: matrix_to_dict(value) for name, value in matrices.items()}, indent=2
    )


def matrices_from_json(text: str) -> dict[str, np.ndarray]:
    return {name: matrix_from_dict(value) for name, value in json.loads(text).items()}
