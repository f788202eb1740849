"""Request models for the service endpoints.

Responses are plain JSON documents produced by the library's serializers
(top-level "schema": "ml-pade/1"); only the inbound payloads are typed.
"""

from typing import List, Literal, Optional

from pydantic import BaseModel, Field, model_validator


class SpecParams(BaseModel):
    alpha: float
    beta: float
    m: int = 7
    n: int = 2


class CoeffsRequest(SpecParams):
    strict: bool = False


class EvalRequest(SpecParams):
    x: Optional[float] = None
    xs: Optional[List[float]] = None

    @model_validator(mode="after")
    def _one_of_x_xs(self):
        if (self.x is None) == (self.xs is None):
            raise ValueError("provide exactly one of x, xs")
        return self


class OracleRequest(BaseModel):
    alpha: float
    beta: float
    x: Optional[float] = None
    xs: Optional[List[float]] = None

    @model_validator(mode="after")
    def _one_of_x_xs(self):
        if (self.x is None) == (self.xs is None):
            raise ValueError("provide exactly one of x, xs")
        return self


class InvertRequest(SpecParams):
    y: float


class PfdRequest(SpecParams):
    pass


class MatrixRequest(SpecParams):
    matrix: List[List[float]]
    rhs: Optional[List[float]] = None
    unit_rhs_index: Optional[int] = Field(
        None, ge=1, description="1-based index K for a unit-vector right-hand side"
    )

    @model_validator(mode="after")
    def _rhs_choice(self):
        if self.rhs is not None and self.unit_rhs_index is not None:
            raise ValueError("provide at most one of rhs, unit_rhs_index")
        n = len(self.matrix)
        if n == 0 or any(len(row) != n for row in self.matrix):
            raise ValueError("matrix must be square and non-empty")
        if self.rhs is not None and len(self.rhs) != n:
            raise ValueError("rhs length must match the matrix dimension")
        if self.unit_rhs_index is not None and self.unit_rhs_index > n:
            raise ValueError("unit_rhs_index exceeds the matrix dimension")
        return self


class TableRequest(BaseModel):
    which: Literal["error", "rde", "vie", "bt", "basset"]
    grid_step: float = Field(0.01, gt=0.0)
    timing: bool = True


class BenchRequest(BaseModel):
    case: Literal["rde", "vie", "ultraslow", "bt", "basset"]
    alpha: Optional[float] = None
    beta: Optional[float] = None
    x_loc: Optional[float] = None
    k_alpha: Optional[float] = None
    delta: Optional[float] = None
    a1: Optional[float] = None
    a2: Optional[float] = None
    t_max: Optional[float] = None
    dt: Optional[float] = Field(None, gt=0.0)
    m: int = 7
    n: int = 2
    include_points: bool = False
    timing: bool = True
