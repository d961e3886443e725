from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator


class Method(str, Enum):
    CI1 = "CI1"
    CI2 = "CI2"
    SWI1 = "SWI1"
    SWI2 = "SWI2"
    AVG_CI = "AVG_CI"
    AVG_SWI = "AVG_SWI"
    CLASSICAL_EQUID = "CLASSICAL_EQUID"
    BARY_EQUID = "BARY_EQUID"  # interpolate only


class Metric(str, Enum):
    MAX = "max"
    CUMULATIVE = "cumulative"


class Family(str, Enum):
    CI = "CI"
    SWI = "SWI"


class SweepRecord(BaseModel):
    function_id: int
    method: Method
    n: int
    max_error: float = Field(ge=0)
    cumulative_error: float = Field(ge=0)
    endpoint_part: Optional[float] = None
    central_part: Optional[float] = None


class MinimalDegreeRecord(BaseModel):
    function_id: int
    metric: Metric
    epsilon: float
    family: Family
    degree: int


class RobustnessRecord(BaseModel):
    function_id: int
    kind: int
    n: int
    digits: int
    max_deviation: float = Field(ge=0)
    max_data_perturbation: float = Field(ge=0)
    lebesgue_constant: float


class RunConfig(BaseModel):
    grid_points: int = 10001
    output_path: Optional[str] = None
    function_ids: List[int] = Field(default_factory=lambda: list(range(1, 11)))
    methods: List[Method] = Field(
        default_factory=lambda: [Method.CI1, Method.CI2, Method.SWI1, Method.SWI2]
    )
    n_from: int = 10
    n_to: int = 40
    step: int = 1
    epsilons: List[float] = Field(default_factory=lambda: [0.1, 0.01, 0.001])
    digits: int = 2
    n_max: int = 700

    @field_validator("grid_points")
    @classmethod
    def check_grid_points(cls, v: int) -> int:
        if v < 3 or v % 2 == 0:
            raise ValueError("grid_points must be odd and >= 3")
        return v

    @field_validator("epsilons")
    @classmethod
    def check_epsilons(cls, v: List[float]) -> List[float]:
        if not v or any(e <= 0 for e in v):
            raise ValueError("epsilon values must be positive")
        return v

    @field_validator("function_ids")
    @classmethod
    def check_function_ids(cls, v: List[int]) -> List[int]:
        if not v or any(not 1 <= f <= 10 for f in v):
            raise ValueError("function ids must be in 1..10")
        return v

    @field_validator("digits")
    @classmethod
    def check_digits(cls, v: int) -> int:
        if v < 1:
            raise ValueError("digits must be >= 1")
        return v

    @model_validator(mode="after")
    def check_range(self):
        if not 1 <= self.n_from <= self.n_to or self.step < 1:
            raise ValueError(f"invalid n-range {self.n_from}..{self.n_to}:{self.step}")
        if not self.methods:
            raise ValueError("at least one method is required")
        if self.n_max < 2:
            raise ValueError("n_max must be >= 2")
        return self


class PointRecord(BaseModel):
    x: float
    value: float


class TransformRecord(BaseModel):
    z: float
    f: float
    g1: Optional[float] = None
    g2: float
