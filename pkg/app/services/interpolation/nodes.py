"""Node sets on [-1, 1] and the sine maps that carry equidistant nodes onto
Chebyshev nodes.

Chebyshev node sets keep their index order (decreasing abscissae). The SWI
construction pairs equidistant x_i with Chebyshev z_i by index, so they are
never sorted.
"""
from enum import Enum
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, ValidationError, field_validator, model_validator

from app.core.errors import DomainError, InvalidDegreeError, InvalidIntervalError, InvalidKindError


class NodeFamily(str, Enum):
    EQUIDISTANT = "equidistant"
    CHEB1 = "chebyshev-1"
    CHEB2 = "chebyshev-2"


def frozen_array(value: Any) -> np.ndarray:
    arr = np.array(value, dtype=float)
    arr.setflags(write=False)
    return arr


class NodeSet(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    family: NodeFamily
    n: int
    nodes: np.ndarray

    @field_validator("nodes", mode="before")
    @classmethod
    def freeze_nodes(cls, value):
        return frozen_array(value)

    @model_validator(mode="after")
    def check_count(self):
        if self.nodes.shape != (self.n + 1,):
            raise ValueError(f"expected {self.n + 1} nodes, got shape {self.nodes.shape}")
        return self

    def __len__(self) -> int:
        return self.n + 1


class SampleSet(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    nodes: NodeSet
    values: np.ndarray

    @field_validator("values", mode="before")
    @classmethod
    def freeze_values(cls, value):
        return frozen_array(value)

    @model_validator(mode="after")
    def check_lengths(self):
        if self.values.shape != self.nodes.nodes.shape:
            raise ValueError(
                f"values shape {self.values.shape} does not match {len(self.nodes)} nodes"
            )
        return self

    @property
    def n(self) -> int:
        return self.nodes.n

    @property
    def family(self) -> NodeFamily:
        return self.nodes.family


class IntervalMap(BaseModel):
    """Affine map between a user interval [a, b] and [-1, 1]."""

    model_config = ConfigDict(frozen=True)

    a: float
    b: float

    @model_validator(mode="after")
    def check_order(self):
        if not (np.isfinite(self.a) and np.isfinite(self.b)) or self.a >= self.b:
            raise InvalidIntervalError(f"interval requires finite a < b, got [{self.a}, {self.b}]")
        return self

    def to_unit(self, x_tilde):
        x_tilde = np.asarray(x_tilde, dtype=float)
        x = (2.0 * x_tilde - (self.a + self.b)) / (self.b - self.a)
        # endpoints land exactly on ±1 regardless of cancellation in a + b
        x = np.where(x_tilde == self.a, -1.0, np.where(x_tilde == self.b, 1.0, x))
        return x if x.ndim else float(x)

    def from_unit(self, x):
        x = np.asarray(x, dtype=float)
        x_tilde = 0.5 * (self.b - self.a) * x + 0.5 * (self.a + self.b)
        x_tilde = np.where(x == -1.0, self.a, np.where(x == 1.0, self.b, x_tilde))
        return x_tilde if x_tilde.ndim else float(x_tilde)


def make_interval(a: float, b: float) -> IntervalMap:
    try:
        return IntervalMap(a=a, b=b)
    except ValidationError as e:
        raise InvalidIntervalError(f"interval requires finite a < b, got [{a}, {b}]") from e


def to_unit(interval: IntervalMap, x_tilde):
    return interval.to_unit(x_tilde)


def from_unit(interval: IntervalMap, x):
    return interval.from_unit(x)


def _check_degree(n) -> int:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise InvalidDegreeError(f"degree must be an integer >= 1, got {n!r}")
    return int(n)


def make_nodes(family: NodeFamily | str, n: int) -> NodeSet:
    family = NodeFamily(family)
    n = _check_degree(n)
    i = np.arange(n + 1)

    if family is NodeFamily.EQUIDISTANT:
        nodes = -1.0 + 2.0 * i / n
    elif family is NodeFamily.CHEB1:
        # cos((2i+1)π/(2(n+1))) written as a sine so the set is exactly symmetric
        nodes = np.sin(np.pi * (n - 2 * i) / (2 * (n + 1)))
    else:
        nodes = np.sin(np.pi * (n - 2 * i) / (2 * n))
        nodes[0] = 1.0
        nodes[-1] = -1.0

    return NodeSet(family=family, n=n, nodes=nodes)


def check_kind(kind) -> int:
    if isinstance(kind, bool) or kind not in (1, 2):
        raise InvalidKindError(f"kind must be 1 or 2, got {kind!r}")
    return int(kind)


def map_rate(kind: int, n: int) -> float:
    """Angular rate a of kappa(x) = -sin(a x)."""
    kind = check_kind(kind)
    n = _check_degree(n)
    if kind == 1:
        return n * np.pi / (2 * (n + 1))
    return np.pi / 2


def _check_unit(name: str, value) -> np.ndarray:
    arr = np.asarray(value, dtype=float)
    if np.any(np.isnan(arr)) or np.any(np.abs(arr) > 1.0):
        raise DomainError(f"{name} must lie in [-1, 1]")
    return arr


def kappa(kind: int, n: int, x):
    """Equidistant -> Chebyshev: kappa(kind, n, -1 + 2i/n) is the i-th Chebyshev node."""
    a = map_rate(kind, n)
    x = _check_unit("x", x)
    z = -np.sin(a * x)
    return z if z.ndim else float(z)


def tau(kind: int, n: int, z):
    """Inverse of kappa. For kind 1 the image is [-(n+1)/n, (n+1)/n]."""
    a = map_rate(kind, n)
    z = _check_unit("z", z)
    x = -np.arcsin(z) / a
    return x if x.ndim else float(x)
