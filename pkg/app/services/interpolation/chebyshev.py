"""Chebyshev interpolation of the first and second kinds (CI-Cheby1 / CI-Cheby2)."""
import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from app.core.errors import DomainError, InvalidDegreeError
from app.services.interpolation.nodes import check_kind, frozen_array


class ChebCoefficients(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: int
    n: int
    c: np.ndarray

    @field_validator("c", mode="before")
    @classmethod
    def freeze_coefficients(cls, value):
        return frozen_array(value)

    @property
    def delta(self) -> np.ndarray:
        return cheb_delta(self.kind, self.n)

    @property
    def weighted(self) -> np.ndarray:
        """delta_k * c_k, the series actually summed against T_k."""
        return self.delta * self.c


def cheb_delta(kind: int, n: int) -> np.ndarray:
    delta = np.ones(n + 1)
    delta[0] = 0.5
    if kind == 2:
        delta[n] = 0.5
    return delta


def cheb_transform(kind: int, values) -> ChebCoefficients:
    """Coefficients c_k by direct O(n^2) cosine sums over the samples at make_nodes(kind, n).

    kind 1: c_k = 2/(n+1) sum_i y_i cos(k(2i+1)π/(2(n+1)))
    kind 2: c_k = 2/n     sum_i δ_i y_i cos(kiπ/n)
    """
    kind = check_kind(kind)
    y = np.asarray(values, dtype=float)
    if y.ndim != 1 or y.size < 2:
        raise InvalidDegreeError(f"need at least 2 sample values, got {y.size}")

    n = y.size - 1
    k = np.arange(n + 1)
    i = np.arange(n + 1)

    # integer phase reduced modulo one period keeps the cosine arguments small at large n
    if kind == 1:
        period = 4 * (n + 1)
        phase = np.outer(k, 2 * i + 1) % period
        c = (2.0 / (n + 1)) * (np.cos(phase * (2 * np.pi / period)) @ y)
    else:
        period = 2 * n
        phase = np.outer(k, i) % period
        c = (2.0 / n) * (np.cos(phase * (2 * np.pi / period)) @ (cheb_delta(2, n) * y))

    return ChebCoefficients(kind=kind, n=n, c=c)


def _check_unit(z) -> np.ndarray:
    z = np.asarray(z, dtype=float)
    if np.any(np.isnan(z)) or np.any(np.abs(z) > 1.0):
        raise DomainError("z must lie in [-1, 1]")
    return z


def clenshaw(z: np.ndarray, a: np.ndarray) -> np.ndarray:
    """sum_k a_k T_k(z) by Clenshaw's backward recurrence."""
    b1 = np.zeros_like(z)
    b2 = np.zeros_like(z)
    twoz = 2.0 * z
    for ak in a[:0:-1]:
        b1, b2 = twoz * b1 - b2 + ak, b1
    return z * b1 - b2 + a[0]


def cheb_eval(coeffs: ChebCoefficients, z):
    z = _check_unit(z)
    value = clenshaw(z, coeffs.weighted)
    return value if value.ndim else float(value)


def chebyshev_T(k: int, z):
    """T_k(z) by the forward recurrence T_{k+1} = 2z T_k - T_{k-1}."""
    if isinstance(k, bool) or k < 0 or int(k) != k:
        raise InvalidDegreeError(f"k must be a non-negative integer, got {k!r}")
    z = _check_unit(z)
    t_prev, t = np.ones_like(z), z.copy()
    if k == 0:
        t = t_prev
    else:
        for _ in range(int(k) - 1):
            t_prev, t = t, 2.0 * z * t - t_prev
    return t if t.ndim else float(t)
