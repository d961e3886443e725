"""Symmetric wave interpolation (SWI1-Equid / SWI2-Equid).

Equidistant samples y_i = f(x_i) are the values of g(z) = f(tau(z)) at the
Chebyshev nodes z_i = kappa(x_i), so the interpolant is the Chebyshev
interpolant of the y_i composed with kappa:

    q(x) = sum_k delta_k c_k cos(k pi/2 + k a x),   a = n pi/(2(n+1)) or pi/2.

g itself is never formed; only the samples are used.
"""
from enum import Enum
from typing import Callable

import numpy as np
from pydantic import BaseModel, ConfigDict

from app.core.errors import DomainError, WrongNodeFamilyError
from app.services.interpolation.chebyshev import ChebCoefficients, cheb_transform
from app.services.interpolation.lagrange import (
    closed_form_cheb_weights,
    lebesgue_constant,
    node_hit_tolerance,
)
from app.services.interpolation.nodes import (
    NodeFamily,
    SampleSet,
    check_kind,
    kappa,
    make_nodes,
    map_rate,
    tau,
)

_CHUNK = 2048


class EvalForm(str, Enum):
    TRIG_SUM = "trig-sum"
    BARYCENTRIC = "barycentric"


def chebyshev_family(kind: int) -> NodeFamily:
    return NodeFamily.CHEB1 if kind == 1 else NodeFamily.CHEB2


class SwiInterpolant(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: int
    n: int
    samples: SampleSet
    coeffs: ChebCoefficients
    form: EvalForm = EvalForm.TRIG_SUM

    def __call__(self, x):
        if self.form is EvalForm.BARYCENTRIC:
            return swi_eval_barycentric(self, x)
        return swi_eval_trig(self, x)


def swi_build(kind: int, samples: SampleSet, form: EvalForm = EvalForm.TRIG_SUM) -> SwiInterpolant:
    kind = check_kind(kind)
    if samples.family is not NodeFamily.EQUIDISTANT:
        raise WrongNodeFamilyError(
            f"SWI needs equidistant samples, got {samples.family.value} nodes"
        )
    coeffs = cheb_transform(kind, samples.values)
    return SwiInterpolant(kind=kind, n=samples.n, samples=samples, coeffs=coeffs, form=EvalForm(form))


def _unit_points(x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if np.any(np.isnan(x)) or np.any(np.abs(x) > 1.0):
        raise DomainError("x must lie in [-1, 1]")
    return x


def swi_eval_trig(interp: SwiInterpolant, x):
    x = _unit_points(x)
    phase = np.pi / 2 + map_rate(interp.kind, interp.n) * x

    total = np.zeros_like(phase)
    for k, ak in enumerate(interp.coeffs.weighted):
        total += ak * np.cos(k * phase)
    return total if total.ndim else float(total)


def swi_eval_barycentric(interp: SwiInterpolant, x):
    """Rational form: sum (-w_i y_i)/(sin(a x) + z_i) over sum (-w_i)/(sin(a x) + z_i).

    w_i are the closed-form Chebyshev weights of the same kind. Points on a
    sample node, or whose denominator vanishes in floating point (kind 2 near
    x = ±1), return the stored sample.
    """
    x = _unit_points(x)
    a = map_rate(interp.kind, interp.n)
    xs = interp.samples.nodes.nodes
    ys = interp.samples.values
    z = make_nodes(chebyshev_family(interp.kind), interp.n).nodes
    signed = -closed_form_cheb_weights(interp.kind, interp.n).weights

    flat = np.atleast_1d(x).ravel()
    result = np.empty_like(flat)
    for start in range(0, flat.size, _CHUNK):
        part = flat[start:start + _CHUNK]
        s = np.sin(a * part)
        denom = s[:, None] + z[None, :]

        hits = np.abs(part[:, None] - xs[None, :]) <= node_hit_tolerance(part)[:, None]
        hits |= np.abs(denom) <= node_hit_tolerance(s)[:, None]
        hit_index = np.where(hits.any(axis=1), hits.argmax(axis=1), -1)

        terms = signed[None, :] / np.where(hits, 1.0, denom)
        with np.errstate(invalid="ignore", over="ignore"):
            chunk = (terms @ ys) / terms.sum(axis=1)
        on_node = hit_index >= 0
        chunk[on_node] = ys[hit_index[on_node]]
        result[start:start + _CHUNK] = chunk

    result = result.reshape(x.shape)
    return result if result.ndim else float(result)


def g_transform(kind: int, n: int, f: Callable, z):
    """g(z) = f(tau(z)); defined where tau(z) falls inside [-1, 1]."""
    x = np.asarray(tau(kind, n, z))
    if np.any(np.abs(x) > 1.0 + 4 * np.finfo(float).eps):
        raise DomainError(
            f"tau({kind}, n={n}) maps some z outside [-1, 1]; "
            f"kind 1 is defined for |z| <= {np.sin(map_rate(kind, n)):.17g}"
        )
    return f(np.clip(x, -1.0, 1.0))


def swi_lebesgue_constant(kind: int, n: int, grid) -> float:
    """max over the grid of sum |l_i(kappa(x))|, the data-perturbation amplification of q."""
    z = make_nodes(chebyshev_family(kind), n)
    return lebesgue_constant(z, closed_form_cheb_weights(kind, n), kappa(kind, n, grid))
