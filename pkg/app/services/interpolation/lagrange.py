"""Classical and barycentric Lagrange interpolation.

The classical O(n^2) form is kept as a test oracle and for Runge-phenomenon
demonstrations; the barycentric form is the evaluation backbone.
"""
from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from app.core.config import settings
from app.core.errors import DegenerateNodesError, InvalidDegreeError, NonfiniteWeightError
from app.services.interpolation.nodes import NodeSet, SampleSet, check_kind, frozen_array

_CHUNK = 2048


class WeightProvenance(str, Enum):
    GENERIC = "generic"
    CLOSED_FORM_CHEB1 = "closed-form-cheb1"
    CLOSED_FORM_CHEB2 = "closed-form-cheb2"


class BarycentricWeights(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int
    weights: np.ndarray
    provenance: WeightProvenance

    @field_validator("weights", mode="before")
    @classmethod
    def freeze_weights(cls, value):
        return frozen_array(value)


def _node_array(nodes) -> np.ndarray:
    if isinstance(nodes, NodeSet):
        return nodes.nodes
    return np.asarray(nodes, dtype=float)


def _check_distinct(xs: np.ndarray) -> None:
    if xs.size < 2:
        raise InvalidDegreeError(f"need at least 2 nodes, got {xs.size}")
    ordered = np.sort(xs)
    if np.any(np.diff(ordered) == 0.0):
        raise DegenerateNodesError("interpolation nodes must be pairwise distinct")


def node_hit_tolerance(x) -> np.ndarray:
    eps = np.finfo(float).eps
    return settings.NODE_HIT_ULPS * eps * np.maximum(1.0, np.abs(x))


def classical_lagrange_eval(samples: SampleSet, x):
    """p_n(x) = sum y_i l_i(x) with l_i built as explicit products; O(n^2) per point."""
    xs = samples.nodes.nodes
    ys = samples.values
    _check_distinct(xs)

    x = np.asarray(x, dtype=float)
    flat = np.atleast_1d(x).ravel()
    total = np.zeros_like(flat)
    for i in range(xs.size):
        others = np.delete(xs, i)
        basis = np.prod((flat[:, None] - others[None, :]) / (xs[i] - others[None, :]), axis=1)
        total += ys[i] * basis

    total = total.reshape(x.shape)
    return total if total.ndim else float(total)


def generic_barycentric_weights(nodes) -> BarycentricWeights:
    xs = _node_array(nodes)
    _check_distinct(xs)

    diffs = xs[:, None] - xs[None, :]
    np.fill_diagonal(diffs, 1.0)
    with np.errstate(over="ignore", under="ignore", divide="ignore"):
        weights = 1.0 / np.prod(diffs, axis=1)

    if not np.all(np.isfinite(weights)) or np.any(weights == 0.0):
        raise NonfiniteWeightError(
            f"generic barycentric weights overflow for {xs.size} nodes; "
            "use closed-form Chebyshev weights or a lower degree"
        )
    return BarycentricWeights(n=xs.size - 1, weights=weights, provenance=WeightProvenance.GENERIC)


def closed_form_cheb_weights(kind: int, n: int) -> BarycentricWeights:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise InvalidDegreeError(f"degree must be an integer >= 1, got {n!r}")
    kind = check_kind(kind)
    i = np.arange(n + 1)
    signs = np.where(i % 2 == 0, 1.0, -1.0)

    if kind == 1:
        weights = signs * np.sin((2 * i + 1) * np.pi / (2 * (n + 1)))
        provenance = WeightProvenance.CLOSED_FORM_CHEB1
    else:
        weights = signs.copy()
        weights[0] *= 0.5
        weights[-1] *= 0.5
        provenance = WeightProvenance.CLOSED_FORM_CHEB2

    return BarycentricWeights(n=n, weights=weights, provenance=provenance)


def _barycentric_terms(xs: np.ndarray, weights: np.ndarray, x: np.ndarray):
    """Return (terms, hit_index): terms[j, i] = w_i / (x_j - x_i), hit_index -1 off-node."""
    diffs = x[:, None] - xs[None, :]
    hits = np.abs(diffs) <= node_hit_tolerance(x)[:, None]
    hit_index = np.where(hits.any(axis=1), hits.argmax(axis=1), -1)

    safe = np.where(hits, 1.0, diffs)
    terms = weights[None, :] / safe
    return terms, hit_index


def _chunks(flat: np.ndarray, size: int = _CHUNK):
    for start in range(0, flat.size, size):
        yield slice(start, start + size)


def barycentric_eval(nodes, values, weights: BarycentricWeights, x):
    """p_n(x) = sum(w_i y_i / (x - x_i)) / sum(w_i / (x - x_i)); node hits return y_i."""
    xs = _node_array(nodes)
    ys = np.asarray(values, dtype=float)
    w = weights.weights
    if not (xs.size == ys.size == w.size):
        raise ValueError(
            f"nodes ({xs.size}), values ({ys.size}) and weights ({w.size}) must have equal length"
        )

    x = np.asarray(x, dtype=float)
    flat = np.atleast_1d(x).ravel()
    result = np.empty_like(flat)
    for part in _chunks(flat):
        terms, hit_index = _barycentric_terms(xs, w, flat[part])
        with np.errstate(invalid="ignore", over="ignore"):
            chunk = (terms @ ys) / terms.sum(axis=1)
        on_node = hit_index >= 0
        chunk[on_node] = ys[hit_index[on_node]]
        result[part] = chunk

    result = result.reshape(x.shape)
    return result if result.ndim else float(result)


def barycentric_basis(nodes, weights: BarycentricWeights, x) -> np.ndarray:
    """Matrix of Lagrange basis values l_i(x_j), shape (len(x), n+1)."""
    xs = _node_array(nodes)
    flat = np.atleast_1d(np.asarray(x, dtype=float)).ravel()
    terms, hit_index = _barycentric_terms(xs, weights.weights, flat)

    with np.errstate(invalid="ignore", over="ignore"):
        basis = terms / terms.sum(axis=1, keepdims=True)
    on_node = hit_index >= 0
    basis[on_node] = 0.0
    basis[np.flatnonzero(on_node), hit_index[on_node]] = 1.0
    return basis


def lebesgue_constant(nodes, weights: BarycentricWeights, x) -> float:
    """max over x of sum |l_i(x)|."""
    flat = np.atleast_1d(np.asarray(x, dtype=float)).ravel()
    return max(
        float(np.abs(barycentric_basis(nodes, weights, flat[part])).sum(axis=1).max())
        for part in _chunks(flat)
    )
