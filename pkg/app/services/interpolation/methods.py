"""One entry point for every interpolation method the harness and the CLI use.

An Interpolant wraps a built evaluator with its method tag and degree. CI
methods sample at Chebyshev nodes, SWI methods and the two equidistant
Lagrange forms at equidistant nodes; AVG_* average the two kinds.
"""
from typing import Callable, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict

from app.core.errors import WrongNodeFamilyError
from app.schemas import Family, Method
from app.services.interpolation.chebyshev import cheb_eval, cheb_transform
from app.services.interpolation.lagrange import (
    barycentric_eval,
    classical_lagrange_eval,
    closed_form_cheb_weights,
    generic_barycentric_weights,
    lebesgue_constant,
)
from app.services.interpolation.nodes import NodeFamily, NodeSet, SampleSet, make_nodes
from app.services.interpolation.swi import swi_build, swi_lebesgue_constant

_KIND = {
    Method.CI1: 1,
    Method.CI2: 2,
    Method.SWI1: 1,
    Method.SWI2: 2,
}

_FAMILY_METHODS = {
    Family.CI: (Method.CI1, Method.CI2),
    Family.SWI: (Method.SWI1, Method.SWI2),
}

_AVERAGED = {
    Method.AVG_CI: (Method.CI1, Method.CI2),
    Method.AVG_SWI: (Method.SWI1, Method.SWI2),
}


class Interpolant(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    method: Method
    n: int
    nodes: Optional[NodeSet] = None
    evaluator: Callable

    def __call__(self, x):
        return self.evaluator(x)


def family_methods(family: Family):
    return _FAMILY_METHODS[Family(family)]


def node_family(method: Method) -> NodeFamily:
    method = Method(method)
    if method is Method.CI1:
        return NodeFamily.CHEB1
    if method is Method.CI2:
        return NodeFamily.CHEB2
    if method in _AVERAGED:
        raise ValueError(f"{method.value} samples two node families")
    return NodeFamily.EQUIDISTANT


def sample(f: Callable, family: NodeFamily, n: int) -> SampleSet:
    nodes = make_nodes(family, n)
    return SampleSet(nodes=nodes, values=np.asarray(f(nodes.nodes), dtype=float))


def _from_samples(method: Method, samples: SampleSet) -> Callable:
    expected = node_family(method)
    if samples.family is not expected:
        raise WrongNodeFamilyError(
            f"{method.value} needs {expected.value} samples, got {samples.family.value}"
        )
    xs, ys = samples.nodes, samples.values

    if method in (Method.CI1, Method.CI2):
        coeffs = cheb_transform(_KIND[method], ys)
        return lambda x: cheb_eval(coeffs, x)
    if method in (Method.SWI1, Method.SWI2):
        return swi_build(_KIND[method], samples)
    if method is Method.BARY_EQUID:
        weights = generic_barycentric_weights(xs)
        return lambda x: barycentric_eval(xs, ys, weights, x)
    return lambda x: classical_lagrange_eval(samples, x)


def build_from_samples(method: Method, samples: SampleSet) -> Interpolant:
    method = Method(method)
    if method in _AVERAGED:
        raise ValueError(f"{method.value} is built from a function, not one sample set")
    return Interpolant(
        method=method, n=samples.n, nodes=samples.nodes, evaluator=_from_samples(method, samples)
    )


def build_interpolant(method: Method, f: Callable, n: int) -> Interpolant:
    """Sample f at the method's nodes and build; AVG_* returns (phi1 + phi2) / 2."""
    method = Method(method)
    if method in _AVERAGED:
        first, second = (build_interpolant(m, f, n) for m in _AVERAGED[method])
        return Interpolant(
            method=method, n=n, evaluator=lambda x: 0.5 * (first(x) + second(x))
        )
    return build_from_samples(method, sample(f, node_family(method), n))


def method_lebesgue_constant(method: Method, n: int, grid) -> float:
    """max over the grid of sum |l_i(x)| for the method's node set."""
    method = Method(method)
    if method in (Method.SWI1, Method.SWI2):
        return swi_lebesgue_constant(_KIND[method], n, grid)
    if method in (Method.CI1, Method.CI2):
        nodes = make_nodes(node_family(method), n)
        return lebesgue_constant(nodes, closed_form_cheb_weights(_KIND[method], n), grid)
    if method in (Method.CLASSICAL_EQUID, Method.BARY_EQUID):
        nodes = make_nodes(NodeFamily.EQUIDISTANT, n)
        return lebesgue_constant(nodes, generic_barycentric_weights(nodes), grid)
    raise ValueError(f"no single node set for {method.value}")
