import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from app.core.errors import DomainError, InvalidDegreeError, InvalidKindError
from app.schemas import Method
from app.services.benchmarks.functions import BENCHMARKS, get_benchmark
from app.services.interpolation.chebyshev import (
    cheb_delta,
    cheb_eval,
    cheb_transform,
    chebyshev_T,
    clenshaw,
)
from app.services.interpolation.lagrange import barycentric_eval, closed_form_cheb_weights
from app.services.interpolation.methods import build_interpolant, sample
from app.services.interpolation.nodes import NodeFamily, make_nodes

FAMILIES = {1: NodeFamily.CHEB1, 2: NodeFamily.CHEB2}


def test_delta_factors():
    assert cheb_delta(1, 3).tolist() == [0.5, 1.0, 1.0, 1.0]
    assert cheb_delta(2, 3).tolist() == [0.5, 1.0, 1.0, 0.5]


@pytest.mark.parametrize("kind", [1, 2])
def test_constant_has_a_single_coefficient(kind):
    coeffs = cheb_transform(kind, np.full(7, 3.0))
    assert coeffs.weighted[0] == pytest.approx(3.0)
    assert_allclose(coeffs.c[1:], 0.0, atol=1e-14)


@pytest.mark.parametrize("kind", [1, 2])
def test_chebyshev_polynomial_is_recovered(kind):
    n = 6
    z = make_nodes(FAMILIES[kind], n).nodes
    coeffs = cheb_transform(kind, chebyshev_T(3, z))
    expected = np.zeros(n + 1)
    expected[3] = 1.0
    assert_allclose(coeffs.weighted, expected, atol=1e-14)


@pytest.mark.parametrize("kind", [1, 2])
@pytest.mark.parametrize("fid", sorted(BENCHMARKS))
@pytest.mark.parametrize("n", [3, 20, 100])
def test_interpolation_condition(kind, fid, n):
    z = make_nodes(FAMILIES[kind], n).nodes
    y = BENCHMARKS[fid](z)
    assert_allclose(cheb_eval(cheb_transform(kind, y), z), y, rtol=0, atol=1e-10 * (1 + np.max(np.abs(y))))


@pytest.mark.parametrize("kind", [1, 2])
@pytest.mark.parametrize("n", [1, 2, 9, 25, 40])
def test_coefficient_form_matches_barycentric_form(kind, n):
    rng = np.random.default_rng(n)
    nodes = make_nodes(FAMILIES[kind], n)
    y = rng.uniform(-1.0, 1.0, n + 1)
    z = rng.uniform(-1.0, 1.0, 200)
    assert_allclose(
        cheb_eval(cheb_transform(kind, y), z),
        barycentric_eval(nodes, y, closed_form_cheb_weights(kind, n), z),
        rtol=0,
        atol=1e-9,
    )


@given(theta=st.floats(min_value=0.0, max_value=np.pi), k=st.integers(min_value=0, max_value=60))
def test_chebyshev_T_is_cosine_of_multiple_angle(theta, k):
    assert chebyshev_T(k, np.cos(theta)) == pytest.approx(np.cos(k * theta), abs=1e-12)


def test_clenshaw_sums_the_series():
    z = np.linspace(-1.0, 1.0, 9)
    assert_allclose(clenshaw(z, np.array([1.0, 0.0, 1.0])), 1.0 + 2 * z**2 - 1.0, atol=1e-15)
    assert_allclose(clenshaw(z, np.array([0.5])), 0.5)


def test_too_few_values():
    with pytest.raises(InvalidDegreeError):
        cheb_transform(1, [1.0])


def test_evaluation_outside_unit_interval():
    coeffs = cheb_transform(2, [1.0, 2.0, 3.0])
    with pytest.raises(DomainError):
        cheb_eval(coeffs, 1.2)
    with pytest.raises(DomainError):
        chebyshev_T(2, -3.0)


def test_large_degree_coefficients_stay_accurate():
    n = 700
    theta = (2 * np.arange(n + 1) + 1) * np.pi / (2 * (n + 1))
    coeffs = cheb_transform(1, np.cos((n - 1) * theta))
    assert coeffs.weighted[n - 1] == pytest.approx(1.0, abs=1e-10)
    assert np.max(np.abs(np.delete(coeffs.weighted, n - 1))) < 1e-10


@pytest.mark.parametrize("method,kind", [(Method.CI1, 1), (Method.CI2, 2)])
@pytest.mark.parametrize("fid", [1, 4, 9])
@pytest.mark.parametrize("n", [2, 17, 64])
def test_ci_interpolant_agrees_with_barycentric_form(method, kind, fid, n):
    f = get_benchmark(fid)
    samples = sample(f, FAMILIES[kind], n)
    z = np.linspace(-1.0, 1.0, 401)
    assert_allclose(
        build_interpolant(method, f, n)(z),
        barycentric_eval(samples.nodes, samples.values, closed_form_cheb_weights(kind, n), z),
        rtol=0,
        atol=1e-9,
    )


@pytest.mark.parametrize("kind", [0, 3, True])
def test_transform_rejects_unknown_kind(kind):
    with pytest.raises(InvalidKindError):
        cheb_transform(kind, [1.0, 2.0, 3.0])


@pytest.mark.parametrize("k", [-1, 2.5, True])
def test_chebyshev_T_rejects_bad_index(k):
    with pytest.raises(InvalidDegreeError):
        chebyshev_T(k, 0.5)
