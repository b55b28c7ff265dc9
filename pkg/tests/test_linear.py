"""Tests for least-squares Rashomon ellipsoids."""

from __future__ import annotations

import numpy as np
import pytest
from scipy import linalg

from rashomon_rid.models.distribution import ConsistencyError
from rashomon_rid.models.ellipsoid import CdfMethod, Ellipsoid
from rashomon_rid.services.linear_service import LinearService
from rashomon_rid.utils.rng import SplitMix64


def _circle(epsilon: float = 1.0) -> Ellipsoid:
    return Ellipsoid(A=np.eye(2), center=np.asarray([1.0, 2.0]), offset=0.0, epsilon=epsilon)


def _random_spd(seed: int, p: int) -> np.ndarray:
    m = SplitMix64(seed).normal_array(p * p).reshape(p, p)
    return m @ m.T + 0.5 * np.eye(p)


def test_ols_identity_system() -> None:
    """X = I, y = (1, 2) interpolates with zero loss."""
    e = LinearService.ols_fit(np.eye(2), [1.0, 2.0])
    assert e.center.tolist() == pytest.approx([1.0, 2.0])
    assert e.offset == pytest.approx(0.0, abs=1e-12)
    assert e.epsilon is None


def test_ols_orthogonal_target() -> None:
    """A target orthogonal to the columns gives theta* = 0 and c = y'y."""
    X = np.asarray([[1.0, 0.0], [0.0, 1.0], [0.0, 0.0]])
    e = LinearService.ols_fit(X, [0.0, 0.0, 3.0])
    assert e.center.tolist() == pytest.approx([0.0, 0.0])
    assert e.offset == pytest.approx(9.0)


def test_ols_normal_equations() -> None:
    """Residuals are orthogonal to the design."""
    rng = SplitMix64(1)
    X = rng.normal_array(150).reshape(50, 3)
    y = rng.normal_array(50)
    e = LinearService.ols_fit(X, y)
    assert np.abs(X.T @ (y - X @ e.center)).max() < 1e-8


def test_ols_rank_deficient() -> None:
    """Collinear columns are refused."""
    X = np.asarray([[1.0, 2.0], [2.0, 4.0], [3.0, 6.0]])
    with pytest.raises(ValueError, match="rank deficient"):
        LinearService.ols_fit(X, [1.0, 2.0, 3.0])


def test_level_set_value_matches_direct_sse() -> None:
    """The quadratic-form identity reproduces ||y - X theta||^2."""
    rng = SplitMix64(2)
    X = rng.normal_array(80).reshape(20, 4)
    y = rng.normal_array(20)
    e = LinearService.ols_fit(X, y)
    assert LinearService.level_set_value(e, e.center) == pytest.approx(e.offset)
    theta = rng.normal_array(4)
    direct = float(np.sum((y - X @ theta) ** 2))
    assert LinearService.level_set_value(e, theta) == pytest.approx(direct, abs=1e-8)


def test_boundary_point_has_loss_c_plus_epsilon() -> None:
    """A scaled eigenvector on the boundary sits at SSE c + epsilon."""
    A = _random_spd(3, 3)
    e = Ellipsoid(A=A, center=np.zeros(3), offset=2.0, epsilon=0.7)
    w, V = linalg.eigh(A)
    theta = V[:, 0] * np.sqrt(0.7 / w[0])
    assert LinearService.level_set_value(e, theta) == pytest.approx(2.7, abs=1e-8)


def test_axis_extrema_unit_circle() -> None:
    """A = I, epsilon 1, center (1, 2): the first coordinate spans [0, 2]."""
    interval = LinearService.axis_extrema(_circle(), 0)
    assert (interval.a, interval.b) == pytest.approx((0.0, 2.0))


def test_axis_extrema_scale_with_sqrt_epsilon() -> None:
    """Four times the epsilon doubles the half-width."""
    narrow = LinearService.axis_extrema(_circle(1.0), 1)
    wide = LinearService.axis_extrema(_circle(4.0), 1)
    assert wide.half_width == pytest.approx(2 * narrow.half_width)
    assert wide.a < narrow.a < narrow.b < wide.b


@pytest.mark.parametrize("seed", range(5))
def test_axis_extrema_nest_as_epsilon_shrinks(seed: int) -> None:
    """Each smaller epsilon gives strictly inner bounds that still contain the OLS fit."""
    rng = SplitMix64(seed + 300)
    X = rng.normal_array(40 * 3).reshape(40, 3)
    y = X @ np.asarray([1.0, -2.0, 0.5]) + 0.3 * rng.normal_array(40)
    fit = LinearService.ols_fit(X, y)
    for j in range(3):
        previous = None
        for epsilon in (4.0, 2.0, 1.0, 0.5, 0.1, 0.01):
            interval = LinearService.axis_extrema(fit.with_epsilon(epsilon), j)
            assert interval.a < fit.center[j] < interval.b
            if previous is not None:
                assert previous.a < interval.a < interval.b < previous.b
            previous = interval


@pytest.mark.parametrize("seed", range(20))
def test_axis_extrema_match_cholesky_support(seed: int) -> None:
    """Extrema equal the ellipsoid's support function computed through Cholesky."""
    p = 1 + seed % 6
    A = _random_spd(seed, p)
    center = SplitMix64(seed + 100).normal_array(p)
    e = Ellipsoid(A=A, center=center, offset=0.0, epsilon=0.3)
    lower = linalg.cholesky(A, lower=True)
    for j in range(p):
        unit = np.zeros(p)
        unit[j] = 1.0
        reach = np.sqrt(0.3) * np.linalg.norm(linalg.solve_triangular(lower, unit, lower=True))
        interval = LinearService.axis_extrema(e, j)
        assert interval.b == pytest.approx(center[j] + reach, abs=1e-6)
        assert interval.a == pytest.approx(center[j] - reach, abs=1e-6)
        # The maximizer lies on the boundary.
        v = linalg.solve(A, unit)
        top = center + 0.3 * v / reach
        assert LinearService.level_set_value(e, top) == pytest.approx(0.3, abs=1e-8)


def test_cdf_symmetry_and_support() -> None:
    """Half the volume lies below the center; none below a_j, all below b_j."""
    e = _circle()
    assert LinearService.linear_rid_cdf(e, 0, 1.0) == pytest.approx(0.5, abs=1e-9)
    assert LinearService.linear_rid_cdf(e, 0, 2.0) == 1.0
    assert LinearService.linear_rid_cdf(e, 0, 0.0) == 0.0


def test_cdf_analytic_matches_monte_carlo() -> None:
    """Beta marginal and ellipsoid sampling agree on the unit circle."""
    e = _circle()
    analytic = LinearService.linear_rid_cdf(e, 0, 1.5)
    sampled = LinearService.linear_rid_cdf(
        e, 0, 1.5, CdfMethod.MONTE_CARLO, samples=200_000, seed=8,
    )
    assert abs(analytic - sampled) < 0.005


def test_cdf_analytic_matches_monte_carlo_in_higher_dimension() -> None:
    """Agreement within three standard errors on a random 4-d ellipsoid."""
    A = _random_spd(5, 4)
    e = Ellipsoid(A=A, center=np.zeros(4), offset=0.0, epsilon=2.0)
    interval = LinearService.axis_extrema(e, 2)
    samples = 100_000
    for k in (interval.a + 0.3 * 2 * interval.half_width, 0.0, interval.b - 0.1):
        analytic = LinearService.linear_rid_cdf(e, 2, k)
        sampled = LinearService.linear_rid_cdf(
            e, 2, k, CdfMethod.MONTE_CARLO, samples=samples, seed=4,
        )
        error = np.sqrt(analytic * (1 - analytic) / samples)
        assert abs(analytic - sampled) <= 3 * error + 1e-12


def test_monte_carlo_needs_samples() -> None:
    """Zero samples are refused."""
    with pytest.raises(ValueError):
        LinearService.linear_rid_cdf(_circle(), 0, 1.0, CdfMethod.MONTE_CARLO, samples=0)


def test_samples_lie_inside() -> None:
    """Every sampled point has SSE at most c + epsilon."""
    A = _random_spd(6, 3)
    e = Ellipsoid(A=A, center=np.ones(3), offset=1.0, epsilon=0.5)
    points = LinearService.sample_ellipsoid(e, 500, 3)
    values = [LinearService.level_set_value(e, point) for point in points]
    assert max(values) <= 1.5 + 1e-9


def test_rld_linear() -> None:
    """0 at the optimum, 1 at c + epsilon, 0.5 halfway for p=2."""
    e = _circle()
    assert LinearService.rld_linear(e, 0.0) == 0.0
    assert LinearService.rld_linear(e, 1.0) == 1.0
    assert LinearService.rld_linear(e, 0.5) == 0.5
    assert LinearService.rld_linear(e, -1.0) == 0.0


def test_m_integral_closed_form() -> None:
    """p=2, epsilon 1 gives 1/2; the value grows with epsilon."""
    assert LinearService.m_integral(_circle()) == pytest.approx(0.5, abs=1e-8)
    grid = [LinearService.m_integral(_circle(eps)) for eps in (0.01, 0.1, 0.5, 1.0, 2.0)]
    assert all(a < b for a, b in zip(grid, grid[1:]))


def test_m_integral_higher_dimension() -> None:
    """epsilon p / (p + 2) for p = 5."""
    e = Ellipsoid(A=_random_spd(7, 5), center=np.zeros(5), offset=0.0, epsilon=0.4)
    assert LinearService.m_integral(e) == pytest.approx(0.4 * 5 / 7, abs=1e-8)


def test_cdf_moves_toward_step_as_epsilon_shrinks() -> None:
    """A smaller epsilon never puts the CDF farther from the step at theta*_j."""
    A = _random_spd(9, 3)
    center = np.asarray([0.5, -1.0, 2.0])
    large = Ellipsoid(A=A, center=center, offset=0.0, epsilon=1.0)
    small = large.with_epsilon(0.25)
    span = LinearService.axis_extrema(large, 1)
    for k in np.linspace(span.a - 0.1, span.b + 0.1, 41):
        step = 1.0 if center[1] <= k else 0.0
        wide = abs(step - LinearService.linear_rid_cdf(large, 1, float(k)))
        narrow = abs(step - LinearService.linear_rid_cdf(small, 1, float(k)))
        assert wide >= narrow - 1e-12


def test_rid_deviation_grows_with_epsilon() -> None:
    """The integrated gap to the step increases along an epsilon grid."""
    widest = LinearService.axis_extrema(_circle(2.0), 0)
    gaps = [
        LinearService.rid_deviation(_circle(eps), 0, widest.a, widest.b)
        for eps in (0.25, 0.5, 1.0, 2.0)
    ]
    assert all(a < b for a, b in zip(gaps, gaps[1:]))


def test_epsilon_required() -> None:
    """Extrema need an epsilon on the ellipsoid."""
    e = LinearService.ols_fit(np.eye(2), [1.0, 2.0])
    with pytest.raises(ValueError, match="epsilon"):
        LinearService.axis_extrema(e, 0)


def test_consistency_error_is_runtime_error() -> None:
    """Internal disagreements surface as RuntimeError subclasses."""
    assert issubclass(ConsistencyError, RuntimeError)
