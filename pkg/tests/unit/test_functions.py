import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from optbench.exceptions import DimensionMismatch, DomainError
from optbench.functions import SUPPRESS, EvalContext, NoisePolicy, evaluate, evaluate_batch
from optbench.functions.base import oprod, osum
from optbench.registry import get_catalog, lookup

SAMPLE = NoisePolicy.sample


@pytest.mark.parametrize(
    "key,point,expected",
    [
        ("beale", (3, 0.5), 0.0),
        ("booth", (1, 3), 0.0),
        ("three-hump-camel", (0, 0), 0.0),
        ("goldstein-price", (0, -1), 3.0),
        ("himmelblau", (3, 2), 0.0),
        ("leon", (1, 1), 0.0),
        ("rosenbrock", (1, 1), 0.0),
        ("rosenbrock", (1, 1, 1, 1, 1), 0.0),
        ("sphere", (0, 0), 0.0),
        ("sphere", (0,) * 10, 0.0),
        ("step-2", (0, 0), 0.0),
        ("trecanni", (0, 0), 0.0),
        ("trecanni", (-2, 0), 0.0),
        ("weierstrass", (0, 0), 0.0),
        ("weierstrass", (0, 0, 0, 0, 0), 0.0),
    ],
)
def test_exact_values(key, point, expected):
    assert evaluate(key, point) == expected


def test_sphere_lattice():
    assert evaluate("sphere", (1, 2)) == 5.0
    assert evaluate("sphere", (-1, 1)) == 2.0


def test_sign_conventions():
    # printed forms, not canonical ones
    assert evaluate("exponential", (0, 0)) == -1.0
    assert evaluate("stepint", (0, 0)) == 25.0
    assert evaluate("rosenbrock-modified", (-1, -1)) == pytest.approx(78.0)


def test_step_2_plateau_edge():
    assert evaluate("step-2", (0.5, 0.5)) == 2.0
    assert evaluate("step-2", (0.49, -0.5)) == 0.0


def test_outside_box_allowed():
    assert evaluate("sphere", (-3, 4)) == 25.0


def test_dimension_checks():
    with pytest.raises(DimensionMismatch):
        evaluate("beale", (1, 2, 3))
    with pytest.raises(DimensionMismatch):
        evaluate("rosenbrock", (1,))
    with pytest.raises(DimensionMismatch):
        evaluate("langerman-5", (1,) * 11)


def test_domain_errors():
    with pytest.raises(DomainError):
        evaluate("rump", (0, 0))
    with pytest.raises(DomainError):
        evaluate("sphere", (math.nan, 0))
    with pytest.raises(DomainError):
        evaluate("sphere", (math.inf, 0))


def test_stochastic_suppress_and_sample():
    assert evaluate("quartic", (0, 0), SUPPRESS) == 0.0
    assert evaluate("quartic", (1, 1), SUPPRESS) == 3.0
    # suppressed epsilon_i = 1 leaves sum |x_i|^i
    assert evaluate("xin-she-yang-1", (0.5, 0.5), SUPPRESS) == 0.5 + 0.25
    sampled = evaluate("quartic", (0, 0), EvalContext(7, SAMPLE))
    assert 0.0 <= sampled < 1.0
    assert evaluate("quartic", (0, 0), EvalContext(7, SAMPLE)) == sampled
    assert evaluate("quartic", (0, 0), EvalContext(8, SAMPLE)) != sampled


def test_stochastic_streams():
    ctx = EvalContext(3, SAMPLE)
    a = evaluate("xin-she-yang-1", (1, 1), ctx, stream=0)
    b = evaluate("xin-she-yang-1", (1, 1), ctx, stream=1)
    assert a != b
    assert evaluate("xin-she-yang-1", (1, 1), ctx, stream=1) == b


def test_batch_matches_single():
    ctx = EvalContext(11, SAMPLE)
    points = [(0.1, 0.2), (0.3, -0.4), (1.0, 1.0)]
    batch = evaluate_batch("quartic", points, ctx)
    assert batch == [evaluate("quartic", p, ctx, stream=i) for i, p in enumerate(points)]


def test_batch_errors():
    with pytest.raises(DomainError):
        evaluate_batch("rump", [(1, 1), (0, 0)])
    values = evaluate_batch("rump", [(1, 1), (0, 0)], errors="nan")
    assert math.isfinite(values[0]) and math.isnan(values[1])
    with pytest.raises(ValueError):
        evaluate_batch("rump", [(1, 1)], errors="ignore")


def test_parameters():
    spec = lookup("schwefel")
    assert dict(spec.parameters) == {"alpha": 0.5}
    assert evaluate(spec, (1, 1), params={"alpha": 0.5}) == evaluate(spec, (1, 1))
    assert evaluate(spec, (2, 2), params={"alpha": 1.0}) != evaluate(spec, (2, 2))
    with pytest.raises(ValueError):
        evaluate(spec, (1, 1), params={"beta": 1.0})
    assert set(lookup("weierstrass").parameters) == {"a", "b", "kmax"}


def test_every_entry_evaluates_at_default_dimension():
    for spec in get_catalog():
        dim = spec.dimension.default
        lo, hi = spec.bounds.arrays(dim)
        mid = (lo + hi) / 2 + 0.1 * (hi - lo)
        try:
            value = evaluate(spec, mid)
        except DomainError:
            continue
        assert not math.isnan(value), spec.index


def test_ordered_reductions():
    assert osum([1e16, 1.0, -1e16]) == 0.0
    assert osum([]) == 0.0
    assert oprod([2.0, 3.0, 4.0]) == 24.0
    assert oprod([]) == 1.0


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(min_value=-10, max_value=10, allow_nan=False), min_size=2, max_size=8))
def test_sphere_symmetry(x):
    value = evaluate("sphere", x)
    assert value >= 0
    assert evaluate("sphere", [-v for v in x]) == value
    assert evaluate("sphere", list(reversed(x))) == pytest.approx(value)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=2**32), st.integers(min_value=0, max_value=1000))
def test_seeded_draws_reproduce(seed, stream):
    ctx = EvalContext(seed, SAMPLE)
    first = evaluate("xin-she-yang-1", (1.0, -1.0, 0.5), ctx, stream=stream)
    assert evaluate("xin-she-yang-1", (1.0, -1.0, 0.5), ctx, stream=stream) == first
    assert ctx.generator(stream).random(3).tolist() == ctx.generator(stream).random(3).tolist()


def test_generator_is_pcg64():
    rng = EvalContext(5).generator(2)
    expected = np.random.Generator(np.random.PCG64(np.random.SeedSequence(5, spawn_key=(2,))))
    assert rng.random() == expected.random()


ORIGIN_VALUES = {
    "ackley-1": 0.0,
    "chung-reynolds": 0.0,
    "exponential": -1.0,
    "griewank": 0.0,
    "salomon": 0.0,
    "schwefel-1-2": 0.0,
    "schwefel-2-22": 0.0,
    "schwefel-2-23": 0.0,
    "sphere": 0.0,
    "sum-squares": 0.0,
    "weierstrass": 0.0,
    "zakharov": 0.0,
}


@pytest.mark.parametrize("dim", [2, 5, 10])
@pytest.mark.parametrize("key", sorted(ORIGIN_VALUES))
def test_origin_value_in_any_dimension(key, dim):
    assert evaluate(key, np.zeros(dim)) == pytest.approx(ORIGIN_VALUES[key], abs=1e-12)


@pytest.mark.parametrize("point", [(3, 4), (0.5, -7), (-2.5, 1)])
def test_price_1_sign_flips(point):
    x1, x2 = point
    value = evaluate("price-1", point)
    assert evaluate("price-1", (-x1, x2)) == value
    assert evaluate("price-1", (x1, -x2)) == value
    assert evaluate("price-1", (-x1, -x2)) == value


@pytest.mark.parametrize("point", [(1, 2), (3, 3.5), (-10, 4)])
def test_easom_swap(point):
    x1, x2 = point
    assert evaluate("easom", (x2, x1)) == evaluate("easom", point)
