import numpy as np
import pytest

from optbench.api.config import ProbeConfig
from optbench.calculus import FDKind, FDScheme, ProbeVerdict, fd_gradient, separability_probe, stationarity_residual
from optbench.exceptions import DimensionMismatch

SEEDS = range(5)


def styblinski_tang_gradient(x):
    x = np.asarray(x, dtype=float)
    return 0.5 * (4 * x**3 - 32 * x + 5)


def test_sphere_gradient():
    assert fd_gradient("sphere", (1, 2)) == pytest.approx([2, 4], abs=1e-8)
    forward = fd_gradient("sphere", (1, 2), FDScheme(FDKind.forward, step=1e-7))
    assert forward == pytest.approx([2, 4], abs=1e-5)


def test_central_error_shrinks_quadratically():
    x = (1.0, 2.0)
    exact = styblinski_tang_gradient(x)
    errors = []
    h = 1e-2
    for _ in range(4):
        errors.append(np.max(np.abs(fd_gradient("styblinski-tang", x, FDScheme(step=h)) - exact)))
        h /= 2
    for coarse, fine in zip(errors, errors[1:]):
        assert 3.5 <= coarse / fine <= 4.5


def test_central_difference_exact_on_sphere():
    assert np.max(np.abs(fd_gradient("sphere", (1, 2)) - np.array([2.0, 4.0]))) < 1e-8


def test_rosenbrock_gradient_vanishes_at_ones():
    assert np.linalg.norm(fd_gradient("rosenbrock", np.ones(5))) <= 1e-4


def test_one_sided_at_bounds():
    # sphere lives on [0, 10]^D, so the origin sits on the lower corner
    grad = fd_gradient("sphere", (0, 0))
    assert np.all(grad > 0) and np.all(grad < 1e-5)
    grad = fd_gradient("sphere", (10, 5))
    assert grad == pytest.approx([20, 10], abs=1e-4)


def test_stationarity_projection():
    assert stationarity_residual("sphere", (0, 0)) == 0.0
    assert stationarity_residual("sphere", (0, 3)) == pytest.approx(6.0, abs=1e-5)
    assert stationarity_residual("sphere", (10, 10)) == pytest.approx(20 * np.sqrt(2), abs=1e-4)
    assert stationarity_residual("beale", (3, 0.5)) < 1e-6


def test_gradient_errors():
    with pytest.raises(DimensionMismatch):
        fd_gradient("beale", (1, 2, 3))
    with pytest.raises(ValueError):
        FDScheme(step=0)


@pytest.mark.parametrize("key", ["alpine-1", "bohachevsky-1", "csendes", "powell-sum", "qing", "sphere", "sum-squares"])
def test_probe_separable(key):
    for seed in SEEDS:
        result = separability_probe(key, seed=seed)
        assert result.verdict == ProbeVerdict.additively_separable, (key, seed, result)
        assert result.samples >= ProbeConfig().min_samples


@pytest.mark.parametrize("key", ["beale", "griewank", "matyas", "rosenbrock", "schwefel-2-22"])
def test_probe_non_separable(key):
    for seed in SEEDS:
        result = separability_probe(key, seed=seed)
        assert result.verdict == ProbeVerdict.non_separable, (key, seed, result)
        assert result.evidence > ProbeConfig().tolerance


def test_probe_is_deterministic():
    assert separability_probe("matyas", seed=3) == separability_probe("matyas", seed=3)


def test_probe_arguments():
    with pytest.raises(ValueError):
        separability_probe("sphere", samples=8)
    with pytest.raises(ValueError):
        separability_probe("langerman-5", dimension=1)
    with pytest.raises(DimensionMismatch):
        separability_probe("beale", dimension=3)
    result = separability_probe("sphere", dimension=6, samples=16)
    assert result.as_dict()["verdict"] == "AdditivelySeparable"
