"""Catalog entries f100-f136 (Quartic through Schaffer F6)."""

from functools import partial
from typing import List

import numpy as np

from optbench.exceptions import DomainError
from optbench.functions.base import (
    approx,
    define,
    exact,
    filled,
    ones,
    origin,
    oprod,
    osum,
    rounded,
    unstated,
    value_only,
)
from optbench.functions.constants import SHEKEL_A, SHEKEL_C
from optbench.registry import Bounds, Fixed, FunctionSpec, Scalable

SPECS: List[FunctionSpec] = []
benchmark = partial(define, SPECS)

PI = np.pi


@benchmark(
    100,
    "quartic",
    "Quartic",
    header="Continuous, Differentiable, Separable, Scalable",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-1.28, 1.28),
    optima=[exact(0.0, pattern=origin, note="value with the random term suppressed")],
    cite="STORN1996",
    stochastic=True,
    noise_fill=0.0,
)
def quartic(x, draws):
    i = np.arange(1, x.size + 1, dtype=float)
    return osum(i * x**4) + draws[0]


@benchmark(
    101,
    "quintic",
    "Quintic",
    header="Continuous, Differentiable, Separable, Non-Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[exact(0.0, pattern=filled(-1, 2), note="each coordinate -1 or 2; the two uniform points are audited")],
    cite="MISHRA2006_6",
)
def quintic(x):
    return osum(np.abs(x**5 - 3 * x**4 + 4 * x**3 + 2 * x**2 - 10 * x - 4))


@benchmark(
    102,
    "rana",
    "Rana",
    header="Continuous, Differentiable, Non-Separable, Scalable, Multimodal",
    dimension=Scalable(2, 2),
    bounds=Bounds.uniform(-500, 500),
    optima=[unstated()],
    cite="PRICE2005",
    note="||.|| read as absolute value and * as multiplication",
)
def rana(x):
    a, b = x[:-1], x[1:]
    t1 = np.sqrt(np.abs(b + a + 1))
    t2 = np.sqrt(np.abs(b - a + 1))
    return osum((b + 1) * np.cos(t2) * np.sin(t1) + a * np.cos(t1) * np.sin(t2))


def _ripple_envelope(x):
    return -np.exp(-2 * np.log(2) * ((x - 0.1) / 0.8) ** 2)


@benchmark(
    103,
    "ripple-1",
    "Ripple 1",
    header="Non-separable",
    dimension=Fixed(2),
    bounds=Bounds.uniform(0, 1),
    optima=[unstated("one global minimum among 252004 local minima; location not printed")],
)
def ripple_1(x):
    return osum(_ripple_envelope(x) * (np.sin(5 * PI * x) ** 6 + 0.1 * np.cos(500 * PI * x) ** 2))


@benchmark(
    104,
    "ripple-25",
    "Ripple 25",
    header="Non-separable",
    dimension=Fixed(2),
    bounds=Bounds.uniform(0, 1),
    optima=[unstated("global form of Ripple 1; location not printed")],
)
def ripple_25(x):
    return osum(_ripple_envelope(x) * np.sin(5 * PI * x) ** 6)


@benchmark(
    105,
    "rosenbrock",
    "Rosenbrock",
    header="Continuous, Differentiable, Non-Separable, Scalable, Unimodal",
    dimension=Scalable(2, 2),
    bounds=Bounds.uniform(-30, 30),
    optima=[exact(0.0, pattern=ones)],
    cite="ROSENBROCK1960",
)
def rosenbrock(x):
    a, b = x[:-1], x[1:]
    return osum(100 * (b - a**2) ** 2 + (a - 1) ** 2)


@benchmark(
    106,
    "rosenbrock-modified",
    "Rosenbrock Modified",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-2, 2),
    optima=[exact(0.0, (-1, -1))],
    note="(1 - x)^2 read as (1 - x1)^2",
)
def rosenbrock_modified(x):
    x1, x2 = x
    return 74 + 100 * (x2 - x1**2) ** 2 + (1 - x1) ** 2 - 400 * np.exp(-((x1 + 1) ** 2 + (x2 + 1) ** 2) / 0.1)


@benchmark(
    107,
    "rotated-ellipse",
    "Rotated Ellipse",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-500, 500),
    optima=[exact(0.0, (0, 0))],
)
def rotated_ellipse(x):
    x1, x2 = x
    return 7 * x1**2 - 6 * np.sqrt(3) * x1 * x2 + 13 * x2**2


@benchmark(
    108,
    "rotated-ellipse-2",
    "Rotated Ellipse 2",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-500, 500),
    optima=[exact(0.0, (0, 0))],
    cite="PRICE2005",
)
def rotated_ellipse_2(x):
    x1, x2 = x
    return x1**2 - x1 * x2 + x2**2


@benchmark(
    109,
    "rump",
    "Rump",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-500, 500),
    optima=[exact(0.0, (0, 0))],
    cite="MOORE1988",
    note="the x1 / (2 x2) term is undefined at x2 = 0, including the printed minimum",
)
def rump(x):
    x1, x2 = x
    if x2 == 0:
        raise DomainError("Rump divides by x2; undefined at x2 = 0")
    return (333.75 - x1**2) * x2**6 + x1**2 * (11 * x1**2 * x2**2 - 121 * x2**4 - 2) + 5.5 * x2**8 + x1 / (2 * x2)


@benchmark(
    110,
    "salomon",
    "Salomon",
    header="Continuous, Differentiable, Non-Separable, Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-100, 100),
    optima=[exact(0.0, pattern=origin)],
    cite="SALOMON1996",
)
def salomon(x):
    r = np.sqrt(osum(x**2))
    return 1 - np.cos(2 * PI * r) + 0.1 * r


@benchmark(
    111,
    "sargan",
    "Sargan",
    header="Continuous, Differentiable, Non-Separable, Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-100, 100),
    optima=[exact(0.0, pattern=origin)],
    cite="DIXON1978",
    note="inner sum over j != 1 read as j != i",
)
def sargan(x):
    total = osum(x)
    return osum(x**2 + 0.4 * x * (total - x))


def _schaffer_denominator(x1, x2):
    return 1 + 0.001 * (x1**2 + x2**2) ** 2


@benchmark(
    112,
    "schaffer-1",
    "Schaffer 1",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-100, 100),
    optima=[exact(0.0, (0, 0))],
    cite="MISHRA2006_7",
    note="title printed as 'Scahffer 1'",
)
def schaffer_1(x):
    x1, x2 = x
    return 0.5 + (np.sin((x1**2 + x2**2) ** 2) ** 2 - 0.5) / _schaffer_denominator(x1, x2)


@benchmark(
    113,
    "schaffer-2",
    "Schaffer 2",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-100, 100),
    optima=[exact(0.0, (0, 0))],
    cite="MISHRA2006_7",
    note="title printed as 'Scahffer 2'",
)
def schaffer_2(x):
    x1, x2 = x
    return 0.5 + (np.sin((x1**2 - x2**2) ** 2) ** 2 - 0.5) / _schaffer_denominator(x1, x2)


@benchmark(
    114,
    "schaffer-3",
    "Schaffer 3",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-100, 100),
    optima=[rounded(0.00156685, (0, 1.253115))],
    cite="MISHRA2006_7",
    note="title printed as 'Scahffer 3'",
)
def schaffer_3(x):
    x1, x2 = x
    return 0.5 + (np.sin(np.cos(np.abs(x1**2 - x2**2))) ** 2 - 0.5) / _schaffer_denominator(x1, x2)


@benchmark(
    115,
    "schaffer-4",
    "Schaffer 4",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-100, 100),
    optima=[rounded(0.292579, (0, 1.253115))],
    cite="MISHRA2006_7",
    note="title printed as 'Scahffer 4'",
)
def schaffer_4(x):
    x1, x2 = x
    return 0.5 + (np.cos(np.sin(x1**2 - x2**2)) ** 2 - 0.5) / _schaffer_denominator(x1, x2)


@benchmark(
    116,
    "schmidt-vetters",
    "Schmidt Vetters",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(3),
    bounds=Bounds.uniform(0, 10),
    optima=[exact(3.0, (0.78547, 0.78547, 0.78547))],
    cite="LOOTSMA1972",
    note="no box printed; [0, 10]^3 is used",
)
def schmidt_vetters(x):
    x1, x2, x3 = x
    return 1 / (1 + (x1 - x2) ** 2) + np.sin((PI * x2 + x3) / 2) + np.exp(((x1 + x2) / x2 - 2) ** 2)


@benchmark(
    117,
    "schumer-steiglitz",
    "Schumer Steiglitz",
    header="Continuous, Differentiable, Separable, Scalable, Unimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[exact(0.0, pattern=origin)],
    cite="SCHUMER1968",
    note="no box printed; [-10, 10]^D is used",
)
def schumer_steiglitz(x):
    return osum(x**4)


@benchmark(
    118,
    "schwefel",
    "Schwefel",
    header="Continuous, Differentiable, Partially-Separable, Scalable, Unimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-100, 100),
    optima=[exact(0.0, pattern=origin)],
    cite="SCHWEFEL1981",
    parameters={"alpha": 0.5},
    note="alpha >= 0 is a parameter, 0.5 by default",
)
def schwefel(x, alpha=0.5):
    if alpha < 0:
        raise DomainError(f"Schwefel needs alpha >= 0, got {alpha}")
    return osum(x**2) ** alpha


@benchmark(
    119,
    "schwefel-1-2",
    "Schwefel 1.2",
    header="Continuous, Differentiable, Non-Separable, Scalable, Unimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-100, 100),
    optima=[exact(0.0, pattern=origin)],
    cite="SCHWEFEL1981",
)
def schwefel_1_2(x):
    return osum(np.cumsum(x) ** 2)


@benchmark(
    120,
    "schwefel-2-4",
    "Schwefel 2.4",
    header="Continuous, Differentiable, Separable, Non-Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(0, 10),
    optima=[exact(0.0, pattern=ones)],
    cite="SCHWEFEL1981",
)
def schwefel_2_4(x):
    return osum((x - 1) ** 2 + (x[0] - x**2) ** 2)


@benchmark(
    121,
    "schwefel-2-6",
    "Schwefel 2.6",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-100, 100),
    optima=[exact(0.0, (1, 3))],
    cite="SCHWEFEL1981",
)
def schwefel_2_6(x):
    x1, x2 = x
    return max(np.abs(x1 + 2 * x2 - 7), np.abs(2 * x1 + x2 - 5))


@benchmark(
    122,
    "schwefel-2-20",
    "Schwefel 2.20",
    header="Continuous, Non-Differentiable, Separable, Scalable, Unimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-100, 100),
    optima=[exact(0.0, pattern=origin)],
    cite="SCHWEFEL1981",
)
def schwefel_2_20(x):
    return -osum(np.abs(x))


@benchmark(
    123,
    "schwefel-2-21",
    "Schwefel 2.21",
    header="Continuous, Non-Differentiable, Separable, Scalable, Unimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-100, 100),
    optima=[exact(0.0, pattern=origin)],
    cite="SCHWEFEL1981",
)
def schwefel_2_21(x):
    return np.max(np.abs(x))


@benchmark(
    124,
    "schwefel-2-22",
    "Schwefel 2.22",
    header="Continuous, Differentiable, Non-Separable, Scalable, Unimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-100, 100),
    optima=[exact(0.0, pattern=origin)],
    cite="SCHWEFEL1981",
)
def schwefel_2_22(x):
    ax = np.abs(x)
    return osum(ax) + oprod(ax)


@benchmark(
    125,
    "schwefel-2-23",
    "Schwefel 2.23",
    header="Continuous, Differentiable, Non-Separable, Scalable, Unimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[exact(0.0, pattern=origin)],
    cite="SCHWEFEL1981",
)
def schwefel_2_23(x):
    return osum(x**10)


@benchmark(
    126,
    "schwefel-2-23-duplicate",
    "Schwefel 2.23",
    header="Continuous, Differentiable, Non-Separable, Scalable, Unimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[exact(0.0, pattern=origin)],
    cite="SCHWEFEL1981",
    note="duplicate of f125",
)
def schwefel_2_23_duplicate(x):
    return osum(x**10)


@benchmark(
    127,
    "schwefel-2-25",
    "Schwefel 2.25",
    header="Continuous, Differentiable, Separable, Non-Scalable, Multimodal",
    dimension=Scalable(2, 2),
    bounds=Bounds.uniform(0, 10),
    optima=[exact(0.0, pattern=ones)],
    cite="SCHWEFEL1981",
)
def schwefel_2_25(x):
    rest = x[1:]
    return osum((rest - 1) ** 2 + (x[0] - rest**2) ** 2)


@benchmark(
    128,
    "schwefel-2-26",
    "Schwefel 2.26",
    header="Continuous, Differentiable, Separable, Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-500, 500),
    optima=[
        rounded(
            -418.983,
            pattern=filled((0.5 * PI) ** 2),
            family="x_i = ±[pi(0.5 + k)]^2",
            note="the k = 0 branch is audited",
        )
    ],
    cite="SCHWEFEL1981",
)
def schwefel_2_26(x):
    return -osum(x * np.sin(np.sqrt(np.abs(x)))) / x.size


@benchmark(
    129,
    "schwefel-2-36",
    "Schwefel 2.36",
    header="Continuous, Differentiable, Separable, Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(0, 500),
    optima=[exact(-3456.0, (12, 12))],
    cite="SCHWEFEL1981",
)
def schwefel_2_36(x):
    x1, x2 = x
    return -x1 * x2 * (72 - 2 * x1 - 2 * x2)


def _shekel(x, m):
    a, c = SHEKEL_A[:m], SHEKEL_C[:m]
    return -osum(1 / (((x[None, :] - a) ** 2).sum(axis=1) + c))


@benchmark(
    130,
    "shekel-5",
    "Shekel 5",
    header="Continuous, Differentiable, Non-Separable, Scalable, Multimodal",
    dimension=Fixed(4),
    bounds=Bounds.uniform(0, 10),
    optima=[approx(-10.1499, (4, 4, 4, 4))],
    cite="OPACIC1973",
)
def shekel_5(x):
    return _shekel(x, 5)


@benchmark(
    131,
    "shekel-7",
    "Shekel 7",
    header="Continuous, Differentiable, Non-Separable, Scalable, Multimodal",
    dimension=Fixed(4),
    bounds=Bounds.uniform(0, 10),
    optima=[approx(-10.3999, (4, 4, 4, 4))],
    cite="OPACIC1973",
)
def shekel_7(x):
    return _shekel(x, 7)


@benchmark(
    132,
    "shekel-10",
    "Shekel 10",
    header="Continuous, Differentiable, Non-Separable, Scalable, Multimodal",
    dimension=Fixed(4),
    bounds=Bounds.uniform(0, 10),
    optima=[approx(-10.5319, (4, 4, 4, 4))],
    cite="OPACIC1973",
)
def shekel_10(x):
    return _shekel(x, 10)


SHUBERT_POINTS = (
    (-7.0835, 4.8580),
    (-7.0835, -7.7083),
    (-1.4251, -7.0835),
    (5.4828, 4.8580),
    (-1.4251, -0.8003),
    (4.8580, 5.4828),
    (-7.7083, -7.0835),
    (-7.0835, -1.4251),
    (-7.7083, -0.8003),
    (-7.7083, 5.4828),
    (-0.8003, -7.7083),
    (-0.8003, -1.4251),
    (-0.8003, 4.8580),
    (-1.4251, 5.4828),
    (5.4828, -7.7083),
    (4.8580, -7.0835),
    (5.4828, -1.4251),
    (4.8580, -0.8003),
)


def _shubert_sums(x, weighted, trig):
    j = np.arange(1, 6, dtype=float)
    w = j if weighted else np.ones(5)
    return (w[None, :] * trig((j[None, :] + 1) * x[:, None] + j[None, :])).sum(axis=1)


@benchmark(
    133,
    "shubert",
    "Shubert",
    header="Continuous, Differentiable, Separable?, Non-Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[approx(-186.7309, *SHUBERT_POINTS, note="printed as f(x*) ≃ -186.7309")],
    cite="HENNART1982",
    note="separability printed as 'Separable?'; inner sum printed without the usual j weight",
)
def shubert(x):
    return oprod(_shubert_sums(x, False, np.cos))


@benchmark(
    134,
    "shubert-3",
    "Shubert 3",
    header="Continuous, Differentiable, Separable, Non-Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[value_only(-29.6733337, tolerance=5e-2, note="multiple solutions; none printed")],
    cite="ADORIO2005",
)
def shubert_3(x):
    return osum(_shubert_sums(x, True, np.sin))


@benchmark(
    135,
    "shubert-4",
    "Shubert 4",
    header="Continuous, Differentiable, Separable, Non-Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[value_only(-25.740858, tolerance=5e-2, note="multiple solutions; none printed")],
    cite="ADORIO2005",
)
def shubert_4(x):
    return osum(_shubert_sums(x, True, np.cos))


@benchmark(
    136,
    "schaffer-f6",
    "Schaffer F6",
    header="Continuous, Differentiable, Non-Separable, Scalable, Multimodal",
    dimension=Scalable(2, 2),
    bounds=Bounds.uniform(-100, 100),
    optima=[exact(0.0, pattern=origin)],
    cite="SCHAFFER1989",
    note="x_(i+1) is undefined for i = D; the sum runs over consecutive pairs",
)
def schaffer_f6(x):
    s = x[:-1] ** 2 + x[1:] ** 2
    return osum(0.5 + (np.sin(np.sqrt(s)) ** 2 - 0.5) / (1 + 0.001 * s) ** 2)
