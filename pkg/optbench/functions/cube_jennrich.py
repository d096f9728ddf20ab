"""Catalog entries f41-f67 (Cube through Jennrich-Sampson)."""

from functools import partial
from typing import List

import numpy as np

from optbench.functions.base import approx, define, exact, filled, origin, osum, oprod, rounded, value_only
from optbench.functions.constants import HARTMAN3_A, HARTMAN3_C, HARTMAN3_P, HARTMAN6_A, HARTMAN6_C, HARTMAN6_P
from optbench.registry import Bounds, Fixed, FunctionSpec, OptimumStatus, Scalable

SPECS: List[FunctionSpec] = []
benchmark = partial(define, SPECS)

PI = np.pi


@benchmark(
    41,
    "cube",
    "Cube",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[exact(0.0, (-1, 1))],
    cite="LAVI1966",
)
def cube(x):
    x1, x2 = x
    return 100 * (x2 - x1**3) ** 2 + (1 - x1) ** 2


@benchmark(
    42,
    "damavandi",
    "Damavandi",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(0, 14),
    optima=[exact(0.0, (2, 2))],
    cite="DAMAVANDI2005",
    note="the sin(pi t)/(pi t) ratio takes its limit 1 at x_i = 2",
)
def damavandi(x):
    x1, x2 = x
    ratio = np.sinc(x1 - 2) * np.sinc(x2 - 2)
    return (1 - np.abs(ratio) ** 5) * (2 + (x1 - 7) ** 2 + 2 * (x2 - 7) ** 2)


DEB_NOTE = "5^D minima printed without a value; sampled on the diagonal, value -1 from the formula"


@benchmark(
    43,
    "deb-1",
    "Deb 1",
    header="Continuous, Differentiable, Separable, Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-1, 1),
    optima=[exact(-1.0, pattern=filled(0.1, 0.3, 0.5, 0.7, 0.9), family="5^D evenly spaced minima", note=DEB_NOTE)],
)
def deb_1(x):
    return -osum(np.sin(5 * PI * x) ** 6) / x.size


@benchmark(
    44,
    "deb-3",
    "Deb 3",
    header="Continuous, Differentiable, Separable, Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-1, 1),
    optima=[
        exact(
            -1.0,
            pattern=filled(*(v ** (4 / 3) for v in (0.15, 0.35, 0.55, 0.75, 0.95))),
            family="5^D unevenly spaced minima",
            note=DEB_NOTE,
        )
    ],
    note="x_i^(3/4) has no real value for x_i < 0; evaluation there is a domain error",
)
def deb_3(x):
    return -osum(np.sin(5 * PI * (x**0.75 - 0.05)) ** 6) / x.size


@benchmark(
    45,
    "deckkers-aarts",
    "Deckkers-Aarts",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-20, 20),
    optima=[exact(-24777.0, (0, 15), (0, -15))],
    cite="ALI2005",
)
def deckkers_aarts(x):
    x1, x2 = x
    r2 = x1**2 + x2**2
    return 1e5 * x1**2 + x2**2 - r2**2 + 1e-5 * r2**4


@benchmark(
    46,
    "devilliers-glasser-1",
    "deVilliers Glasser 1",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(4),
    bounds=Bounds.uniform(-500, 500),
    optima=[value_only(0.0)],
    cite="deVILLERS1981",
)
def devilliers_glasser_1(x):
    x1, x2, x3, x4 = x
    t = 0.1 * np.arange(24, dtype=float)
    y = 60.137 * 1.371**t * np.sin(3.112 * t + 1.761)
    return osum((x1 * x2**t * np.sin(x3 * t + x4) - y) ** 2)


@benchmark(
    47,
    "devilliers-glasser-2",
    "deVilliers Glasser 2",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(5),
    bounds=Bounds.uniform(-500, 500),
    optima=[value_only(0.0)],
    cite="deVILLERS1981",
)
def devilliers_glasser_2(x):
    x1, x2, x3, x4, x5 = x
    t = 0.1 * np.arange(16, dtype=float)
    y = 53.81 * 1.27**t * np.tanh(3.012 * t + np.sin(2.13 * t)) * np.cos(np.exp(0.507) * t)
    return osum((x1 * x2**t * np.tanh(x3 * t + np.sin(x4 * t)) * np.cos(t * np.exp(x5)) - y) ** 2)


def _dixon_price_points(n: int):
    i = np.arange(1, n + 1, dtype=float)
    # printed exponent (2^i - 2) / 2^i, without the leading minus of the usual statement
    return [tuple(2.0 ** ((2.0**i - 2) / 2.0**i))]


@benchmark(
    48,
    "dixon-price",
    "Dixon & Price",
    header="Continuous, Differentiable, Non-Separable, Scalable, Unimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[exact(0.0, pattern=_dixon_price_points, note="printed location x_i = 2^((2^i - 2) / 2^i)")],
    cite="DIXON1989",
)
def dixon_price(x):
    i = np.arange(2, x.size + 1, dtype=float)
    return (x[0] - 1) ** 2 + osum(i * (2 * x[1:] ** 2 - x[:-1]) ** 2)


@benchmark(
    49,
    "dolan",
    "Dolan",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(5),
    bounds=Bounds.uniform(-100, 100),
    optima=[value_only(0.0)],
)
def dolan(x):
    x1, x2, x3, x4, x5 = x
    return (x1 + 1.7 * x2) * np.sin(x1) - 1.5 * x3 - 0.1 * x4 * np.cos(x4 + x5 - x1) + 0.2 * x5**2 - x2 - 1


@benchmark(
    50,
    "easom",
    "Easom",
    header="Continuous, Differentiable, Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-100, 100),
    optima=[exact(-1.0, (PI, PI))],
    cite="CHUNG1998",
)
def easom(x):
    x1, x2 = x
    return -np.cos(x1) * np.cos(x2) * np.exp(-((x1 - PI) ** 2) - (x2 - PI) ** 2)


@benchmark(
    51,
    "el-attar-vidyasagar-dutta",
    "El-Attar-Vidyasagar-Dutta",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-500, 500),
    optima=[rounded(0.470427, (2.842503, 1.920175))],
    cite="EL-ATTAR1979",
)
def el_attar_vidyasagar_dutta(x):
    x1, x2 = x
    return (x1**2 + x2 - 10) ** 2 + (x1 + x2**2 - 7) ** 2 + (x1**2 + x2**3 - 1) ** 2


@benchmark(
    52,
    "egg-crate",
    "Egg Crate",
    header="Continuous, Separable, Non-Scalable",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-5, 5),
    optima=[exact(0.0, (0, 0))],
)
def egg_crate(x):
    x1, x2 = x
    return x1**2 + x2**2 + 25 * (np.sin(x1) ** 2 + np.sin(x2) ** 2)


@benchmark(
    53,
    "egg-holder",
    "Egg Holder",
    header="Continuous, Differentiable, Non-Separable, Scalable, Multimodal",
    dimension=Scalable(2, 2),
    bounds=Bounds.uniform(-512, 512),
    optima=[approx(959.64, (512, 404.2319), note="printed as f(x*) ≈ 959.64")],
)
def egg_holder(x):
    a, b = x[:-1], x[1:]
    return osum(-(b + 47) * np.sin(np.sqrt(np.abs(b + a / 2 + 47))) - a * np.sin(np.sqrt(np.abs(a - (b + 47)))))


@benchmark(
    54,
    "exponential",
    "Exponential",
    header="Continuous, Differentiable, Non-Separable, Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-1, 1),
    optima=[exact(1.0, pattern=origin, note="printed value 1; the formula gives -1 at the origin")],
    cite="RAHNAMAYAN2007_1",
)
def exponential(x):
    return -np.exp(-0.5 * osum(x**2))


@benchmark(
    55,
    "exp-2",
    "Exp 2",
    header="Separable",
    dimension=Fixed(2),
    bounds=Bounds.uniform(0, 20),
    optima=[exact(0.0, (1, 10))],
    cite="ADORIO2005",
)
def exp_2(x):
    x1, x2 = x
    i = np.arange(10, dtype=float)
    return osum((np.exp(-i * x1 / 10) - 5 * np.exp(-i * x2 / 10) - np.exp(-i / 10) + 5 * np.exp(-i)) ** 2)


@benchmark(
    56,
    "freudenstein-roth",
    "Freudenstein Roth",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[exact(0.0, (5, 4))],
    cite="RAO2009",
)
def freudenstein_roth(x):
    x1, x2 = x
    return (x1 - 13 + ((5 - x2) * x2 - 2) * x2) ** 2 + (x1 - 29 + ((x2 + 1) * x2 - 14) * x2) ** 2


@benchmark(
    57,
    "giunta",
    "Giunta",
    header="Continuous, Differentiable, Separable, Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-1, 1),
    optima=[rounded(0.06447, (0.45834282, 0.45834282), status=OptimumStatus.corrected, note="value printed as 0.060447")],
    cite="MISHRA2006_6",
    note="the sum runs over i = 1, 2 only",
)
def giunta(x):
    u = 16 / 15 * x - 1
    return 0.6 + osum(np.sin(u) + np.sin(u) ** 2 + np.sin(4 * u) / 50)


@benchmark(
    58,
    "goldstein-price",
    "Goldstein Price",
    header="Continuous, Differentiable, Non-separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-2, 2),
    optima=[exact(3.0, (0, -1))],
    cite="GOLDSTEIN1971",
)
def goldstein_price(x):
    x1, x2 = x
    a = 1 + (x1 + x2 + 1) ** 2 * (19 - 14 * x1 + 3 * x1**2 - 14 * x2 + 6 * x1 * x2 + 3 * x2**2)
    b = 30 + (2 * x1 - 3 * x2) ** 2 * (18 - 32 * x1 + 12 * x1**2 + 48 * x2 - 36 * x1 * x2 + 27 * x2**2)
    return a * b


@benchmark(
    59,
    "griewank",
    "Griewank",
    header="Continuous, Differentiable, Non-Separable, Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-100, 100),
    optima=[exact(0.0, pattern=origin)],
    cite="GRIEWANK1981",
)
def griewank(x):
    i = np.arange(1, x.size + 1, dtype=float)
    return osum(x**2 / 4000) - oprod(np.cos(x / np.sqrt(i))) + 1


@benchmark(
    60,
    "gulf-research",
    "Gulf Research Problem",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(3),
    bounds=Bounds.per_coordinate((0.1, 100), (0, 25.6), (0, 5)),
    optima=[exact(0.0, (50, 25, 1.5))],
    cite="SHANNO1970",
    note="denominator x_i read as x1 and (u_i - x2) as |u_i - x2|; third box printed for x1, read as 0 <= x3 <= 5",
)
def gulf_research(x):
    x1, x2, x3 = x
    i = np.arange(1, 100, dtype=float)
    u = 25 + (-50 * np.log(0.01 * i)) ** (1 / 1.5)
    return osum((np.exp(-np.abs(u - x2) ** x3 / x1) - 0.01 * i) ** 2)


@benchmark(
    61,
    "hansen",
    "Hansen",
    header="Continuous, Differentiable, Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[
        rounded(
            -176.541793,
            (-7.589893, -7.708314),
            (-7.589893, -1.425128),
            (-7.589893, 4.858057),
            (-1.306708, -7.708314),
            (-1.306708, 4.858057),
            (4.976478, 4.858057),
            (4.976478, -1.425128),
            (4.976478, -7.708314),
            note="value not printed; -176.541793 from the cited source",
        )
    ],
    cite="FRALEY1989",
    note="both sums start at index 0; the two sums multiply",
)
def hansen(x):
    x1, x2 = x
    i = np.arange(5, dtype=float)
    return osum((i + 1) * np.cos(i * x1 + i + 1)) * osum((i + 1) * np.cos((i + 2) * x2 + i + 1))


def _hartman(x, a, c, p):
    inner = (a * (x[None, :] - p) ** 2).sum(axis=1)
    return -osum(c * np.exp(-inner))


@benchmark(
    62,
    "hartman-3",
    "Hartman 3",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(3),
    bounds=Bounds.uniform(0, 1),
    optima=[approx(-3.862782, (0.1140, 0.556, 0.852))],
    cite="HARTMAN1972",
)
def hartman_3(x):
    return _hartman(x, HARTMAN3_A, HARTMAN3_C, HARTMAN3_P)


@benchmark(
    63,
    "hartman-6",
    "Hartman 6",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(6),
    bounds=Bounds.uniform(0, 1),
    optima=[approx(-3.32236, (0.201690, 0.150011, 0.476874, 0.275332, 0.311652, 0.657301))],
    cite="HARTMAN1972",
    note="p_16 transcribed as printed (0.5586)",
)
def hartman_6(x):
    return _hartman(x, HARTMAN6_A, HARTMAN6_C, HARTMAN6_P)


@benchmark(
    64,
    "helical-valley",
    "Helical Valley",
    header="Continuous, Differentiable, Non-Separable, Scalable, Multimodal",
    dimension=Fixed(3),
    bounds=Bounds.uniform(-10, 10),
    optima=[exact(0.0, (1, 0, 0), status=OptimumStatus.corrected, note="printed value 0 for the printed theta and bracket")],
    cite="FLETCHER1963",
    note="canonical form 100[(x3 - 10 theta)^2 + (r - 1)^2] + x3^2 with the atan2 branch theta; "
    "printed tan^-1(x1/x2) and '+0.5' placement are typos",
)
def helical_valley(x):
    x1, x2, x3 = x
    theta = np.arctan2(x2, x1) / (2 * PI)
    if theta < -0.25:
        theta = theta + 1.0
    return 100 * ((x3 - 10 * theta) ** 2 + (np.sqrt(x1**2 + x2**2) - 1) ** 2) + x3**2


@benchmark(
    65,
    "himmelblau",
    "Himmelblau",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-5, 5),
    optima=[exact(0.0, (3, 2))],
    cite="HIMMELBLAU1972",
)
def himmelblau(x):
    x1, x2 = x
    return (x1**2 + x2 - 11) ** 2 + (x1 + x2**2 - 7) ** 2


@benchmark(
    66,
    "hosaki",
    "Hosaki",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.per_coordinate((0, 5), (0, 6)),
    optima=[approx(-2.3458, (4, 2))],
    cite="BEKEY1974",
)
def hosaki(x):
    x1, x2 = x
    return (1 - 8 * x1 + 7 * x1**2 - 7 / 3 * x1**3 + x1**4 / 4) * x2**2 * np.exp(-x2)


@benchmark(
    67,
    "jennrich-sampson",
    "Jennrich-Sampson",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-1, 1),
    optima=[rounded(124.3612, (0.257825, 0.257825))],
    cite="JENNRICH1968",
)
def jennrich_sampson(x):
    x1, x2 = x
    i = np.arange(1, 11, dtype=float)
    return osum((2 + 2 * i - (np.exp(i * x1) + np.exp(i * x2))) ** 2)
