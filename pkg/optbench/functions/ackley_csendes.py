"""Catalog entries f1-f40 (Ackley 1 through Csendes)."""

from functools import partial
from typing import List

import numpy as np

from optbench.functions.base import approx, define, exact, filled, origin, osum, rounded, value_only
from optbench.functions.constants import BRAD_Y, COLA_D, CORANA_D
from optbench.registry import Bounds, Fixed, FunctionSpec, OptimumStatus, Scalable

SPECS: List[FunctionSpec] = []
benchmark = partial(define, SPECS)

PI = np.pi


@benchmark(
    1,
    "ackley-1",
    "Ackley 1",
    header="Continuous, Differentiable, Non-separable, Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-35, 35),
    optima=[exact(0.0, pattern=origin)],
    cite="BAECK1993",
)
def ackley_1(x):
    d = x.size
    return -20.0 * np.exp(-0.02 * np.sqrt(osum(x**2) / d)) - np.exp(osum(np.cos(2 * PI * x)) / d) + 20.0 + np.e


@benchmark(
    2,
    "ackley-2",
    "Ackley 2",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-32, 32),
    optima=[exact(-200.0, (0, 0))],
    cite="ACKLEY1987",
)
def ackley_2(x):
    x1, x2 = x
    return -200.0 * np.exp(-0.02 * np.sqrt(x1**2 + x2**2))


@benchmark(
    3,
    "ackley-3",
    "Ackley 3",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-32, 32),
    optima=[approx(-219.1418, (0, -0.4), note="printed location (0, ≈ -0.4)")],
    cite="ACKLEY1987",
)
def ackley_3(x):
    x1, x2 = x
    return 200.0 * np.exp(-0.02 * np.sqrt(x1**2 + x2**2)) + 5.0 * np.exp(np.cos(3 * x1) + np.sin(3 * x2))


@benchmark(
    4,
    "ackley-4",
    "Ackley 4",
    header="Continuous, Differentiable, Non-Separable, Scalable, Multimodal",
    dimension=Scalable(2, 2),
    bounds=Bounds.uniform(-35, 35),
    optima=[rounded(-3.917275, (-1.479252, -0.739807), (1.479252, -0.739807))],
    note="also published as Modified Ackley; the sum runs over consecutive pairs i = 1..D-1",
)
def ackley_4(x):
    a, b = x[:-1], x[1:]
    return osum(np.exp(-0.2) * np.sqrt(a**2 + b**2) + 3.0 * (np.cos(2 * a) + np.sin(2 * b)))


@benchmark(
    5,
    "adjiman",
    "Adjiman",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.per_coordinate((-1, 2), (-1, 1)),
    optima=[rounded(-2.02181, (2, 0.10578))],
    cite="ADJIMAN1998",
)
def adjiman(x):
    x1, x2 = x
    return np.cos(x1) * np.sin(x2) - x1 / (x2**2 + 1)


@benchmark(
    6,
    "alpine-1",
    "Alpine 1",
    header="Continuous, Non-Differentiable, Separable, Non-Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[exact(0.0, pattern=origin)],
    cite="RAHNAMAYAN2007",
)
def alpine_1(x):
    return osum(np.abs(x * np.sin(x) + 0.1 * x))


@benchmark(
    7,
    "alpine-2",
    "Alpine 2",
    header="Continuous, Differentiable, Separable, Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(0, 10),
    optima=[rounded(2.808**2, pattern=filled(7.917), value_rule=lambda n: 2.808**n, note="printed value 2.808^D")],
    cite="CLERC1999",
)
def alpine_2(x):
    return np.prod(np.sqrt(x) * np.sin(x))


@benchmark(
    8,
    "brad",
    "Brad",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(3),
    bounds=Bounds.per_coordinate((-0.25, 0.25), (0.01, 2.5), (0.01, 2.5)),
    optima=[rounded(0.00821487, (0.0824, 1.133, 2.3437))],
    cite="BRAD1970",
)
def brad(x):
    x1, x2, x3 = x
    u = np.arange(1, 16, dtype=float)
    v = 16.0 - u
    w = np.minimum(u, v)
    return osum(((BRAD_Y - x1 - u) / (v * x2 + w * x3)) ** 2)


@benchmark(
    9,
    "bartels-conn",
    "Bartels Conn",
    header="Continuous, Non-differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-500, 500),
    optima=[exact(1.0, (0, 0))],
)
def bartels_conn(x):
    x1, x2 = x
    return np.abs(x1**2 + x2**2 + x1 * x2) + np.abs(np.sin(x1)) + np.abs(np.cos(x2))


@benchmark(
    10,
    "beale",
    "Beale",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-4.5, 4.5),
    optima=[exact(0.0, (3, 0.5))],
)
def beale(x):
    x1, x2 = x
    return (1.5 - x1 + x1 * x2) ** 2 + (2.25 - x1 + x1 * x2**2) ** 2 + (2.625 - x1 + x1 * x2**3) ** 2


def _biggs_t(m: int) -> np.ndarray:
    return 0.1 * np.arange(1, m + 1, dtype=float)


def _biggs_y(t: np.ndarray, with_third: bool = False) -> np.ndarray:
    # printed as e^{-t} - 5 e^{10 t}, with a positive exponent on the second term
    y = np.exp(-t) - 5.0 * np.exp(10.0 * t)
    if with_third:
        y = y + 3.0 * np.exp(-4.0 * t)
    return y


BIGGS_NOTE = "data term printed as e^(-t) - 5e^(10t); the claimed optimum fits e^(-10t)"


@benchmark(
    11,
    "biggs-exp2",
    "Biggs EXP2",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(0, 20),
    optima=[exact(0.0, (1, 10))],
    cite="BIGGS1971",
    note=BIGGS_NOTE,
)
def biggs_exp2(x):
    x1, x2 = x
    t = _biggs_t(10)
    return osum((np.exp(-t * x1) - 5.0 * np.exp(-t * x2) - _biggs_y(t)) ** 2)


@benchmark(
    12,
    "biggs-exp3",
    "Biggs EXP3",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(3),
    bounds=Bounds.uniform(0, 20),
    optima=[exact(0.0, (1, 10, 5))],
    cite="BIGGS1971",
    note=BIGGS_NOTE,
)
def biggs_exp3(x):
    x1, x2, x3 = x
    t = _biggs_t(10)
    return osum((np.exp(-t * x1) - x3 * np.exp(-t * x2) - _biggs_y(t)) ** 2)


@benchmark(
    13,
    "biggs-exp4",
    "Biggs EXP4",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(4),
    bounds=Bounds.uniform(0, 20),
    optima=[exact(0.0, (1, 10, 1, 5))],
    cite="BIGGS1971",
    note=BIGGS_NOTE,
)
def biggs_exp4(x):
    x1, x2, x3, x4 = x
    t = _biggs_t(10)
    return osum((x3 * np.exp(-t * x1) - x4 * np.exp(-t * x2) - _biggs_y(t)) ** 2)


@benchmark(
    14,
    "biggs-exp5",
    "Biggs EXP5",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(5),
    bounds=Bounds.uniform(0, 20),
    optima=[exact(0.0, (1, 10, 1, 5, 4))],
    cite="BIGGS1971",
    note=BIGGS_NOTE,
)
def biggs_exp5(x):
    x1, x2, x3, x4, x5 = x
    t = _biggs_t(11)
    return osum((x3 * np.exp(-t * x1) - x4 * np.exp(-t * x2) + 3.0 * np.exp(-t * x5) - _biggs_y(t, True)) ** 2)


@benchmark(
    15,
    "biggs-exp6",
    "Biggs EXP6",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(6),
    bounds=Bounds.uniform(-20, 20),
    optima=[exact(0.0, (1, 10, 1, 5, 4, 3))],
    cite="BIGGS1971",
    note="printed under the title Biggs EXP5 (duplicate of f14's title); 6 variables, 13 terms. " + BIGGS_NOTE,
)
def biggs_exp6(x):
    x1, x2, x3, x4, x5, x6 = x
    t = _biggs_t(13)
    return osum((x3 * np.exp(-t * x1) - x4 * np.exp(-t * x2) + x6 * np.exp(-t * x5) - _biggs_y(t, True)) ** 2)


@benchmark(
    16,
    "bird",
    "Bird",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-2 * PI, 2 * PI),
    optima=[rounded(-106.764537, (4.70104, 3.15294), (-1.58214, -3.13024))],
    cite="MISHRA2006_6",
)
def bird(x):
    x1, x2 = x
    return np.sin(x1) * np.exp((1 - np.cos(x2)) ** 2) + np.cos(x2) * np.exp((1 - np.sin(x1)) ** 2) + (x1 - x2) ** 2


@benchmark(
    17,
    "bohachevsky-1",
    "Bohachevsky 1",
    header="Continuous, Differentiable, Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-100, 100),
    optima=[exact(0.0, (0, 0))],
    cite="BOHACHEVSKY1986",
)
def bohachevsky_1(x):
    x1, x2 = x
    return x1**2 + 2 * x2**2 - 0.3 * np.cos(3 * PI * x1) - 0.4 * np.cos(4 * PI * x2) + 0.7


@benchmark(
    18,
    "bohachevsky-2",
    "Bohachevsky 2",
    header="Continuous, Differentiable, Non-separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-100, 100),
    optima=[exact(0.0, (0, 0))],
    cite="BOHACHEVSKY1986",
)
def bohachevsky_2(x):
    x1, x2 = x
    return x1**2 + 2 * x2**2 - 0.3 * np.cos(3 * PI * x1) * 0.4 * np.cos(4 * PI * x2) + 0.3


@benchmark(
    19,
    "bohachevsky-3",
    "Bohachevsky 3",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-100, 100),
    optima=[exact(0.0, (0, 0))],
    cite="BOHACHEVSKY1986",
)
def bohachevsky_3(x):
    x1, x2 = x
    return x1**2 + 2 * x2**2 - 0.3 * np.cos(3 * PI * x1 + 4 * PI * x2) + 0.3


@benchmark(
    20,
    "booth",
    "Booth",
    header="Continuous, Differentiable, Non-separable, Non-Scalable, Unimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[exact(0.0, (1, 3))],
)
def booth(x):
    x1, x2 = x
    return (x1 + 2 * x2 - 7) ** 2 + (2 * x1 + x2 - 5) ** 2


@benchmark(
    21,
    "box-betts",
    "Box-Betts Quadratic Sum",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(3),
    bounds=Bounds.per_coordinate((0.9, 1.2), (9, 11.2), (0.9, 1.2)),
    optima=[exact(0.0, (1, 10, 1))],
    cite="ALI2005",
    note="third box printed for x2 a second time, read as 0.9 <= x3 <= 1.2; one term per coordinate",
)
def box_betts(x):
    x1, x2, x3 = x
    k = np.arange(1, x.size + 1, dtype=float)
    g = np.exp(-0.1 * k * x1) - np.exp(-0.1 * k * x2) - np.exp((-0.1 * k - np.exp(-k)) * x3)
    return osum(g**2)


def _branin_quadratic(x1, x2):
    return (x2 - 5.1 * x1**2 / (4 * PI**2) + 5 * x1 / PI - 6) ** 2


@benchmark(
    22,
    "branin-rcos",
    "Branin RCOS",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.per_coordinate((-5, 10), (0, 15)),
    optima=[
        rounded(0.3978873, (-PI, 12.275), (PI, 2.275)),
        rounded(0.3978873, (3 * PI, 2.475), status=OptimumStatus.corrected, note="third minimum printed as (3pi, 2.425)"),
    ],
    cite="BRANIN1972",
    note="second box printed for x1, read as 0 <= x2 <= 15",
)
def branin_rcos(x):
    x1, x2 = x
    return _branin_quadratic(x1, x2) + 10 * (1 - 1 / (8 * PI)) * np.cos(x1) + 10


@benchmark(
    23,
    "branin-rcos-2",
    "Branin RCOS 2",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-5, 15),
    optima=[rounded(5.559037, (-3.2, 12.53))],
    cite="MUNTEANU1998",
)
def branin_rcos_2(x):
    x1, x2 = x
    return _branin_quadratic(x1, x2) + 10 * (1 - 1 / (8 * PI)) * np.cos(x1) * np.cos(x2) * np.log(x1**2 + x2**2 + 1) + 10


@benchmark(
    24,
    "brent",
    "Brent",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[exact(0.0, (0, 0))],
    cite="BRANIN1972",
)
def brent(x):
    x1, x2 = x
    return (x1 + 10) ** 2 + (x2 + 10) ** 2 + np.exp(-(x1**2) - x2**2)


@benchmark(
    25,
    "brown",
    "Brown",
    header="Continuous, Differentiable, Non-Separable, Scalable, Unimodal",
    dimension=Scalable(2, 2),
    bounds=Bounds.uniform(-1, 4),
    optima=[exact(0.0, pattern=origin)],
    cite="BEGAMBRE2009",
)
def brown(x):
    a, b = x[:-1] ** 2, x[1:] ** 2
    return osum(a ** (b + 1) + b ** (a + 1))


BUKIN_BOX = Bounds.per_coordinate((-15, -5), (-3, 3))
BUKIN_NOTE = "x2 box printed as -3 <= x2 <= -3, read as -3 <= x2 <= 3"


@benchmark(
    26,
    "bukin-2",
    "Bukin 2",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=BUKIN_BOX,
    optima=[exact(0.0, (-10, 0))],
    note=BUKIN_NOTE,
)
def bukin_2(x):
    x1, x2 = x
    return 100 * (x2 - 0.01 * x1**2 + 1) + 0.01 * (x1 + 10) ** 2


@benchmark(
    27,
    "bukin-4",
    "Bukin 4",
    header="Continuous, Non-Differentiable, Separable, Non-scalable, Multimodal",
    dimension=Fixed(2),
    bounds=BUKIN_BOX,
    optima=[exact(0.0, (-10, 0))],
    note=BUKIN_NOTE,
)
def bukin_4(x):
    x1, x2 = x
    return 100 * x2**2 + 0.01 * np.abs(x1 + 10)


@benchmark(
    28,
    "bukin-6",
    "Bukin 6",
    header="Continuous, Non-Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=BUKIN_BOX,
    optima=[exact(0.0, (-10, 1))],
    note=BUKIN_NOTE,
)
def bukin_6(x):
    x1, x2 = x
    return 100 * np.sqrt(np.abs(x2 - 0.01 * x1**2)) + 0.01 * np.abs(x1 + 10)


@benchmark(
    29,
    "three-hump-camel",
    "Camel Three Hump",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-5, 5),
    optima=[exact(0.0, (0, 0))],
    cite="BRANIN1972",
)
def three_hump_camel(x):
    x1, x2 = x
    return 2 * x1**2 - 1.05 * x1**4 + x1**6 / 6 + x1 * x2 + x2**2


@benchmark(
    30,
    "six-hump-camel",
    "Camel Six Hump",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-5, 5),
    optima=[rounded(-1.0316, (-0.0898, 0.7126), (0.0898, -0.7126), note="second point printed with a stray third coordinate 0")],
    cite="BRANIN1972",
)
def six_hump_camel(x):
    x1, x2 = x
    return (4 - 2.1 * x1**2 + x1**4 / 3) * x1**2 + x1 * x2 + (4 * x2**2 - 4) * x2**2


CHEN_NOTE = "floor brackets around the denominators read as parentheses"


def _chen_term(q):
    return 0.001 / (0.001**2 + q**2)


@benchmark(
    31,
    "chen-bird",
    "Chen Bird",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-500, 500),
    optima=[exact(-2000.0, (7 / 18, 13 / 18), status=OptimumStatus.corrected, note="printed location (-7/18, -13/18); both denominators vanish at (7/18, 13/18)")],
    cite="CHEN2003",
    note=CHEN_NOTE,
)
def chen_bird(x):
    x1, x2 = x
    return -_chen_term(x1 - 0.4 * x2 - 0.1) - _chen_term(2 * x1 + x2 - 1.5)


@benchmark(
    32,
    "chen-v",
    "Chen V",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-500, 500),
    optima=[exact(-2000.0, (-0.3888889, 0.7222222), note="first coordinate printed as -\\-0.3888889")],
    cite="CHEN2003",
    note=CHEN_NOTE,
)
def chen_v(x):
    x1, x2 = x
    s = x1**2 + x2**2
    return -_chen_term(s - 1) - _chen_term(s - 0.5) - _chen_term(x1**2 - x2**2)


@benchmark(
    33,
    "chichinadze",
    "Chichinadze",
    header="Continuous, Differentiable, Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-30, 30),
    optima=[rounded(-43.3159, (5.90133, 0.5))],
)
def chichinadze(x):
    x1, x2 = x
    return (
        x1**2
        - 12 * x1
        + 11
        + 10 * np.cos(PI * x1 / 2)
        + 8 * np.sin(5 * PI * x1 / 2)
        - (1 / 5) ** 0.5 * np.exp(-0.5 * (x2 - 0.5) ** 2)
    )


@benchmark(
    34,
    "chung-reynolds",
    "Chung Reynolds",
    header="Continuous, Differentiable, Partially-Separable, Scalable, Unimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-100, 100),
    optima=[exact(0.0, pattern=origin)],
    cite="CHUNG1998",
)
def chung_reynolds(x):
    return osum(x**2) ** 2


@benchmark(
    35,
    "cola",
    "Cola",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(17),
    bounds=Bounds.per_coordinate((0, 4), *[(-4, 4)] * 16),
    optima=[value_only(11.7464, tolerance=5e-4)],
    cite="ADORIO2005",
    note="point 0 fixed at the origin, point 1 on the x-axis at u0, points 2..9 at (u[2k-3], u[2k-2]); "
    "the printed index mapping is ambiguous about which variables are free",
)
def cola(u):
    xs = np.zeros(10)
    ys = np.zeros(10)
    xs[1] = u[0]
    xs[2:] = u[1::2]
    ys[2:] = u[2::2]
    total = 0.0
    for i in range(1, 10):
        r = np.sqrt((xs[i] - xs[:i]) ** 2 + (ys[i] - ys[:i]) ** 2)
        total = total + osum((r - COLA_D[i, :i]) ** 2)
    return total


@benchmark(
    36,
    "colville",
    "Colville",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(4),
    bounds=Bounds.uniform(-10, 10),
    optima=[exact(0.0, (1, 1, 1, 1))],
)
def colville(x):
    x1, x2, x3, x4 = x
    return (
        100 * (x1 - x2**2) ** 2
        + (1 - x1) ** 2
        + 90 * (x4 - x3**2) ** 2
        + (1 - x3) ** 2
        + 10.1 * ((x2 - 1) ** 2 + (x4 - 1) ** 2)
        + 19.8 * (x2 - 1) * (x4 - 1)
    )


@benchmark(
    37,
    "corana",
    "Corana",
    header="Discontinuous, Non-Differentiable, Separable, Scalable, Multimodal",
    dimension=Fixed(4),
    bounds=Bounds.uniform(-500, 500),
    optima=[
        exact(0.0, (0, 0, 0, 0), status=OptimumStatus.corrected, note="printed sgn(z_i)^2 read as (z_i - 0.05 sgn z_i)^2; printed value 0")
    ],
    cite="CORANA1987",
    note="printed 0.15(z_i - 0.05 sgn(z_i)^2) d_i read as 0.15 (z_i - 0.05 sgn z_i)^2 d_i, summed over i",
)
def corana(x):
    z = 0.2 * np.floor(np.abs(x / 0.2) + 0.49999) * np.sign(x)
    v = np.abs(x - z)
    d = CORANA_D[: x.size]
    return osum(np.where(v < 0.05, 0.15 * (z - 0.05 * np.sign(z)) ** 2 * d, d * x**2))


@benchmark(
    38,
    "cosine-mixture",
    "Cosine Mixture",
    header="Discontinuous, Non-Differentiable, Separable, Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-1, 1),
    optima=[exact(0.2, pattern=origin, value_rule=lambda n: 0.1 * n, note="printed value 0.2 or 0.4 for n = 2 and 4")],
    cite="ALI2005",
)
def cosine_mixture(x):
    return -0.1 * osum(np.cos(5 * PI * x)) - osum(x**2)


@benchmark(
    39,
    "cross-in-tray",
    "Cross-in-Tray",
    header="Continuous, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[
        rounded(
            -2.06261218,
            (1.349406685353340, 1.349406608602084),
            (1.349406685353340, -1.349406608602084),
            (-1.349406685353340, 1.349406608602084),
            (-1.349406685353340, -1.349406608602084),
        )
    ],
    cite="MISHRA2006_6",
)
def cross_in_tray(x):
    x1, x2 = x
    return -0.0001 * (np.abs(np.sin(x1) * np.sin(x2) * np.exp(np.abs(100 - np.sqrt(x1**2 + x2**2) / PI))) + 1) ** 0.1


@benchmark(
    40,
    "csendes",
    "Csendes",
    header="Continuous, Differentiable, Separable, Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-1, 1),
    optima=[exact(0.0, pattern=origin)],
    cite="CSENDES1997",
    note="terms with x_i = 0 take their limit 0",
)
def csendes(x):
    safe = np.where(x == 0, 1.0, x)
    return osum(np.where(x == 0, 0.0, x**6 * (2 + np.sin(1 / safe))))
