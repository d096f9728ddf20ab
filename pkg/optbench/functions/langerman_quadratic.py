"""Catalog entries f68-f99 (Langerman-5 through Quadratic)."""

import math
from functools import partial
from typing import List

import numpy as np

from optbench.exceptions import DomainError
from optbench.functions.base import (
    approx,
    define,
    exact,
    filled,
    origin,
    oprod,
    osum,
    rounded,
    sign_combinations,
    value_only,
)
from optbench.functions.constants import LANGERMAN_A, LANGERMAN_C
from optbench.registry import Bounds, Fixed, FunctionSpec, Scalable

SPECS: List[FunctionSpec] = []
benchmark = partial(define, SPECS)

PI = np.pi

MISHRA_BOX = Bounds.uniform(-10, 10)
MISHRA_BOX_NOTE = "no box printed; the Mishra family box [-10, 10]^2 is used"


@benchmark(
    68,
    "langerman-5",
    "Langerman-5",
    header="Continuous, Differentiable, Non-Separable, Scalable, Multimodal",
    dimension=Scalable(2, 1, 10),
    bounds=Bounds.uniform(0, 10),
    optima=[value_only(-1.4, tolerance=5e-4)],
    cite="BERSINI1996",
    note="the constant table has 10 columns, so D <= 10",
)
def langerman_5(x):
    sq = ((x[None, :] - LANGERMAN_A[:, : x.size]) ** 2).sum(axis=1)
    return -osum(LANGERMAN_C * np.exp(-sq / PI) * np.cos(PI * sq))


@benchmark(
    69,
    "keane",
    "Keane",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(0, 10),
    optima=[rounded(-0.673668, (0, 1.39325), (1.39325, 0))],
)
def keane(x):
    x1, x2 = x
    return np.sin(x1 - x2) ** 2 * np.sin(x1 + x2) ** 2 / np.sqrt(x1**2 + x2**2)


@benchmark(
    70,
    "leon",
    "Leon",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-1.2, 1.2),
    optima=[exact(0.0, (1, 1))],
    cite="LAVI1966",
)
def leon(x):
    x1, x2 = x
    return 100 * (x2 - x1**2) ** 2 + (1 - x1) ** 2


@benchmark(
    71,
    "matyas",
    "Matyas",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[exact(0.0, (0, 0))],
    cite="HEDAR",
)
def matyas(x):
    x1, x2 = x
    return 0.26 * (x1**2 + x2**2) - 0.48 * x1 * x2


@benchmark(
    72,
    "mccormick",
    "McCormick",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.per_coordinate((-1.5, 4), (-3, 3)),
    optima=[approx(-1.9133, (-0.547, -1.547))],
    cite="LOOTSMA1972",
)
def mccormick(x):
    x1, x2 = x
    return np.sin(x1 + x2) + (x1 - x2) ** 2 - 1.5 * x1 + 2.5 * x2 + 1


@benchmark(
    73,
    "miele-cantrell",
    "Miele Cantrell",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(4),
    bounds=Bounds.uniform(-1, 1),
    optima=[exact(0.0, (0, 1, 1, 1))],
    cite="CRAGG1969",
)
def miele_cantrell(x):
    x1, x2, x3, x4 = x
    return (np.exp(-x1) - x2) ** 4 + 100 * (x2 - x3) ** 6 + np.tan(x3 - x4) ** 4 + x1**8


@benchmark(
    74,
    "mishra-1",
    "Mishra 1",
    header="Continuous, Differentiable, Non-Separable, Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(0, 1),
    optima=[value_only(2.0)],
    cite="MISHRA2006_1",
)
def mishra_1(x):
    g = x.size - osum(x[:-1])
    return (1 + g) ** g


@benchmark(
    75,
    "mishra-2",
    "Mishra 2",
    header="Continuous, Differentiable, Non-Separable, Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(0, 1),
    optima=[value_only(2.0)],
    cite="MISHRA2006_1",
)
def mishra_2(x):
    g = x.size - osum(0.5 * (x[:-1] + x[1:]))
    return (1 + g) ** g


@benchmark(
    76,
    "mishra-3",
    "Mishra 3",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=MISHRA_BOX,
    optima=[rounded(-0.18467, (-8.466, -10))],
    cite="MISHRA2006_6",
    note=MISHRA_BOX_NOTE,
)
def mishra_3(x):
    x1, x2 = x
    return np.sqrt(np.abs(np.cos(np.sqrt(np.abs(x1**2 + x2**2))))) + 0.01 * (x1 + x2)


@benchmark(
    77,
    "mishra-4",
    "Mishra 4",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=MISHRA_BOX,
    optima=[rounded(-0.199409, (-9.94112, -10))],
    cite="MISHRA2006_6",
    note=MISHRA_BOX_NOTE,
)
def mishra_4(x):
    x1, x2 = x
    return np.sqrt(np.abs(np.sin(np.sqrt(np.abs(x1**2 + x2**2))))) + 0.01 * (x1 + x2)


def _mishra_core(x1, x2, sign):
    # printed sin^2(cos((x1) + cos(x2)))^2 read as sin^2((cos x1 + cos x2)^2)
    return np.sin((np.cos(x1) + np.cos(x2)) ** 2) ** 2 + sign * np.cos(np.sin(x1) + np.sin(x2)) ** 2 + x1


@benchmark(
    78,
    "mishra-5",
    "Mishra 5",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=MISHRA_BOX,
    optima=[rounded(-1.01983, (-1.98682, -10))],
    cite="MISHRA2006_6",
    note=MISHRA_BOX_NOTE,
)
def mishra_5(x):
    x1, x2 = x
    return _mishra_core(x1, x2, 1.0) ** 2 + 0.01 * (x1 + x2)


@benchmark(
    79,
    "mishra-6",
    "Mishra 6",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=MISHRA_BOX,
    optima=[rounded(-2.28395, (2.88631, 1.82326))],
    cite="MISHRA2006_6",
    note=MISHRA_BOX_NOTE,
)
def mishra_6(x):
    x1, x2 = x
    return -np.log(_mishra_core(x1, x2, -1.0) ** 2) + 0.01 * ((x1 - 1) ** 2 + (x2 - 1) ** 2)


@benchmark(
    80,
    "mishra-7",
    "Mishra 7",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=MISHRA_BOX,
    optima=[value_only(0.0)],
    note=MISHRA_BOX_NOTE,
)
def mishra_7(x):
    return (oprod(x) - math.factorial(x.size)) ** 2


@benchmark(
    81,
    "mishra-8",
    "Mishra 8",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=MISHRA_BOX,
    optima=[exact(0.0, (2, -3))],
    cite="MISHRA2006_6",
    note=MISHRA_BOX_NOTE + "; the two absolute values multiply; x1^4 coefficient transcribed as printed (1334)",
)
def mishra_8(x):
    x1, x2 = x
    p = (
        x1**10
        - 20 * x1**9
        + 180 * x1**8
        - 960 * x1**7
        + 3360 * x1**6
        - 8064 * x1**5
        + 1334 * x1**4
        - 15360 * x1**3
        + 11520 * x1**2
        - 5120 * x1
        + 2624
    )
    q = x2**4 + 12 * x2**3 + 54 * x2**2 + 108 * x2 + 81
    return 0.001 * (np.abs(p) * np.abs(q)) ** 2


@benchmark(
    82,
    "mishra-9",
    "Mishra 9",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(3),
    bounds=MISHRA_BOX,
    optima=[exact(0.0, (1, 2, 3))],
    cite="MISHRA2006_6",
    note=MISHRA_BOX_NOTE,
)
def mishra_9(x):
    x1, x2, x3 = x
    a = 2 * x1**3 + 5 * x1 * x2 + 4 * x3 - 2 * x1**2 * x3 - 18
    b = x1 + x2**3 + x1 * x3**2 - 22
    c = 8 * x1**2 + 2 * x2 * x3 + 2 * x2**2 + 3 * x2**3 - 52
    return (a * b**2 * c + a * b * c**2 + b**2 + (x1 + x2 - x3) ** 2) ** 2


@benchmark(
    83,
    "mishra-10",
    "Mishra 10",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=MISHRA_BOX,
    optima=[exact(0.0, (0, 0), (2, 2))],
    cite="MISHRA2006_6",
    note=MISHRA_BOX_NOTE + "; the printed operator x1 ⊥ x2 is read as the product x1 * x2",
)
def mishra_10(x):
    x1, x2 = x
    return (np.floor(x1 * x2) - np.floor(x1) - np.floor(x2)) ** 2


@benchmark(
    84,
    "mishra-11",
    "Mishra 11",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=MISHRA_BOX,
    optima=[value_only(0.0)],
    cite="MISHRA2006_6",
    note=MISHRA_BOX_NOTE,
)
def mishra_11(x):
    ax = np.abs(x)
    return (osum(ax) / x.size - oprod(ax) ** (1 / x.size)) ** 2


def _parsopoulos_points(n: int):
    return [(k * PI / 2, m * PI) for k in (-3, -1, 1, 3) for m in (-1, 0, 1)]


@benchmark(
    85,
    "parsopoulos",
    "Parsopoulos",
    header="Continuous, Differentiable, Separable, Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-5, 5),
    optima=[
        exact(
            0.0,
            pattern=_parsopoulos_points,
            family="(k pi/2, l pi), k odd, l integer",
            note="infinitely many minima; the 12 in-box points are audited",
        )
    ],
)
def parsopoulos(x):
    x1, x2 = x
    return np.cos(x1) ** 2 + np.sin(x2) ** 2


@benchmark(
    86,
    "pen-holder",
    "Pen Holder",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-11, 11),
    optima=[rounded(-0.96354, *sign_combinations((9.646168, 9.646168)))],
    cite="MISHRA2006_6",
)
def pen_holder(x):
    x1, x2 = x
    inner = np.abs(np.cos(x1) * np.cos(x2) * np.exp(np.abs(1 - np.sqrt(x1**2 + x2**2) / PI)))
    return -np.exp(inner**-1)


@benchmark(
    87,
    "pathological",
    "Pathological",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Scalable(2, 2),
    bounds=Bounds.uniform(-100, 100),
    optima=[exact(0.0, pattern=origin)],
    cite="RAHNAMAYAN2007",
)
def pathological(x):
    a, b = x[:-1], x[1:]
    return osum(0.5 + (np.sin(np.sqrt(100 * a**2 + b**2)) ** 2 - 0.5) / (1 + 0.001 * (a**2 - 2 * a * b + b**2) ** 2))


@benchmark(
    88,
    "paviani",
    "Paviani",
    header="Continuous, Differentiable, Non-Separable, Scalable, Multimodal",
    dimension=Scalable(10),
    bounds=Bounds.uniform(2.0001, 10),
    optima=[approx(-45.778, pattern=filled(9.351))],
    cite="HIMMELBLAU1972",
    note="the logarithms need 2 < x_i < 10",
)
def paviani(x):
    if np.any(x <= 2) or np.any(x >= 10):
        raise DomainError("Paviani needs 2 < x_i < 10")
    return osum(np.log(x - 2) ** 2 + np.log(10 - x) ** 2) - oprod(x) ** 0.2


@benchmark(
    89,
    "pinter",
    "Pintér",
    header="Continuous, Differentiable, Non-separable, Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[exact(0.0, pattern=origin)],
    cite="PINTER1996",
    note="cyclic neighbours: x_0 = x_D and x_(D+1) = x_1",
)
def pinter(x):
    i = np.arange(1, x.size + 1, dtype=float)
    prev, nxt = np.roll(x, 1), np.roll(x, -1)
    a = prev * np.sin(x) + np.sin(nxt)
    b = prev**2 - 2 * x + 3 * nxt - np.cos(x) + 1
    return osum(i * x**2) + osum(20 * i * np.sin(a) ** 2) + osum(i * np.log10(1 + i * b**2))


@benchmark(
    90,
    "periodic",
    "Periodic",
    header="Separable",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[exact(0.9, (0, 0))],
    cite="ALI2005",
)
def periodic(x):
    x1, x2 = x
    return 1 + np.sin(x1) ** 2 + np.sin(x2) ** 2 - 0.1 * np.exp(-(x1**2 + x2**2))


def _blocks_of_four(x):
    return x.reshape(-1, 4).T


@benchmark(
    91,
    "powell-singular",
    "Powell Singular",
    header="Continuous, Differentiable, Non-Separable Scalable, Unimodal",
    dimension=Scalable(4, 4, multiple_of=4),
    bounds=Bounds.uniform(-4, 5),
    optima=[exact(0.0, pattern=lambda n: [tuple([3.0, -1.0, 0.0, 1.0] * (n // 4))])],
    cite="POWELL1962",
    note="defined for D divisible by 4",
)
def powell_singular(x):
    a, b, c, d = _blocks_of_four(x)
    return osum((a + 10 * b) ** 2 + 5 * (c - d) ** 2 + (b - c) ** 4 + 10 * (a - d) ** 4)


@benchmark(
    92,
    "powell-singular-2",
    "Powell Singular 2",
    header="Continuous, Differentiable, Non-Separable Scalable, Unimodal",
    dimension=Scalable(4, 4),
    bounds=Bounds.uniform(-4, 5),
    optima=[value_only(0.0)],
    cite="FU2006",
    note="x_(i-1) .. x_(i+2) read as a sliding window of four consecutive coordinates",
)
def powell_singular_2(x):
    a, b, c, d = x[:-3], x[1:-2], x[2:-1], x[3:]
    return osum((a + 10 * b) ** 2 + 5 * (c - d) ** 2 + (b - 2 * c) ** 4 + 10 * (a - d) ** 4)


@benchmark(
    93,
    "powell-sum",
    "Powell Sum",
    header="Continuous, Differentiable, Separable Scalable, Unimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-1, 1),
    optima=[value_only(0.0)],
    cite="RAHNAMAYAN2007",
)
def powell_sum(x):
    i = np.arange(1, x.size + 1, dtype=float)
    return osum(np.abs(x) ** (i + 1))


PRICE_CORNERS = sign_combinations((5, 5))


@benchmark(
    94,
    "price-1",
    "Price 1",
    header="Continuous, Non-Differentiable, Separable Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-500, 500),
    optima=[exact(0.0, *PRICE_CORNERS)],
    cite="PRICE1977",
)
def price_1(x):
    x1, x2 = x
    return (np.abs(x1) - 5) ** 2 + (np.abs(x2) - 5) ** 2


@benchmark(
    95,
    "price-2",
    "Price 2",
    header="Continuous, Differentiable, Non-Separable Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[exact(0.9, (0, 0))],
    cite="PRICE1977",
)
def price_2(x):
    x1, x2 = x
    return 1 + np.sin(x1) ** 2 + np.sin(x2) ** 2 - 0.1 * np.exp(-(x1**2) - x2**2)


@benchmark(
    96,
    "price-3",
    "Price 3",
    header="Continuous, Differentiable, Non-Separable Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-500, 500),
    optima=[exact(0.0, *PRICE_CORNERS, note="printed minima repeat those of Price 1")],
    cite="PRICE1977",
)
def price_3(x):
    x1, x2 = x
    return 100 * (x2 - x1**2) ** 2 + 6 * (6.4 * (x2 - 0.5) ** 2 - x1 - 0.6) ** 2


@benchmark(
    97,
    "price-4",
    "Price 4",
    header="Continuous, Differentiable, Non-Separable Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-500, 500),
    optima=[exact(0.0, (0, 0), (2, 4)), rounded(0.0, (1.464, -2.506), note="location printed to three decimals")],
    cite="PRICE1977",
)
def price_4(x):
    x1, x2 = x
    return (2 * x1**3 * x2 - x2**3) ** 2 + (6 * x1 - x2**2 + x2) ** 2


def _qing_points(n: int):
    magnitudes = np.sqrt(np.arange(1, n + 1, dtype=float))
    if n <= 4:
        return sign_combinations(magnitudes)
    return [tuple(magnitudes), tuple(-magnitudes)]


@benchmark(
    98,
    "qing",
    "Qing",
    header="Continuous, Differentiable, Separable Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-500, 500),
    optima=[exact(0.0, pattern=_qing_points, family="(±sqrt(1), ..., ±sqrt(D))", note="every sign pattern audited for D <= 4")],
    cite="QING2006",
)
def qing(x):
    i = np.arange(1, x.size + 1, dtype=float)
    return osum((x**2 - i) ** 2)


@benchmark(
    99,
    "quadratic",
    "Quadratic",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[rounded(-3873.7243, (0.19388, 0.48513))],
)
def quadratic(x):
    x1, x2 = x
    return -3803.84 - 138.08 * x1 - 232.92 * x2 + 128.08 * x1**2 + 203.64 * x2**2 + 182.25 * x1 * x2
