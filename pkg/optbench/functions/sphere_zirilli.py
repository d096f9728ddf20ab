"""Catalog entries f137-f175 (Sphere through Zirilli)."""

from functools import partial
from typing import List

import numpy as np

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
)
from optbench.functions.constants import WATSON_A
from optbench.registry import Bounds, Fixed, FunctionSpec, OptimumStatus, Scalable

SPECS: List[FunctionSpec] = []
benchmark = partial(define, SPECS)

PI = np.pi


@benchmark(
    137,
    "sphere",
    "Sphere",
    header="Continuous, Differentiable, Separable, Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(0, 10),
    optima=[exact(0.0, pattern=origin)],
    cite="SCHUMER1968",
)
def sphere(x):
    return osum(x**2)


@benchmark(
    138,
    "step",
    "Step",
    header="Discontinuous, Non-Differentiable, Separable, Scalable, Unimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-100, 100),
    optima=[exact(0.0, pattern=origin)],
)
def step(x):
    return osum(np.floor(np.abs(x)))


@benchmark(
    139,
    "step-2",
    "Step 2",
    header="Discontinuous, Non-Differentiable, Separable, Scalable, Unimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-100, 100),
    optima=[
        exact(
            0.0,
            pattern=origin,
            status=OptimumStatus.corrected,
            note="printed location (0.5, ..., 0.5) evaluates to D; every x in [-0.5, 0.5)^D attains 0",
        )
    ],
    cite="BAECK1993",
)
def step_2(x):
    return osum(np.floor(x + 0.5) ** 2)


@benchmark(
    140,
    "step-3",
    "Step 3",
    header="Discontinuous, Non-Differentiable, Separable, Scalable, Unimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-100, 100),
    optima=[exact(0.0, pattern=origin)],
)
def step_3(x):
    return osum(np.floor(x**2))


@benchmark(
    141,
    "stepint",
    "Stepint",
    header="Discontinuous, Non-Differentiable, Separable, Scalable, Unimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-5.12, 5.12),
    optima=[exact(0.0, pattern=origin)],
)
def stepint(x):
    return 25 + osum(np.floor(x))


@benchmark(
    142,
    "stretched-v-sine-wave",
    "Stretched V Sine Wave",
    header="Continuous, Differentiable, Non-Separable, Scalable, Unimodal",
    dimension=Scalable(2, 2),
    bounds=Bounds.uniform(-10, 10),
    optima=[exact(0.0, pattern=origin)],
    cite="SCHAFFER1989",
    note="title printed as 'Streched V Sine Wave'",
)
def stretched_v_sine_wave(x):
    s = x[1:] ** 2 + x[:-1] ** 2
    return osum(s**0.25 * (np.sin(50 * s**0.1) ** 2 + 0.1))


@benchmark(
    143,
    "sum-squares",
    "Sum Squares",
    header="Continuous, Differentiable, Separable, Scalable, Unimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[exact(0.0, pattern=origin)],
    cite="HEDAR",
)
def sum_squares(x):
    i = np.arange(1, x.size + 1, dtype=float)
    return osum(i * x**2)


@benchmark(
    144,
    "styblinski-tang",
    "Styblinski-Tang",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-5, 5),
    optima=[rounded(-78.332, (-2.903534, -2.903534))],
    cite="SILAGADZE2007",
)
def styblinski_tang(x):
    return 0.5 * osum(x**4 - 16 * x**2 + 5 * x)


HOLDER_NOTE = "exponent printed as |1 - (x1 + x2)^0.5 / pi|; (x1^2 + x2^2)^0.5 is used"


def _holder_envelope(x1, x2):
    return np.exp(np.abs(1 - np.sqrt(x1**2 + x2**2) / PI))


@benchmark(
    145,
    "holder-table-1",
    "Holder Table 1",
    header="Continuous, Differentiable, Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[
        rounded(
            -26.920336,
            (9.646168, 9.646168),
            (9.646168, -9.646168),
            (-9.646168, 9.646168),
            (-9.646168, -9.646168),
            status=OptimumStatus.corrected,
            note=HOLDER_NOTE,
        )
    ],
    cite="MISHRA2006_6",
    note=HOLDER_NOTE,
)
def holder_table_1(x):
    x1, x2 = x
    return -np.abs(np.cos(x1) * np.cos(x2) * _holder_envelope(x1, x2))


@benchmark(
    146,
    "holder-table-2",
    "Holder Table 2",
    header="Continuous, Differentiable, Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[
        rounded(
            -19.20850,
            (8.055023472141116, 9.664590028909654),
            (8.055023472141116, -9.664590028909654),
            (-8.055023472141116, 9.664590028909654),
            (-8.055023472141116, -9.664590028909654),
            status=OptimumStatus.corrected,
            note=HOLDER_NOTE,
        )
    ],
    cite="MISHRA2006_6",
    note=HOLDER_NOTE,
)
def holder_table_2(x):
    x1, x2 = x
    return -np.abs(np.sin(x1) * np.cos(x2) * _holder_envelope(x1, x2))


@benchmark(
    147,
    "carrom-table",
    "Carrom Table",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[
        rounded(
            -24.1568155,
            (9.646157266348881, 9.646134286497169),
            (9.646157266348881, -9.646134286497169),
            (-9.646157266348881, 9.646134286497169),
            (-9.646157266348881, -9.646134286497169),
        )
    ],
    cite="MISHRA2006_6",
)
def carrom_table(x):
    x1, x2 = x
    return -((np.cos(x1) * np.cos(x2) * _holder_envelope(x1, x2)) ** 2) / 30


@benchmark(
    148,
    "testtube-holder",
    "Testtube Holder",
    header="Continuous, Differentiable, Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[rounded(-10.872300, (PI / 2, 0), (-PI / 2, 0))],
    cite="MISHRA2006_6",
    note="printed without an outer absolute value, so the two claimed minima differ in sign",
)
def testtube_holder(x):
    x1, x2 = x
    return -4 * (np.sin(x1) * np.cos(x2) * np.exp(np.abs(np.cos((x1**2 + x2**2) / 200))))


@benchmark(
    149,
    "trecanni",
    "Trecanni",
    header="Continuous, Differentiable, Separable, Non-Scalable, Unimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-5, 5),
    optima=[exact(0.0, (0, 0), (-2, 0), status=OptimumStatus.corrected, note="printed as x1^4 - 4x1^3 + 4x1 + x2^2")],
    cite="DIXON1978",
    note="printed as x1^4 - 4x1^3 + 4x1 + x2^2, which is not minimal at (-2, 0); x1^4 + 4x1^3 + 4x1^2 + x2^2 is used",
)
def trecanni(x):
    x1, x2 = x
    return x1**4 + 4 * x1**3 + 4 * x1**2 + x2**2


def _trid(x):
    return osum((x - 1) ** 2) - osum(x[1:] * x[:-1])


def _trid_minimizer(n):
    i = np.arange(1, n + 1)
    return tuple(float(v) for v in i * (n + 1 - i))


@benchmark(
    150,
    "trid-6",
    "Trid 6",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(6),
    bounds=Bounds.uniform(-36, 36),
    optima=[exact(-50.0, _trid_minimizer(6), note="location not printed; x_i = i(D + 1 - i) is audited")],
    cite="HEDAR",
    note="second sum starts at i = 2",
)
def trid_6(x):
    return _trid(x)


@benchmark(
    151,
    "trid-10",
    "Trid 10",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(10),
    bounds=Bounds.uniform(-100, 100),
    optima=[exact(-200.0, _trid_minimizer(10), note="location not printed; x_i = i(D + 1 - i) is audited")],
    cite="HEDAR",
    note="second sum starts at i = 2",
)
def trid_10(x):
    return _trid(x)


@benchmark(
    152,
    "trefethen",
    "Trefethen",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[rounded(-3.30686865, (-0.024403, 0.210612))],
    cite="ADORIO2005",
)
def trefethen(x):
    x1, x2 = x
    return (
        np.exp(np.sin(50 * x1))
        + np.sin(60 * np.exp(x2))
        + np.sin(70 * np.sin(x1))
        + np.sin(np.sin(80 * x2))
        - np.sin(10 * (x1 + x2))
        + 0.25 * (x1**2 + x2**2)
    )


@benchmark(
    153,
    "trigonometric-1",
    "Trigonometric 1",
    header="Continuous, Differentiable, Non-Separable, Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(0, PI),
    optima=[exact(0.0, pattern=origin)],
    cite="DIXON1978",
)
def trigonometric_1(x):
    n = x.size
    i = np.arange(1, n + 1, dtype=float)
    return osum((n - osum(np.cos(x)) + i * (1 - np.cos(x) - np.sin(x))) ** 2)


@benchmark(
    154,
    "trigonometric-2",
    "Trigonometric 2",
    header="Continuous, Differentiable, Non-Separable, Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-500, 500),
    optima=[exact(1.0, pattern=filled(0.9))],
    cite="FU2006",
)
def trigonometric_2(x):
    z = x - 0.9
    return 1 + osum(8 * np.sin(7 * z**2) ** 2 + 6 * np.sin(14 * z[0] ** 2) ** 2 + z**2)


def _step_indicator(v):
    return 1.0 if v >= 0 else 0.0


@benchmark(
    155,
    "tripod",
    "Tripod",
    header="Discontinuous, Non-Differentiable, Non-Separable, Non-Scalable, Multimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-100, 100),
    optima=[exact(0.0, (0, -50))],
    cite="RAHNAMAYAN2007",
    note="p(x) = 1 for x >= 0, else 0",
)
def tripod(x):
    x1, x2 = x
    p1, p2 = _step_indicator(x1), _step_indicator(x2)
    return p2 * (1 + p1) + np.abs(x1 + 50 * p2 * (1 - 2 * p1)) + np.abs(x2 + 50 * (1 - 2 * p2))


@benchmark(
    156,
    "ursem-1",
    "Ursem 1",
    header="Separable",
    dimension=Fixed(2),
    bounds=Bounds.per_coordinate((-2.5, 3), (-2, 2)),
    optima=[unstated("single global and local minimum; location not printed")],
    cite="ROENKKOENEN2009",
)
def ursem_1(x):
    x1, x2 = x
    return -np.sin(2 * x1 - 0.5 * PI) - 3 * np.cos(x2) - 0.5 * x1


def _ursem_3_term(v, phase):
    return np.sin(phase) * (2 - np.abs(v)) / 2 * (3 - np.abs(v)) / 2


@benchmark(
    157,
    "ursem-3",
    "Ursem 3",
    header="Non-separable",
    dimension=Fixed(2),
    bounds=Bounds.per_coordinate((-2, 2), (-1.5, 1.5)),
    optima=[unstated("global minimum between four local minima on a line; location not printed")],
    cite="ROENKKOENEN2009",
)
def ursem_3(x):
    x1, x2 = x
    return -_ursem_3_term(x1, 2.2 * PI * x1 + 0.5 * PI) - _ursem_3_term(x2, 0.5 * PI * x2**2 + 0.5 * PI)


@benchmark(
    158,
    "ursem-4",
    "Ursem 4",
    header="Non-separable",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-2, 2),
    optima=[unstated("global minimum in the middle of the box; value not printed")],
    cite="ROENKKOENEN2009",
)
def ursem_4(x):
    x1, x2 = x
    return -3 * np.sin(0.5 * PI * x1 + 0.5 * PI) * (2 - np.sqrt(x1**2 + x2**2)) / 4


@benchmark(
    159,
    "ursem-waves",
    "Ursem Waves",
    header="Non-separable",
    dimension=Fixed(2),
    bounds=Bounds.per_coordinate((-0.9, 1.2), (-1.2, 1.2)),
    optima=[unstated("single global minimum among nine local minima; location not printed")],
    cite="ROENKKOENEN2009",
)
def ursem_waves(x):
    x1, x2 = x
    return (
        -0.9 * x1**2
        + (x2**2 - 4.5 * x2**2) * x1 * x2
        + 4.7 * np.cos(3 * x1 - x2**2 * (2 + x1)) * np.sin(2.5 * PI * x1)
    )


@benchmark(
    160,
    "venter-sobiezcczanski-sobieski",
    "Venter Sobiezcczanski-Sobieski",
    header="Continuous, Differentiable, Separable, Non-Scalable",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-50, 50),
    optima=[exact(-400.0, (0, 0))],
    cite="BEGAMBRE2009",
)
def venter_sobiezcczanski_sobieski(x):
    x1, x2 = x
    return (
        x1**2
        - 100 * np.cos(x1) ** 2
        - 100 * np.cos(x1**2 / 30)
        + x2**2
        - 100 * np.cos(x2) ** 2
        - 100 * np.cos(x2**2 / 30)
    )


@benchmark(
    161,
    "watson",
    "Watson",
    header="Continuous, Differentiable, Non-Separable, Scalable, Unimodal",
    dimension=Fixed(6),
    bounds=Bounds.uniform(-10, 10),
    optima=[rounded(0.002288, (-0.0158, 1.012, -0.2329, 1.260, -1.513, 0.9928))],
    cite="SCHWEFEL1981",
    note="a_i = i / 29 for i = 0..29; inner sums as printed",
)
def watson(x):
    powers = WATSON_A[:, None] ** np.arange(6)[None, :]
    weighted = ((np.arange(5) - 1)[None, :] * powers[:, :5] * x[None, :5]).sum(axis=1)
    full = (powers * x[None, :]).sum(axis=1)
    return osum((weighted - full**2 - 1) ** 2) + x[0] ** 2


@benchmark(
    162,
    "wayburn-seader-1",
    "Wayburn Seader 1",
    header="Continuous, Differentiable, Non-Separable, Scalable, Unimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-500, 500),
    optima=[rounded(0.0, (1, 2), (1.597, 0.806))],
    cite="WAYBURN1987",
    note="no box printed; [-500, 500]^2 from Wayburn Seader 2 is used",
)
def wayburn_seader_1(x):
    x1, x2 = x
    return (x1**6 + x2**4 - 17) ** 2 + (2 * x1 + x2 - 4) ** 2


@benchmark(
    163,
    "wayburn-seader-2",
    "Wayburn Seader 2",
    header="Continuous, Differentiable, Non-Separable, Scalable, Unimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-500, 500),
    optima=[rounded(0.0, (0.2, 1), (0.425, 1))],
    cite="WAYBURN1987",
    note="box printed as -500 <= 500, read as -500 <= x_i <= 500",
)
def wayburn_seader_2(x):
    x1, x2 = x
    return (1.613 - 4 * (x1 - 0.3125) ** 2 - 4 * (x2 - 1.625) ** 2) ** 2 + (x2 - 1) ** 2


@benchmark(
    164,
    "wayburn-seader-3",
    "Wayburn Seader 3",
    header="Continuous, Differentiable, Non-Separable, Scalable, Unimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-500, 500),
    optima=[approx(21.35, (5.611, 6.187), note="value printed to two decimals")],
    cite="WAYBURN1987",
    note="box printed as -500 <= 500, read as -500 <= x_i <= 500",
)
def wayburn_seader_3(x):
    x1, x2 = x
    return 2 * x1**3 / 3 - 8 * x1**2 + 33 * x1 - x1 * x2 + 5 + ((x1 - 4) ** 2 + (x2 - 5) ** 2 - 4) ** 2


@benchmark(
    165,
    "wavy",
    "W / Wavy",
    header="Continuous, Differentiable, Separable, Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-PI, PI),
    optima=[exact(0.0, pattern=origin)],
    cite="COURRIEU1997",
    parameters={"k": 10.0},
)
def wavy(x, k=10.0):
    return 1 - osum(np.cos(k * x) * np.exp(-(x**2) / 2)) / x.size


@benchmark(
    166,
    "weierstrass",
    "Weierstrass",
    header="Continuous, Differentiable, Separable, Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-0.5, 0.5),
    optima=[exact(0.0, pattern=origin)],
    cite="SUGANTHAN2005",
    parameters={"a": 0.5, "b": 3.0, "kmax": 20},
    note="a, b and kmax are not printed; 0.5, 3 and 20 are used and the n-weighted sum is subtracted once",
)
def weierstrass(x, a=0.5, b=3.0, kmax=20):
    k = np.arange(int(kmax) + 1, dtype=float)
    ak, bk = a**k, b**k
    inner = np.cumsum(ak[None, :] * np.cos(2 * PI * bk[None, :] * (x[:, None] + 0.5)), axis=1)[:, -1]
    offset = osum(ak * np.cos(PI * bk))
    return osum(inner - offset)


@benchmark(
    167,
    "whitley",
    "Whitley",
    header="Continuous, Differentiable, Non-Separable, Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-10.24, 10.24),
    optima=[exact(0.0, pattern=ones, note="value and box not printed; 0 and [-10.24, 10.24]^D from the cited source")],
    cite="WHITLEY1996",
    note="cosine argument printed as y + 1 with y = 100(x_i^2 - x_j)^2 + (1 - x_j)^2",
)
def whitley(x):
    y = 100 * (x[:, None] ** 2 - x[None, :]) ** 2 + (1 - x[None, :]) ** 2
    return osum((y**2 / 4000 - np.cos(y + 1)).ravel())


@benchmark(
    168,
    "wolfe",
    "Wolfe",
    header="Continuous, Differentiable, Separable, Scalable, Multimodal",
    dimension=Fixed(3),
    bounds=Bounds.uniform(0, 2),
    optima=[exact(0.0, (0, 0, 0))],
    cite="SCHWEFEL1981",
    note="exponent printed as ^0.75 with stray spacing",
)
def wolfe(x):
    x1, x2, x3 = x
    return 4 / 3 * (x1**2 + x2**2 - x1 * x2) ** 0.75 + x3


@benchmark(
    169,
    "xin-she-yang-1",
    "Xin-She Yang 1",
    header="Separable",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-5, 5),
    optima=[exact(0.0, pattern=origin)],
    cite="YANG2010a",
    stochastic=True,
    noise_fill=1.0,
    noise_per_coordinate=True,
)
def xin_she_yang_1(x, draws):
    i = np.arange(1, x.size + 1, dtype=float)
    return osum(np.asarray(draws) * np.abs(x) ** i)


@benchmark(
    170,
    "xin-she-yang-2",
    "Xin-She Yang 2",
    header="Non-separable",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-2 * PI, 2 * PI),
    optima=[exact(0.0, pattern=origin)],
)
def xin_she_yang_2(x):
    return osum(np.abs(x)) * np.exp(-osum(np.sin(x**2)))


@benchmark(
    171,
    "xin-she-yang-3",
    "Xin-She Yang 3",
    header="Non-separable",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-20, 20),
    optima=[exact(-1.0, pattern=origin, note="for m = 5 and beta = 15")],
    parameters={"m": 5, "beta": 15.0},
)
def xin_she_yang_3(x, m=5, beta=15.0):
    return np.exp(-osum((x / beta) ** (2 * m))) - 2 * np.exp(-osum(x**2)) * oprod(np.cos(x) ** 2)


@benchmark(
    172,
    "xin-she-yang-4",
    "Xin-She Yang 4",
    header="Non-separable",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[exact(-1.0, pattern=origin)],
)
def xin_she_yang_4(x):
    return (osum(np.sin(x) ** 2) - np.exp(-osum(x**2))) * np.exp(-osum(np.sin(np.sqrt(np.abs(x))) ** 2))


@benchmark(
    173,
    "zakharov",
    "Zakharov",
    header="Continuous, Differentiable, Non-Separable, Scalable, Multimodal",
    dimension=Scalable(2),
    bounds=Bounds.uniform(-5, 10),
    optima=[exact(0.0, pattern=origin)],
    cite="RAHNAMAYAN2007",
)
def zakharov(x):
    i = np.arange(1, x.size + 1, dtype=float)
    half = 0.5 * osum(i * x)
    return osum(x**2) + half**2 + half**4


@benchmark(
    174,
    "zettl",
    "Zettl",
    header="Continuous, Differentiable, Non-Separable, Non-Scalable, Unimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-5, 10),
    optima=[rounded(-0.003791, (-0.0299, 0))],
    cite="SCHWEFEL1995",
)
def zettl(x):
    x1, x2 = x
    return (x1**2 + x2**2 - 2 * x1) ** 2 + 0.25 * x1


@benchmark(
    175,
    "zirilli",
    "Zirilli",
    header="Continuous, Differentiable, Separable, Non-Scalable, Unimodal",
    dimension=Fixed(2),
    bounds=Bounds.uniform(-10, 10),
    optima=[approx(-0.3523, (-1.0465, 0))],
    cite="ALI2005",
    note="also known as Aluffi-Pentini",
)
def zirilli(x):
    x1, x2 = x
    return 0.25 * x1**4 - 0.5 * x1**2 + 0.1 * x1 + 0.5 * x2**2
