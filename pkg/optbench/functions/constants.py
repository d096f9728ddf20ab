"""Constant tables used by the catalog formulas, transcribed as printed."""

import numpy as np

# f8 Brad
BRAD_Y = np.array([0.14, 0.18, 0.22, 0.25, 0.29, 0.32, 0.35, 0.39, 0.37, 0.58, 0.73, 0.96, 1.34, 2.10, 4.39])

# f35 Cola: lower triangle of the symmetric distance matrix, rows 1..9 (row 0 is empty)
COLA_D_ROWS = (
    (1.27,),
    (1.69, 1.43),
    (2.04, 2.35, 2.43),
    (3.09, 3.18, 3.26, 2.85),
    (3.20, 3.22, 3.27, 2.88, 1.55),
    (2.86, 2.56, 2.58, 2.59, 3.12, 3.06),
    (3.17, 3.18, 3.18, 3.12, 1.31, 1.64, 3.00),
    (3.21, 3.18, 3.18, 3.17, 1.70, 1.36, 2.95, 1.32),
    (2.38, 2.31, 2.42, 1.94, 2.85, 2.81, 2.56, 2.91, 2.97),
)


def _cola_matrix() -> np.ndarray:
    d = np.zeros((10, 10))
    for i, row in enumerate(COLA_D_ROWS, start=1):
        d[i, : len(row)] = row
    return d


COLA_D = _cola_matrix()

# f37 Corana
CORANA_D = np.array([1.0, 1000.0, 10.0, 100.0])

# f62 Hartman 3
HARTMAN3_A = np.array([[3.0, 10.0, 30.0], [0.1, 10.0, 35.0], [3.0, 10.0, 30.0], [0.1, 10.0, 35.0]])
HARTMAN3_C = np.array([1.0, 1.2, 3.0, 3.2])
HARTMAN3_P = np.array(
    [
        [0.3689, 0.1170, 0.2673],
        [0.4699, 0.4837, 0.7470],
        [0.1091, 0.8732, 0.5547],
        [0.03815, 0.5743, 0.8828],
    ]
)

# f63 Hartman 6
HARTMAN6_A = np.array(
    [
        [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
        [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
        [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
        [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
    ]
)
HARTMAN6_C = np.array([1.0, 1.2, 3.0, 3.2])
HARTMAN6_P = np.array(
    [
        [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5586],
        [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
        [0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650],
        [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
    ]
)

# f68 Langerman 5
LANGERMAN_A = np.array(
    [
        [9.681, 0.667, 4.783, 9.095, 3.517, 9.325, 6.544, 0.211, 5.122, 2.020],
        [9.400, 2.041, 3.788, 7.931, 2.882, 2.672, 3.568, 1.284, 7.033, 7.374],
        [8.025, 9.152, 5.114, 7.621, 4.564, 4.711, 2.996, 6.126, 0.734, 4.982],
        [2.196, 0.415, 5.649, 6.979, 9.510, 9.166, 6.304, 6.054, 9.377, 1.426],
        [8.074, 8.777, 3.467, 1.863, 6.708, 6.349, 4.534, 0.276, 7.633, 1.567],
    ]
)
LANGERMAN_C = np.array([0.806, 0.517, 1.5, 0.908, 0.965])

# f130-f132 Shekel
SHEKEL_A = np.array(
    [
        [4.0, 4.0, 4.0, 4.0],
        [1.0, 1.0, 1.0, 1.0],
        [8.0, 8.0, 8.0, 8.0],
        [6.0, 6.0, 6.0, 6.0],
        [3.0, 7.0, 3.0, 7.0],
        [2.0, 9.0, 2.0, 9.0],
        [5.0, 5.0, 3.0, 3.0],
        [8.0, 1.0, 8.0, 1.0],
        [6.0, 2.0, 6.0, 2.0],
        [7.0, 3.6, 7.0, 3.6],
    ]
)
SHEKEL_C = np.array([0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5])

# f161 Watson abscissae a_i = i / 29
WATSON_A = np.arange(30) / 29.0
