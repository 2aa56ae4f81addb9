"""Frozen cycle tables: rows of (form, matrix, case label)."""

from qfcycle.forms import Form, Mat

LEVEL1_1_12 = [
    (Form(1, 12, -1), Mat(2, 0, -1, 1)),
    (Form(3, 5, -1), Mat(5, -1, 1, 0)),
    (Form(-1, 5, 3), Mat(-1, -1, 1, 0)),
    (Form(3, 1, -3), Mat(13, -11, -1, 1)),
]

LEVEL1_5_9 = [
    (Form(5, 9, -7), Mat(1, -1, 1, 0)),
    (Form(-7, 5, 7), Mat(7, 5, 1, 1)),
    (Form(-5, 32, -7), Mat(4, -1, 1, 0)),
    (Form(-7, 24, 11), Mat(2, 1, -1, 0)),
    (Form(11, 20, -11), Mat(3, -1, -1, 1)),
]

LEVEL13 = [
    (Form(11, -70, 98), Mat(3, -13, 1, -4), "5"),
    (Form(-6, 18, 11), Mat(1, 0, 1, 1), "0"),
    (Form(-13, -4, 11), Mat(1, 0, 1, 1), "5"),
    (Form(2, -26, 11), Mat(1, -13, 0, 1), "inf"),
    (Form(2, 26, 11), Mat(1, 0, 1, 1), "5"),
    (Form(-13, 4, 11), Mat(1, 0, 1, 1), "0"),
    (Form(-6, -18, 11), Mat(-4, -13, 1, 3), "5"),
    (Form(11, 70, 98), Mat(-6, -13, 1, 2), "3"),
    (Form(2, -2, -73), Mat(-2, 13, 1, -7), "3"),
    (Form(11, 18, -6), Mat(1, 0, -3, 1), "0"),
    (Form(11, -18, -6), Mat(-7, 13, 1, -2), "2"),
    (Form(2, 2, -73), Mat(2, -13, 1, -6), "3"),
]

LEVEL5 = [
    (Form(1, -1, -3), Mat(-1, 5, -1, 3), "4"),
    (Form(3, -16, 17), Mat(1, -5, 0, 1), "inf"),
    (Form(3, 14, 12), Mat(1, 0, 1, 1), "3"),
    (Form(1, -10, 12), Mat(1, -10, 0, 1), "inf"),
    (Form(1, 10, 12), Mat(1, 0, 1, 1), "3"),
    (Form(3, -14, 12), Mat(1, -5, 0, 1), "inf"),
    (Form(3, 16, 17), Mat(3, 5, -1, -1), "4"),
    (Form(1, 1, -3), Mat(-1, 0, 1, -1), "5"),
    (Form(-1, -5, -3), Mat(1, 5, 0, 1), "inf"),
    (Form(-1, 5, -3), Mat(-1, 0, 1, -1), "5"),
]


def parabolic(N):
    return [(Form(2, 2 * N, -1), Mat(1, 0, -2 * N, 1)), (Form(2, -2 * N, -1), Mat(1, -N, 0, 1))]
