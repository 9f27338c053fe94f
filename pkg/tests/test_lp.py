import random
from fractions import Fraction

from symcones.lp import cone_combination, convex_combination, feasible_point


def test_feasible_point_is_exact_and_basic():
    A = [[1, 1, 1], [1, 2, 3]]
    x = feasible_point(A, [1, 2])
    assert x is not None and all(v >= 0 for v in x)
    assert [sum(a * v for a, v in zip(row, x)) for row in A] == [1, 2]
    assert sum(1 for v in x if v) <= 2


def test_infeasible_systems_return_none():
    assert feasible_point([[1, 1]], [-1]) is None
    assert cone_combination([(1, 0), (0, 1)], (-1, 0)) is None
    assert convex_combination([(0, 0), (1, 0)], (0, 1)) is None


def test_degenerate_and_redundant_rows():
    # duplicated equality rows and a zero right-hand side
    x = feasible_point([[1, -1, 0], [1, -1, 0], [0, 0, 1]], [0, 0, 0])
    assert x == [0, 0, 0]


def test_random_feasibility_round_trip():
    rng = random.Random(7)
    for _ in range(200):
        m, n = rng.randint(1, 4), rng.randint(1, 6)
        A = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)]
        x0 = [Fraction(rng.randint(0, 4), rng.randint(1, 3)) for _ in range(n)]
        b = [sum(a * v for a, v in zip(row, x0)) for row in A]
        x = feasible_point(A, b)
        assert x is not None
        assert all(v >= 0 for v in x)
        assert [sum(a * v for a, v in zip(row, x)) for row in A] == b
