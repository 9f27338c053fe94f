import random
from fractions import Fraction
from itertools import permutations

import pytest

from symcones.exactmath import (
    DimensionMismatch,
    NotTruncatable,
    Permutation,
    QVector,
    apply_perm,
    as_rational,
    coordinate_sum,
    l1_norm,
    multiset_permutations,
    normalize_primitive,
    nullspace,
    orbit,
    orbit_size,
    pad,
    rank,
    solve_in_span,
    sorted_rep,
    support,
    truncate,
)

SEED = 20260101


def test_rationals_are_exact_and_floats_rejected():
    assert as_rational("3/6") == Fraction(1, 2)
    assert as_rational(Fraction(4, 2)) == 2 and isinstance(as_rational(Fraction(4, 2)), int)
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        QVector([1, 0.25])


def test_qvector_arithmetic_and_dimension_checks():
    u, v = QVector([1, "1/2"]), QVector([Fraction(1, 2), 3])
    assert u + v == (Fraction(3, 2), Fraction(7, 2))
    assert 2 * u == (2, 1)
    assert u.dot(v) == 2
    assert QVector.unit(2, 3) == (0, 1, 0)
    with pytest.raises(DimensionMismatch):
        u + QVector([1, 2, 3])


@pytest.mark.parametrize("u, s", [((-2, -1, 4), 1), ((0, 0, 0), 0), ((1, -1), 0)])
def test_coordinate_sum(u, s):
    assert coordinate_sum(QVector(u)) == s


@pytest.mark.parametrize("u, n", [((-1, 2), 3), ((0, 0, 0, 0), 0), ((-1, 1, 1), 3)])
def test_l1_norm(u, n):
    assert l1_norm(QVector(u)) == n


@pytest.mark.parametrize("u, s", [((0, 3, 0, -1), {2, 4}), ((0, 0), set()), ((-3, 1, 3, 0, 0, 0), {1, 2, 3})])
def test_support(u, s):
    assert support(u) == s


def test_sorted_rep_examples():
    assert sorted_rep((3, 1, 2), "non-decreasing") == (1, 2, 3)
    assert sorted_rep((1, 1, 1), "non-increasing") == (1, 1, 1)
    assert sorted_rep((-2, -1, 4), "non-increasing") == (4, -1, -2)
    with pytest.raises(ValueError):
        sorted_rep((1,), "sideways")


def test_apply_perm_examples():
    assert apply_perm(Permutation.identity(3), (5, 6, 7)) == (5, 6, 7)
    assert apply_perm(Permutation.transposition(1, 2, 2), (1, -1)) == (-1, 1)
    # images (2,3,1): result_i = u_{sigma^-1(i)}
    assert apply_perm(Permutation((2, 3, 1)), (10, 20, 30)) == (30, 10, 20)
    with pytest.raises(DimensionMismatch):
        apply_perm(Permutation.identity(2), (1, 2, 3))
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


def test_orbit_examples():
    o = orbit((1, 1), 3)
    assert set(o) == {(1, 1, 0), (1, 0, 1), (0, 1, 1)} and len(o) == 3
    assert set(orbit((1, -1), 2)) == {(1, -1), (-1, 1)}
    assert len(orbit((-1, 2), 4)) == 12
    assert list(o.members) == sorted(o.members)
    assert (0, 1, 1) in o and (1, 1, 1) not in o


def test_pad_truncate():
    assert pad((1, 2), 4) == (1, 2, 0, 0)
    assert truncate((1, 2, 0, 0), 2) == (1, 2)
    with pytest.raises(NotTruncatable):
        truncate((1, 2, 3), 2)
    with pytest.raises(DimensionMismatch):
        pad((1, 2, 3), 2)


def test_normalize_primitive_examples():
    assert normalize_primitive((2, 4, -6)) == (1, 2, -3)
    assert normalize_primitive((Fraction(1, 2), Fraction(3, 2))) == (1, 3)
    assert normalize_primitive((-5, 0, 0)) == (-1, 0, 0)
    with pytest.raises(ValueError):
        normalize_primitive((0, 0))


# -- properties -------------------------------------------------------------------------


def _rand_perm(rng, n):
    imgs = list(range(1, n + 1))
    rng.shuffle(imgs)
    return Permutation(tuple(imgs))


def test_action_is_compatible_with_composition():
    rng = random.Random(SEED)
    for _ in range(300):
        n = rng.randint(1, 7)
        s, t = _rand_perm(rng, n), _rand_perm(rng, n)
        u = QVector(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n))
        assert apply_perm(s * t, u) == apply_perm(s, apply_perm(t, u))
        assert apply_perm(s.inverse(), apply_perm(s, u)) == u


def test_sum_and_norm_are_permutation_invariant():
    rng = random.Random(SEED + 1)
    for _ in range(300):
        n = rng.randint(1, 7)
        s = _rand_perm(rng, n)
        u = QVector(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n))
        assert coordinate_sum(apply_perm(s, u)) == coordinate_sum(u)
        assert l1_norm(apply_perm(s, u)) == l1_norm(u)


def test_orbit_size_matches_exhaustive_enumeration():
    rng = random.Random(SEED + 2)
    for _ in range(150):
        k = rng.randint(1, 4)
        n = rng.randint(k, 6)
        u = [rng.randint(-2, 2) for _ in range(k)]
        brute = set(permutations(list(u) + [0] * (n - k)))
        assert len(orbit(u, n)) == len(brute) == orbit_size(u, n)
        assert set(orbit(u, n)) == brute


def test_multiset_permutations_are_lexicographic_and_distinct():
    out = list(multiset_permutations((2, 1, 1)))
    assert out == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]


def test_sorted_rep_is_orbit_member_and_idempotent():
    rng = random.Random(SEED + 3)
    for _ in range(200):
        u = [rng.randint(-5, 5) for _ in range(rng.randint(1, 6))]
        for d in ("non-decreasing", "non-increasing"):
            s = sorted_rep(u, d)
            assert s in orbit(u, len(u))
            assert sorted_rep(s, d) == s


def test_normalize_primitive_is_scale_invariant():
    rng = random.Random(SEED + 4)
    for _ in range(300):
        u = [Fraction(rng.randint(-6, 6), rng.randint(1, 5)) for _ in range(rng.randint(1, 5))]
        if not any(u):
            continue
        lam = Fraction(rng.randint(1, 20), rng.randint(1, 20))
        assert normalize_primitive([lam * x for x in u]) == normalize_primitive(u)


def test_small_linear_algebra():
    assert rank([(1, 2), (2, 4)]) == 1
    ns = nullspace([(1, 1, 1)], 3)
    assert len(ns) == 2 and all(sum(v) == 0 for v in ns)
    assert solve_in_span([(1, 0, 1), (0, 1, 1)], (2, 3, 5)) == [2, 3]
    assert solve_in_span([(1, 0, 1)], (0, 1, 0)) is None
