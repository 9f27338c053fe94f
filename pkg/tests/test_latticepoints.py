import random
from fractions import Fraction

import pytest

from symcones.budget import BudgetExhausted
from symcones.exactmath import QVector
from symcones.latticepoints import (
    Decision,
    MonoidSpec,
    NotPointed,
    hilbert_basis,
    hnf_rows,
    in_lattice,
    integer_kernel,
    is_irreducible,
    is_positive,
    monoid_contains,
    monoid_decide,
    positive_grading,
    units,
)
from symcones.oracle import OracleConfig, brute_hilbert
from symcones.polyhedra import Cone, contains

SEED = 1357


def test_hilbert_basis_of_classic_2d_cone():
    H = hilbert_basis(Cone([(0, 1), (2, -1)], 2))
    assert H.as_set() == {(0, 1), (1, 0), (2, -1)}
    assert H.norm == 3


def test_hilbert_basis_of_orthant_and_zero():
    assert hilbert_basis(Cone.orthant(3)).as_set() == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    assert len(hilbert_basis(Cone.zero(3))) == 0


def test_hilbert_basis_in_lower_dimensional_subspace():
    # the plane x + y + z = 0 meets Z^3 in a lattice not generated by the rays
    C = Cone([(1, -1, 0), (1, 1, -2)], 3)
    H = hilbert_basis(C)
    assert H.as_set() == {(1, -1, 0), (1, 0, -1), (1, 1, -2)}


def test_non_pointed_cone_rejected():
    with pytest.raises(NotPointed):
        hilbert_basis(Cone([(1, 0), (-1, 0), (0, 1)], 2))


def test_grading_is_positive_on_rays():
    C = Cone([(1, 2, 0), (0, 1, 3), (1, 0, 1)], 3)
    g = positive_grading(C)
    assert all(sum(a * b for a, b in zip(g, r)) > 0 for r in C.rays)


def test_hnf_and_integer_kernel():
    assert hnf_rows([(2, 4), (3, 6)]) == [(1, 2)]
    K = integer_kernel([(2, 3, 5)], 3)
    assert len(K) == 2 and all(2 * a + 3 * b + 5 * c == 0 for a, b, c in K)


def test_monoid_membership_positive_and_nonpositive():
    M = MonoidSpec(1, ((2,), (3,)))
    assert not monoid_contains(M, (1,))
    assert monoid_contains(M, (5,)) and monoid_contains(M, (0,))
    G = MonoidSpec(2, ((1, -1), (-1, 1), (1, 0)))
    assert monoid_contains(G, (3, -2))
    assert not monoid_contains(G, (3, -7))
    assert not monoid_contains(G, (-1, 0))
    with pytest.raises(ValueError):
        MonoidSpec(1, ((Fraction(1, 2),),))


def test_undecided_membership_raises_budget():
    G = MonoidSpec(2, ((2, -2), (-2, 2), (1, 0)))
    assert monoid_decide(G, (41, -40), node_budget=5) is Decision.UNDECIDED
    assert monoid_decide(G, (41, -40), node_budget=None) is Decision.YES
    with pytest.raises(BudgetExhausted):
        monoid_contains(G, (41, -40), node_budget=5)
    # inside the cone but off the generated lattice
    assert monoid_decide(G, (0, 1), node_budget=5) is Decision.NO


def test_lattice_membership():
    assert in_lattice([(2, -2), (1, 0)], (3, -2))
    assert not in_lattice([(2, -2), (1, 0)], (0, 1))
    assert in_lattice([(2, 4), (3, 6)], (-1, -2))


def test_irreducibility():
    C = Cone([(0, 1), (2, -1)], 2)
    assert is_irreducible((1, 0), C)
    assert not is_irreducible((2, 0), C)
    M = MonoidSpec(1, ((2,), (3,)))
    assert is_irreducible((3,), M) and not is_irreducible((6,), M)
    with pytest.raises(ValueError):
        is_irreducible((0, 0), C)


def test_units_and_positivity():
    G = MonoidSpec(2, ((2, -2), (-2, 2), (1, 0)))
    assert units(G) == [QVector((2, -2))]
    assert not is_positive(G)
    assert is_positive(MonoidSpec(2, ((1, 0), (1, 1))))
    assert units(MonoidSpec(2, ((1, 0), (1, 1)))) == []


# -- properties ------------------------------------------------------------------------


def _rand_pointed(rng, max_dim=3, bound=3):
    while True:
        n = rng.randint(1, max_dim)
        rays = [tuple(rng.randint(-bound, bound) for _ in range(n)) for _ in range(rng.randint(1, n + 2))]
        C = Cone(rays, n)
        if C.rays and not any(contains(C, tuple(-x for x in r)) for r in C.rays):
            return C


def test_hilbert_basis_matches_l1_ball_oracle():
    rng = random.Random(SEED)
    for _ in range(40):
        C = _rand_pointed(rng)
        H = hilbert_basis(C)
        cfg = OracleConfig(norm_bound=H.norm + 1)
        assert sorted(H.as_set()) == brute_hilbert(C.rays, C.dim, cfg), C


def test_hilbert_elements_are_irreducible_lattice_points():
    rng = random.Random(SEED + 1)
    for _ in range(25):
        C = _rand_pointed(rng)
        for h in hilbert_basis(C):
            assert contains(C, h) and all(isinstance(x, int) for x in h)
            assert is_irreducible(h, C)
