"""Seeded property suites shared by the test-suite and ``symcones verify``.

Each suite runs a number of random trials and counts violations.  A suite
never stops at the first violation; it records the first counterexample
and keeps going so the count is meaningful.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .equivariant import (
    ChainSpec,
    LocalConeClass,
    apply_merge,
    canonical_local_cone,
    classify_local_cone,
    equivariant_contains,
    insertion_family,
    insertion_levels,
    level_hilbert_basis,
    local_cone,
    merge_condition,
    monoid_stability_index,
    ordered_insertion_member,
)
from .exactmath import Permutation, apply_perm, orbit_union
from .latticepoints import hilbert_basis
from .oracle import OracleConfig, brute_hilbert, convex_membership
from .polyhedra import Cone, contains, dual, equals, is_pointed


@dataclass
class SuiteResult:
    name: str
    trials: int
    violations: int = 0
    counterexample: object = None
    hits: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def fail(self, example) -> None:
        self.violations += 1
        if self.counterexample is None:
            self.counterexample = example

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = "" if self.ok else f"  first counterexample: {self.counterexample}"
        return f"{status} {self.name}: {self.trials} trials, {self.violations} violations{tail}"


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _random_perm(rng: random.Random, n: int) -> Permutation:
    imgs = list(range(1, n + 1))
    rng.shuffle(imgs)
    return Permutation(tuple(imgs))


def _rand_q(rng: random.Random, lo: int, hi: int, den: int = 4) -> Fraction:
    return Fraction(rng.randint(lo * den, hi * den), den)


# -- cones ---------------------------------------------------------------------------------


def random_cone(rng: random.Random, max_dim: int = 6, bound: int = 5) -> Cone:
    n = rng.randint(1, max_dim)
    k = rng.randint(1, n + 2)
    rays = [tuple(rng.randint(-bound, bound) for _ in range(n)) for _ in range(k)]
    return Cone(rays, n)


def suite_duality(seed: int = 0, trials: int = 200) -> SuiteResult:
    """Double dual returns the cone; primal and dual rays pair nonnegatively."""
    rng = random.Random(seed)
    res = SuiteResult("duality involution + pairing", trials)
    for _ in range(trials):
        C = random_cone(rng)
        D = dual(C)
        if any(_dot(u, v) < 0 for u in C.rays for v in D.rays):
            res.fail(("pairing", C.rays))
        if not equals(dual(D), C):
            res.fail(("involution", C.rays))
    return res


def random_pointed_cone(rng: random.Random, max_dim: int = 4, bound: int = 4) -> Cone:
    while True:
        n = rng.randint(2, max_dim)
        k = rng.randint(1, n + 1)
        rays = [tuple(rng.randint(-bound, bound) for _ in range(n)) for _ in range(k)]
        C = Cone(rays, n)
        if C.rays and is_pointed(C):
            return C


def suite_hilbert_oracle(seed: int = 0, trials: int = 50) -> SuiteResult:
    """Triangulation-based Hilbert basis equals the brute-force irreducibles."""
    rng = random.Random(seed)
    res = SuiteResult("hilbert basis vs brute-force oracle", trials)
    for _ in range(trials):
        C = random_pointed_cone(rng)
        H = hilbert_basis(C)
        cfg = OracleConfig(norm_bound=H.norm + 1, seed=seed)
        if sorted(tuple(h) for h in H) != brute_hilbert(C.rays, C.dim, cfg):
            res.fail(C.rays)
    return res


# -- classification ------------------------------------------------------------------------


def random_invariant_nonpointed(rng: random.Random, max_dim: int = 6) -> Cone:
    n = rng.randint(1, max_dim)

    def small_vec():
        supp = rng.randint(1, min(3, n))
        v = [rng.randint(-2, 2) for _ in range(supp)] + [0] * (n - supp)
        return v if any(v) else [1] + [0] * (n - 1)

    while True:
        roll = rng.random()
        if roll < 0.2:
            c = rng.choice([1, 2, -3])
            line = [[c] * n]
        elif roll < 0.45 and n >= 2:
            line = [[1, -1] + [0] * (n - 2)]
        else:
            line = [small_vec()]
        gens = line + [[-x for x in line[0]]]
        if roll >= 0.2 and rng.random() < 0.6:
            gens += [small_vec() for _ in range(rng.randint(1, 2))]
        rays = []
        for g in gens:
            if len(set(g)) == 1:
                rays.append(tuple(g))
            else:
                rays.extend(orbit_union([g], n).members)
        C = Cone(rays, n)
        if not is_pointed(C):
            return C


def suite_classification(seed: int = 0, trials: int = 200) -> SuiteResult:
    """Random non-pointed Sym(n)-invariant cones land in one of the five local
    types and equal the canonical cone of that type."""
    rng = random.Random(seed)
    res = SuiteResult("local classification totality", trials)
    for _ in range(trials):
        C = random_invariant_nonpointed(rng)
        try:
            tag = classify_local_cone(C)
        except Exception as exc:  # any error here is a violation
            res.fail((C.rays, repr(exc)))
            continue
        res.hits[tag] = res.hits.get(tag, 0) + 1
        if tag is LocalConeClass.POINTED or not equals(canonical_local_cone(tag, C.dim), C):
            res.fail((C.rays, tag))
    return res


# -- hull properties------------------------------------------------------------------------------


def suite_simplex_hull(seed: int = 0, trials: int = 500) -> SuiteResult:
    """Sorted points of [a,b]^n are convex combinations of I_n(a,b); others are not."""
    rng = random.Random(seed)
    res = SuiteResult("simplex hull", trials)
    for _ in range(trials):
        a = _rand_q(rng, -3, 3)
        b = a + _rand_q(rng, 0, 3)
        n = rng.randint(1, 5)
        verts = insertion_levels(a, b, n)
        w = sorted(a + (b - a) * Fraction(rng.randint(0, 8), 8) for _ in range(n))
        if not convex_membership(w, verts)[0]:
            res.fail(("inside rejected", a, b, w))
        # an unsorted or out-of-box point must be rejected
        bad = list(w)
        if n >= 2 and bad[0] != bad[-1]:
            bad[0], bad[-1] = bad[-1], bad[0]
        else:
            bad[0] = b + 1
        if convex_membership(bad, verts)[0]:
            res.fail(("outside accepted", a, b, bad))
    return res


def _random_sorted(rng, n, lo=-4, hi=4):
    return sorted(rng.randint(lo, hi) for _ in range(n))


def suite_insertion_hull(seed: int = 0, trials: int = 500) -> SuiteResult:
    """Members of O_{i,m}(u) are convex combinations of F_{i,m}(u)."""
    rng = random.Random(seed)
    res = SuiteResult("insertion hull", trials)
    for _ in range(trials):
        n = rng.randint(2, 4)
        u = _random_sorted(rng, n)
        i = rng.randint(1, n - 1)
        m = n + rng.randint(1, 3)
        lo, hi = u[i - 1], u[i]
        block = sorted(lo + (hi - lo) * Fraction(rng.randint(0, 6), 6) for _ in range(m - n))
        w = u[:i] + block + u[i:]
        if not ordered_insertion_member(u, i, w):
            res.fail(("membership", u, i, w))
        if not convex_membership(w, insertion_family(u, i, m))[0]:
            res.fail(("hull", u, i, w))
    return res


def suite_padding(seed: int = 0, trials: int = 500) -> SuiteResult:
    """<sigma(a), d> >= 0 for d in O_{i,m}(b) when a changes sign at i."""
    rng = random.Random(seed)
    res = SuiteResult("padding inequality", trials)
    done = 0
    while done < trials:
        n = rng.randint(2, 5)
        i = rng.randint(1, n - 1)
        a = sorted((rng.randint(0, 4) for _ in range(i)), reverse=True) + \
            sorted((rng.randint(-4, 0) for _ in range(n - i)), reverse=True)
        b = _random_sorted(rng, n)
        if _dot(a, b) < 0:
            continue
        done += 1
        m = n + rng.randint(1, 3)
        lo, hi = b[i - 1], b[i]
        block = sorted(Fraction(rng.randint(lo * 4, hi * 4), 4) for _ in range(m - n))
        d = b[:i] + block + b[i:]
        sa = apply_perm(_random_perm(rng, m), a + [0] * (m - n))
        if _dot(sa, d) < 0:
            res.fail((a, b, d, tuple(sa)))
    return res


def suite_rearrangement(seed: int = 0, trials: int = 500) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("rearrangement inequality", trials)
    for _ in range(trials):
        n = rng.randint(1, 7)
        a = sorted((_rand_q(rng, -5, 5) for _ in range(n)), reverse=True)
        b = sorted(_rand_q(rng, -5, 5) for _ in range(n))
        sa = apply_perm(_random_perm(rng, n), a)
        if _dot(sa, b) < _dot(a, b):
            res.fail((a, b, tuple(sa)))
    return res


# -- chain properties-----------------------------------------------------------------------------

DELETION_SPECS = (
    ChainSpec(3, ((-2, -1, 4), (-3, 1, 3))),
    ChainSpec(2, ((-1, 2),)),
    ChainSpec(2, ((1, -1), (1, 0))),
    ChainSpec(2, ((2, -3),)),
    ChainSpec(1, ((1,),)),
    ChainSpec(3, ((1, 1, -1),)),
)


@functools.lru_cache(maxsize=None)
def _dual_rays(spec: ChainSpec, n: int):
    return dual(local_cone(spec, n)).rays


def suite_coordinate_deletion(seed: int = 0, trials: int = 500) -> SuiteResult:
    """Deleting any coordinate of v in C_{n+1}^* gives an element of C_n^*."""
    rng = random.Random(seed)
    res = SuiteResult("coordinate deletion", trials)
    for _ in range(trials):
        spec = rng.choice(DELETION_SPECS)
        n = rng.randint(max(spec.r - 1, 1), 6)
        rays = _dual_rays(spec, n + 1)
        v = [0] * (n + 1)
        for r in rng.sample(rays, min(len(rays), rng.randint(1, 3))):
            c = rng.randint(1, 4)
            v = [x + c * y for x, y in zip(v, r)]
        i = rng.randint(0, n)
        vhat = v[:i] + v[i + 1:]
        if not contains(dual(local_cone(spec, n)), vhat):
            res.fail((spec, v, i + 1))
    return res


SUPPORT_SPECS = {
    1: (ChainSpec(1, ((1,),)), ChainSpec(1, ((-1,),)), ChainSpec(1, ((2,),))),
    2: (ChainSpec(2, ((-1, 2),)), ChainSpec(2, ((1, -1),)), ChainSpec(2, ((2, -3),)),
        ChainSpec(2, ((1, 1), (-1, 3)))),
}


def suite_support_reduction(seed: int = 0, trials: int = 500) -> SuiteResult:
    """At n >= 3p^2 every sampled u in C_n has a sign-compatible merge into C_{n-1}."""
    rng = random.Random(seed)
    res = SuiteResult("support reduction", trials)
    for t in range(trials):
        p = 1 if t % 2 == 0 else 2
        spec = rng.choice(SUPPORT_SPECS[p])
        n = 3 * p * p + (rng.randint(0, 2) if p == 1 else 0)
        u = [0] * n
        for _ in range(rng.randint(1, 4)):
            g = list(rng.choice(spec.nonzero)) + [0] * (n - spec.r)
            rng.shuffle(g)
            c = rng.randint(1, 3)
            u = [x + c * y for x, y in zip(u, g)]
        if not any(u):
            u = list(spec.nonzero[0]) + [0] * (n - spec.r)
        sigma = merge_condition(spec, u)
        if sigma is None:
            res.fail((spec, u))
            continue
        vals = [u[k - 1] for k in sigma.images]
        if vals[-1] * vals[-2] < 0 or not equivariant_contains(spec, apply_merge(u, sigma)):
            res.fail((spec, u, sigma.images))
    return res


EXCHANGE_SPECS = (
    ChainSpec(2, ((-1, 2),)),
    ChainSpec(2, ((-1, 3),)),
    ChainSpec(3, ((-2, -1, 4), (-3, 1, 3))),
    ChainSpec(2, ((1, 2),)),
)


def suite_interval_exchange(seed: int = 0, trials: int = 500) -> SuiteResult:
    """Replacing (u_{n-1}, u_n) by integers in the same interval with the same
    sum keeps a member of a symmetric normal monoid inside it."""
    rng = random.Random(seed)
    res = SuiteResult("interval exchange", trials)
    for _ in range(trials):
        spec = rng.choice(EXCHANGE_SPECS)
        n = rng.randint(spec.r, spec.r + 2)
        gens = orbit_union(spec.nonzero, n).members
        u = [0] * n
        for g in rng.sample(gens, min(len(gens), rng.randint(1, 4))):
            c = rng.randint(1, 3)
            u = [x + c * y for x, y in zip(u, g)]
        rng.shuffle(u)
        lo, hi = sorted((u[-2], u[-1]))
        x = rng.randint(lo, hi)
        v = u[:-2] + [x, lo + hi - x]
        C = local_cone(spec, n)
        if contains(C, u) and not contains(C, v):
            res.fail((spec, u, v))
    return res


MONOTONE_SPECS = (
    (ChainSpec(2, ((-1, 2),)), 6),
    (ChainSpec(2, ((-1, 3),)), 6),
    (ChainSpec(1, ((1,),)), 5),
    (ChainSpec(2, ((1, 2),)), 5),
    (ChainSpec(3, ((-1, 1, 1),)), 6),
)


@functools.lru_cache(maxsize=None)
def _monoid_index(spec: ChainSpec, top: int) -> int:
    rep = monoid_stability_index(spec, top - 1, window=1)
    return rep.empirical_index


def suite_monoid_norm(seed: int = 0, trials: int = 500) -> SuiteResult:
    """In the stabilized regime every element of H_{n+1} has norm <= ||H_n||."""
    rng = random.Random(seed)
    res = SuiteResult("monoid norm monotonicity", trials)
    for _ in range(trials):
        spec, top = rng.choice(MONOTONE_SPECS)
        m = _monoid_index(spec, top)
        n = rng.randint(max(m, 1), top - 1)
        Hn, Hn1 = level_hilbert_basis(spec, n), level_hilbert_basis(spec, n + 1)
        u = rng.choice(Hn1.elements)
        if sum(abs(x) for x in u) > Hn.norm:
            res.fail((spec, n, tuple(u)))
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "duality": suite_duality,
    "hilbert": suite_hilbert_oracle,
    "classification": suite_classification,
    "simplex_hull": suite_simplex_hull,
    "insertion_hull": suite_insertion_hull,
    "padding": suite_padding,
    "coordinate_deletion": suite_coordinate_deletion,
    "rearrangement": suite_rearrangement,
    "support_reduction": suite_support_reduction,
    "interval_exchange": suite_interval_exchange,
    "monoid_norm": suite_monoid_norm,
}

STRUCTURAL_SUITES = (
    "simplex_hull", "insertion_hull", "padding", "coordinate_deletion", "rearrangement",
    "support_reduction", "interval_exchange", "monoid_norm",
)


def run_suite(name: str, seed: int = 0, trials: int | None = None) -> SuiteResult:
    fn = SUITES[name]
    return fn(seed) if trials is None else fn(seed, trials)
