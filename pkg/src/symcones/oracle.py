"""Slow, obviously-correct verifiers.

Nothing here calls the double description, triangulation or orbit code it
audits.  Linear algebra goes through sympy, orbits through
``itertools.permutations``, and lattice points through a plain l1-ball scan.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Iterable, Sequence

import sympy

from .lp import convex_combination


@dataclass(frozen=True)
class OracleConfig:
    norm_bound: int = 6
    sample_count: int = 200
    seed: int = 0
    orbit_cutoff: int = 6

    def __post_init__(self):
        if min(self.norm_bound, self.sample_count, self.orbit_cutoff) <= 0 or self.seed < 0:
            raise ValueError("oracle configuration values must be positive")
        if self.orbit_cutoff > 6:
            raise ValueError("exhaustive orbit enumeration is capped at n = 6")


# -- facets by brute force ------------------------------------------------------------


def _int_vec(v) -> tuple[int, ...]:
    den = sympy.ilcm(1, 1, *[sympy.Rational(x).q for x in v])
    ints = [int(sympy.Rational(x) * den) for x in v]
    g = 0
    for a in ints:
        g = sympy.igcd(g, a)
    return tuple(a // g for a in ints) if g else tuple(ints)


def brute_facets(rays: Sequence[Sequence[int]], dim: int):
    """(equations W, inequalities H) with cone(rays) = {W x = 0, H x >= 0}.

    Every (k-1)-subset of rays with full rank spans a candidate hyperplane
    inside span(rays); it is a facet iff all rays lie on one side.
    """
    rays = [tuple(int(x) for x in r) for r in rays if any(r)]
    if not rays:
        eqs = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
        return eqs, []
    R = sympy.Matrix(rays)
    k = R.rank()
    W = [_int_vec(list(v)) for v in R.nullspace()]
    H = set()
    for sub in combinations(rays, k - 1):
        M = sympy.Matrix(list(sub) + W) if (sub or W) else sympy.zeros(1, dim)
        if sub and sympy.Matrix(list(sub)).rank() != k - 1:
            continue
        ns = M.nullspace()
        if len(ns) != 1:
            continue
        h = _int_vec(list(ns[0]))
        vals = [sum(a * b for a, b in zip(h, r)) for r in rays]
        if all(v >= 0 for v in vals):
            H.add(h)
        elif all(v <= 0 for v in vals):
            H.add(tuple(-a for a in h))
    return W, sorted(H)


def _in_cone(x, W, H) -> bool:
    return all(sum(a * b for a, b in zip(w, x)) == 0 for w in W) and all(
        sum(a * b for a, b in zip(h, x)) >= 0 for h in H)


def l1_ball(dim: int, bound: int):
    """All integer vectors of R^dim with l1 norm <= bound."""
    if dim == 0:
        yield ()
        return
    for a in range(-bound, bound + 1):
        for rest in l1_ball(dim - 1, bound - abs(a)):
            yield (a,) + rest


def brute_hilbert(rays: Sequence[Sequence[int]], dim: int, cfg: OracleConfig) -> list[tuple[int, ...]]:
    """Irreducible lattice points of a pointed cone with l1 norm <= norm_bound.

    Equals the Hilbert basis whenever the basis has norm <= norm_bound.
    """
    W, H = brute_facets(rays, dim)
    pts = [x for x in l1_ball(dim, cfg.norm_bound) if any(x) and _in_cone(x, W, H)]
    grade = [sum(col) for col in zip(*H)] if H else [0] * dim
    # fallback grading for one-dimensional cones: the ray itself
    if not any(grade) and rays:
        grade = list(next(r for r in rays if any(r)))

    def deg(x):
        return sum(a * b for a, b in zip(grade, x))

    pts.sort(key=lambda x: (deg(x), x))
    irred: list[tuple[int, ...]] = []
    for x in pts:
        dx = deg(x)
        if not any(deg(h) < dx and _in_cone([a - b for a, b in zip(x, h)], W, H) for h in irred):
            irred.append(x)
    return sorted(irred)


# -- pairing audits -----------------------------------------------------------------------


@dataclass(frozen=True)
class AuditResult:
    ok: bool
    checked: int
    counterexample: tuple | None = None


def _perm_images(u: Sequence, n: int, rng: random.Random | None, samples: int):
    u = list(u) + [0] * (n - len(u))
    if rng is None:
        yield from sorted(set(permutations(u)))
    else:
        for _ in range(samples):
            v = u[:]
            rng.shuffle(v)
            yield tuple(v)


def pairing_audit(primal_gens: Iterable[Sequence], dual_candidates: Iterable[Sequence],
                  cfg: OracleConfig, n: int | None = None) -> AuditResult:
    """Check <sigma(u), v> >= 0 for all generators u, candidates v, sigma in Sym(n).

    Exhaustive for n <= orbit_cutoff, otherwise seeded sampling.  Pairing
    against all of Sym(n) applied to u covers Sym(n) on both sides.
    """
    primal_gens, dual_candidates = list(primal_gens), list(dual_candidates)
    if n is None:
        n = max([len(u) for u in primal_gens] + [len(v) for v in dual_candidates] + [1])
    rng = None if n <= cfg.orbit_cutoff else random.Random(cfg.seed)
    checked = 0
    for v in dual_candidates:
        v = list(v) + [0] * (n - len(v))
        for u in primal_gens:
            for su in _perm_images(u, n, rng, cfg.sample_count):
                checked += 1
                val = sum(Fraction(a) * Fraction(b) for a, b in zip(su, v))
                if val < 0:
                    return AuditResult(False, checked, (tuple(su), tuple(v), val))
    return AuditResult(True, checked)


def convex_membership(point: Sequence, vertex_set: Sequence[Sequence]):
    """(True, weights) if point is a convex combination of vertex_set, else (False, None).

    Weights come from the exact LP and are re-verified here entry by entry.
    """
    lam = convex_combination(list(vertex_set), list(point))
    if lam is None:
        return False, None
    assert all(x >= 0 for x in lam) and sum(lam) == 1
    for i, p in enumerate(point):
        assert sum(l * Fraction(v[i]) for l, v in zip(lam, vertex_set)) == Fraction(p)
    return True, lam


# -- restricted dual probe -------------------------------------------------------------------


@dataclass(frozen=True)
class ProbeResult:
    observed: str
    survivors: int
    refuted: int
    counterexample: tuple | None = None


def restricted_dual_probe(generators: Sequence[Sequence], r: int, cfg: OracleConfig,
                          extra: int = 2, support: int = 2, entry_bound: int = 2) -> ProbeResult:
    """Pair small-support integer candidates against orbits of the generators.

    The observed tag is read off the set of surviving candidates: all of
    them, exactly the nonnegative ones, exactly the nonpositive ones, or
    none.  Any other survivor pattern is reported with a counterexample.
    """
    n = r + extra
    gens = [tuple(g) for g in generators if any(x != 0 for x in g)]
    cands = []
    for S in combinations(range(n), support):
        for vals in product(range(-entry_bound, entry_bound + 1), repeat=support):
            if not any(vals):
                continue
            v = [0] * n
            for i, x in zip(S, vals):
                v[i] = x
            cands.append(tuple(v))
    cands = sorted(set(cands))
    surv = [v for v in cands if pairing_audit(gens, [v], cfg, n).ok] if gens else cands
    nonneg = [v for v in cands if all(x >= 0 for x in v)]
    nonpos = [v for v in cands if all(x <= 0 for x in v)]
    if surv == cands:
        tag = "full_space"
    elif surv == nonneg:
        tag = "nonneg_orthant"
    elif surv == nonpos:
        tag = "nonpos_orthant"
    elif not surv:
        tag = "zero"
    else:
        odd = next(v for v in surv if v not in nonneg and v not in nonpos) if any(
            v not in nonneg and v not in nonpos for v in surv) else surv[0]
        return ProbeResult("inconsistent", len(surv), len(cands) - len(surv), odd)
    return ProbeResult(tag, len(surv), len(cands) - len(surv))
