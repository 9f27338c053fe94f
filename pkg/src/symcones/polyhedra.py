"""Rational polyhedral cones: duality, intersection, membership, lineality.

Cones are stored by primitive integer generators.  The H-representation (a
generating set of the dual cone) is computed on first use by the double
description method and cached.  All output vector sets are lexicographically
sorted tuples of primitive integer vectors, so two runs over the same input
produce identical results.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .budget import Budget, ensure
from .exactmath import (
    DimensionMismatch,
    QVector,
    canonical_basis,
    nullspace,
    primitive_int,
    rref,
)
from .lp import cone_combination

IntVec = tuple[int, ...]


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _prim(v) -> IntVec:
    return primitive_int(v)


# -- double description ----------------------------------------------------------


def _rank_at_least(rows: list[IntVec], target: int) -> bool:
    """Fraction-free elimination; stops as soon as ``target`` is reached."""
    if target <= 0:
        return True
    basis: list[tuple[int, list[int]]] = []  # (pivot col, row)
    for r in rows:
        v = list(r)
        for pc, b in basis:
            if v[pc]:
                f, g = b[pc], v[pc]
                v = [f * x - g * y for x, y in zip(v, b)]
        pc = next((i for i, x in enumerate(v) if x), None)
        if pc is None:
            continue
        basis.append((pc, v))
        if len(basis) >= target:
            return True
    return False


def double_description(
    constraints: Sequence[Sequence[int]],
    dim: int,
    budget: Budget | None = None,
    adjacency: str = "rank",
) -> tuple[list[IntVec], list[IntVec]]:
    """Generators of ``{x in R^dim : a.x >= 0 for every a in constraints}``.

    Returns ``(lineality_basis, extreme_rays)``; the rays are extreme modulo
    the lineality space.  The seed is the whole space, carried as a
    lineality basis of unit vectors (the 2*dim signed unit rays).  Constraints
    are inserted in the given order.

    ``adjacency`` selects the adjacency test between a positive and a
    negative ray: ``"rank"`` (common tight constraints have rank
    dim - lin - 2) or ``"combinatorial"`` (no third ray is tight on all their
    common constraints).  Both are exact; the rank test is always preceded by
    the cheap combinatorial filter.
    """
    budget = ensure(budget)
    cons = [tuple(int(x) for x in a) for a in constraints]
    for a in cons:
        if len(a) != dim:
            raise DimensionMismatch(f"constraint of dim {len(a)} in R^{dim}")
    lin: list[IntVec] = [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]
    rays: list[IntVec] = []
    zsets: list[int] = []

    for j, a in enumerate(cons):
        if not any(a):
            continue
        bit = 1 << j
        dots = [_dot(a, l) for l in lin]
        k = next((i for i, d in enumerate(dots) if d != 0), None)
        if k is not None:
            l0, d0 = lin[k], dots[k]
            if d0 < 0:
                l0, d0 = tuple(-x for x in l0), -d0
            new_lin = []
            for i, (l, dl) in enumerate(zip(lin, dots)):
                if i == k:
                    continue
                new_lin.append(l if dl == 0 else _prim([d0 * x - dl * y for x, y in zip(l, l0)]))
            new_rays = []
            for r in rays:
                dr = _dot(a, r)
                new_rays.append(r if dr == 0 else _prim([d0 * x - dr * y for x, y in zip(r, l0)]))
            zsets = [z | bit for z in zsets]
            new_rays.append(l0)
            zsets.append(bit - 1)
            lin, rays = new_lin, new_rays
            continue

        vals = [_dot(a, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zero = [i for i, v in enumerate(vals) if v == 0]
        new_rays = [rays[i] for i in pos] + [rays[i] for i in zero]
        new_z = [zsets[i] for i in pos] + [zsets[i] | bit for i in zero]
        need = dim - len(lin) - 2
        if pos and neg:
            all_z = zsets
            for p in pos:
                zp = zsets[p]
                rp, vp = rays[p], vals[p]
                for q in neg:
                    z = zp & zsets[q]
                    if z.bit_count() < need:
                        continue
                    # combinatorial filter: no other ray tight on all of z
                    blocked = False
                    for i, zi in enumerate(all_z):
                        if i != p and i != q and z & zi == z:
                            blocked = True
                            break
                    if blocked:
                        continue
                    if adjacency == "rank":
                        rows = [cons[i] for i in _bits(z)]
                        if not _rank_at_least(rows, need):
                            continue
                    rq, vq = rays[q], vals[q]
                    w = _prim([vp * x - vq * y for x, y in zip(rq, rp)])
                    new_rays.append(w)
                    new_z.append(z | bit)
                    budget.charge(1, "double description rays")
        rays, zsets = new_rays, new_z
        budget.check(len(rays), "double description ray count")
    return lin, rays


def _bits(z: int):
    i = 0
    while z:
        if z & 1:
            yield i
        z >>= 1
        i += 1


def _project_off(vectors: list[IntVec], basis: list[IntVec]) -> list[IntVec]:
    """Orthogonal projection onto span(basis)^perp, primitivised."""
    if not basis:
        return list(vectors)
    k = len(basis)
    gram = [[Fraction(_dot(basis[i], basis[j])) for j in range(k)] for i in range(k)]
    out = []
    for v in vectors:
        rhs = [_dot(b, v) for b in basis]
        aug = [gram[i] + [Fraction(rhs[i])] for i in range(k)]
        red, _ = rref(aug)
        coeff = [r[k] for r in red]
        w = [Fraction(x) for x in v]
        for c, b in zip(coeff, basis):
            if c:
                w = [x - c * y for x, y in zip(w, b)]
        if any(w):
            out.append(_prim(w))
    return out


def _canonical_generators(lin: list[IntVec], rays: list[IntVec], dim: int):
    lin_b = canonical_basis(lin, dim)
    proj = sorted(set(_project_off(rays, lin_b)))
    return lin_b, proj


# -- cones -------------------------------------------------------------------------


@dataclass(frozen=True)
class MembershipWitness:
    terms: tuple[tuple[QVector, Fraction], ...]

    def total(self, dim: int) -> QVector:
        acc = [Fraction(0)] * dim
        for ray, lam in self.terms:
            acc = [a + lam * x for a, x in zip(acc, ray)]
        return QVector(acc)


class MinimalGenerators(NamedTuple):
    extreme: tuple[QVector, ...]
    lineality: tuple[QVector, ...]

    @property
    def pointed(self) -> bool:
        return not self.lineality

    def all(self) -> tuple[QVector, ...]:
        out = set(self.extreme)
        for l in self.lineality:
            out.add(l)
            out.add(-l)
        return tuple(sorted(out))


class Cone:
    """Rational polyhedral cone in R^dim given by generators.

    ``hrep`` is any finite generating set of the dual cone; when it is not
    supplied it is computed lazily (thread-safe, once).
    """

    def __init__(self, rays: Iterable[Sequence] = (), dim: int | None = None,
                 hrep: Iterable[Sequence] | None = None, budget: Budget | None = None):
        prim = set()
        for r in rays:
            r = tuple(r)
            if dim is None:
                dim = len(r)
            elif len(r) != dim:
                raise DimensionMismatch(f"ray of dim {len(r)} in a dim-{dim} cone")
            if any(x != 0 for x in r):
                prim.add(_prim(r))
        if dim is None:
            raise ValueError("an empty cone needs an explicit dim")
        self.dim = dim
        self.rays: tuple[IntVec, ...] = tuple(sorted(prim))
        self._hrep = None if hrep is None else tuple(sorted({_prim(h) for h in hrep if any(h)}))
        self._lineality = None
        self._lock = threading.Lock()
        self._budget = budget

    # constructors
    @classmethod
    def zero(cls, n: int) -> "Cone":
        return cls((), n)

    @classmethod
    def full_space(cls, n: int) -> "Cone":
        units = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        return cls(units + [tuple(-x for x in u) for u in units], n, hrep=())

    @classmethod
    def orthant(cls, n: int, sign: int = 1) -> "Cone":
        units = [tuple(sign if j == i else 0 for j in range(n)) for i in range(n)]
        return cls(units, n, hrep=units)

    @classmethod
    def from_inequalities(cls, normals: Iterable[Sequence], dim: int,
                          budget: Budget | None = None) -> "Cone":
        """The cone {x : h.x >= 0 for all h in normals}."""
        normals = [_prim(h) for h in normals if any(h)]
        lin, rays = double_description(sorted(set(normals)), dim, budget)
        lin_b, proj = _canonical_generators(lin, rays, dim)
        gens = list(proj) + lin_b + [tuple(-x for x in l) for l in lin_b]
        return cls(gens, dim, hrep=normals)

    # cached H-representation
    @property
    def hrep(self) -> tuple[IntVec, ...]:
        if self._hrep is None:
            with self._lock:
                if self._hrep is None:
                    self._hrep = dual(self, budget=self._budget).rays
        return self._hrep

    def has_hrep(self) -> bool:
        return self._hrep is not None

    def __contains__(self, u) -> bool:
        return contains(self, u)

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        return equals(self, other)

    __hash__ = None

    def __repr__(self) -> str:
        return f"Cone(dim={self.dim}, rays={list(self.rays)})"

    def vectors(self) -> tuple[QVector, ...]:
        return tuple(QVector(r) for r in self.rays)


def dual(C: Cone, budget: Budget | None = None) -> Cone:
    """Dual cone in the same ambient space, by double description.

    Generators of ``C`` are inserted in lexicographic order.  The result's
    rays are canonical: a reduced-echelon lineality basis (with both signs)
    plus extreme rays projected orthogonally off the lineality space.
    """
    lin, rays = double_description(list(C.rays), C.dim, budget or C._budget)
    lin_b, proj = _canonical_generators(lin, rays, C.dim)
    gens = proj + lin_b + [tuple(-x for x in l) for l in lin_b]
    return Cone(gens, C.dim, hrep=C.rays)


def double_dual_check(C: Cone) -> bool:
    return equals(dual(dual(C)), C)


def contains(C: Cone, u: Sequence) -> bool:
    if len(u) != C.dim:
        raise DimensionMismatch(f"vector of dim {len(u)} vs cone of dim {C.dim}")
    return all(_dot(h, u) >= 0 for h in C.hrep)


def membership_witness(C: Cone, u: Sequence) -> MembershipWitness | None:
    """Exact nonnegative combination of at most dim rays reproducing ``u``."""
    if len(u) != C.dim:
        raise DimensionMismatch(f"vector of dim {len(u)} vs cone of dim {C.dim}")
    lam = cone_combination(list(C.rays), list(u))
    if lam is None:
        return None
    terms = tuple((QVector(r), c) for r, c in zip(C.rays, lam) if c != 0)
    return MembershipWitness(terms)


def intersect(C: Cone, D: Cone, budget: Budget | None = None) -> Cone:
    if C.dim != D.dim:
        raise DimensionMismatch("cones live in different dimensions")
    return Cone.from_inequalities(set(C.hrep) | set(D.hrep), C.dim, budget)


def order_cone(n: int) -> Cone:
    """{x : x_1 <= x_2 <= ... <= x_n}."""
    normals = []
    for i in range(n - 1):
        h = [0] * n
        h[i], h[i + 1] = -1, 1
        normals.append(tuple(h))
    return Cone.from_inequalities(normals, n)


def ordered_slice(C: Cone, budget: Budget | None = None) -> Cone:
    return intersect(C, order_cone(C.dim), budget)


def coordinate_slice(C: Cone, n: int, budget: Budget | None = None) -> Cone:
    """C intersected with R^n (later coordinates zero), as a cone in R^n."""
    N = C.dim
    if n > N:
        raise DimensionMismatch(f"cannot slice R^{N} down to R^{n}")
    eqs = []
    for j in range(n, N):
        e = [0] * N
        e[j] = 1
        eqs.append(tuple(e))
        eqs.append(tuple(-x for x in e))
    S = Cone.from_inequalities(set(C.hrep) | set(eqs), N, budget)
    return Cone([r[:n] for r in S.rays], n)


def lineality(C: Cone) -> tuple[QVector, ...]:
    """Canonical basis of lin(C) = {u in C : -u in C}."""
    if C._lineality is None:
        basis = nullspace(list(C.hrep), C.dim) if C.hrep else nullspace([], C.dim)
        C._lineality = tuple(QVector(b) for b in canonical_basis(basis, C.dim))
    return C._lineality


def is_pointed(C: Cone) -> bool:
    return not lineality(C)


def is_subcone(C: Cone, D: Cone) -> bool:
    return all(contains(D, r) for r in C.rays)


def equals(C: Cone, D: Cone) -> bool:
    if C.dim != D.dim:
        raise DimensionMismatch("cones live in different dimensions")
    return is_subcone(C, D) and is_subcone(D, C)


def minimal_generators(C: Cone, budget: Budget | None = None) -> MinimalGenerators:
    """Extreme rays (modulo lineality) plus a canonical lineality basis."""
    if not C.rays:
        return MinimalGenerators((), ())
    lin, rays = double_description(list(C.hrep), C.dim, budget)
    lin_b, proj = _canonical_generators(lin, rays, C.dim)
    return MinimalGenerators(tuple(QVector(r) for r in proj), tuple(QVector(l) for l in lin_b))


def cone_of(vectors: Iterable[Sequence], dim: int | None = None) -> Cone:
    return Cone(vectors, dim)
