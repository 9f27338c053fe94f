"""Lattice points of rational cones: Hilbert bases, monoid membership, units.

The Hilbert basis pipeline is the classical one:

1. change coordinates so the cone is full-dimensional in a lattice Z^k
   (a basis of span(C) cap Z^n from a unimodular column reduction);
2. placing triangulation of the extreme rays in lexicographic order;
3. for each simplicial piece, enumerate the lattice points of its half-open
   fundamental parallelepiped via coset representatives of the ray lattice;
4. sieve the candidates by a positive grading: x is reducible iff x - h lies
   in the cone for some irreducible h of strictly smaller degree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .budget import Budget, BudgetExhausted, ensure
from .exactmath import QVector, nullspace, primitive_int, rank, solve_in_span
from .polyhedra import Cone, contains, dual, is_pointed, lineality, minimal_generators

IntVec = tuple[int, ...]


class NotPointed(ValueError):
    """Hilbert bases are only defined here for pointed cones."""


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


# -- integer linear algebra -----------------------------------------------------


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def hnf_rows(rows: Iterable[Sequence[int]]) -> list[IntVec]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Pivots are positive and entries above each pivot are reduced into
    [0, pivot).  Zero rows are dropped.
    """
    A = [list(map(int, r)) for r in rows]
    if not A:
        return []
    ncols = len(A[0])
    out: list[list[int]] = []
    pivots: list[int] = []
    for col in range(ncols):
        nz = [r for r in A if r[col] != 0]
        if not nz:
            continue
        rest = [r for r in A if r[col] == 0]
        piv = nz[0]
        for r in nz[1:]:
            g, x, y = _egcd(piv[col], r[col])
            a, b = piv[col] // g, r[col] // g
            new_piv = [x * p + y * q for p, q in zip(piv, r)]
            r2 = [a * q - b * p for p, q in zip(piv, r)]
            piv = new_piv
            if any(r2):
                rest.append(r2)
        if piv[col] < 0:
            piv = [-x for x in piv]
        for o in out:
            q = o[col] // piv[col]
            if q:
                o[:] = [x - q * y for x, y in zip(o, piv)]
        out.append(piv)
        pivots.append(col)
        A = rest
    return [tuple(r) for r in out]


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> list[IntVec]:
    """Lattice basis of {x in Z^ncols : r.x = 0 for all rows}, in HNF."""
    A = [list(map(int, r)) for r in rows]
    V = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]  # columns of V are V[.][j]
    c = 0
    for row in A:
        if c >= ncols:
            break
        for j in range(c + 1, ncols):
            a, b = row[c], row[j]
            if b == 0:
                continue
            g, x, y = _egcd(a, b)
            ag, bg = a // g, b // g
            for M in (A, V):
                for r in M:
                    pc, pj = r[c], r[j]
                    r[c], r[j] = x * pc + y * pj, -bg * pc + ag * pj
        if row[c] != 0:
            c += 1
    basis = [tuple(V[i][j] for i in range(ncols)) for j in range(c, ncols)]
    return hnf_rows(basis)


def _det_and_adjugate(R: Sequence[Sequence[int]]) -> tuple[int, list[list[int]]]:
    k = len(R)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(R)]
    det = Fraction(1)
    for col in range(k):
        piv = next(i for i in range(col, k) if aug[i][col] != 0)
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
            det = -det
        p = aug[col][col]
        det *= p
        aug[col] = [x / p for x in aug[col]]
        for i in range(k):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    d = int(det)
    adj = [[int(d * x) for x in row[k:]] for row in aug]
    return d, adj


# -- data types -----------------------------------------------------------------


@dataclass(frozen=True)
class HilbertBasis:
    dim: int
    elements: tuple[QVector, ...]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, u) -> bool:
        return tuple(u) in set(self.elements)

    @property
    def norm(self) -> int:
        """max l1 norm of the elements (0 for the empty basis)."""
        return max((sum(abs(x) for x in h) for h in self.elements), default=0)

    def as_set(self) -> frozenset:
        return frozenset(tuple(h) for h in self.elements)


@dataclass(frozen=True)
class MonoidSpec:
    dim: int
    generators: tuple[IntVec, ...]

    def __post_init__(self):
        gens = []
        for g in self.generators:
            g = tuple(g)
            if len(g) != self.dim:
                raise ValueError(f"generator {g} not of dim {self.dim}")
            if any(Fraction(x).denominator != 1 for x in g):
                raise ValueError(f"monoid generator {g} is not integral")
            gens.append(tuple(int(x) for x in g))
        object.__setattr__(self, "generators", tuple(sorted(set(gens))))

    def cone(self) -> Cone:
        return Cone(self.generators, self.dim)


class Decision(enum.Enum):
    YES = "yes"
    NO = "no"
    UNDECIDED = "undecided"


# -- Hilbert basis ----------------------------------------------------------------


def _placing_triangulation(rays: list[IntVec], k: int, budget: Budget) -> list[tuple[int, ...]]:
    """Simplices (as sorted index tuples into ``rays``) covering cone(rays)."""
    order = sorted(range(len(rays)), key=lambda i: rays[i])
    start: list[int] = []
    for i in order:
        if rank([rays[j] for j in start + [i]]) == len(start) + 1:
            start.append(i)
            if len(start) == k:
                break
    simplices = [tuple(sorted(start))]
    placed = list(start)
    normals: dict = {}

    def facet_normal(facet: tuple[int, ...], apex: int) -> IntVec:
        key = facet
        h = normals.get(key)
        if h is None:
            (h,) = nullspace([rays[j] for j in facet], k)
            normals[key] = h
        if _dot(h, rays[apex]) < 0:
            h = tuple(-x for x in h)
        return h

    for v in order:
        if v in start:
            continue
        new = []
        for S in simplices:
            for drop in S:
                F = tuple(j for j in S if j != drop)
                h = facet_normal(F, drop)
                if _dot(h, rays[v]) >= 0:
                    continue
                if all(_dot(h, rays[w]) >= 0 for w in placed):
                    new.append(tuple(sorted(F + (v,))))
        simplices.extend(new)
        placed.append(v)
        budget.check(len(simplices), "triangulation size")
    return simplices


def _parallelepiped_points(R: list[IntVec], budget: Budget) -> list[IntVec]:
    """Nonzero lattice points of the half-open fundamental parallelepiped of R."""
    k = len(R)
    d, adj = _det_and_adjugate(R)
    D = abs(d)
    if D == 1:
        return []
    budget.charge(D, "parallelepiped points")
    H = hnf_rows(R)
    diag = [H[i][i] for i in range(k)]
    sgn = 1 if d > 0 else -1
    out = []
    for y in product(*(range(h) for h in diag)):
        if not any(y):
            continue
        mu = [sgn * sum(y[i] * adj[i][j] for i in range(k)) % D for j in range(k)]
        x = tuple(sum(mu[j] * R[j][c] for j in range(k)) // D for c in range(k))
        if any(x):
            out.append(x)
    return out


def _lattice_chart(rays: list[IntVec], n: int) -> list[IntVec]:
    """A basis B of span(rays) cap Z^n (rows)."""
    if rank(rays) == n:
        return [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    return integer_kernel(nullspace(list(rays), n), n)


def _to_chart(x: Sequence, B: list[IntVec]) -> IntVec:
    c = solve_in_span(B, x)
    if c is None or any(q.denominator != 1 for q in c):
        raise ArithmeticError("vector outside the chart lattice")
    return tuple(int(q) for q in c)


def _from_chart(y: Sequence[int], B: list[IntVec]) -> IntVec:
    n = len(B[0])
    return tuple(sum(y[i] * B[i][j] for i in range(len(B))) for j in range(n))


def positive_grading(C: Cone) -> IntVec:
    """An integral linear form strictly positive on C minus the origin (C pointed)."""
    D = dual(C)
    g = [0] * C.dim
    for h in D.rays:
        g = [a + b for a, b in zip(g, h)]
    return tuple(g)


def hilbert_basis(C: Cone, budget: Budget | None = None) -> HilbertBasis:
    """Hilbert basis of the normal monoid C cap Z^dim for a pointed cone C."""
    budget = ensure(budget)
    n = C.dim
    if not C.rays:
        return HilbertBasis(n, ())
    if not is_pointed(C):
        raise NotPointed("cone is not pointed; use the non-pointed classification instead")
    ext = [tuple(int(x) for x in r) for r in minimal_generators(C, budget).extreme]
    B = _lattice_chart(ext, n)
    k = len(B)
    Y = sorted({primitive_int(_to_chart(r, B)) for r in ext})
    if k == 1:
        return HilbertBasis(n, (QVector(_from_chart(Y[0], B)),))

    simplices = _placing_triangulation(Y, k, budget)
    cands = set(Y)
    for S in simplices:
        cands.update(_parallelepiped_points([Y[i] for i in S], budget))

    chart_cone = Cone(Y, k)
    facets = chart_cone.hrep
    g = [0] * k
    for h in facets:
        g = [a + b for a, b in zip(g, h)]
    ordered = sorted(cands, key=lambda x: (_dot(g, x), x))
    irred: list[IntVec] = []
    for x in ordered:
        gx = _dot(g, x)
        reducible = False
        for h in irred:
            if _dot(g, h) >= gx:
                break
            diff = [a - b for a, b in zip(x, h)]
            if all(_dot(f, diff) >= 0 for f in facets):
                reducible = True
                break
        if not reducible:
            irred.append(x)
    elems = sorted(_from_chart(y, B) for y in irred)
    return HilbertBasis(n, tuple(QVector(e) for e in elems))


# -- monoids ------------------------------------------------------------------------


def _as_monoid(M) -> MonoidSpec:
    if isinstance(M, MonoidSpec):
        return M
    if isinstance(M, Cone):
        return MonoidSpec(M.dim, tuple(tuple(int(x) for x in h) for h in hilbert_basis(M)))
    raise TypeError(f"expected MonoidSpec or Cone, got {type(M).__name__}")


def in_lattice(generators: Sequence[Sequence[int]], u: Sequence[int]) -> bool:
    """u in the group Z-spanned by ``generators`` (echelon reduction)."""
    t = [int(x) for x in u]
    for row in hnf_rows(generators):
        p = next(i for i, x in enumerate(row) if x)
        if t[p] % row[p]:
            return False
        c = t[p] // row[p]
        t = [x - c * y for x, y in zip(t, row)]
    return not any(t)


def monoid_decide(M: MonoidSpec, u: Sequence, node_budget: int | None = 200_000) -> Decision:
    """Decide u in M by memoised branching over generator multiplicities.

    For a positive monoid a grading bounds the search and the answer is
    always YES or NO.  For non-positive monoids the search is bounded by
    ``node_budget`` total multiplicity moves and may end UNDECIDED.
    """
    u = tuple(int(x) for x in u)
    if len(u) != M.dim:
        raise ValueError("dimension mismatch")
    if any(Fraction(x).denominator != 1 for x in u):
        raise ValueError("monoid membership needs an integral vector")
    if not any(u):
        return Decision.YES
    gens = [a for a in M.generators if any(a)]
    if not gens:
        return Decision.NO
    C = Cone(gens, M.dim)
    if not contains(C, u) or not in_lattice(gens, u):
        return Decision.NO
    nodes = [0]

    if is_pointed(C):
        g = positive_grading(C)
        deg = [_dot(g, a) for a in gens]
        memo: dict = {}

        def reach(i: int, t: IntVec) -> bool:
            if not any(t):
                return True
            if i == len(gens):
                return False
            key = (i, t)
            if key in memo:
                return memo[key]
            nodes[0] += 1
            if node_budget is not None and nodes[0] > node_budget:
                raise BudgetExhausted("monoid membership search")
            gt = _dot(g, t)
            ok = reach(i + 1, t)
            if not ok and gt >= deg[i]:
                ok = reach(i, tuple(x - y for x, y in zip(t, gens[i])))
            memo[key] = ok
            return ok

        try:
            return Decision.YES if reach(0, u) else Decision.NO
        except BudgetExhausted:
            return Decision.UNDECIDED

    # non-positive: breadth-first over bounded total multiplicity
    frontier = {u}
    seen = {u}
    while frontier:
        nxt = set()
        for t in frontier:
            for a in gens:
                s = tuple(x - y for x, y in zip(t, a))
                if not any(s):
                    return Decision.YES
                if s in seen:
                    continue
                nodes[0] += 1
                if node_budget is not None and nodes[0] > node_budget:
                    return Decision.UNDECIDED
                seen.add(s)
                nxt.add(s)
        frontier = nxt
    return Decision.NO


def monoid_contains(M: MonoidSpec, u: Sequence, node_budget: int | None = 200_000) -> bool:
    """Boolean membership; raises BudgetExhausted when the search is undecided."""
    d = monoid_decide(M, u, node_budget)
    if d is Decision.UNDECIDED:
        raise BudgetExhausted("monoid membership undecided within node budget")
    return d is Decision.YES


def is_irreducible(u: Sequence, M) -> bool:
    """True iff u admits no decomposition v + w with v, w nonzero in M.

    For a cone, M is the normal monoid C cap Z^n and the search runs over
    lattice points p of C of smaller degree with u - p in C.  For a
    MonoidSpec it suffices to try subtracting each generator.
    """
    u = tuple(int(x) for x in u)
    if not any(u):
        raise ValueError("zero is not irreducible by convention")
    if isinstance(M, Cone):
        if not contains(M, u):
            raise ValueError(f"{u} is not in the monoid")
        if not is_pointed(M):
            raise NotPointed("irreducibility needs a positive monoid")
        g = positive_grading(M)
        gu = _dot(g, u)
        ext = minimal_generators(M).extreme
        # lattice points p of C with g.p <= g.u lie in the box spanned by the
        # rays rescaled to degree g.u
        lo, hi = [0] * M.dim, [0] * M.dim
        for r in ext:
            s = Fraction(gu, _dot(g, r))
            for i, x in enumerate(r):
                lo[i] = min(lo[i], s * x)
                hi[i] = max(hi[i], s * x)
        ranges = [range(int(Fraction(a).__floor__()), int(Fraction(b).__ceil__()) + 1) for a, b in zip(lo, hi)]
        for p in product(*ranges):
            if not any(p) or p == u:
                continue
            gp = _dot(g, p)
            if gp <= 0 or gp >= gu:
                continue
            if contains(M, p) and contains(M, [a - b for a, b in zip(u, p)]):
                return False
        return True
    M = _as_monoid(M)
    if not monoid_contains(M, u):
        raise ValueError(f"{u} is not in the monoid")
    for a in M.generators:
        if a == u:
            continue
        rest = tuple(x - y for x, y in zip(u, a))
        if any(rest) and monoid_contains(M, rest):
            return False
    return True


def units(M: MonoidSpec) -> list[QVector]:
    """Lattice basis of U(M) = {u in M : -u in M}.

    U(M) is the group generated by the generators that lie in the lineality
    space of cone(M): such an affine monoid has a linear space as its cone
    and is therefore a group.
    """
    C = M.cone()
    lin = lineality(C)
    if not lin:
        return []
    inside = [a for a in M.generators if solve_in_span(list(lin), a) is not None]
    return [QVector(r) for r in hnf_rows(inside)]


def is_positive(M: MonoidSpec) -> bool:
    return is_pointed(M.cone())
