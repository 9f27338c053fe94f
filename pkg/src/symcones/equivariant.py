"""Symmetric chains of cones and monoids.

A :class:`ChainSpec` ``(r, G)`` defines ``C_n = {0}`` for ``n < r`` and
``C_n = cone(Sym(n)(G))`` otherwise.  This module provides the level cones,
the insertion families that transport a generating set of the ordered slice
of ``C_b^*`` to every level ``n > b``, stabilization detection for cone and
monoid chains, the equivariant Hilbert basis construction, the finite
classifications of non-pointed symmetric cones and non-positive normal
monoids, and exact membership tests for eventually-constant dual sequences.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .budget import Budget, ensure
from .exactmath import (
    Permutation,
    QVector,
    apply_perm,
    as_rational,
    orbit_union,
    pad,
    primitive_int,
)
from .latticepoints import HilbertBasis, MonoidSpec, hilbert_basis
from .polyhedra import (
    Cone,
    contains,
    coordinate_slice,
    dual,
    equals,
    lineality,
    minimal_generators,
    ordered_slice,
)


class PreconditionError(ValueError):
    """Input violates an operation's documented precondition."""


class NotInvariant(PreconditionError):
    pass


class ClassificationError(RuntimeError):
    """A non-pointed symmetric cone matched none of the five local types."""


# -- chain specs ------------------------------------------------------------------


@dataclass(frozen=True)
class ChainSpec:
    r: int
    generators: tuple[tuple, ...]

    def __post_init__(self):
        if int(self.r) < 1:
            raise PreconditionError("r must be a positive integer")
        gens = []
        for row in self.generators:
            row = tuple(as_rational(x) for x in row)
            if len(row) != self.r:
                raise PreconditionError(f"generator {row} has length {len(row)}, expected {self.r}")
            gens.append(row)
        object.__setattr__(self, "r", int(self.r))
        object.__setattr__(self, "generators", tuple(gens))

    @property
    def nonzero(self) -> tuple[tuple, ...]:
        return tuple(g for g in self.generators if any(x != 0 for x in g))

    @property
    def is_zero(self) -> bool:
        return not self.nonzero

    @property
    def is_integral(self) -> bool:
        return all(isinstance(x, int) for g in self.generators for x in g)

    def canonical_alias(self) -> tuple[QVector, ...]:
        """Generators sorted non-increasingly, de-duplicated, lex ordered."""
        return tuple(sorted({QVector(sorted(g, reverse=True)) for g in self.nonzero}))

    @property
    def support_bound(self) -> int:
        return max((sum(1 for x in g if x != 0) for g in self.nonzero), default=0)

    @classmethod
    def from_json(cls, doc: dict) -> "ChainSpec":
        return cls(int(doc["r"]), tuple(tuple(row) for row in doc["generators"]))


@dataclass(frozen=True)
class EventuallyConstantSeq:
    prefix: tuple
    tail: int | Fraction

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(as_rational(x) for x in self.prefix))
        object.__setattr__(self, "tail", as_rational(self.tail))

    def __getitem__(self, i: int):
        """1-based coordinate access."""
        return self.prefix[i - 1] if i <= len(self.prefix) else self.tail

    def truncate(self, n: int) -> QVector:
        return QVector([self[i] for i in range(1, n + 1)])


class LocalConeClass(enum.Enum):
    POINTED = "Pointed"
    D1 = "D1_full"
    D2 = "D2_sumzero"
    D3 = "D3_sumnonneg"
    D4 = "D4_sumnonpos"
    D5 = "D5_diagonal"


class GlobalConeClass(enum.Enum):
    POINTED = "Pointed"
    C1 = "C1_full"
    C2 = "C2_sumzero"
    C3 = "C3_sumnonneg"
    C4 = "C4_sumnonpos"


class LocalMonoidClass(enum.Enum):
    POSITIVE = "Positive"
    N1 = "N1_full"
    N2 = "N2_sumzero"
    N3 = "N3_sumnonneg"
    N4 = "N4_sumnonpos"
    N5 = "N5_diagonal"


class GlobalMonoidClass(enum.Enum):
    POSITIVE = "Positive"
    M1 = "M1_full"
    M2 = "M2_sumzero"
    M3 = "M3_sumnonneg"
    M4 = "M4_sumnonpos"


class RestrictedDual(enum.Enum):
    ZERO = "zero"
    NONNEG = "nonneg_orthant"
    NONPOS = "nonpos_orthant"
    FULL = "full_space"


@dataclass(frozen=True)
class StabilizationReport:
    empirical_index: int | None
    verified_window: tuple[int, int] | None
    certified: bool
    certificate_details: str
    certified_bound: int | None = None

    def to_json(self) -> dict:
        return {
            "empirical_index": self.empirical_index if self.empirical_index is not None else "not found up to cap",
            "verified_window": list(self.verified_window) if self.verified_window else None,
            "certified": self.certified,
            "certificate_details": self.certificate_details,
            "certified_bound": self.certified_bound,
        }


# -- level cones -------------------------------------------------------------------


@functools.lru_cache(maxsize=256)
def local_cone(spec: ChainSpec, n: int) -> Cone:
    """C_n of the canonical chain (zero cone below level r)."""
    if n < 1:
        raise PreconditionError("level must be >= 1")
    if n < spec.r or spec.is_zero:
        return Cone.zero(n)
    return Cone(orbit_union(spec.nonzero, n).members, n)


def sym_closure_cone(rays: Iterable[Sequence], n: int) -> Cone:
    """cone(Sym(n)(rays)) with rays zero-padded to R^n."""
    rays = [r for r in rays if any(x != 0 for x in r)]
    if not rays:
        return Cone.zero(n)
    return Cone(orbit_union(rays, n).members, n)


# -- insertion sets ---------------------------------------------------------------


def _is_sorted(u: Sequence) -> bool:
    return all(a <= b for a, b in zip(u, u[1:]))


def insertion_levels(a, b, n: int) -> list[QVector]:
    """I_n(a, b): the non-decreasing vectors of length n with entries in {a, b}."""
    a, b = as_rational(a), as_rational(b)
    if a > b:
        raise PreconditionError(f"insertion interval [{a}, {b}] is empty")
    if n < 1:
        raise PreconditionError("n must be positive")
    if a == b:
        return [QVector([a] * n)]
    return [QVector([a] * (n - j) + [b] * j) for j in range(n + 1)]


def insertion_family(u: Sequence, i: int, m: int) -> list[QVector]:
    """F_{i,m}(u): splice I_{m-n}(u_i, u_{i+1}) between positions i and i+1."""
    u = QVector(u)
    n = len(u)
    if not _is_sorted(u):
        raise PreconditionError("insertion needs a non-decreasing vector")
    if not 1 <= i <= n - 1:
        raise PreconditionError(f"insertion index {i} outside [1, {n - 1}]")
    if m <= n:
        raise PreconditionError(f"target length {m} must exceed {n}")
    head, tail = list(u[:i]), list(u[i:])
    return [QVector(head + list(blk) + tail) for blk in insertion_levels(u[i - 1], u[i], m - n)]


def ordered_insertion_member(u: Sequence, i: int, w: Sequence) -> bool:
    """w in O_{i,m}(u): u with a non-decreasing block from [u_i, u_{i+1}] spliced after i."""
    n, m = len(u), len(w)
    if not _is_sorted(u):
        raise PreconditionError("insertion needs a non-decreasing vector")
    if m < n or not 1 <= i <= n - 1:
        return False
    k = m - n
    if tuple(w[:i]) != tuple(u[:i]) or tuple(w[i + k:]) != tuple(u[i:]):
        return False
    block = list(w[i:i + k])
    lo, hi = u[i - 1], u[i]
    return _is_sorted(block) and all(lo <= x <= hi for x in block)


# -- equivariant Minkowski-Weyl transfer ------------------------------------------------


def refined_params(spec: ChainSpec) -> tuple[int, int, int]:
    """(s, t, p): largest count of positive / trailing negative entries over the
    non-increasingly sorted generators, and p = max(s + t, r + 1)."""
    if not spec.generators:
        raise PreconditionError("refined parameters need at least one generator")
    s = t = 0
    for g in spec.generators:
        g = sorted(g, reverse=True)
        s = max(s, sum(1 for x in g if x > 0))
        t = max(t, sum(1 for x in g if x < 0))
    return s, t, max(s + t, spec.r + 1)


@dataclass(frozen=True)
class TransferPlan:
    base_level: int
    index: int
    base: tuple[QVector, ...]


@functools.lru_cache(maxsize=64)
def transfer_plan(spec: ChainSpec, refined: bool = False) -> TransferPlan:
    """Base level b, insertion index i and the base set F_b (extreme rays of O(C_b^*))."""
    if refined:
        s, t, p = refined_params(spec)
        b, i = p, max(s, 1)
    else:
        b, i = 2 * spec.r, spec.r
    gens = minimal_generators(ordered_slice(dual(local_cone(spec, b))))
    return TransferPlan(b, i, gens.all())


def equivariant_dual_generators(spec: ChainSpec, n: int, refined: bool = False) -> tuple[QVector, ...]:
    """F_n: a set whose Sym(n)-orbit generates C_n^*.

    Canonical chains stabilize at r by construction, so the transfer's
    stabilization hypothesis holds.  At n equal to the base level the base
    set itself is returned.
    """
    plan = transfer_plan(spec, refined)
    if n < plan.base_level:
        raise PreconditionError(f"level {n} is below the transfer base level {plan.base_level}")
    if n == plan.base_level:
        return plan.base
    out = set()
    for u in plan.base:
        if len(set(u)) == 1:
            out.add(QVector([u[0]] * n))
            continue
        for w in insertion_family(u, plan.index, n):
            out.add(QVector(primitive_int(w)))
    return tuple(sorted(out))


def equivariant_contains(spec: ChainSpec, u: Sequence, refined: bool = False) -> bool:
    """u in C_n, decided against F_n: u in C_n iff <u, sigma f> >= 0 for every
    f in F_n and sigma, and by rearrangement the minimum over sigma pairs u
    sorted non-increasingly with f sorted non-decreasingly."""
    n = len(u)
    plan = transfer_plan(spec, refined)
    if n <= plan.base_level:
        return contains(local_cone(spec, n), u)
    ud = sorted(u, reverse=True)
    for f in equivariant_dual_generators(spec, n, refined):
        if sum(a * b for a, b in zip(ud, sorted(f))) < 0:
            return False
    return True


# -- stabilization ------------------------------------------------------------------


def _cone_chain_holds(levels, m: int, n: int) -> bool:
    return equals(levels(n), sym_closure_cone(levels(m).rays, n))


def stability_index(chain, cap: int, window: int = 3) -> StabilizationReport:
    """Smallest m <= cap with C_n = cone(Sym(n)(C_m)) for m <= n <= max(m, r) + window.

    ``chain`` is a ChainSpec or an explicit list of cones (entry k is C_{k+1}).
    An explicit chain is checked against every supplied later level, which
    is all the evidence there is, so its report is never certified.
    """
    if isinstance(chain, ChainSpec):
        spec = chain
        if cap < spec.r and not spec.is_zero:
            raise PreconditionError("cap must be at least r")

        def levels(k):
            return local_cone(spec, k)

        top = None
    else:
        cones = list(chain)
        levels = lambda k: cones[k - 1]  # noqa: E731
        top = len(cones)
        cap = min(cap, top)
    for m in range(1, cap + 1):
        # levels below r are all zero, so a window must reach past r to mean anything
        hi = max(m, chain.r) + window if top is None else top
        if all(_cone_chain_holds(levels, m, n) for n in range(m + 1, hi + 1)):
            if isinstance(chain, ChainSpec):
                return StabilizationReport(
                    m, (m, hi), True,
                    f"canonical chain generated at level r={chain.r}: C_n = cone(Sym(n)(G)) "
                    f"stabilizes at r by construction; index {m} confirmed for n in [{m}, {hi}]")
            return StabilizationReport(m, (m, hi), False,
                                       f"empirical only: verified for n in [{m}, {hi}]")
    return StabilizationReport(None, (1, cap), False, f"no index found up to cap {cap}")


def truncation_consistent(spec: ChainSpec, n: int, window: int = 2) -> bool:
    """C_{n+k} cap R^n == C_n for k = 1..window."""
    Cn = local_cone(spec, n)
    return all(equals(coordinate_slice(local_cone(spec, n + k), n), Cn) for k in range(1, window + 1))


def merge_condition(spec: ChainSpec, u: Sequence, check_membership: bool = True) -> Permutation | None:
    """A permutation putting two entries of u with nonnegative product last so
    that merging them gives an element of C_n (u lives at level n + 1)."""
    u = QVector(u)
    N = len(u)
    n = N - 1
    if n < 1:
        raise PreconditionError("merging needs a vector of length >= 2")
    if check_membership and not equivariant_contains(spec, u):
        raise PreconditionError(f"{tuple(u)} is not in C_{N}")
    for i, j in combinations(range(N), 2):
        if u[i] * u[j] < 0:
            continue
        rest = [k for k in range(N) if k != i and k != j]
        merged = [u[k] for k in rest] + [u[i] + u[j]]
        if equivariant_contains(spec, merged):
            return Permutation(tuple(k + 1 for k in rest) + (i + 1, j + 1))
    return None


def apply_merge(u: Sequence, sigma: Permutation) -> QVector:
    """(u_{s(1)}, ..., u_{s(n-1)}, u_{s(n)} + u_{s(n+1)})."""
    idx = sigma.images
    vals = [u[k - 1] for k in idx]
    return QVector(vals[:-2] + [vals[-2] + vals[-1]])


# -- equivariant Gordan ------------------------------------------------------------------


@functools.lru_cache(maxsize=128)
def level_hilbert_basis(spec: ChainSpec, n: int) -> HilbertBasis:
    return hilbert_basis(local_cone(spec, n))


def _level_hilbert(spec: ChainSpec, n: int, budget: Budget | None) -> HilbertBasis:
    if budget is None or budget.limit is None:
        return level_hilbert_basis(spec, n)
    return hilbert_basis(local_cone(spec, n), budget)


def _reps(vectors: Iterable[Sequence], n: int) -> set:
    return {tuple(sorted(pad(v, n))) for v in vectors}


def orbit_representatives(vectors: Iterable[Sequence]) -> tuple[QVector, ...]:
    """Non-increasing representatives, one per Sym orbit, lex sorted."""
    return tuple(sorted({QVector(sorted(v, reverse=True)) for v in vectors}))


@dataclass(frozen=True)
class EquivariantHilbertResult:
    level: int | None
    basis: HilbertBasis | None
    representatives: tuple[QVector, ...]
    report: StabilizationReport
    monoid_class: GlobalMonoidClass
    q: int | None = None


NONPOSITIVE_GENERATORS = {
    GlobalMonoidClass.M1: ((1,), (-1,)),
    GlobalMonoidClass.M2: ((1, -1), (-1, 1)),
    GlobalMonoidClass.M3: ((1, 0), (1, -1), (-1, 1)),
    GlobalMonoidClass.M4: ((-1, 0), (1, -1), (-1, 1)),
}


def _hilbert_window_holds(spec, m, n, budget) -> bool:
    Hm = _level_hilbert(spec, m, budget)
    Hn = _level_hilbert(spec, n, budget)
    return _reps(Hn, n) <= _reps(Hm, n)


def monoid_stability_index(spec: ChainSpec, cap: int, window: int = 3,
                           certify: bool = False, budget: Budget | None = None) -> StabilizationReport:
    """Smallest m <= cap with H_n contained in Sym(n)(H_m) for m < n <= max(m, r) + window."""
    if not spec.is_integral:
        raise PreconditionError("monoid chains need integral generators")
    q = certified_level(spec, budget)[0] if certify else None
    for m in range(1, cap + 1):
        hi = max(m, spec.r) + window
        if all(_hilbert_window_holds(spec, m, n, budget) for n in range(m + 1, hi + 1)):
            detail = f"empirical: Sym(n)(H_{m}) contains H_n for n in [{m}, {hi}]"
            if q is not None:
                detail += f"; certified upper bound q = {q}"
            return StabilizationReport(m, (m, hi), q is not None, detail, q)
    return StabilizationReport(None, (1, cap), q is not None, f"no index found up to cap {cap}", q)


def certified_level(spec: ChainSpec, budget: Budget | None = None) -> tuple[int, HilbertBasis]:
    """q = max(3r^2, ||H_{3r^2}||) and H_q.  Guarded by ``budget``."""
    budget = ensure(budget)
    p = 3 * spec.r * spec.r
    budget.check(p, "certified level dimension")
    Hp = hilbert_basis(local_cone(spec, p), budget)
    q = max(p, Hp.norm)
    if q == p:
        return q, Hp
    budget.check(q, "certified level dimension")
    return q, hilbert_basis(local_cone(spec, q), budget)


def equivariant_hilbert_basis(spec: ChainSpec, mode: str = "empirical", cap: int = 8,
                              window: int = 3, budget: Budget | None = None) -> EquivariantHilbertResult:
    """Equivariant generating set of the monoid chain M_n = C_n cap Z^n.

    Non-positive chains are answered by their classification type, whose
    generators are listed in NONPOSITIVE_GENERATORS.
    """
    if not spec.is_integral:
        raise PreconditionError("monoid chains need integral generators")
    cls = classify_global_monoid(spec)
    if cls is not GlobalMonoidClass.POSITIVE:
        gens = NONPOSITIVE_GENERATORS[cls]
        report = StabilizationReport(None, None, True, f"non-positive monoid of type {cls.value}")
        return EquivariantHilbertResult(None, None, tuple(QVector(g) for g in gens), report, cls)
    if mode == "certified":
        q, Hq = certified_level(spec, budget)
        report = StabilizationReport(
            None, None, True,
            f"q = max(3r^2, ||H_(3r^2)||) = {q}; H_q is an equivariant generating set", q)
        return EquivariantHilbertResult(q, Hq, orbit_representatives(Hq), report, cls, q)
    if mode != "empirical":
        raise PreconditionError(f"unknown mode {mode!r}")
    report = monoid_stability_index(spec, cap, window, budget=budget)
    if report.empirical_index is None:
        return EquivariantHilbertResult(None, None, (), report, cls)
    m = report.empirical_index
    Hm = _level_hilbert(spec, m, budget)
    return EquivariantHilbertResult(m, Hm, orbit_representatives(Hm), report, cls)


# -- classification ----------------------------------------------------------------------


def _is_sym_invariant(C: Cone) -> bool:
    n = C.dim
    if n == 1:
        return True
    gens = [Permutation.transposition(1, 2, n), Permutation(tuple(list(range(2, n + 1)) + [1]))]
    return all(contains(C, apply_perm(s, r)) for s in gens for r in C.rays)


def canonical_local_cone(tag: LocalConeClass, n: int) -> Cone:
    """The cone named by a local tag, from explicit generators."""
    e = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    diffs = [tuple(e[i][k] - e[i + 1][k] for k in range(n)) for i in range(n - 1)]
    pm = lambda vs: list(vs) + [tuple(-x for x in v) for v in vs]  # noqa: E731
    if tag is LocalConeClass.D1:
        return Cone(pm(e), n)
    if tag is LocalConeClass.D2:
        return Cone(pm(diffs), n)
    if tag is LocalConeClass.D3:
        return Cone(pm(diffs) + [e[0]], n)
    if tag is LocalConeClass.D4:
        return Cone(pm(diffs) + [tuple(-x for x in e[0])], n)
    if tag is LocalConeClass.D5:
        return Cone(pm([tuple([1] * n)]), n)
    raise ValueError("pointed cones have no canonical form")


def classify_local_cone(C: Cone) -> LocalConeClass:
    if not _is_sym_invariant(C):
        raise NotInvariant("cone is not Sym(n)-invariant")
    n = C.dim
    lin = lineality(C)
    if not lin:
        return LocalConeClass.POINTED
    if len(lin) == n:
        return LocalConeClass.D1
    if len(lin) == 1 and len(set(lin[0])) == 1:
        if all(len(set(r)) == 1 for r in C.rays):
            return LocalConeClass.D5
        raise ClassificationError("lineality is the diagonal but the cone is larger")
    if len(lin) == n - 1 and all(sum(v) == 0 for v in lin):
        sums = [sum(r) for r in C.rays]
        pos, neg = any(s > 0 for s in sums), any(s < 0 for s in sums)
        if pos and neg:
            raise ClassificationError("rays of both signs of s with lineality {s=0}")
        if pos:
            return LocalConeClass.D3
        if neg:
            return LocalConeClass.D4
        return LocalConeClass.D2
    raise ClassificationError(f"non-pointed symmetric cone with unexpected lineality {lin}")


def classify_global_cone(spec: ChainSpec) -> GlobalConeClass:
    if spec.is_zero:
        return GlobalConeClass.POINTED
    N = max(2 * spec.r, 2)
    C = local_cone(spec, N)
    d = pad((1, -1), N)
    if not (contains(C, d) and contains(C, -d)):
        return GlobalConeClass.POINTED
    e1 = QVector.unit(1, N)
    plus, minus = contains(C, e1), contains(C, -e1)
    if plus and minus:
        return GlobalConeClass.C1
    if plus:
        return GlobalConeClass.C3
    if minus:
        return GlobalConeClass.C4
    return GlobalConeClass.C2


_LOCAL_TO_MONOID = {
    LocalConeClass.POINTED: LocalMonoidClass.POSITIVE,
    LocalConeClass.D1: LocalMonoidClass.N1,
    LocalConeClass.D2: LocalMonoidClass.N2,
    LocalConeClass.D3: LocalMonoidClass.N3,
    LocalConeClass.D4: LocalMonoidClass.N4,
    LocalConeClass.D5: LocalMonoidClass.N5,
}

_GLOBAL_TO_MONOID = {
    GlobalConeClass.POINTED: GlobalMonoidClass.POSITIVE,
    GlobalConeClass.C1: GlobalMonoidClass.M1,
    GlobalConeClass.C2: GlobalMonoidClass.M2,
    GlobalConeClass.C3: GlobalMonoidClass.M3,
    GlobalConeClass.C4: GlobalMonoidClass.M4,
}


def classify_local_monoid(M: MonoidSpec, n: int | None = None) -> LocalMonoidClass:
    """Type of the normal monoid cone(M) cap Z^n (positivity iff pointedness)."""
    if n is not None and n != M.dim:
        raise PreconditionError(f"monoid lives in dimension {M.dim}, not {n}")
    return _LOCAL_TO_MONOID[classify_local_cone(M.cone())]


def classify_global_monoid(spec: ChainSpec) -> GlobalMonoidClass:
    return _GLOBAL_TO_MONOID[classify_global_cone(spec)]


def classify_restricted_dual(spec: ChainSpec) -> RestrictedDual:
    gens = spec.nonzero
    if not gens:
        return RestrictedDual.FULL
    has_pos = any(x > 0 for g in gens for x in g)
    has_neg = any(x < 0 for g in gens for x in g)
    if has_pos and has_neg:
        return RestrictedDual.ZERO
    return RestrictedDual.NONNEG if has_pos else RestrictedDual.NONPOS


# -- global dual ---------------------------------------------------------------------


@dataclass(frozen=True)
class GlobalDualVerdict:
    member: bool
    min_pairing: int | Fraction | None
    violation: QVector | None = None
    generator: tuple | None = None

    def __bool__(self) -> bool:
        return self.member


def _min_placement(entries: list, w: EventuallyConstantSeq):
    """Minimum of <sigma(g), w> over placements of the nonzero entries of g.

    Entries sent into prefix positions are paired with those positions by
    opposite sorting; the rest sit on tail coordinates.
    """
    k = len(w.prefix)
    best = None
    for j in range(0, min(len(entries), k) + 1):
        for A in combinations(range(len(entries)), j):
            placed = sorted(entries[a] for a in A)
            rest = [entries[a] for a in range(len(entries)) if a not in A]
            rest_val = sum(rest) * w.tail
            for P in combinations(range(k), j):
                pos = sorted(P, key=lambda p: w.prefix[p], reverse=True)
                val = rest_val + sum(x * w.prefix[p] for x, p in zip(placed, pos))
                if best is None or val < best[0]:
                    best = (val, list(zip(pos, placed)), rest)
    return best


def global_dual_member(spec: ChainSpec, w: EventuallyConstantSeq) -> GlobalDualVerdict:
    """Is w in C^* for the global cone C = cone(Sym(G))?"""
    worst = None
    for g in spec.nonzero:
        entries = [x for x in g if x != 0]
        val, placement, rest = _min_placement(entries, w)
        if worst is None or val < worst[0]:
            worst = (val, placement, rest, g)
    if worst is None:
        return GlobalDualVerdict(True, None)
    val, placement, rest, g = worst
    if val >= 0:
        return GlobalDualVerdict(True, as_rational(val))
    k = len(w.prefix)
    vec = [0] * (k + len(rest))
    for p, x in placement:
        vec[p] = x
    for t, x in enumerate(rest):
        vec[k + t] = x
    return GlobalDualVerdict(False, as_rational(val), QVector(vec), g)


def interval_dual_sequence(spec: ChainSpec, u: Sequence, block: Sequence = (), tail=None) -> EventuallyConstantSeq:
    """(u, v) with u in O(C_2r^*) and v non-decreasing in [u_r, u_{r+1}],
    v given as a finite block followed by a constant tail."""
    r = spec.r
    u = QVector(u)
    if len(u) != 2 * r:
        raise PreconditionError(f"u must have length 2r = {2 * r}")
    if not _is_sorted(u):
        raise PreconditionError("u must be non-decreasing")
    if not contains(dual(local_cone(spec, 2 * r)), u):
        raise PreconditionError("u is not in the dual cone at level 2r")
    lo, hi = u[r - 1], u[r]
    tail = lo if tail is None and lo == hi else tail
    if tail is None:
        raise PreconditionError("a tail value in [u_r, u_{r+1}] is required")
    block = [as_rational(x) for x in block]
    tail = as_rational(tail)
    if not (_is_sorted(block) and all(lo <= x <= hi for x in block)):
        raise PreconditionError("block must be non-decreasing inside [u_r, u_{r+1}]")
    if not lo <= tail <= hi or (block and block[-1] > tail):
        raise PreconditionError("tail must lie in [u_r, u_{r+1}] and dominate the block")
    seq = EventuallyConstantSeq(tuple(u) + tuple(block), tail)
    verdict = global_dual_member(spec, seq)
    if not verdict.member:
        raise AssertionError(f"constructed sequence is not dual: {verdict}")
    return seq


def nonnegative_next_base(F_r: Iterable[Sequence], r: int) -> tuple[QVector, ...]:
    """For a nonnegative chain: {(u, u_r) : |supp u| >= 2} plus e_{r+1}."""
    out = {QVector(list(u) + [u[-1]]) for u in F_r if sum(1 for x in u if x != 0) >= 2}
    out.add(QVector.unit(r + 1, r + 1))
    return tuple(sorted(out))
