"""Exact rational vectors, permutations and symmetric-group orbits.

Every vector in this package is a :class:`QVector`: an immutable tuple of
exact rationals.  Integral entries are stored as plain ``int`` and all other
entries as reduced :class:`fractions.Fraction`, so integer-only computations
never pay for rational arithmetic.  Coordinates are 1-based in every public
interface (supports, permutation images) and 0-based only inside Python
indexing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import factorial, gcd, lcm
from numbers import Rational
from typing import Iterable, Iterator, Sequence


class DimensionMismatch(ValueError):
    pass


class NotTruncatable(ValueError):
    pass


def as_rational(x) -> int | Fraction:
    """Coerce ``x`` to an exact rational, collapsing integral values to ``int``.

    Strings of the form ``"p/q"`` are accepted.  Floats are rejected because
    they silently carry rounding error.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        raise TypeError(f"refusing inexact float entry {x!r}")
    if isinstance(x, (Fraction, Rational)):
        q = Fraction(x)
    elif isinstance(x, str):
        q = Fraction(x.strip())
    else:
        raise TypeError(f"cannot interpret {x!r} as a rational")
    return q.numerator if q.denominator == 1 else q


class QVector(tuple):
    """Dense exact-rational vector with an explicit ambient dimension."""

    __slots__ = ()

    def __new__(cls, entries: Iterable = ()):
        if isinstance(entries, QVector):
            return entries
        vals = tuple(as_rational(x) for x in entries)
        if not vals:
            raise ValueError("QVector needs dim >= 1")
        return super().__new__(cls, vals)

    @classmethod
    def zeros(cls, n: int) -> "QVector":
        return cls([0] * n)

    @classmethod
    def unit(cls, i: int, n: int) -> "QVector":
        """The standard basis vector e_i (1-based) of R^n."""
        v = [0] * n
        v[i - 1] = 1
        return cls(v)

    @classmethod
    def ones(cls, n: int) -> "QVector":
        return cls([1] * n)

    @property
    def dim(self) -> int:
        return len(self)

    def _check(self, other) -> "QVector":
        other = QVector(other)
        if len(other) != len(self):
            raise DimensionMismatch(f"dims {len(self)} and {len(other)} differ")
        return other

    def __add__(self, other) -> "QVector":
        other = self._check(other)
        return QVector(a + b for a, b in zip(self, other))

    def __sub__(self, other) -> "QVector":
        other = self._check(other)
        return QVector(a - b for a, b in zip(self, other))

    def __neg__(self) -> "QVector":
        return QVector(-a for a in self)

    def __mul__(self, scalar) -> "QVector":
        if isinstance(scalar, tuple):
            return NotImplemented
        c = as_rational(scalar)
        return QVector(c * a for a in self)

    __rmul__ = __mul__

    def dot(self, other) -> int | Fraction:
        other = self._check(other)
        return as_rational(sum(a * b for a, b in zip(self, other)))

    def is_zero(self) -> bool:
        return not any(self)

    def is_integral(self) -> bool:
        return all(isinstance(a, int) for a in self)

    def __repr__(self) -> str:
        return "QVector(" + ", ".join(str(a) for a in self) + ")"


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise DimensionMismatch(f"dims {len(u)} and {len(v)} differ")
    return sum(a * b for a, b in zip(u, v))


def coordinate_sum(u: Sequence):
    return as_rational(sum(u))


def l1_norm(u: Sequence):
    return as_rational(sum(abs(a) for a in u))


def support(u: Sequence) -> frozenset[int]:
    """1-based indices of the nonzero entries of ``u``."""
    return frozenset(i + 1 for i, a in enumerate(u) if a != 0)


def sorted_rep(u: Sequence, direction: str = "non-decreasing") -> QVector:
    if direction in ("non-decreasing", "asc", "increasing"):
        return QVector(sorted(u))
    if direction in ("non-increasing", "desc", "decreasing"):
        return QVector(sorted(u, reverse=True))
    raise ValueError(f"unknown sort direction {direction!r}")


def pad(u: Sequence, n: int) -> QVector:
    if n < len(u):
        raise DimensionMismatch(f"cannot pad dim {len(u)} down to {n}")
    return QVector(list(u) + [0] * (n - len(u)))


def truncate(u: Sequence, n: int) -> QVector:
    if n < 1:
        raise ValueError("target dimension must be positive")
    if any(a != 0 for a in u[n:]):
        raise NotTruncatable(f"entries beyond coordinate {n} are nonzero")
    if n > len(u):
        return pad(u, n)
    return QVector(u[:n])


def normalize_primitive(u: Sequence) -> QVector:
    """The positive multiple of ``u`` with coprime integer entries."""
    return QVector(primitive_int(u))


def primitive_int(u: Sequence) -> tuple[int, ...]:
    """Like :func:`normalize_primitive` but returns a plain ``int`` tuple."""
    den = 1
    for a in u:
        if not isinstance(a, int):
            den = lcm(den, Fraction(a).denominator)
    if den != 1:
        ints = [int(a * den) for a in u]
    else:
        ints = [int(a) for a in u]
    g = reduce(gcd, ints, 0)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(a // g for a in ints)


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[i-1]`` is sigma(i)."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(i) for i in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"{self.images!r} is not a permutation of 1..{len(imgs)}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, i: int, j: int, n: int) -> "Permutation":
        imgs = list(range(1, n + 1))
        imgs[i - 1], imgs[j - 1] = j, i
        return cls(tuple(imgs))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, u: Sequence) -> QVector:
        return apply_perm(self, u)

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: ``(self * other)(i) = self(other(i))``."""
        if other.n != self.n:
            raise DimensionMismatch("permutations act on different sets")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))


def apply_perm(sigma: Permutation, u: Sequence) -> QVector:
    """sigma(u)_i = u_{sigma^-1(i)}, equivalently sigma(e_i) = e_{sigma(i)}."""
    if sigma.n != len(u):
        raise DimensionMismatch(f"permutation of {sigma.n} letters on a dim-{len(u)} vector")
    out = [0] * len(u)
    for i, j in enumerate(sigma.images):
        out[j - 1] = u[i]
    return QVector(out)


def multiset_permutations(items: Sequence) -> Iterator[tuple]:
    """Distinct permutations of ``items`` in lexicographic order.

    Standard next-permutation successor on the sorted multiset, so repeated
    values are never expanded into n! raw arrangements.
    """
    a = sorted(items)
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def orbit_size(u: Sequence, n: int | None = None) -> int:
    """n! / prod(mult(c)!) for the zero-padded vector."""
    vals = list(u) + [0] * ((n or len(u)) - len(u))
    counts: dict = {}
    for a in vals:
        counts[a] = counts.get(a, 0) + 1
    size = factorial(len(vals))
    for c in counts.values():
        size //= factorial(c)
    return size


@dataclass(frozen=True)
class OrbitSet:
    n: int
    members: tuple[QVector, ...]
    _index: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", frozenset(self.members))

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, u) -> bool:
        return tuple(u) in self._index


def orbit(u: Sequence, n: int | None = None) -> OrbitSet:
    """Sym(n)-orbit of ``u`` zero-padded to dimension ``n``."""
    n = len(u) if n is None else n
    v = pad(u, n)
    return OrbitSet(n, tuple(QVector(p) for p in multiset_permutations(v)))


def orbit_union(vectors: Iterable[Sequence], n: int) -> OrbitSet:
    seen: set = set()
    for u in vectors:
        seen.update(multiset_permutations(pad(u, n)))
    return OrbitSet(n, tuple(QVector(p) for p in sorted(seen)))


# -- small exact linear algebra ------------------------------------------------


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        piv = next((i for i in range(row, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        p = m[row][col]
        m[row] = [x / p for x in m[row]]
        for i in range(len(m)):
            if i != row and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    return m[:row], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1]) if rows else 0


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[tuple[int, ...]]:
    """Primitive integer basis of {x : r.x = 0 for every row r}, in RREF order."""
    if not rows:
        return [tuple(1 if j == i else 0 for j in range(ncols)) for i in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r, pc in zip(red, pivots):
            x[pc] = -r[f]
        basis.append(primitive_int(x))
    return basis


def canonical_basis(vectors: Sequence[Sequence], ncols: int) -> list[tuple[int, ...]]:
    """Deterministic primitive basis of span(vectors): the RREF rows, scaled."""
    if not vectors:
        return []
    red, _ = rref(vectors)
    return [primitive_int(r) for r in red]


def solve_in_span(basis: Sequence[Sequence], target: Sequence) -> list[Fraction] | None:
    """Coefficients c with sum c_i basis_i == target, or None if not in span."""
    k = len(basis)
    if k == 0:
        return [] if all(t == 0 for t in target) else None
    n = len(target)
    # columns are basis vectors; augmented system
    aug = [[Fraction(basis[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(n)]
    red, pivots = rref(aug)
    if k in pivots:
        return None
    coeffs = [Fraction(0)] * k
    for r, pc in zip(red, pivots):
        coeffs[pc] = r[k]
    return coeffs
