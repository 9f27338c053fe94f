"""Exact computations with Sym(n)-invariant rational cones and monoids."""

from .budget import Budget, BudgetExhausted
from .equivariant import (
    ChainSpec,
    EventuallyConstantSeq,
    GlobalConeClass,
    GlobalMonoidClass,
    LocalConeClass,
    LocalMonoidClass,
    RestrictedDual,
    StabilizationReport,
    classify_global_cone,
    classify_global_monoid,
    classify_local_cone,
    classify_local_monoid,
    classify_restricted_dual,
    equivariant_dual_generators,
    equivariant_hilbert_basis,
    global_dual_member,
    local_cone,
    monoid_stability_index,
    stability_index,
)
from .exactmath import Permutation, QVector, orbit
from .latticepoints import HilbertBasis, MonoidSpec, hilbert_basis
from .polyhedra import Cone, contains, dual, equals, lineality

__version__ = "0.1.0"

__all__ = [
    "Budget", "BudgetExhausted", "ChainSpec", "Cone", "EventuallyConstantSeq",
    "GlobalConeClass", "GlobalMonoidClass", "HilbertBasis", "LocalConeClass",
    "LocalMonoidClass", "MonoidSpec", "Permutation", "QVector", "RestrictedDual",
    "StabilizationReport", "classify_global_cone", "classify_global_monoid",
    "classify_local_cone", "classify_local_monoid", "classify_restricted_dual",
    "contains", "dual", "equals", "equivariant_dual_generators",
    "equivariant_hilbert_basis", "global_dual_member", "hilbert_basis", "lineality",
    "local_cone", "monoid_stability_index", "orbit", "stability_index",
]
