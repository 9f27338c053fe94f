"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run standalone with ``python tests/test_acceptance.py`` or through pytest,
which repeats the lines in its terminal summary.
"""

import sys
from contextlib import contextmanager
from fractions import Fraction
from itertools import combinations_with_replacement
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from conftest import MIXED, a_family, record_criterion  # noqa: E402
from symcones.equivariant import (  # noqa: E402
    ChainSpec,
    EventuallyConstantSeq,
    GlobalConeClass,
    GlobalMonoidClass,
    classify_global_cone,
    classify_global_monoid,
    equivariant_dual_generators,
    equivariant_hilbert_basis,
    global_dual_member,
    level_hilbert_basis,
    local_cone,
    monoid_stability_index,
    sym_closure_cone,
)
from symcones.exactmath import QVector, orbit_union  # noqa: E402
from symcones.polyhedra import dual, equals, minimal_generators, ordered_slice  # noqa: E402
from symcones.suites import STRUCTURAL_SUITES, run_suite  # noqa: E402

SEED = 0


@contextmanager
def criterion(k: int, what: str):
    try:
        yield
    except BaseException as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        line = f"FAIL criterion {k}: {what} -- {msg}"
        print(line)
        record_criterion(line)
        raise
    line = f"PASS criterion {k}: {what}"
    print(line)
    record_criterion(line)


def mixed_formula(n: int) -> set:
    out = {tuple([1] * n), tuple([5] + [6] * (n - 2) + [7])}
    out |= {tuple([3] * i + [4] * (n - i)) for i in range(1, n)}
    return out


def family_closed_form(a: int, n: int) -> set:
    seeds = [(1,)]
    for b in combinations_with_replacement(range(n - 1), a):
        v = [0] * (n - 1)
        for k in b:
            v[k] += 1
        seeds.append(tuple([-1] + v))
    return set(orbit_union(seeds, n))


def test_criterion_1_ordered_slice_base_set():
    with criterion(1, "extreme rays of the ordered slice of C_6^* for the mixed chain"):
        gens = minimal_generators(ordered_slice(dual(local_cone(MIXED, 6))))
        assert gens.pointed, gens.lineality
        got = set(gens.extreme)
        assert got == mixed_formula(6), sorted(got)
        assert len(got) == 7


def test_criterion_2_transfer_levels_7_and_8():
    with criterion(2, "transfer at n = 7, 8 matches the closed form and the direct dual"):
        for n in (7, 8):
            F = set(equivariant_dual_generators(MIXED, n))
            assert F == mixed_formula(n), (n, sorted(F))
            direct = dual(local_cone(MIXED, n))
            assert equals(sym_closure_cone(F, n), direct), n
            reduced = F - {tuple([1] * n)}
            assert equals(sym_closure_cone(reduced, n), direct), n


def test_criterion_3_family_hilbert_bases():
    with criterion(3, "closed-form Hilbert bases, index a+1 and norm a+1 for a = 2, 3"):
        for a in (2, 3):
            spec = a_family(a)
            for n in range(2, a + 4):
                H = level_hilbert_basis(spec, n)
                assert H.as_set() == family_closed_form(a, n), (a, n)
                assert H.norm == a + 1, (a, n, H.norm)
            rep = monoid_stability_index(spec, cap=a + 3)
            assert rep.empirical_index == a + 1, (a, rep)


def test_criterion_4_certified_gordan_at_r1():
    with criterion(4, "certified Gordan at r = 1 and routing of G = {(-1)}"):
        problems = []
        pos = equivariant_hilbert_basis(ChainSpec(1, ((1,),)), mode="certified")
        if pos.q != 3:
            problems.append(f"G={{(1)}}: q = {pos.q}, expected 3")
        if set(pos.representatives) != {QVector((1, 0, 0))}:
            problems.append(f"G={{(1)}}: representatives {pos.representatives}, expected {{e_1}}")
        neg = ChainSpec(1, ((-1,),))
        tag = classify_global_monoid(neg)
        if tag is not GlobalMonoidClass.M4:
            # cone(Sym(n)(-e_1)) is the nonpositive orthant, which is pointed,
            # so this chain is positive and never reaches the non-positive branch
            res = equivariant_hilbert_basis(neg, mode="certified")
            problems.append(
                f"G={{(-1)}}: classified {tag.value} (basis reps {[tuple(v) for v in res.representatives]}), "
                f"expected {GlobalMonoidClass.M4.value}")
        assert not problems, "; ".join(problems)


def test_criterion_5_duality_suite():
    with criterion(5, "duality involution and pairing on 200 random cones"):
        res = run_suite("duality", SEED, 200)
        assert res.ok and res.trials >= 200, res.line()


def test_criterion_6_hilbert_oracle_suite():
    with criterion(6, "Hilbert basis vs brute-force oracle on 50 random pointed cones"):
        res = run_suite("hilbert", SEED, 50)
        assert res.ok and res.trials >= 50, res.line()


def test_criterion_7_classification_totality():
    with criterion(7, "local classification totality and the four global tags"):
        res = run_suite("classification", SEED, 200)
        assert res.ok and res.trials >= 200, res.line()
        expected = {
            GlobalConeClass.C1: ChainSpec(1, ((1,), (-1,))),
            GlobalConeClass.C2: ChainSpec(2, ((1, -1),)),
            GlobalConeClass.C3: ChainSpec(2, ((1, -1), (1, 0))),
            GlobalConeClass.C4: ChainSpec(2, ((1, -1), (-1, 0))),
        }
        for tag, spec in expected.items():
            assert classify_global_cone(spec) is tag, (spec, tag)


def test_criterion_8_structural_suites():
    with criterion(8, "eight structural property suites, 500 trials each"):
        bad = []
        for name in STRUCTURAL_SUITES:
            res = run_suite(name, SEED, 500)
            print("   ", res.line())
            if not (res.ok and res.trials >= 500):
                bad.append(res.line())
        assert len(STRUCTURAL_SUITES) == 8
        assert not bad, bad


def test_criterion_9_global_dual_membership():
    with criterion(9, "worked global-dual sequences accepted, prefix-(1) tail-0 rejected"):
        accepted = [EventuallyConstantSeq((1,), 1), EventuallyConstantSeq((5, 6, 6, 6, 6, 7), 6)]
        for i in range(1, 6):
            u = (3,) * i + (4,) * (6 - i)
            for tail in (3, Fraction(7, 2), Fraction(10, 3), 4):
                accepted.append(EventuallyConstantSeq(u, tail))
        for w in accepted:
            v = global_dual_member(MIXED, w)
            assert v.member, (w, v)
        v = global_dual_member(MIXED, EventuallyConstantSeq((1,), 0))
        assert not v.member and v.violation is not None and v.min_pairing < 0
        # the placement really pairs negatively with the sequence
        w = [1] + [0] * (len(v.violation) - 1)
        assert sum(a * b for a, b in zip(v.violation, w)) == v.min_pairing
        assert sorted(x for x in v.violation if x) == sorted(x for x in v.generator if x)


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except BaseException:
                failed += 1
    sys.exit(1 if failed else 0)
