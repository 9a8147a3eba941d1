import random

import pytest

from filterlab.errors import ImproperFilter, Unsatisfiable
from filterlab.filters import (
    CellUltrafilter,
    FilterPresentation,
    FinitePowerset,
    PrincipalUltrafilter,
    Symbolic,
    all_subsets,
    assignment_from_ultrafilter,
    brute_force_sat,
    compactness_solve,
    extend_ultrafilter_finite,
    extend_ultrafilter_symbolic,
    find_cell,
    is_proper,
    ultrafilter_violations,
)
from filterlab.proplogic import Atom, Not, Or, evaluate, iota, random_theory
from filterlab.setcore import (
    BaseDomain,
    Complement,
    FamilySpec,
    FiniteSet,
    GroundPoint,
    Intersect,
    Union,
    eval_setexpr,
    indep_member,
)
from filterlab.setcore import Gen as G

from oracles import is_ultrafilter, to_tuple, truth_table_sat

FAM2 = FamilySpec(BaseDomain(2, 3), (FiniteSet((0,)), FiniteSet((1,))))


def finite(n, *gens, width=3):
    return FilterPresentation(FinitePowerset(n), gens, width)


class TestProper:
    def test_finite(self):
        r = is_proper(finite(3, {0, 1}, {1, 2}))
        assert r.proper and r.witness == 1
        assert not is_proper(finite(3, {0}, {1, 2})).proper

    def test_symbolic_clash(self):
        F = FilterPresentation(Symbolic(FAM2), (Intersect((G(0),)), Complement(G(0))), 3)
        assert not is_proper(F).proper

    def test_symbolic_witness(self):
        F = FilterPresentation(Symbolic(FAM2), (G(0), Complement(G(1))), 3)
        r = is_proper(F)
        assert r.proper and eval_setexpr(G(0), r.witness, FAM2)

    def test_flagged(self):
        assert finite(2, set()).flagged_improper
        with pytest.raises(ValueError):
            finite(2)


class TestExtendFinite:
    def test_examples(self):
        assert extend_ultrafilter_finite(finite(3, {0, 1}, {1, 2})) == PrincipalUltrafilter(1)
        assert extend_ultrafilter_finite(finite(3, {2})) == PrincipalUltrafilter(2)

    def test_supersets_of_zero(self):
        gens = [X for X in all_subsets(4) if 0 in X]
        U = extend_ultrafilter_finite(finite(4, *gens, width=5))
        assert U.point == 0
        assert all(U.contains(X) == (0 in X) for X in all_subsets(4))

    def test_improper(self):
        with pytest.raises(ImproperFilter):
            extend_ultrafilter_finite(finite(3, {0}, {1, 2}))

    def test_exhaustive_ultra(self):
        rng = random.Random(5)
        for n in range(1, 5):
            for _ in range(20):
                core = {rng.randrange(n)}
                gens = [core | {x for x in range(n) if rng.random() < 0.5} for _ in range(3)]
                F = finite(n, *gens, width=4)
                U = extend_ultrafilter_finite(F)
                members = U.members(n)
                assert not ultrafilter_violations(members, n, 4, F.generators)
                assert is_ultrafilter(members, n, 4)


class TestSymbolic:
    def test_examples(self):
        U = extend_ultrafilter_symbolic(FilterPresentation(Symbolic(FAM2), (G(0), Complement(G(1))), 3))
        assert U.sign_map == {0: 1, 1: 0}
        assert indep_member(U.witness, FAM2.generators[0])
        one = FamilySpec(BaseDomain(2, 3), (FiniteSet((0,)),))
        assert extend_ultrafilter_symbolic(FilterPresentation(Symbolic(one), (G(0),), 3)).sign_map == {0: 1}
        U = extend_ultrafilter_symbolic(FilterPresentation(Symbolic(FAM2), (Union((G(0), G(1))), Complement(G(0))), 3))
        assert U.sign_map == {0: 0, 1: 1}

    def test_improper(self):
        with pytest.raises(ImproperFilter):
            extend_ultrafilter_symbolic(FilterPresentation(Symbolic(FAM2), (G(0), Complement(G(0))), 3))

    def test_find_cell_backtracks(self):
        cons = [Union((G(0), G(1))), Union((Complement(G(0)), G(2))), Complement(G(2))]
        assert find_cell(cons) == {0: 0, 1: 1, 2: 0}
        assert find_cell([G(0), Union((Complement(G(0)), G(1))), Complement(G(1))]) is None

    def test_lazy_extension_to_new_expressions(self):
        U = extend_ultrafilter_symbolic(FilterPresentation(Symbolic(FAM2), (G(0),), 3))
        e = Union((G(1), Complement(G(1))))
        assert U.contains(e) and not U.contains(Complement(e))


class TestAssignment:
    def test_examples(self):
        U = CellUltrafilter(((0, 1), (1, 0)), GroundPoint.make({0, 1}, [{0}]), FAM2)
        assert assignment_from_ultrafilter(U, FAM2) == {0: 1, 1: 0}
        omega = FamilySpec(BaseDomain.omega(3), (FiniteSet((5,)),))
        U = PrincipalUltrafilter(GroundPoint.make([], [[]]), omega)
        assert assignment_from_ultrafilter(U, omega) == {0: 1}


class TestCompactness:
    def test_examples(self):
        S = compactness_solve([Atom(0), Or((Not(Atom(0)), Atom(1)))])
        assert S[0] == 1 and S[1] == 1
        with pytest.raises(Unsatisfiable):
            compactness_solve([Atom(0), Not(Atom(0))])

    def test_agrees_with_truth_tables(self):
        rng = random.Random(3)
        for _ in range(150):
            th = random_theory(rng, 6, 12)
            oracle = truth_table_sat([to_tuple(f) for f in th])
            try:
                S = compactness_solve(th)
                assert oracle and all(evaluate(f, S) for f in th)
            except Unsatisfiable:
                assert not oracle
            assert (brute_force_sat(th) is not None) == oracle

    def test_witness_lies_in_every_image(self):
        th = [Or((Atom(0), Atom(2))), Not(Atom(0)), Or((Atom(1), Not(Atom(2))))]
        fam = FamilySpec.full_powerset(3, 4)
        gens = tuple(iota(f, fam) for f in th)
        U = extend_ultrafilter_symbolic(FilterPresentation(Symbolic(fam), gens, 4))
        S = assignment_from_ultrafilter(U, fam)
        for f in th:
            assert eval_setexpr(iota(f), U.witness, fam) and evaluate(f, S)

    def test_empty_theory(self):
        assert compactness_solve([]) == {}
