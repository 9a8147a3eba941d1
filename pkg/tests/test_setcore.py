import pytest

from filterlab.errors import ExhaustedSupports, NoDifferenceFound, SizeOverflow, UnknownGenerator, WidthExceeded
from filterlab.setcore import (
    FULL,
    BaseDomain,
    Cofinite,
    Complement,
    FamilySpec,
    FiniteSet,
    Gen,
    GroundPoint,
    Intersect,
    Union,
    cell_witness,
    distinctness_witness,
    enumerate_ground,
    eval_setexpr,
    evens,
    ground_size,
    indep_member,
    interval,
    least_difference,
    multiples,
    odds,
    separating_support,
)

from oracles import ref_ground, ref_member

pt = GroundPoint.make


class TestDomain:
    def test_width_bounds(self):
        with pytest.raises(ValueError):
            BaseDomain(2, 1)
        with pytest.raises(ValueError):
            BaseDomain(2, 4)
        assert BaseDomain.finite(3).width == 4
        assert not BaseDomain.omega(5).is_finite

    def test_point_validation(self):
        d = BaseDomain(3, 2)
        with pytest.raises(WidthExceeded):
            d.validate_point(pt({0, 1}, []))
        with pytest.raises(ValueError):
            d.validate_point(pt({5}, []))
        d.validate_point(pt({2}, [{2}]))

    def test_point_invariants(self):
        with pytest.raises(ValueError):
            GroundPoint((1, 0), frozenset())
        with pytest.raises(ValueError):
            GroundPoint((0,), frozenset({(1,)}))
        assert str(pt({0, 1}, [{0}])) == "(pt {0 1} ({0}))"


class TestIndepMember:
    def test_empty_support(self):
        assert indep_member(pt([], [[]]), FiniteSet((3, 4)))
        assert not indep_member(pt([], []), FiniteSet((3, 4)))

    def test_by_hand(self):
        p = pt({0, 1}, [{0}])
        assert indep_member(p, FiniteSet((0, 2)))
        assert not indep_member(p, FiniteSet((1,)))

    def test_other_representations(self):
        p = pt({0, 1, 2}, [{0, 2}])
        assert indep_member(p, evens())
        assert indep_member(p, Cofinite((1,)))
        assert not indep_member(p, odds())
        assert indep_member(pt({3, 6}, [{3, 6}]), multiples(3))
        assert indep_member(pt({1, 5}, [{1}]), interval(0, 3))


class TestDistinctness:
    def test_small_example(self):
        w = distinctness_witness(FiniteSet((0, 1)), FiniteSet((1,)))
        assert w == pt({0}, [{0}])
        assert indep_member(w, FiniteSet((0, 1))) and not indep_member(w, FiniteSet((1,)))

    def test_equal_sets(self):
        with pytest.raises(NoDifferenceFound):
            distinctness_witness(FiniteSet((2,)), FiniteSet((2,)))

    def test_evens_odds(self):
        assert distinctness_witness(evens(), odds()) == pt({0}, [{0}])

    def test_cofinite_pairs(self):
        assert least_difference(Cofinite((0, 5)), Cofinite((0,))) == 5
        assert least_difference(FiniteSet((0, 1)), Cofinite((2,))) == 3
        with pytest.raises(NoDifferenceFound):
            least_difference(Cofinite((1,)), Cofinite((1,)))

    def test_computable_needs_bound(self):
        with pytest.raises(NoDifferenceFound):
            least_difference(interval(0, 100), interval(0, 101), search_bound=50)
        assert least_difference(interval(0, 100), interval(0, 101), search_bound=200) == 100

    def test_injectivity_exhaustive_finite3(self):
        fam = FamilySpec.full_powerset(3)
        for i, A in enumerate(fam.generators):
            for B in fam.generators[i + 1:]:
                w = distinctness_witness(A, B)
                assert indep_member(w, A) != indep_member(w, B)


class TestSeparatingSupport:
    def test_examples(self):
        assert separating_support([FiniteSet((0, 2))], [FiniteSet((0, 1))]) == (1,)
        assert separating_support([FiniteSet((0,))], []) == ()
        assert separating_support([FiniteSet((0,)), FiniteSet((1,))], [FiniteSet((0, 1))]) == (0, 1)

    def test_separates(self):
        pos = [evens(), multiples(3)]
        neg = [odds(), interval(0, 4)]
        X = separating_support(pos, neg)
        traces = lambda sets: {tuple(x for x in X if x in A) for A in sets}  # noqa: E731
        assert not traces(pos) & traces(neg)

    def test_width(self):
        with pytest.raises(WidthExceeded):
            separating_support([FiniteSet((0,)), FiniteSet((1,))], [FiniteSet((0, 1))], width=2)


class TestCellWitness:
    fam = FamilySpec(BaseDomain(2, 3), (FiniteSet((0,)), FiniteSet((1,))))

    def test_example(self):
        (p,) = cell_witness(self.fam, {0: 1, 1: 0})
        assert indep_member(p, FiniteSet((0,))) and not indep_member(p, FiniteSet((1,)))
        # the least support is {0}; the point <{0,1},{{0}}> is the next witness
        assert p == pt({0}, [{0}])
        assert cell_witness(self.fam, {0: 1, 1: 0}, 2)[1] == pt({0, 1}, [{0}])

    def test_convention_cell(self):
        assert cell_witness(self.fam, {}) == [pt([], [])]

    def test_exhausted(self):
        with pytest.raises(ExhaustedSupports):
            cell_witness(self.fam, {0: 1, 1: 0}, 3)

    def test_unknown_generator(self):
        with pytest.raises(UnknownGenerator):
            cell_witness(self.fam, {5: 1})

    def test_abundance_omega(self):
        gens = (evens(), odds(), multiples(3), multiples(5), interval(0, 4), interval(2, 7), multiples(4), interval(1, 3))
        fam = FamilySpec(BaseDomain.omega(16), gens)
        signs = {g: (g * 5) % 2 for g in range(8)}
        pts = cell_witness(fam, signs, 100)
        assert len(set(pts)) == 100
        for p in pts:
            assert all(indep_member(p, gens[g]) == bool(v) for g, v in signs.items())

    def test_deterministic(self):
        fam = FamilySpec.full_powerset(3)
        assert cell_witness(fam, {1: 1, 4: 0}, 4) == cell_witness(fam, {1: 1, 4: 0}, 4)


class TestEnumeration:
    def test_sizes(self):
        assert len(enumerate_ground(BaseDomain(2, 3), 2)) == 26
        assert [str(p) for p in enumerate_ground(BaseDomain(2, 3), 0)] == ["(pt {} ())", "(pt {} ({}))"]
        assert len(enumerate_ground(BaseDomain(1, 2), 1)) == 6
        assert ground_size(BaseDomain(3, 4), 3) == 318

    def test_matches_reference(self):
        for m, w in ((2, 3), (3, 4), (3, 2)):
            ours = {(frozenset(p.support), frozenset(frozenset(z) for z in p.trace))
                    for p in enumerate_ground(BaseDomain(m, w), m)}
            assert ours == set(ref_ground(m, w))

    def test_canonical_order(self):
        pts = enumerate_ground(BaseDomain(3, 4), 3)
        assert pts == sorted(pts)

    def test_overflow(self):
        with pytest.raises(SizeOverflow):
            enumerate_ground(BaseDomain.omega(6), 8, cap=1000)

    def test_membership_agrees_with_reference(self):
        fam = FamilySpec.full_powerset(2, 3)
        for p in enumerate_ground(fam.domain, 2):
            ref = (frozenset(p.support), frozenset(frozenset(z) for z in p.trace))
            for A in fam.generators:
                assert indep_member(p, A) == ref_member(ref, set(A.items))


class TestSetExpr:
    fam = FamilySpec(BaseDomain(2, 3), (FiniteSet((0,)), FiniteSet((1,))))

    def test_examples(self):
        p = pt({0, 1}, [{0}])
        assert eval_setexpr(Gen(0), p, self.fam)
        assert not eval_setexpr(Complement(Gen(0)), p, self.fam)
        assert eval_setexpr(Intersect((Gen(0), Complement(Gen(1)))), p, self.fam)

    def test_conventions(self):
        p = pt([], [])
        assert eval_setexpr(FULL, p, self.fam)
        assert not eval_setexpr(Union(()), p, self.fam)

    def test_unknown_generator(self):
        with pytest.raises(UnknownGenerator):
            eval_setexpr(Gen(2), pt([], []), self.fam)


def test_family_rejects_duplicates():
    with pytest.raises(ValueError):
        FamilySpec(BaseDomain(2, 3), (FiniteSet((0,)), FiniteSet((0,))))
