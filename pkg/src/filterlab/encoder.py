"""Filter-extension problems as theories over constants ``a_X`` and a predicate ``U``.

For a filter ``F`` on ``P(n)`` (or on a subfield of it) the theory says

  member:   ``U(a_X)`` for every member ``X`` of the filter ``F`` generates,
  closure:  ``U(a_X1) & ... & U(a_Xk) -> U(a_Y)`` when ``k < width`` and ``Y``
            contains the intersection of the ``X_i``,
  ultra:    ``U(a_X) <-> not U(a_{n \\ X})``.

Any model reads back as an ultrafilter extending ``F``.  The closure axioms
are instantiated only at covers: the empty conjunction, one-step enlargements,
and binary meets.  Everything else follows from those by chaining, and
``closure_axioms_full`` keeps the literal instances around so tests can compare
the two model sets by enumeration.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Sequence

from . import henkin as fo
from . import proplogic as pl
from .errors import FieldTooLarge, ImproperFilter, NotAModel
from .filters import (
    FilterPresentation,
    FinitePowerset,
    PrincipalUltrafilter,
    _finite_core,
    all_subsets,
    compactness_solve,
    extend_ultrafilter_finite,
    ultrafilter_violations,
)

DEFAULT_FIELD_CAP = 4  # largest n whose full powerset is used without an explicit field


def constant_name(X: frozenset) -> str:
    """``a_0_2`` for ``{0, 2}``; ``a_`` for the empty set."""
    return "a_" + "_".join(str(x) for x in sorted(X))


def _key(X: frozenset):
    return (len(X), sorted(X))


def _check_field(field_sets: Sequence[frozenset], n: int) -> tuple[frozenset, ...]:
    sets = tuple(sorted({frozenset(X) for X in field_sets}, key=_key))
    full = frozenset(range(n))
    members = set(sets)
    if frozenset() not in members or full not in members:
        raise ValueError("a field must contain the empty set and the base")
    for X in sets:
        if any(not 0 <= x < n for x in X):
            raise ValueError(f"field set {sorted(X)} leaves range({n})")
        if full - X not in members:
            raise ValueError(f"field is not closed under complement at {sorted(X)}")
    for X, Y in combinations(sets, 2):
        if X & Y not in members:
            raise ValueError(f"field is not closed under intersection at {sorted(X)}, {sorted(Y)}")
    return sets


@dataclass
class FilterTheory:
    n: int
    field: tuple[frozenset, ...]
    axioms: list  # (tag, propositional formula); atom i stands for U(a_{field[i]})
    presentation: FilterPresentation
    width: int
    index: dict = field(default_factory=dict)

    def __post_init__(self):
        self.index = {X: i for i, X in enumerate(self.field)}

    def atom(self, X) -> pl.Atom:
        return pl.Atom(self.index[frozenset(X)])

    @property
    def formulas(self) -> list[pl.Formula]:
        return [f for _, f in self.axioms]

    def fo_formula(self, f: pl.Formula) -> fo.FOFormula:
        """The same axiom with ``a<i>`` read as ``U(a_X)``."""
        if isinstance(f, pl.Atom):
            return fo.Rel("U", (fo.Const(constant_name(self.field[f.index])),))
        if isinstance(f, pl.Not):
            return fo.Neg(self.fo_formula(f.child))
        kids = tuple(self.fo_formula(c) for c in f.children)
        return fo.Conj(kids) if isinstance(f, pl.And) else fo.Disj(kids)

    @property
    def fo_theory(self) -> list[fo.FOFormula]:
        return [self.fo_formula(f) for f in self.formulas]

    def legend(self) -> list[str]:
        return [f"a{i} = U({constant_name(X)})" for i, X in enumerate(self.field)]


def _members(F: FilterPresentation, sets) -> list[frozenset]:
    core = _finite_core(F)
    return [X for X in sets if core <= X]


def closure_axioms_pruned(sets: Sequence[frozenset], width: int) -> list[tuple[str, pl.Formula]]:
    """Covers only: ``U(base)``, one-step enlargements, binary meets (width >= 3)."""
    index = {X: i for i, X in enumerate(sets)}
    full = sets[-1]
    out = [("closure", pl.Atom(index[full]))]
    for X in sets:
        above = [Y for Y in sets if X < Y]
        for Y in above:
            if not any(X < Z < Y for Z in above):
                out.append(("closure", pl.implies(pl.Atom(index[X]), pl.Atom(index[Y]))))
    if width >= 3:
        for X, Y in combinations(sets, 2):
            if not (X <= Y or Y <= X):
                meet = pl.Atom(index[X & Y])
                out.append(("closure", pl.implies(pl.conj(pl.Atom(index[X]), pl.Atom(index[Y])), meet)))
    return out


def closure_axioms_full(sets: Sequence[frozenset], width: int) -> list[tuple[str, pl.Formula]]:
    """Every instance over sets of fewer than ``width`` distinct members (exponential)."""
    index = {X: i for i, X in enumerate(sets)}
    full = frozenset().union(*sets)
    out = []
    for k in range(min(width - 1, len(sets)) + 1):
        for combo in combinations(sets, k):
            meet = frozenset.intersection(*combo) if combo else full
            body = pl.And(tuple(pl.Atom(index[X]) for X in combo))
            for Y in sets:
                if meet <= Y:
                    out.append(("closure", pl.Or((pl.Not(body), pl.Atom(index[Y])))))
    return out


def encode_filter_extension(
    F: FilterPresentation,
    width: int | None = None,
    field_sets: Sequence[frozenset] | None = None,
    field_cap: int = DEFAULT_FIELD_CAP,
    full_closure: bool = False,
) -> FilterTheory:
    if not isinstance(F.carrier, FinitePowerset):
        raise TypeError("only finite powerset carriers can be encoded")
    n = F.carrier.n
    width = F.width if width is None else width
    if width < 3:
        raise ValueError("encoding needs width >= 3 so that decoded sets are closed under meets")
    if field_sets is None:
        if n > field_cap:
            raise FieldTooLarge(f"2^{n} constants exceed the cap of 2^{field_cap}; give an explicit field")
        sets = tuple(all_subsets(n))
    else:
        sets = _check_field(field_sets, n)
        if len(sets) > 2 ** field_cap:
            raise FieldTooLarge(f"{len(sets)} constants exceed the cap of {2 ** field_cap}")
    for g in F.generators:
        if g not in sets:
            raise ValueError(f"generator {sorted(g)} is not in the field")
    if not _finite_core(F):
        raise ImproperFilter("generators have empty intersection")
    index = {X: i for i, X in enumerate(sets)}
    axioms = [("member", pl.Atom(index[X])) for X in _members(F, sets)]
    axioms += closure_axioms_full(sets, width) if full_closure else closure_axioms_pruned(sets, width)
    full = frozenset(range(n))
    for X in sets:
        Y = full - X
        if _key(X) < _key(Y):
            axioms.append(("ultra", pl.iff(pl.Atom(index[X]), pl.Not(pl.Atom(index[Y])))))
    return FilterTheory(n, sets, axioms, F, width)


def _truth(M, T: FilterTheory) -> dict[int, int]:
    if isinstance(M, fo.Structure):
        return {
            i: int(fo.model_check(M, fo.Rel("U", (fo.Const(constant_name(X)),))))
            for i, X in enumerate(T.field)
        }
    try:
        return {i: int(bool(M[i])) for i in range(len(T.field))}
    except KeyError as exc:
        raise NotAModel("assignment", f"a{exc.args[0]} has no value") from None


def decode_ultrafilter(M: fo.Structure | Mapping[int, int], T: FilterTheory) -> PrincipalUltrafilter:
    """Read ``{X : U(a_X)}`` off a model and return it as a principal ultrafilter."""
    S = _truth(M, T)
    for tag, ax in T.axioms:
        if not pl.evaluate(ax, S):
            raise NotAModel(tag, ax)
    members = {X for i, X in enumerate(T.field) if S[i]}
    problems = ultrafilter_violations(members, T.n, T.width, T.presentation.generators, T.field)
    if problems:
        raise AssertionError("decoded family is not an ultrafilter: " + problems[0])
    # closed under binary meets in a finite field, so the least member is an atom of the field
    atom = frozenset.intersection(*members)
    if atom not in members:
        raise AssertionError("decoded family has no least member")
    return PrincipalUltrafilter(min(atom))


@dataclass
class RoundtripReport:
    ok: bool
    core: frozenset
    direct: PrincipalUltrafilter | None = None
    henkin: PrincipalUltrafilter | None = None
    problems: list = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return self.direct is not None and self.henkin is not None and self.direct == self.henkin


def _check_decoded(U: PrincipalUltrafilter, F: FilterPresentation, T: FilterTheory, core) -> list[str]:
    problems = []
    if any(not U.contains(g) for g in F.generators):
        problems.append(f"{U} misses a generator")
    if U.point not in core or U != extend_ultrafilter_finite(F, U.point):
        problems.append(f"{U} is not a direct extension of the filter")
    in_field = {X for X in T.field if U.contains(X)}
    problems += ultrafilter_violations(in_field, T.n, T.width, F.generators, T.field)
    return problems


def roundtrip_check(F: FilterPresentation, width: int | None = None, mode: str = "direct") -> RoundtripReport:
    """Encode, solve (``direct``, ``henkin`` or ``both``), decode and compare with the direct extension.

    Only the full powerset field is used, so a decoded point must lie in the
    intersection of the generators.
    """
    if mode not in ("direct", "henkin", "both"):
        raise ValueError(f"unknown mode {mode}")
    T = encode_filter_extension(F, width)
    core = _finite_core(F)
    report = RoundtripReport(True, core)
    if mode in ("direct", "both"):
        report.direct = decode_ultrafilter(compactness_solve(T.formulas), T)
        report.problems += _check_decoded(report.direct, F, T, core)
    if mode in ("henkin", "both"):
        report.henkin = decode_ultrafilter(fo.henkin_pipeline(T.fo_theory), T)
        report.problems += _check_decoded(report.henkin, F, T, core)
    report.ok = not report.problems
    return report


def model_assignments(T: FilterTheory):
    """Every satisfying assignment of ``T``, by full enumeration (2^|field| rows)."""
    for s in pl.assignments(range(len(T.field))):
        if all(pl.evaluate(f, s) for f in T.formulas):
            yield s


def random_proper_filter(rng: random.Random, n: int, width: int = 4, max_gens: int = 4) -> FilterPresentation:
    """Random generators around a random nonempty core."""
    core = frozenset(x for x in range(n) if rng.random() < 0.5) or frozenset({rng.randrange(n)})
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        gens.append(core | frozenset(x for x in range(n) if rng.random() < 0.5))
    return FilterPresentation(FinitePowerset(n), tuple(gens), width)


__all__ = [
    "DEFAULT_FIELD_CAP", "FilterTheory", "RoundtripReport", "constant_name",
    "closure_axioms_pruned", "closure_axioms_full", "encode_filter_extension", "decode_ultrafilter",
    "roundtrip_check", "model_assignments", "random_proper_filter",
]
