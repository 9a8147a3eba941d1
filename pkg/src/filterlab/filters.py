"""Width-complete filters, their properness, and ultrafilter extension.

Two carriers are supported.  On ``P(n)`` a filter generated by finitely many
sets is principal over the intersection of its generators, so every
extension to an ultrafilter is principal at one of its points.  On the
symbolic carrier (set expressions over a ``FamilySpec``) the generators are
Boolean combinations of independent sets; a sign pattern making all of them
true names a nonempty cell, and any point of that cell defines an
ultrafilter on the generated algebra by evaluation.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import (
    ExhaustedSupports,
    ImproperFilter,
    Inconclusive,
    NoDifferenceFound,
    Unsatisfiable,
    WidthExceeded,
)
from .proplogic import Formula, assignments, evaluate, iota, max_arity, support
from .setcore import (
    DEFAULT_SEARCH_BOUND,
    Complement,
    FamilySpec,
    Gen,
    GroundPoint,
    Intersect,
    SetExpr,
    Union,
    cell_witness,
    eval_setexpr,
    indep_member,
    setexpr_generators,
)


@dataclass(frozen=True)
class FinitePowerset:
    n: int

    def __str__(self):
        return f"(carrier finite {self.n})"


@dataclass(frozen=True)
class Symbolic:
    family: FamilySpec


@dataclass(frozen=True)
class FilterPresentation:
    """A filter given by generators closed under intersections of fewer than ``width`` members."""

    carrier: FinitePowerset | Symbolic
    generators: tuple
    width: int = 2

    def __post_init__(self):
        if self.width < 2:
            raise ValueError("width must be at least 2")
        gens = tuple(self.generators)
        if not gens:
            raise ValueError("a filter presentation needs at least one generator")
        if isinstance(self.carrier, FinitePowerset):
            gens = tuple(frozenset(g) for g in gens)
            for g in gens:
                if any(not 0 <= x < self.carrier.n for x in g):
                    raise ValueError(f"generator {sorted(g)} leaves range({self.carrier.n})")
        elif not all(isinstance(g, SetExpr) for g in gens):
            raise TypeError("symbolic generators must be set expressions")
        object.__setattr__(self, "generators", gens)

    @property
    def flagged_improper(self) -> bool:
        """The presentation literally contains the empty set."""
        return any(g == frozenset() or g == Union(()) for g in self.generators)


# ---------------------------------------------------------------------------
# ultrafilters


@dataclass(frozen=True)
class PrincipalUltrafilter:
    """All sets containing ``point`` (a base element, or a ground point for set expressions)."""

    point: int | GroundPoint
    family: FamilySpec | None = None

    def contains(self, x) -> bool:
        if isinstance(x, SetExpr):
            return eval_setexpr(x, self.point, self.family)
        return self.point in x

    def members(self, n: int) -> set[frozenset]:
        return {frozenset(s) for k in range(n + 1) for s in combinations(range(n), k) if self.point in s}

    def __str__(self):
        return f"(principal {self.point})"


@dataclass(frozen=True)
class CellUltrafilter:
    """The ultrafilter of sets in the generated algebra that contain ``witness``."""

    signs: tuple[tuple[int, int], ...]
    witness: GroundPoint
    family: FamilySpec

    def contains(self, e: SetExpr) -> bool:
        return eval_setexpr(e, self.witness, self.family)

    @property
    def sign_map(self) -> dict[int, int]:
        return dict(self.signs)

    def __str__(self):
        signs = " ".join(f"({g} {v})" for g, v in self.signs)
        return f"(cell ({signs}) {self.witness})"


Ultrafilter = PrincipalUltrafilter | CellUltrafilter


# ---------------------------------------------------------------------------
# sign search over set-expression constraints


def _value(e: SetExpr, signs: Mapping[int, int]):
    """Three-valued value of ``e`` on the cell named by a partial sign map."""
    if isinstance(e, Gen):
        v = signs.get(e.index)
        return None if v is None else bool(v)
    if isinstance(e, Complement):
        v = _value(e.child, signs)
        return None if v is None else not v
    unknown = False
    stop = isinstance(e, Union)  # a union is decided by a True child, an intersection by a False one
    for c in e.children:
        v = _value(c, signs)
        if v is None:
            unknown = True
        elif v == stop:
            return stop
    return None if unknown else not stop


def _force(e: SetExpr, want: bool, signs, out: dict) -> bool:
    """Collect sign assignments implied by ``e`` having value ``want``; False on conflict."""
    if isinstance(e, Gen):
        v = signs.get(e.index)
        if v is None:
            if out.get(e.index, want) != want:
                return False
            out[e.index] = want
            return True
        return bool(v) == want
    if isinstance(e, Complement):
        return _force(e.child, not want, signs, out)
    # an intersection wanted True (union wanted False) forces every child;
    # otherwise one child must take the value, forced only if it is the last open one
    every = isinstance(e, Intersect) == want
    if every:
        return all(_force(c, want, signs, out) for c in e.children)
    open_children = []
    for c in e.children:
        v = _value(c, signs)
        if v is None:
            open_children.append(c)
        elif v == want:
            return True
    if not open_children:
        return False
    if len(open_children) == 1:
        return _force(open_children[0], want, signs, out)
    return True


class _SignSearch:
    def __init__(self, constraints: Sequence[SetExpr]):
        self.constraints = list(constraints)
        self.occurs = defaultdict(list)
        for i, c in enumerate(self.constraints):
            for g in setexpr_generators(c):
                self.occurs[g].append(i)

    def propagate(self, signs: dict, pending: Iterable[int]) -> bool:
        queue = list(dict.fromkeys(pending))
        queued = set(queue)
        while queue:
            i = queue.pop()
            queued.discard(i)
            c = self.constraints[i]
            v = _value(c, signs)
            if v is True:
                continue
            if v is False:
                return False
            forced = {}
            if not _force(c, True, signs, forced):
                return False
            for g, val in forced.items():
                signs[g] = int(val)
                for j in self.occurs[g]:
                    if j not in queued:
                        queued.add(j)
                        queue.append(j)
        return True

    def pick(self, signs) -> int | None:
        best = None
        for c in self.constraints:
            if _value(c, signs) is None:
                g = min(g for g in setexpr_generators(c) if g not in signs)
                best = g if best is None else min(best, g)
        return best

    def run(self) -> dict[int, int] | None:
        signs = {}
        if not self.propagate(signs, range(len(self.constraints))):
            return None
        trail = []
        while True:
            g = self.pick(signs)
            if g is None:
                return signs
            trail.append((dict(signs), g))
            signs[g] = 0
            if self.propagate(signs, self.occurs[g]):
                continue
            while trail:
                snapshot, g = trail.pop()
                signs = snapshot
                signs[g] = 1
                if self.propagate(signs, self.occurs[g]):
                    break
            else:
                return None


def find_cell(constraints: Sequence[SetExpr], indices: Iterable[int] | None = None) -> dict[int, int] | None:
    """First sign map (0 tried before 1, least index first) whose cell lies inside every constraint.

    Decisions use unit propagation through complements, intersections and
    unions with chronological backtracking.  The map is total on ``indices``
    (default: every generator mentioned); unconstrained indices get sign 0.
    """
    found = _SignSearch(constraints).run()
    if found is None:
        return None
    if indices is None:
        indices = set().union(*(setexpr_generators(c) for c in constraints)) if constraints else ()
    for g in indices:
        found.setdefault(g, 0)
    return dict(sorted(found.items()))


# ---------------------------------------------------------------------------
# properness and extension


@dataclass
class ProperReport:
    proper: bool
    witness: int | GroundPoint | None = None
    signs: dict | None = None


def _finite_core(F: FilterPresentation) -> frozenset:
    """Intersection of all generators, folded in chunks of fewer than ``width`` sets."""
    core = frozenset(range(F.carrier.n))
    step = F.width - 1
    gens = F.generators
    for i in range(0, len(gens), step):
        core = core.intersection(*gens[i:i + step])
    return core


def is_proper(F: FilterPresentation, search_bound: int = DEFAULT_SEARCH_BOUND) -> ProperReport:
    if isinstance(F.carrier, FinitePowerset):
        core = _finite_core(F)
        return ProperReport(bool(core), min(core) if core else None)
    signs = find_cell(F.generators)
    if signs is None:
        return ProperReport(False)
    try:
        witness = cell_witness(F.carrier.family, signs, 1, search_bound)[0]
    except (NoDifferenceFound, WidthExceeded, ExhaustedSupports) as exc:
        raise Inconclusive(search_bound, str(exc)) from exc
    if not all(eval_setexpr(g, witness, F.carrier.family) for g in F.generators):
        raise AssertionError(f"cell witness {witness} misses a generator")
    return ProperReport(True, witness, signs)


def extend_ultrafilter_finite(F: FilterPresentation, point: int | None = None) -> PrincipalUltrafilter:
    """Principal ultrafilter at the least point of the generators' intersection (or at ``point``)."""
    if not isinstance(F.carrier, FinitePowerset):
        raise TypeError("extend_ultrafilter_finite needs a finite powerset carrier")
    core = _finite_core(F)
    if not core:
        raise ImproperFilter("generators have empty intersection")
    if point is None:
        point = min(core)
    elif point not in core:
        raise ValueError(f"{point} is not in every generator")
    return PrincipalUltrafilter(point)


def extend_ultrafilter_symbolic(
    F: FilterPresentation, search_bound: int = DEFAULT_SEARCH_BOUND
) -> CellUltrafilter:
    if not isinstance(F.carrier, Symbolic):
        raise TypeError("extend_ultrafilter_symbolic needs a symbolic carrier")
    family = F.carrier.family
    signs = find_cell(F.generators)
    if signs is None:
        raise ImproperFilter("no cell satisfies every generator")
    witness = cell_witness(family, signs, 1, search_bound)[0]
    U = CellUltrafilter(tuple(signs.items()), witness, family)
    for g in F.generators:
        if not U.contains(g):
            raise AssertionError(f"ultrafilter misses generator {g}")
    return U


def assignment_from_ultrafilter(U: Ultrafilter, family: FamilySpec) -> dict[int, int]:
    """Generator ``g`` is true iff its set belongs to ``U``."""
    point = U.witness if isinstance(U, CellUltrafilter) else U.point
    if isinstance(point, GroundPoint):
        return {g: int(indep_member(point, A)) for g, A in enumerate(family.generators)}
    return {g: int(point in A) for g, A in enumerate(family.generators)}


def default_family(theory: Sequence[Formula]) -> FamilySpec:
    """One fresh singleton generator per atom index, wide enough for a full cell."""
    gamma = set().union(*(support(f) for f in theory)) if theory else set()
    arity = max((max_arity(f) for f in theory), default=0)
    width = max(len(gamma) + 1, arity + 1, 2)
    return FamilySpec.singletons(max(gamma) + 1 if gamma else 0, width)


def compactness_solve(
    theory: Sequence[Formula],
    family: FamilySpec | None = None,
    search_bound: int = DEFAULT_SEARCH_BOUND,
) -> dict[int, int]:
    """Satisfy a finite propositional theory through a cell ultrafilter.

    The filter is generated by the images ``iota(phi)``; its ultrafilter
    extension sits at a witness point, and an atom is true iff the point lies
    in the atom's generator.  Raises ``Unsatisfiable`` when the filter is improper.
    """
    theory = list(theory)
    if family is None:
        family = default_family(theory)
    gens = tuple(iota(f, family) for f in theory) or (Intersect(()),)
    F = FilterPresentation(Symbolic(family), gens, family.domain.width)
    try:
        U = extend_ultrafilter_symbolic(F, search_bound)
    except ImproperFilter:
        raise Unsatisfiable("the filter generated by the theory is improper") from None
    S = assignment_from_ultrafilter(U, family)
    for f in theory:
        if not evaluate(f, S):
            raise AssertionError(f"derived assignment falsifies {f}")
    return S


def brute_force_sat(theory: Sequence[Formula]) -> dict[int, int] | None:
    """First satisfying assignment over the theory's atoms in truth-table order, or None."""
    gamma = set().union(*(support(f) for f in theory)) if theory else set()
    for s in assignments(gamma):
        if all(evaluate(f, s) for f in theory):
            return s
    return None


# ---------------------------------------------------------------------------
# exhaustive ultrafilter checks on P(n)


def all_subsets(n: int) -> list[frozenset]:
    return [frozenset(c) for k in range(n + 1) for c in combinations(range(n), k)]


def ultrafilter_violations(
    members: set[frozenset],
    n: int,
    width: int,
    required: Iterable[Iterable[int]] = (),
    field: Sequence[frozenset] | None = None,
) -> list[str]:
    """Every way ``members`` fails to be a width-complete ultrafilter containing ``required``.

    The algebra is ``field`` (default: all of ``P(n)``).
    """
    full = frozenset(range(n))
    sets = all_subsets(n) if field is None else list(field)
    problems = []
    for X in members:
        if X not in sets:
            problems.append(f"member {sorted(X)} is outside the algebra")
    for X in sets:
        if (X in members) == ((full - X) in members):
            problems.append(f"exactly one of {sorted(X)} and its complement must be a member")
    for X in members:
        for Y in sets:
            if X <= Y and Y not in members:
                problems.append(f"{sorted(Y)} contains member {sorted(X)} but is missing")
    ordered = sorted(members, key=lambda s: (len(s), sorted(s)))
    for k in range(2, width):
        for combo in combinations(ordered, k):
            meet = frozenset.intersection(*combo)
            if meet not in members:
                problems.append(f"intersection {sorted(meet)} of {k} members is missing")
    for X in required:
        if frozenset(X) not in members:
            problems.append(f"required set {sorted(X)} is missing")
    return problems
