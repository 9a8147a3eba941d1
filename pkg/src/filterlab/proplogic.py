"""Propositional formulas over generator atoms and their set-algebra image.

``iota`` sends atom ``a_g`` to the family member ``I(A_g)``, negation to
complement and conjunction/disjunction to intersection/union.  The checks at
the bottom compare, point by point on an enumerated ground space, the image
of a formula against the union of the cells of its satisfying assignments.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping, Sequence

from .errors import ParseError, UnboundAtom
from .setcore import (
    EMPTY,
    FULL,
    Complement,
    FamilySpec,
    Gen,
    GroundPoint,
    Intersect,
    SetExpr,
    Union,
    enumerate_ground,
    eval_setexpr,
    indep_member,
)
from .sexpr import Symbol, fail, head, parse_all, parse_one

Assignment = Mapping[int, int]


class Formula:
    __slots__ = ()


@dataclass(frozen=True)
class Atom(Formula):
    index: int

    def __str__(self):
        return f"a{self.index}"


@dataclass(frozen=True)
class Not(Formula):
    child: Formula

    def __str__(self):
        return f"(not {self.child})"


@dataclass(frozen=True)
class And(Formula):
    children: tuple[Formula, ...] = ()

    def __str__(self):
        return "(and" + "".join(f" {c}" for c in self.children) + ")"


@dataclass(frozen=True)
class Or(Formula):
    children: tuple[Formula, ...] = ()

    def __str__(self):
        return "(or" + "".join(f" {c}" for c in self.children) + ")"


def conj(*fs: Formula) -> And:
    return And(tuple(fs))


def disj(*fs: Formula) -> Or:
    return Or(tuple(fs))


def implies(a: Formula, b: Formula) -> Or:
    return Or((Not(a), b))


def iff(a: Formula, b: Formula) -> And:
    return And((Or((Not(a), b)), Or((a, Not(b)))))


def support(phi: Formula) -> frozenset[int]:
    """Indices of the atoms occurring in ``phi``."""
    if isinstance(phi, Atom):
        return frozenset((phi.index,))
    if isinstance(phi, Not):
        return support(phi.child)
    return frozenset().union(*(support(c) for c in phi.children))


def max_arity(phi: Formula) -> int:
    if isinstance(phi, Atom):
        return 0
    if isinstance(phi, Not):
        return max(1, max_arity(phi.child))
    return max([len(phi.children)] + [max_arity(c) for c in phi.children])


def evaluate(phi: Formula, s: Assignment) -> bool:
    if isinstance(phi, Atom):
        try:
            return bool(s[phi.index])
        except KeyError:
            raise UnboundAtom(phi.index) from None
    if isinstance(phi, Not):
        return not evaluate(phi.child, s)
    if isinstance(phi, And):
        return all(evaluate(c, s) for c in phi.children)
    if isinstance(phi, Or):
        return any(evaluate(c, s) for c in phi.children)
    raise TypeError(f"not a formula: {phi!r}")


def iota(phi: Formula, family: FamilySpec | None = None) -> SetExpr:
    """Structural translation into a set expression over the family generators."""
    if isinstance(phi, Atom):
        if family is not None:
            family.generator(phi.index)
        return Gen(phi.index)
    if isinstance(phi, Not):
        return Complement(iota(phi.child, family))
    if isinstance(phi, And):
        return Intersect(tuple(iota(c, family) for c in phi.children))
    if isinstance(phi, Or):
        return Union(tuple(iota(c, family) for c in phi.children))
    raise TypeError(f"not a formula: {phi!r}")


def cell_of(s: Assignment) -> SetExpr:
    """The cell ``A(s)``: generators signed 1 intersected, those signed 0 removed."""
    parts = [Gen(g) for g in sorted(s) if s[g]]
    parts += [Complement(Gen(g)) for g in sorted(s) if not s[g]]
    if len(parts) == 1:
        return parts[0]
    return Intersect(tuple(parts))


def assignments(gamma: Iterable[int]):
    gamma = sorted(gamma)
    for values in product((0, 1), repeat=len(gamma)):
        yield dict(zip(gamma, values))


# ---------------------------------------------------------------------------
# pointwise checks on an enumerated ground space


@dataclass
class IotaReport:
    holds: bool
    points: int
    image_size: int
    counterexample: GroundPoint | None = None


@dataclass
class PartitionReport:
    holds: bool
    total: int
    cell_sizes: dict = field(default_factory=dict)
    problems: list = field(default_factory=list)


def _ground(family: FamilySpec, truncation: int | None):
    if truncation is None:
        if not family.domain.is_finite:
            raise ValueError("omega domains need an explicit truncation")
        truncation = family.domain.size
    return tuple(enumerate_ground(family.domain, truncation))


@lru_cache(maxsize=64)
def _cell_extensions(family: FamilySpec, gamma: tuple[int, ...], points: tuple[GroundPoint, ...]):
    """Point-index sets of every cell over ``gamma``, computed with ``eval_setexpr``."""
    out = {}
    for s in assignments(gamma):
        cell = cell_of(s)
        out[tuple(s[g] for g in gamma)] = frozenset(
            i for i, p in enumerate(points) if eval_setexpr(cell, p, family)
        )
    return out


def verify_iota_identity(
    phi: Formula,
    family: FamilySpec,
    gamma: Iterable[int] | None = None,
    truncation: int | None = None,
) -> IotaReport:
    """Check ``iota(phi) == union of A(s) over s in 2^gamma with s(phi) = 1`` pointwise."""
    gamma = tuple(sorted(support(phi) if gamma is None else set(gamma)))
    missing = support(phi) - set(gamma)
    if missing:
        raise ValueError(f"gamma misses atoms {sorted(missing)}")
    for g in gamma:
        family.generator(g)
    points = _ground(family, truncation)
    cells = _cell_extensions(family, gamma, points)
    union = set()
    for s in assignments(gamma):
        if evaluate(phi, s):
            union |= cells[tuple(s[g] for g in gamma)]
    image = iota(phi, family)
    size = 0
    for i, p in enumerate(points):
        inside = eval_setexpr(image, p, family)
        size += inside
        if inside != (i in union):
            return IotaReport(False, len(points), size, p)
    return IotaReport(True, len(points), size)


def partition_check(family: FamilySpec, gamma: Iterable[int], truncation: int | None = None) -> PartitionReport:
    """The cells over ``gamma`` are pairwise disjoint and cover the enumerated space."""
    gamma = tuple(sorted(set(gamma)))
    for g in gamma:
        family.generator(g)
    points = _ground(family, truncation)
    cells = _cell_extensions(family, gamma, points)
    problems = []
    seen = {}
    for pattern, members in cells.items():
        for i in members:
            if i in seen:
                problems.append(f"{points[i]} lies in cells {seen[i]} and {pattern}")
            seen[i] = pattern
    uncovered = [points[i] for i in range(len(points)) if i not in seen]
    problems += [f"{p} lies in no cell" for p in uncovered]
    # the covering pattern of each point is its own membership vector
    for i, p in enumerate(points):
        own = tuple(int(indep_member(p, family.generators[g])) for g in gamma)
        if i not in cells[own]:
            problems.append(f"{p} is outside the cell of its own pattern {own}")
    # distinct patterns differ at some generator, which splits the two cells
    patterns = sorted(cells)
    for a in range(len(patterns)):
        for b in range(a + 1, len(patterns)):
            s, t = patterns[a], patterns[b]
            k = next(k for k in range(len(gamma)) if s[k] != t[k])
            gen = family.generators[gamma[k]]
            for pat, members in ((s, cells[s]), (t, cells[t])):
                if any(indep_member(points[i], gen) != bool(pat[k]) for i in members):
                    problems.append(f"cell {pat} is not on the side of generator {gamma[k]}")
    sizes = {pattern: len(members) for pattern, members in cells.items()}
    holds = not problems and sum(sizes.values()) == len(points)
    return PartitionReport(holds, len(points), sizes, problems)


# ---------------------------------------------------------------------------
# random formulas


_ARITIES = (0, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6)


def random_formula(rng: random.Random, depth: int, atoms: int, max_arity: int = 3) -> Formula:
    """A formula of depth at most ``depth`` over atoms ``0..atoms-1``."""
    if depth <= 0 or rng.random() < 0.2:
        return Atom(rng.randrange(atoms))
    kind = rng.randrange(3)
    if kind == 0:
        return Not(random_formula(rng, depth - 1, atoms, max_arity))
    children = tuple(random_formula(rng, depth - 1, atoms, max_arity) for _ in range(rng.choice(_ARITIES[:max_arity * 2])))
    return And(children) if kind == 1 else Or(children)


def random_formulas(seed: int, count: int, depth: int, atoms: int, max_arity: int = 3) -> list[Formula]:
    rng = random.Random(seed)
    return [random_formula(rng, depth, atoms, max_arity) for _ in range(count)]


def random_theory(rng: random.Random, atoms: int, max_formulas: int, depth: int = 3) -> list[Formula]:
    """Between 1 and ``max_formulas`` disjunctions of random subformulas."""
    return [
        Or(tuple(random_formula(rng, depth - 1, atoms) for _ in range(rng.randint(1, 3))))
        for _ in range(rng.randint(1, max_formulas))
    ]


# ---------------------------------------------------------------------------
# s-expression syntax: a<g> | (not f) | (and f*) | (or f*) plus implies/iff sugar


def formula_from_sexpr(node) -> Formula:
    if isinstance(node, Symbol):
        if node.startswith("a") and node[1:].isdigit():
            return Atom(int(node[1:]))
        fail(node, f"expected an atom a<n>, got {node}")
    op = head(node)
    args = [formula_from_sexpr(x) for x in node[1:]] if op else None
    if op == "not" and len(args) == 1:
        return Not(args[0])
    if op == "and":
        return And(tuple(args))
    if op == "or":
        return Or(tuple(args))
    if op == "implies" and len(args) == 2:
        return implies(*args)
    if op == "iff" and len(args) == 2:
        return iff(*args)
    fail(node, "malformed formula")


def parse_formula(text: str) -> Formula:
    return formula_from_sexpr(parse_one(text))


def theory_from_sexpr(node, read=formula_from_sexpr) -> list:
    if head(node) != "theory":
        fail(node, "expected (theory (assert f)*)")
    out = []
    for item in node[1:]:
        if head(item) != "assert" or len(item) != 2:
            fail(item, "expected (assert f)")
        out.append(read(item[1]))
    return out


def parse_theory(text: str, read=formula_from_sexpr) -> list:
    items = parse_all(text)
    if len(items) != 1:
        raise ParseError("a theory file holds exactly one (theory ...) form", 1, 1)
    return theory_from_sexpr(items[0], read)


def format_theory(formulas: Sequence, comments: Sequence[str] = ()) -> str:
    lines = [f"; {c}" for c in comments]
    lines.append("(theory")
    lines += [f"  (assert {f})" for f in formulas]
    lines[-1] += ")"
    return "\n".join(lines) + "\n"


__all__ = [
    "Assignment", "Formula", "Atom", "Not", "And", "Or", "conj", "disj", "implies", "iff",
    "SetExpr", "Gen", "Complement", "Intersect", "Union", "FULL", "EMPTY",
    "support", "max_arity", "evaluate", "iota", "cell_of", "assignments",
    "IotaReport", "PartitionReport", "verify_iota_identity", "partition_check",
    "random_formula", "random_formulas", "random_theory",
    "formula_from_sexpr", "parse_formula", "theory_from_sexpr", "parse_theory", "format_theory",
]
