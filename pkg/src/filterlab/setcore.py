"""Base domain, ground space and the independent family ``I(A)``.

A ground point is a pair ``<X, Z>`` where ``X`` is a small finite set of
naturals (the support) and ``Z`` is a set of subsets of ``X`` (the trace).
For a base set ``A`` the family member ``I(A)`` is the set of ground points
whose trace contains ``A & X``.  Distinct base sets give distinct members,
and every cell (an intersection of some members minus a union of others)
is nonempty; the functions here build explicit points witnessing both facts.

All finite sets are encoded as sorted tuples.  Ground points are ordered by
``(|support|, support, |trace|, trace)`` where the trace is a sorted tuple
of subsets, subsets themselves compared by ``(size, lexicographic)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import partial
from itertools import combinations, product
from math import comb
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .errors import (
    ExhaustedSupports,
    NoDifferenceFound,
    SizeOverflow,
    UnknownGenerator,
    WidthExceeded,
)

DEFAULT_SEARCH_BOUND = 64
DEFAULT_ENUMERATION_CAP = 2_000_000
# exhaustive (size, lex) minimisation of separating supports above this pool size is skipped
EXACT_SEPARATION_POOL = 16


def subset_key(s: Sequence[int]):
    return (len(s), tuple(s))


# ---------------------------------------------------------------------------
# base domain and base sets


@dataclass(frozen=True)
class BaseDomain:
    """``finite(n)`` when ``size`` is an int, ``omega`` when it is ``None``.

    ``width`` stands in for the completeness cardinal: ground-point supports
    have fewer than ``width`` elements and intersections are taken in chunks
    of fewer than ``width`` sets.
    """

    size: int | None = None
    width: int = 2

    def __post_init__(self):
        if self.width < 2:
            raise ValueError("width must be at least 2")
        if self.size is not None:
            if self.size < 0:
                raise ValueError("finite domain size must be a natural number")
            if self.width > self.size + 1:
                raise ValueError(f"width {self.width} exceeds n + 1 = {self.size + 1}")

    @classmethod
    def finite(cls, n: int, width: int | None = None) -> "BaseDomain":
        return cls(n, n + 1 if width is None else width)

    @classmethod
    def omega(cls, width: int) -> "BaseDomain":
        return cls(None, width)

    @property
    def is_finite(self) -> bool:
        return self.size is not None

    def __contains__(self, x) -> bool:
        return isinstance(x, int) and x >= 0 and (self.size is None or x < self.size)

    def validate_point(self, p: "GroundPoint") -> None:
        if len(p.support) >= self.width:
            raise WidthExceeded(f"support {p.support} has {len(p.support)} >= width {self.width} elements")
        if any(x not in self for x in p.support):
            raise ValueError(f"support {p.support} leaves the domain")

    def __str__(self):
        kind = "omega" if self.size is None else f"finite {self.size}"
        return f"(domain {kind}) (width {self.width})"


class BaseSet:
    """A subset of the naturals with decidable membership."""

    def __contains__(self, x: int) -> bool:
        raise NotImplementedError

    def elements(self, bound: int) -> Iterator[int]:
        """Members below ``bound`` in increasing order."""
        return (x for x in range(bound) if x in self)

    def difference_witness(self, other: "BaseSet") -> int | None:
        """An element of the symmetric difference found without search, or None."""
        return None


@dataclass(frozen=True)
class FiniteSet(BaseSet):
    items: tuple[int, ...]

    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        items = tuple(sorted(set(self.items)))
        if any(x < 0 for x in items):
            raise ValueError("base sets contain naturals only")
        object.__setattr__(self, "items", items)
        object.__setattr__(self, "_members", frozenset(items))

    def __contains__(self, x):
        return x in self._members

    def elements(self, bound):
        return (x for x in self.items if x < bound)

    def difference_witness(self, other):
        if isinstance(other, FiniteSet):
            diff = set(self.items) ^ set(other.items)
            return min(diff) if diff else None
        if isinstance(other, Cofinite):
            # x is outside the difference iff it is in exactly one of items/excluded
            mine, excl = set(self.items), set(other.excluded)
            x = 0
            while (x in mine) != (x in excl):
                x += 1
            return x
        return None

    def __str__(self):
        return "{" + " ".join(map(str, self.items)) + "}"


@dataclass(frozen=True)
class Cofinite(BaseSet):
    excluded: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "excluded", tuple(sorted(set(self.excluded))))

    def __contains__(self, x):
        return x >= 0 and x not in self.excluded

    def difference_witness(self, other):
        if isinstance(other, Cofinite):
            diff = set(self.excluded) ^ set(other.excluded)
            return min(diff) if diff else None
        if isinstance(other, FiniteSet):
            return other.difference_witness(self)
        return None

    def __str__(self):
        return "(co {" + " ".join(map(str, self.excluded)) + "})"


@dataclass(frozen=True, eq=False)
class Computable(BaseSet):
    """A lazily described set; ``key`` identifies it for equality and printing."""

    key: tuple
    member: Callable[[int], bool] = field(repr=False)
    enumerate: Callable[[int], Iterator[int]] | None = field(default=None, repr=False)
    witness: Callable[[BaseSet], int | None] | None = field(default=None, repr=False)

    def __contains__(self, x):
        return x >= 0 and bool(self.member(x))

    def __eq__(self, other):
        return isinstance(other, Computable) and self.key == other.key

    def __hash__(self):
        return hash(("computable",) + self.key)

    def elements(self, bound):
        if self.enumerate is not None:
            return (x for x in self.enumerate(bound) if x < bound)
        return super().elements(bound)

    def difference_witness(self, other):
        if self.witness is not None:
            return self.witness(other)
        return None

    def __str__(self):
        name, *args = self.key
        inner = name if not args else "(" + " ".join(map(str, self.key)) + ")"
        return f"(builtin {inner})"


# module-level callables so builtin sets survive pickling (process pools)


def _is_multiple(k, x):
    return x % k == 0


def _multiples_below(k, start, bound):
    return iter(range(start, bound, k))


def _is_odd(x):
    return x % 2 == 1


def _in_interval(a, b, x):
    return a <= x < b


def _interval_below(a, b, bound):
    return iter(range(a, min(b, bound)))


def evens() -> Computable:
    return Computable(("evens",), partial(_is_multiple, 2), partial(_multiples_below, 2, 0))


def odds() -> Computable:
    return Computable(("odds",), _is_odd, partial(_multiples_below, 2, 1))


def multiples(k: int) -> Computable:
    if k < 1:
        raise ValueError("mult needs k >= 1")
    return Computable(("mult", k), partial(_is_multiple, k), partial(_multiples_below, k, 0))


def interval(a: int, b: int) -> Computable:
    """The half-open interval ``[a, b)``."""
    return Computable(("interval", a, b), partial(_in_interval, a, b), partial(_interval_below, a, b))


BUILTINS = {"evens": evens, "odds": odds, "mult": multiples, "interval": interval}


def as_base_set(obj) -> BaseSet:
    if isinstance(obj, BaseSet):
        return obj
    return FiniteSet(tuple(obj))


# ---------------------------------------------------------------------------
# ground points


@dataclass(frozen=True)
class GroundPoint:
    support: tuple[int, ...]
    trace: frozenset

    def __post_init__(self):
        support = tuple(self.support)
        if list(support) != sorted(set(support)):
            raise ValueError(f"support {support} must be sorted and duplicate-free")
        trace = frozenset(tuple(z) for z in self.trace)
        allowed = set(support)
        for z in trace:
            if list(z) != sorted(set(z)) or not allowed.issuperset(z):
                raise ValueError(f"trace member {z} is not a sorted subset of {support}")
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "trace", trace)

    @classmethod
    def make(cls, support: Iterable[int], trace: Iterable[Iterable[int]]) -> "GroundPoint":
        return cls(tuple(sorted(support)), frozenset(tuple(sorted(z)) for z in trace))

    def sorted_trace(self) -> tuple:
        return tuple(sorted(self.trace, key=subset_key))

    def key(self):
        t = self.sorted_trace()
        return (len(self.support), self.support, len(t), tuple(subset_key(z) for z in t))

    def __lt__(self, other):
        return self.key() < other.key()

    def __str__(self):
        def lit(s):
            return "{" + " ".join(map(str, s)) + "}"

        return f"(pt {lit(self.support)} ({' '.join(lit(z) for z in self.sorted_trace())}))"


def trace_of(A: BaseSet, support: Sequence[int]) -> tuple[int, ...]:
    return tuple(x for x in support if x in A)


def indep_member(p: GroundPoint, A: BaseSet) -> bool:
    """``p`` lies in ``I(A)``: the trace of ``p`` contains ``A & support``."""
    return trace_of(A, p.support) in p.trace


def distinctness_witness(A: BaseSet, B: BaseSet, search_bound: int = DEFAULT_SEARCH_BOUND) -> GroundPoint:
    """The point ``<{g}, {{g}}>`` for the least found ``g`` in ``A ^ B``.

    It lies in exactly one of ``I(A)`` and ``I(B)``.
    """
    g = least_difference(A, B, search_bound)
    return GroundPoint((g,), frozenset({(g,)}))


def least_difference(A: BaseSet, B: BaseSet, search_bound: int = DEFAULT_SEARCH_BOUND) -> int:
    """Least element of ``A ^ B``; exact for finite/cofinite pairs, else searched below the bound."""
    exact = (FiniteSet, Cofinite)
    if isinstance(A, exact) and isinstance(B, exact):
        g = A.difference_witness(B)
        if g is None:
            raise NoDifferenceFound(search_bound)
        return g
    for x in range(search_bound):
        if (x in A) != (x in B):
            return x
    g = A.difference_witness(B)
    if g is None:
        g = B.difference_witness(A)
    if g is None or (g in A) == (g in B):
        raise NoDifferenceFound(search_bound)
    return g


def separating_support(
    positives: Sequence[BaseSet],
    negatives: Sequence[BaseSet],
    search_bound: int = DEFAULT_SEARCH_BOUND,
    width: int | None = None,
) -> tuple[int, ...]:
    """A finite ``X`` on which no positive and no negative have the same trace.

    ``A & X != B & X`` exactly when ``X`` meets ``A ^ B``, so this is a hitting
    set problem over the pool of least per-pair difference witnesses.  The
    result is the (size, lex)-least hitting subset of that pool; pools larger
    than ``EXACT_SEPARATION_POOL`` are returned whole (still separating, not minimal).
    """
    pairs = [(a, b) for a in positives for b in negatives]
    pool = sorted({least_difference(a, b, search_bound) for a, b in pairs})
    if len(pool) > EXACT_SEPARATION_POOL:
        if width is not None and len(pool) >= width:
            raise WidthExceeded(f"separating support of {len(pool)} elements needs width > {len(pool)}")
        return tuple(pool)
    masks = set()
    for a, b in pairs:
        masks.add(sum(1 << i for i, x in enumerate(pool) if (x in a) != (x in b)))
    limit = len(pool) if width is None else min(len(pool), width - 1)
    for k in range(limit + 1):
        for combo in combinations(range(len(pool)), k):
            chosen = sum(1 << i for i in combo)
            if all(m & chosen for m in masks):
                return tuple(pool[i] for i in combo)
    raise WidthExceeded(f"no separating support with fewer than {width} elements")


# ---------------------------------------------------------------------------
# families and cells


@dataclass(frozen=True)
class FamilySpec:
    """Named generators ``A_0, A_1, ...`` over a base domain."""

    domain: BaseDomain
    generators: tuple[BaseSet, ...]
    check_bound: int = field(default=DEFAULT_SEARCH_BOUND, compare=False)
    validate: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        gens = tuple(as_base_set(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if not self.validate:
            return
        for i, j in combinations(range(len(gens)), 2):
            try:
                least_difference(gens[i], gens[j], self.check_bound)
            except NoDifferenceFound:
                raise ValueError(f"generators {i} and {j} agree below {self.check_bound}") from None

    def __len__(self):
        return len(self.generators)

    def generator(self, index: int) -> BaseSet:
        if not isinstance(index, int) or not 0 <= index < len(self.generators):
            raise UnknownGenerator(index)
        return self.generators[index]

    @classmethod
    def full_powerset(cls, n: int, width: int | None = None) -> "FamilySpec":
        """Every subset of ``{0..n-1}`` as a generator, in (size, lex) order."""
        subsets = [c for k in range(n + 1) for c in combinations(range(n), k)]
        return cls(BaseDomain.finite(n, width), tuple(FiniteSet(s) for s in subsets))

    @classmethod
    def singletons(cls, count: int, width: int) -> "FamilySpec":
        """Generator ``g`` is ``{g}`` over omega; used as a fresh family per variable."""
        return cls(BaseDomain.omega(width), tuple(FiniteSet((g,)) for g in range(count)), validate=False)


def _split_signs(family: FamilySpec, signs: Mapping[int, int]):
    pos, neg = [], []
    for g in sorted(signs):
        (pos if signs[g] else neg).append(family.generator(g))
    return pos, neg


def _sparse_masks(max_bits: int, nbits: int) -> Iterator[int]:
    """Integers below ``2**nbits`` with at most ``max_bits`` set bits, increasing."""
    yield 0
    if max_bits <= 0:
        return
    for top in range(nbits):
        for low in _sparse_masks(max_bits - 1, top):
            yield 1 << top | low


def iter_cell_witnesses(
    family: FamilySpec, signs: Mapping[int, int], search_bound: int = DEFAULT_SEARCH_BOUND
) -> Iterator[GroundPoint]:
    """All points ``<X, {A & X : A positive}>`` with ``X`` a superset of the separating support.

    Supersets are produced by adding fresh elements in binary-counting order
    over the increasing list of fresh elements, skipping those too wide.
    """
    pos, neg = _split_signs(family, signs)
    domain = family.domain
    base = separating_support(pos, neg, search_bound, domain.width)
    limit = domain.size if domain.is_finite else max(search_bound, (max(base) + 1) if base else 0)
    taken = set(base)
    fresh = [x for x in range(limit) if x not in taken]
    room = domain.width - 1 - len(base)
    for m in _sparse_masks(room, len(fresh)):
        support = tuple(sorted(base + tuple(x for i, x in enumerate(fresh) if m >> i & 1)))
        p = GroundPoint(support, frozenset(trace_of(a, support) for a in pos))
        if not all(indep_member(p, a) for a in pos) or any(indep_member(p, b) for b in neg):
            raise AssertionError(f"constructed point {p} escapes its cell")
        yield p


def cell_witness(
    family: FamilySpec,
    signs: Mapping[int, int],
    count: int = 1,
    search_bound: int = DEFAULT_SEARCH_BOUND,
) -> list[GroundPoint]:
    """``count`` distinct points of the cell named by ``signs``.

    Raises ``ExhaustedSupports`` when the domain has fewer admissible supports.
    """
    out = []
    for p in iter_cell_witnesses(family, signs, search_bound):
        if len(out) == count:
            break
        out.append(p)
    if len(out) < count:
        raise ExhaustedSupports(count, len(out))
    return out


def ground_size(domain: BaseDomain, truncation: int) -> int:
    m = truncation if domain.size is None else min(domain.size, truncation)
    return sum(comb(m, k) * 2 ** (2**k) for k in range(min(domain.width, m + 1)))


def enumerate_ground(
    domain: BaseDomain, truncation: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[GroundPoint]:
    """Every ground point with support inside ``range(truncation)``, in canonical order."""
    total = ground_size(domain, truncation)
    if total > cap:
        raise SizeOverflow(f"{total} ground points exceed the cap {cap}")
    m = truncation if domain.size is None else min(domain.size, truncation)
    points = []
    for k in range(min(domain.width, m + 1)):
        for support in combinations(range(m), k):
            subsets = sorted(
                (c for j in range(k + 1) for c in combinations(support, j)), key=subset_key
            )
            for size in range(len(subsets) + 1):
                for trace in combinations(subsets, size):
                    points.append(GroundPoint(support, frozenset(trace)))
    return points


# ---------------------------------------------------------------------------
# symbolic set expressions over the family generators


class SetExpr:
    __slots__ = ()


@dataclass(frozen=True)
class Gen(SetExpr):
    index: int

    def __str__(self):
        return f"g{self.index}"


@dataclass(frozen=True)
class Complement(SetExpr):
    child: SetExpr

    def __str__(self):
        return f"(complement {self.child})"


@dataclass(frozen=True)
class Intersect(SetExpr):
    """``Intersect(())`` is the whole ground space."""

    children: tuple[SetExpr, ...]

    def __str__(self):
        return "(intersect" + "".join(f" {c}" for c in self.children) + ")"


@dataclass(frozen=True)
class Union(SetExpr):
    """``Union(())`` is the empty set."""

    children: tuple[SetExpr, ...]

    def __str__(self):
        return "(union" + "".join(f" {c}" for c in self.children) + ")"


FULL = Intersect(())
EMPTY = Union(())


def eval_setexpr(e: SetExpr, p: GroundPoint, family: FamilySpec) -> bool:
    """Whether ``p`` lies in the set denoted by ``e``."""
    if isinstance(e, Gen):
        return indep_member(p, family.generator(e.index))
    if isinstance(e, Complement):
        return not eval_setexpr(e.child, p, family)
    if isinstance(e, Intersect):
        return all(eval_setexpr(c, p, family) for c in e.children)
    if isinstance(e, Union):
        return any(eval_setexpr(c, p, family) for c in e.children)
    raise TypeError(f"not a set expression: {e!r}")


def setexpr_generators(e: SetExpr) -> set[int]:
    if isinstance(e, Gen):
        return {e.index}
    if isinstance(e, Complement):
        return setexpr_generators(e.child)
    return set().union(*(setexpr_generators(c) for c in e.children))


def all_sign_patterns(indices: Sequence[int]) -> Iterator[dict[int, int]]:
    for values in product((0, 1), repeat=len(indices)):
        yield dict(zip(indices, values))
