"""Readers and writers for the s-expression file formats.

Set literals::

    {0 1 3}   (co {0 1})   (builtin evens)   (builtin (mult 3))   (builtin (interval 2 9))

Ground point ``(pt {0 1} ({0}))``; set expression ``g0 | (complement e) |
(intersect e*) | (union e*)``.  Families::

    (family (domain finite 2) (width 3) (gen {0}) (gen {1}) ...)
    (family (domain omega) (width 9) (gen (builtin evens)) ...)
    (family (domain finite 2) (gen all-subsets))

Filters ``(filter (carrier finite 3) (width 3) (gen {0 1}) (gen {1 2}))`` or
``(filter (carrier symbolic (family ...)) (width 3) (gen g0) ...)``.
Assignments ``(assignment (a0 1) (a1 0))``; models as printed by
``Structure``: ``(model (domain 2) (const c 0) (rel P (0)) (fn f ((0) 1) ((1) 0)))``.
"""
from __future__ import annotations

from itertools import product

from .errors import ParseError
from .filters import FilterPresentation, FinitePowerset, Symbolic
from .henkin import Const, Structure
from .setcore import (
    BUILTINS,
    BaseDomain,
    BaseSet,
    Cofinite,
    Complement,
    FamilySpec,
    FiniteSet,
    Gen,
    GroundPoint,
    Intersect,
    SetExpr,
    Union,
)
from .sexpr import SBraces, SList, Symbol, as_int, fail, head, parse_all, parse_one, render


def _single(text: str, what: str):
    items = parse_all(text)
    if len(items) != 1:
        raise ParseError(f"a {what} file holds exactly one ({what} ...) form", 1, 1)
    if head(items[0]) != what:
        fail(items[0], f"expected ({what} ...)")
    return items[0]


def int_set(node) -> tuple[int, ...]:
    if not isinstance(node, SBraces):
        fail(node, f"expected a brace set like {{0 1}}, got {render(node)}")
    return tuple(sorted({as_int(x) for x in node}))


def braces(items) -> str:
    return "{" + " ".join(str(x) for x in sorted(items)) + "}"


# ---------------------------------------------------------------------------
# sets and points


def set_from_sexpr(node) -> BaseSet:
    if isinstance(node, SBraces):
        return FiniteSet(int_set(node))
    op = head(node)
    if op == "co" and len(node) == 2:
        return Cofinite(int_set(node[1]))
    if op == "builtin" and len(node) == 2:
        spec = node[1]
        name = str(spec) if isinstance(spec, Symbol) else head(spec)
        args = [] if isinstance(spec, Symbol) else [as_int(x) for x in spec[1:]]
        if name not in BUILTINS:
            fail(spec, f"unknown builtin set {name}; known: {', '.join(sorted(BUILTINS))}")
        try:
            return BUILTINS[name](*args)
        except (TypeError, ValueError) as exc:
            fail(spec, f"bad arguments for builtin {name}: {exc}")
    fail(node, f"expected a set literal, got {render(node)}")


def parse_set(text: str) -> BaseSet:
    return set_from_sexpr(parse_one(text))


def point_from_sexpr(node) -> GroundPoint:
    if head(node) != "pt" or len(node) != 3 or not isinstance(node[2], SList):
        fail(node, "expected (pt {support} ({z} ...))")
    try:
        return GroundPoint.make(int_set(node[1]), [int_set(z) for z in node[2]])
    except ValueError as exc:
        fail(node, str(exc))


def parse_point(text: str) -> GroundPoint:
    return point_from_sexpr(parse_one(text))


def setexpr_from_sexpr(node) -> SetExpr:
    if isinstance(node, Symbol):
        if node.startswith("g") and node[1:].isdigit():
            return Gen(int(node[1:]))
        fail(node, f"expected a generator g<n>, got {node}")
    op = head(node)
    if op == "complement" and len(node) == 2:
        return Complement(setexpr_from_sexpr(node[1]))
    if op in ("intersect", "union"):
        kids = tuple(setexpr_from_sexpr(x) for x in node[1:])
        return Intersect(kids) if op == "intersect" else Union(kids)
    fail(node, "malformed set expression")


def parse_setexpr(text: str) -> SetExpr:
    return setexpr_from_sexpr(parse_one(text))


# ---------------------------------------------------------------------------
# families and filters


def _fields(node, allowed):
    """Split ``(tag (key ...) ...)`` into a dict of single fields and a list of ``gen`` entries."""
    single, gens = {}, []
    for item in node[1:]:
        key = head(item)
        if key == "gen":
            if len(item) != 2:
                fail(item, "expected (gen x)")
            gens.append(item[1])
        elif key in allowed:
            if key in single:
                fail(item, f"duplicate ({key} ...)")
            single[key] = item
        else:
            fail(item, f"unexpected field {render(item)[:40]}")
    return single, gens


def _width(single, default):
    if "width" not in single:
        return default
    item = single["width"]
    if len(item) != 2:
        fail(item, "expected (width k)")
    return as_int(item[1])


def family_from_sexpr(node, width: int | None = None) -> FamilySpec:
    """``width`` overrides the file's (width k) when given."""
    if head(node) != "family":
        fail(node, "expected (family ...)")
    single, gens = _fields(node, {"domain", "width"})
    if "domain" not in single:
        fail(node, "family needs (domain finite n) or (domain omega)")
    dom = single["domain"]
    if len(dom) == 3 and dom[1] == "finite":
        n = as_int(dom[2])
    elif len(dom) == 2 and dom[1] == "omega":
        n = None
    else:
        fail(dom, "expected (domain finite n) or (domain omega)")
    if width is None:
        width = _width(single, None if n is None else n + 1)
    if width is None:
        fail(node, "an omega family needs (width k)")
    try:
        domain = BaseDomain(n, width)
    except ValueError as exc:
        fail(node, str(exc))
    sets = []
    for g in gens:
        if isinstance(g, Symbol) and g == "all-subsets":
            if n is None:
                fail(g, "all-subsets needs a finite domain")
            sets += FamilySpec.full_powerset(n, width).generators
        else:
            sets.append(set_from_sexpr(g))
    for s in sets:
        if isinstance(s, FiniteSet) and n is not None and any(x >= n for x in s.items):
            fail(node, f"generator {s} leaves finite({n})")
    try:
        return FamilySpec(domain, tuple(sets))
    except ValueError as exc:
        fail(node, str(exc))


def parse_family(text: str, width: int | None = None) -> FamilySpec:
    return family_from_sexpr(_single(text, "family"), width)


def format_family(family: FamilySpec) -> str:
    dom = family.domain
    kind = "omega" if dom.size is None else f"finite {dom.size}"
    lines = [f"(family (domain {kind}) (width {dom.width})"]
    lines += [f"  (gen {g})" for g in family.generators]
    lines[-1] += ")"
    return "\n".join(lines) + "\n"


def filter_from_sexpr(node, width: int | None = None) -> FilterPresentation:
    if head(node) != "filter":
        fail(node, "expected (filter ...)")
    single, gens = _fields(node, {"carrier", "width"})
    if "carrier" not in single:
        fail(node, "filter needs (carrier finite n) or (carrier symbolic (family ...))")
    car = single["carrier"]
    if width is None:
        width = _width(single, 2)
    if not gens:
        fail(node, "a filter needs at least one (gen ...)")
    try:
        if len(car) == 3 and car[1] == "finite":
            n = as_int(car[2])
            return FilterPresentation(FinitePowerset(n), tuple(int_set(g) for g in gens), width)
        if len(car) == 3 and car[1] == "symbolic":
            family = family_from_sexpr(car[2])
            exprs = tuple(setexpr_from_sexpr(g) for g in gens)
            for e in exprs:
                _check_generators(e, family, car)
            return FilterPresentation(Symbolic(family), exprs, width)
    except ValueError as exc:
        fail(node, str(exc))
    fail(car, "expected (carrier finite n) or (carrier symbolic (family ...))")


def _check_generators(e: SetExpr, family: FamilySpec, node):
    if isinstance(e, Gen):
        if e.index >= len(family):
            fail(node, f"g{e.index} is not a generator of the family ({len(family)} generators)")
    elif isinstance(e, Complement):
        _check_generators(e.child, family, node)
    else:
        for c in e.children:
            _check_generators(c, family, node)


def parse_filter(text: str, width: int | None = None) -> FilterPresentation:
    return filter_from_sexpr(_single(text, "filter"), width)


def format_filter(F: FilterPresentation) -> str:
    if isinstance(F.carrier, FinitePowerset):
        carrier = f"(carrier finite {F.carrier.n})"
        gens = [braces(g) for g in F.generators]
    else:
        carrier = "(carrier symbolic " + format_family(F.carrier.family).strip() + ")"
        gens = [str(g) for g in F.generators]
    lines = [f"(filter {carrier} (width {F.width})"] + [f"  (gen {g})" for g in gens]
    lines[-1] += ")"
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# cell specs (command line): "0=1,3=0"; empty means no constraint


def parse_cell_spec(text: str) -> dict[int, int]:
    signs = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        g, sep, v = part.partition("=")
        if not sep or not g.strip().isdigit() or v.strip() not in ("0", "1"):
            raise ParseError(f"bad cell entry {part!r}; expected index=0 or index=1")
        g = int(g)
        if g in signs and signs[g] != int(v):
            raise ParseError(f"generator {g} given both signs")
        signs[g] = int(v)
    return dict(sorted(signs.items()))


def format_cell_spec(signs) -> str:
    return ",".join(f"{g}={v}" for g, v in sorted(dict(signs).items()))


# ---------------------------------------------------------------------------
# assignments and models


def parse_assignment(text: str) -> dict[int, int]:
    node = _single(text, "assignment")
    out = {}
    for item in node[1:]:
        if not isinstance(item, SList) or len(item) != 2 or not isinstance(item[0], Symbol):
            fail(item, "expected (a<n> 0|1)")
        name = str(item[0])
        if not (name.startswith("a") and name[1:].isdigit()):
            fail(item[0], f"expected an atom a<n>, got {name}")
        v = as_int(item[1])
        if v > 1:
            fail(item[1], "truth values are 0 or 1")
        if int(name[1:]) in out:
            fail(item, f"{name} assigned twice")
        out[int(name[1:])] = v
    return dict(sorted(out.items()))


def format_assignment(S) -> str:
    return "(assignment" + "".join(f" (a{g} {int(v)})" for g, v in sorted(S.items())) + ")\n"


def _element(node, size):
    e = as_int(node)
    if e >= size:
        fail(node, f"element {e} outside domain of size {size}")
    return e


def _tuple(node, size):
    if not isinstance(node, SList) or head(node) is not None and not node[0].isdigit():
        fail(node, "expected a tuple of elements")
    return tuple(_element(x, size) for x in node)


def parse_model(text: str) -> Structure:
    node = _single(text, "model")
    if len(node) < 2 or head(node[1]) != "domain" or len(node[1]) != 2:
        fail(node, "a model starts with (domain k)")
    size = as_int(node[1][1])
    if size < 1:
        fail(node[1], "a model needs a nonempty domain")
    constants, functions, relations, arities = {}, {}, {}, {}
    for item in node[2:]:
        kind = head(item)
        if kind == "const" and len(item) == 3:
            constants[Const(str(item[1]))] = _element(item[2], size)
        elif kind == "rel" and len(item) >= 2:
            rows = {_tuple(t, size) for t in item[2:]}
            if len({len(r) for r in rows}) > 1:
                fail(item, "relation tuples of mixed arity")
            relations[str(item[1])] = rows
            arities[str(item[1])] = len(next(iter(rows))) if rows else 0
        elif kind == "fn" and len(item) >= 3:
            table = {}
            for entry in item[2:]:
                if not isinstance(entry, SList) or len(entry) != 2:
                    fail(entry, "expected ((args) value)")
                table[_tuple(entry[0], size)] = _element(entry[1], size)
            arity = len(next(iter(table)))
            if set(table) != set(product(range(size), repeat=arity)):
                fail(item, f"function {item[1]} is not total on the domain")
            functions[str(item[1])] = table
            arities[str(item[1])] = arity
        else:
            fail(item, f"unexpected model entry {render(item)[:40]}")
    return Structure(size, constants, functions, relations, arities=arities)


__all__ = [
    "int_set", "braces", "set_from_sexpr", "parse_set", "point_from_sexpr", "parse_point",
    "setexpr_from_sexpr", "parse_setexpr", "family_from_sexpr", "parse_family", "format_family",
    "filter_from_sexpr", "parse_filter", "format_filter", "parse_cell_spec", "format_cell_spec",
    "parse_assignment", "format_assignment", "parse_model",
]
