"""Quantified theories reduced to propositional ones by witness constants.

Every sentence of the closure gets a propositional variable ``[[phi]]``.
Axioms tie each variable to its immediate subsentences (negation,
conjunction, disjunction), tie an existential to its witness instance, and
make every term instance of an existential's body imply the existential.
Equality gets reflexivity, symmetry, transitivity and congruence axioms.
A satisfying assignment is turned back into a structure whose elements are
classes of closure terms.

The closure tracks, per sentence, whether its truth must be reflected
positively (``+``: if ``[[phi]]`` is true then ``phi`` holds), negatively
(``-``) or not at all (``0``).  Witnesses are only introduced for
existentials needed positively, and term instances are only expanded for
existentials needed negatively; this keeps the closure finite whenever
quantifier alternation allows it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterable, Sequence

from . import proplogic as pl
from .errors import (
    ClosureBudgetExceeded,
    InconsistentAssignment,
    SignatureMismatch,
    UniverseOverflow,
)
from .filters import compactness_solve
from .setcore import DEFAULT_SEARCH_BOUND, FamilySpec
from .sexpr import SList, Symbol, fail, head, parse_all

DEFAULT_MAX_ROUNDS = 8
DEFAULT_TERM_CAP = 32


# ---------------------------------------------------------------------------
# terms and formulas


class Term:
    __slots__ = ()


@dataclass(frozen=True)
class Var(Term):
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Const(Term):
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Witness(Term):
    """Witness constant number ``index`` for the (canonical) existential sentence ``source``."""

    source: "Exists"
    index: int

    def __str__(self):
        return f"(witness {self.index} {self.source})"


@dataclass(frozen=True)
class App(Term):
    fn: str
    args: tuple[Term, ...]

    def __str__(self):
        return f"({self.fn}" + "".join(f" {a}" for a in self.args) + ")"


class FOFormula:
    __slots__ = ()


@dataclass(frozen=True)
class Rel(FOFormula):
    name: str
    args: tuple[Term, ...] = ()

    def __str__(self):
        return f"({self.name}" + "".join(f" {a}" for a in self.args) + ")"


@dataclass(frozen=True)
class Eq(FOFormula):
    left: Term
    right: Term

    def __str__(self):
        return f"(= {self.left} {self.right})"


@dataclass(frozen=True)
class Neg(FOFormula):
    child: FOFormula

    def __str__(self):
        return f"(not {self.child})"


@dataclass(frozen=True)
class Conj(FOFormula):
    children: tuple[FOFormula, ...]

    def __str__(self):
        return "(and" + "".join(f" {c}" for c in self.children) + ")"


@dataclass(frozen=True)
class Disj(FOFormula):
    children: tuple[FOFormula, ...]

    def __str__(self):
        return "(or" + "".join(f" {c}" for c in self.children) + ")"


@dataclass(frozen=True)
class Exists(FOFormula):
    vars: tuple[str, ...]
    body: FOFormula

    def __str__(self):
        return f"(exists ({' '.join(self.vars)}) {self.body})"


@dataclass(frozen=True)
class Forall(FOFormula):
    vars: tuple[str, ...]
    body: FOFormula

    def __str__(self):
        return f"(forall ({' '.join(self.vars)}) {self.body})"


def implies(a: FOFormula, b: FOFormula) -> Disj:
    return Disj((Neg(a), b))


ATOMIC = (Rel, Eq)
QUANTIFIED = (Exists, Forall)


def subst_term(t: Term, mapping) -> Term:
    if isinstance(t, Var):
        return mapping.get(t.name, t)
    if isinstance(t, App):
        return App(t.fn, tuple(subst_term(a, mapping) for a in t.args))
    return t


def subst(f: FOFormula, mapping: dict[str, Term]) -> FOFormula:
    """Replace free variables; substituted terms are closed, so no capture can occur."""
    if not mapping:
        return f
    if isinstance(f, Rel):
        return Rel(f.name, tuple(subst_term(a, mapping) for a in f.args))
    if isinstance(f, Eq):
        return Eq(subst_term(f.left, mapping), subst_term(f.right, mapping))
    if isinstance(f, Neg):
        return Neg(subst(f.child, mapping))
    if isinstance(f, (Conj, Disj)):
        return type(f)(tuple(subst(c, mapping) for c in f.children))
    inner = {k: v for k, v in mapping.items() if k not in f.vars}
    return type(f)(f.vars, subst(f.body, inner))


def free_vars(f: FOFormula) -> set[str]:
    def of_term(t):
        if isinstance(t, Var):
            return {t.name}
        if isinstance(t, App):
            return set().union(*(of_term(a) for a in t.args))
        return set()

    if isinstance(f, Rel):
        return set().union(*(of_term(a) for a in f.args))
    if isinstance(f, Eq):
        return of_term(f.left) | of_term(f.right)
    if isinstance(f, Neg):
        return free_vars(f.child)
    if isinstance(f, (Conj, Disj)):
        return set().union(*(free_vars(c) for c in f.children))
    return free_vars(f.body) - set(f.vars)


def normalize(f: FOFormula) -> FOFormula:
    """Rewrite ``forall xs. b`` as ``not exists xs. not b``."""
    if isinstance(f, Neg):
        return Neg(normalize(f.child))
    if isinstance(f, (Conj, Disj)):
        return type(f)(tuple(normalize(c) for c in f.children))
    if isinstance(f, Exists):
        return Exists(f.vars, normalize(f.body))
    if isinstance(f, Forall):
        return Neg(Exists(f.vars, Neg(normalize(f.body))))
    return f


def canonical(f: FOFormula) -> FOFormula:
    """Alpha-normal form: bound variables renamed ``_0, _1, ...`` in binding order."""
    counter = [0]

    def go(g, env):
        if isinstance(g, ATOMIC):
            return subst(g, env)
        if isinstance(g, Neg):
            return Neg(go(g.child, env))
        if isinstance(g, (Conj, Disj)):
            return type(g)(tuple(go(c, env) for c in g.children))
        names = []
        inner = dict(env)
        for v in g.vars:
            name = f"_{counter[0]}"
            counter[0] += 1
            names.append(name)
            inner[v] = Var(name)
        return type(g)(tuple(names), go(g.body, inner))

    return go(f, {})


def subterms(t: Term):
    yield t
    if isinstance(t, App):
        for a in t.args:
            yield from subterms(a)


def atom_terms(f: FOFormula) -> list[Term]:
    """Closed terms (with subterms) occurring in an atomic formula, left to right."""
    top = f.args if isinstance(f, Rel) else (f.left, f.right)
    return [s for t in top for s in subterms(t)]


def is_quantifier_free(f: FOFormula) -> bool:
    if isinstance(f, ATOMIC):
        return True
    if isinstance(f, Neg):
        return is_quantifier_free(f.child)
    if isinstance(f, (Conj, Disj)):
        return all(is_quantifier_free(c) for c in f.children)
    return False


# ---------------------------------------------------------------------------
# signatures


@dataclass
class Signature:
    constants: set[str] = field(default_factory=set)
    functions: dict[str, int] = field(default_factory=dict)
    relations: dict[str, int] = field(default_factory=dict)

    def add_term(self, t: Term):
        if isinstance(t, Const):
            self._claim(t.name, "constant", 0)
            self.constants.add(t.name)
        elif isinstance(t, App):
            self._claim(t.fn, "function", len(t.args))
            self.functions[t.fn] = len(t.args)
            for a in t.args:
                self.add_term(a)

    def add_formula(self, f: FOFormula):
        if isinstance(f, Rel):
            self._claim(f.name, "relation", len(f.args))
            self.relations[f.name] = len(f.args)
            for a in f.args:
                self.add_term(a)
        elif isinstance(f, Eq):
            self.add_term(f.left)
            self.add_term(f.right)
        elif isinstance(f, Neg):
            self.add_formula(f.child)
        elif isinstance(f, (Conj, Disj)):
            for c in f.children:
                self.add_formula(c)
        else:
            self.add_formula(f.body)

    def _claim(self, name, kind, arity):
        kinds = {"constant": self.constants, "function": self.functions, "relation": self.relations}
        for other, table in kinds.items():
            if name in table and (other != kind or (kind != "constant" and table[name] != arity)):
                raise SignatureMismatch(f"{name} used as {kind}/{arity} and as {other}")

    @classmethod
    def of(cls, theory: Iterable[FOFormula]) -> "Signature":
        sig = cls()
        for f in theory:
            sig.add_formula(f)
        return sig


def uses_equality(f: FOFormula) -> bool:
    if isinstance(f, Eq):
        return True
    if isinstance(f, Rel):
        return False
    if isinstance(f, Neg):
        return uses_equality(f.child)
    if isinstance(f, (Conj, Disj)):
        return any(uses_equality(c) for c in f.children)
    return uses_equality(f.body)


# ---------------------------------------------------------------------------
# witness closure

DEFAULT_CONSTANT = Const("@")


@dataclass
class Closure:
    theory: tuple[FOFormula, ...]
    signature: Signature
    polarity: dict  # sentence -> set of '+', '-'
    terms: dict  # ordered set of closed terms
    witnesses: dict  # canonical existential -> tuple of Witness
    negative_exists: dict  # existential -> set of instantiated tuples
    rounds: int
    equality: bool
    complete: bool = True

    @property
    def constants(self) -> list[Term]:
        return [t for t in self.terms if isinstance(t, (Const, Witness))]


def close_witnesses(
    theory: Sequence[FOFormula], max_rounds: int = DEFAULT_MAX_ROUNDS, term_cap: int = DEFAULT_TERM_CAP
) -> Closure:
    """Add witness constants until every positively needed existential has one.

    One round processes the sentences produced by the previous round's
    witness and term instantiations.  Raises ``ClosureBudgetExceeded`` (with
    the partial closure attached) if instances keep appearing after
    ``max_rounds`` rounds, and ``UniverseOverflow`` past ``term_cap`` terms.
    """
    sentences = []
    for f in theory:
        if free_vars(f):
            raise ValueError(f"{f} has free variables {sorted(free_vars(f))}")
        sentences.append(canonical(normalize(f)))
    signature = Signature.of(theory)
    closure = Closure(
        theory=tuple(sentences),
        signature=signature,
        polarity={},
        terms={},
        witnesses={},
        negative_exists={},
        rounds=0,
        equality=any(uses_equality(f) for f in theory),
    )
    frontier = [(f, "+") for f in sentences]
    while True:
        next_frontier = _close_round(closure, frontier)
        if len(closure.terms) > term_cap:
            raise UniverseOverflow(f"{len(closure.terms)} closure terms exceed the cap {term_cap}")
        if not closure.terms and closure.negative_exists:
            closure.terms[DEFAULT_CONSTANT] = None
        for E, done in closure.negative_exists.items():
            for tup in product(closure.terms, repeat=len(E.vars)):
                if tup not in done:
                    done.add(tup)
                    instance = canonical(subst(E.body, dict(zip(E.vars, tup))))
                    next_frontier.append((instance, "-"))
        if not next_frontier:
            break
        if closure.rounds == max_rounds:
            closure.complete = False
            raise ClosureBudgetExceeded(max_rounds, closure)
        closure.rounds += 1
        frontier = next_frontier
    if not closure.terms:
        closure.terms[DEFAULT_CONSTANT] = None
    return closure


def _close_round(closure: Closure, frontier) -> list:
    deferred = []
    stack = list(reversed(frontier))
    while stack:
        f, p = stack.pop()
        seen = closure.polarity.setdefault(f, set())
        if p in seen:
            continue
        seen.add(p)
        if isinstance(f, ATOMIC):
            for t in atom_terms(f):
                closure.terms.setdefault(t, None)
        elif isinstance(f, Neg):
            stack.append((f.child, "-" if p == "+" else "+"))
        elif isinstance(f, (Conj, Disj)):
            stack.extend((c, p) for c in reversed(f.children))
        elif p == "+":
            if f not in closure.witnesses:
                ws = tuple(Witness(f, i) for i in range(len(f.vars)))
                closure.witnesses[f] = ws
                for w in ws:
                    closure.terms.setdefault(w, None)
            instance = canonical(subst(f.body, dict(zip(f.vars, closure.witnesses[f]))))
            deferred.append((instance, "+"))
        else:
            closure.negative_exists.setdefault(f, set())
    return deferred


# ---------------------------------------------------------------------------
# propositional image


@dataclass
class PropImage:
    closure: Closure
    sentences: list  # variable index -> sentence
    index: dict  # sentence -> variable index
    axioms: list  # (tag, propositional formula)
    instances: dict  # existential -> list of instance sentences

    def var(self, f: FOFormula) -> pl.Atom:
        return pl.Atom(self.index[f])

    @property
    def formulas(self) -> list[pl.Formula]:
        return [ax for _, ax in self.axioms]


def _truth_table_tautology(f: FOFormula) -> bool:
    shells = []

    def collect(g):
        if isinstance(g, ATOMIC):
            if g not in shells:
                shells.append(g)
        elif isinstance(g, Neg):
            collect(g.child)
        else:
            for c in g.children:
                collect(c)

    def value(g, env):
        if isinstance(g, ATOMIC):
            return env[g]
        if isinstance(g, Neg):
            return not value(g.child, env)
        if isinstance(g, Conj):
            return all(value(c, env) for c in g.children)
        return any(value(c, env) for c in g.children)

    collect(f)
    return all(value(f, dict(zip(shells, bits))) for bits in product((False, True), repeat=len(shells)))


def propositionalize(closure: Closure) -> PropImage:
    """Variables for the closure plus the axioms tying them together."""
    if not closure.complete:
        raise ValueError("the witness closure is incomplete")
    terms = list(closure.terms)
    table = {f: None for f in closure.polarity}
    instances = {}
    # term instances of every existential body; new ones are neutral and add no terms
    stack = [f for f in table if isinstance(f, Exists)]
    while stack:
        E = stack.pop(0)
        if E in instances:
            continue
        instances[E] = []
        for tup in product(terms, repeat=len(E.vars)):
            inst = canonical(subst(E.body, dict(zip(E.vars, tup))))
            instances[E].append(inst)
            for g in _structural_closure(inst):
                if g not in table:
                    table[g] = None
                    if isinstance(g, Exists):
                        stack.append(g)
    if closure.equality:
        for t, u in product(terms, repeat=2):
            table.setdefault(Eq(t, u), None)
    sentences = list(table)
    index = {f: i for i, f in enumerate(sentences)}

    def v(f):
        return pl.Atom(index[f])

    axioms = [("theory", v(f)) for f in closure.theory]
    for f in sentences:
        if isinstance(f, Neg):
            axioms.append(("negation", pl.iff(v(f), pl.Not(v(f.child)))))
        elif isinstance(f, Conj):
            axioms.append(("conjunction", pl.iff(v(f), pl.And(tuple(v(c) for c in f.children)))))
        elif isinstance(f, Disj):
            axioms.append(("disjunction", pl.iff(v(f), pl.Or(tuple(v(c) for c in f.children)))))
        elif isinstance(f, Exists):
            ws = closure.witnesses.get(f)
            target = f
            if ws is not None:
                target = canonical(subst(f.body, dict(zip(f.vars, ws))))
                axioms.append(("witness", pl.iff(v(f), v(target))))
            for inst in instances[f]:
                if inst != target:
                    axioms.append(("instance", pl.implies(v(inst), v(target))))
        if not isinstance(f, ATOMIC) and is_quantifier_free(f) and _truth_table_tautology(f):
            axioms.append(("tautology", v(f)))
    if closure.equality:
        axioms += _equality_axioms(terms, sentences, v)
    return PropImage(closure, sentences, index, axioms, instances)


def _structural_closure(f: FOFormula):
    yield f
    if isinstance(f, Neg):
        yield from _structural_closure(f.child)
    elif isinstance(f, (Conj, Disj)):
        for c in f.children:
            yield from _structural_closure(c)


def _equality_axioms(terms, sentences, v):
    def eq(t, u):
        return v(Eq(t, u))

    out = [("eq-refl", eq(t, t)) for t in terms]
    out += [("eq-sym", pl.implies(eq(t, u), eq(u, t))) for t, u in permutations(terms, 2)]
    out += [
        ("eq-trans", pl.implies(pl.And((eq(t, u), eq(u, w))), eq(t, w)))
        for t, u, w in permutations(terms, 3)
    ]
    in_universe = set(terms)
    apps = [t for t in terms if isinstance(t, App)]
    for s, t in permutations(apps, 2):
        if s.fn == t.fn:
            same_args = pl.And(tuple(eq(a, b) for a, b in zip(s.args, t.args)))
            out.append(("eq-cong", pl.implies(same_args, eq(s, t))))
    atoms = [f for f in sentences if isinstance(f, Rel) and all(a in in_universe for a in f.args)]
    for r, q in permutations(atoms, 2):
        if r.name == q.name:
            same_args = tuple(eq(a, b) for a, b in zip(r.args, q.args))
            out.append(("eq-cong", pl.implies(pl.And(same_args + (v(r),)), v(q))))
    return out


# ---------------------------------------------------------------------------
# structures


@dataclass
class Structure:
    size: int
    constants: dict  # constant term -> element
    functions: dict  # name -> {args tuple: element}
    relations: dict  # name -> set of tuples
    term_class: dict = field(default_factory=dict)
    arities: dict = field(default_factory=dict)
    labels: dict = field(default_factory=dict)  # witness constant -> short display name

    def label(self, t: Term) -> str:
        return self.labels.get(t, str(t))

    def __str__(self):
        lines = [f"; {name} = {t}" for t, name in self.labels.items()]
        lines.append(f"(model (domain {self.size})")
        for c, e in self.constants.items():
            lines.append(f"  (const {self.label(c)} {e})")
        for r in sorted(self.relations):
            tuples = " ".join("(" + " ".join(map(str, t)) + ")" for t in sorted(self.relations[r]))
            lines.append(f"  (rel {r}{' ' + tuples if tuples else ''})")
        for fn in sorted(self.functions):
            entries = " ".join(
                "((" + " ".join(map(str, args)) + f") {val})" for args, val in sorted(self.functions[fn].items())
            )
            lines.append(f"  (fn {fn} {entries})")
        lines[-1] += ")"
        return "\n".join(lines)


def extract_structure(image: PropImage, S) -> Structure:
    """Quotient the closure terms by the true equalities and read off relations and functions."""
    for tag, ax in image.axioms:
        if not pl.evaluate(ax, S):
            raise InconsistentAssignment(tag, ax)
    closure = image.closure
    terms = list(closure.terms)
    parent = {t: t for t in terms}

    def find(t):
        while parent[t] != t:
            t = parent[t]
        return t

    if closure.equality:
        for t, u in product(terms, repeat=2):
            if S[image.index[Eq(t, u)]]:
                rt, ru = find(t), find(u)
                if rt != ru:
                    parent[max(rt, ru, key=terms.index)] = min(rt, ru, key=terms.index)
    reps = list(dict.fromkeys(find(t) for t in terms))
    cls = {t: reps.index(find(t)) for t in terms}
    size = len(reps)
    sig = closure.signature
    constants = {t: cls[t] for t in terms if isinstance(t, (Const, Witness))}
    for name in sorted(sig.constants):
        if Const(name) not in constants:
            constants[Const(name)] = 0
    functions = {}
    for fn, arity in sig.functions.items():
        table = {args: 0 for args in product(range(size), repeat=arity)}
        for t in reversed(terms):  # earliest defining term wins
            if isinstance(t, App) and t.fn == fn:
                table[tuple(cls[a] for a in t.args)] = cls[t]
        functions[fn] = table
    relations = {r: set() for r in sig.relations}
    for f in image.sentences:
        if isinstance(f, Rel) and all(a in cls for a in f.args) and S[image.index[f]]:
            relations[f.name].add(tuple(cls[a] for a in f.args))
    arities = dict(sig.functions) | dict(sig.relations)
    labels = {w: f"w{i}" for i, w in enumerate(t for t in terms if isinstance(t, Witness))}
    return Structure(size, constants, functions, relations, cls, arities, labels)


def eval_term(M: Structure, t: Term, env: dict) -> int:
    if isinstance(t, Var):
        try:
            return env[t.name]
        except KeyError:
            raise SignatureMismatch(f"free variable {t.name}") from None
    if isinstance(t, App):
        if t.fn not in M.functions:
            raise SignatureMismatch(f"function {t.fn} is not interpreted")
        args = tuple(eval_term(M, a, env) for a in t.args)
        try:
            return M.functions[t.fn][args]
        except KeyError:
            raise SignatureMismatch(f"function {t.fn} has no value at {args}") from None
    if t not in M.constants:
        raise SignatureMismatch(f"constant {t} is not interpreted")
    return M.constants[t]


def model_check(M: Structure, f: FOFormula, env: dict | None = None) -> bool:
    """Satisfaction with quantifiers ranging over ``range(M.size)``."""
    env = {} if env is None else env
    if isinstance(f, Rel):
        if f.name not in M.relations:
            raise SignatureMismatch(f"relation {f.name} is not interpreted")
        return tuple(eval_term(M, a, env) for a in f.args) in M.relations[f.name]
    if isinstance(f, Eq):
        return eval_term(M, f.left, env) == eval_term(M, f.right, env)
    if isinstance(f, Neg):
        return not model_check(M, f.child, env)
    if isinstance(f, Conj):
        return all(model_check(M, c, env) for c in f.children)
    if isinstance(f, Disj):
        return any(model_check(M, c, env) for c in f.children)
    values = (
        model_check(M, f.body, {**env, **dict(zip(f.vars, elems))})
        for elems in product(range(M.size), repeat=len(f.vars))
    )
    return any(values) if isinstance(f, Exists) else all(values)


# ---------------------------------------------------------------------------
# pipeline


@dataclass
class HenkinRun:
    structure: Structure
    image: PropImage
    assignment: dict


def henkin_run(
    theory: Sequence[FOFormula],
    max_rounds: int = DEFAULT_MAX_ROUNDS,
    term_cap: int = DEFAULT_TERM_CAP,
    search_bound: int = DEFAULT_SEARCH_BOUND,
) -> HenkinRun:
    closure = close_witnesses(theory, max_rounds, term_cap)
    image = propositionalize(closure)
    nvars = len(image.sentences)
    width = max(nvars + 1, max((pl.max_arity(f) for f in image.formulas), default=0) + 1, 2)
    S = compactness_solve(image.formulas, FamilySpec.singletons(nvars, width), search_bound)
    M = extract_structure(image, S)
    for f in theory:
        if not model_check(M, f):
            raise AssertionError(f"extracted structure falsifies {f}")
    return HenkinRun(M, image, S)


def henkin_pipeline(theory: Sequence[FOFormula], **kwargs) -> Structure:
    """Solve a first-order theory; raises ``Unsatisfiable`` when it has no model."""
    return henkin_run(theory, **kwargs).structure


# ---------------------------------------------------------------------------
# syntax


def term_from_sexpr(node, bound: frozenset) -> Term:
    if isinstance(node, Symbol):
        if node in bound:
            return Var(str(node))
        if node[0].isdigit():
            fail(node, f"term names may not start with a digit: {node}")
        return Const(str(node))
    op = head(node)
    if op is None or op in {"not", "and", "or", "exists", "forall", "=", "implies", "iff"}:
        fail(node, "malformed term")
    return App(op, tuple(term_from_sexpr(a, bound) for a in node[1:]))


def fo_from_sexpr(node, bound: frozenset = frozenset()) -> FOFormula:
    if isinstance(node, Symbol):
        return Rel(str(node))
    op = head(node)
    if op is None:
        fail(node, "malformed formula")
    rest = node[1:]
    if op == "not" and len(rest) == 1:
        return Neg(fo_from_sexpr(rest[0], bound))
    if op in ("and", "or"):
        kids = tuple(fo_from_sexpr(x, bound) for x in rest)
        return Conj(kids) if op == "and" else Disj(kids)
    if op == "implies" and len(rest) == 2:
        return implies(fo_from_sexpr(rest[0], bound), fo_from_sexpr(rest[1], bound))
    if op == "iff" and len(rest) == 2:
        a, b = (fo_from_sexpr(x, bound) for x in rest)
        return Conj((implies(a, b), implies(b, a)))
    if op in ("exists", "forall"):
        if len(rest) != 2 or not isinstance(rest[0], SList) or not rest[0]:
            fail(node, f"expected ({op} (x ...) f)")
        names = tuple(str(x) for x in rest[0])
        if not all(isinstance(x, Symbol) for x in rest[0]) or len(set(names)) != len(names):
            fail(rest[0], "quantifier block must list distinct variable names")
        body = fo_from_sexpr(rest[1], bound | set(names))
        return Exists(names, body) if op == "exists" else Forall(names, body)
    if op == "=":
        if len(rest) != 2:
            fail(node, "= takes two terms")
        return Eq(term_from_sexpr(rest[0], bound), term_from_sexpr(rest[1], bound))
    return Rel(op, tuple(term_from_sexpr(a, bound) for a in rest))


def parse_fo(text: str) -> FOFormula:
    items = parse_all(text)
    if len(items) != 1:
        fail(items[1] if items else None, "expected one formula")
    return fo_from_sexpr(items[0])


def parse_fo_theory(text: str) -> list[FOFormula]:
    return pl.parse_theory(text, fo_from_sexpr)
