"""Reference verdicts for small first-order theories.

``sat``: a model of size 1..3 exists (exhaustive interpretation search with
its own evaluator).  ``unsat``: Skolemize, ground the clauses over the
Herbrand terms of depth <= 1 (plus ground equality axioms) and refute by
Davis-Putnam variable elimination.  ``unknown`` otherwise.
"""
from itertools import count, permutations, product

from filterlab.henkin import App, Conj, Const, Disj, Eq, Exists, Forall, Neg, Rel, Var

# ---------------------------------------------------------------------------
# signature and finite model search


def signature(theory):
    consts, fns, rels = set(), {}, {}

    def term(t, bound):
        if isinstance(t, Var):
            return
        if isinstance(t, Const):
            consts.add(t.name)
            return
        fns[t.fn] = len(t.args)
        for a in t.args:
            term(a, bound)

    def form(f, bound):
        if isinstance(f, Rel):
            rels[f.name] = len(f.args)
            for a in f.args:
                term(a, bound)
        elif isinstance(f, Eq):
            term(f.left, bound)
            term(f.right, bound)
        elif isinstance(f, Neg):
            form(f.child, bound)
        elif isinstance(f, (Conj, Disj)):
            for c in f.children:
                form(c, bound)
        else:
            form(f.body, bound)

    for f in theory:
        form(f, set())
    return sorted(consts), dict(sorted(fns.items())), dict(sorted(rels.items()))


def _value(t, interp, env):
    if isinstance(t, Var):
        return env[t.name]
    if isinstance(t, Const):
        return interp["c"][t.name]
    return interp["f"][t.fn][tuple(_value(a, interp, env) for a in t.args)]


def holds(f, interp, size, env=None):
    env = env or {}
    if isinstance(f, Rel):
        return tuple(_value(a, interp, env) for a in f.args) in interp["r"][f.name]
    if isinstance(f, Eq):
        return _value(f.left, interp, env) == _value(f.right, interp, env)
    if isinstance(f, Neg):
        return not holds(f.child, interp, size, env)
    if isinstance(f, Conj):
        return all(holds(c, interp, size, env) for c in f.children)
    if isinstance(f, Disj):
        return any(holds(c, interp, size, env) for c in f.children)
    vals = (holds(f.body, interp, size, {**env, **dict(zip(f.vars, e))}) for e in product(range(size), repeat=len(f.vars)))
    return any(vals) if isinstance(f, Exists) else all(vals)


def find_model(theory, max_size=3):
    consts, fns, rels = signature(theory)
    for size in range(1, max_size + 1):
        dom = range(size)
        rel_choices = []
        for name, ar in rels.items():
            tuples = list(product(dom, repeat=ar))
            rel_choices.append([{t for t, b in zip(tuples, bits) if b} for bits in product((0, 1), repeat=len(tuples))])
        fn_choices = []
        for name, ar in fns.items():
            args = list(product(dom, repeat=ar))
            fn_choices.append([dict(zip(args, vals)) for vals in product(dom, repeat=len(args))])
        for cvals in product(dom, repeat=len(consts)):
            for rvals in product(*rel_choices):
                for fvals in product(*fn_choices):
                    interp = {
                        "c": dict(zip(consts, cvals)),
                        "r": dict(zip(rels, rvals)),
                        "f": dict(zip(fns, fvals)),
                    }
                    if all(holds(f, interp, size) for f in theory):
                        return size, interp
    return None


# ---------------------------------------------------------------------------
# Skolemization and ground resolution


def _nnf(f, positive=True):
    if isinstance(f, (Rel, Eq)):
        return f if positive else Neg(f)
    if isinstance(f, Neg):
        return _nnf(f.child, not positive)
    if isinstance(f, (Conj, Disj)):
        kids = tuple(_nnf(c, positive) for c in f.children)
        conj = isinstance(f, Conj) == positive
        return Conj(kids) if conj else Disj(kids)
    quant = Exists if isinstance(f, Exists) == positive else Forall
    return quant(f.vars, _nnf(f.body, positive))


def _sub_t(t, m):
    if isinstance(t, Var):
        return m.get(t.name, t)
    if isinstance(t, App):
        return App(t.fn, tuple(_sub_t(a, m) for a in t.args))
    return t


def _sub(f, m):
    if isinstance(f, Rel):
        return Rel(f.name, tuple(_sub_t(a, m) for a in f.args))
    if isinstance(f, Eq):
        return Eq(_sub_t(f.left, m), _sub_t(f.right, m))
    if isinstance(f, Neg):
        return Neg(_sub(f.child, m))
    if isinstance(f, (Conj, Disj)):
        return type(f)(tuple(_sub(c, m) for c in f.children))
    inner = {k: v for k, v in m.items() if k not in f.vars}
    return type(f)(f.vars, _sub(f.body, inner))


_fresh = count()


def _skolem(f, universals):
    """Skolemize an NNF formula; universal variables get unique names."""
    if isinstance(f, (Rel, Eq, Neg)):
        return f
    if isinstance(f, (Conj, Disj)):
        return type(f)(tuple(_skolem(c, universals) for c in f.children))
    if isinstance(f, Forall):
        ren = {v: Var(f"u{next(_fresh)}") for v in f.vars}
        return _skolem(_sub(f.body, ren), universals + [r.name for r in ren.values()])
    m = {}
    for v in f.vars:
        k = next(_fresh)
        m[v] = App(f"sk{k}", tuple(Var(u) for u in universals)) if universals else Const(f"sk{k}")
    return _skolem(_sub(f.body, m), universals)


def _cnf(f):
    """Clauses as lists of (sign, atom)."""
    if isinstance(f, (Rel, Eq)):
        return [[(True, f)]]
    if isinstance(f, Neg):
        return [[(False, f.child)]]
    if isinstance(f, Conj):
        return [c for k in f.children for c in _cnf(k)]
    out = [[]]
    for k in f.children:
        out = [a + b for a in out for b in _cnf(k)]
    return out


def _vars_t(t):
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, App):
        return set().union(*(_vars_t(a) for a in t.args)) if t.args else set()
    return set()


def _vars_atom(a):
    ts = a.args if isinstance(a, Rel) else (a.left, a.right)
    return set().union(*(_vars_t(t) for t in ts)) if ts else set()


def _consts_fns(clauses):
    consts, fns = set(), {}

    def term(t):
        if isinstance(t, Const):
            consts.add(t)
        elif isinstance(t, App):
            fns[t.fn] = len(t.args)
            for a in t.args:
                term(a)

    for cl in clauses:
        for _, a in cl:
            for t in (a.args if isinstance(a, Rel) else (a.left, a.right)):
                term(t)
    return consts, fns


def herbrand(consts, fns, depth=1):
    terms = set(consts) or {Const("h0")}
    for _ in range(depth):
        terms |= {App(fn, args) for fn, ar in fns.items() for args in product(sorted(terms, key=str), repeat=ar) if ar}
    return sorted(terms, key=str)


def _eq_atom(t, u):
    return Eq(t, u)


def ground_clauses(theory, depth=1):
    clauses = []
    for f in theory:
        clauses += _cnf(_skolem(_nnf(f), []))
    consts, fns = _consts_fns(clauses)
    universe = herbrand(consts, fns, depth)
    ground = set()
    for cl in clauses:
        vs = sorted(set().union(*(_vars_atom(a) for _, a in cl)) if cl else set())
        for tup in product(universe, repeat=len(vs)):
            m = dict(zip(vs, tup))
            ground.add(frozenset((s, _sub(a, m)) for s, a in cl))
    uses_eq = any(isinstance(a, Eq) for cl in clauses for _, a in cl)
    if uses_eq:
        atoms = {a for cl in ground for _, a in cl}
        ts = set(universe)
        for t in ts:
            ground.add(frozenset({(True, _eq_atom(t, t))}))
        for t, u in permutations(ts, 2):
            ground.add(frozenset({(False, _eq_atom(t, u)), (True, _eq_atom(u, t))}))
        for t, u, w in permutations(ts, 3):
            ground.add(frozenset({(False, _eq_atom(t, u)), (False, _eq_atom(u, w)), (True, _eq_atom(t, w))}))
        rel_atoms = [a for a in atoms if isinstance(a, Rel)]
        for r, q in permutations(rel_atoms, 2):
            if r.name == q.name:
                ground.add(frozenset([(False, _eq_atom(a, b)) for a, b in zip(r.args, q.args) if a != b] + [(False, r), (True, q)]))
        apps = [t for t in ts if isinstance(t, App)]
        for s, t in permutations(apps, 2):
            if s.fn == t.fn:
                ground.add(frozenset([(False, _eq_atom(a, b)) for a, b in zip(s.args, t.args) if a != b] + [(True, _eq_atom(s, t))]))
    return [c for c in ground if not any((not s, a) in c for s, a in c)]


def _assign(clauses, lit):
    s, a = lit
    return {c - {(not s, a)} for c in clauses if lit not in c}


def davis_putnam(clauses):
    """True iff the ground clause set is satisfiable.

    The one-literal and pure-literal rules run to fixpoint before each
    resolution step eliminating the cheapest atom.
    """
    clauses = {frozenset(c) for c in clauses}
    while True:
        if frozenset() in clauses:
            return False
        if not clauses:
            return True
        unit = next((c for c in clauses if len(c) == 1), None)
        if unit is not None:
            clauses = _assign(clauses, next(iter(unit)))
            continue
        lits = {lit for c in clauses for lit in c}
        pure = next((lit for lit in lits if (not lit[0], lit[1]) not in lits), None)
        if pure is not None:
            clauses = _assign(clauses, pure)
            continue
        atoms = {a for _, a in lits}
        a = min(atoms, key=lambda x: (sum(1 for c in clauses if (True, x) in c) * sum(1 for c in clauses if (False, x) in c), str(x)))
        pos = [c for c in clauses if (True, a) in c]
        neg = [c for c in clauses if (False, a) in c]
        rest = {c for c in clauses if (True, a) not in c and (False, a) not in c}
        for p in pos:
            for n in neg:
                r = (p - {(True, a)}) | (n - {(False, a)})
                if not any((not s, b) in r for s, b in r):
                    rest.add(frozenset(r))
        clauses = rest


def verdict(theory, max_size=3, depth=1):
    if find_model(theory, max_size) is not None:
        return "sat"
    if not davis_putnam(ground_clauses(theory, depth)):
        return "unsat"
    return "unknown"
