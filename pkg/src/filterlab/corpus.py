"""Fixed theories used by the ``suite`` command, the demos and the tests."""

# name, first-order theory text, expected verdict
FO_CORPUS = [
    ("exists-then-forall", """
     (theory (assert (exists (x) (P x)))
             (assert (forall (x) (implies (P x) (Q x)))))""", "sat"),
    ("exists-forall-clash", """
     (theory (assert (exists (x) (P x)))
             (assert (forall (x) (implies (P x) (Q x))))
             (assert (forall (x) (not (Q x)))))""", "unsat"),
    ("ground-contradiction", """
     (theory (assert (P c)) (assert (not (P c))))""", "unsat"),
    ("congruence-clash", """
     (theory (assert (= c d)) (assert (P c)) (assert (not (P d))))""", "unsat"),
    ("function-congruence", """
     (theory (assert (= (f c) d)) (assert (P d)) (assert (P (f c))) (assert (not (P c))))""", "sat"),
    ("two-distinct", """
     (theory (assert (exists (x y) (and (R x y) (not (= x y))))))""", "sat"),
    ("universal-counterexample", """
     (theory (assert (forall (x) (P x))) (assert (exists (x) (not (P x)))))""", "unsat"),
    ("disjunction", """
     (theory (assert (or (P a) (P b))) (assert (not (P a))))""", "sat"),
    ("singleton-universe", """
     (theory (assert (forall (x) (= x c)))
             (assert (P c))
             (assert (exists (y) (not (P y)))))""", "unsat"),
    ("symmetry-clash", """
     (theory (assert (forall (x y) (implies (R x y) (R y x))))
             (assert (R a b))
             (assert (not (R b a))))""", "unsat"),
    ("shared-witness", """
     (theory (assert (exists (x) (and (P x) (Q x))))
             (assert (forall (x) (or (not (P x)) (not (R x))))))""", "sat"),
    ("functionality", """
     (theory (assert (= (f a) b)) (assert (= (f a) c)) (assert (not (= b c))))""", "unsat"),
]

# propositional formulas checked against the cell decomposition
PROP_CORPUS = [
    "a0",
    "(not a0)",
    "(and a0 (not a0))",
    "(or a0 (not a0))",
    "(and a0 a1)",
    "(or a0 a1)",
    "(implies a0 a1)",
    "(iff a0 a1)",
    "(and (or a0 a1) (not a2))",
    "(or (and a0 a1) (and (not a0) a2))",
    "(not (and a1 (or a2 a3)))",
    "(iff (and a0 a1) (or a2 (not a3)))",
    "(and)",
    "(or)",
    "(implies (and a0 (implies a0 a1)) a1)",
    "(and (iff a0 a1) (iff a1 a2) (not (iff a0 a2)))",
    "(or a4 (and a5 (not a4)))",
    "(and a0 a1 a2 a3)",
    "(or (not a0) (not a1) (not a2))",
    "(iff (not (and a0 a5)) (or (not a0) (not a5)))",
]
