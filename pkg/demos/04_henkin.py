"""
From first order to propositional and back
==========================================

Witness constants are added until the theory is closed, the result is
turned into a propositional theory, solved, and a structure is read off the
true equalities.
"""
from pathlib import Path

from filterlab.errors import Unsatisfiable
from filterlab.henkin import close_witnesses, henkin_run, model_check, parse_fo_theory, propositionalize

theory = parse_fo_theory((Path(__file__).parent / "data" / "shared.fo").read_text())

cl = close_witnesses(theory)
print(f"closed after {cl.rounds} round(s), terms: {[str(t) for t in cl.terms]}")

im = propositionalize(cl)
print(len(im.sentences), "propositional variables,", len(im.axioms), "axioms")
for tag, ax in im.axioms[:6]:
    print(f"  {tag:9} {ax}")

run = henkin_run(theory)
print(run.structure)
print("model checks:", [model_check(run.structure, f) for f in theory])

# add a third axiom so the witness would have to be Q and not Q
bad = parse_fo_theory(
    "(theory (assert (exists (x) (P x)))"
    " (assert (forall (x) (implies (P x) (Q x))))"
    " (assert (forall (x) (not (Q x)))))"
)
try:
    henkin_run(bad)
except Unsatisfiable as exc:
    print("unsat:", exc)
