"""
Satisfiability through filters
==============================

The theory's images generate a filter.  If it is proper we extend it to an
ultrafilter and read an assignment off its witness point.
"""
from pathlib import Path

from filterlab.errors import Unsatisfiable
from filterlab.filters import (
    FilterPresentation,
    Symbolic,
    assignment_from_ultrafilter,
    brute_force_sat,
    compactness_solve,
    extend_ultrafilter_symbolic,
    is_proper,
)
from filterlab.proplogic import evaluate, iota, parse_theory
from filterlab.setcore import FamilySpec

HERE = Path(__file__).parent / "data"

theory = parse_theory((HERE / "small.theory").read_text())
fam = FamilySpec.full_powerset(3, 4)

# step by step first
F = FilterPresentation(Symbolic(fam), tuple(iota(f) for f in theory), 4)
print("proper:", is_proper(F).proper)
U = extend_ultrafilter_symbolic(F)
print("cell:", U.sign_map, "witness:", U.witness)
S = assignment_from_ultrafilter(U, fam)
print("assignment:", {g: S[g] for g in sorted(S) if g < 3})
print("all true:", all(evaluate(f, S) for f in theory))

# the packaged version
print("compactness_solve:", compactness_solve(theory))

# and an unsatisfiable one
clash = parse_theory((HERE / "clash.theory").read_text())
try:
    compactness_solve(clash)
except Unsatisfiable as exc:
    print("clash:", exc)
print("truth tables agree:", brute_force_sat(clash) is None)
