"""
Formulas as sets
================

Atom a_g goes to I(A_g), connectives go to Boolean operations, and each
image is the union of the cells where the formula comes out true.
"""
from filterlab.proplogic import (
    cell_of,
    iota,
    parse_formula,
    partition_check,
    random_formulas,
    verify_iota_identity,
)
from filterlab.setcore import FamilySpec

fam = FamilySpec.full_powerset(3)

phi = parse_formula("(or (and a1 (not a2)) a5)")
print("phi        ", phi)
print("iota(phi)  ", iota(phi))
print("cell 1=1,2=0", cell_of({1: 1, 2: 0}))

r = verify_iota_identity(phi, fam)
print(f"identity holds: {r.holds}, image has {r.image_size} of {r.points} points")

# a contradiction lands on the empty set and a tautology on everything
for text in ("(and a0 (not a0))", "(or a0 (not a0))"):
    r = verify_iota_identity(parse_formula(text), fam)
    print(f"{text:20} image size {r.image_size}")

# the cells over gamma split the ground space
r = partition_check(fam, [1, 2, 3])
print("partition holds:", r.holds, "cell sizes:", sorted(r.cell_sizes.values()))

# a batch of random formulas; all should pass
bad = sum(not verify_iota_identity(f, fam).holds for f in random_formulas(3, 200, 5, 6))
print(bad, "failures out of 200")
