"""
Independent families by hand
============================

Build the family I(A) over a small base, name a cell with a sign pattern,
and look at the points that witness it.
"""
from pathlib import Path

from filterlab.formats import parse_family
from filterlab.setcore import (
    FamilySpec,
    FiniteSet,
    GroundPoint,
    cell_witness,
    distinctness_witness,
    enumerate_ground,
    indep_member,
)

HERE = Path(__file__).parent

# a ground point is <X, Z>: a small support X and a set Z of subsets of X
p = GroundPoint.make({0, 1}, [{0}])
print(p, "in I({0,2})?", indep_member(p, FiniteSet((0, 2))))
print(p, "in I({1})?  ", indep_member(p, FiniteSet((1,))))

# distinct sets always get distinct images; here is the point telling them apart
w = distinctness_witness(FiniteSet((0, 1)), FiniteSet((1,)))
print("separates {0,1} from {1}:", w)

# the full ground space over finite(2), width 3
fam = parse_family((HERE / "data" / "finite2.family").read_text())
J = enumerate_ground(fam.domain, 2)
print(len(J), "ground points")

# generators 1 and 2 are {0} and {1}; ask for points in I({0}) minus I({1})
signs = {1: 1, 2: 0}
for q in cell_witness(fam, signs, 2):
    print("  witness", q)

# how many points of J actually fall in that cell
inside = [q for q in J if indep_member(q, fam.generators[1]) and not indep_member(q, fam.generators[2])]
print(len(inside), "points of J lie in the cell")

# over omega the cells never run dry
omega = parse_family((HERE / "data" / "omega.family").read_text())
pts = cell_witness(omega, {0: 1, 1: 0, 2: 1, 3: 0}, 5)
for q in pts:
    print("  omega witness", q)

# the same thing over a family generated by all subsets of finite(3)
print(len(FamilySpec.full_powerset(3)), "generators over finite(3)")
