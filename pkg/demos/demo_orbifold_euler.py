"""Orbifold descriptors: hypercohomology tables and both Euler characteristics.

Run as `python demos/demo_orbifold_euler.py`.
"""

from reflab.cyclo import CycloMatrix
from reflab.formats import parse_orbifold_text
from reflab.groups import generate_group
from reflab.invariants import (
    FixedComponent,
    OrbifoldDescriptor,
    euler_characteristics,
    hochschild_profile,
    linear_descriptor,
    orbifold_hypercohomology,
)

z2 = generate_group([CycloMatrix([[-1]], 1)])

## A descriptor lists, per conjugacy class, the components of the fixed-point
## set with their codimension and centralizer-invariant Betti numbers.  The
## linear descriptor of the group itself is generated automatically: each
## class fixes one contractible linear subspace.

d = linear_descriptor(z2)
table = orbifold_hypercohomology(d)
print("Z2 linear dims H^-k:", table.dims)
print("Chen-Ruan relabeling:", table.chen_ruan)
print("matches the a-profile:", table.dims == hochschild_profile(z2).a)

## Both Euler characteristics are computed independently and compared:
## chi_top averages component Euler numbers over group elements, chi_hh is
## the alternating sum over the element-expanded table.

print("Z2 linear:", euler_characteristics(d))

## Any manifold data can be supplied by hand.  An involution on an elliptic
## curve with four fixed points:

torus = OrbifoldDescriptor(z2, 1, (
    (0, (FixedComponent(0, (1, 2, 1)),)),            # the curve itself, chi = 0
    (1, tuple(FixedComponent(1, (1,)) for _ in range(4))),  # four fixed points
))
print("elliptic involution:", euler_characteristics(torus))

## The same data can come from the text format.

text = """
orbifold
ambient_dim 1
class 0
component codim=0 betti=1,2,1
class 1
component codim=1 betti=1
component codim=1 betti=1
component codim=1 betti=1
component codim=1 betti=1
"""
print("from file text:", euler_characteristics(parse_orbifold_text(text, z2)))
