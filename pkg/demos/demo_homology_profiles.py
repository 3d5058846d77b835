"""Dimension profiles: a-counts, shifted tables and the trace-space bound.

Run as `python demos/demo_homology_profiles.py`.
"""

from fractions import Fraction

from reflab.cyclo import CycloMatrix
from reflab.groups import generate_group, trivial_group
from reflab.invariants import hochschild_profile, shifted_profile, trace_space_lower_bound

## The a-profile counts conjugacy classes by the dimension of the doubled
## fixed space dim (h + h*)^g = 2 dim ker(g - 1).  It is simultaneously the
## table of Hochschild homology dimensions of the skew differential-operator
## algebra: all of it sits in even degrees.

rot = CycloMatrix([[0, -1], [1, -1]], 1)
swap = CycloMatrix([[0, 1], [1, 0]], 1)
s3 = generate_group([rot, swap])

profile = hochschild_profile(s3)
print("S3 profile:", {j: a for j, a in enumerate(profile.a) if a})
print("HH table:  ", {j: d for j, d in profile.hh_dimensions.items() if d})

## The trivial group is the sanity anchor: one class, everything at the top.

print("trivial on C^2:", hochschild_profile(trivial_group(2)).a)

## Block-diagonal products convolve their profiles.

z2 = generate_group([CycloMatrix([[-1]], 1)])
klein = generate_group([CycloMatrix([[-1, 0], [0, 1]], 1),
                        CycloMatrix([[1, 0], [0, -1]], 1)])
pz2 = hochschild_profile(z2)
print("Z2 x Z2 by convolution:", pz2.convolve(pz2).a)
print("klein four directly:   ", hochschild_profile(klein).a)

## A subgroup H acting on a slice C^l inside C^n contributes its profile
## shifted up by the doubled codimension.

print("Z2 slice table (n=3, l=1):",
      {m: v for m, v in shifted_profile(z2, 3, 1).items() if v})

## When the fixed space is zero and the group is well-generated, a product of
## factor Coxeter elements has no eigenvalue one, so the bottom count a_0 is
## at least 1 and nontrivial traces exist.

for name, g in (("S3 2-dim", s3), ("klein four", klein)):
    report = trace_space_lower_bound(g)
    print(f"{name}: witness element {report.witness}, a_0 = {report.a0}")

## The natural 3-dimensional S3 action fixes the diagonal line, so the
## hypothesis fails and indeed a_0 = 0.

t12 = CycloMatrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]], 1)
c123 = CycloMatrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]], 1)
s3_nat = generate_group([t12, c123])
print("S3 natural:", trace_space_lower_bound(s3_nat))
