"""Tour of the group engine: closure, reflections, degrees, Coxeter elements.

Run as `python demos/demo_reflection_census.py`.
"""

from reflab.cyclo import CycloMatrix, char_det, zeta
from reflab.groups import (
    conjugacy_classes,
    coxeter_number,
    find_coxeter_element,
    find_reflections,
    generate_group,
    group_report,
    molien_degrees,
)

## Build the symmetric group S_4 in its 3-dimensional reflection representation.
## The two generators are a transposition and a 4-cycle acting on the sum-zero
## subspace of C^4; plain integer matrices are enough, the engine lifts the
## field to Q(zeta_12) on its own once it has seen every element order.

t12 = CycloMatrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]], 1)
c1234 = CycloMatrix([[-1, -1, -1], [1, 0, 0], [0, 1, 0]], 1)
s4 = generate_group([t12, c1234])
print("order:", s4.order)
print("working conductor:", s4.conductor)

## Conjugacy classes come with exact centralizer orders.

for cl in conjugacy_classes(s4):
    print(f"class of element {cl.representative}: size {cl.size}, "
          f"centralizer {cl.centralizer_order}")

## Every element with rank(g - 1) = 1 is a complex reflection; the census also
## deduplicates the reflecting hyperplanes.

census = find_reflections(s4)
print("reflections:", census.count, " hyperplanes:", census.hyperplane_count)
r = census.reflections[0]
print("first reflection: eigenvalue", r.eigenvalue_on_root, " root", r.root)

## The invariant degrees are read off the Molien series; their product is the
## group order and the sum of (d_i - 1) counts the reflections.

degrees = molien_degrees(s4)
print("degrees:", degrees)
print("coxeter number:", coxeter_number(s4, census, degrees))

## A Coxeter element is a regular element for a primitive h-th root of unity.
## For S_4 it is a 4-cycle; det(1 - t c) shows its eigenvalues are the
## primitive 4th roots and -1, never 1.

c = find_coxeter_element(s4, census)
print("coxeter element index:", c, " order:", s4.element_order(c))
print("det(1 - t c):", [str(x) for x in char_det(s4.elements[c])])

## Groups may equally be built over a genuinely cyclotomic field.

g5 = generate_group([CycloMatrix([[zeta(5)]], 5)])
print("Z_5 report:", group_report(g5))
