"""The two known antipodal planes and their models.

An antipodal plane of order s has s^2+s+2 points and lines, line size and
point degree s+1, and a unique antipode for every point and line.  Orders 2
and 3 are the only known ones; both have circulant incidence matrices, and
the order-3 plane is also the complement of a Fano subplane in PG(2,4).

Run:  python3 demos/05_antipodal_planes.py
"""

from planecode.antipodal import (
    antipodal_from_pg24,
    cyclic_antipodal,
    find_good_triangle,
    isomorphism,
    mobius_kantor_pls,
    validate_antipodal,
)
from planecode.field import field_new
from planecode.geometry import pg2

for order in (2, 3):
    pls = cyclic_antipodal(order)
    ap = validate_antipodal(pls)
    print(f"cyclic model, order {order}: {pls.n_points} points, "
          f"first line {pls.lines[0]}, antipode of point 0 is {ap.perp_point[0]}")

comp = antipodal_from_pg24()
ap = validate_antipodal(comp)
print(f"\nPG(2,4) minus a Fano subplane: {comp.n_points} points, order {ap.order}")
mapping = isomorphism(comp, cyclic_antipodal(3))
print(f"isomorphic to the cyclic model via point map {mapping}")

# the order-2 plane is the Mobius-Kantor configuration; it lives inside
# PG(2,q) exactly when x^2 - x + 1 has a root
for spec in ((7, 1), (3, 2), (2, 2)):
    plane = pg2(field_new(*spec))
    pls, ambient = mobius_kantor_pls(plane)
    assert sorted(pls.lines) == sorted(cyclic_antipodal(2).lines)
    print(f"MK configuration in PG(2,{plane.order}): ambient points {ambient}")

tri = find_good_triangle(validate_antipodal(cyclic_antipodal(3)))
print(f"\norder-3 model: triangle {tri} has all three antipodes off its sides")
