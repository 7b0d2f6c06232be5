"""Dimensions and minimum weights of small plane codes.

The code of a plane of order p^h over GF(p) has dimension C(p+1,2)^h + 1;
its minimum weight is n+1, attained exactly by the scalar multiples of
lines.  Dual minimum weights are q+p for even q and 2p for prime q.

Run:  python3 demos/02_plane_codes.py
"""

from planecode.codes import code_of_plane, dual_basis, enumerate_min_weight
from planecode.field import field_new
from planecode.geometry import pg2

print("dimension of the p-ary plane code")
print(f"{'q':>4} {'p':>3} {'dim':>5} {'formula':>8}")
for p, h in ((2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)):
    plane = pg2(field_new(p, h))
    code = code_of_plane(plane, p)
    formula = (p * (p + 1) // 2) ** h + 1
    print(f"{plane.order:>4} {p:>3} {code.dimension:>5} {formula:>8}")

print("\nfull enumeration of tiny codes")
for p, h in ((2, 1), (3, 1), (2, 2)):
    plane = pg2(field_new(p, h))
    code = code_of_plane(plane, p)
    res = enumerate_min_weight(code)
    n = plane.order
    print(
        f"  C(plane of order {n}): min weight {res.min_weight} = n+1, "
        f"{len(res.words)} words = (p-1) * {plane.npoints} line multiples"
    )

print("\ndual codes")
for p, h, name in ((2, 1, "q=2"), (3, 1, "q=3"), (2, 2, "q=4")):
    plane = pg2(field_new(p, h))
    dual = dual_basis(code_of_plane(plane, p))
    res = enumerate_min_weight(dual)
    print(
        f"  {name}: dual dimension {dual.dimension}, "
        f"min weight {res.min_weight} over {res.words_checked} words"
    )
print("  (q+p for even q; 2p for prime q)")
