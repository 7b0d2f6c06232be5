"""Small-weight dual words from geometry: line pairs and Baer subplanes.

Over a plane of order p^2 the difference of two lines weighs 2p^2, while a
Baer subplane minus one of its secant lines weighs 2p^2 - p, beating it.
Every word here is verified to be orthogonal to all lines.  The general
lower bound 2(q + 1 - q/p) is checked against each construction.

Run:  python3 demos/03_small_weight_words.py
"""

from planecode.codes import is_dual_word
from planecode.construct import baer_diff, disjoint_baer_pair, line_diff, subplane_diff
from planecode.field import field_new
from planecode.geometry import baer_subfield_subplane, pg2

for p in (3, 5, 7):
    q = p * p
    plane = pg2(field_new(p, 2))
    sub = baer_subfield_subplane(plane)
    ld = line_diff(plane, 0, 1)
    bd = baer_diff(plane, sub)
    bound = 2 * (q + 1 - q // p)
    print(f"PG(2,{q}):")
    print(f"  two lines        -> weight {ld.weight} (= 2q)")
    print(f"  Baer minus secant-> weight {bd.weight} (= 2p^2 - p)")
    print(f"  general lower bound 2(q+1-q/p) = {bound}")
    assert is_dual_word(bd, plane)[0] and bd.weight >= bound

# two DISJOINT Baer subplanes also give a dual word: each meets every line
# in 1 mod p points, so the difference is orthogonal to everything
plane = pg2(field_new(3, 2))
s1, s2 = disjoint_baer_pair(plane)
w, dual = subplane_diff(plane, s1, s2)
print(f"\ndisjoint Baer pair in PG(2,9): weight {w.weight}, dual={dual}")
