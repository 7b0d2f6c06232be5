"""Build small Galois fields and Desarguesian planes, then poke at them.

Run:  python3 demos/01_fields_and_planes.py
"""

from planecode.field import field_new, parse_field
from planecode.formats import plane_from_text, plane_to_text
from planecode.geometry import AxiomViolationError, pg2, plane_from_incidence

# -- fields -----------------------------------------------------------------

gf9 = field_new(3, 2)
print(f"GF(9) with default modulus {list(gf9.modulus)} (x^2 + 1)")
x = gf9.from_coeffs([0, 1])
print(f"  x * x = {gf9.mul(x, x)}  (= -1, the modulus at work)")

gf7 = parse_field("7")
print(f"GF(7): inv(3) = {gf7.inv(3)}, 3*5 = {gf7.mul(3, 5)}")

# roots of x^2 - x + 1 decide where the order-2 antipodal plane lives
for spec in ("5", "7", "3^2", "2^2"):
    f = parse_field(spec)
    roots = f.solve_monic_quadratic(f.neg(1), 1)
    print(f"  x^2 - x + 1 over GF({spec}): roots {list(roots)}")

# -- planes -----------------------------------------------------------------

fano = pg2(field_new(2))
print(f"\nFano plane: {fano.npoints} points, lines of size {len(fano.lines[0])}")

pg9 = pg2(gf9)
print(f"PG(2,9): {pg9.npoints} points; line through points 0 and 40 is "
      f"{pg9.line_through(0, 40)}")

# the text format round-trips exactly
text = plane_to_text(pg9)
again = plane_from_text(text)
assert again.lines == pg9.lines
print("export -> ingest round-trip: identical line lists")

# the validator catches broken incidence data
rows = [list(l) for l in fano.lines]
rows[3] = rows[0]
try:
    plane_from_incidence(rows, 2)
except AxiomViolationError as e:
    print(f"corrupted Fano rejected: {e.axiom}, witness {e.witness}")
