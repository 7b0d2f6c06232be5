"""The word analyzer: colours, secant counts, identity checks, extraction.

Run:  python3 demos/04_word_analysis.py
"""

import json

from planecode.analyze import ColourGraph, analyze, extract_baer
from planecode.construct import baer_diff, line_diff
from planecode.field import field_new
from planecode.geometry import baer_subfield_subplane, pg2

plane = pg2(field_new(3, 2))
sub = baer_subfield_subplane(plane)

# the weight-15 word: two colours of sizes 9 = p^2 and 6 = p^2 - p
word = baer_diff(plane, sub)
a = analyze(word, plane)
print("Baer-minus-secant word over PG(2,9):")
print(json.dumps(a.to_report(), indent=2))

# the analyzer can rebuild the geometry from the word alone
got_sub, got_secant = extract_baer(word, plane)
assert got_sub.points == sub.points
print(f"\nextraction recovered the subplane and secant line {got_secant}")

# a two-line word is heavier than the band the inequalities cover;
# the identity checks still run, the band-dependent ones report "na"
b = analyze(line_diff(plane, 0, 1), plane)
print(f"\nline-difference word: weight {b.weight}, epsilon {b.epsilon} "
      f"(band is [1, p-2]), classification {b.classification!r}")
for c in b.checks:
    print(f"  {c.name:18s} {c.status}")

# colour adjacency: alpha ~ beta iff alpha + beta is p or p+1
g = ColourGraph(11)
info = g.full_structure()
print(f"\ncolour graph for p=11: components {info['components']}, "
      f"loop at {info['loops'][0]}")
