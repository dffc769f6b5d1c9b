"""Exhaust the circulant design space at small lengths.

For order n there are 2^(n//2) symmetric supports, so small lengths can
be swept completely.  Multiplier pruning cuts the work: mapping every
support position through i -> a*(i-1)+1 for a unit a modulo n permutes
the vertices, so only one representative per equivalence class needs
its minimum weight computed.
"""

from circodes import exhaustive_dmax, verify_type_gap

print("best minimum weight over all circulant graphs of order n:")
for n in range(4, 15):
    result = exhaustive_dmax(n)
    sups = ", ".join(s.format() for s in result.witnesses[:2])
    more = "" if len(result.witnesses) <= 2 else f" (+{len(result.witnesses) - 2})"
    print(f"  n={n:2d}  d_max={result.best_d}   witnesses: {sups}{more}")

print()
print("restricting to Type I can cost distance at even lengths:")
for n in (8, 10, 12, 14):
    d_all, d_type1 = verify_type_gap(n)
    gap = " <-- gap" if d_all > d_type1 else ""
    print(f"  n={n:2d}  overall {d_all}, Type I only {d_type1}{gap}")
