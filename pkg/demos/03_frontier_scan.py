"""
Where BP<2> goes further than Hopf-Stiefel
===========================================

Scans r <= s <= 31 and lists the cells whose BP<2> frontier is strictly
larger than the Hopf-Stiefel one.
"""

from sos_obstruct import scan

table = scan(31, 31, jobs=2)
better = [row for row in table.rows if row.strongest == "bp2"]
print(f"{len(better)} of {len(table.rows)} cells gain from BP<2>")
print(f"{'r':>3} {'s':>3} {'hopf_stiefel':>12} {'bp2':>4}")
for row in better[:25]:
    print(f"{row.r:>3} {row.s:>3} {row.hopf_stiefel or '':>12} {row.bp2:>4}")
