"""
Bounds on beta
==============

Lower bounds, every upper bound, and the exact formulas where they apply.
"""

from petersen_cover.bounds import CSV_HEADER, bound_report

for n, k in [(9, 3), (13, 4), (25, 5), (40, 6)]:
    rep = bound_report(n, k)
    exact = rep.exact.value if rep.exact else "-"
    print(f"P({n},{k}) lower {rep.lower} exact {exact} best upper "
          f"{rep.min_upper} ({rep.best_upper.method}) conjecture {rep.conjecture}")
    for note in rep.notes:
        print("   note:", note)

print(CSV_HEADER)
for k in range(1, 10):
    print(bound_report(20 + k, k).csv_row())
