"""Compare supersequence lengths across levels and against the baselines.

The classical constructions give m^2 - 2m + 4; each skip level improves the
linear coefficient, which climbs toward 5/2 as the level grows.  The table
below also rebuilds the best construction at each size to confirm the
closed form against the actual word.
"""

from skipseq import coefficient, comparison_table
from skipseq.analyze import rows_to_csv

print("Linear-term coefficient by level (limit 5/2):")
for s in (2, 3, 4, 5, 10, 100, 10**6):
    c = coefficient(s)
    print(f"  s={s:>7}: {c} = {float(c):.6f}")

print("\nLengths for alphabet sizes 5..40 (blank best_s: no valid level):")
print(rows_to_csv(comparison_table(range(5, 41), with_actual=True)))
