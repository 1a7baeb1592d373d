"""Census of the small distributive lattices and of the minimality questions.

Prints how many lattices there are of each size, how long the full claim
suite takes, how each reading of the up-set formula fares, and the tallies
for the identity-derivation minimality families.
"""

import sys
import time
from collections import Counter

from derivcong import open_question_search, verify
from derivcong.core import enumerate_distributive_lattices

max_size = int(sys.argv[1]) if len(sys.argv) > 1 else 8

sizes = Counter(l.n for l in enumerate_distributive_lattices(max_size))
print("lattices per size:", dict(sorted(sizes.items())))

t = time.perf_counter()
report = verify(max_size)
print(f"\nsuite: {report.lattices} lattices, {report.cases} cases in {time.perf_counter() - t:.1f}s")
for name, r in sorted(report.results.items()):
    if r.violations:
        print(f"  {name}: {r.violations} violations across {r.checked} checked cases")

print("\nup-set formula readings:")
for reading, tally in report.upset_readings.items():
    print(f"  {reading:24s} {tally['failures']:4d} failures / {tally['checked']}")

# %% is the identity theta the finest member of each family?
found = open_question_search(max_size)
print()
for k, tally in found.tallies.items():
    print(f"family ({k}): {tally['counterexamples']} counterexamples in {tally['cases']} cases")
