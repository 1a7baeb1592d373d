"""Hunt for the smallest lattices on which a claimed property breaks.

The suite is run lattice size by lattice size; for every claim that fails
we print the first witness and stop looking for that claim.
"""

from derivcong import CLAIMS, chain, derivation_from_mapping, enumerate_congruences, run_suite, theta
from derivcong.core import enumerate_distributive_lattices

found: dict[str, tuple[int, dict]] = {}
for n in range(1, 8):
    rest = [c for c in CLAIMS if c not in found]
    report = run_suite(enumerate_distributive_lattices(n), rest)
    for name in report.failed:
        found[name] = (n, report.results[name].first)

print(f"{len(CLAIMS) - len(found)} of {len(CLAIMS)} claims hold on every lattice up to 7 elements")
for name, (n, w) in sorted(found.items(), key=lambda kv: kv[1][0]):
    print(f"\n{name}: fails first at size {n}")
    print("  claim:", CLAIMS[name].summary)
    print(f"  {w['lattice']}  I={w['ideal']}  d={w['derivation']}")
    print("  ", w["message"])

# %% the uniqueness failure in detail
l = chain(3)
d = derivation_from_mapping(l, {"a": "a", "b": "b", "c": "c"})
i = l.element_set(["a"])
th = theta(l, d, i)
print("\nchain a<b<c, identity, I={a}")
print("theta:", th.fmt(l))
for c in enumerate_congruences(l):
    if any(set(cl) == {0} for cl in c.classes):
        print("  congruence with {a} as a class:", c.fmt(l) + (" (theta)" if c == th else ""))
