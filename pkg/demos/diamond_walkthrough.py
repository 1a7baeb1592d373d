"""Walk through one derivation on the four-element diamond.

Run with ``python demos/diamond_walkthrough.py``. Pipe the last block into
``dot -Tsvg`` to draw the Hasse diagram with the congruence classes coloured.
"""

from derivcong import (annihilators, derivation_from_mapping, is_prime_ideal, kernel_elements,
                       kernel_ideal, load_fixture, quotient, quotient_boolean, sigma_poset, theta,
                       to_dot, two_element_criterion)

# %% the lattice and a derivation
l = load_fixture("diamond").lattice
d = derivation_from_mapping(l, {"bot": "bot", "b": "bot", "a": "a", "top": "a"})
print("lattice:", l.name, l.labels)
print("derivation:", d.describe(l))  # meet with a

# %% annihilators relative to I = {bot}
i = l.element_set(["bot"])
for x, ann in zip(l.elements, annihilators(l, d, i)):
    print(f"  ({l.labels[x]}) = {l.fmt(ann)}")

ker = kernel_ideal(l, d, i)
kel = kernel_elements(l, d, i)
print("kernel ideal:", l.fmt(ker), "prime" if is_prime_ideal(l, ker) else "not prime")
print("kernel elements:", l.fmt(kel))
print("I itself prime?", is_prime_ideal(l, i))

# %% the congruence and its quotient
th = theta(l, d, i)
q = quotient(l, th)
print("theta classes:", th.fmt(l))
print("quotient has", q.quotient.n, "elements")

verdict = quotient_boolean(l, d, i)
print("Boolean quotient:", verdict.is_boolean)
for x in l.elements:
    y = verdict.witness[x]
    print(f"  complement witness for {l.labels[x]}: {l.labels[y]}")

print("two-element quotient / prime kernel:", two_element_criterion(l, d, i))

# %% annihilator poset, ordered by reverse inclusion
sig = sigma_poset(l, d, i)
print("annihilator poset:", [l.fmt(s) for s in sig.sets])

# %% graphviz source
print(to_dot(l, congruence=th, kernel=ker, kernel_elements=kel))
