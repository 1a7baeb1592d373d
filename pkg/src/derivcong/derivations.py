"""Derivations on distributive lattices and the ideals they induce.

A derivation is stored as an explicit table ``table[x] = d(x)`` so that
derivations compare, hash and serialise by value.

On a distributive lattice ``d`` is a derivation iff

* ``d(x ^ y) == d(x) ^ y == x ^ d(y)`` and
* ``d(x v y) == d(x) v d(y)``

for all ``x, y``.  With a top element every derivation is ``x -> x ^ t``
for ``t = d(top)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .core import ElementSet, Lattice

__all__ = [
    "Derivation",
    "DerivationCheck",
    "is_derivation",
    "identity_derivation",
    "lambda_derivation",
    "enumerate_derivations",
    "derivation_from_mapping",
    "kernel_ideal",
    "annihilator",
    "annihilators",
    "kernel_elements",
]


@dataclass(frozen=True)
class Derivation:
    table: tuple[int, ...]
    name: str = field(default="", compare=False)

    def __call__(self, x: int) -> int:
        return self.table[x]

    def __len__(self) -> int:
        return len(self.table)

    def describe(self, l: Lattice) -> str:
        return ",".join(f"{l.labels[x]}:{l.labels[y]}" for x, y in enumerate(self.table))


@dataclass(frozen=True)
class DerivationCheck:
    ok: bool
    violation: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_derivation(l: Lattice, m: Sequence[int] | Derivation) -> DerivationCheck:
    """Check both derivation axioms on every pair; report the first failure."""
    table = m.table if isinstance(m, Derivation) else tuple(m)
    if len(table) != l.n or any(not 0 <= v < l.n for v in table):
        return DerivationCheck(False, "map is not a total self-map of the carrier")
    lab = l.labels
    for x in l.elements:
        dx = table[x]
        for y in l.elements:
            dy = table[y]
            dxy = table[l.meet(x, y)]
            if not dxy == l.meet(dx, y) == l.meet(x, dy):
                return DerivationCheck(
                    False, f"d({lab[x]} ^ {lab[y]}) = d({lab[x]}) ^ {lab[y]} = {lab[x]} ^ d({lab[y]}) fails")
            if table[l.join(x, y)] != l.join(dx, dy):
                return DerivationCheck(False, f"d({lab[x]} v {lab[y]}) = d({lab[x]}) v d({lab[y]}) fails")
    return DerivationCheck(True)


def identity_derivation(l: Lattice) -> Derivation:
    return Derivation(tuple(l.elements), "id")


def lambda_derivation(l: Lattice, a: int) -> Derivation:
    """``x -> a ^ x``."""
    return Derivation(tuple(l.meet(a, x) for x in l.elements), f"lambda_{l.labels[a]}")


def derivation_from_mapping(l: Lattice, pairs: Mapping[str, str]) -> Derivation:
    """Build from a label -> label mapping that must cover the carrier."""
    table = [None] * l.n
    for k, v in pairs.items():
        table[l.index(k)] = l.index(v)
    missing = [l.labels[x] for x, v in enumerate(table) if v is None]
    if missing:
        raise ValueError(f"map is not total; missing {', '.join(missing)}")
    return Derivation(tuple(table), "map")


def _search_derivations(l: Lattice) -> list[Derivation]:
    # backtracking over contracting, monotone maps, axioms checked at the end
    order = sorted(l.elements, key=lambda x: l.down[x].bit_count())
    table = [0] * l.n
    out = []

    def rec(i):
        if i == l.n:
            if is_derivation(l, table):
                out.append(Derivation(tuple(table), "search"))
            return
        x = order[i]
        for v in l.elements:
            if not l.le(v, x):
                continue
            if any(l.le(y, x) and not l.le(table[y], v) for y in order[:i]):
                continue
            if any(l.le(x, y) and not l.le(v, table[y]) for y in order[:i]):
                continue
            table[x] = v
            rec(i + 1)

    rec(0)
    return sorted(out, key=lambda d: d.table)


def enumerate_derivations(l: Lattice) -> list[Derivation]:
    """All derivations of a distributive lattice.

    With a top element these are exactly the maps ``lambda_t``; otherwise
    a constrained search is used.  Results are distinct and, for a
    bounded lattice, listed in element order of ``t = d(top)``.
    """
    if l.top is None:
        return _search_derivations(l)
    out = []
    for t in l.elements:
        d = lambda_derivation(l, t)
        if t == l.top:
            d = Derivation(d.table, "id")
        out.append(d)
    return out


def kernel_ideal(l: Lattice, d: Derivation, i: ElementSet) -> ElementSet:
    """Preimage of ``i`` under ``d``."""
    return ElementSet(sum(1 << x for x in l.elements if i.mask >> d.table[x] & 1), l.n)


def annihilator(l: Lattice, d: Derivation, i: ElementSet, a: int) -> ElementSet:
    """``{x : d(a ^ x) in i}``."""
    t, m = d.table, i.mask
    row = l._m[a]
    return ElementSet(sum(1 << x for x in l.elements if m >> t[row[x]] & 1), l.n)


def annihilators(l: Lattice, d: Derivation, i: ElementSet) -> list[ElementSet]:
    """Annihilator of every element, indexed by element."""
    return [annihilator(l, d, i, a) for a in l.elements]


def kernel_elements(l: Lattice, d: Derivation, i: ElementSet) -> ElementSet:
    """Elements whose annihilator is exactly the kernel ideal."""
    ker = kernel_ideal(l, d, i)
    return ElementSet(sum(1 << a for a in l.elements if annihilator(l, d, i, a) == ker), l.n)
