"""Ideals, filters, prime ideals and minimal primes over a base ideal."""

from __future__ import annotations

from typing import Iterable, Iterator, Literal

from .core import ElementSet, Lattice, _bits, _downsets

__all__ = [
    "is_ideal",
    "is_filter",
    "is_trivial",
    "principal_ideal",
    "principal_filter",
    "up_set",
    "enumerate_ideals",
    "enumerate_filters",
    "is_prime_ideal",
    "is_prime_filter",
    "prime_ideals",
    "i_minimal_primes",
]

# Ideal and Filter are ElementSets playing a role; no separate class.
Ideal = ElementSet
Filter = ElementSet


def is_ideal(l: Lattice, s: ElementSet) -> bool:
    """Nonempty, down-closed and join-closed."""
    if not s:
        return False
    m = s.mask
    for a in s:
        if l.down[a] & ~m:
            return False
        for b in s:
            if b > a and not m >> l.join(a, b) & 1:
                return False
    return True


def is_filter(l: Lattice, s: ElementSet) -> bool:
    """Nonempty, up-closed and meet-closed."""
    if not s:
        return False
    m = s.mask
    for a in s:
        if l.up[a] & ~m:
            return False
        for b in s:
            if b > a and not m >> l.meet(a, b) & 1:
                return False
    return True


def is_trivial(s: ElementSet) -> bool:
    """The whole carrier, i.e. the trivial ideal L."""
    return s.is_full()


def principal_ideal(l: Lattice, a: int) -> ElementSet:
    return l.down_set(a)


def principal_filter(l: Lattice, a: int) -> ElementSet:
    return l.up_set(a)


def up_set(l: Lattice, a: Iterable[int], mode: Literal["common", "union"] = "common") -> ElementSet:
    """Upper bounds of a set of elements.

    ``mode="common"`` gives the common upper bounds ``{x : a <= x for all a}``
    (so the up-set of the empty family is the whole carrier).  ``"union"``
    gives the union of principal filters ``{x : a <= x for some a}``.
    """
    if mode == "common":
        mask = (1 << l.n) - 1
        for x in a:
            mask &= l.up[x]
    elif mode == "union":
        mask = 0
        for x in a:
            mask |= l.up[x]
    else:
        raise ValueError(f"unknown up-set mode {mode!r}")
    return ElementSet(mask, l.n)


def enumerate_ideals(l: Lattice) -> Iterator[ElementSet]:
    """Every ideal of ``l`` exactly once, ordered by size then mask.

    Down-closed subsets are enumerated and filtered for join-closure.  On
    a finite lattice these are exactly the principal ideals, which is
    asserted.
    """
    found = [ElementSet(m, l.n) for m in _downsets(l.down) if m]
    ideals = sorted((s for s in found if is_ideal(l, s)), key=lambda s: (len(s), s.mask))
    principal = {l.down[a] for a in l.elements}
    assert {s.mask for s in ideals} == principal, "non-principal ideal in a finite lattice"
    yield from ideals


def enumerate_filters(l: Lattice) -> Iterator[ElementSet]:
    seen = sorted({l.up[a] for a in l.elements}, key=lambda m: (m.bit_count(), m))
    for m in seen:
        yield ElementSet(m, l.n)


def is_prime_ideal(l: Lattice, i: ElementSet) -> bool:
    """Proper ideal with ``x ^ y in i`` implying ``x in i`` or ``y in i``."""
    if not is_ideal(l, i):
        raise ValueError(f"{l.fmt(i)} is not an ideal")
    if i.is_full():
        return False
    outside = list(_bits(~i.mask & ((1 << l.n) - 1)))
    for x in outside:
        for y in outside:
            if i.mask >> l.meet(x, y) & 1:
                return False
    return True


def is_prime_filter(l: Lattice, f: ElementSet) -> bool:
    if not is_filter(l, f):
        raise ValueError(f"{l.fmt(f)} is not a filter")
    if f.is_full():
        return False
    outside = list(_bits(~f.mask & ((1 << l.n) - 1)))
    return not any(f.mask >> l.join(x, y) & 1 for x in outside for y in outside)


def prime_ideals(l: Lattice) -> list[ElementSet]:
    return [i for i in enumerate_ideals(l) if is_prime_ideal(l, i)]


def i_minimal_primes(l: Lattice, base: ElementSet) -> list[ElementSet]:
    """Prime ideals containing ``base`` that are minimal among such primes."""
    if not is_ideal(l, base):
        raise ValueError(f"{l.fmt(base)} is not an ideal")
    over = [p for p in prime_ideals(l) if base <= p]
    minimal = [p for p in over if not any(q < p for q in over)]
    if not base.is_full():
        assert minimal, "proper ideal of a finite distributive lattice lies in no prime"
    return minimal
