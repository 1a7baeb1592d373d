"""Lattice congruences, the annihilator congruence, kernels of derivations
and quotient lattices.

A :class:`Congruence` is stored as a block table: ``blocks[x]`` is the class
id of ``x``.  Ids are numbered in order of each class's smallest member and
the smallest member is the class representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Literal, Sequence

import numpy as np

from .core import ElementSet, Lattice
from .derivations import Derivation, annihilators

__all__ = [
    "Congruence",
    "QuotientLattice",
    "is_congruence",
    "delta",
    "nabla",
    "theta",
    "kernel_congruence",
    "quotient",
    "compare",
    "generated_congruence",
    "enumerate_congruences",
    "MAX_CONGRUENCE_ENUMERATION",
]

MAX_CONGRUENCE_ENUMERATION = 8

Comparison = Literal["equal", "finer", "coarser", "incomparable"]


def _normalise(keys: Sequence) -> tuple[int, ...]:
    ids: dict = {}
    return tuple(ids.setdefault(k, len(ids)) for k in keys)


@dataclass(frozen=True)
class Congruence:
    blocks: tuple[int, ...]

    @classmethod
    def from_keys(cls, keys: Sequence) -> Congruence:
        """Group elements with equal (hashable) keys."""
        return cls(_normalise(keys))

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[Iterable[int]]) -> Congruence:
        """Build from explicit classes; they must be disjoint and cover ``0..n-1``."""
        owner = [-1] * n
        for c, members in enumerate(classes):
            for x in members:
                if not 0 <= x < n:
                    raise ValueError(f"element {x} outside carrier of size {n}")
                if owner[x] != -1:
                    raise ValueError(f"element {x} appears in two classes")
                owner[x] = c
        if -1 in owner:
            raise ValueError(f"element {owner.index(-1)} is in no class")
        return cls(_normalise(owner))

    @property
    def n(self) -> int:
        return len(self.blocks)

    def __len__(self) -> int:
        return max(self.blocks, default=-1) + 1

    @cached_property
    def classes(self) -> tuple[ElementSet, ...]:
        masks = [0] * len(self)
        for x, b in enumerate(self.blocks):
            masks[b] |= 1 << x
        return tuple(ElementSet(m, self.n) for m in masks)

    def cls(self, x: int) -> ElementSet:
        return self.classes[self.blocks[x]]

    def related(self, x: int, y: int) -> bool:
        return self.blocks[x] == self.blocks[y]

    def has_class(self, s: ElementSet) -> bool:
        """True when ``s`` is exactly one of the classes."""
        return bool(s) and self.cls(s.min()) == s

    def __le__(self, other: Congruence) -> bool:
        """Refinement: every class of self lies inside a class of other."""
        if other.n != self.n:
            raise ValueError("congruences on different carriers")
        seen: dict[int, int] = {}
        for a, b in zip(self.blocks, other.blocks):
            if seen.setdefault(a, b) != b:
                return False
        return True

    def __lt__(self, other: Congruence) -> bool:
        return self <= other and self != other

    def join(self, other: Congruence) -> Congruence:
        """Smallest equivalence containing both (a congruence if both are)."""
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for blocks in (self.blocks, other.blocks):
            first: dict[int, int] = {}
            for x, b in enumerate(blocks):
                r = first.setdefault(b, x)
                parent[find(x)] = find(r)
        return Congruence.from_keys([find(x) for x in range(self.n)])

    def meet(self, other: Congruence) -> Congruence:
        return Congruence.from_keys(list(zip(self.blocks, other.blocks)))

    def fmt(self, l: Lattice) -> str:
        return " ".join(l.fmt(c) for c in self.classes)


def delta(n: int) -> Congruence:
    return Congruence(tuple(range(n)))


def nabla(n: int) -> Congruence:
    return Congruence((0,) * n)


def _as_congruence(n: int, part) -> Congruence:
    if isinstance(part, Congruence):
        if part.n != n:
            raise ValueError("partition over a different carrier")
        return part
    return Congruence.from_classes(n, part)


def is_congruence(l: Lattice, part) -> bool:
    """Compatibility of a partition with meet and join.

    ``part`` is a :class:`Congruence` or an iterable of classes; a malformed
    partition raises ``ValueError``.
    """
    c = _as_congruence(l.n, part)
    b = c.blocks
    for cl in c.classes:
        members = list(cl)
        x = members[0]
        # checking each member against one representative suffices: the
        # relation is an equivalence, so compatibility is transitive
        for y in members[1:]:
            for z in l.elements:
                if b[l.meet(x, z)] != b[l.meet(y, z)] or b[l.join(x, z)] != b[l.join(y, z)]:
                    return False
    return True


def theta(l: Lattice, d: Derivation, i: ElementSet) -> Congruence:
    """Group elements with equal annihilator ``{x : d(a ^ x) in i}``."""
    return Congruence.from_keys([s.mask for s in annihilators(l, d, i)])


def kernel_congruence(l: Lattice, d: Derivation) -> Congruence:
    """Elements identified when ``d`` maps them to the same element."""
    return Congruence.from_keys(d.table)


@dataclass(frozen=True)
class QuotientLattice:
    quotient: Lattice
    projection: tuple[int, ...]
    section: tuple[int, ...]
    congruence: Congruence


def quotient(l: Lattice, c: Congruence) -> QuotientLattice:
    """Lattice of classes with the induced operations.

    Well-definedness is checked over every pair of elements, not only the
    representatives.
    """
    if not is_congruence(l, c):
        raise ValueError("partition is not a congruence")
    k = len(c)
    b = c.blocks
    section = tuple(cl.min() for cl in c.classes)
    meet = np.full((k, k), -1, dtype=np.int64)
    join = np.full((k, k), -1, dtype=np.int64)
    for x in l.elements:
        for y in l.elements:
            for table, v in ((meet, b[l.meet(x, y)]), (join, b[l.join(x, y)])):
                cur = table[b[x], b[y]]
                if cur == -1:
                    table[b[x], b[y]] = v
                elif cur != v:
                    raise AssertionError("induced operation is not well defined")
    leq = np.array([[meet[p, q] == p for q in range(k)] for p in range(k)], dtype=bool)
    labels = [l.fmt(cl) for cl in c.classes]
    q = Lattice(leq, meet, join, labels, name=f"{l.name or 'L'}/theta")
    return QuotientLattice(q, b, section, c)


def compare(c1: Congruence, c2: Congruence) -> Comparison:
    if c1.n != c2.n:
        raise ValueError("congruences on different carriers")
    le, ge = c1 <= c2, c2 <= c1
    if le and ge:
        return "equal"
    if le:
        return "finer"
    if ge:
        return "coarser"
    return "incomparable"


def generated_congruence(l: Lattice, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Smallest congruence containing ``pairs``.

    Every pair is pushed through all translations ``x -> x ^ c`` and
    ``x -> x v c`` until closure, then the equivalence closure is taken.
    """
    parent = list(range(l.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    work = list(pairs)
    while work:
        x, y = work.pop()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        parent[rx] = ry
        for c in l.elements:
            work.append((l.meet(x, c), l.meet(y, c)))
            work.append((l.join(x, c), l.join(y, c)))
    return Congruence.from_keys([find(x) for x in l.elements])


def enumerate_congruences(l: Lattice, max_n: int = MAX_CONGRUENCE_ENUMERATION) -> list[Congruence]:
    """All congruences, as joins of principal congruences.

    Exhaustive only up to ``max_n`` elements; larger lattices raise.
    """
    if l.n > max_n:
        raise ValueError(f"congruence enumeration is bounded to {max_n} elements, got {l.n}")
    principal = {generated_congruence(l, [(x, y)])
                 for x in l.elements for y in l.elements if x < y}
    found = {delta(l.n)}
    frontier = [delta(l.n)]
    while frontier:
        nxt = []
        for c in frontier:
            for p in principal:
                j = c.join(p)
                if j not in found:
                    found.add(j)
                    nxt.append(j)
        frontier = nxt
    return sorted(found, key=lambda c: (-len(c), c.blocks))
