"""Finite lattices, element sets, validation and lattice generators.

Elements of a lattice are the dense indices ``0..n-1``; labels are only
for display.  Order, meet and join are precomputed at construction and
never mutated afterwards, so a :class:`Lattice` can be shared freely.
"""

from __future__ import annotations

import itertools
import string
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "ElementSet",
    "Lattice",
    "LatticeFacts",
    "validate",
    "chain",
    "downset_lattice",
    "enumerate_posets",
    "enumerate_distributive_lattices",
    "sublattice_facts",
    "canonical_form",
    "is_isomorphic",
]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class ElementSet:
    """A subset of a carrier ``{0..n-1}`` stored as a bitmask."""

    mask: int
    n: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"mask {self.mask:#x} has members outside 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, elements: Iterable[int] = ()) -> ElementSet:
        mask = 0
        for x in elements:
            if not 0 <= x < n:
                raise ValueError(f"element {x} outside carrier of size {n}")
            mask |= 1 << x
        return cls(mask, n)

    @classmethod
    def full(cls, n: int) -> ElementSet:
        return cls((1 << n) - 1, n)

    @classmethod
    def empty(cls, n: int) -> ElementSet:
        return cls(0, n)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __iter__(self) -> Iterator[int]:
        return _bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def _check(self, other: ElementSet) -> None:
        if not isinstance(other, ElementSet) or other.n != self.n:
            raise ValueError("element sets over different carriers")

    def __and__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self.mask & other.mask, self.n)

    def __or__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self.mask | other.mask, self.n)

    def __sub__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self.mask & ~other.mask, self.n)

    def __xor__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self.mask ^ other.mask, self.n)

    def __invert__(self) -> ElementSet:
        return ElementSet(~self.mask & ((1 << self.n) - 1), self.n)

    def __le__(self, other: ElementSet) -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: ElementSet) -> bool:
        return self <= other and self.mask != other.mask

    def __ge__(self, other: ElementSet) -> bool:
        return other <= self

    def __gt__(self, other: ElementSet) -> bool:
        return other < self

    def is_full(self) -> bool:
        return self.mask == (1 << self.n) - 1

    def min(self) -> int:
        if not self.mask:
            raise ValueError("empty element set")
        return (self.mask & -self.mask).bit_length() - 1

    def labels(self, lattice: Lattice) -> list[str]:
        return [lattice.labels[x] for x in self]

    def __repr__(self) -> str:
        return f"ElementSet({{{', '.join(map(str, self))}}}, n={self.n})"


def _closure_masks(down: list[int]) -> list[int]:
    # reflexive-transitive closure of "x is below y" masks (Warshall on bits)
    n = len(down)
    down = [m | (1 << x) for x, m in enumerate(down)]
    for k in range(n):
        bk = 1 << k
        dk = down[k]
        for y in range(n):
            if down[y] & bk:
                down[y] |= dk
    return down


class Lattice:
    """A finite lattice with precomputed order, meet and join tables.

    ``leq[x, y]`` is True iff ``x <= y``.  When ``meet``/``join`` are not
    given they are computed from ``leq``; pairs without a glb/lub get
    ``-1``, which :func:`validate` reports.  Construction never raises on
    a non-lattice so that invalid input can still be diagnosed.
    """

    def __init__(self, leq, meet=None, join=None, labels: Sequence[str] | None = None,
                 name: str | None = None):
        leq = np.array(leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise ValueError(f"order relation must be square, got shape {leq.shape}")
        n = leq.shape[0]
        leq.setflags(write=False)
        self.n = n
        self.leq = leq
        # down[y] has bit x set iff x <= y; up[x] has bit y set iff x <= y
        self.down = [sum(1 << x for x in range(n) if leq[x, y]) for y in range(n)]
        self.up = [sum(1 << y for y in range(n) if leq[x, y]) for x in range(n)]
        if meet is None:
            meet = self._bound_table(self.down)
        if join is None:
            join = self._bound_table(self.up)
        meet = np.array(meet, dtype=np.int64).reshape(n, n)
        join = np.array(join, dtype=np.int64).reshape(n, n)
        meet.setflags(write=False)
        join.setflags(write=False)
        self.meet_table = meet
        self.join_table = join
        self._m = meet.tolist()
        self._j = join.tolist()
        full = (1 << n) - 1
        self.bottom = next((x for x in range(n) if self.up[x] == full), None)
        self.top = next((x for x in range(n) if self.down[x] == full), None)
        if labels is None:
            labels = [str(x) for x in range(n)]
        labels = tuple(str(s) for s in labels)
        if len(labels) != n:
            raise ValueError(f"{len(labels)} labels for {n} elements")
        if len(set(labels)) != n:
            raise ValueError("element labels must be distinct")
        self.labels = labels
        self._index = {s: i for i, s in enumerate(labels)}
        self.name = name

    @staticmethod
    def _bound_table(cone: list[int]) -> list[list[int]]:
        n = len(cone)
        table = [[-1] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                common = cone[x] & cone[y]
                for g in _bits(common):
                    if cone[g] == common:
                        table[x][y] = g
                        break
        return table

    @classmethod
    def from_covers(cls, elements: Sequence[str], covers: Iterable[tuple[str, str]],
                    name: str | None = None) -> Lattice:
        """Build from labels and ``(lower, upper)`` cover pairs.

        The order is the reflexive-transitive closure of ``covers``.
        """
        index = {s: i for i, s in enumerate(elements)}
        if len(index) != len(elements):
            raise ValueError("duplicate element labels")
        below = [0] * len(elements)
        for lo, hi in covers:
            for s in (lo, hi):
                if s not in index:
                    raise KeyError(f"unknown element label {s!r}")
            below[index[hi]] |= 1 << index[lo]
        down = _closure_masks(below)
        n = len(elements)
        leq = np.zeros((n, n), dtype=bool)
        for y, m in enumerate(down):
            for x in _bits(m):
                leq[x, y] = True
        return cls(leq, labels=elements, name=name)

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<Lattice{tag} n={self.n}>"

    @property
    def elements(self) -> range:
        return range(self.n)

    def le(self, x: int, y: int) -> bool:
        return bool(self.down[y] >> x & 1)

    def lt(self, x: int, y: int) -> bool:
        return x != y and bool(self.down[y] >> x & 1)

    def meet(self, x: int, y: int) -> int:
        return self._m[x][y]

    def join(self, x: int, y: int) -> int:
        return self._j[x][y]

    def meet_all(self, xs: Iterable[int]) -> int:
        """Meet of a family; the empty meet is the top element."""
        acc = self.top
        for x in xs:
            acc = x if acc is None else self._m[acc][x]
        if acc is None:
            raise ValueError("empty meet in a lattice without top")
        return acc

    def join_all(self, xs: Iterable[int]) -> int:
        acc = self.bottom
        for x in xs:
            acc = x if acc is None else self._j[acc][x]
        if acc is None:
            raise ValueError("empty join in a lattice without bottom")
        return acc

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown element label {label!r}") from None

    def element_set(self, xs: Iterable[int | str] = ()) -> ElementSet:
        return ElementSet.of(self.n, (self.index(x) if isinstance(x, str) else x for x in xs))

    def full_set(self) -> ElementSet:
        return ElementSet.full(self.n)

    def down_set(self, x: int) -> ElementSet:
        return ElementSet(self.down[x], self.n)

    def up_set(self, x: int) -> ElementSet:
        return ElementSet(self.up[x], self.n)

    def fmt(self, s: ElementSet | Iterable[int]) -> str:
        return "{" + ",".join(self.labels[x] for x in s) + "}"

    @cached_property
    def is_distributive(self) -> bool:
        return not validate(self, require_distributive=True)

    def permuted(self, perm: Sequence[int]) -> Lattice:
        """Isomorphic copy where old element ``perm[i]`` becomes ``i``."""
        perm = list(perm)
        inv = [0] * self.n
        for i, p in enumerate(perm):
            inv[p] = i
        leq = self.leq[np.ix_(perm, perm)]
        meet = [[inv[self._m[perm[i]][perm[j]]] for j in range(self.n)] for i in range(self.n)]
        join = [[inv[self._j[perm[i]][perm[j]]] for j in range(self.n)] for i in range(self.n)]
        return Lattice(leq, meet, join, [self.labels[p] for p in perm], self.name)


def validate(l: Lattice, require_distributive: bool = True) -> list[str]:
    """List every violated axiom; empty iff ``l`` is a (distributive) lattice."""
    report: list[str] = []
    n, lab = l.n, l.labels
    leq = l.leq
    for x in range(n):
        if not leq[x, x]:
            report.append(f"reflexivity fails at {lab[x]}")
    for x, y in itertools.combinations(range(n), 2):
        if leq[x, y] and leq[y, x]:
            report.append(f"antisymmetry fails at ({lab[x]}, {lab[y]})")
    for y in range(n):
        for x in _bits(l.down[y]):
            # everything below x must be below y
            if l.down[x] & ~l.down[y]:
                z = next(_bits(l.down[x] & ~l.down[y]))
                report.append(f"transitivity fails at {lab[z]} <= {lab[x]} <= {lab[y]}")
    if report:
        return report

    def check(table, cone, what):
        ok = True
        for x in range(n):
            for y in range(x, n):
                g = int(table[x, y])
                common = cone[x] & cone[y]
                if g != int(table[y, x]):
                    report.append(f"{what} table not symmetric at ({lab[x]}, {lab[y]})")
                    ok = False
                elif not 0 <= g < n:
                    kind = "greatest lower" if what == "meet" else "least upper"
                    report.append(f"no {kind} bound for ({lab[x]}, {lab[y]})")
                    ok = False
                elif not (common >> g & 1) or cone[g] != common:
                    report.append(f"{what}({lab[x]}, {lab[y]}) = {lab[g]} is not the {what} under the order")
                    ok = False
        return ok

    ok = check(l.meet_table, l.down, "meet") & check(l.join_table, l.up, "join")
    if not ok or not require_distributive:
        return report
    m, j = l._m, l._j
    for x in range(n):
        for y in range(n):
            for z in range(y + 1, n):
                if m[x][j[y][z]] != j[m[x][y]][m[x][z]]:
                    report.append(f"distributivity fails at ({lab[x]}, {lab[y]}, {lab[z]})")
                    return report
    return report


def chain(k: int) -> Lattice:
    """Total order on ``k`` elements, labelled a, b, c, ... when possible."""
    if k < 1:
        raise ValueError("a chain needs at least one element")
    if k <= 26:
        labels = list(string.ascii_lowercase[:k])
    else:
        labels = [str(i) for i in range(k)]
    leq = np.triu(np.ones((k, k), dtype=bool))
    return Lattice(leq, labels=labels, name=f"chain({k})")


def _check_poset(p: np.ndarray) -> list[int]:
    n = p.shape[0]
    for x in range(n):
        if not p[x, x]:
            raise ValueError(f"poset relation not reflexive at {x}")
        for y in range(x + 1, n):
            if p[x, y] and p[y, x]:
                raise ValueError(f"poset relation not antisymmetric at ({x}, {y})")
    down = [sum(1 << x for x in range(n) if p[x, y]) for y in range(n)]
    for y in range(n):
        for x in _bits(down[y]):
            if down[x] & ~down[y]:
                raise ValueError(f"poset relation not transitive at ({x}, {y})")
    return down


def _downsets(down: list[int]) -> list[int]:
    """All down-closed subsets of a poset given by strict-or-not down masks."""
    n = len(down)
    strict = [down[x] & ~(1 << x) for x in range(n)]
    # process points in a linear extension so that predecessors come first
    order = sorted(range(n), key=lambda x: down[x].bit_count())
    out: list[int] = []

    def rec(i: int, cur: int) -> None:
        if i == n:
            out.append(cur)
            return
        x = order[i]
        rec(i + 1, cur)
        if strict[x] & ~cur == 0:
            rec(i + 1, cur | 1 << x)

    rec(0, 0)
    return out


def downset_lattice(p, labels: Sequence[str] | None = None, name: str | None = None) -> Lattice:
    """Lattice of down-closed subsets of the poset ``p`` under inclusion.

    ``p`` is a square boolean matrix with ``p[x, y]`` iff ``x <= y``.
    Meet and join are intersection and union, so the result is always
    distributive (Birkhoff).  The empty downset is labelled ``0`` and the
    others by their points, e.g. ``ab``.
    """
    p = np.array(p, dtype=bool)
    if p.ndim != 2 or p.shape[0] != p.shape[1]:
        raise ValueError("poset relation must be a square matrix")
    down = _check_poset(p)
    k = p.shape[0]
    if labels is None:
        labels = [string.ascii_lowercase[i] if k <= 26 else f"p{i}" for i in range(k)]
    sets = sorted(_downsets(down), key=lambda m: (m.bit_count(), m))
    pos = {m: i for i, m in enumerate(sets)}
    n = len(sets)
    leq = np.array([[a & ~b == 0 for b in sets] for a in sets], dtype=bool)
    meet = [[pos[a & b] for b in sets] for a in sets]
    join = [[pos[a | b] for b in sets] for a in sets]
    # a downset is named by its points; single-letter points concatenate
    sep = "" if all(len(s) == 1 for s in labels) else "+"
    names = [sep.join(labels[x] for x in _bits(m)) or "0" for m in sets]
    return Lattice(leq, meet, join, names, name)


def _refine_colors(down: list[int], up: list[int]) -> list[int]:
    n = len(down)
    colors = [0] * n
    while True:
        sig = []
        for x in range(n):
            below = sorted(colors[y] for y in _bits(down[x] & ~(1 << x)))
            above = sorted(colors[y] for y in _bits(up[x] & ~(1 << x)))
            sig.append((colors[x], tuple(below), tuple(above)))
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        # signatures embed the old colour, so classes only split; stop when none do
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def canonical_form(leq) -> tuple[int, tuple[int, ...]]:
    """Isomorphism-invariant encoding of a finite relation.

    Elements are coloured by iterated up/down-neighbourhood refinement and
    every relabelling consistent with the colour classes is tried; the
    lexicographically least row encoding wins.  Fine for n <= 12.
    """
    leq = np.array(leq, dtype=bool)
    n = leq.shape[0]
    down = [sum(1 << x for x in range(n) if leq[x, y]) for y in range(n)]
    up = [sum(1 << y for y in range(n) if leq[x, y]) for x in range(n)]
    colors = _refine_colors(down, up)
    classes = [[x for x in range(n) if colors[x] == c] for c in sorted(set(colors))]
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in classes)):
        perm = [x for part in parts for x in part]
        pos = [0] * n
        for i, x in enumerate(perm):
            pos[x] = i
        rows = tuple(sum(1 << pos[x] for x in _bits(down[y])) for y in perm)
        if best is None or rows < best:
            best = rows
    return n, best or ()


def is_isomorphic(a: Lattice, b: Lattice) -> bool:
    return a.n == b.n and canonical_form(a.leq) == canonical_form(b.leq)


def enumerate_posets(max_points: int, max_downsets: int | None = None) -> Iterator[np.ndarray]:
    """Non-isomorphic posets on at most ``max_points`` points.

    Posets grow one maximal point at a time (the new point sits above an
    existing down-set); duplicates are rejected by canonical form.  With
    ``max_downsets`` set, posets with more down-sets are pruned, which is
    sound because adding a point never shrinks the down-set count.
    """
    level = {canonical_form(np.zeros((0, 0), dtype=bool)): []}
    for k in range(max_points + 1):
        nxt: dict = {}
        for down in level.values():
            ds = _downsets(down) if k else [0]
            if max_downsets is not None and len(ds) > max_downsets:
                continue
            leq = np.zeros((k, k), dtype=bool)
            for y, m in enumerate(down):
                for x in _bits(m):
                    leq[x, y] = True
            yield leq
            if k == max_points:
                continue
            for d in ds:
                ext = down + [d | 1 << k]
                new = np.zeros((k + 1, k + 1), dtype=bool)
                for y, m in enumerate(ext):
                    for x in _bits(m):
                        new[x, y] = True
                key = canonical_form(new)
                nxt.setdefault(key, ext)
        level = nxt


def enumerate_distributive_lattices(max_n: int) -> Iterator[Lattice]:
    """Every distributive lattice with at most ``max_n`` elements, up to isomorphism.

    Lattices come out ordered by size.  A distributive lattice with ``n``
    elements has at most ``n - 1`` join-irreducibles, which bounds the
    poset search.
    """
    if max_n < 1:
        return
    found = []
    for p in enumerate_posets(max_n - 1, max_downsets=max_n):
        l = downset_lattice(p)
        if l.n <= max_n:
            found.append(l)
    found.sort(key=lambda l: (l.n, canonical_form(l.leq)))
    counts: dict[int, int] = {}
    for l in found:
        counts[l.n] = counts.get(l.n, 0) + 1
        l.name = f"D{l.n}.{counts[l.n]}"
        yield l


@dataclass(frozen=True)
class LatticeFacts:
    is_chain: bool
    atoms: ElementSet
    coatoms: ElementSet
    covers: tuple[tuple[int, int], ...]


def sublattice_facts(l: Lattice) -> LatticeFacts:
    """Covering relation (transitive reduction of the order), atoms, coatoms."""
    covers = []
    for y in range(l.n):
        strict = l.down[y] & ~(1 << y)
        for x in _bits(strict):
            between = strict & l.up[x] & ~(1 << x)
            if not between:
                covers.append((x, y))
    covers.sort()
    is_chain = all(l.le(x, y) or l.le(y, x) for x, y in itertools.combinations(range(l.n), 2))
    atoms = ElementSet.of(l.n, (y for x, y in covers if x == l.bottom))
    coatoms = ElementSet.of(l.n, (x for x, y in covers if y == l.top))
    return LatticeFacts(is_chain, atoms, coatoms, tuple(covers))
