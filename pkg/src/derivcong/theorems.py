"""Exhaustive verification of the structural results about the annihilator
congruence on finite distributive lattices.

Each claim is a generator that yields one message per violation found.
Case-scoped claims run once per (lattice, nontrivial ideal, derivation);
lattice-scoped claims run once per lattice.  A claim whose precondition
is unmet raises :class:`Skip`, which is counted separately and never as a
pass.

Set arithmetic is done on raw bitmasks (``int``) for speed.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Callable, Iterable, Iterator

from .boolean import (TheoremViolation, atom_report, is_boolean_algebra, quotient_boolean,
                      sigma_poset, two_element_criterion)
from .congruences import (Congruence, delta, enumerate_congruences, kernel_congruence, quotient)
from .core import ElementSet, Lattice, _bits, sublattice_facts
from .derivations import Derivation, enumerate_derivations, identity_derivation
from .ideals import enumerate_ideals, is_filter, is_prime_ideal
from .io import dumps_lattice

__all__ = [
    "CLAIMS",
    "Claim",
    "ClaimResult",
    "LatticeContext",
    "Case",
    "Skip",
    "SuiteReport",
    "run_suite",
    "verify",
    "upset_readings",
]


class Skip(Exception):
    """Precondition of a claim is not met for this case."""


@dataclass(frozen=True)
class Claim:
    name: str
    scope: str
    summary: str
    check: Callable[..., Iterator[str]]
    needs_congruences: bool = False


CLAIMS: dict[str, Claim] = {}


def claim(name: str, summary: str, scope: str = "case", needs_congruences: bool = False):
    def deco(f):
        CLAIMS[name] = Claim(name, scope, summary, f, needs_congruences)
        return f
    return deco


class LatticeContext:
    """Per-lattice data shared by every case: ideals, primes, derivations,
    congruences (when small enough) and a cache of annihilator tables."""

    def __init__(self, l: Lattice, congruence_limit: int = 8):
        self.l = l
        self.n = l.n
        self.full = (1 << l.n) - 1
        self.ideals = [s.mask for s in enumerate_ideals(l)]
        self.ideal_set = set(self.ideals)
        self.nontrivial = [m for m in self.ideals if m != self.full]
        self.primes = [m for m in self.nontrivial if is_prime_ideal(l, ElementSet(m, l.n))]
        self.prime_set = set(self.primes)
        self.derivations = enumerate_derivations(l)
        self.identity = identity_derivation(l)
        self.congruences = enumerate_congruences(l) if l.n <= congruence_limit else None
        self._ann: dict = {}
        self._theta: dict = {}

    def fmt(self, mask: int) -> str:
        return self.l.fmt(_bits(mask))

    def ann(self, d: Derivation, j: int) -> tuple[int, ...]:
        key = (d.table, j)
        out = self._ann.get(key)
        if out is None:
            t, m = d.table, self.l._m
            rng = range(self.n)
            out = tuple(sum(1 << x for x in rng if j >> t[m[a][x]] & 1) for a in rng)
            self._ann[key] = out
        return out

    def ker(self, d: Derivation, j: int) -> int:
        return sum(1 << x for x in range(self.n) if j >> d.table[x] & 1)

    def kernel_elements(self, d: Derivation, j: int) -> int:
        k = self.ker(d, j)
        return sum(1 << a for a, s in enumerate(self.ann(d, j)) if s == k)

    def theta(self, d: Derivation, j: int) -> Congruence:
        key = (d.table, j)
        out = self._theta.get(key)
        if out is None:
            out = self._theta[key] = Congruence.from_keys(self.ann(d, j))
        return out

    def minimal_primes(self, base: int) -> list[int]:
        over = [p for p in self.primes if base & ~p == 0]
        return [p for p in over if not any(q != p and q & ~p == 0 for q in over)]


class Case:
    def __init__(self, ctx: LatticeContext, d: Derivation, i: int):
        self.ctx, self.l, self.d, self.i = ctx, ctx.l, d, i
        self.n, self.full = ctx.n, ctx.full

    @cached_property
    def ann(self) -> tuple[int, ...]:
        return self.ctx.ann(self.d, self.i)

    @cached_property
    def ker(self) -> int:
        return self.ctx.ker(self.d, self.i)

    @cached_property
    def kel(self) -> int:
        return self.ctx.kernel_elements(self.d, self.i)

    @cached_property
    def theta(self) -> Congruence:
        return self.ctx.theta(self.d, self.i)

    @cached_property
    def quotient(self):
        return quotient(self.l, self.theta)

    @cached_property
    def boolean(self) -> bool:
        return is_boolean_algebra(self.quotient.quotient).is_boolean

    @cached_property
    def atoms(self):
        return atom_report(self.l, self.d, ElementSet(self.i, self.n))

    @cached_property
    def sigma(self) -> list[int]:
        out = []
        for x in range(self.n):
            if not self.ker >> x & 1 and self.ann[x] not in out:
                out.append(self.ann[x])
        return out

    @cached_property
    def kernel_minimal_primes(self) -> list[int]:
        return self.ctx.minimal_primes(self.ker)

    def describe(self) -> dict:
        return {"lattice": self.l.name, "derivation": self.d.describe(self.l),
                "ideal": self.ctx.fmt(self.i)}


def _sub(a: int, b: int) -> bool:
    return a & ~b == 0


def _is_prime(ctx: LatticeContext, m: int) -> bool:
    return m in ctx.prime_set


def _meet_masks(masks: Iterable[int], full: int) -> int:
    acc = full
    for m in masks:
        acc &= m
    return acc


# ---------------------------------------------------------------------------
# derivations
# ---------------------------------------------------------------------------

@claim("derivation_basics", "d fixes bottom, is contracting, idempotent, isotone, "
       "maps ideals into themselves, and d(x) = x ^ d(top)", scope="lattice")
def _derivation_basics(ctx: LatticeContext):
    l = ctx.l
    for d in ctx.derivations:
        t = d.table
        tag = d.describe(l)
        if l.bottom is not None and t[l.bottom] != l.bottom:
            yield f"{tag}: d(bottom) != bottom"
        for x in l.elements:
            if not l.le(t[x], x):
                yield f"{tag}: d({l.labels[x]}) not <= {l.labels[x]}"
            if t[t[x]] != t[x]:
                yield f"{tag}: d not idempotent at {l.labels[x]}"
            for y in l.elements:
                if l.le(x, y) and not l.le(t[x], t[y]):
                    yield f"{tag}: d not isotone at ({l.labels[x]}, {l.labels[y]})"
            if l.top is not None:
                dt = t[l.top]
                if t[x] != l.meet(x, dt):
                    yield f"{tag}: d({l.labels[x]}) != {l.labels[x]} ^ d(top)"
                if l.le(x, dt) and t[x] != x:
                    yield f"{tag}: x <= d(top) but d(x) != x at {l.labels[x]}"
                if l.le(dt, x) and t[x] != dt:
                    yield f"{tag}: x >= d(top) but d(x) != d(top) at {l.labels[x]}"
        for j in ctx.ideals:
            if any(not j >> t[x] & 1 for x in _bits(j)):
                yield f"{tag}: d({ctx.fmt(j)}) not inside the ideal"


@claim("derivation_homomorphism", "every derivation preserves meet and join", scope="lattice")
def _derivation_homomorphism(ctx: LatticeContext):
    l = ctx.l
    for d in ctx.derivations:
        t = d.table
        for x in l.elements:
            for y in l.elements:
                if t[l.meet(x, y)] != l.meet(t[x], t[y]) or t[l.join(x, y)] != l.join(t[x], t[y]):
                    yield f"{d.describe(l)} not a homomorphism at ({l.labels[x]}, {l.labels[y]})"


# ---------------------------------------------------------------------------
# kernel ideal and annihilators
# ---------------------------------------------------------------------------

@claim("annihilator_ideals", "the kernel ideal and every annihilator are ideals")
def _annihilator_ideals(c: Case):
    if c.ker not in c.ctx.ideal_set:
        yield f"kernel {c.ctx.fmt(c.ker)} is not an ideal"
    for a, s in enumerate(c.ann):
        if s not in c.ctx.ideal_set:
            yield f"({c.l.labels[a]}) = {c.ctx.fmt(s)} is not an ideal"


@claim("annihilator_antitone", "a <= b implies (b) is contained in (a)")
def _annihilator_antitone(c: Case):
    l = c.l
    for a in l.elements:
        for b in _bits(l.up[a]):
            if not _sub(c.ann[b], c.ann[a]):
                yield f"{l.labels[a]} <= {l.labels[b]} but ({l.labels[b]}) not in ({l.labels[a]})"


@claim("annihilator_join", "(a v b) is the intersection of (a) and (b)")
def _annihilator_join(c: Case):
    l = c.l
    for a in l.elements:
        for b in l.elements:
            if c.ann[l.join(a, b)] != c.ann[a] & c.ann[b]:
                yield f"({l.labels[a]} v {l.labels[b]}) != ({l.labels[a]}) & ({l.labels[b]})"


@claim("kernel_between", "I is inside the kernel ideal, which is inside every annihilator")
def _kernel_between(c: Case):
    if not _sub(c.i, c.ker):
        yield "I not inside kernel"
    for a, s in enumerate(c.ann):
        if not _sub(c.ker, s):
            yield f"kernel not inside ({c.l.labels[a]})"


@claim("kernel_membership", "a in kernel iff a in (a) iff (a) = L")
def _kernel_membership(c: Case):
    for a, s in enumerate(c.ann):
        flags = {bool(c.ker >> a & 1), bool(s >> a & 1), s == c.full}
        if len(flags) != 1:
            yield f"membership equivalence fails at {c.l.labels[a]}"


@claim("annihilator_intersection", "the intersection of all annihilators is the kernel ideal")
def _annihilator_intersection(c: Case):
    if _meet_masks(c.ann, c.full) != c.ker:
        yield "intersection of annihilators differs from kernel"


@claim("annihilator_symmetric", "a in (b) iff b in (a)")
def _annihilator_symmetric(c: Case):
    for a in range(c.n):
        for b in range(c.n):
            if bool(c.ann[b] >> a & 1) != bool(c.ann[a] >> b & 1):
                yield f"asymmetry at ({c.l.labels[a]}, {c.l.labels[b]})"


@claim("annihilator_double", "(a) != L implies the intersection of (b) over b in (a) differs from the kernel")
def _annihilator_double(c: Case):
    for a, s in enumerate(c.ann):
        if s != c.full and _meet_masks((c.ann[b] for b in _bits(s)), c.full) == c.ker:
            yield f"double annihilator of {c.l.labels[a]} collapses to the kernel"


@claim("ideal_monotone", "I inside J implies kernels and annihilators grow from I to J")
def _ideal_monotone(c: Case):
    for j in c.ctx.ideals:
        if not _sub(c.i, j):
            continue
        if not _sub(c.ker, c.ctx.ker(c.d, j)):
            yield f"kernel not monotone from I to {c.ctx.fmt(j)}"
        annj = c.ctx.ann(c.d, j)
        for a in range(c.n):
            if not _sub(c.ann[a], annj[a]):
                yield f"({c.l.labels[a]}) not monotone from I to {c.ctx.fmt(j)}"


# ---------------------------------------------------------------------------
# kernel elements and the quotient's bounds
# ---------------------------------------------------------------------------

@claim("kernel_elements_filter", "kernel elements form a filter; kernel = L iff kernel elements = L; "
       "kernel elements miss proper annihilators; (x) = (d(x)); theta is preserved by d")
def _kernel_elements_filter(c: Case):
    l, t = c.l, c.d.table
    if c.kel and not is_filter(l, ElementSet(c.kel, c.n)):
        yield f"kernel elements {c.ctx.fmt(c.kel)} are not a filter"
    if (c.ker == c.full) != (c.kel == c.full):
        yield "kernel = L and kernel elements = L disagree"
    if c.kel != c.full:
        for a, s in enumerate(c.ann):
            if s != c.full and s & c.kel:
                yield f"kernel elements meet ({l.labels[a]})"
    for x in l.elements:
        if c.ann[x] != c.ann[t[x]]:
            yield f"({l.labels[x]}) != (d({l.labels[x]}))"
    th = c.theta
    for x in l.elements:
        for y in l.elements:
            if th.related(x, y) and not th.related(t[x], t[y]):
                yield f"d does not preserve theta at ({l.labels[x]}, {l.labels[y]})"


@claim("quotient_bounds", "the kernel ideal is the bottom class and the kernel elements the top class")
def _quotient_bounds(c: Case):
    q = c.quotient
    ker = ElementSet(c.ker, c.n)
    if not c.theta.has_class(ker):
        yield "kernel is not a whole class"
    elif q.quotient.bottom != q.projection[ker.min()]:
        yield "kernel class is not the bottom of the quotient"
    if c.kel:
        kel = ElementSet(c.kel, c.n)
        if not c.theta.has_class(kel):
            yield "kernel elements are not a whole class"
        elif q.quotient.top != q.projection[kel.min()]:
            yield "kernel-element class is not the top of the quotient"


@claim("kernel_elements_nonempty", "top and d(top) are kernel elements; a prime I or kernel splits L "
       "into kernel and kernel elements; chains always have kernel elements")
def _kernel_elements_nonempty(c: Case):
    l = c.l
    if l.top is not None:
        for x in (l.top, c.d(l.top)):
            if not c.kel >> x & 1:
                yield f"{l.labels[x]} is not a kernel element"
    if _is_prime(c.ctx, c.i) or _is_prime(c.ctx, c.ker):
        if not c.kel:
            yield "prime case without kernel elements"
        if c.ker != c.full:
            if c.ker | c.kel != c.full or c.ker & c.kel:
                yield "L is not the disjoint union of kernel and kernel elements"
            expected = Congruence.from_keys([bool(c.ker >> x & 1) for x in l.elements])
            if c.theta != expected:
                yield "theta is not the two-class partition"
    if sublattice_facts(l).is_chain and not c.kel:
        yield "chain without kernel elements"


@claim("theta_greatest", "theta is the greatest congruence having the kernel ideal as a class",
       needs_congruences=True)
def _theta_greatest(c: Case):
    ker = ElementSet(c.ker, c.n)
    if not c.theta.has_class(ker):
        yield "kernel is not a theta class"
    for other in c.ctx.congruences:
        if other.has_class(ker) and not other <= c.theta:
            yield f"congruence {other.fmt(c.l)} has the kernel as a class but is not below theta"


@claim("theta_identity_finest", "theta for the identity refines theta for any derivation")
def _theta_identity_finest(c: Case):
    if not c.ctx.theta(c.ctx.identity, c.i) <= c.theta:
        yield "identity theta not below theta"


@claim("ideal_enlargement", "if J is the I-kernel of some derivation then theta_I <= theta_J; "
       "theta over the own kernel equals theta_I")
def _ideal_enlargement(c: Case):
    for d1 in c.ctx.derivations:
        j = c.ctx.ker(d1, c.i)
        if not c.theta <= c.ctx.theta(c.d, j):
            yield f"theta_I not below theta_J for J = {c.ctx.fmt(j)} (via {d1.describe(c.l)})"
    if c.ctx.theta(c.d, c.ker) != c.theta:
        yield "theta over the kernel ideal differs from theta_I"


@claim("annihilator_base_change", "for J = (a): (a)_J = (a)_I = J, a is a J-kernel element, "
       "theta_I <= theta_J, with equality when a is an I-kernel element")
def _annihilator_base_change(c: Case):
    ctx, l = c.ctx, c.l
    for a in l.elements:
        j = c.ann[a]
        annj = ctx.ann(c.d, j)
        if annj[a] != j:
            yield f"(a)_J != (a)_I for a = {l.labels[a]}"
        if annj[a] != ctx.ker(c.d, j):
            yield f"{l.labels[a]} is not a kernel element for J = (a)"
        th_j = ctx.theta(c.d, j)
        if not c.theta <= th_j:
            yield f"theta_I not below theta_J for a = {l.labels[a]}"
        if c.kel >> a & 1 and th_j != c.theta:
            yield f"theta_I != theta_J though {l.labels[a]} is a kernel element"


@claim("intermediate_ideal_chain", "for J = (a) and any ideal K with I <= K <= J: (a)_K = (a)_I and "
       "theta_I <= theta_K <= theta_J")
def _intermediate_ideal_chain(c: Case):
    ctx, l = c.ctx, c.l
    for a in l.elements:
        j = c.ann[a]
        th_j = ctx.theta(c.d, j)
        for k in ctx.ideals:
            if not (_sub(c.i, k) and _sub(k, j)):
                continue
            if ctx.ann(c.d, k)[a] != j:
                yield f"(a)_K != (a)_I for a = {l.labels[a]}, K = {ctx.fmt(k)}"
            th_k = ctx.theta(c.d, k)
            if not c.theta <= th_k:
                yield f"theta_I not below theta_K for a = {l.labels[a]}, K = {ctx.fmt(k)}"
            if not th_k <= th_j:
                yield f"theta_K not below theta_J for a = {l.labels[a]}, K = {ctx.fmt(k)}"


@claim("prime_base", "I prime implies the kernel is L or equals I and every proper annihilator; "
       "annihilators escaping a prime annihilator meet into the kernel")
def _prime_base(c: Case):
    ctx, l = c.ctx, c.l
    if _is_prime(ctx, c.i) and c.ker != c.full:
        if not _is_prime(ctx, c.ker):
            yield "I prime but kernel not prime"
        for x in l.elements:
            if not c.ker >> x & 1 and not (c.i == c.ker == c.ann[x]):
                yield f"I, kernel and ({l.labels[x]}) differ"
    for x in l.elements:
        for y in l.elements:
            py = _is_prime(ctx, c.ann[y])
            if py and not _sub(c.ann[x], c.ann[y]) and not c.ker >> l.meet(x, y) & 1:
                yield f"({l.labels[x]}) escapes prime ({l.labels[y]}) but meet not in kernel"
            if py and _is_prime(ctx, c.ann[x]) and c.ann[x] != c.ann[y] \
                    and not c.ker >> l.meet(x, y) & 1:
                yield f"distinct prime annihilators of {l.labels[x]}, {l.labels[y]} but meet not in kernel"


@claim("three_class_criterion", "a three-class quotient with cross meets in the kernel exists iff two "
       "primes cover L and intersect in the kernel")
def _three_class_criterion(c: Case):
    l, th = c.l, c.theta
    lhs = False
    if len(th) == 3 and th.has_class(ElementSet(c.ker, c.n)):
        others = [s.mask for s in th.classes if s.mask != c.ker]
        lhs = all(c.ker >> l.meet(x, y) & 1 for x in _bits(others[0]) for y in _bits(others[1]))
    rhs = any(p | q == c.full and p & q == c.ker for p in c.ctx.primes for q in c.ctx.primes)
    if lhs != rhs:
        yield f"three-class side {lhs}, two-prime side {rhs}"


@claim("sigma_maximal_prime", "for a outside the kernel: (a) maximal among annihilators of non-kernel "
       "elements iff prime iff kernel-minimal prime")
def _sigma_maximal_prime(c: Case):
    mins = set(c.kernel_minimal_primes)
    for a in range(c.n):
        s = c.ann[a]
        maximal = s in c.sigma and not any(s != t and _sub(s, t) for t in c.sigma)
        flags = (maximal, _is_prime(c.ctx, s), s in mins)
        if len(set(flags)) != 1:
            yield f"a = {c.l.labels[a]}: maximal={flags[0]} prime={flags[1]} minimal prime={flags[2]}"


@claim("minimal_primes_annihilators", "kernel-minimal primes are exactly the maximal annihilators, "
       "each of the form (a), and they intersect in the kernel")
def _minimal_primes_annihilators(c: Case):
    mins = c.kernel_minimal_primes
    maximal = [s for s in c.sigma if not any(s != t and _sub(s, t) for t in c.sigma)]
    if set(mins) != set(maximal):
        yield "kernel-minimal primes differ from maximal annihilators"
    for p in mins:
        if p not in c.ann:
            yield f"minimal prime {c.ctx.fmt(p)} is not an annihilator"
    if _meet_masks(maximal, c.full) != c.ker:
        yield "maximal annihilators do not intersect in the kernel"


@claim("bottom_minimal_primes", "every minimal prime of a lattice with bottom is the identity "
       "annihilator of some element over {bottom}", scope="lattice")
def _bottom_minimal_primes(ctx: LatticeContext):
    l = ctx.l
    if l.bottom is None or l.n == 1:
        raise Skip
    bot = 1 << l.bottom
    ann = ctx.ann(ctx.identity, bot)
    for p in ctx.minimal_primes(bot):
        if p not in ann:
            yield f"minimal prime {ctx.fmt(p)} is not an annihilator"


@claim("chain_condition_equivalence", "finitely many kernel-minimal primes intersect in the kernel, and "
       "no pairwise kernel-meeting set outside the kernel exceeds their number")
def _chain_condition_equivalence(c: Case):
    mins = c.kernel_minimal_primes
    if _meet_masks(mins, c.full) != c.ker:
        yield "kernel-minimal primes do not intersect in the kernel"
    size = _max_kernel_antichain(c)
    if size > len(mins):
        yield f"pairwise kernel-meeting set of size {size} exceeds {len(mins)} minimal primes"


def _max_kernel_antichain(c: Case) -> int:
    """Largest B outside the kernel whose distinct members meet into the kernel."""
    l = c.l
    outside = [x for x in l.elements if not c.ker >> x & 1]
    adj = {x: {y for y in outside if y != x and c.ker >> l.meet(x, y) & 1} for x in outside}
    best = 0

    def grow(size, cand):
        nonlocal best
        best = max(best, size)
        for v in list(cand):
            grow(size + 1, cand & adj[v])
            cand = cand - {v}

    grow(0, set(outside))
    return best


# ---------------------------------------------------------------------------
# relative atoms
# ---------------------------------------------------------------------------

def _atomic(c: Case):
    if not c.atoms.is_atomic:
        raise Skip
    return c.atoms


@claim("atom_cover", "if some atoms join to top, every non-top element lies in one of their annihilators")
def _atom_cover(c: Case):
    rep, l = _atomic(c), c.l
    if l.top is None:
        raise Skip
    atoms = list(rep.atoms)
    cover = 0
    for r in range(1, len(atoms) + 1):
        for sub in itertools.combinations(atoms, r):
            if l.join_all(sub) != l.top:
                continue
            cover = 0
            for a in sub:
                cover |= c.ann[a]
            missing = c.full & ~cover & ~(1 << l.top)
            if missing:
                yield f"atoms {l.fmt(sub)} join to top but miss {c.ctx.fmt(missing)}"


@claim("atom_intersection", "annihilators of the atoms intersect in the kernel")
def _atom_intersection(c: Case):
    rep = _atomic(c)
    if _meet_masks((c.ann[a] for a in rep.atoms), c.full) != c.ker:
        yield "atom annihilators do not intersect in the kernel"


@claim("atom_sets_determine_theta", "theta-equivalence is equality of atom sets; meets fall in the kernel "
       "iff atom sets are disjoint; elements above all atoms are kernel elements")
def _atom_sets_determine_theta(c: Case):
    rep, l = _atomic(c), c.l
    A = [s.mask for s in rep.atom_sets]
    for a in l.elements:
        for b in l.elements:
            if c.theta.related(a, b) != (A[a] == A[b]):
                yield f"theta and atom sets disagree at ({l.labels[a]}, {l.labels[b]})"
            if bool(c.ker >> l.meet(a, b) & 1) != (A[a] & A[b] == 0):
                yield f"meet-in-kernel and disjoint atoms disagree at ({l.labels[a]}, {l.labels[b]})"
        if A[a] == rep.atoms.mask and not c.kel >> a & 1:
            yield f"{l.labels[a]} lies above every atom but is not a kernel element"
    top_join = l.join_all(rep.atoms) if rep.atoms else l.bottom
    if top_join is not None and not c.kel >> top_join & 1:
        yield "join of all atoms is not a kernel element"


@claim("atom_maximal", "the annihilator of an atom is maximal among annihilators of non-kernel elements")
def _atom_maximal(c: Case):
    rep = _atomic(c)
    for a in rep.atoms:
        s = c.ann[a]
        if any(s != t and _sub(s, t) for t in c.sigma):
            yield f"({c.l.labels[a]}) is not maximal"


@claim("single_atom_prime", "(a) is a kernel-minimal prime iff exactly one atom lies below a")
def _single_atom_prime(c: Case):
    rep = _atomic(c)
    mins = set(c.kernel_minimal_primes)
    for a in range(c.n):
        if (c.ann[a] in mins) != (len(rep.atom_sets[a]) == 1):
            yield f"minimal-prime and single-atom disagree at {c.l.labels[a]}"


@claim("minimal_primes_atoms", "every kernel-minimal prime is the annihilator of an atom; with kernel "
       "{bottom}, every minimal prime of L is the annihilator of an atom of L")
def _minimal_primes_atoms(c: Case):
    rep, l = _atomic(c), c.l
    atom_anns = {c.ann[a] for a in rep.atoms}
    for p in c.kernel_minimal_primes:
        if p not in atom_anns:
            yield f"minimal prime {c.ctx.fmt(p)} is not an atom annihilator"
    if l.bottom is not None and c.ker == 1 << l.bottom:
        lattice_atoms = sublattice_facts(l).atoms
        anns = {c.ann[a] for a in lattice_atoms}
        for p in c.ctx.minimal_primes(1 << l.bottom):
            if p not in anns:
                yield f"minimal prime {c.ctx.fmt(p)} of L is not an atom annihilator"


@claim("minimal_prime_decomposition", "kernel-minimal primes intersect irredundantly in the kernel and "
       "their union's complement is the set of kernel elements")
def _minimal_prime_decomposition(c: Case):
    _atomic(c)
    mins = c.kernel_minimal_primes
    if _meet_masks(mins, c.full) != c.ker:
        yield "minimal primes do not intersect in the kernel"
    for j in range(len(mins)):
        if _meet_masks((p for i, p in enumerate(mins) if i != j), c.full) == c.ker:
            yield f"minimal prime {c.ctx.fmt(mins[j])} is redundant"
    union = 0
    for p in mins:
        union |= p
    if c.full & ~union != c.kel:
        yield "complement of the union of minimal primes differs from the kernel elements"


@claim("gamma_trichotomy", "for x, y in Gamma: the meet lies in the kernel, or a proper annihilator holds "
       "both, or two proper annihilators chain them through the kernel")
def _gamma_trichotomy(c: Case):
    rep, l = _atomic(c), c.l
    ker = c.ker
    proper = [z for z in l.elements if c.ann[z] not in (ker, c.full)]
    in_ker = lambda x, y: bool(ker >> l.meet(x, y) & 1)  # noqa: E731
    for x in rep.gamma:
        for y in rep.gamma:
            if in_ker(x, y):
                continue
            if any(c.ann[z] >> x & 1 and c.ann[z] >> y & 1 for z in proper):
                continue
            if any(in_ker(x, z1) and in_ker(z1, z2) and in_ker(z2, y) for z1 in proper for z2 in proper):
                continue
            yield f"no case applies to ({l.labels[x]}, {l.labels[y]})"


def _upset(l: Lattice, mask: int, mode: str) -> int:
    if mode == "union":
        out = 0
        for a in _bits(mask):
            out |= l.up[a]
        return out
    out = (1 << l.n) - 1
    for a in _bits(mask):
        out &= l.up[a]
    return out


def _upset_formula_holds(c: Case, a: int, mode: str, outside_kernel: bool) -> bool:
    rep, l = c.atoms, c.l
    own = rep.atom_sets[a].mask
    rest = rep.atoms.mask & ~own
    rhs = _upset(l, rest, mode) & ~_upset(l, own, mode)
    lhs = c.ann[a]
    if outside_kernel:
        lhs &= ~c.ker
        rhs &= ~c.ker
    return lhs == rhs


@claim("upset_formula", "for a in Gamma, the non-kernel part of (a) is the union of filters over atoms "
       "not below a, minus the union of filters over atoms below a")
def _upset_formula(c: Case):
    rep = _atomic(c)
    for a in rep.gamma:
        if not _upset_formula_holds(c, a, "union", outside_kernel=True):
            yield f"formula fails at {c.l.labels[a]}"


@claim("antichain_bound", "a set outside the kernel whose distinct members meet into the kernel has at "
       "most as many elements as there are atoms; the atoms form such a set")
def _antichain_bound(c: Case):
    rep, l = _atomic(c), c.l
    atoms = list(rep.atoms)
    for a, b in itertools.combinations(atoms, 2):
        if not c.ker >> l.meet(a, b) & 1:
            yield f"atoms {l.labels[a]}, {l.labels[b]} meet outside the kernel"
    size = _max_kernel_antichain(c)
    if size > len(atoms):
        yield f"pairwise kernel-meeting set of size {size} exceeds {len(atoms)} atoms"


# ---------------------------------------------------------------------------
# Boolean quotients
# ---------------------------------------------------------------------------

def _boolean_by_conditions(l: Lattice, th: Congruence) -> bool:
    """Bounded classes a0, b0 exist and every x has y with x ^ y ~ a0, x v y ~ b0."""
    q = quotient(l, th).quotient
    if q.bottom is None or q.top is None:
        return False
    b = th.blocks
    return all(any(b[l.meet(x, y)] == q.bottom and b[l.join(x, y)] == q.top for y in l.elements)
               for x in l.elements)


@claim("boolean_characterization", "the quotient by theta is Boolean iff bounded with complements "
       "realised by elements")
def _boolean_characterization(c: Case):
    if _boolean_by_conditions(c.l, c.theta) != c.boolean:
        yield "element-level conditions disagree with the direct Boolean check"


@claim("boolean_characterization_all", "for every congruence, Boolean quotient iff element-level "
       "bound/complement conditions", scope="lattice", needs_congruences=True)
def _boolean_characterization_all(ctx: LatticeContext):
    for th in ctx.congruences:
        direct = is_boolean_algebra(quotient(ctx.l, th).quotient).is_boolean
        if _boolean_by_conditions(ctx.l, th) != direct:
            yield f"conditions disagree for {th.fmt(ctx.l)}"


@claim("boolean_witness", "Boolean quotient iff every x has y in (x) with x v y a kernel element "
       "(two decision paths agree)")
def _boolean_witness(c: Case):
    v = quotient_boolean(c.l, c.d, ElementSet(c.i, c.n))
    if v.is_boolean != c.boolean:
        yield "verdict differs from direct check"


@claim("complement_criterion", "in a Boolean quotient, [y] complements [x] iff x ^ y in kernel and "
       "x v y a kernel element")
def _complement_criterion(c: Case):
    if not c.boolean:
        raise Skip
    l = c.l
    comp = is_boolean_algebra(c.quotient.quotient).complements
    b = c.theta.blocks
    for x in l.elements:
        for y in l.elements:
            lhs = comp[b[x]] == b[y]
            rhs = bool(c.ker >> l.meet(x, y) & 1) and bool(c.kel >> l.join(x, y) & 1)
            if lhs != rhs:
                yield f"complement criterion fails at ({l.labels[x]}, {l.labels[y]})"


@claim("prime_implies_boolean", "a prime I or kernel, or annihilators with maximum elements, force a "
       "Boolean quotient")
def _prime_implies_boolean(c: Case):
    if (_is_prime(c.ctx, c.i) or _is_prime(c.ctx, c.ker)) and not c.boolean:
        yield "prime case with non-Boolean quotient"
    has_max = all(s in c.l.down for s in c.ann)
    if has_max and not c.boolean:
        yield "annihilators have maxima but quotient is not Boolean"


@claim("boolean_identity_delta", "on a Boolean algebra, theta for the identity over {bottom} is the "
       "identity relation", scope="lattice")
def _boolean_identity_delta(ctx: LatticeContext):
    l = ctx.l
    if l.n == 1 or not is_boolean_algebra(l):
        raise Skip
    if ctx.theta(ctx.identity, 1 << l.bottom) != delta(l.n):
        yield "theta is not the identity relation"


@claim("boolean_kernel_congruence", "on a Boolean algebra, the kernel of d equals theta over {bottom}",
       scope="lattice")
def _boolean_kernel_congruence(ctx: LatticeContext):
    l = ctx.l
    if l.n == 1 or not is_boolean_algebra(l):
        raise Skip
    for d in ctx.derivations:
        if kernel_congruence(l, d) != ctx.theta(d, 1 << l.bottom):
            yield f"ker(d) != theta for {d.describe(l)}"


@claim("kernel_congruence_contained", "the kernel congruence of d refines theta")
def _kernel_congruence_contained(c: Case):
    if not kernel_congruence(c.l, c.d) <= c.theta:
        yield "ker(d) not below theta"


@claim("singleton_criterion", "theta is all of L x L iff the kernel is L iff I meets every "
       "ker(d)-class in exactly one element")
def _singleton_criterion(c: Case):
    kc = kernel_congruence(c.l, c.d)
    one = all(len(cl) == 1 for cl in (ElementSet(c.i & s.mask, c.n) for s in kc.classes))
    flags = (len(c.theta) == 1, c.ker == c.full, one)
    if len(set(flags)) != 1:
        yield f"theta=nabla {flags[0]}, kernel=L {flags[1]}, singleton intersections {flags[2]}"


@claim("two_element", "the quotient is the two-element algebra iff the kernel ideal is prime")
def _two_element(c: Case):
    two_element_criterion(c.l, c.d, ElementSet(c.i, c.n))
    return iter(())


@claim("sigma_isomorphism", "annihilators under reverse inclusion form a lattice isomorphic to the "
       "quotient, with bottom L and top the kernel")
def _sigma_isomorphism(c: Case):
    sig = sigma_poset(c.l, c.d, ElementSet(c.i, c.n))
    s = sig.lattice
    if sig.sets[s.bottom].mask != c.full:
        yield "bottom of annihilator lattice is not L"
    if c.kel and sig.sets[s.top].mask != c.ker:
        yield "top of annihilator lattice is not the kernel"


@claim("sigma_maximum", "in a Boolean quotient, {(z) : z in (x)} has a maximum under reverse inclusion")
def _sigma_maximum(c: Case):
    if not c.boolean:
        raise Skip
    for x in range(c.n):
        fam = {c.ann[z] for z in _bits(c.ann[x])}
        if not any(all(_sub(s, t) for t in fam) for s in fam):
            yield f"no maximum for x = {c.l.labels[x]}"


@claim("atom_partition", "Boolean quotient iff every x has y whose atom set complements that of x "
       "and whose class complements the class of x")
def _atom_partition(c: Case):
    rep, l = _atomic(c), c.l
    A = [s.mask for s in rep.atom_sets]
    b = c.theta.blocks
    q = c.quotient.quotient

    def ok(x):
        for y in l.elements:
            if A[x] & A[y] or A[x] | A[y] != rep.atoms.mask:
                continue
            if q.meet(b[x], b[y]) == q.bottom and q.join(b[x], b[y]) == q.top:
                return True
        return False

    if all(ok(x) for x in l.elements) != c.boolean:
        yield "atom-partition condition disagrees with Boolean check"


@claim("unique_kernel_congruence", "in a Boolean quotient, theta is the only congruence having the "
       "kernel ideal as a class", needs_congruences=True)
def _unique_kernel_congruence(c: Case):
    if not c.boolean:
        raise Skip
    ker = ElementSet(c.ker, c.n)
    for other in c.ctx.congruences:
        if other.has_class(ker) and other != c.theta:
            yield f"{other.fmt(c.l)} also has the kernel {c.l.fmt(ker)} as a class"


@claim("boolean_congruence_unique", "a congruence with Boolean quotient having the kernel ideal as a "
       "class equals theta when the theta quotient is Boolean", needs_congruences=True)
def _boolean_congruence_unique(c: Case):
    if not c.boolean:
        raise Skip
    ker = ElementSet(c.ker, c.n)
    for other in c.ctx.congruences:
        if other.has_class(ker) and other != c.theta \
                and is_boolean_algebra(quotient(c.l, other).quotient):
            yield f"Boolean congruence {other.fmt(c.l)} differs from theta"


@claim("bottom_kernel_delta", "kernel {bottom} and Boolean quotient force theta to be the identity relation")
def _bottom_kernel_delta(c: Case):
    if c.l.bottom is None or c.ker != 1 << c.l.bottom or not c.boolean:
        raise Skip
    if c.theta != delta(c.n):
        yield "theta is not the identity relation"


# ---------------------------------------------------------------------------
# runner
# ---------------------------------------------------------------------------

@dataclass
class ClaimResult:
    name: str
    checked: int = 0
    skipped: int = 0
    violations: int = 0
    first: dict | None = None

    @property
    def status(self) -> str:
        if self.violations:
            return "fail"
        return "pass" if self.checked else "skip"

    def record(self) -> dict:
        return {"claim": self.name, "status": self.status, "checked": self.checked,
                "skipped": self.skipped, "violations": self.violations, "witness": self.first}


@dataclass
class SuiteReport:
    results: dict[str, ClaimResult]
    lattices: int = 0
    cases: int = 0
    elapsed: float = 0.0
    partial: bool = False
    upset_readings: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(r.violations for r in self.results.values())

    @property
    def failed(self) -> list[str]:
        return [n for n, r in self.results.items() if r.violations]

    def records(self) -> list[dict]:
        return [r.record() for r in self.results.values()]


def _witness(ctx: LatticeContext, case: Case | None, message: str) -> dict:
    out = {"lattice": ctx.l.name, "lattice_text": dumps_lattice(ctx.l), "message": message}
    if case is not None:
        out.update(case.describe())
    return out


def run_suite(lattices: Iterable[Lattice], claims: Iterable[str] | None = None,
              congruence_limit: int = 8, budget: float | None = None, fail_fast: bool = False,
              repro_dir: str | Path | None = None) -> SuiteReport:
    """Run the selected claims over every lattice, nontrivial ideal and derivation.

    ``budget`` is a wall-clock limit in seconds; when exceeded the report
    is flagged partial.  ``repro_dir`` receives one JSON reproducer per
    violated claim (the first witness).
    """
    names = list(CLAIMS) if claims is None else list(claims)
    unknown = [n for n in names if n not in CLAIMS]
    if unknown:
        raise KeyError(f"unknown claims: {', '.join(unknown)}")
    selected = [CLAIMS[n] for n in names]
    report = SuiteReport({n: ClaimResult(n) for n in names})
    start = time.perf_counter()

    def run(cl: Claim, ctx: LatticeContext, case: Case | None):
        res = report.results[cl.name]
        if cl.needs_congruences and ctx.congruences is None:
            res.skipped += 1
            return
        try:
            msgs = list(cl.check(case if case is not None else ctx))
        except Skip:
            res.skipped += 1
            return
        except TheoremViolation as e:
            msgs = [str(e)]
        res.checked += 1
        if msgs:
            res.violations += len(msgs)
            if res.first is None:
                res.first = _witness(ctx, case, msgs[0])
                if repro_dir is not None:
                    path = Path(repro_dir)
                    path.mkdir(parents=True, exist_ok=True)
                    (path / f"{cl.name}.json").write_text(json.dumps({"claim": cl.name, **res.first}, indent=2))
            if fail_fast:
                raise _Abort

    try:
        for l in lattices:
            if budget is not None and time.perf_counter() - start > budget:
                report.partial = True
                break
            ctx = LatticeContext(l, congruence_limit)
            report.lattices += 1
            for cl in selected:
                if cl.scope == "lattice":
                    run(cl, ctx, None)
            case_claims = [cl for cl in selected if cl.scope == "case"]
            for i in ctx.nontrivial:
                for d in ctx.derivations:
                    case = Case(ctx, d, i)
                    report.cases += 1
                    for cl in case_claims:
                        run(cl, ctx, case)
    except _Abort:
        report.partial = True
    report.elapsed = time.perf_counter() - start
    return report


class _Abort(Exception):
    pass


def upset_readings(lattices: Iterable[Lattice]) -> dict[str, dict[str, int]]:
    """Tally the up-set formula for annihilators under each reading.

    Readings combine ``common`` (common upper bounds) or ``union`` (union of
    principal filters) with comparing whole annihilators (``literal``) or
    only their parts outside the kernel ideal.
    """
    modes = [(m, k) for m in ("common", "union") for k in (False, True)]
    tally = {f"{m}/{'outside-kernel' if k else 'literal'}": {"checked": 0, "failures": 0} for m, k in modes}
    for l in lattices:
        ctx = LatticeContext(l, congruence_limit=0)
        for i in ctx.nontrivial:
            for d in ctx.derivations:
                c = Case(ctx, d, i)
                if not c.atoms.is_atomic:
                    continue
                for a in c.atoms.gamma:
                    for m, k in modes:
                        t = tally[f"{m}/{'outside-kernel' if k else 'literal'}"]
                        t["checked"] += 1
                        t["failures"] += not _upset_formula_holds(c, a, m, k)
    return tally


def verify(max_size: int = 7, claims: Iterable[str] | None = None, **kwargs) -> SuiteReport:
    """Run the suite over every distributive lattice with at most ``max_size`` elements."""
    from .core import enumerate_distributive_lattices

    report = run_suite(enumerate_distributive_lattices(max_size), claims, **kwargs)
    report.upset_readings = upset_readings(enumerate_distributive_lattices(max_size))
    return report

