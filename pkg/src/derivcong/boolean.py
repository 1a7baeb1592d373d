"""When is the quotient by the annihilator congruence a Boolean algebra?

Besides the decision itself this module builds the poset of annihilator
ideals, analyses its maximal members, and computes the relative atoms
(elements outside the kernel ideal whose strict down-set lies inside it).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .congruences import QuotientLattice, quotient, theta
from .core import ElementSet, Lattice, validate
from .derivations import Derivation, annihilators, kernel_elements, kernel_ideal
from .ideals import i_minimal_primes, is_ideal, is_prime_ideal

__all__ = [
    "TheoremViolation",
    "BooleanCheck",
    "BooleanVerdict",
    "Sigma",
    "SigmaReport",
    "AtomReport",
    "is_boolean_algebra",
    "quotient_boolean",
    "complement_class",
    "sigma_poset",
    "sigma_sets",
    "sigma_maximal_analysis",
    "atom_report",
    "two_element_criterion",
]


class TheoremViolation(AssertionError):
    """A result that should hold on validated input did not.

    Carries the claim name and a witness dictionary so that the failing
    case can be written out and replayed.
    """

    def __init__(self, claim: str, message: str, witness: dict | None = None):
        super().__init__(f"{claim}: {message}")
        self.claim = claim
        self.witness = witness or {}


@dataclass(frozen=True)
class BooleanCheck:
    is_boolean: bool
    complements: tuple[int, ...] | None = None
    failure: str | None = None

    def __bool__(self) -> bool:
        return self.is_boolean


def is_boolean_algebra(l: Lattice) -> BooleanCheck:
    """Bounded, distributive and complemented; complements are asserted unique."""
    if l.bottom is None or l.top is None:
        return BooleanCheck(False, failure="not bounded")
    if validate(l):
        return BooleanCheck(False, failure="not a distributive lattice")
    comp = []
    for x in l.elements:
        ys = [y for y in l.elements if l.meet(x, y) == l.bottom and l.join(x, y) == l.top]
        if not ys:
            return BooleanCheck(False, failure=f"{l.labels[x]} has no complement")
        assert len(ys) == 1, "complement not unique in a distributive lattice"
        comp.append(ys[0])
    return BooleanCheck(True, tuple(comp))


@dataclass(frozen=True)
class BooleanVerdict:
    is_boolean: bool
    # witness[x] is the first y (index order) with y in (x) and x v y a kernel element
    witness: tuple[int, ...] | None
    failure: int | None
    quotient: QuotientLattice
    kernel: ElementSet
    kernel_elements: ElementSet

    def __bool__(self) -> bool:
        return self.is_boolean


def _require_nontrivial(l: Lattice, i: ElementSet) -> None:
    if not is_ideal(l, i):
        raise ValueError(f"{l.fmt(i)} is not an ideal")
    if i.is_full():
        raise ValueError("the ideal must be proper (nontrivial)")


def quotient_boolean(l: Lattice, d: Derivation, i: ElementSet) -> BooleanVerdict:
    """Decide Booleanness of the quotient in two independent ways.

    One path checks the quotient lattice directly, the other searches for
    each ``x`` a ``y`` annihilating ``x`` with ``x v y`` a kernel element.
    Disagreement raises :class:`TheoremViolation`.
    """
    _require_nontrivial(l, i)
    ann = annihilators(l, d, i)
    ker = kernel_ideal(l, d, i)
    kel = kernel_elements(l, d, i)
    q = quotient(l, theta(l, d, i))
    direct = is_boolean_algebra(q.quotient)

    witness, failure = [], None
    for x in l.elements:
        ok = [y for y in ann[x] if l.join(x, y) in kel]
        if not ok:
            failure = x
            break
        if len({q.projection[y] for y in ok}) != 1:
            raise TheoremViolation("complement_unique", f"{l.labels[x]} has witnesses in several classes",
                                   {"x": l.labels[x], "witnesses": [l.labels[y] for y in ok]})
        witness.append(ok[0])
    searched = failure is None
    if searched != direct.is_boolean:
        raise TheoremViolation(
            "boolean_witness",
            f"direct check says {direct.is_boolean}, witness search says {searched}",
            {"lattice": l.name, "derivation": d.describe(l), "ideal": l.fmt(i)})
    return BooleanVerdict(searched, tuple(witness) if searched else None, failure, q, ker, kel)


def complement_class(l: Lattice, d: Derivation, i: ElementSet, x: int) -> ElementSet | None:
    """Class complementing the class of ``x``, or None if the quotient is not Boolean."""
    v = quotient_boolean(l, d, i)
    if not v.is_boolean:
        return None
    return v.quotient.congruence.cls(v.witness[x])


@dataclass(frozen=True)
class Sigma:
    """Distinct annihilator ideals ordered by reverse inclusion.

    ``sets[k]`` is the annihilator shared by quotient class ``k``, so the
    isomorphism with the quotient is the identity on indices.
    """

    sets: tuple[ElementSet, ...]
    lattice: Lattice
    quotient: QuotientLattice


def sigma_sets(l: Lattice, d: Derivation, i: ElementSet, exclude_kernel: bool = True) -> list[ElementSet]:
    """Distinct annihilators, optionally only of elements outside the kernel ideal."""
    ker = kernel_ideal(l, d, i)
    out: list[ElementSet] = []
    for x, s in enumerate(annihilators(l, d, i)):
        if exclude_kernel and x in ker:
            continue
        if s not in out:
            out.append(s)
    return out


def sigma_poset(l: Lattice, d: Derivation, i: ElementSet) -> Sigma:
    """Lattice of annihilators (over all elements) and its isomorphism with the quotient."""
    ann = annihilators(l, d, i)
    c = theta(l, d, i)
    q = quotient(l, c)
    sets = tuple(ann[cl.min()] for cl in c.classes)
    k = len(sets)
    leq = [[sets[q_] <= sets[p] for q_ in range(k)] for p in range(k)]
    sig = Lattice(leq, labels=[l.fmt(s) for s in sets], name="Sigma")
    report = validate(sig)
    if report:
        raise TheoremViolation("sigma_isomorphism", f"annihilator poset is not a lattice: {report[0]}")
    index = {s: p for p, s in enumerate(sets)}
    for x in l.elements:
        for y in l.elements:
            px, py = index[ann[x]], index[ann[y]]
            if sig.join(px, py) != index[ann[l.join(x, y)]] or sig.meet(px, py) != index[ann[l.meet(x, y)]]:
                raise TheoremViolation("sigma_isomorphism", "x -> (x) is not a homomorphism",
                                       {"x": l.labels[x], "y": l.labels[y]})
    qa = q.quotient
    for p in range(k):
        for r in range(k):
            if qa.meet(p, r) != sig.meet(p, r) or qa.join(p, r) != sig.join(p, r):
                raise TheoremViolation("sigma_isomorphism", "quotient and annihilator lattice differ")
    return Sigma(sets, sig, q)


@dataclass
class SigmaReport:
    members: list[ElementSet]
    maximal: list[ElementSet]
    primes: list[ElementSet]
    minimal_primes: list[ElementSet]
    vacuous: bool
    violations: list[str] = field(default_factory=list)


def sigma_maximal_analysis(l: Lattice, d: Derivation, i: ElementSet) -> SigmaReport:
    """Maximal annihilators of non-kernel elements versus kernel-minimal primes."""
    ker = kernel_ideal(l, d, i)
    members = sigma_sets(l, d, i, exclude_kernel=True)
    if ker.is_full():
        return SigmaReport([], [], [], [], vacuous=True)
    maximal = [s for s in members if not any(s < t for t in members)]
    primes = [s for s in members if is_prime_ideal(l, s)]
    minimal = i_minimal_primes(l, ker)
    rep = SigmaReport(members, maximal, primes, minimal, vacuous=False)
    for s in members:
        flags = (s in maximal, s in primes, s in minimal)
        if len(set(flags)) != 1:
            rep.violations.append(f"{l.fmt(s)}: maximal={flags[0]} prime={flags[1]} minimal prime={flags[2]}")
    meet = l.full_set()
    for s in maximal:
        meet = meet & s
    if meet != ker:
        rep.violations.append(f"intersection of maximal annihilators {l.fmt(meet)} != kernel {l.fmt(ker)}")
    if set(minimal) - set(members):
        rep.violations.append("a kernel-minimal prime is not an annihilator")
    if quotient_boolean(l, d, i).is_boolean:
        ann = annihilators(l, d, i)
        for x in l.elements:
            fam = {ann[z] for z in ann[x]}
            # maximum under reverse inclusion = a member inside all others
            if not any(all(s <= t for t in fam) for s in fam):
                rep.violations.append(f"{{(z) : z in ({l.labels[x]})}} has no maximum")
    return rep


@dataclass(frozen=True)
class AtomReport:
    atoms: ElementSet
    atom_sets: tuple[ElementSet, ...]
    is_atomic: bool
    is_atomic_literal: bool
    gamma: ElementSet
    kernel: ElementSet


def atom_report(l: Lattice, d: Derivation, i: ElementSet) -> AtomReport:
    """Atoms relative to the kernel ideal and the atomicity flags.

    ``is_atomic`` asks that every element outside the kernel ideal lie
    above an atom; ``is_atomic_literal`` asks it of every element, which
    cannot hold because members of the kernel lie above no atom.
    """
    ker = kernel_ideal(l, d, i)
    atoms = ElementSet(sum(1 << a for a in l.elements
                           if a not in ker and (l.down[a] & ~(1 << a)) & ~ker.mask == 0), l.n)
    sets = tuple(ElementSet(atoms.mask & l.down[a], l.n) for a in l.elements)
    atomic = all(sets[a] for a in l.elements if a not in ker)
    literal = all(sets[a] for a in l.elements)
    ann = annihilators(l, d, i)
    gamma = 0
    for a in l.elements:
        if a not in ker:
            gamma |= ann[a].mask
    return AtomReport(atoms, sets, atomic, literal, ElementSet(gamma & ~ker.mask, l.n), ker)


def two_element_criterion(l: Lattice, d: Derivation, i: ElementSet) -> tuple[bool, bool]:
    """(quotient is the two-element algebra, kernel ideal is prime), checked to agree."""
    _require_nontrivial(l, i)
    q = quotient(l, theta(l, d, i)).quotient
    is_two = q.n == 2 and bool(is_boolean_algebra(q))
    ker = kernel_ideal(l, d, i)
    prime = is_prime_ideal(l, ker)
    if is_two != prime:
        raise TheoremViolation("two_element", f"quotient is 2: {is_two}, kernel prime: {prime}",
                               {"lattice": l.name, "derivation": d.describe(l), "ideal": l.fmt(i)})
    return is_two, prime
