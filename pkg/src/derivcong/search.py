"""Exploratory search around the minimality of the identity annihilator congruence.

For every lattice, nontrivial ideal ``I`` and derivation ``d`` the search
asks whether ``theta_I^id`` lies below each member of several congruence
families, and which simple conditions on ``I`` predict that ``theta_I^id``
is the least congruence with a Boolean quotient.  Nothing here is a proof;
the output is a tally of what holds on the enumerated corpus.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable

from .boolean import is_boolean_algebra
from .congruences import Congruence, quotient
from .core import ElementSet, Lattice, enumerate_distributive_lattices
from .theorems import Case, LatticeContext

__all__ = ["FAMILIES", "SearchFindings", "open_question_search", "search_lattices"]

# identity theta is tested against each family as a lower bound
FAMILIES = {
    "i": "theta_I^d over all derivations d",
    "ii": "congruences having ker_I d as a class",
    "iii": "theta_J^d with J = ker_I d' for some derivation d'",
    "iv": "theta_J^d with J = (a)_I^d",
    "v": "congruences having I as a class",
    "vi": "congruences with Boolean quotient, when atom sets split into complementary pairs",
}

CONDITIONS = ("i_prime", "i_bottom", "atom_partition")


@dataclass
class SearchFindings:
    records: list[dict] = field(default_factory=list)
    tallies: dict[str, dict[str, int]] = field(default_factory=dict)
    confusion: dict[str, dict[str, int]] = field(default_factory=dict)
    partial: bool = False
    lattices: int = 0

    @property
    def counterexamples(self) -> int:
        """Counterexamples to families (i)-(v); (vi) is tallied but reported apart."""
        return sum(self.tallies[k]["counterexamples"] for k in FAMILIES if k != "vi")

    def summary(self) -> dict:
        return {"kind": "summary", "lattices": self.lattices, "partial": self.partial,
                "families": {k: {"description": FAMILIES[k], **self.tallies[k]} for k in FAMILIES},
                "conditions": self.confusion, "counterexamples": self.counterexamples}


def _partition_condition(c: Case) -> bool:
    rep = c.atoms
    if not rep.is_atomic:
        return False
    A = [s.mask for s in rep.atom_sets]
    full = rep.atoms.mask
    return all(any(A[x] & A[y] == 0 and A[x] | A[y] == full for y in range(c.n)) for x in range(c.n))


def search_lattices(lattices: Iterable[Lattice], budget: float | None = None,
                    congruence_limit: int = 8) -> SearchFindings:
    out = SearchFindings()
    out.tallies = {k: {"cases": 0, "counterexamples": 0} for k in FAMILIES}
    out.confusion = {k: {"tp": 0, "fp": 0, "fn": 0, "tn": 0} for k in CONDITIONS}
    start = time.perf_counter()

    def tally(key: str, ok: bool) -> None:
        out.tallies[key]["cases"] += 1
        out.tallies[key]["counterexamples"] += not ok

    for l in lattices:
        if budget is not None and time.perf_counter() - start > budget:
            out.partial = True
            break
        out.lattices += 1
        ctx = LatticeContext(l, congruence_limit)
        congs = ctx.congruences
        boolean_congs = None
        if congs is not None:
            boolean_congs = [th for th in congs if is_boolean_algebra(quotient(l, th).quotient)]
        for i in ctx.nontrivial:
            base = ctx.theta(ctx.identity, i)
            thetas = sorted({ctx.theta(d, i).blocks for d in ctx.derivations})
            rec: dict = {"kind": "lattice_ideal", "lattice": l.name, "ideal": ctx.fmt(i),
                         "identity_theta": base.fmt(l),
                         "thetas": [Congruence(b).fmt(l) for b in thetas]}
            failures: dict[str, list[str]] = {k: [] for k in FAMILIES}
            for d in ctx.derivations:
                case = Case(ctx, d, i)
                tag = d.describe(l)
                if not base <= case.theta:
                    failures["i"].append(tag)
                tally("i", base <= case.theta)
                if congs is not None:
                    ker = ElementSet(case.ker, l.n)
                    ok = all(base <= th for th in congs if th.has_class(ker))
                    tally("ii", ok)
                    if not ok:
                        failures["ii"].append(tag)
                for d1 in ctx.derivations:
                    ok = base <= ctx.theta(d, ctx.ker(d1, i))
                    tally("iii", ok)
                    if not ok:
                        failures["iii"].append(f"{tag} via {d1.describe(l)}")
                for a in l.elements:
                    ok = base <= ctx.theta(d, case.ann[a])
                    tally("iv", ok)
                    if not ok:
                        failures["iv"].append(f"{tag} at {l.labels[a]}")
                if boolean_congs is not None and _partition_condition(case):
                    ok = all(base <= th for th in boolean_congs)
                    tally("vi", ok)
                    if not ok:
                        failures["vi"].append(tag)
            if congs is not None:
                iset = ElementSet(i, l.n)
                ok = all(base <= th for th in congs if th.has_class(iset))
                tally("v", ok)
                if not ok:
                    failures["v"].append("id")
            rec["family_failures"] = {k: v for k, v in failures.items() if v}

            if boolean_congs is not None:
                target = all(base <= th for th in boolean_congs)
                id_case = Case(ctx, ctx.identity, i)
                conds = {"i_prime": i in ctx.prime_set,
                         "i_bottom": l.bottom is not None and i == 1 << l.bottom,
                         "atom_partition": _partition_condition(id_case)}
                rec["identity_least_boolean"] = target
                rec["conditions"] = conds
                for k, v in conds.items():
                    cell = ("t" if v == target else "f") + ("p" if v else "n")
                    out.confusion[k][cell] += 1
            out.records.append(rec)
    return out


def open_question_search(max_size: int, budget: float | None = None) -> SearchFindings:
    return search_lattices(enumerate_distributive_lattices(max_size), budget)
