"""Command-line front end.

Exit codes: 0 success, 1 a verified claim was violated, 2 a run stopped on
its time budget, 64 usage error (bad file, unknown label, bad flags),
65 input that is not a (distributive) lattice or a map that is not a
derivation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Sequence

from . import io
from .boolean import (atom_report, quotient_boolean, sigma_maximal_analysis,
                      two_element_criterion)
from .congruences import quotient, theta
from .core import ElementSet, Lattice
from .derivations import (Derivation, derivation_from_mapping, enumerate_derivations,
                          identity_derivation, is_derivation, kernel_elements, kernel_ideal,
                          lambda_derivation, annihilators)
from .ideals import enumerate_ideals, i_minimal_primes, is_ideal, is_prime_ideal, prime_ideals
from .search import open_question_search
from .theorems import CLAIMS, verify

EXIT_OK, EXIT_VIOLATION, EXIT_PARTIAL = 0, 1, 2
EXIT_USAGE, EXIT_DATA = 64, 65

MAX_SIZE_ENV = "DERIVCONG_MAX_SIZE"


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    path: str | None = None
    ideal: list[str] | None = None
    base: list[str] | None = None
    use_id: bool = False
    lambda_label: str | None = None
    mapping: str | None = None
    max_size: int = 7
    claims: list[str] | None = None
    budget: float | None = None
    fmt: str = "text"
    seed: int | None = None
    allow_nondistributive: bool = False
    action: str | None = None
    repro_dir: str | None = None
    fail_fast: bool = False
    extra: dict = field(default_factory=dict)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _labels(text: str) -> list[str]:
    return [s.strip() for s in text.split(",") if s.strip()]


def _default_max_size() -> int:
    raw = os.environ.get(MAX_SIZE_ENV)
    if raw is None:
        return 7
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{MAX_SIZE_ENV} must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=["text", "json", "dot"], default="text",
                        help="text report, line-delimited JSON records, or Graphviz DOT")
    common.add_argument("--seed", type=int, default=None,
                        help="recorded in machine-readable output; enumeration is deterministic")
    common.add_argument("--allow-nondistributive", action="store_true",
                        help="accept lattices that are not distributive")

    lat = argparse.ArgumentParser(add_help=False)
    lat.add_argument("path", help="lattice file (YAML with elements and covers)")

    deriv = argparse.ArgumentParser(add_help=False)
    g = deriv.add_mutually_exclusive_group()
    g.add_argument("--id", dest="use_id", action="store_true", help="identity derivation")
    g.add_argument("--lambda", dest="lambda_label", metavar="LABEL", help="the derivation x -> LABEL ^ x")
    g.add_argument("--map", dest="mapping", metavar="PAIRS", help='explicit map such as "a:a,b:a"')

    ideal = argparse.ArgumentParser(add_help=False)
    ideal.add_argument("--ideal", type=_labels, metavar="LABELS", help="comma-separated ideal members")

    p = _Parser(prog="derivcong", description="Annihilator congruences of derivations on finite distributive lattices.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("dot", parents=[common, lat, deriv, ideal], help="Hasse diagram in DOT")

    s = sub.add_parser("ideals", parents=[common, lat], help="ideals, primes, minimal primes")
    s.add_argument("action", choices=["list", "primes", "minimal-primes"])
    s.add_argument("--base", type=_labels, metavar="LABELS", help="base ideal for minimal-primes")

    s = sub.add_parser("derivations", parents=[common, lat, deriv, ideal], help="list or check derivations")
    s.add_argument("action", choices=["list", "check", "kernel"])

    sub.add_parser("theta", parents=[common, lat, deriv, ideal], help="classes of the annihilator congruence")
    sub.add_parser("analyze", parents=[common, lat, deriv, ideal], help="full report for one ideal and derivation")

    s = sub.add_parser("verify", parents=[common], help="run the claim suite over all small lattices")
    s.add_argument("--max-size", type=int, default=None)
    s.add_argument("--claims", type=_labels, default=None, help="comma-separated claim names")
    s.add_argument("--budget", type=float, default=None, help="wall-clock limit in seconds")
    s.add_argument("--repro-dir", default=None, help="write one JSON reproducer per violated claim")
    s.add_argument("--fail-fast", action="store_true", help="stop at the first violation")
    s.add_argument("--list", dest="list_claims", action="store_true", help="list claim names and exit")

    s = sub.add_parser("search-openq", parents=[common], help="tally minimality of the identity congruence")
    s.add_argument("--max-size", type=int, default=None)
    s.add_argument("--budget", type=float, default=None)
    return p


def _config(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=ns.command)
    for k in ("path", "ideal", "base", "use_id", "lambda_label", "mapping", "claims", "budget",
              "fmt", "seed", "allow_nondistributive", "action", "repro_dir", "fail_fast"):
        if hasattr(ns, k):
            setattr(cfg, k, getattr(ns, k))
    if getattr(ns, "max_size", None) is not None:
        cfg.max_size = ns.max_size
    elif ns.command in ("verify", "search-openq"):
        cfg.max_size = _default_max_size()
    cfg.extra["list_claims"] = getattr(ns, "list_claims", False)
    return cfg


class _Out:
    def __init__(self, cfg: RunConfig, stream):
        self.cfg, self.stream = cfg, stream

    def text(self, line: str = "") -> None:
        if self.cfg.fmt == "text":
            print(line, file=self.stream)

    def record(self, rec: dict) -> None:
        if self.cfg.fmt == "json":
            print(json.dumps(rec, sort_keys=True), file=self.stream)

    def dot(self, src: str) -> None:
        if self.cfg.fmt == "dot":
            self.stream.write(src)


def _load(cfg: RunConfig) -> io.LatticeDocument:
    try:
        return io.load_lattice(cfg.path, cfg.allow_nondistributive)
    except io.NotALatticeError as e:
        raise DataError(f"{cfg.path}: not a lattice: {e.violations[0]}") from e
    except io.LatticeFileError as e:
        raise UsageError(str(e)) from e


def _element_set(l: Lattice, labels: Sequence[str]) -> ElementSet:
    try:
        return l.element_set(labels)
    except KeyError as e:
        raise UsageError(str(e.args[0])) from e


def _ideal(l: Lattice, labels: Sequence[str] | None, required: bool = True,
           proper: bool = False) -> ElementSet | None:
    if labels is None:
        if required:
            raise UsageError("--ideal is required")
        return None
    s = _element_set(l, labels)
    if not is_ideal(l, s):
        raise UsageError(f"{l.fmt(s)} is not an ideal")
    if proper and s.is_full():
        raise UsageError("the ideal must be proper")
    return s


def _parse_map(l: Lattice, text: str) -> Derivation:
    pairs = {}
    for item in _labels(text):
        if ":" not in item:
            raise UsageError(f"map entry {item!r} is not of the form x:y")
        k, v = (t.strip() for t in item.split(":", 1))
        pairs[k] = v
    try:
        return derivation_from_mapping(l, pairs)
    except (KeyError, ValueError) as e:
        raise UsageError(str(e.args[0])) from e


def _derivation(l: Lattice, cfg: RunConfig, required: bool = True) -> Derivation | None:
    if cfg.use_id:
        return identity_derivation(l)
    if cfg.lambda_label is not None:
        return lambda_derivation(l, _element_set(l, [cfg.lambda_label]).min())
    if cfg.mapping is not None:
        d = _parse_map(l, cfg.mapping)
        check = is_derivation(l, d)
        if not check:
            raise DataError(f"map is not a derivation: {check.violation}")
        return d
    if required:
        raise UsageError("one of --id, --lambda or --map is required")
    return None


def _cmd_dot(cfg: RunConfig, out: _Out) -> int:
    l = _load(cfg).lattice
    d = _derivation(l, cfg, required=False)
    i = _ideal(l, cfg.ideal, required=False)
    if (d is None) != (i is None):
        raise UsageError("give both a derivation and --ideal, or neither")
    if d is None:
        src = io.to_dot(l)
    else:
        src = io.to_dot(l, theta(l, d, i), kernel_ideal(l, d, i), kernel_elements(l, d, i))
    # DOT is the natural output here unless JSON records were asked for
    if cfg.fmt == "json":
        out.record({"kind": "dot", "dot": src})
    else:
        out.stream.write(src)
    return EXIT_OK


def _cmd_ideals(cfg: RunConfig, out: _Out) -> int:
    l = _load(cfg).lattice
    if cfg.action == "list":
        sets = list(enumerate_ideals(l))
    elif cfg.action == "primes":
        sets = prime_ideals(l)
    else:
        base = _ideal(l, cfg.base) if cfg.base is not None else None
        if base is None:
            raise UsageError("minimal-primes needs --base")
        sets = i_minimal_primes(l, base)
    for s in sets:
        prime = not s.is_full() and is_prime_ideal(l, s)
        out.text(f"{l.fmt(s)}{'  prime' if prime else ''}")
        out.record({"kind": "ideal", "members": s.labels(l), "prime": prime})
    return EXIT_OK


def _cmd_derivations(cfg: RunConfig, out: _Out) -> int:
    l = _load(cfg).lattice
    if cfg.action == "list":
        for d in enumerate_derivations(l):
            out.text(f"{d.name or 'd'}  {d.describe(l)}")
            out.record({"kind": "derivation", "name": d.name, "map": d.describe(l)})
        return EXIT_OK
    if cfg.action == "check":
        if cfg.mapping is None:
            raise UsageError("check needs --map")
        d = _parse_map(l, cfg.mapping)
        check = is_derivation(l, d)
        out.text("derivation" if check else f"not a derivation: {check.violation}")
        out.record({"kind": "derivation_check", "map": d.describe(l), "ok": check.ok,
                    "violation": check.violation})
        return EXIT_OK if check else EXIT_DATA
    d = _derivation(l, cfg)
    i = _ideal(l, cfg.ideal)
    ker = kernel_ideal(l, d, i)
    out.text(f"kernel ideal: {l.fmt(ker)}")
    out.record({"kind": "kernel", "map": d.describe(l), "ideal": i.labels(l), "kernel": ker.labels(l)})
    return EXIT_OK


def _cmd_theta(cfg: RunConfig, out: _Out) -> int:
    l = _load(cfg).lattice
    d = _derivation(l, cfg)
    i = _ideal(l, cfg.ideal)
    c = theta(l, d, i)
    q = quotient(l, c)
    ker, kel = kernel_ideal(l, d, i), kernel_elements(l, d, i)
    top = q.quotient.top
    top_cls = c.classes[top] if top is not None else None
    out.text("classes: " + c.fmt(l))
    out.text(f"bottom class: {l.fmt(c.classes[q.quotient.bottom])}")
    out.text(f"top class: {l.fmt(top_cls) if top_cls is not None else '-'}")
    out.text(f"kernel ideal: {l.fmt(ker)}")
    out.text(f"kernel elements: {l.fmt(kel)}")
    out.text("quotient:")
    quot_dot = io.to_dot(q.quotient)
    out.text(quot_dot.rstrip())
    out.record({"kind": "theta", "lattice": l.name, "map": d.describe(l), "ideal": i.labels(l),
                "classes": [cl.labels(l) for cl in c.classes],
                "bottom_class": c.classes[q.quotient.bottom].labels(l),
                "top_class": top_cls.labels(l) if top_cls is not None else None,
                "kernel": ker.labels(l), "kernel_elements": kel.labels(l), "seed": cfg.seed})
    out.dot(quot_dot)
    return EXIT_OK


def _cmd_analyze(cfg: RunConfig, out: _Out) -> int:
    doc = _load(cfg)
    l = doc.lattice
    d = _derivation(l, cfg)
    i = _ideal(l, cfg.ideal, proper=True)
    verdict = quotient_boolean(l, d, i)
    two, ker_prime = two_element_criterion(l, d, i)
    ann = annihilators(l, d, i)
    atoms = atom_report(l, d, i)
    sig = sigma_maximal_analysis(l, d, i)
    c = verdict.quotient.congruence
    rec = {
        "kind": "analysis", "lattice": l.name, "map": d.describe(l), "ideal": i.labels(l),
        "ideal_prime": is_prime_ideal(l, i),
        "kernel": verdict.kernel.labels(l), "kernel_prime": ker_prime,
        "kernel_elements": verdict.kernel_elements.labels(l),
        "annihilators": {l.labels[x]: ann[x].labels(l) for x in l.elements},
        "classes": [cl.labels(l) for cl in c.classes],
        "boolean": verdict.is_boolean, "two_element": two,
        "complements": ({l.labels[x]: l.labels[y] for x, y in enumerate(verdict.witness)}
                        if verdict.witness else None),
        "kernel_atoms": atoms.atoms.labels(l), "atomic": atoms.is_atomic,
        "atomic_every_element": atoms.is_atomic_literal, "gamma": atoms.gamma.labels(l),
        "maximal_annihilators": [s.labels(l) for s in sig.maximal],
        "kernel_minimal_primes": [s.labels(l) for s in sig.minimal_primes],
        "notes": doc.notes, "seed": cfg.seed,
    }
    if cfg.fmt == "dot":
        out.dot(io.to_dot(l, c, verdict.kernel, verdict.kernel_elements))
        return EXIT_OK
    if doc.notes:
        out.text(f"note: {doc.notes}")
    out.text(f"lattice {l.name}, derivation {d.describe(l)}, ideal {l.fmt(i)}"
             f"{' (prime)' if rec['ideal_prime'] else ''}")
    out.text(f"kernel ideal: {l.fmt(verdict.kernel)}{' (prime)' if ker_prime else ''}")
    out.text(f"kernel elements: {l.fmt(verdict.kernel_elements)}")
    for x in l.elements:
        out.text(f"  ({l.labels[x]}) = {l.fmt(ann[x])}")
    out.text("classes: " + c.fmt(l))
    kind = "two-element Boolean algebra" if two else ("Boolean algebra" if verdict.is_boolean else "not Boolean")
    out.text(f"quotient: {len(c)} classes, {kind}")
    if verdict.witness:
        out.text("complement witnesses: " + ", ".join(
            f"{l.labels[x]}->{l.labels[y]}" for x, y in enumerate(verdict.witness)))
    out.text(f"kernel atoms: {l.fmt(atoms.atoms)}; atomic: {atoms.is_atomic} "
             f"(every element: {atoms.is_atomic_literal})")
    out.text(f"kernel-minimal primes: {', '.join(l.fmt(s) for s in sig.minimal_primes) or '-'}")
    out.record(rec)
    return EXIT_OK


def _cmd_verify(cfg: RunConfig, out: _Out) -> int:
    if cfg.extra.get("list_claims"):
        for cl in CLAIMS.values():
            out.text(f"{cl.name:32s} {cl.summary}")
            out.record({"kind": "claim", "claim": cl.name, "scope": cl.scope, "summary": cl.summary})
        return EXIT_OK
    try:
        report = verify(cfg.max_size, cfg.claims, budget=cfg.budget, fail_fast=cfg.fail_fast,
                        repro_dir=cfg.repro_dir)
    except KeyError as e:
        raise UsageError(str(e.args[0])) from e
    for r in report.records():
        w = r["witness"]
        line = f"{r['status'].upper():4s} {r['claim']:32s} checked={r['checked']} skipped={r['skipped']}"
        if w:
            line += f" violations={r['violations']}\n     first: {w['message']} [{w['lattice']}"
            if "ideal" in w:
                line += f", I={w['ideal']}, d={w['derivation']}"
            line += "]"
        out.text(line)
        out.record({"kind": "claim_result", **{k: v for k, v in r.items() if k != "witness"},
                    "witness": None if w is None else {k: v for k, v in w.items() if k != "lattice_text"}})
    summary = {"kind": "summary", "max_size": cfg.max_size, "lattices": report.lattices,
               "cases": report.cases, "failed": report.failed, "partial": report.partial,
               "upset_readings": report.upset_readings, "seed": cfg.seed}
    out.text(f"{report.lattices} lattices, {report.cases} cases, "
             f"{len(report.failed)} claims violated{' (partial run)' if report.partial else ''}")
    out.record(summary)
    if report.failed:
        return EXIT_VIOLATION
    return EXIT_PARTIAL if report.partial else EXIT_OK


def _cmd_search(cfg: RunConfig, out: _Out) -> int:
    found = open_question_search(cfg.max_size, cfg.budget)
    for rec in found.records:
        out.record(rec)
    summary = found.summary()
    summary["seed"] = cfg.seed
    out.record(summary)
    for k, t in summary["families"].items():
        out.text(f"({k}) {t['description']}: {t['cases']} cases, {t['counterexamples']} counterexamples")
    for k, m in summary["conditions"].items():
        out.text(f"condition {k}: " + " ".join(f"{c}={m[c]}" for c in ("tp", "fp", "fn", "tn")))
    out.text(f"{found.lattices} lattices{' (partial run)' if found.partial else ''}")
    if found.counterexamples:
        return EXIT_VIOLATION
    return EXIT_PARTIAL if found.partial else EXIT_OK


COMMANDS = {"dot": _cmd_dot, "ideals": _cmd_ideals, "derivations": _cmd_derivations,
            "theta": _cmd_theta, "analyze": _cmd_analyze, "verify": _cmd_verify,
            "search-openq": _cmd_search}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        cfg = _config(ns)
        return COMMANDS[cfg.command](cfg, _Out(cfg, stdout))
    except UsageError as e:
        print(f"derivcong: {e}", file=stderr)
        return EXIT_USAGE
    except DataError as e:
        print(f"derivcong: {e}", file=stderr)
        return EXIT_DATA


def main() -> None:
    sys.exit(run())
