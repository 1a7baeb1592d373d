"""Lattice files and Hasse-diagram output.

A lattice file is a YAML mapping::

    name: diamond
    elements: [bot, a, b, top]
    covers:
      - [bot, a]
      - [bot, b]
      - [a, top]
      - [b, top]
    notes: optional free text

The order is the reflexive-transitive closure of ``covers``.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

import yaml

from .congruences import Congruence
from .core import ElementSet, Lattice, sublattice_facts, validate

__all__ = [
    "LatticeFileError",
    "NotALatticeError",
    "LatticeDocument",
    "parse_lattice",
    "load_lattice",
    "load_fixture",
    "fixture_names",
    "dumps_lattice",
    "to_dot",
]


class LatticeFileError(ValueError):
    """Unreadable or malformed lattice file, or an unknown element label."""


class NotALatticeError(ValueError):
    def __init__(self, violations: list[str]):
        super().__init__(violations[0])
        self.violations = violations


class LatticeDocument:
    def __init__(self, lattice: Lattice, notes: str | None = None):
        self.lattice = lattice
        self.notes = notes


def parse_lattice(text: str, allow_nondistributive: bool = False,
                  source: str = "<string>") -> LatticeDocument:
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise LatticeFileError(f"{source}: not valid YAML: {e}") from e
    if not isinstance(doc, dict) or "elements" not in doc:
        raise LatticeFileError(f"{source}: expected a mapping with an 'elements' list")
    elements = doc["elements"]
    covers = doc.get("covers") or []
    if not isinstance(elements, list) or not elements:
        raise LatticeFileError(f"{source}: 'elements' must be a non-empty list")
    elements = [str(e) for e in elements]
    pairs = []
    for c in covers:
        if not isinstance(c, (list, tuple)) or len(c) != 2:
            raise LatticeFileError(f"{source}: cover {c!r} is not a [lower, upper] pair")
        pairs.append((str(c[0]), str(c[1])))
    try:
        l = Lattice.from_covers(elements, pairs, name=doc.get("name") or Path(source).stem)
    except KeyError as e:
        raise LatticeFileError(f"{source}: {e.args[0]}") from e
    except ValueError as e:
        raise LatticeFileError(f"{source}: {e}") from e
    problems = validate(l, require_distributive=not allow_nondistributive)
    if problems:
        raise NotALatticeError(problems)
    return LatticeDocument(l, doc.get("notes"))


def load_lattice(path: str | Path, allow_nondistributive: bool = False) -> LatticeDocument:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as e:
        raise LatticeFileError(f"{path}: {e.strerror or e}") from e
    return parse_lattice(text, allow_nondistributive, source=str(p))


def fixture_names() -> list[str]:
    root = resources.files(__package__) / "fixtures"
    return sorted(f.name[:-4] for f in root.iterdir() if f.name.endswith(".lat"))


def load_fixture(name: str) -> LatticeDocument:
    """One of the bundled lattices (``diamond``, ``chain4``, ``square``)."""
    res = resources.files(__package__) / "fixtures" / f"{name}.lat"
    if not res.is_file():
        raise LatticeFileError(f"no bundled fixture {name!r}")
    return parse_lattice(res.read_text(), source=f"{name}.lat")


def dumps_lattice(l: Lattice, notes: str | None = None) -> str:
    facts = sublattice_facts(l)
    doc: dict = {}
    if l.name:
        doc["name"] = l.name
    doc["elements"] = list(l.labels)
    doc["covers"] = [[l.labels[x], l.labels[y]] for x, y in facts.covers]
    if notes:
        doc["notes"] = notes
    return yaml.safe_dump(doc, sort_keys=False, default_flow_style=None)


_PALETTE = ["#fde68a", "#c7d2fe", "#fbcfe8", "#bbf7d0", "#fed7aa", "#e9d5ff", "#a5f3fc", "#d9f99d"]


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(l: Lattice, congruence: Congruence | None = None, kernel: ElementSet | None = None,
           kernel_elements: ElementSet | None = None) -> str:
    """Hasse diagram drawn bottom-up.

    With a congruence, each class gets its own fill colour; the kernel ideal
    is drawn grey and the kernel elements blue so the quotient's bounds
    stand out.
    """
    lines = [f"digraph {_quote(l.name or 'L')} {{", "  rankdir=BT;", "  node [shape=circle, style=filled, fillcolor=white];"]
    fill: dict[int, str] = {}
    if congruence is not None:
        for k, cls in enumerate(congruence.classes):
            for x in cls:
                fill[x] = _PALETTE[k % len(_PALETTE)]
    for s, colour in ((kernel, "#d1d5db"), (kernel_elements, "#93c5fd")):
        if s is not None:
            for x in s:
                fill[x] = colour
    for x in l.elements:
        attrs = f"label={_quote(l.labels[x])}"
        if x in fill:
            attrs += f", fillcolor={_quote(fill[x])}"
        lines.append(f"  n{x} [{attrs}];")
    for x, y in sublattice_facts(l).covers:
        lines.append(f"  n{x} -> n{y} [arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"
