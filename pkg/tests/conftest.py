from __future__ import annotations

import functools
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from derivcong import Lattice, chain, enumerate_distributive_lattices, load_fixture  # noqa: E402


@functools.lru_cache(maxsize=None)
def corpus(max_n: int = 7) -> tuple[Lattice, ...]:
    return tuple(enumerate_distributive_lattices(max_n))


def m3() -> Lattice:
    return Lattice.from_covers(["0", "x", "y", "z", "1"],
                               [("0", "x"), ("0", "y"), ("0", "z"), ("x", "1"), ("y", "1"), ("z", "1")], "M3")


def n5() -> Lattice:
    return Lattice.from_covers(["0", "a", "b", "c", "1"],
                               [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")], "N5")


def boolean_cube(k: int) -> Lattice:
    from derivcong import downset_lattice
    return downset_lattice(np.eye(k, dtype=bool), name=f"2^{k}")


@pytest.fixture
def diamond() -> Lattice:
    return load_fixture("diamond").lattice


@pytest.fixture
def chain4() -> Lattice:
    return load_fixture("chain4").lattice


@pytest.fixture
def square() -> Lattice:
    return load_fixture("square").lattice


@pytest.fixture
def diamond_map():
    return {"bot": "bot", "b": "bot", "a": "a", "top": "a"}


@pytest.fixture
def chain3() -> Lattice:
    return chain(3)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
