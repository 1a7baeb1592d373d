import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import boolean_cube, corpus, m3, n5
from derivcong import (ElementSet, Lattice, canonical_form, chain, downset_lattice,
                       enumerate_distributive_lattices, is_isomorphic, sublattice_facts, validate)
from oracles import count_distributive_lattices, iso_key


def test_diamond_is_distributive(diamond):
    assert validate(diamond) == []
    assert diamond.is_distributive


@pytest.mark.parametrize("make", [m3, n5])
def test_non_distributive_lattices(make):
    l = make()
    assert validate(l, require_distributive=False) == []
    report = validate(l)
    assert len(report) == 1 and report[0].startswith("distributivity fails")


def test_validate_reports_missing_bounds():
    # two minimal elements and no meet
    l = Lattice.from_covers(["x", "y", "t"], [("x", "t"), ("y", "t")])
    assert any("greatest lower bound" in r for r in validate(l))


def test_validate_reports_cycle():
    l = Lattice.from_covers(["x", "y"], [("x", "y"), ("y", "x")])
    assert any("antisymmetry" in r for r in validate(l))


def test_from_covers_unknown_label():
    with pytest.raises(KeyError):
        Lattice.from_covers(["a"], [("a", "b")])


def test_chain_examples():
    one = chain(1)
    assert one.bottom == one.top == 0
    c4 = chain(4)
    assert c4.labels == ("a", "b", "c", "d")
    assert [c4.le(x, x + 1) for x in range(3)] == [True] * 3
    two = chain(2)
    assert two.n == 2 and two.bottom == 0 and two.top == 1
    with pytest.raises(ValueError):
        chain(0)


def test_downset_lattice_examples():
    square = downset_lattice(np.eye(2, dtype=bool))
    assert square.n == 4 and is_isomorphic(square, Lattice.from_covers(
        ["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]))
    three = np.triu(np.ones((3, 3), dtype=bool))
    assert is_isomorphic(downset_lattice(three), chain(4))
    # p < q, p < r: downsets 0, p, pq, pr, pqr
    p = np.array([[1, 1, 1], [0, 1, 0], [0, 0, 1]], dtype=bool)
    l = downset_lattice(p, labels=["p", "q", "r"])
    assert sorted(l.labels) == sorted(["0", "p", "pq", "pr", "pqr"])
    assert validate(l) == []
    assert l.join(l.index("pq"), l.index("pr")) == l.index("pqr")
    assert l.meet(l.index("pq"), l.index("pr")) == l.index("p")


@pytest.mark.parametrize("k", [1, 2, 3])
def test_antichain_gives_boolean_algebra(k):
    assert boolean_cube(k).n == 2 ** k


def test_downset_lattice_rejects_non_poset():
    with pytest.raises(ValueError):
        downset_lattice(np.array([[1, 1], [1, 1]], dtype=bool))


def test_enumeration_small_counts():
    assert len(list(enumerate_distributive_lattices(1))) == 1
    assert [l.n for l in enumerate_distributive_lattices(2)] == [1, 2]
    assert list(enumerate_distributive_lattices(0)) == []


def test_enumeration_matches_known_sequence():
    # distributive lattices per size n = 1..9
    per_size = [1, 1, 1, 2, 3, 5, 8, 15, 26]
    sizes = [l.n for l in enumerate_distributive_lattices(9)]
    assert [sizes.count(n) for n in range(1, 10)] == per_size


def test_enumeration_matches_brute_force_oracle():
    assert len(list(enumerate_distributive_lattices(5))) == count_distributive_lattices(5)


def test_enumeration_is_isomorph_free():
    lats = corpus(7)
    assert len({(l.n, canonical_form(l.leq)) for l in lats}) == len(lats)
    small = [l for l in lats if l.n <= 6]
    keys = [(l.n, iso_key(l.leq.tolist())) for l in small]
    assert len(set(keys)) == len(keys)


def test_enumerated_lattices_validate():
    for l in corpus(8):
        assert validate(l) == [], l.name


def test_sublattice_facts_examples(chain4, diamond):
    f = sublattice_facts(chain4)
    assert f.is_chain
    assert [(chain4.labels[x], chain4.labels[y]) for x, y in f.covers] == [("a", "b"), ("b", "c"), ("c", "d")]
    assert set(sublattice_facts(diamond).atoms.labels(diamond)) == {"a", "b"}
    assert set(sublattice_facts(diamond).coatoms.labels(diamond)) == {"a", "b"}
    assert sublattice_facts(chain(1)).covers == ()


def test_covers_are_transitive_reduction():
    for l in corpus(6):
        covers = set(sublattice_facts(l).covers)
        for x, y in itertools.product(l.elements, repeat=2):
            strict = l.lt(x, y)
            between = any(l.lt(x, z) and l.lt(z, y) for z in l.elements)
            assert ((x, y) in covers) == (strict and not between)


def test_element_set_operations():
    a = ElementSet.of(5, [0, 2])
    b = ElementSet.of(5, [2, 3])
    assert list(a & b) == [2]
    assert list(a | b) == [0, 2, 3]
    assert list(a - b) == [0]
    assert list(a ^ b) == [0, 3]
    assert list(~a) == [1, 3, 4]
    assert ElementSet.of(5, [2]) < a and not a <= b
    assert ElementSet.full(5).is_full() and not ElementSet.empty(5)
    assert a.min() == 0 and len(a) == 2 and 2 in a and 1 not in a
    with pytest.raises(ValueError):
        a & ElementSet.of(4, [0])


lattices = st.sampled_from(corpus(7))


@settings(max_examples=60, deadline=None)
@given(lattices, st.data())
def test_lattice_laws(l, data):
    x, y, z = (data.draw(st.integers(0, l.n - 1)) for _ in range(3))
    m, j = l.meet, l.join
    assert m(x, y) == m(y, x) and j(x, y) == j(y, x)
    assert m(x, m(y, z)) == m(m(x, y), z) and j(x, j(y, z)) == j(j(x, y), z)
    assert m(x, j(x, y)) == x and j(x, m(x, y)) == x
    assert m(x, j(y, z)) == j(m(x, y), m(x, z))
    assert l.le(x, y) == (m(x, y) == x)


@settings(max_examples=40, deadline=None)
@given(lattices, st.randoms(use_true_random=False))
def test_canonical_form_is_invariant(l, rnd):
    perm = list(range(l.n))
    rnd.shuffle(perm)
    shuffled = l.permuted(perm)
    assert validate(shuffled) == []
    assert canonical_form(shuffled.leq) == canonical_form(l.leq)
