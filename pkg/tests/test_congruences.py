import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import corpus
from derivcong import (Congruence, compare, delta, derivation_from_mapping, enumerate_congruences,
                       enumerate_derivations, enumerate_ideals, generated_congruence,
                       identity_derivation, is_congruence, kernel_congruence, lambda_derivation, nabla,
                       quotient, theta, validate)
from derivcong.core import is_isomorphic
from oracles import all_congruences, theta_classes


def classes(l, c):
    return sorted(tuple(cl.labels(l)) for cl in c.classes)


def test_trivial_congruences(chain4):
    assert is_congruence(chain4, delta(4))
    assert is_congruence(chain4, nabla(4))


def test_non_congruence_partition(chain4):
    a, b, c, d = range(4)
    assert not is_congruence(chain4, [[a, c], [b], [d]])


def test_malformed_partitions_raise(chain4):
    with pytest.raises(ValueError):
        is_congruence(chain4, [[0, 1], [1, 2, 3]])
    with pytest.raises(ValueError):
        is_congruence(chain4, [[0, 1]])
    with pytest.raises(ValueError):
        Congruence.from_classes(2, [[0, 5]])


def test_theta_examples(chain4, diamond, diamond_map):
    idc = identity_derivation(chain4)
    assert classes(chain4, theta(chain4, idc, chain4.element_set(["a"]))) == [("a",), ("b", "c", "d")]
    assert classes(chain4, theta(chain4, idc, chain4.element_set(["a", "b", "c"]))) == [("a", "b", "c"), ("d",)]
    d = derivation_from_mapping(diamond, diamond_map)
    th = theta(diamond, d, diamond.element_set(["bot"]))
    assert classes(diamond, th) == [("a", "top"), ("bot", "b")]
    assert quotient(diamond, th).quotient.n == 2


def test_theta_on_full_ideal_is_nabla():
    for l in corpus(6):
        for d in enumerate_derivations(l):
            assert theta(l, d, l.full_set()) == nabla(l.n)


def test_kernel_congruence_examples(diamond, diamond_map):
    assert kernel_congruence(diamond, identity_derivation(diamond)) == delta(4)
    d = derivation_from_mapping(diamond, diamond_map)
    assert classes(diamond, kernel_congruence(diamond, d)) == [("a", "top"), ("bot", "b")]
    assert kernel_congruence(diamond, lambda_derivation(diamond, diamond.bottom)) == nabla(4)


def test_quotient_examples(diamond, chain4):
    for l in (diamond, chain4):
        q = quotient(l, delta(l.n)).quotient
        assert is_isomorphic(q, l)
        assert quotient(l, nabla(l.n)).quotient.n == 1
    with pytest.raises(ValueError):
        quotient(chain4, Congruence.from_classes(4, [[0, 2], [1], [3]]))


def test_compare_examples(chain4):
    idc = identity_derivation(chain4)
    ti = theta(chain4, idc, chain4.element_set(["a"]))
    tj = theta(chain4, idc, chain4.element_set(["a", "b", "c"]))
    assert compare(ti, tj) == "incomparable"
    assert compare(ti, ti) == "equal"
    assert compare(delta(4), ti) == "finer"
    assert compare(nabla(4), ti) == "coarser"


def test_identity_theta_is_finer_everywhere():
    for l in corpus(7):
        for i in enumerate_ideals(l):
            base = theta(l, identity_derivation(l), i)
            for d in enumerate_derivations(l):
                assert compare(base, theta(l, d, i)) in ("equal", "finer")


def test_theta_matches_oracle():
    for l in corpus(6):
        for i in enumerate_ideals(l):
            for d in enumerate_derivations(l):
                got = frozenset(frozenset(c) for c in theta(l, d, i).classes)
                assert got == theta_classes(l, d.table, frozenset(i))


def test_enumerate_congruences_matches_set_partitions():
    for l in corpus(7):
        got = {frozenset(frozenset(c) for c in th.classes) for th in enumerate_congruences(l)}
        assert got == set(all_congruences(l)), l.name


def test_enumeration_bound(chain4):
    with pytest.raises(ValueError):
        enumerate_congruences(chain4, max_n=3)


def test_generated_congruence_in_chain(chain4):
    # collapsing a with c in a chain forces b into the same class
    c = generated_congruence(chain4, [(0, 2)])
    assert classes(chain4, c) == [("a", "b", "c"), ("d",)]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(corpus(6)), st.data())
def test_quotients_are_distributive_lattices(l, data):
    th = data.draw(st.sampled_from(enumerate_congruences(l)))
    q = quotient(l, th)
    assert validate(q.quotient) == []
    # projection is a homomorphism
    for x in l.elements:
        for y in l.elements:
            assert q.projection[l.meet(x, y)] == q.quotient.meet(q.projection[x], q.projection[y])
            assert q.projection[l.join(x, y)] == q.quotient.join(q.projection[x], q.projection[y])
    assert all(q.projection[s] == k for k, s in enumerate(q.section))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(corpus(7)), st.data())
def test_join_and_meet_of_congruences(l, data):
    congs = enumerate_congruences(l)
    a = data.draw(st.sampled_from(congs))
    b = data.draw(st.sampled_from(congs))
    j, m = a.join(b), a.meet(b)
    assert is_congruence(l, j) and is_congruence(l, m)
    assert a <= j and b <= j and m <= a and m <= b
    assert all(j <= c for c in congs if a <= c and b <= c)


def test_enlarging_the_ideal_gives_incomparable_thetas(chain4):
    idc = identity_derivation(chain4)
    ti = theta(chain4, idc, chain4.element_set(["a"]))
    tj = theta(chain4, idc, chain4.element_set(["a", "b", "c"]))
    a, b, c, d = range(4)
    assert tj.related(a, b) and not ti.related(a, b)
    # b and c both lie in J, so they share the annihilator L under J as well
    assert ti.related(b, c) and tj.related(b, c)
    assert ti.related(c, d) and not tj.related(c, d)
