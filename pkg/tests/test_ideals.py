import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import corpus
from derivcong import (chain, enumerate_filters, enumerate_ideals, i_minimal_primes, is_filter,
                       is_ideal, is_prime_filter, is_prime_ideal, prime_ideals, principal_filter,
                       principal_ideal, up_set)
from oracles import all_ideals


def test_is_ideal_examples(chain4, diamond):
    assert is_ideal(chain4, chain4.element_set(["a"]))
    assert not is_ideal(diamond, diamond.element_set(["bot", "a", "b"]))
    for l in (chain4, diamond):
        assert is_ideal(l, l.full_set())
    assert not is_ideal(diamond, diamond.element_set([]))
    assert not is_ideal(diamond, diamond.element_set(["a"]))


def test_is_filter_examples(diamond):
    assert is_filter(diamond, diamond.element_set(["a", "top"]))
    assert not is_filter(diamond, diamond.element_set(["a", "b", "top"]))
    assert not is_filter(diamond, diamond.element_set([]))


def test_principal_and_up_sets(diamond, chain4):
    a = diamond.index("a")
    assert principal_ideal(diamond, a).labels(diamond) == ["bot", "a"]
    assert principal_ideal(chain4, chain4.index("d")).is_full()
    assert principal_filter(diamond, a).labels(diamond) == ["a", "top"]
    ab = [diamond.index("a"), diamond.index("b")]
    assert up_set(diamond, ab).labels(diamond) == ["top"]
    assert up_set(diamond, ab, mode="union").labels(diamond) == ["a", "b", "top"]
    assert up_set(diamond, []).is_full()
    with pytest.raises(ValueError):
        up_set(diamond, ab, mode="other")


def test_enumerate_ideals_examples(chain4, diamond):
    assert len(list(enumerate_ideals(chain4))) == 4
    assert {tuple(s.labels(diamond)) for s in enumerate_ideals(diamond)} == {
        ("bot",), ("bot", "a"), ("bot", "b"), ("bot", "a", "b", "top")}
    assert len(list(enumerate_ideals(chain(1)))) == 1


def test_enumerate_ideals_matches_oracle():
    for l in corpus(7):
        assert {frozenset(s) for s in enumerate_ideals(l)} == set(all_ideals(l)), l.name


def test_ideals_are_principal():
    for l in corpus(8):
        assert {s.mask for s in enumerate_ideals(l)} == set(l.down)


def test_filters_are_principal():
    for l in corpus(6):
        fs = list(enumerate_filters(l))
        assert {f.mask for f in fs} == set(l.up)
        assert all(is_filter(l, f) for f in fs)


def test_prime_examples(chain4, diamond):
    assert is_prime_ideal(chain4, chain4.element_set(["a", "b"]))
    assert not is_prime_ideal(diamond, diamond.element_set(["bot"]))
    for l in (chain4, diamond):
        assert not is_prime_ideal(l, l.full_set())
    with pytest.raises(ValueError):
        is_prime_ideal(diamond, diamond.element_set(["a"]))


def test_every_nontrivial_chain_ideal_is_prime():
    for k in range(2, 7):
        l = chain(k)
        assert len(prime_ideals(l)) == k - 1


def test_prime_ideal_complements_are_prime_filters():
    for l in corpus(7):
        for p in prime_ideals(l):
            assert is_prime_filter(l, ~p)


def test_minimal_primes_examples(chain4, diamond):
    assert [s.labels(chain4) for s in i_minimal_primes(chain4, chain4.element_set(["a"]))] == [["a"]]
    got = {tuple(s.labels(diamond)) for s in i_minimal_primes(diamond, diamond.element_set(["bot"]))}
    assert got == {("bot", "a"), ("bot", "b")}
    for l in corpus(6):
        for p in prime_ideals(l):
            assert i_minimal_primes(l, p) == [p]


def test_minimal_primes_of_full_carrier_is_empty(diamond):
    assert i_minimal_primes(diamond, diamond.full_set()) == []


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(corpus(7)), st.data())
def test_minimal_primes_intersect_to_base(l, data):
    ideals = [s for s in enumerate_ideals(l) if not s.is_full()]
    if not ideals:
        return
    base = data.draw(st.sampled_from(ideals))
    mins = i_minimal_primes(l, base)
    acc = l.full_set()
    for p in mins:
        assert base <= p and is_prime_ideal(l, p)
        acc = acc & p
    # every ideal of a finite distributive lattice is the meet of the primes above it
    assert acc == base
