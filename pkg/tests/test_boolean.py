import pytest

from conftest import boolean_cube, corpus
from derivcong import (ElementSet, atom_report, chain, complement_class, delta,
                       derivation_from_mapping, enumerate_derivations, enumerate_ideals,
                       identity_derivation, is_boolean_algebra, lambda_derivation, quotient_boolean,
                       sigma_maximal_analysis, sigma_poset, sigma_sets, theta, two_element_criterion)
from oracles import quotient_is_boolean, theta_classes


def nontrivial(l):
    return [i for i in enumerate_ideals(l) if not i.is_full()]


def test_boolean_algebra_examples(diamond):
    assert is_boolean_algebra(chain(2))
    check = is_boolean_algebra(diamond)
    assert check and [diamond.labels[y] for y in check.complements] == ["top", "b", "a", "bot"]
    assert not is_boolean_algebra(chain(3))
    assert "b has no complement" in is_boolean_algebra(chain(3)).failure


def test_quotient_boolean_examples(diamond, diamond_map):
    d = derivation_from_mapping(diamond, diamond_map)
    v = quotient_boolean(diamond, d, diamond.element_set(["bot"]))
    assert v and v.quotient.quotient.n == 2
    for k in range(2, 6):
        l = chain(k)
        for i in nontrivial(l):
            assert quotient_boolean(l, identity_derivation(l), i)
    for k in (1, 2, 3):
        l = boolean_cube(k)
        v = quotient_boolean(l, identity_derivation(l), ElementSet.of(l.n, [l.bottom]))
        assert v and v.quotient.congruence == delta(l.n)


def test_quotient_boolean_requires_proper_ideal(diamond):
    with pytest.raises(ValueError):
        quotient_boolean(diamond, identity_derivation(diamond), diamond.full_set())
    with pytest.raises(ValueError):
        quotient_boolean(diamond, identity_derivation(diamond), diamond.element_set(["a"]))


def test_quotient_boolean_matches_oracle():
    for l in corpus(7):
        for i in nontrivial(l):
            for d in enumerate_derivations(l):
                expect = quotient_is_boolean(l, theta_classes(l, d.table, frozenset(i)))
                assert quotient_boolean(l, d, i).is_boolean == expect


def test_complement_class_examples(diamond, diamond_map):
    d = derivation_from_mapping(diamond, diamond_map)
    bot = diamond.element_set(["bot"])
    assert complement_class(diamond, d, bot, diamond.index("a")).labels(diamond) == ["bot", "b"]
    assert complement_class(diamond, d, bot, diamond.index("b")).labels(diamond) == ["a", "top"]
    for l in corpus(6):
        for i in nontrivial(l):
            for d in enumerate_derivations(l):
                v = quotient_boolean(l, d, i)
                ker, kel = v.kernel, v.kernel_elements
                if kel:
                    assert complement_class(l, d, i, ker.min()) == kel
                    assert complement_class(l, d, i, kel.min()) == ker
                if v.quotient.quotient.n > 1:
                    for x in l.elements:
                        assert x not in complement_class(l, d, i, x)


def test_sigma_examples(diamond, chain4, diamond_map):
    d = derivation_from_mapping(diamond, diamond_map)
    assert sigma_poset(diamond, d, diamond.element_set(["bot"])).lattice.n == 2
    sig = sigma_poset(chain4, identity_derivation(chain4), chain4.element_set(["a"]))
    assert {tuple(s.labels(chain4)) for s in sig.sets} == {("a", "b", "c", "d"), ("a",)}
    lam = lambda_derivation(chain4, chain4.index("a"))
    assert sigma_poset(chain4, lam, chain4.element_set(["a"])).lattice.n == 1


def test_sigma_views_differ_by_kernel(chain4):
    idc = identity_derivation(chain4)
    i = chain4.element_set(["a"])
    assert len(sigma_sets(chain4, idc, i, exclude_kernel=False)) == 2
    assert [s.labels(chain4) for s in sigma_sets(chain4, idc, i)] == [["a"]]


def test_sigma_maximal_examples(diamond, chain4):
    rep = sigma_maximal_analysis(diamond, identity_derivation(diamond), diamond.element_set(["bot"]))
    assert {tuple(s.labels(diamond)) for s in rep.maximal} == {("bot", "b"), ("bot", "a")}
    assert not rep.violations and not rep.vacuous
    rep = sigma_maximal_analysis(chain4, identity_derivation(chain4), chain4.element_set(["a", "b"]))
    assert [s.labels(chain4) for s in rep.maximal] == [["a", "b"]]
    lam = lambda_derivation(chain4, chain4.index("a"))
    rep = sigma_maximal_analysis(chain4, lam, chain4.element_set(["a"]))
    assert rep.vacuous and rep.members == []


def test_atom_report_examples(diamond, chain4):
    rep = atom_report(diamond, identity_derivation(diamond), diamond.element_set(["bot"]))
    assert rep.atoms.labels(diamond) == ["a", "b"]
    assert rep.is_atomic and not rep.is_atomic_literal
    rep = atom_report(chain4, identity_derivation(chain4), chain4.element_set(["a"]))
    assert rep.kernel.labels(chain4) == ["a"]
    assert rep.atoms.labels(chain4) == ["b"]
    assert rep.atom_sets[chain4.index("c")].labels(chain4) == ["b"]
    cube = boolean_cube(3)
    rep = atom_report(cube, identity_derivation(cube), ElementSet.of(8, [cube.bottom]))
    assert sorted(rep.atoms.labels(cube)) == ["a", "b", "c"]


def test_kernel_atomic_always_on_finite_lattices():
    for l in corpus(7):
        for i in nontrivial(l):
            for d in enumerate_derivations(l):
                rep = atom_report(l, d, i)
                assert rep.is_atomic
                assert rep.is_atomic_literal == (len(rep.kernel) == 0)


def test_two_element_examples(diamond, chain4, diamond_map):
    d = derivation_from_mapping(diamond, diamond_map)
    assert two_element_criterion(diamond, d, diamond.element_set(["bot"])) == (True, True)
    assert two_element_criterion(chain4, identity_derivation(chain4), chain4.element_set(["a"])) == (True, True)
    sq = boolean_cube(2)
    assert two_element_criterion(sq, identity_derivation(sq), ElementSet.of(4, [sq.bottom])) == (False, False)


def test_theta_uniqueness_on_diamond(diamond, diamond_map):
    from derivcong import enumerate_congruences
    d = derivation_from_mapping(diamond, diamond_map)
    ker = diamond.element_set(["bot", "b"])
    having = [c for c in enumerate_congruences(diamond) if c.has_class(ker)]
    assert having == [theta(diamond, d, diamond.element_set(["bot"]))]
