from conftest import corpus
from derivcong.search import FAMILIES, open_question_search, search_lattices


def test_empty_corpus():
    found = search_lattices([])
    assert found.records == [] and found.lattices == 0
    assert found.counterexamples == 0


def test_identity_minimal_among_own_thetas():
    found = open_question_search(7)
    t = found.tallies
    assert t["i"]["cases"] > 0 and t["i"]["counterexamples"] == 0
    assert t["iii"]["counterexamples"] == 0
    assert t["iv"]["counterexamples"] == 0


def test_families_with_identity_relation_are_not_bounded_below():
    # the identity relation has every singleton ideal as a class
    found = open_question_search(5)
    assert found.tallies["ii"]["counterexamples"] > 0
    assert found.tallies["v"]["counterexamples"] > 0


def test_partition_condition_tallied_separately():
    found = open_question_search(6)
    assert set(found.tallies) == set(FAMILIES)
    assert found.tallies["vi"]["cases"] > 0
    assert found.counterexamples == sum(found.tallies[k]["counterexamples"] for k in FAMILIES if k != "vi")


def test_records_are_deterministic():
    a = search_lattices(corpus(5)).records
    b = search_lattices(corpus(5)).records
    assert a == b


def test_budget_partial():
    found = search_lattices(corpus(7), budget=0.0)
    assert found.partial and found.lattices == 0


def test_confusion_counts_cover_each_pair():
    found = open_question_search(6)
    pairs = sum(1 for r in found.records if "identity_least_boolean" in r)
    for cells in found.confusion.values():
        assert sum(cells.values()) == pairs
