"""Smoke tests for the python bindings."""

import pytest

import jantzen_kit as jk


@pytest.fixture(scope="module")
def a2():
    return jk.Session("A2", 3)


def test_session_basics(a2):
    assert a2.rank == 2
    assert a2.p == 3
    assert a2.coxeter_number == 3
    assert sorted(a2.positive_roots()) == [[0, 1], [1, 0], [1, 1]]
    gens = a2.simple_generators()
    assert gens[0] == ([1, 1], 1)
    assert gens[1] == ([1, 0], 0)


def test_session_validation():
    with pytest.raises(ValueError):
        jk.Session("D3", 7)
    with pytest.raises(ValueError):
        jk.Session("A2", 4)


def test_words_and_lengths(a2):
    assert a2.length([]) == 0
    assert a2.length([0, 1]) == 2
    assert a2.is_min_rep([0])
    assert not a2.is_min_rep([1])
    assert a2.reduced_word([0, 1, 1]) == [0]
    assert a2.p_dot([0], [0, 0]) == [1, 1]


def test_jsf_routes_agree(a2):
    classical = a2.jsf_classical([1, 1])
    assert classical == [{"weight": [0, 0], "coeff": 1}]

    direct = a2.jsf_direct([0])
    recursive = a2.jsf_recursive([0])
    assert direct == recursive
    assert direct == [{"word": [], "weight": [0, 0], "coeff": 1}]

    combined = a2.jsf([1, 1])
    assert combined["verdict"] == "AGREE"
    assert combined["character"] == classical


def test_andersen_pairings(a2):
    assert a2.asf_pair_regular([], [0]) == 1
    assert a2.asf_pair_regular([], []) == 0
    assert a2.asf_pair_singular([0, 0], [1, 1]) == 1


def test_bounds(a2):
    report = a2.bounds([0])
    assert report["length_bound_sum"] == 1
    assert report["length_bound_exp"] == 1
    assert report["per_step"][0]["running"] == 1


def test_verify_small(a2):
    report = a2.verify(max_length=3, seed=7)
    assert report["all_pass"] is True
    assert all(s["failures"] == 0 for s in report["suites"])


def test_example_an(a2):
    report = a2.example_an()
    assert report["pass"] is True
    assert [row["i"] for row in report["rows"]] == [1, 2]


def test_nu_p():
    assert jk.nu_p(3, 18) == 2
    with pytest.raises(ValueError):
        jk.nu_p(3, 0)
