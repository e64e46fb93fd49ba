"""Smoke tests for the python bindings."""

import betafam


def test_enumerate_and_membership():
    js = betafam.enumerate_j(5, 25)
    assert len(js) == 24
    assert 5 not in js
    assert betafam.is_order_p(5, 50, 29)
    assert not betafam.is_order_p(5, 25, 29)
    assert betafam.a_seq(5, 4) == 749


def test_bernoulli_and_series():
    assert betafam.bernoulli(4) == (-1, 30)
    assert betafam.delta_coeffs(2) == [0, 1, -24]
    e4 = betafam.eisenstein_coeffs(4, 2)
    assert e4 == [(1, 1), (240, 1), (2160, 1)]


def test_search_reproduces_f_25_29():
    res = betafam.search_solve(5, 25, 29, allow_nonfamily=True)
    assert res["status"] == "solved"
    assert res["basis_terms"] == [(50, 0, 1), (42, 24, 4), (41, 27, 3)]
    assert res["conditions"]["all_passed"]
    assert res["conditions"]["c4"]["order"] == 29


def test_theorem_form_rows():
    res = betafam.theorem_form(1250, 700)
    terms = [(d, e, c % 5) for d, e, c in res["basis_terms"]]
    assert terms == [(2500, 0, 1), (2300, 600, 3), (2275, 675, 1)]
    assert res["branch"] == "full-sum"
    assert res["conditions"]["all_passed"]


def test_divisibility_table():
    assert betafam.divisibility_table(25, 1, 9) == [3, 7, 9, 13, 15, 19, 21, 25, 27]


def test_eisenstein_representations():
    lvl1 = betafam.eisenstein_level1(13)
    assert sorted(lvl1) == [(0, 2, 8), (3, 0, 6)]  # 6 E4^3 + 8 E6^2
    lvl2 = betafam.eisenstein_level2(13)
    assert lvl2["delta_parity"] == 0
    assert lvl2["mu_ascending"] == [1, 4, 9, 12]


def test_section5_and_inapplicable_c4():
    res = betafam.section5_form(11, 1, 1, j=11)
    assert res["basis_terms"] == [(110, 0, 1)]
    assert res["conditions"]["c4"]["status"] == "certified"
    res7 = betafam.search_solve(7, 3, 1)
    assert res7["status"] == "solved"
    assert res7["conditions"]["c4"]["status"] == "inapplicable"
    assert res7["conditions"]["c4"]["order"] is None


def test_repro_item():
    ok, detail = betafam.reproduce("prop-3.2")
    assert ok, detail
