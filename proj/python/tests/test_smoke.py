import math

import pytest

import heckeforge as hf


def test_epoly_minus_one():
    e = hf.epoly(-1)
    assert [term[0] for term in e["terms"]] == [-1, 1]
    assert e["terms"][1][1] == "(-1+t)/(-1+q*t)"
    assert hf.epoly(-1, method="closed")["text"] == e["text"]


def test_epoly_round_trip():
    assert all(hf.epoly_text_roundtrip(n) for n in range(-4, 5))


def test_rogers_is_symmetric():
    exps = [term[0] for term in hf.rogers(3)["terms"]]
    assert exps == [-3, -1, 1, 3]


def test_poincare_and_enumeration():
    assert hf.affine_poincare("A1") == "2(1+t)/(1-t)"
    assert hf.affine_poincare("A2") == "3(1+t+t^2)/(1-2t+t^2)"
    counts = hf.enumerate_by_length("A1", 6)
    assert counts[0] == 2 and all(counts[l] == 4 for l in range(1, 7))


def test_looijenga():
    for level in range(1, 9):
        assert hf.looijenga_dim("A2", level) == hf.pi_orbits("A2", level)


def test_gamma():
    assert abs(hf.gamma(0.5) - math.sqrt(math.pi)) < 1e-13


def test_bessel_check_symmetric_real():
    r = hf.bessel_check("sym-real", 0.3, 0.5, 0.7, tol=1e-8)
    assert r["ok"] and r["rel_err"] < 1e-8
    assert set(r) >= {"lhs", "rhs", "rel_err", "nodes"}


def test_bessel_domain_error():
    with pytest.raises(ValueError):
        hf.bessel_check("sym-real", -0.7, 0.5, 0.7)


def test_wrong_formula_gap():
    integral, claimed, series = hf.wrong_formula(0.3, 0.5)
    assert abs(integral - series) < 1e-9
    assert abs(integral - claimed) > 0.01


def test_jackson_level_one():
    r = hf.jackson_sum(1, index=0)
    assert abs(r["value"] - r["closed_form"]) < 1e-9 * abs(r["closed_form"])
    assert r["shells_used"] > 0


@pytest.mark.parametrize("suite", ["nil-daha", "qtoda", "symmetrizer", "dunkl"])
def test_verify_suites(suite):
    r = hf.verify(suite, 4)
    assert r["ok"], r["failures"]
    assert r["checked"] > 0


def test_unknown_suite():
    with pytest.raises(ValueError):
        hf.verify("nope")
