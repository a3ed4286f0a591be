import json

import pytest

import confalg


def test_generator_brackets():
    assert confalg.bracket("D", "P1") == "P1"
    assert confalg.bracket("P0", "C0") == "-2 D"
    assert confalg.bracket("J01", "P1") == "-P0"
    assert confalg.bracket("J10", "P1") == "P0"
    assert confalg.bracket("C2", "C3") == "0"
    assert confalg.jacobi_residual("P0", "C1", "D") == "0"
    with pytest.raises(ValueError):
        confalg.bracket("Q1", "P0")


def test_word_algebra():
    assert confalg.normal_form(["C0", "P0"]) == "2i D + P0 C0"
    assert confalg.normal_form(["M^2", "M^-2"]) == "1"
    assert confalg.commutator(["D"], ["M^-2"]) == "-2 M^-2"
    assert confalg.commutator(["P0"], ["M^2"]) == "0"


def test_solved_oracles():
    assert confalg.matrix_coefficients() == {
        "alpha": "1", "beta": "1", "gamma": "-1", "delta": "1", "zeta": "1"}
    assert confalg.ordering_constants()["dilatation"] == "1"
    photon = confalg.two_photon(1)
    assert photon["mass_squared"] == "4"
    assert photon["momentum"] == ["2", "0", "0", "0"]


def test_report_shape_and_determinism():
    report = confalg.run(["eq7", "eq10"])
    assert list(report) == ["version", "conventions", "parameters", "checks", "totals"]
    assert report["conventions"] == {
        "signature": "(+,-,-,-)", "epsilon_orientation": "eps_{0123} = +1", "hbar": 1}
    assert report["totals"] == {"pass": 5, "fail": 0, "error": 0}
    ids = [c["id"] for c in report["checks"]]
    assert ids == sorted(ids)
    first = confalg.verify(["identities"], format="markdown")
    assert first == confalg.verify(["identities"], format="markdown", jobs=2)
    assert "timestamp" in json.loads(confalg.verify(["eq7"], timestamp=True))


def test_catalog_and_usage_errors():
    checks = confalg.list_checks()
    assert len({c["id"] for c in checks}) == len(checks)
    assert len(confalg.list_checks(["jacobi"])) == 455
    with pytest.raises(confalg.UsageError):
        confalg.run("eq99")
    with pytest.raises(confalg.UsageError):
        confalg.run("eq7", particles=9)
