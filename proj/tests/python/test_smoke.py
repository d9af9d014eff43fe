import math

import pytest

import bellsu11


def test_algebra_checks():
    r = bellsu11.verify_algebra()
    assert r["pairs_checked"] == 1296
    assert r["mismatches"] == 0
    assert r["closures_passed"] == r["closures"] == 20
    assert r["ok"]


def test_catalog():
    names = bellsu11.generator_names()
    for name in ("K", "J_a", "J_b", "J_BS", "K_prime", "K_OM"):
        assert name in names
    assert bellsu11.generator("K") == "1/2 A_14 - 1/2 A_23 + 1/2 B_14 - 1/2 B_23"
    assert len(bellsu11.catalog()) == len(names)
    with pytest.raises(ValueError):
        bellsu11.generator("K_bogus")


def test_run_ideal():
    r = bellsu11.run({"name": "ideal", "gamma": 0.2, "theta_a": 0.3, "theta_b": 0.1})
    assert r["conditioned"]["value"] == pytest.approx(-math.cos(0.4), abs=1e-10)
    assert r["leakage"] < 1e-6
    vac = r["state"][0]
    assert (vac["n1"], vac["n2"], vac["n3"], vac["n4"]) == (0, 0, 0, 0)
    assert vac["re"] > 0.9


def test_chsh_maximizer():
    r = bellsu11.chsh({"name": "ideal", "gamma": 0.2})
    assert r["S"] == pytest.approx(2 * math.sqrt(2), abs=1e-9)


def test_scan_and_errors():
    t = bellsu11.scan({"name": "ideal", "gamma": 0.2}, "delta", bellsu11.linspace(0.0, math.pi, 9))
    assert len(t["rows"]) == 9
    for row in t["rows"]:
        assert row["c_cond"] == pytest.approx(-math.cos(2 * row["parameter"]), abs=1e-9)
    with pytest.raises(ValueError):
        bellsu11.scan(None, "delta", [0.3, 0.1, 0.2])
    with pytest.raises(ValueError):
        bellsu11.run({"name": "ideal", "cutoff": 1})
    with pytest.raises(bellsu11.NonConvergenceError):
        bellsu11.run({"name": "ideal", "gamma": 0.5, "cutoff": 4})


def test_ou_mandel():
    assert bellsu11.ou_mandel_fidelity(0.1) >= 1 - 1e-4
