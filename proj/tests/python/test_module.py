import math

import jsonschema
import pytest

import concavity


def test_radius_and_verify(schemas):
    rec = concavity.radius("s0n", n=1)
    jsonschema.validate(rec, schemas["report"])
    assert abs(rec["solver_radius"] - (7 - 4 * math.sqrt(3))) < 1e-10
    ver = concavity.verify("s0n", n=1, A=2)
    jsonschema.validate(ver, schemas["report"])
    assert "MATCH" in ver["flags"]


def test_solvers():
    r = concavity.least_root("phi2", {"alpha": 0, "beta": 2, "A": 2})
    assert r["converged"]
    assert abs(r["value"] - (5 - 2 * math.sqrt(6))) < 1e-10
    assert concavity.closed_form_root("phi6", {"A": 2}) is None
    assert concavity.eval_phi("phi3", 0.0, {"beta": 0.5, "A": 1.5}) == pytest.approx(0.5)
    assert concavity.radius_of_convexity(1, 0.0) == pytest.approx(2 - math.sqrt(3))
    no_root = concavity.least_root("phi4", {"alpha": 0.0})
    assert not no_root["converged"] and no_root["failure"] == "NoRoot"


def test_functional():
    assert abs(concavity.eval_Tf("rotated_koebe", {}, 2.0, 0.0) - 1) < 1e-14
    value, err = concavity.limit_Pf_at_pole("meromorphic_kp", {"p": 0.5}, 0.5)
    assert abs(value - 5 / 3) < 1e-6
    e = concavity.empirical_radius("rotated_koebe", A=2.0)
    assert abs(e["value"] - (7 - 4 * math.sqrt(3))) < 1e-6
    cells = concavity.grid("identity", {}, 2.0, 0.5, 3)
    assert len(cells) == 9 and cells[4][2] == pytest.approx(1.0) and cells[0][2] is None


def test_errors_carry_kind():
    with pytest.raises(concavity.ConcavityError) as info:
        concavity.eval_Pf("meromorphic_kp", {"p": 0.5}, 0.5, 0.5)
    assert info.value.kind == "NearPole"
    with pytest.raises(ValueError):
        concavity.radius("kab", alpha=1)


def test_witness_test():
    s = concavity.witness_test("s0n", n=2, count=20, seed=7)
    assert s["passed"] and s["violations"] == 0
