from fractions import Fraction

import pytest

import pricelab


def pricing_doc(base, leader, valuation, threshold="0", ground="feasible-sets"):
    return {
        "schema_version": "1",
        "kind": "pricing",
        "payload": {
            "base": base,
            "leader_set": leader,
            "valuation": valuation,
            "domain": "free",
            "threshold": threshold,
            "ground": ground,
        },
        "provenance": [],
    }


def five_vs_three():
    base = {
        "universe": ["eL", "eF"],
        "family": {"type": "explicit", "sets": [[0], [1]]},
        "weights": ["0", "0"],
        "threshold": "0",
        "sense": "feasibility",
    }
    return pricing_doc(base, [0], ["5", "3"], threshold="2")


def sat_source():
    base = {
        "universe": ["x1", "~x1", "x2", "~x2"],
        "family": {"type": "cnf", "num_vars": 2, "clauses": [[1, 2]]},
        "weights": ["0", "0", "0", "0"],
        "threshold": "0",
        "sense": "feasibility",
    }
    return pricing_doc(base, [0], ["3", "1", "2", "0"], ground="solution-sets")


def test_oracle_and_theorem2_agree():
    for terms, want in [([[1]], True), ([[1, 2]], False), ([[1, 2], [-2]], True)]:
        doc = pricelab.qdnf(1, terms)
        assert pricelab.qdnf_oracle(doc) is want
        compiled = pricelab.compile_theorem2(doc)
        assert compiled["kind"] == "pricing"
        assert compiled["provenance"][-1]["step"] == "thm2"
        assert pricelab.solve(compiled)["decision"] is want


def test_solve_exact_values():
    out = pricelab.solve(five_vs_three())
    assert out["status"] == "optimal"
    assert Fraction(out["leader_value"]) == 2
    assert out["response"] == ["eL"]
    assert pricelab.solve(five_vs_three(), threshold=Fraction(5, 2))["decision"] is False


def test_dimacs_round_trip():
    cnf = pricelab.parse_dimacs("p cnf 2 1\n1 -2 0\n")
    assert cnf["kind"] == "cnf"
    assert cnf["payload"]["clauses"] == [[1, -2]]


def test_sat_pipelines_preserve_value():
    source = sat_source()
    want = pricelab.solve(source)
    assert want["status"] == "optimal"
    for reduction, mode in [("sat2vc", "min"), ("sat2ss", "max")]:
        art = pricelab.reduce(reduction, source)
        assert pricelab.check_reduction(art)["passed"]
        lifted = pricelab.lift(mode, art)
        assert pricelab.solve(lifted)["leader_value"] == want["leader_value"]
    assert pricelab.solve(pricelab.lift("feas", source))["leader_value"] == want["leader_value"]
    heavier = pricelab.weight_lift(pricelab.reduce("sat2vc", source))
    assert heavier["provenance"][-1]["step"] == "weight-lift"


def test_errors_are_typed():
    with pytest.raises(pricelab.ParseError):
        pricelab.solve("{not json")
    with pytest.raises(ValueError):
        pricelab.solve(five_vs_three(), domain="sideways")


def test_sweep_reports_all_matches():
    report = pricelab.verify_sweep(n=1, max_terms=2)
    assert report["summary"]["total"] == 46
    assert report["summary"]["matches"] == 46
    assert pricelab.verify_sweep(n=1, max_terms=2, jobs=1) == report
