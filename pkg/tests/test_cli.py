"""End-to-end tests for the command-line interface."""

from __future__ import annotations

import json

import pytest

from qforms.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCoeffs:
    def test_theta3_golden(self, capsys):
        code, out, _ = run(capsys, "coeffs", "--series", "theta3", "--order", "10")
        assert code == 0
        assert out == "1 + 2*q + 2*q^4 + 2*q^9\n"

    def test_product_expression(self, capsys):
        code, out, _ = run(capsys, "coeffs", "--series", "theta3^2", "--order", "8")
        assert code == 0
        assert out == "1 + 4*q + 4*q^2 + 4*q^4 + 8*q^5\n"

    def test_mixed_product(self, capsys):
        code, out, _ = run(capsys, "coeffs", "--series", "euler*partition", "--order", "20")
        assert code == 0
        assert out == "1\n"

    def test_phi_names(self, capsys):
        code, out, _ = run(capsys, "coeffs", "--series", "phi_3", "--order", "10")
        assert code == 0
        assert out == "1 + 2*q + 2*q^8\n"
        code, out, _ = run(capsys, "coeffs", "--series", "phistar_2", "--order", "6")
        assert code == 0
        assert out == "1 - 2*q + 2*q^4\n"

    def test_json_terms(self, capsys):
        code, out, _ = run(capsys, "coeffs", "--series", "theta4", "--order", "5", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["series"] == "theta4"
        assert doc["order"] == 5
        assert doc["terms"] == [
            {"exp": 0, "coeff": {"num": 1, "den": 1}},
            {"exp": 1, "coeff": {"num": -2, "den": 1}},
            {"exp": 4, "coeff": {"num": 2, "den": 1}},
        ]

    def test_unknown_name_is_usage_error(self, capsys):
        code, _, err = run(capsys, "coeffs", "--series", "wat", "--order", "8")
        assert code == 2
        assert "unknown series name" in err

    def test_bad_exponent(self, capsys):
        code, _, _ = run(capsys, "coeffs", "--series", "theta3^0", "--order", "8")
        assert code == 2


class TestTable:
    def test_sigma_golden(self, capsys):
        code, out, _ = run(capsys, "table", "--fn", "sigma", "--nu", "1", "--to", "5")
        assert code == 0
        assert out == "1\t1\n2\t3\n3\t4\n4\t7\n5\t6\n"

    def test_moebius_json(self, capsys):
        code, out, _ = run(capsys, "table", "--fn", "moebius", "--to", "4", "--json")
        assert code == 0
        assert json.loads(out) == [
            {"n": 1, "value": {"num": 1, "den": 1}},
            {"n": 2, "value": {"num": -1, "den": 1}},
            {"n": 3, "value": {"num": -1, "den": 1}},
            {"n": 4, "value": {"num": 0, "den": 1}},
        ]

    def test_rational_values(self, capsys):
        code, out, _ = run(capsys, "table", "--fn", "c", "--nu", "3",
                           "--from", "16", "--to", "16")
        assert code == 0
        assert out == "16\t-1/2\n"

    def test_nu_required_and_rejected(self, capsys):
        assert run(capsys, "table", "--fn", "sigma", "--to", "5")[0] == 2
        assert run(capsys, "table", "--fn", "moebius", "--nu", "2", "--to", "5")[0] == 2

    def test_chi_required_and_rejected(self, capsys):
        assert run(capsys, "table", "--fn", "Y", "--nu", "2", "--to", "5")[0] == 2
        assert run(capsys, "table", "--fn", "sigma", "--nu", "1", "--chi", "mu",
                   "--to", "5")[0] == 2

    def test_bad_range(self, capsys):
        assert run(capsys, "table", "--fn", "moebius", "--from", "5", "--to", "3")[0] == 2


class TestRep:
    def test_two_squares_golden(self, capsys):
        code, out, _ = run(capsys, "rep", "--form", "x^2+y^2", "--n", "5")
        assert code == 0
        assert out == "count=8\n"

    def test_witnesses(self, capsys):
        code, out, _ = run(capsys, "rep", "--form", "x^3+y^3", "--n", "1729",
                           "--witnesses")
        assert code == 0
        assert out.splitlines() == [
            "count=4",
            "witness=(1,12)",
            "witness=(9,10)",
            "witness=(10,9)",
            "witness=(12,1)",
        ]

    def test_domain_override(self, capsys):
        # restricting both squares to n >= 1 drops sign and zero choices
        code, out, _ = run(capsys, "rep", "--form", "x^2+y^2", "--n", "5",
                           "--domain", "x=N1,y=N1")
        assert code == 0
        assert out == "count=2\n"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "rep", "--form", "x^2+y^2", "--n", "5",
                           "--witnesses", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["n"] == 5
        assert doc["count"] == 8
        assert len(doc["witnesses"]) == 8
        assert [1, 2] in doc["witnesses"]

    def test_bad_form(self, capsys):
        assert run(capsys, "rep", "--form", "x^2+", "--n", "5")[0] == 2
        assert run(capsys, "rep", "--form", "v^2", "--n", "5")[0] == 2

    def test_bad_domain(self, capsys):
        assert run(capsys, "rep", "--form", "x^2+y^2", "--n", "5",
                   "--domain", "x=Q")[0] == 2


class TestVerify:
    def test_pass_line(self, capsys):
        code, out, _ = run(capsys, "verify", "--id", "jacobi2sq")
        assert code == 0
        assert out == "jacobi2sq PASS window=[0,200)\n"

    def test_fail_line_and_exit(self, capsys):
        code, out, _ = run(capsys, "verify", "--id", "th47_corrupted")
        assert code == 1
        assert out == "th47_corrupted[nu=3] FAIL at q^8: lhs=1 rhs=-1\n"

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "verify", "--id", "th47", "--param", "nu=3",
                           "--order", "64", "--json")
        assert code == 0
        doc = json.loads(out)
        assert set(doc) == {"id", "params", "order", "window", "equal", "first_diff"}
        assert doc == {"id": "th47", "params": {"nu": 3}, "order": 64,
                       "window": [0, 64], "equal": True, "first_diff": None}

    def test_json_failure_shape(self, capsys):
        code, out, _ = run(capsys, "verify", "--id", "th47_corrupted", "--json")
        assert code == 1
        doc = json.loads(out)
        assert doc["equal"] is False
        assert doc["first_diff"] == {"exp": 8, "lhs": {"num": 1, "den": 1},
                                     "rhs": {"num": -1, "den": 1}}

    def test_fraction_param(self, capsys):
        code, out, _ = run(capsys, "verify", "--id", "th15_2", "--param", "z=1/3",
                           "--order", "48", "--json")
        assert code == 0
        assert json.loads(out)["params"]["z"] == {"num": 1, "den": 3}

    def test_unknown_id(self, capsys):
        assert run(capsys, "verify", "--id", "nope")[0] == 2

    def test_bad_param_value(self, capsys):
        assert run(capsys, "verify", "--id", "th47", "--param", "nu=1")[0] == 2
        assert run(capsys, "verify", "--id", "th47", "--param", "bogus")[0] == 2


class TestSuite:
    def test_all_pass_at_order_48(self, capsys):
        code, out, _ = run(capsys, "suite", "--order", "48")
        assert code == 0
        lines = out.splitlines()
        assert lines[-1] == "passed 71/71"
        assert all(" PASS " in ln for ln in lines[:-1])

    def test_filter(self, capsys):
        code, out, _ = run(capsys, "suite", "--filter", "th9", "--order", "48")
        assert code == 0
        lines = out.splitlines()
        assert lines[:-1] == [
            "th9[nu=0] PASS window=[0,48)",
            "th9[nu=1] PASS window=[0,48)",
            "th9[nu=2] PASS window=[0,48)",
        ]

    def test_json_sorted_by_id(self, capsys):
        code, out, _ = run(capsys, "suite", "--order", "48", "--json")
        assert code == 0
        docs = json.loads(out)
        ids = [d["id"] for d in docs]
        assert ids == sorted(ids)
        assert all(d["equal"] for d in docs)

    def test_determinism(self, capsys):
        first = run(capsys, "suite", "--order", "48", "--json")
        second = run(capsys, "suite", "--order", "48", "--json")
        assert first == second


class TestResidues:
    def test_res_golden(self, capsys):
        code, out, _ = run(capsys, "residues", "res", "--a", "1", "--n", "15")
        assert code == 0
        assert out == "count=4\n"

    def test_res_json(self, capsys):
        code, out, _ = run(capsys, "residues", "res", "--a", "3", "--n", "5",
                           "--json")
        assert code == 0
        assert json.loads(out) == {"a": 3, "n": 5, "count": 0}

    def test_classify_golden(self, capsys):
        code, out, _ = run(capsys, "residues", "classify", "--t", "31")
        assert code == 0
        assert out.splitlines() == [
            "t=31",
            "S1=[1, 2, 4, 5, 7, 8, 9, 10, 14, 16, 18, 19, 20, 25, 28]",
            "S11=[1, 4, 9, 16, 25]",
            "S12=[2, 5, 7, 8, 10, 14, 18, 19, 20, 28]",
            "Sm1=[3, 6, 11, 12, 13, 15, 17, 21, 22, 23, 24, 26, 27, 29, 30]",
            "S0=[31]",
        ]

    def test_classify_json(self, capsys):
        code, out, _ = run(capsys, "residues", "classify", "--t", "7", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["S11"] == [1, 4]
        assert doc["S12"] == [2]
        assert doc["S0"] == [7]

    def test_bad_modulus(self, capsys):
        assert run(capsys, "residues", "classify", "--t", "9")[0] == 2

    def test_missing_subcommand(self, capsys):
        assert run(capsys, "residues")[0] == 2


class TestUsage:
    def test_no_arguments(self, capsys):
        assert run(capsys)[0] == 2

    def test_unknown_subcommand(self, capsys):
        assert run(capsys, "nonsense")[0] == 2

    def test_unknown_flag_rejected(self, capsys):
        code, _, err = run(capsys, "coeffs", "--series", "theta3",
                           "--frobnicate")
        assert code == 2
        assert "usage" in err

    def test_usage_error_prints_grammar(self, capsys):
        _, _, err = run(capsys, "rep", "--n", "5")
        assert "form expression" in err
        assert "sumterm" in err

    def test_help_exits_zero(self, capsys):
        code, out, _ = run(capsys, "--help")
        assert code == 0
        assert "coeffs" in out and "residues" in out


@pytest.mark.parametrize("argv", [
    ("coeffs", "--series", "theta2*theta3*theta4", "--order", "30"),
    ("table", "--fn", "lambda", "--nu", "2", "--to", "40"),
    ("rep", "--form", "2*x^2+3*y^2", "--n", "30", "--witnesses"),
    ("verify", "--id", "th54", "--json"),
    ("residues", "classify", "--t", "19", "--json"),
])
def test_repeated_invocations_identical(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    assert first[0] == 0
