import json
import math
from fractions import Fraction

import pytest

from permroots import cli, rootgf
from permroots.series import TruncatedSeries

F = Fraction


def run(capsys, argv):
    code = cli.main(argv)
    return code, capsys.readouterr().out


class TestProbs:
    def test_csv_golden(self, capsys):
        code, out = run(capsys, ["probs", "--n", "2", "--order", "4"])
        assert code == 0
        assert out == (
            "k,count,p_num,p_den,p_float\n"
            "0,1,1,1,1.0\n"
            "1,1,1,1,1.0\n"
            "2,1,1,2,0.5\n"
            "3,3,1,2,0.5\n"
            "4,12,1,2,0.5\n"
        )

    def test_tiny_table(self, capsys):
        code, out = run(capsys, ["probs", "--n", "5", "--order", "1"])
        assert code == 0
        assert [line.split(",")[1] for line in out.splitlines()[1:]] == ["1", "1"]

    def test_json_round_trip(self, capsys):
        code, out = run(capsys, ["probs", "--n", "3", "--order", "8", "--format", "json"])
        assert code == 0
        doc = json.loads(out)
        assert doc["n"] == 3 and doc["order"] == 8
        p = rootgf.build_p(rootgf.RootProblem(3, 8))
        for rec in doc["records"]:
            k = rec["k"]
            frac = F(int(rec["p_num"]), int(rec["p_den"]))
            assert frac == p[k]
            assert int(rec["count"]) == frac * math.factorial(k)
            assert rec["p_float"] == float(frac)

    def test_deterministic_output(self, capsys):
        _, first = run(capsys, ["probs", "--n", "2", "--order", "12", "--format", "json"])
        _, second = run(capsys, ["probs", "--n", "2", "--order", "12", "--format", "json"])
        assert first == second

    def test_rejects_degree_one(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["probs", "--n", "1", "--order", "4"])
        assert exc.value.code == 2

    def test_rejects_bad_format(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["probs", "--n", "2", "--order", "4", "--format", "xml"])
        assert exc.value.code == 2


class TestVerify:
    def test_both_modes_pass(self, capsys):
        code, out = run(capsys, ["verify", "--n", "2", "--max-k", "7", "--mode", "both"])
        assert code == 0
        assert "PASS" in out

    def test_cycletype_mode_at_larger_k(self, capsys):
        code, out = run(capsys, ["verify", "--n", "3", "--max-k", "30", "--mode", "cycletype"])
        assert code == 0

    def test_detects_corrupted_coefficient(self, capsys, monkeypatch):
        real = rootgf.build_p

        def corrupted(prob):
            s = real(prob)
            coeffs = list(s.coeffs)
            k = min(3, len(coeffs) - 1)
            coeffs[k] += F(1, math.factorial(k))  # count off by one
            return TruncatedSeries(coeffs)

        monkeypatch.setattr(rootgf, "build_p", corrupted)
        code, out = run(capsys, ["verify", "--n", "2", "--max-k", "6", "--mode", "both"])
        assert code == 1
        assert "FAIL" in out

    def test_rejects_bad_mode(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["verify", "--n", "2", "--max-k", "5", "--mode", "quick"])
        assert exc.value.code == 2


class TestAsym:
    def test_report_schema(self, capsys):
        code, out = run(capsys, ["asym", "--n", "2", "--order", "16"])
        assert code == 0
        doc = json.loads(out)
        assert doc["exponent"] == "-1/2"
        assert set(doc) == {
            "n", "order", "exponent", "darboux_constant", "b_at_one",
            "final_constant", "fit_slope", "ratios",
        }
        assert doc["final_constant"]["lo"] <= doc["final_constant"]["hi"]
        assert len(doc["ratios"]) == 16

    def test_exponent_for_degree_six(self, capsys):
        code, out = run(capsys, ["asym", "--n", "6", "--order", "8"])
        assert code == 0
        assert json.loads(out)["exponent"] == "-2/3"

    def test_degenerate_order_zero(self, capsys):
        code, out = run(capsys, ["asym", "--n", "2", "--order", "0"])
        assert code == 0
        doc = json.loads(out)
        assert doc["ratios"] == []
        assert doc["fit_slope"] is None

    def test_deterministic_output(self, capsys):
        _, first = run(capsys, ["asym", "--n", "2", "--order", "16"])
        _, second = run(capsys, ["asym", "--n", "2", "--order", "16"])
        assert first == second


class TestEnvelope:
    def test_certifies_unit_constant(self, capsys):
        code, out = run(capsys, ["envelope", "--c", "1", "--k", "2", "--order", "64"])
        assert code == 0
        doc = json.loads(out)
        assert doc["certified"] is True
        num, den = doc["observed_max"].split("/")
        assert F(int(num), int(den)) <= F(*map(int, doc["certified_constant"].split("/")))

    def test_zero_constant_is_trivially_certified(self, capsys):
        code, out = run(capsys, ["envelope", "--c", "0", "--k", "2", "--order", "16"])
        assert code == 0
        doc = json.loads(out)
        assert doc["observed_max"] == "0/1"

    def test_accepts_fraction_literal(self, capsys):
        code, out = run(capsys, ["envelope", "--c", "3/2", "--k", "2", "--order", "8"])
        assert code == 0
        assert json.loads(out)["c"] == "3/2"

    def test_rejects_decay_below_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["envelope", "--c", "1", "--k", "1", "--order", "8"])
        assert exc.value.code == 2

    def test_rejects_malformed_rational(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["envelope", "--c", "one", "--k", "2", "--order", "8"])
        assert exc.value.code == 2
        with pytest.raises(SystemExit) as exc:
            cli.main(["envelope", "--c", "1/0", "--k", "2", "--order", "8"])
        assert exc.value.code == 2


class TestUsage:
    def test_missing_subcommand(self):
        with pytest.raises(SystemExit) as exc:
            cli.main([])
        assert exc.value.code == 2

    def test_unknown_subcommand(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["frobnicate"])
        assert exc.value.code == 2
