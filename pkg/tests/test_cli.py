import json
import math

import numpy as np
import pytest

from specnorm import golden, make_state, normalize, spectral_norm
from specnorm.cli import main
from specnorm.errors import DidNotConverge

A1 = golden.case("A.1")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


class TestComputeJson:
    def test_report_shape(self, capsys):
        doc = run_json(capsys, "compute", "--coeffs", json.dumps(A1.coeffs))
        assert doc["tool"] == "specnorm"
        assert doc["input"]["d"] == len(A1.coeffs) - 1
        assert set(doc["results"]) == {"complex"}
        res = doc["results"]["complex"]
        assert set(res) == {"sigma", "witness", "witness_root", "method",
                            "bracket_halfwidth"}
        assert "census" in doc and "exceptional" in doc

    def test_sigma_roundtrips_exactly(self, capsys):
        # floats are printed at 17 significant digits, so parsing the JSON
        # recovers the library value bit for bit
        st = make_state(len(A1.coeffs) - 1, A1.coeffs)
        want = spectral_norm(st, "complex").sigma
        doc = run_json(capsys, "compute", "--coeffs", json.dumps(A1.coeffs))
        assert doc["results"]["complex"]["sigma"] == want

    def test_both_fields(self, capsys):
        doc = run_json(capsys, "compute", "--field", "complex,real",
                       "--coeffs", json.dumps(A1.coeffs))
        assert set(doc["results"]) == {"complex", "real"}
        assert (doc["results"]["real"]["sigma"]
                <= doc["results"]["complex"]["sigma"] + 1e-9)

    def test_eta_only_near_unit_norm(self, capsys):
        doc = run_json(capsys, "compute", "--dicke", "3", "2,1")
        assert doc["eta"] == pytest.approx(1.169925001442312, abs=1e-9)
        assert doc["eta_rel"] == pytest.approx(doc["eta"] - 2.0, abs=1e-12)
        far = run_json(capsys, "compute", "--coeffs", "[2, 0.4, 0.2, 1.0]")
        assert "eta" not in far

    def test_dicke_matches_coeffs_path(self, capsys, tmp_path):
        blob = json.dumps({"d": len(A1.coeffs) - 1, "s": A1.coeffs})
        path = tmp_path / "state.json"
        path.write_text(blob, encoding="utf-8")
        inline = run_json(capsys, "compute", "--coeffs", blob)
        from_file = run_json(capsys, "compute", "--coeffs", str(path))
        assert inline == from_file

    def test_root_table(self, capsys):
        doc = run_json(capsys, "compute", "--roots",
                       "--coeffs", json.dumps(A1.coeffs))
        roots = doc["roots"]
        assert len(roots) == 5
        sigma = doc["results"]["complex"]["sigma"]
        for r in roots:
            assert set(r) == {"z", "multiplicity", "lambda_q", "lambda_v",
                              "in_R", "in_R_real", "real"}
            assert r["lambda_q"] <= sigma + 1e-9
        assert any(abs(r["lambda_q"] - sigma) <= 1e-8 for r in roots if r["in_R"])

    def test_lambda_scales_with_input(self, capsys):
        one = run_json(capsys, "compute", "--roots",
                       "--coeffs", json.dumps(A1.coeffs))
        two = run_json(capsys, "compute", "--roots",
                       "--coeffs", json.dumps([2 * c for c in A1.coeffs]))
        assert two["results"]["complex"]["sigma"] == pytest.approx(
            2 * one["results"]["complex"]["sigma"], rel=1e-12)
        lam1 = sorted(r["lambda_q"] for r in one["roots"])
        lam2 = sorted(r["lambda_q"] for r in two["roots"])
        assert np.allclose(lam2, [2 * v for v in lam1], rtol=1e-9)

    def test_infinity_witness_root(self, capsys):
        doc = run_json(capsys, "compute", "--roots", "--coeffs", "[0, 0, 0, 1]")
        assert doc["results"]["complex"]["witness_root"] == "inf"
        assert doc["census"]["mu_reported"] >= 1

    def test_exceptional_block(self, capsys):
        doc = run_json(capsys, "compute", "--dicke", "6", "3,3")
        assert doc["exceptional"] is not None
        assert doc["exceptional"]["kind"] == "monomial"
        assert doc["census"] is None
        generic = run_json(capsys, "compute", "--coeffs", json.dumps(A1.coeffs))
        assert generic["exceptional"] is None

    def test_oracle_block_seeded(self, capsys):
        a = run_json(capsys, "compute", "--oracle", "--seed", "7",
                     "--coeffs", json.dumps(A1.coeffs))
        b = run_json(capsys, "compute", "--oracle", "--seed", "7",
                     "--coeffs", json.dumps(A1.coeffs))
        assert a["oracle"] == b["oracle"]
        assert a["oracle"]["value"] <= a["results"]["complex"]["sigma"] + 1e-8

    def test_minus_zero_not_emitted(self, capsys):
        code, out, _ = run(capsys, "compute", "--coeffs", json.dumps(A1.coeffs))
        assert code == 0
        assert "-0," not in out and "-0]" not in out and "-0}" not in out


class TestComputeTable:
    def test_table_lines(self, capsys):
        code, out, _ = run(capsys, "compute", "--format", "table", "--roots",
                           "--field", "complex,real",
                           "--coeffs", json.dumps(A1.coeffs))
        assert code == 0
        assert "sigma (complex) =" in out
        assert "sigma (real) =" in out
        assert "census: degree" in out
        assert "in R" in out
        a4 = golden.case("A.4")
        code, out, _ = run(capsys, "compute", "--format", "table", "--roots",
                           "--coeffs", json.dumps(a4.coeffs))
        assert code == 0
        assert "excluded" in out


class TestBatch:
    def test_order_and_worst_exit(self, capsys, tmp_path):
        lines = [
            json.dumps({"d": 3, "s": A1.coeffs}),
            json.dumps([1, 0, 0, [0, -1]]),
            "this is not json",
            json.dumps({"s": [0, 0]}),
        ]
        path = tmp_path / "states.jsonl"
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        code, out, _ = run(capsys, "compute", "--batch", str(path))
        assert code == 2
        docs = [json.loads(ln) for ln in out.splitlines()]
        assert len(docs) == 4
        assert docs[0]["input"]["d"] == 3
        assert docs[1]["input"]["d"] == 3
        assert "error" in docs[2] and docs[2]["error"]["type"] == "InputError"
        assert "error" in docs[3]

    def test_all_good_exit_zero(self, capsys, tmp_path):
        path = tmp_path / "ok.jsonl"
        path.write_text(json.dumps(A1.coeffs) + "\n", encoding="utf-8")
        code, out, _ = run(capsys, "compute", "--batch", str(path))
        assert code == 0
        assert len(out.splitlines()) == 1

    def test_batch_excludes_inline(self, capsys, tmp_path):
        path = tmp_path / "x.jsonl"
        path.write_text("[1,0,0,0]\n", encoding="utf-8")
        code, _, err = run(capsys, "compute", "--batch", str(path),
                           "--coeffs", "[1,0,0,0]")
        assert code == 2
        assert "input error" in err


class TestOtherCommands:
    def test_oracle_json(self, capsys):
        doc = run_json(capsys, "oracle", "--dicke", "4", "2,2")
        assert doc["field"] == "complex"
        assert doc["restarts"] == 64
        assert doc["value"] == pytest.approx(math.sqrt(6) / 4, abs=1e-4)
        assert len(doc["argmax"]) == 2

    def test_oracle_table(self, capsys):
        code, out, _ = run(capsys, "oracle", "--format", "table",
                           "--dicke", "4", "2,2")
        assert code == 0
        assert "oracle (complex, 64 restarts, seed 0)" in out

    def test_census_json(self, capsys):
        doc = run_json(capsys, "census", "--coeffs", json.dumps(A1.coeffs))
        assert doc["census"]["mu_reported"] == 5
        assert doc["census"]["nonsingular"] is True
        assert doc["census"]["bounds_satisfied"] is True

    def test_reproduce_targets_pass(self, capsys):
        for target in ("appendixA", "tables2to4", "table1"):
            code, out, _ = run(capsys, "reproduce", target)
            assert code == 0, out
            assert "result: PASS" in out

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--version"])
        assert exc.value.code == 0
        assert capsys.readouterr().out.startswith("specnorm ")


class TestErrorExits:
    def test_missing_subcommand(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_input_errors_exit_2(self, capsys):
        cases = [
            ("compute", "--coeffs", "[1, 0"),
            ("compute", "--coeffs", "[true, 0, 0, 0]"),
            ("compute", "--field", "quaternion", "--coeffs", "[1,0,0,0]"),
            ("compute", "--d", "5", "--coeffs", "[1,0,0,0]"),
            ("compute",),
            ("compute", "--coeffs", "[1,0,0,0]", "--dicke", "3", "2,1"),
            ("compute", "--coeffs", "/nonexistent/path.json"),
            ("reproduce", "nosuchtable"),
            ("census", "--coeffs", "[0,0,0,0]"),
        ]
        for argv in cases:
            code, _, err = run(capsys, *argv)
            assert code == 2, argv
            assert "input error" in err

    def test_computation_error_exits_3(self, capsys, monkeypatch):
        def boom(*a, **k):
            raise DidNotConverge("no convergence")

        monkeypatch.setattr("specnorm.cli.spectral_norm", boom)
        code, _, err = run(capsys, "compute", "--coeffs", "[1,0,0,0.5]")
        assert code == 3
        assert "computation error" in err
