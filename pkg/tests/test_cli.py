"""Exit-code contract and output checks for every subcommand.

0 = verified / pass, 1 = property violated, 2 = usage or input error.
"""

import json

import pytest

from minorcalc.cli import main


def write_matrix(tmp_path, data, name="m.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


INT_2X2 = {"ring": {"kind": "int"}, "n": 2, "entries": [[1, 2], [3, 4]]}


class TestMinors:
    def test_text_output(self, tmp_path, capsys):
        rc = main(["minors", "--matrix", write_matrix(tmp_path, INT_2X2)])
        assert rc == 0
        out = capsys.readouterr().out.splitlines()
        assert out == ["p{} = 1", "p{1} = 1", "p{2} = 4", "p{1,2} = -2"]

    def test_json_output(self, tmp_path, capsys):
        rc = main(["minors", "--matrix", write_matrix(tmp_path, INT_2X2), "--json"])
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == {"p{}": "1", "p{1}": "1", "p{2}": "4", "p{1,2}": "-2"}

    def test_bad_file_is_usage_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        with pytest.raises(SystemExit) as exc:
            main(["minors", "--matrix", str(bad)])
        assert exc.value.code == 2
        assert "error:" in capsys.readouterr().err

    def test_missing_file_is_usage_error(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            main(["minors", "--matrix", str(tmp_path / "nope.json")])
        assert exc.value.code == 2

    def test_nonsquare_rejected(self, tmp_path):
        # a square schema check happens at parse time, so break it there
        data = {"ring": {"kind": "int"}, "n": 2, "entries": [[1, 2]]}
        with pytest.raises(SystemExit) as exc:
            main(["minors", "--matrix", write_matrix(tmp_path, data)])
        assert exc.value.code == 2


class TestPowMinors:
    def test_square_of_2x2(self, tmp_path, capsys):
        rc = main(["pow-minors", "--matrix", write_matrix(tmp_path, INT_2X2), "-m", "2"])
        assert rc == 0
        out = capsys.readouterr().out.splitlines()
        # A^2 = [[7,10],[15,22]], det = 4
        assert out == ["p{} = 1", "p{1} = 7", "p{2} = 22", "p{1,2} = 4"]

    def test_negative_power_rejected(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            main(["pow-minors", "--matrix", write_matrix(tmp_path, INT_2X2), "-m", "-1"])
        assert exc.value.code == 2


class TestSynth:
    def test_diag_golden(self, capsys):
        rc = main(["synth", "2", "1", "2"])
        assert rc == 0
        assert capsys.readouterr().out == "P[n=2,i=1,m=2]\np{1}^2 + p{1}*p{2} - p{1,2}\n"

    def test_offdiag_json(self, capsys):
        rc = main(["synth", "2", "1", "2", "--j", "2"])
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["n"] == 2 and payload["i"] == 1 and payload["j"] == 2
        assert len(payload["terms"]) == 1

    def test_out_file(self, tmp_path, capsys):
        out = tmp_path / "poly.txt"
        rc = main(["synth", "2", "1", "2", "--out", str(out)])
        assert rc == 0
        assert out.read_text() == capsys.readouterr().out

    def test_bad_indices_are_usage_errors(self):
        with pytest.raises(SystemExit) as exc:
            main(["synth", "3", "5", "2"])
        assert exc.value.code == 2
        with pytest.raises(SystemExit) as exc:
            main(["synth", "3", "2", "2", "--j", "2"])
        assert exc.value.code == 2


class TestVerify:
    def test_suite_passes(self, capsys):
        rc = main(["verify", "symbolic", "--n", "2", "--m", "3"])
        assert rc == 0
        assert "PASS: suite symbolic" in capsys.readouterr().out

    def test_random_suite_with_options(self, capsys):
        rc = main(["verify", "random", "--ring", "mod4", "--trials", "20",
                   "--n", "3", "--m", "3", "--seed", "7"])
        assert rc == 0

    def test_unknown_suite_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "no-such-suite"])
        assert exc.value.code == 2


class TestExampleCD:
    def test_symbolic(self, capsys):
        rc = main(["example-cd"])
        assert rc == 0
        out = capsys.readouterr().out
        assert "identical: True" in out
        assert "differ: True" in out

    def test_numeric(self, capsys):
        rc = main(["example-cd", "--values", "1", "2", "3", "4", "5", "6", "7", "8"])
        assert rc == 0
        assert "differ: True" in capsys.readouterr().out

    def test_substitution_collapses(self, capsys):
        rc = main(["example-cd", "--set", "q=r"])
        assert rc == 0
        assert "differ: False" in capsys.readouterr().out

    def test_bad_substitution(self):
        with pytest.raises(SystemExit) as exc:
            main(["example-cd", "--set", "q=z"])
        assert exc.value.code == 2


class TestCounterexample:
    def test_reproduces(self, capsys):
        rc = main(["counterexample"])
        assert rc == 0
        out = capsys.readouterr().out
        assert "all principal minors of A equal 1: True" in out
        assert "{2,3} principal minor of A^2: 1 + x^3" in out
        assert "counterexample reproduced" in out

    def test_other_base_field(self, capsys):
        rc = main(["counterexample", "--base", "3"])
        assert rc == 0

    def test_composite_base_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["counterexample", "--base", "4"])
        assert exc.value.code == 2


class TestScan:
    def test_clean_scan_exits_zero(self, capsys):
        rc = main(["scan", "--ring", "mod:2", "--n", "2", "--m-max", "3"])
        assert rc == 0
        assert "violations: 0" in capsys.readouterr().out

    def test_footnote_scan_exits_one(self, capsys):
        rc = main(["scan", "--ring", "footnote:2", "--n", "4", "--m-max", "2"])
        assert rc == 1
        assert "1 + x^3" in capsys.readouterr().out

    def test_json_report(self, capsys):
        rc = main(["scan", "--ring", "mod:2", "--n", "2", "--m-max", "2", "--json"])
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["scanned"] == 16

    def test_elapsed_goes_to_stderr(self, capsys):
        main(["scan", "--ring", "mod:2", "--n", "2", "--m-max", "2"])
        captured = capsys.readouterr()
        assert "elapsed" not in captured.out
        assert "elapsed" in captured.err

    def test_bad_ring_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["scan", "--ring", "gf:9", "--n", "2"])
        assert exc.value.code == 2

    def test_oversized_exhaustive_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["scan", "--ring", "mod:3", "--n", "4"])
        assert exc.value.code == 2


def test_no_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
