import csv
import io
import json

import pytest

from luckypark import census_classical, census_from_json, census_to_json
from luckypark.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSimulate:
    def test_capacity_street_transcript(self, capsys):
        code, out, _ = run(capsys, "simulate", "--u", "2,2,3,3", "--prefs", "1,3,3,1")
        assert code == 0
        assert out == "X {1,4} {2,3} | lucky: 2,3\n"

    def test_single_spot_transcript(self, capsys):
        code, out, _ = run(capsys, "simulate", "--u", "1", "--prefs", "1")
        assert code == 0
        assert out == "{1} | lucky: 1\n"

    def test_failing_car_exits_3(self, capsys):
        code, out, err = run(capsys, "simulate", "--u", "1,2", "--prefs", "2,2")
        assert code == 3
        assert "car 2" in err

    def test_json_output(self, capsys):
        code, out, _ = run(
            capsys, "simulate", "--u", "2,2,3,3", "--prefs", "1,3,3,1", "--json"
        )
        assert code == 0
        assert json.loads(out) == {
            "u": [2, 2, 3, 3],
            "prefs": [1, 3, 3, 1],
            "outcome": [None, [1, 4], [2, 3]],
            "lucky": [2, 3],
        }

    def test_unsorted_street_is_a_parse_error(self, capsys):
        code, _, err = run(capsys, "simulate", "--u", "2,1", "--prefs", "1,1")
        assert code == 2
        assert "increasing" in err

    def test_pref_count_mismatch_is_a_parse_error(self, capsys):
        code, _, _ = run(capsys, "simulate", "--u", "1,2", "--prefs", "1")
        assert code == 2


class TestCount:
    @pytest.mark.parametrize(
        "argv,want",
        [
            (("count", "outcomes-fixed-I", "--n", "5", "--I", "1,4"), "4"),
            (("count", "outcomes-fixed-I", "--n", "5", "--I", "1,2,3"), "54"),
            (("count", "outcomes-lucky-spots", "--u", "1,2,4,5", "--L", "1,5"), "12"),
            (("count", "outcomes-lucky-spots", "--u", "2,2,3,5", "--L", "3,5"), "12"),
            (("count", "c1", "--n", "2", "--I", "1"), "2"),
            (("count", "c2", "--n", "2", "--I", "1,2"), "2"),
            (("count", "c3", "--n", "3", "--I", "1,2,3"), "6"),
            (("count", "outcomes-mn-fixed-I", "--m", "2", "--n", "3", "--I", "1"), "2"),
            (("count", "outcomes-mn-k", "--m", "3", "--n", "3", "--k", "2"), "5"),
            (("count", "outcomes-completion-k", "--n", "5", "--k", "2"), "27"),
            (
                ("count", "outcomes-completion-k", "--n", "3", "--s", "1,3,5", "--k", "1"),
                "6",
            ),
            (("count", "upf-fixed-I", "--u", "1,1,3,3,3", "--I", "2,3,4"), "6"),
            (("count", "upf-k", "--u", "1,1,3", "--k", "2"), "4"),
            (
                ("count", "upf-const-jump", "--n", "3", "--i", "1", "--j", "3", "--k", "3"),
                "3",
            ),
        ],
    )
    def test_golden_values(self, capsys, argv, want):
        code, out, _ = run(capsys, *argv)
        assert code == 0
        assert out.strip() == want

    def test_json_echoes_inputs(self, capsys):
        code, out, _ = run(
            capsys, "count", "outcomes-fixed-I", "--n", "5", "--I", "1,4", "--json"
        )
        assert code == 0
        assert json.loads(out) == {
            "selector": "outcomes-fixed-I",
            "n": 5,
            "I": [1, 4],
            "value": 4,
        }

    def test_unknown_selector(self, capsys):
        code, _, err = run(capsys, "count", "nope", "--n", "3")
        assert code == 2

    def test_missing_argument(self, capsys):
        code, _, err = run(capsys, "count", "outcomes-fixed-I", "--n", "5")
        assert code == 2
        assert "--I" in err

    def test_extraneous_argument(self, capsys):
        code, _, err = run(
            capsys, "count", "outcomes-fixed-I", "--n", "5", "--I", "1", "--k", "2"
        )
        assert code == 2
        assert "--k" in err

    def test_unsorted_lucky_set_is_a_parse_error(self, capsys):
        code, _, err = run(capsys, "count", "outcomes-fixed-I", "--n", "5", "--I", "4,1")
        assert code == 2
        assert "increasing" in err


class TestBrute:
    def test_emits_canonical_census(self, capsys):
        code, out, _ = run(capsys, "brute", "--n", "3")
        assert code == 0
        assert census_from_json(out) == census_classical(3)
        assert out.strip() == census_to_json(census_classical(3))

    def test_worker_counts_agree_bytewise(self, capsys):
        _, one, _ = run(capsys, "brute", "--n", "3", "--workers", "1")
        _, many, _ = run(capsys, "brute", "--n", "3", "--workers", "4")
        assert one == many

    def test_families_are_exclusive(self, capsys):
        code, _, err = run(capsys, "brute", "--u", "1,2", "--m", "2")
        assert code == 2

    def test_cap_violation_exits_2(self, capsys):
        code, _, err = run(capsys, "brute", "--n", "8", "--cap", "100")
        assert code == 2
        assert "cap" in err

    def test_vector_and_completion_families(self, capsys):
        _, direct, _ = run(capsys, "brute", "--u", "2,4,6")
        _, completed, _ = run(capsys, "brute", "--n", "3", "--s", "1,3,5")
        assert direct == completed


class TestVerify:
    def test_fixed_lucky_sweep_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "outcomes-fixed-I", "--n-max", "4")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 5
        assert all(line.startswith("PASS") for line in lines[:-1])
        assert lines[-1] == "summary: 4 instance(s), 4 passed, 0 failed"

    def test_upf_k_reports_values(self, capsys):
        code, out, _ = run(capsys, "verify", "upf-k", "--u", "1,1,3")
        assert code == 0
        assert "k=2:4" in out and "k=3:3" in out

    def test_mn_k_flags_binomial_variants(self, capsys):
        code, out, _ = run(capsys, "verify", "outcomes-mn-k", "--m", "2", "--n", "3")
        assert code == 0
        assert "statement matches" in out
        assert "variant=7" in out

    def test_cap_violation_aborts_before_enumeration(self, capsys):
        code, out, err = run(
            capsys, "verify", "outcomes-fixed-I", "--n-max", "8", "--cap", "1000"
        )
        assert code == 2
        assert out == ""
        assert "cap" in err


class TestTable:
    def test_prefix_lucky_rows_match_closed_form(self, capsys):
        code, out, _ = run(
            capsys, "table", "--formula", "c1", "--n", "1..6", "--I-prefix-k", "1..3"
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["n", "prefix_k", "I", "value"]
        from math import factorial

        for n_, k_, lucky, value in rows[1:]:
            n, k = int(n_), int(k_)
            assert lucky == ",".join(str(x) for x in range(1, k + 1))
            assert int(value) == factorial(k) * (k + 1) ** (n - k)

    def test_const_jump_csv(self, capsys):
        code, out, _ = run(
            capsys, "table", "--formula", "upf-const-jump",
            "--i", "1", "--j", "3", "--n", "1..5", "--k", "all",
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["i", "j", "n", "k", "value"]
        assert ["1", "3", "3", "2", "4"] in rows

    def test_with_oracle_adds_match_columns(self, capsys):
        code, out, _ = run(
            capsys, "table", "--formula", "upf-k", "--u", "1,1,3", "--k", "all",
            "--with-oracle",
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["u", "k", "value", "oracle", "match"]
        assert all(row[-1] == "true" for row in rows[1:])

    def test_empty_range_gives_header_only(self, capsys):
        code, out, _ = run(
            capsys, "table", "--formula", "c1", "--n", "2..1", "--I-prefix-k", "1..2"
        )
        assert code == 0
        assert out == "n,prefix_k,I,value\n"

    def test_json_round_trips(self, capsys):
        code, out, _ = run(
            capsys, "table", "--formula", "upf-const-jump",
            "--i", "1", "--j", "3", "--n", "3..3", "--k", "all", "--json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["columns"] == ["i", "j", "n", "k", "value"]
        assert doc["rows"] == [[1, 3, 3, 0, 0], [1, 3, 3, 1, 0],
                               [1, 3, 3, 2, 4], [1, 3, 3, 3, 3]]
        assert json.loads(json.dumps(doc)) == doc

    def test_unknown_formula(self, capsys):
        code, _, err = run(capsys, "table", "--formula", "nope", "--n", "1..2")
        assert code == 2


class TestEntryPoints:
    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
        capsys.readouterr()

    def test_no_command_errors(self, capsys):
        assert main([]) == 2
        capsys.readouterr()
