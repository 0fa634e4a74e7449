"""Command-line behaviour: records, formats, exit codes, config."""

import json

import pytest

from relprime import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def json_lines(out):
    return [json.loads(line) for line in out.splitlines()]


def test_count_f(capsys):
    code, out, err = run(capsys, "count", "f", "--set", "1..4")
    assert code == 0
    (record,) = json_lines(out)
    assert record["function"] == "f"
    assert record["spec"] == "1..4"
    assert record["result"] == "11"
    assert "elapsed_ms" in record


def test_count_phi_union(capsys):
    code, out, _ = run(capsys, "count", "phi", "--set", "1..2 + 5..6", "--n", "6")
    assert code == 0
    assert json_lines(out)[0]["result"] == "12"


def test_count_tuple_functions(capsys):
    code, out, _ = run(capsys, "count", "T", "--n", "4", "--k", "2", "--m", "6")
    assert code == 0
    record = json_lines(out)[0]
    assert record["result"] == "5"
    assert (record["n"], record["k"], record["m"]) == (4, 2, 6)


def test_json_round_trips_byte_identically(capsys):
    _, out, _ = run(capsys, "count", "phik", "--set", "ap(3,4,6)", "--n", "30", "--k", "2")
    line = out.splitlines()[0]
    assert json.dumps(json.loads(line), separators=(",", ":")) == line


def test_result_is_a_decimal_string(capsys):
    _, out, _ = run(capsys, "count", "f", "--set", "1..300")
    record = json_lines(out)[0]
    assert isinstance(record["result"], str)
    assert int(record["result"]) > 2**290


def test_tsv_output(capsys):
    code, out, _ = run(capsys, "count", "T", "--n", "4", "--k", "2", "--m", "6", "--tsv")
    assert code == 0
    assert out == "T\t\t4\t2\t6\t5\n"
    _, out, _ = run(capsys, "count", "f", "--set", "1..4", "--tsv")
    assert out == "f\t1..4\t\t\t\t11\n"


def test_verify_flag_and_subcommand(capsys):
    code, out, _ = run(capsys, "verify", "f", "--set", "ap(3,4,5)")
    assert code == 0
    assert json_lines(out)[0]["verified"] is True
    code, out, _ = run(capsys, "count", "G", "--n", "8", "--k", "3", "--verify")
    assert code == 0
    assert json_lines(out)[0]["verified"] is True
    code, out, _ = run(capsys, "verify", "phi", "--set", "1..18", "--n", "30")
    assert code == 0
    assert json_lines(out)[0]["verified"] is True


def test_verify_mismatch_exits_6(capsys, monkeypatch):
    monkeypatch.setattr(cli.oracle, "brute_f", lambda X, budget=None: 999)
    code, out, err = run(capsys, "verify", "f", "--set", "1..4")
    assert code == 6
    assert json_lines(out)[0]["verified"] is False
    assert "disagrees" in err


def test_usage_errors_exit_2(capsys):
    cases = [
        ("count", "f"),  # missing --set
        ("count", "f", "--set", "1..4", "--m", "6"),  # stray flag
        ("count", "T", "--n", "4", "--k", "2"),  # missing --m
        ("count", "T", "--set", "1..4", "--n", "4", "--k", "2", "--m", "6"),
        ("count", "f", "--set", "1..oops"),
        ("seq", "f", "10..1"),
        ("seq", "f", "abc"),
        ("seq", "f", "1..5", "--k", "2"),
        ("seq", "G", "1..5"),  # missing --k
        ("seq", "f", "1..5", "--check-mod3"),
        ("seq", "phi", "3..5", "--check-nonsquare"),
    ]
    for argv in cases:
        code, _, err = run(capsys, *argv)
        assert code == 2, argv
        assert err.startswith("relprime:"), argv


def test_bad_flag_values_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["count", "phi", "--set", "1..4", "--n", "zero"])
    assert info.value.code == 2
    capsys.readouterr()


def test_overlap_exits_3(capsys):
    code, _, err = run(capsys, "count", "f", "--set", "1..5 + 3..4")
    assert code == 3
    assert "both contain" in err


def test_budget_exits_4(capsys):
    code, _, err = run(capsys, "verify", "f", "--set", "1..30", "--budget-subsets", "20")
    assert code == 4
    assert "budget" in err
    code, _, _ = run(capsys, "verify", "S", "--n", "200", "--k", "4", "--m", "6")
    assert code == 4


def test_budget_env_and_flag_precedence(capsys, monkeypatch):
    monkeypatch.setenv(cli.ENV_BUDGET_SUBSETS, "3")
    code, _, _ = run(capsys, "verify", "f", "--set", "1..5")
    assert code == 4
    code, out, _ = run(capsys, "verify", "f", "--set", "1..5", "--budget-subsets", "10")
    assert code == 0
    assert json_lines(out)[0]["verified"] is True


def test_seq_f_values(capsys):
    code, out, _ = run(capsys, "seq", "f", "1..10")
    assert code == 0
    records = json_lines(out)
    assert [r["n"] for r in records] == list(range(1, 11))
    assert [int(r["result"]) for r in records] == [1, 2, 5, 11, 26, 53, 116, 236, 488, 983]
    assert all(r["spec"] == f"1..{r['n']}" for r in records)


def test_seq_checks_pass(capsys):
    code, _, _ = run(capsys, "seq", "phi", "3..20", "--check-mod3")
    assert code == 0
    code, _, _ = run(capsys, "seq", "f", "2..25", "--check-nonsquare")
    assert code == 0


def test_seq_check_failure_exits_5(capsys, monkeypatch):
    monkeypatch.setattr(cli.counting, "phi", lambda X, n: 7)
    code, _, err = run(capsys, "seq", "phi", "3..5", "--check-mod3")
    assert code == 5
    assert "phi(3) = 7" in err
    monkeypatch.setattr(cli.counting, "f", lambda X: 49)
    code, _, err = run(capsys, "seq", "f", "2..4", "--check-nonsquare")
    assert code == 5
    assert "perfect square" in err


def test_seq_tuple_function(capsys):
    code, out, _ = run(capsys, "seq", "S", "1..6", "--k", "2", "--m", "6")
    assert code == 0
    records = json_lines(out)
    assert [r["n"] for r in records] == list(range(1, 7))
    assert all(r["k"] == 2 and r["m"] == 6 for r in records)
    from relprime import s_count

    assert [int(r["result"]) for r in records] == [s_count(n, 2, 6) for n in range(1, 7)]


def test_config_file(tmp_path, capsys):
    config = tmp_path / "settings.conf"
    config.write_text("# defaults\noutput = tsv\nbudget_subsets = 5\n")
    code, out, _ = run(capsys, "count", "f", "--set", "1..4", "--config", str(config))
    assert code == 0
    assert out.startswith("f\t1..4\t")
    code, _, _ = run(capsys, "verify", "f", "--set", "1..9", "--config", str(config))
    assert code == 4
    # flags beat config: json again, budget widened
    code, out, _ = run(
        capsys, "verify", "f", "--set", "1..9", "--config", str(config),
        "--json", "--budget-subsets", "12",
    )
    assert code == 0
    assert json_lines(out)[0]["verified"] is True


def test_config_errors(tmp_path, capsys):
    bad = tmp_path / "bad.conf"
    bad.write_text("colour = blue\n")
    code, _, err = run(capsys, "count", "f", "--set", "1..4", "--config", str(bad))
    assert code == 2
    assert "unknown key" in err
    code, _, _ = run(capsys, "count", "f", "--set", "1..4", "--config", str(tmp_path / "missing.conf"))
    assert code == 2


def test_seq_records_stream_in_order(capsys):
    _, out, _ = run(capsys, "seq", "G", "1..8", "--k", "3", "--tsv")
    ns = [int(line.split("\t")[2]) for line in out.splitlines()]
    assert ns == sorted(ns) == list(range(1, 9))
