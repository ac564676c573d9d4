import json

from wythoff_variants.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_grundy_csv(capsys):
    code, out, _ = run_cli(capsys, "grundy", "--family", "wk", "--k", "1",
                           "--n", "5", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "a,b,g"
    assert len(lines) == 1 + 21
    assert "2,2,1" in lines[1:]
    assert out.endswith("\n")


def test_grundy_zero_bound(capsys):
    code, out, _ = run_cli(capsys, "grundy", "--family", "tinf", "--n", "0")
    assert code == 0
    assert out.splitlines() == ["a,b,g", "0,0,0"]


def test_grundy_rejects_bad_ruleset(capsys):
    code, _, err = run_cli(capsys, "grundy", "--family", "wkl",
                           "--k", "5", "--l", "3", "--n", "10")
    assert code == 2
    assert "k <= l" in err


def test_grundy_json(capsys):
    code, out, _ = run_cli(capsys, "grundy", "--family", "wk", "--k", "1",
                           "--n", "5", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 21
    assert [2, 2, 1] in rows


def test_grundy_csv_round_trips(capsys):
    code, out, _ = run_cli(capsys, "grundy", "--family", "tk", "--k", "1", "--n", "8")
    assert code == 0
    lines = out.splitlines()
    reserialized = "\n".join([lines[0]] +
                             [",".join(str(int(x)) for x in ln.split(","))
                              for ln in lines[1:]]) + "\n"
    assert reserialized == out


def test_moves_subcommand(capsys):
    code, out, _ = run_cli(capsys, "moves", "--family", "tk", "--k", "1",
                           "--a", "5", "--b", "10")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "kind,s,a,b"
    assert "diagonal,3,2,7" in lines
    assert "diagonal,4,1,6" not in lines
    # order of the pair on the command line does not matter
    code2, out2, _ = run_cli(capsys, "moves", "--family", "tk", "--k", "1",
                             "--a", "10", "--b", "5")
    assert out2 == out


def test_beatty_subcommand(capsys):
    code, out, _ = run_cli(capsys, "beatty", "--n", "4")
    assert code == 0
    assert out.splitlines() == ["n,a,b", "0,0,0", "1,1,2", "2,3,5", "3,4,7", "4,6,10"]


def test_pvs_formula_sets(capsys):
    code, out, _ = run_cli(capsys, "pvs", "--formula", "p_wythoff", "--n", "13")
    assert code == 0
    assert out.splitlines()[-1] == "8,13"

    code, out, _ = run_cli(capsys, "pvs", "--formula", "p_wk", "--k", "1",
                           "--n", "8", "--format", "json")
    assert code == 0
    assert json.loads(out) == [[0, 0], [1, 1], [2, 3], [4, 6], [5, 8]]


def test_pvs_shift_uses_engine_base(capsys):
    code, out, _ = run_cli(capsys, "pvs", "--formula", "s1_wk_shift",
                           "--k", "3", "--n", "20")
    assert code == 0
    code2, out2, _ = run_cli(capsys, "pvs", "--formula", "s1_wk_odd",
                             "--k", "3", "--n", "20")
    assert out == out2

    code, _, err = run_cli(capsys, "pvs", "--formula", "s1_wk_shift",
                           "--k", "1", "--n", "20")
    assert code == 2 and "k >= 2" in err


def test_pvs_missing_parameter(capsys):
    code, _, err = run_cli(capsys, "pvs", "--formula", "p_wk", "--n", "10")
    assert code == 2
    assert "needs k" in err


def test_verify_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--theorem", "thm3", "--k", "0",
                           "--n", "80")
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "verified"
    assert report["subject"] == "thm3"
    assert "elapsed_ms" in report

    code, out, _ = run_cli(capsys, "verify", "--theorem", "thm7", "--k", "2",
                           "--l", "2", "--n", "60")
    assert code == 0

    code, out, _ = run_cli(capsys, "verify", "--theorem", "thm6", "--k", "0",
                           "--n", "60")
    assert code == 0

    code, out, _ = run_cli(capsys, "verify", "--theorem", "thm8", "--k", "inf",
                           "--n", "40")
    assert code == 0

    code, _, err = run_cli(capsys, "verify", "--theorem", "thm7", "--k", "3",
                           "--l", "1", "--n", "40")
    assert code == 2


def test_conjecture_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "conjecture", "--id", "c3", "--k", "2",
                           "--l", "4", "--n", "50")
    assert code == 0
    assert json.loads(out)["status"] == "consistent-up-to-bound"

    code, _, _ = run_cli(capsys, "conjecture", "--id", "c2a", "--k", "0", "--n", "50")
    assert code == 0

    code, _, err = run_cli(capsys, "conjecture", "--id", "c1", "--k", "3",
                           "--kprime", "2", "--l", "4")
    assert code == 2


def test_closeness_both_parities(capsys):
    code, out, _ = run_cli(capsys, "closeness", "--k", "0", "--l", "3", "--n", "60")
    assert code == 0
    assert json.loads(out)["subject"] == "closeness"

    code, out, _ = run_cli(capsys, "closeness", "--k", "0", "--l", "2", "--n", "60")
    assert code == 0
    assert json.loads(out)["subject"] == "s1-coincidence"


def test_paper_values_subcommand(capsys):
    code, out, _ = run_cli(capsys, "paper-values")
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "verified"
    assert len(report["detail"]["checks"]) == 3


def test_output_file(tmp_path, capsys):
    target = tmp_path / "rows.csv"
    code, out, _ = run_cli(capsys, "beatty", "--n", "2", "--output", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == "n,a,b\n0,0,0\n1,1,2\n2,3,5\n"


def test_cache_dir_flag_and_env(tmp_path, capsys, monkeypatch):
    cache_dir = tmp_path / "cache"
    code, out1, _ = run_cli(capsys, "grundy", "--family", "wk", "--k", "1",
                            "--n", "6", "--cache-dir", str(cache_dir))
    assert code == 0
    assert (cache_dir / "wk_k1_N6.gtable").exists()
    code, out2, _ = run_cli(capsys, "grundy", "--family", "wk", "--k", "1",
                            "--n", "6", "--cache-dir", str(cache_dir))
    assert out2 == out1  # served from disk, byte-identical

    monkeypatch.setenv("WYTHOFF_CACHE_DIR", str(cache_dir))
    code, _, _ = run_cli(capsys, "verify", "--theorem", "thm8", "--k", "0",
                         "--n", "20")
    assert code == 0
    assert (cache_dir / "tk_k0_N20.gtable").exists()


def test_usage_errors_exit_two(capsys):
    assert run_cli(capsys, "nosuchcommand")[0] == 2
    assert run_cli(capsys, "grundy", "--family", "bogus", "--n", "3")[0] == 2
    assert run_cli(capsys)[0] == 2


def _feed_inputs(monkeypatch, lines):
    feed = iter(lines)

    def fake_input(prompt=""):
        print(prompt, end="")
        try:
            return next(feed)
        except StopIteration:
            raise EOFError

    monkeypatch.setattr("builtins.input", fake_input)


def test_play_engine_wins_from_p_position(capsys, monkeypatch):
    _feed_inputs(monkeypatch, ["0 2"])
    code = main(["play", "--family", "wythoff", "--a", "1", "--b", "2"])
    out = capsys.readouterr().out
    assert code == 0
    assert "P-position" in out
    assert "engine moves to (0,0)" in out
    assert "engine wins" in out


def test_play_human_can_finish(capsys, monkeypatch):
    _feed_inputs(monkeypatch, ["0 0"])
    code = main(["play", "--family", "wythoff", "--a", "2", "--b", "2"])
    out = capsys.readouterr().out
    assert code == 0
    assert "N-position" in out
    assert "you win" in out


def test_play_illegal_move_reprompts(capsys, monkeypatch):
    _feed_inputs(monkeypatch, ["2 7", "what", "q"])
    code = main(["play", "--family", "tk", "--k", "0", "--a", "5", "--b", "10"])
    out = capsys.readouterr().out
    assert code == 0
    assert "illegal move" in out
    assert "ratio" in out
    assert "bye" in out


def test_play_terminal_start(capsys, monkeypatch):
    _feed_inputs(monkeypatch, [])
    code = main(["play", "--family", "tk", "--k", "0", "--a", "0", "--b", "0"])
    out = capsys.readouterr().out
    assert code == 0
    assert "no moves; previous player wins" in out
