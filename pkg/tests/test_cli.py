import pytest

from circwords.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_exponent(capsys):
    code, out, _ = run(capsys, "exponent", "0120")
    assert code == 0
    assert out.strip() == "length=4 period=3 exponent=4/3"


def test_exponent_rejects_empty_and_garbage(capsys):
    assert run(capsys, "exponent", "")[0] == 2
    assert run(capsys, "exponent", "xy")[0] == 2


def test_check_circular_free(capsys):
    code, out, _ = run(capsys, "check", "--r", "2", "--circular", "012021")
    assert code == 0
    assert out.startswith("FREE")


def test_check_circular_square(capsys):
    code, out, _ = run(capsys, "check", "--r", "2", "--circular", "0120")
    assert code == 1
    assert "witness=00" in out
    assert "exponent=2/1" in out


def test_check_linear_strict(capsys):
    code, out, _ = run(capsys, "check", "--r", "7/5", "--strict", "0120")
    assert code == 0


def test_check_rejects_decimals_and_bad_rationals(capsys):
    assert run(capsys, "check", "--r", "1.5", "01")[0] == 2
    assert run(capsys, "check", "--r", "7/0", "01")[0] == 2
    assert run(capsys, "check", "--r", "1", "01")[0] == 2


def test_check_reads_word_from_file(capsys, tmp_path):
    path = tmp_path / "w.txt"
    path.write_text("012021\n")
    code, out, _ = run(capsys, "check", "--r", "2", "--circular", f"@{path}")
    assert code == 0


def test_gamma(capsys):
    code, out, _ = run(capsys, "gamma", "--n", "3", "011")
    assert (code, out.strip()) == (0, "231")


def test_gamma_large_alphabet_uses_dots(capsys):
    code, out, _ = run(capsys, "gamma", "--n", "12", "01")
    assert code == 0
    assert "." in out


def test_beta(capsys):
    code, out, _ = run(capsys, "beta", "--length", "9")
    assert (code, out.strip()) == (0, "121122121")
    code, out, _ = run(capsys, "beta", "--bracket", "4")
    assert (code, out.strip()) == (0, "start=2 factor=2112")


def test_construct_precondition(capsys):
    assert run(capsys, "construct", "--n", "44", "--t", "1")[0] == 2


def test_construct_and_certify_round_trip(capsys, tmp_path):
    path = tmp_path / "c.cert"
    code, out, _ = run(capsys, "construct", "--n", "45", "--t", "1", "--out", str(path))
    assert code == 0
    assert "status: PASS" in out
    code, out, _ = run(capsys, "certify", str(path))
    assert code == 0
    assert "VALID" in out


def test_certify_detects_alteration(capsys, tmp_path):
    path = tmp_path / "c.cert"
    run(capsys, "construct", "--n", "45", "--t", "1", "--out", str(path))
    text = path.read_text()
    lines = text.splitlines()
    for i, ln in enumerate(lines):
        if ln.startswith("word: "):
            lines[i] = "word: " + "1" * (len(ln) - len("word: "))
    path.write_text("\n".join(lines) + "\n")
    assert run(capsys, "certify", str(path))[0] == 1


def test_certify_truncated_is_usage_error(capsys, tmp_path):
    path = tmp_path / "c.cert"
    run(capsys, "construct", "--n", "45", "--t", "1", "--out", str(path))
    text = path.read_text()
    path.write_text(text[: len(text) // 2])
    assert run(capsys, "certify", str(path))[0] == 2
    assert run(capsys, "certify", str(tmp_path / "missing.cert"))[0] == 2


def test_search_single_and_range(capsys, tmp_path):
    code, out, _ = run(capsys, "search", "--n", "3", "--r", "2", "--circular",
                       "--length", "6")
    assert code == 0
    assert "status=witness" in out

    code, out, _ = run(capsys, "search", "--n", "2", "--r", "2", "--circular",
                       "--length", "4")
    assert code == 1

    code, out, _ = run(capsys, "search", "--n", "3", "--r", "2", "--circular",
                       "--lengths", "3..6")
    assert code == 1  # refuted lengths in the range
    assert out.count("length=") == 4


def test_search_budget_exit_code(capsys):
    code, out, _ = run(capsys, "search", "--n", "3", "--r", "2", "--circular",
                       "--length", "12", "--budget", "5")
    assert code == 3
    assert "exhausted" in out


def test_search_emits_certificates(capsys, tmp_path):
    path = tmp_path / "w.cert"
    run(capsys, "search", "--n", "3", "--r", "2", "--circular", "--length", "6",
        "--out", str(path))
    code, out, _ = run(capsys, "certify", str(path))
    assert code == 0
    assert "search-witness: VALID" in out


def test_search_range_certificates_all_certify(capsys, tmp_path):
    path = tmp_path / "table.cert"
    run(capsys, "search", "--n", "3", "--r", "2", "--circular", "--lengths",
        "3..8", "--out", str(path))
    code, out, _ = run(capsys, "certify", str(path))
    assert code == 0
    assert out.count("VALID") == 6


def test_usage_errors(capsys):
    assert run(capsys, "search", "--n", "3", "--r", "2", "--lengths", "3-5")[0] == 2
    assert main(["unknown-command"]) == 2
    assert main([]) == 2
