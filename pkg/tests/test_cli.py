"""Command-line surface: formats, exit codes, diagnostics, composability."""

import io
import json
import subprocess
import sys

import pytest

from dupcode import analysis
from dupcode.cli import (
    EXIT_GUARD,
    EXIT_MALFORMED,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFICATION,
    SCHEMA,
    main,
)
from dupcode.core import VerificationError


def run_cli(*argv: str, stdin: str | None = None, monkeypatch=None, capsys=None):
    """Invoke main() in-process; returns (exit_code, stdout, stderr)."""
    if stdin is not None:
        assert monkeypatch is not None
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_proc(*argv: str, stdin: str | None = None):
    return subprocess.run(
        [sys.executable, "-m", "dupcode", *argv],
        input=stdin,
        capture_output=True,
        text=True,
    )


def test_encode_anchor(capsys):
    code, out, _ = run_cli("encode", "--q", "16", "--n", "16", "--word", "0000000000abcdef", capsys=capsys)
    assert code == EXIT_OK
    assert out == "00000abcdef001251\n"


def test_decode_anchor(capsys):
    code, out, _ = run_cli("decode", "--q", "16", "--n", "16", "--word", "00000abcdef001251", capsys=capsys)
    assert code == EXIT_OK
    assert out == "0000000000abcdef\n"


def test_correct_example(capsys):
    code, out, err = run_cli("correct", "--q", "4", "--n", "7", "--word", "0012123312", capsys=capsys)
    assert code == EXIT_OK
    assert out == "00123312\n"
    assert "position 3 (1-based)" in err  # removal offset 2, reported 1-based


def test_word_via_stdin_and_files(tmp_path, monkeypatch, capsys):
    code, out, _ = run_cli(
        "encode", "--q", "16", "--n", "16", stdin="0000000000abcdef\n", monkeypatch=monkeypatch, capsys=capsys
    )
    assert code == EXIT_OK and out.strip() == "00000abcdef001251"

    src = tmp_path / "msg.txt"
    dst = tmp_path / "code.txt"
    src.write_text("0000000000abcdef\n")
    code, out, _ = run_cli(
        "encode", "--q", "16", "--n", "16", "--in", str(src), "--out", str(dst), capsys=capsys
    )
    assert code == EXIT_OK and out == ""
    assert dst.read_text() == "00000abcdef001251\n"


def test_corrupt_explicit_and_json(capsys):
    code, out, err = run_cli(
        "corrupt", "--q", "4", "--n", "7", "--word", "00123312", "--i", "2", "--l", "2", capsys=capsys
    )
    assert code == EXIT_OK
    assert out == "0012123312\n"
    assert "duplicated 2 symbols at position 3 (1-based)" in err

    code, out, err = run_cli(
        "corrupt", "--q", "4", "--n", "7", "--word", "00123312", "--i", "2", "--l", "2", "--json", capsys=capsys
    )
    payload = json.loads(out)
    assert payload["schema"] == SCHEMA
    assert payload["word"] == "0012123312"
    assert (payload["i"], payload["l"]) == (2, 2)
    assert err == ""  # diagnostics live inside the JSON payload


def test_corrupt_requires_seed_or_pair(capsys):
    code, _, err = run_cli("corrupt", "--q", "16", "--n", "16", "--word", "0" * 17, capsys=capsys)
    assert code == EXIT_USAGE
    assert "error USAGE" in err
    code, _, err = run_cli(
        "corrupt", "--q", "16", "--n", "16", "--word", "0" * 17, "--i", "3", capsys=capsys
    )
    assert code == EXIT_USAGE


def test_corrupt_is_byte_deterministic():
    args = ("corrupt", "--q", "16", "--n", "16", "--seed", "42")
    word = "00000abcdef001251\n"
    a = run_proc(*args, stdin=word)
    b = run_proc(*args, stdin=word)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    assert a.stderr == b.stderr


def test_pipe_composability():
    msg = "0000000000abcdef"
    enc = run_proc("encode", "--q", "16", "--n", "16", "--word", msg)
    cor = run_proc("corrupt", "--q", "16", "--n", "16", "--seed", "3", stdin=enc.stdout)
    fix = run_proc("correct", "--q", "16", "--n", "16", stdin=cor.stdout)
    dec = run_proc("decode", "--q", "16", "--n", "16", stdin=fix.stdout)
    assert dec.returncode == 0
    assert dec.stdout.strip() == msg
    assert len(cor.stdout.strip()) > len(enc.stdout.strip())


def test_malformed_codeword_exit(capsys):
    # trailing symbol is neither 0 nor 1
    code, _, err = run_cli("decode", "--q", "16", "--n", "16", "--word", "0123456789abcdef2", capsys=capsys)
    assert code == EXIT_MALFORMED
    assert "error MALFORMED" in err


def test_malformed_word_exit(capsys):
    code, _, err = run_cli("encode", "--q", "2", "--n", "4", "--word", "01x1", capsys=capsys)
    assert code == EXIT_MALFORMED


def test_usage_exit_on_bad_params(capsys):
    code, _, err = run_cli("encode", "--q", "1", "--n", "4", "--word", "0000", capsys=capsys)
    assert code == EXIT_USAGE
    assert "error USAGE" in err


def test_missing_flags_exit_two():
    proc = run_proc("encode", "--q", "16")
    assert proc.returncode == 2
    proc = run_proc("no-such-command")
    assert proc.returncode == 2


def test_guard_exit(capsys):
    code, _, err = run_cli("count-bad", "--q", "2", "--n", "30", "--K", "5", capsys=capsys)
    assert code == EXIT_GUARD
    assert "error GUARD" in err


def test_verification_exit(monkeypatch, capsys):
    def boom(*a, **kw):
        raise VerificationError("manufactured failure")

    monkeypatch.setattr(analysis, "roundtrip_suite", boom)
    code, _, err = run_cli(
        "roundtrip", "--q", "16", "--n", "16", "--trials", "1", "--seed", "0", capsys=capsys
    )
    assert code == EXIT_VERIFICATION
    assert "error VERIFICATION" in err


def test_count_bad_text_line(capsys):
    code, out, _ = run_cli("count-bad", "--q", "2", "--n", "3", "--K", "1", capsys=capsys)
    assert code == EXIT_OK
    assert out.strip() == "q=2 n=3 K=1 count=6 bound=24 holds=yes"


def test_enum_code0_list_and_json(capsys):
    code, out, _ = run_cli("enum-code0", "--q", "2", "--len", "3", "--K", "1", "--list", capsys=capsys)
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0].startswith("q=2 len=3 K=1 count=2")
    assert sorted(lines[1:]) == ["010", "101"]

    code, out, _ = run_cli("enum-code0", "--q", "2", "--len", "3", "--K", "1", "--list", "--json", capsys=capsys)
    payload = json.loads(out)
    assert payload["schema"] == SCHEMA
    assert payload["count"] == 2
    assert sorted(payload["words"]) == ["010", "101"]


def test_verify_ball_text(capsys):
    code, out, _ = run_cli("verify-ball", "--q", "2", "--n", "6", "--l", "1,2,3", capsys=capsys)
    assert code == EXIT_OK
    assert out.strip().endswith("disjoint: yes")


def test_roundtrip_json(capsys):
    code, out, _ = run_cli(
        "roundtrip", "--q", "16", "--n", "16", "--trials", "3", "--seed", "1", "--json", capsys=capsys
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["schema"] == SCHEMA
    assert payload["corruptions_checked"] == 9


def test_converse_json(capsys):
    code, out, _ = run_cli("converse", "--q", "2", "--n", "1024", "--c", "3", "--json", capsys=capsys)
    payload = json.loads(out)
    assert payload["eta_lower_bound"] == 2.0
    assert payload["exceeds_one"] is True


@pytest.mark.parametrize("pattern", ["zeros", "random", "adversarial"])
def test_bench_patterns(pattern, capsys):
    code, out, _ = run_cli(
        "bench", "--q", "4", "--n", "64", "--pattern", pattern, "--reps", "2", "--json", capsys=capsys
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["schema"] == SCHEMA
    assert set(payload) >= {"encode", "decode", "correct"}
    assert payload["encode"]["median_ms"] >= 0.0
