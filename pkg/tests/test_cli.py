import json
import signal
import socket
import subprocess
import sys
import time
import urllib.request

import pytest

from lexis.cli import main

DICT = """cat
cut#3
car
scat
dome
"""


@pytest.fixture()
def dict_file(tmp_path):
    p = tmp_path / "words.txt"
    p.write_text(DICT, encoding="utf-8")
    return str(p)


def run_main(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_then_query_matches_memory(dict_file, tmp_path, capsys):
    out = str(tmp_path / "words.lexis")
    code, _, err = run_main(["build", "--dict", dict_file, "--out", out, "--k2"], capsys)
    assert code == 0 and "indexed 5 words" in err
    code, stdout, _ = run_main(
        ["query", "cxt", "--index", out, "--method", "trt_ci"], capsys)
    assert code == 0
    assert stdout.split() == ["cat", "cut"]
    code, stdout2, _ = run_main(
        ["query", "cxt", "--dict", dict_file, "--method", "trt_ci"], capsys)
    assert code == 0 and stdout2 == stdout
    code, stdout3, _ = run_main(
        ["query", "cxt", "--index", out, "--method", "hash_k2"], capsys)
    assert code == 0 and set(stdout3.split()) >= {"cat", "cut"}


def test_query_all_methods_agree(dict_file, capsys):
    code, stdout, _ = run_main(
        ["query", "cat", "--dict", dict_file, "--all"], capsys)
    assert code == 0
    assert stdout.split() == ["cat", "cut", "car", "scat"] or \
        stdout.split() == sorted(["cat", "cut", "car", "scat"])


def test_query_complete(dict_file, capsys):
    code, stdout, _ = run_main(
        ["query", "ca", "--dict", dict_file, "--method", "complete", "-k", "2"],
        capsys)
    assert code == 0
    lines = stdout.strip().splitlines()
    assert len(lines) <= 2
    # exact-prefix group precedes the higher-scored approximate "cut"
    assert [line.split("\t")[0] for line in lines] == ["car", "cat"]
    code, stdout, _ = run_main(
        ["query", "cu", "--dict", dict_file, "--method", "complete", "-k", "3"],
        capsys)
    assert stdout.splitlines()[0].split("\t") == ["cut", "3", "1"]


def test_complete_only_flags_rejected(dict_file, capsys):
    code, _, err = run_main(
        ["query", "ca", "--dict", dict_file, "--method", "hash_k1", "-k", "5"],
        capsys)
    assert code == 2
    assert "complete" in err


def test_unknown_method_is_usage_error(dict_file):
    with pytest.raises(SystemExit) as exc:
        main(["query", "ca", "--dict", dict_file, "--method", "bogus"])
    assert exc.value.code == 2


def test_empty_dict_builds_valid_index(tmp_path, capsys):
    p = tmp_path / "empty.txt"
    p.write_text("", encoding="utf-8")
    out = str(tmp_path / "e.lexis")
    code, _, _ = run_main(["build", "--dict", str(p), "--out", out], capsys)
    assert code == 0
    code, stdout, _ = run_main(
        ["query", "x", "--index", out, "--method", "hash_k1"], capsys)
    assert code == 0 and stdout.strip() == ""


def test_malformed_score_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("word#\n", encoding="utf-8")
    code, _, err = run_main(
        ["build", "--dict", str(p), "--out", str(tmp_path / "o")], capsys)
    assert code == 2
    assert "bad dictionary entry" in err


def test_missing_dict_exit_1(tmp_path, capsys):
    code, _, err = run_main(
        ["build", "--dict", str(tmp_path / "nope.txt"),
         "--out", str(tmp_path / "o")], capsys)
    assert code == 1


def test_bench_csv_and_determinism(dict_file, capsys):
    argv = ["bench", "--dict", dict_file, "--method", "trt_ci",
            "--random", "20", "--errors", "1", "--seed", "9"]
    code, out1, _ = run_main(argv, capsys)
    assert code == 0
    lines = out1.strip().splitlines()
    assert lines[0] == "method,query_len,mean_us,p99_us"
    assert all(line.startswith("trt_ci,") for line in lines[1:])
    code, out2, _ = run_main(argv, capsys)
    # same seed -> same query set -> same row structure (times vary)
    keys1 = [line.split(",")[:2] for line in out1.splitlines()]
    keys2 = [line.split(",")[:2] for line in out2.splitlines()]
    assert keys1 == keys2


def test_bench_needs_query_source(dict_file, capsys):
    code, _, err = run_main(["bench", "--dict", dict_file], capsys)
    assert code == 2


def test_query_json_format(dict_file, capsys):
    code, stdout, _ = run_main(
        ["query", "cat", "--dict", dict_file, "--method", "hash_k1",
         "--format", "json"], capsys)
    assert code == 0
    rows = json.loads(stdout)
    assert {"word": "cat"} in rows


def test_serve_subprocess_health_and_sigint(dict_file):
    with socket.socket() as s:
        s.bind(("127.0.0.1", 0))
        port = s.getsockname()[1]
    proc = subprocess.Popen(
        [sys.executable, "-m", "lexis.cli", "serve", "--dict", dict_file,
         "--port", str(port)],
        stdout=subprocess.PIPE, stderr=subprocess.PIPE)
    try:
        deadline = time.time() + 15
        body = None
        while time.time() < deadline:
            try:
                with urllib.request.urlopen(
                        f"http://127.0.0.1:{port}/health", timeout=2) as resp:
                    body = json.loads(resp.read())
                    break
            except OSError:
                time.sleep(0.1)
        assert body is not None and body["status"] == "ok"
        proc.send_signal(signal.SIGINT)
        assert proc.wait(timeout=10) == 0
    finally:
        if proc.poll() is None:
            proc.kill()


def test_serve_port_busy_exit_1(dict_file):
    with socket.socket() as s:
        s.bind(("127.0.0.1", 0))
        s.listen(1)
        port = s.getsockname()[1]
        code = main(["serve", "--dict", dict_file, "--port", str(port)])
        assert code == 1


def test_serve_bad_dict_exit_1(tmp_path):
    code = main(["serve", "--dict", str(tmp_path / "missing.txt")])
    assert code == 1


def test_lexis_dict_env_var(dict_file, capsys, monkeypatch):
    monkeypatch.setenv("LEXIS_DICT", dict_file)
    code, stdout, _ = run_main(["query", "cxt", "--method", "trt_ci"], capsys)
    assert code == 0
    assert stdout.split() == ["cat", "cut"]
