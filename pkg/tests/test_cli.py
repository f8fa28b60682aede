"""CLI behavior: exit codes, output formats, determinism, file artifacts."""

import json
import subprocess
import sys

import pytest

import rtrie.cli as cli
from rtrie.cli import main

NAMES = ["AMY", "ANN", "ANNA", "BOB", "KIM", "LIZ", "TOM"]


@pytest.fixture
def corpus(tmp_path):
    p = tmp_path / "names.txt"
    p.write_bytes(b"\n".join(s.encode() for s in NAMES) + b"\n")
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


class TestBuild:
    def test_summary_text(self, capsys, corpus):
        code, out, err = run(capsys, "build", "--input", corpus)
        assert code == 0
        assert "built 7 strings" in out
        assert "seed=42" in out

    def test_summary_json(self, capsys, corpus):
        code, out, _ = run(capsys, "build", "--input", corpus, "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["schema"] == 1
        assert doc["n"] == 7
        assert doc["duplicates"] == 0
        assert doc["seed"] == 42
        assert doc["r"] == 2**31 - 1

    def test_duplicates_counted(self, capsys, tmp_path):
        p = tmp_path / "dup.txt"
        p.write_bytes(b"x\nx\nx\n")
        code, out, _ = run(capsys, "build", "--input", str(p), "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["n"] == 1
        assert doc["duplicates"] == 2

    def test_empty_lines_skipped_with_warning(self, capsys, tmp_path):
        p = tmp_path / "gaps.txt"
        p.write_bytes(b"a\n\nb\r\n\r\n")
        code, out, err = run(capsys, "build", "--input", str(p), "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["n"] == 2
        assert doc["empty_lines"] == 2
        assert "empty lines" in err

    def test_empty_corpus_is_success_with_warning(self, capsys, tmp_path):
        p = tmp_path / "none.txt"
        p.write_bytes(b"")
        code, out, err = run(capsys, "build", "--input", str(p), "--format", "json")
        assert code == 0
        assert json.loads(out)["n"] == 0
        assert "no strings" in err

    def test_missing_file_names_the_path(self, capsys, tmp_path):
        gone = str(tmp_path / "nope.txt")
        code, _, err = run(capsys, "build", "--input", gone)
        assert code == 1
        assert "nope.txt" in err

    def test_crlf_corpus(self, capsys, tmp_path):
        p = tmp_path / "crlf.txt"
        p.write_bytes(b"AMY\r\nBOB\r\n")
        code, out, _ = run(capsys, "build", "--input", str(p), "--format", "json")
        assert code == 0
        assert json.loads(out)["n"] == 2


class TestQueryAndPrefix:
    def test_query_hit_exit_zero(self, capsys, corpus):
        code, out, _ = run(capsys, "query", "--input", corpus, "--query", "ANN")
        assert code == 0
        assert out.strip() == "found"

    def test_query_miss_exit_one(self, capsys, corpus):
        code, out, _ = run(capsys, "query", "--input", corpus, "--query", "AN")
        assert code == 1
        assert out.strip() == "not found"

    def test_query_json(self, capsys, corpus):
        code, out, _ = run(capsys, "query", "--input", corpus,
                           "--query", "BOB", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["found"] is True
        assert doc["query"] == "BOB"

    def test_empty_query_is_usage_error(self, capsys, corpus):
        code, _, err = run(capsys, "query", "--input", corpus, "--query", "")
        assert code == 2
        assert "nonempty" in err

    def test_prefix_lists_matches(self, capsys, corpus):
        code, out, _ = run(capsys, "prefix", "--input", corpus, "--prefix", "AN")
        assert code == 0
        assert out.splitlines() == ["ANN", "ANNA"]

    def test_empty_prefix_lists_everything_sorted(self, capsys, corpus):
        code, out, _ = run(capsys, "prefix", "--input", corpus)
        assert code == 0
        assert out.splitlines() == sorted(NAMES)

    def test_prefix_json(self, capsys, corpus):
        code, out, _ = run(capsys, "prefix", "--input", corpus,
                           "--prefix", "Z", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["count"] == 0
        assert doc["matches"] == []


class TestVerify:
    def test_valid_build_exits_zero(self, capsys, corpus):
        code, out, _ = run(capsys, "verify", "--input", corpus)
        assert code == 0
        assert "ok" in out

    def test_empty_tree_exits_zero(self, capsys, tmp_path):
        p = tmp_path / "none.txt"
        p.write_bytes(b"")
        code, _, _ = run(capsys, "verify", "--input", str(p))
        assert code == 0

    def test_corrupted_tree_exits_two_and_names_violation(self, capsys, corpus,
                                                          monkeypatch):
        real = cli.build_tree

        def corrupt(path, seed, r):
            t, summary = real(path, seed, r)
            t.root.prio += 1  # break priority consistency
            return t, summary

        monkeypatch.setattr(cli, "build_tree", corrupt)
        code, out, _ = run(capsys, "verify", "--input", corpus)
        assert code == 2
        assert "prio-consistency" in out

    def test_verify_json_payload(self, capsys, corpus):
        code, out, _ = run(capsys, "verify", "--input", corpus, "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["ok"] is True
        assert doc["violations"] == []
        assert doc["n"] == 7


class TestStats:
    def test_singleton_has_zero_sidesteps(self, capsys, tmp_path):
        p = tmp_path / "one.txt"
        p.write_bytes(b"solo\n")
        code, out, _ = run(capsys, "stats", "--input", str(p), "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["n"] == 1
        assert doc["max_sidesteps"] == 0

    def test_json_round_trips(self, capsys, corpus):
        code, out, _ = run(capsys, "stats", "--input", corpus, "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert {"schema", "command", "seed", "r", "n", "max_sidesteps",
                "mean_sidesteps"} <= set(doc)

    def test_csv_rows(self, capsys, corpus, tmp_path):
        csv_path = str(tmp_path / "prof.csv")
        code, out, _ = run(capsys, "stats", "--input", corpus, "--csv", csv_path,
                           "--format", "json")
        assert code == 0
        assert json.loads(out)["csv"] == csv_path
        lines = open(csv_path).read().strip().splitlines()
        assert lines[0] == "key,length,sidesteps,depth"
        assert len(lines) == 1 + 7

    def test_plot_written(self, capsys, corpus, tmp_path):
        png = tmp_path / "prof.png"
        code, _, _ = run(capsys, "stats", "--input", corpus, "--plot", str(png))
        assert code == 0
        blob = png.read_bytes()
        assert blob[:4] == b"\x89PNG"

    def test_text_report_echoes_seed_and_r(self, capsys, corpus):
        code, out, _ = run(capsys, "stats", "--input", corpus, "--seed", "9")
        assert code == 0
        assert "seed: 9" in out
        assert "r: 2147483647" in out


class TestBench:
    def test_zero_count_zeroed_report(self, capsys):
        code, out, _ = run(capsys, "bench", "--count", "0", "--runs", "1",
                           "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert all(p["ops"] == 0 for p in doc["phases"])
        assert doc["insert_rotations"] == 0

    def test_small_bench_json(self, capsys):
        code, out, _ = run(capsys, "bench", "--count", "50", "--alpha", "4",
                           "--len-min", "1", "--len-max", "6", "--runs", "1",
                           "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["count"] == 50
        assert doc["insert_bound_ok"] is True
        assert doc["delete_bound_ok"] is True
        assert [p["name"] for p in doc["phases"]] == \
            ["insert", "search_hit", "search_miss", "delete"]

    def test_bench_csv_and_plot(self, capsys, tmp_path):
        csv_path = tmp_path / "bench.csv"
        png = tmp_path / "bench.png"
        code, _, _ = run(capsys, "bench", "--count", "30", "--runs", "1",
                         "--csv", str(csv_path), "--plot", str(png))
        assert code == 0
        lines = csv_path.read_text().strip().splitlines()
        assert lines[0] == "phase,ops,seconds,ops_per_sec"
        assert len(lines) == 5
        assert png.read_bytes()[:4] == b"\x89PNG"

    def test_infeasible_workload_is_usage_error(self, capsys):
        code, _, err = run(capsys, "bench", "--count", "100", "--alpha", "2",
                           "--len-min", "1", "--len-max", "2")
        assert code == 2
        assert "distinct" in err


class TestExportDot:
    def test_empty_tree_has_header_and_no_nodes(self, capsys, tmp_path):
        p = tmp_path / "none.txt"
        p.write_bytes(b"")
        code, out, _ = run(capsys, "export-dot", "--input", str(p))
        assert code == 0
        assert out.startswith("digraph rtrie {")
        assert "label=" not in out

    def test_single_two_char_string(self, capsys, tmp_path):
        p = tmp_path / "al.txt"
        p.write_bytes(b"AL\n")
        code, out, _ = run(capsys, "export-dot", "--input", str(p))
        assert code == 0
        assert out.count("[label=") == 2 + 1  # two nodes, one M edge
        assert '-> n1 [label="M"]' in out
        assert "peripheries=2" in out  # the terminal L node

    def test_deterministic_across_runs(self, capsys, corpus, tmp_path):
        a, b = str(tmp_path / "a.dot"), str(tmp_path / "b.dot")
        assert run(capsys, "export-dot", "--input", corpus, "--seed", "3",
                   "--out", a)[0] == 0
        assert run(capsys, "export-dot", "--input", corpus, "--seed", "3",
                   "--out", b)[0] == 0
        assert open(a, "rb").read() == open(b, "rb").read()

    def test_unwritable_output_is_io_error(self, capsys, corpus, tmp_path):
        bad = str(tmp_path / "no" / "such" / "dir" / "x.dot")
        code, _, err = run(capsys, "export-dot", "--input", corpus, "--out", bad)
        assert code == 1
        assert "x.dot" in err

    def test_out_mode_reports_summary(self, capsys, corpus, tmp_path):
        out_path = str(tmp_path / "t.dot")
        code, out, _ = run(capsys, "export-dot", "--input", corpus,
                           "--out", out_path, "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["out"] == out_path
        assert doc["nodes"] > 0


class TestSeedHandling:
    def test_env_var_sets_default(self, capsys, corpus, monkeypatch):
        monkeypatch.setenv("RTRIE_SEED", "99")
        _, out, _ = run(capsys, "build", "--input", corpus, "--format", "json")
        assert json.loads(out)["seed"] == 99

    def test_flag_supersedes_env(self, capsys, corpus, monkeypatch):
        monkeypatch.setenv("RTRIE_SEED", "99")
        _, out, _ = run(capsys, "build", "--input", corpus,
                        "--seed", "5", "--format", "json")
        assert json.loads(out)["seed"] == 5

    def test_malformed_env_is_an_error(self, capsys, corpus, monkeypatch):
        monkeypatch.setenv("RTRIE_SEED", "not-a-number")
        code, _, err = run(capsys, "build", "--input", corpus)
        assert code == 2
        assert "RTRIE_SEED" in err


class TestUsageErrors:
    def test_missing_input_flag(self, capsys):
        assert run(capsys, "query", "--query", "x")[0] == 2

    def test_unknown_command(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2

    def test_no_command(self, capsys):
        assert run(capsys)[0] == 2

    def test_r_below_one(self, capsys, corpus):
        code, _, err = run(capsys, "build", "--input", corpus, "--r", "0")
        assert code == 2
        assert "--r" in err


class TestDeterminism:
    def test_json_outputs_are_byte_identical(self, capsys, corpus):
        args = ("stats", "--input", corpus, "--seed", "7", "--format", "json")
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second

    def test_console_entry_point_runs(self, corpus):
        proc = subprocess.run(
            [sys.executable, "-m", "rtrie", "query", "--input", corpus,
             "--query", "KIM"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert proc.stdout.strip() == "found"
