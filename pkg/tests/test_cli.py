import io

import pytest

from vistree.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGenerate:
    def test_writes_series_file(self, tmp_path, capsys):
        out = tmp_path / "s.txt"
        code, _, _ = run(
            capsys, "generate", "--kind", "conway", "--n", "5", "--out", str(out)
        )
        assert code == 0
        assert out.read_text() == "0 1.0\n1 1.0\n2 2.0\n3 2.0\n4 3.0\n"

    def test_stdout_default(self, capsys):
        code, out, _ = run(capsys, "generate", "--kind", "increasing", "--n", "3")
        assert code == 0
        assert out == "0 1.0\n1 2.0\n2 3.0\n"

    def test_deterministic_for_seed(self, capsys):
        _, a, _ = run(capsys, "generate", "--kind", "uniform", "--n", "8", "--seed", "4")
        _, b, _ = run(capsys, "generate", "--kind", "uniform", "--n", "8", "--seed", "4")
        assert a == b

    def test_unknown_kind_errors(self, capsys):
        code, _, err = run(capsys, "generate", "--kind", "nope", "--n", "3")
        assert code == 1 and "error:" in err

    def test_bad_balanced_length_errors(self, capsys):
        code, _, err = run(capsys, "generate", "--kind", "balanced", "--n", "6")
        assert code == 1 and "error:" in err


class TestBuild:
    @pytest.fixture
    def series_file(self, tmp_path):
        p = tmp_path / "s.txt"
        p.write_text("0 3\n1 1\n2 3\n")
        return str(p)

    def test_edge_list_to_stdout(self, series_file, capsys):
        code, out, err = run(capsys, "build", series_file)
        assert code == 0
        assert out == "0 1\n0 2\n1 2\n"
        assert "nodes=3 edges=3" in err

    @pytest.mark.parametrize("criterion", ["hvg", "nvg"])
    def test_algorithms_byte_identical(self, series_file, tmp_path, capsys, criterion):
        outputs = set()
        for algo in ("basic", "dc", "bst"):
            out = tmp_path / f"{algo}.txt"
            code, _, _ = run(
                capsys, "build", series_file, "--algo", algo,
                "--criterion", criterion, "--out", str(out),
            )
            assert code == 0
            outputs.add(out.read_text())
        assert len(outputs) == 1

    def test_instrument_reports_checks(self, series_file, capsys):
        code, _, err = run(
            capsys, "build", series_file, "--criterion", "nvg", "--instrument"
        )
        assert code == 0
        assert "residual_checks=" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "build", "/nonexistent/series.txt")
        assert code == 1 and "error:" in err

    def test_duplicate_index_rejected(self, tmp_path, capsys):
        p = tmp_path / "dup.txt"
        p.write_text("0 1\n0 2\n")
        code, _, err = run(capsys, "build", str(p))
        assert code == 1 and "error:" in err


class TestBench:
    def test_csv_written(self, tmp_path, capsys):
        out = tmp_path / "bench.csv"
        code, _, err = run(
            capsys,
            "bench",
            "--kind", "uniform",
            "--n", "32",
            "--algo", "basic",
            "--algo", "bst",
            "--criterion", "hvg",
            "--trials", "2",
            "--out", str(out),
        )
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "# rng=numpy-pcg64"
        assert lines[1] == "algorithm,criterion,kind,n,trial,elapsed_s,residual_checks"
        assert len(lines) == 2 + 2 * 2  # 2 algos x 2 trials
        assert "mean=" in err

    def test_trials_usage_error(self, capsys):
        with pytest.raises(SystemExit) as e:
            main(["bench", "--trials", "0"])
        assert e.value.code == 2


class TestOnlineBench:
    def test_csv_written(self, tmp_path, capsys):
        out = tmp_path / "online.csv"
        code, _, err = run(
            capsys,
            "online-bench",
            "--L", "64",
            "--N", "4",
            "--trials", "2",
            "--out", str(out),
        )
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[1] == "L,N,mode,trial,t_offline_s,t_online_s"
        assert len(lines) == 2 + 2 * 2  # 2 modes x 2 trials
        assert "ratio=" in err


class TestStream:
    def feed(self, monkeypatch, capsys, text, *argv):
        monkeypatch.setattr("sys.stdin", io.StringIO(text))
        return run(capsys, "stream", *argv)

    def test_emit_on_eof(self, monkeypatch, capsys):
        code, out, _ = self.feed(monkeypatch, capsys, "0 3\n1 1\n2 3\n")
        assert code == 0
        assert out == "0 1\n0 2\n1 2\n"

    def test_explicit_emit_lines(self, monkeypatch, capsys):
        text = "0 1\n1 2\nemit hvg\n2 4\nemit nvg\n"
        code, out, _ = self.feed(monkeypatch, capsys, text)
        assert code == 0
        # convexity opens the 0-2 line of sight in the second emit
        assert out == "0 1\n" + "0 1\n0 2\n1 2\n"

    def test_small_batches_match_single_shot(self, monkeypatch, capsys):
        text = "".join(f"{i} {(i * 7919) % 101}\n" for i in range(40))
        _, small, _ = self.feed(monkeypatch, capsys, text, "--batch-size", "3")
        _, big, _ = self.feed(monkeypatch, capsys, text, "--batch-size", "1000")
        assert small == big

    def test_out_of_order_arrival(self, monkeypatch, capsys):
        code, out, _ = self.feed(
            monkeypatch, capsys, "2 3\n0 3\n1 1\n", "--batch-size", "1"
        )
        assert code == 0
        assert out == "0 1\n0 2\n1 2\n"

    def test_malformed_and_duplicate_lines_skipped(self, monkeypatch, capsys):
        text = "0 3\nbogus\n0 9\n1 one\n1 1\n2 3\n"
        code, out, err = self.feed(monkeypatch, capsys, text)
        assert code == 0
        assert out == "0 1\n0 2\n1 2\n"
        assert "duplicate index 0" in err
        assert "skipped" in err

    def test_bad_control_line(self, monkeypatch, capsys):
        code, out, err = self.feed(monkeypatch, capsys, "0 1\nemit wat\n")
        assert code == 0
        assert "bad control line" in err
        assert out == ""  # pending points emitted at EOF with default criterion

    def test_empty_input_emits_empty_graph(self, monkeypatch, capsys):
        code, out, _ = self.feed(monkeypatch, capsys, "")
        assert code == 0 and out == ""

    def test_batch_size_usage_error(self, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(""))
        with pytest.raises(SystemExit) as e:
            main(["stream", "--batch-size", "0"])
        assert e.value.code == 2
