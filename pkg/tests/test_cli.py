"""Command-line harness tests: persistence, reproducibility, reports."""

import json

from cscf import cli
from cscf.hybrid import RunRecord


def run_cli(*argv):
    return cli.main(list(argv))


def read_records(directory):
    rows = []
    for path in sorted(directory.glob("*.json")):
        for line in path.read_text().splitlines():
            rows.append(json.loads(line))
    return rows


class TestListing:
    def test_list_problems(self, capsys):
        assert run_cli("list-problems") == 0
        out = capsys.readouterr().out
        assert "fn6\tsphere" in out
        assert "welded_beam" in out

    def test_list_maps(self, capsys):
        assert run_cli("list-maps") == 0
        out = capsys.readouterr().out.split()
        assert out[0] == "logistic" and len(out) == 12


class TestRun:
    def test_smallest_job(self, tmp_path, capsys):
        out = tmp_path / "res"
        code = run_cli("run", "--problem", "sphere", "--algo", "cscf",
                       "--dim", "4", "--iters", "10", "--seed", "42",
                       "--replicates", "1", "--out", str(out))
        assert code == 0
        records = list(out.glob("*.json"))
        curves = list(out.glob("*.curve.csv"))
        assert len(records) == 1 and len(curves) == 1
        row = json.loads(records[0].read_text())
        assert row["seed"] == 42 and row["problem"] == "sphere"
        assert RunRecord.from_dict(row) == RunRecord.from_dict(row)
        assert len(row["best_curve"]) == 11

    def test_skip_existing_then_force(self, tmp_path, capsys):
        out = tmp_path / "res"
        args = ("run", "--problem", "sphere", "--dim", "3", "--iters", "5",
                "--seed", "1", "--out", str(out))
        assert run_cli(*args) == 0
        record = next(out.glob("*.json"))
        first = record.read_text()
        assert run_cli(*args) == 0
        assert "skipped 1 existing" in capsys.readouterr().out
        assert record.read_text() == first
        assert run_cli(*args, "--force") == 0
        assert json.loads(record.read_text())["seed"] == 1

    def test_reproducible_modulo_wall_time(self, tmp_path):
        a, b = tmp_path / "a", tmp_path / "b"
        for out in (a, b):
            run_cli("run", "--problems", "sphere,rastrigin", "--algo", "cscf,ff",
                    "--dim", "5", "--iters", "20", "--seed", "7",
                    "--replicates", "2", "--out", str(out))
        rows_a, rows_b = read_records(a), read_records(b)
        assert len(rows_a) == len(rows_b) == 8
        for ra, rb in zip(rows_a, rows_b):
            ra.pop("wall_time"), rb.pop("wall_time")
            assert json.dumps(ra, sort_keys=True) == json.dumps(rb, sort_keys=True)
        for ca, cb in zip(sorted(a.glob("*.curve.csv")), sorted(b.glob("*.curve.csv"))):
            assert ca.read_bytes() == cb.read_bytes()

    def test_replicate_seeds_derived_from_base(self, tmp_path):
        out = tmp_path / "res"
        run_cli("run", "--problem", "sphere", "--dim", "3", "--iters", "2",
                "--seed", "100", "--replicates", "3", "--out", str(out))
        seeds = sorted(row["seed"] for row in read_records(out))
        assert seeds == [100, 101, 102]

    def test_problem_range_expansion(self, tmp_path):
        out = tmp_path / "res"
        run_cli("run", "--problems", "fn1..fn3", "--dim", "3", "--iters", "1",
                "--out", str(out))
        names = {row["problem"] for row in read_records(out)}
        assert names == {"fn1", "fn2", "fn3"}

    def test_engineering_problem_runs(self, tmp_path):
        out = tmp_path / "res"
        code = run_cli("run", "--problem", "welded_beam", "--iters", "30",
                       "--out", str(out))
        assert code == 0
        row = read_records(out)[0]
        assert row["dim"] == 4
        assert "feasible" in row
        assert len(row["best_constraints"]) == 7

    def test_unknown_problem_exits_2(self, tmp_path, capsys):
        code = run_cli("run", "--problem", "nonesuch", "--out", str(tmp_path))
        assert code == 2
        assert "error" in capsys.readouterr().err

    def test_parallel_jobs(self, tmp_path):
        out = tmp_path / "res"
        code = run_cli("run", "--problems", "sphere,rastrigin", "--dim", "3",
                       "--iters", "5", "--replicates", "2", "--jobs", "2",
                       "--out", str(out))
        assert code == 0
        assert len(read_records(out)) == 4

    def test_config_file_with_flag_override(self, tmp_path):
        config = tmp_path / "exp.ini"
        config.write_text(
            "[problem]\nnames = sphere\ndims = 3\n"
            "[algorithm]\nalgos = cscf\nmax_iter = 5\npopulation = 6\n"
            "[variant]\nvariants = i\n"
            "[chaos]\nmaps = tent\n"
            "[experiment]\nreplicates = 1\nseed = 3\n"
        )
        out = tmp_path / "res"
        code = run_cli("run", "--config", str(config), "--seed", "9",
                       "--out", str(out))
        assert code == 0
        row = read_records(out)[0]
        assert row["seed"] == 9            # flag wins over config
        assert row["variant"] == "i" and row["map"] == "tent"
        assert row["population"] == 6

    def test_env_var_default_out(self, tmp_path, monkeypatch):
        monkeypatch.setenv("CSCF_OUT", str(tmp_path / "envout"))
        run_cli("run", "--problem", "sphere", "--dim", "3", "--iters", "1")
        assert (tmp_path / "envout").is_dir()


class TestReport:
    def _populate(self, out, algos="cscf,ff"):
        run_cli("run", "--problems", "sphere,rastrigin", "--algo", algos,
                "--dim", "4", "--iters", "10", "--replicates", "3",
                "--seed", "0", "--out", str(out))

    def test_full_report(self, tmp_path, capsys):
        out = tmp_path / "res"
        self._populate(out)
        assert run_cli("report", "--in", str(out)) == 0
        for name in ("summary.csv", "summary.jsonl", "wilcoxon.csv",
                     "walltime.csv", "mae_grid.csv"):
            assert (out / name).exists(), name
        summary = (out / "summary.csv").read_text().splitlines()
        assert summary[0] == "problem,algorithm,n,mean,std,best,worst"
        assert len(summary) == 1 + 2 * 2  # 2 problems x 2 algorithms

    def test_report_separate_out_dir(self, tmp_path):
        out, tables = tmp_path / "res", tmp_path / "tables"
        self._populate(out)
        assert run_cli("report", "--in", str(out), "--out", str(tables)) == 0
        assert (tables / "summary.csv").exists()

    def test_single_algorithm_skips_wilcoxon(self, tmp_path, capsys):
        out = tmp_path / "res"
        self._populate(out, algos="cscf")
        assert run_cli("report", "--in", str(out)) == 0
        err = capsys.readouterr().err
        assert "skipping Wilcoxon" in err
        assert (out / "summary.csv").exists()
        assert not (out / "wilcoxon.csv").exists()

    def test_corrupt_line_counted_not_fatal(self, tmp_path, capsys):
        out = tmp_path / "res"
        self._populate(out)
        (out / "zz_corrupt.json").write_text("{not json}\n")
        assert run_cli("report", "--in", str(out)) == 0
        captured = capsys.readouterr()
        assert "skipping corrupt record" in captured.err
        assert "1 corrupt line(s)" in captured.out

    def test_all_corrupt_exits_nonzero(self, tmp_path, capsys):
        out = tmp_path / "res"
        out.mkdir()
        (out / "a.json").write_text("garbage\n")
        assert run_cli("report", "--in", str(out)) == 1

    def test_empty_directory_exits_nonzero(self, tmp_path):
        empty = tmp_path / "empty"
        empty.mkdir()
        assert run_cli("report", "--in", str(empty)) == 1
