"""Command-line experiment harness: seeded batch runs and report generation.

Subcommands:

* ``cscf run`` executes the cross-product of problem / algorithm /
  variant / map / dimension / replicate selectors.  Every run writes one
  JSON record (a single JSON line, keys sorted) plus a per-run
  convergence CSV.  Existing outputs are skipped unless ``--force`` is
  given; writes are atomic (temp file + rename).  Replicate seeds are
  ``base_seed + replicate_index``.
* ``cscf report`` aggregates a directory of records into summary,
  Wilcoxon, MAE-grid, and wall-time tables.
* ``cscf list-problems`` / ``cscf list-maps`` enumerate the stable names.

A config file (INI sections [problem], [algorithm], [variant], [chaos],
[penalty], [experiment]) can predefine everything; flags override it.
The ``CSCF_OUT`` environment variable supplies the default output root.
"""

from __future__ import annotations

import argparse
import configparser
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import analysis
from .benchmarks import BENCHMARK_IDS, benchmark_problem, resolve_problem_name
from .chaos import MAP_NAMES
from .engineering import ENGINEERING_NAMES, PenaltyParams, engineering_problem
from .errors import ConfigError, EmptyInputError
from .firefly import FireflyParams
from .hybrid import (
    ALGORITHMS,
    VARIANT_KINDS,
    OptimizerConfig,
    RunRecord,
    SweepCell,
    SweepResult,
    VariantSpec,
    optimize,
)
from .sca import ScaParams

__all__ = ["ExperimentSpec", "cmd_run", "cmd_report", "main"]

_ENV_OUT = "CSCF_OUT"


@dataclass
class ExperimentSpec:
    """A resolved batch of runs."""

    problems: list = field(default_factory=lambda: ["sphere"])
    algos: list = field(default_factory=lambda: ["cscf"])
    variants: list = field(default_factory=lambda: ["all"])
    maps: list = field(default_factory=lambda: ["logistic"])
    dims: list = field(default_factory=lambda: [20])
    replicates: int = 1
    base_seed: int = 0
    out: Path = field(default_factory=lambda: Path(os.environ.get(_ENV_OUT, "results")))
    population: int = 20
    max_iter: int = 500
    trial_limit: int = 10
    penalty_mode: str = "feasibility-rules"
    penalty_weight: float = 1e6
    alpha0: float = 1.0
    beta: float = 1.0
    j_step: float = 0.2
    k_step: float = 0.2
    a_const: float = 2.0
    jobs: int = 1
    force: bool = False

    def validate(self) -> None:
        if self.replicates < 1:
            raise ConfigError("replicates must be >= 1")
        if self.jobs < 1:
            raise ConfigError("jobs must be >= 1")
        for algo in self.algos:
            if algo not in ALGORITHMS:
                raise ConfigError(f"unknown algorithm {algo!r}")
        for v in self.variants:
            if v not in VARIANT_KINDS + ("all",):
                raise ConfigError(f"unknown variant {v!r}")
        for m in self.maps:
            if m not in MAP_NAMES:
                raise ConfigError(f"unknown map {m!r}")
        for name in self.problems:
            _check_problem_name(name)


def _check_problem_name(name: str) -> None:
    if name in ENGINEERING_NAMES:
        return
    try:
        resolve_problem_name(name)
    except KeyError as exc:
        raise ConfigError(str(exc)) from None


def _build_problem(name: str, dim: int, noise_seed: int = 0):
    if name in ENGINEERING_NAMES:
        return engineering_problem(name)
    return benchmark_problem(name, dim=dim, noise_seed=noise_seed)


def _expand_problem_token(token: str) -> list[str]:
    """One selector token -> problem names ("fn1..fn5" ranges supported)."""
    token = token.strip()
    if ".." in token:
        lo, hi = token.split("..", 1)
        i = resolve_problem_name(lo)
        j = resolve_problem_name(hi)
        return [f"fn{k}" for k in range(i, j + 1)]
    return [token]


def _split_list(text: str) -> list[str]:
    return [t.strip() for t in text.replace(";", ",").split(",") if t.strip()]


# ---------------------------------------------------------------------------
# run


def _job_list(spec: ExperimentSpec) -> list[dict]:
    jobs = []
    seen = set()
    for name in spec.problems:
        for dim in spec.dims:
            probe = _build_problem(name, dim)
            actual_dim = probe.dim
            for algo in spec.algos:
                variant_axis = spec.variants if algo == "cscf" else ["-"]
                map_axis = spec.maps if algo == "cscf" else ["-"]
                for variant in variant_axis:
                    for map_name in map_axis:
                        for rep in range(spec.replicates):
                            stem = (
                                f"{name}__{algo}__{variant}__{map_name}"
                                f"__d{actual_dim}__r{rep}"
                            )
                            if stem in seen:
                                continue
                            seen.add(stem)
                            jobs.append(
                                {
                                    "stem": stem,
                                    "problem": name,
                                    "algo": algo,
                                    "variant": variant,
                                    "map": map_name,
                                    "dim": actual_dim,
                                    "replicate": rep,
                                    "seed": spec.base_seed + rep,
                                    "population": spec.population,
                                    "max_iter": spec.max_iter,
                                    "trial_limit": spec.trial_limit,
                                    "penalty_mode": spec.penalty_mode,
                                    "penalty_weight": spec.penalty_weight,
                                    "alpha0": spec.alpha0,
                                    "beta": spec.beta,
                                    "j_step": spec.j_step,
                                    "k_step": spec.k_step,
                                    "a_const": spec.a_const,
                                }
                            )
    return jobs


def _execute_job(job: dict) -> tuple[dict, RunRecord]:
    problem = _build_problem(job["problem"], job["dim"], noise_seed=job["seed"])
    variant = VariantSpec(job["variant"], job["map"]) if job["algo"] == "cscf" \
        else VariantSpec()
    config = OptimizerConfig(
        population=job["population"],
        max_iter=job["max_iter"],
        algorithm=job["algo"],
        variant=variant,
        trial_limit=job["trial_limit"],
        seed=job["seed"],
        firefly=FireflyParams(alpha0=job["alpha0"], beta=job["beta"],
                              j_step=job["j_step"], k_step=job["k_step"]),
        sca=ScaParams(a_const=job["a_const"]),
        penalty=PenaltyParams(mode=job["penalty_mode"], weight=job["penalty_weight"]),
    )
    return job, optimize(problem, config)


def _atomic_write(path: Path, text: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    os.replace(tmp, path)


def _record_line(job: dict, record: RunRecord) -> str:
    payload = {k: v for k, v in job.items() if k != "stem"}
    payload.update(record.to_dict())
    return json.dumps(payload, sort_keys=True)


def _write_outputs(out: Path, job: dict, record: RunRecord) -> None:
    _atomic_write(out / f"{job['stem']}.json", _record_line(job, record) + "\n")
    curve_path = out / f"{job['stem']}.curve.csv"
    tmp = curve_path.with_name(curve_path.name + ".tmp")
    analysis.write_convergence_csv(record, tmp)
    os.replace(tmp, curve_path)


def cmd_run(spec: ExperimentSpec) -> int:
    """Execute the cross-product of selectors; persist one record per run."""
    spec.validate()
    out = Path(spec.out)
    out.mkdir(parents=True, exist_ok=True)
    jobs = _job_list(spec)
    pending = []
    skipped = 0
    for job in jobs:
        if not spec.force and (out / f"{job['stem']}.json").exists():
            skipped += 1
            continue
        pending.append(job)

    if spec.jobs > 1 and len(pending) > 1:
        with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
            for job, record in pool.map(_execute_job, pending):
                _write_outputs(out, job, record)
    else:
        for job in pending:
            job, record = _execute_job(job)
            _write_outputs(out, job, record)

    print(f"ran {len(pending)} job(s), skipped {skipped} existing, "
          f"output in {out}")
    return 0


# ---------------------------------------------------------------------------
# report


def _load_records(directory: Path) -> tuple[list[dict], int]:
    rows = []
    corrupt = 0
    for path in sorted(directory.glob("*.json")):
        for line in path.read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if not line:
                continue
            try:
                row = json.loads(line)
                RunRecord.from_dict(row)  # schema check
                rows.append(row)
            except (json.JSONDecodeError, KeyError, TypeError):
                corrupt += 1
                print(f"warning: skipping corrupt record line in {path.name}",
                      file=sys.stderr)
    return rows, corrupt


class _RecordView:
    """Attribute view over a parsed record row (for analysis duck-typing)."""

    def __init__(self, row: dict):
        self.best_cost = float(row["best_cost"])
        self.wall_time = float(row["wall_time"])


def _reference_for(name: str) -> float | None:
    if name in ENGINEERING_NAMES:
        return engineering_problem(name).reference_best
    return benchmark_problem(name).f_reference


def cmd_report(in_dir: Path, out_dir: Path | None = None) -> int:
    """Aggregate persisted records into the comparison tables."""
    in_dir = Path(in_dir)
    if not in_dir.is_dir():
        raise EmptyInputError(f"{in_dir} is not a directory")
    rows, corrupt = _load_records(in_dir)
    if not rows:
        raise EmptyInputError(f"no readable records under {in_dir}")
    out = Path(out_dir) if out_dir else in_dir
    out.mkdir(parents=True, exist_ok=True)

    # summary + pairwise tests
    by_algo: dict = {}
    for row in rows:
        problem_key = f"{row['problem']}_d{row['dim']}"
        by_algo.setdefault(row["algo"], {}).setdefault(problem_key, []).append(
            _RecordView(row)
        )
    if len(by_algo) >= 2:
        report = analysis.compare_report(by_algo)
        analysis.write_wilcoxon_csv(report, out / "wilcoxon.csv")
    else:
        algo = next(iter(by_algo))
        times = [r.wall_time for rs in by_algo[algo].values() for r in rs]
        report = analysis.ComparisonReport(
            summaries={algo: {p: analysis.summarize([r.best_cost for r in rs])
                              for p, rs in by_algo[algo].items()}},
            pairwise=[],
            mean_wall_time={algo: float(sum(times) / len(times))},
            mae_by_algo={},
        )
        print("warning: single algorithm in records, skipping Wilcoxon table",
              file=sys.stderr)
    analysis.write_summary_csv(report, out / "summary.csv")
    analysis.write_summary_jsonl(report, out / "summary.jsonl")

    # MAE grid over cscf records that carry a variant/map and a reference
    cells = []
    grouped: dict = {}
    for row in rows:
        if row["algo"] != "cscf" or row["variant"] == "-":
            continue
        ref = _reference_for(row["problem"])
        if ref is None:
            continue
        key = (row["problem"], row["variant"], row["map"])
        grouped.setdefault((key, ref), []).append(float(row["best_cost"]))
    for (key, ref), bests in sorted(grouped.items()):
        problem, variant, map_name = key
        cells.append(SweepCell(problem, variant, map_name,
                               analysis.mae(bests, ref), len(bests)))
    if cells:
        sweep = SweepResult(cells=cells, variant_mean_mae={}, variant_rank={})
        analysis.write_mae_grid_csv(sweep, out / "mae_grid.csv")

    # mean wall time per variant (per algorithm for the non-hybrid baselines)
    times: dict = {}
    for row in rows:
        key = row["variant"] if row["algo"] == "cscf" else row["algo"]
        times.setdefault(key, []).append(float(row["wall_time"]))
    analysis.write_walltime_csv(
        {k: sum(v) / len(v) for k, v in times.items()}, out / "walltime.csv"
    )

    print(f"report written to {out} ({len(rows)} records, {corrupt} corrupt line(s))")
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _spec_from_config(path: Path) -> dict:
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise ConfigError(f"config file {path} not found or unreadable")
    values: dict = {}

    def get(section, option, cast=str):
        if parser.has_option(section, option):
            raw = parser.get(section, option)
            return cast(raw)
        return None

    mapping = [
        ("problem", "names", lambda s: sum((_expand_problem_token(t)
                                            for t in _split_list(s)), []), "problems"),
        ("problem", "dims", lambda s: [int(t) for t in _split_list(s)], "dims"),
        ("algorithm", "algos", _split_list, "algos"),
        ("algorithm", "population", int, "population"),
        ("algorithm", "max_iter", int, "max_iter"),
        ("algorithm", "trial_limit", int, "trial_limit"),
        ("algorithm", "alpha0", float, "alpha0"),
        ("algorithm", "beta", float, "beta"),
        ("algorithm", "j_step", float, "j_step"),
        ("algorithm", "k_step", float, "k_step"),
        ("algorithm", "a_const", float, "a_const"),
        ("variant", "variants", _split_list, "variants"),
        ("chaos", "maps", _split_list, "maps"),
        ("penalty", "mode", str, "penalty_mode"),
        ("penalty", "weight", float, "penalty_weight"),
        ("experiment", "replicates", int, "replicates"),
        ("experiment", "seed", int, "base_seed"),
        ("experiment", "out", Path, "out"),
        ("experiment", "jobs", int, "jobs"),
    ]
    for section, option, cast, key in mapping:
        value = get(section, option, cast)
        if value is not None:
            values[key] = value
    return values


def _build_spec(args: argparse.Namespace) -> ExperimentSpec:
    values: dict = {}
    if args.config:
        values.update(_spec_from_config(Path(args.config)))

    problems = []
    if args.problem:
        problems.extend(_expand_problem_token(args.problem))
    if args.problems:
        for token in _split_list(args.problems):
            problems.extend(_expand_problem_token(token))
    if problems:
        values["problems"] = problems

    if args.algo:
        values["algos"] = _split_list(args.algo)
    if args.variant:
        values["variants"] = _split_list(args.variant)
    if args.map:
        values["maps"] = _split_list(args.map)
    if args.dim is not None:
        values["dims"] = [args.dim]
    if args.dims:
        values["dims"] = [int(t) for t in _split_list(args.dims)]
    for key in ("replicates", "population", "max_iter", "trial_limit", "jobs"):
        flag = {"population": "pop", "max_iter": "iters"}.get(key, key.replace("_", "-"))
        value = getattr(args, flag.replace("-", "_"), None)
        if value is not None:
            values[key] = value
    if args.seed is not None:
        values["base_seed"] = args.seed
    if args.out:
        values["out"] = Path(args.out)
    if args.penalty_mode:
        values["penalty_mode"] = args.penalty_mode
    if args.penalty_weight is not None:
        values["penalty_weight"] = args.penalty_weight
    for key in ("alpha0", "beta", "j_step", "k_step", "a_const"):
        value = getattr(args, key, None)
        if value is not None:
            values[key] = value
    values["force"] = bool(args.force)
    return ExperimentSpec(**values)


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cscf",
        description="chaotic sine-cosine firefly experiment harness",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="execute a batch of seeded runs")
    run.add_argument("--config", help="INI config file; flags override it")
    run.add_argument("--problem", help="single problem name (fnN, alias, or engineering)")
    run.add_argument("--problems", help="comma list, fnA..fnB ranges allowed")
    run.add_argument("--algo", help=f"comma list from {', '.join(ALGORITHMS)}")
    run.add_argument("--variant", help="comma list from i,ii,iii,iv,v,all")
    run.add_argument("--map", help=f"comma list from {', '.join(MAP_NAMES)}")
    run.add_argument("--dim", type=int, help="single dimension for scalable problems")
    run.add_argument("--dims", help="comma list of dimensions")
    run.add_argument("--pop", type=int, help="population size")
    run.add_argument("--iters", type=int, help="iteration budget")
    run.add_argument("--trial-limit", type=int, dest="trial_limit")
    run.add_argument("--seed", type=int, help="base seed (replicate r uses seed+r)")
    run.add_argument("--replicates", type=int)
    run.add_argument("--jobs", type=int, help="parallel worker processes")
    run.add_argument("--out", help=f"output directory (default ${_ENV_OUT} or ./results)")
    run.add_argument("--force", action="store_true", help="overwrite existing outputs")
    run.add_argument("--penalty-mode", dest="penalty_mode",
                     choices=["feasibility-rules", "static-penalty"])
    run.add_argument("--penalty-weight", dest="penalty_weight", type=float)
    run.add_argument("--alpha0", type=float)
    run.add_argument("--beta", type=float)
    run.add_argument("--j-step", dest="j_step", type=float)
    run.add_argument("--k-step", dest="k_step", type=float)
    run.add_argument("--a-const", dest="a_const", type=float)

    report = sub.add_parser("report", help="aggregate records into tables")
    report.add_argument("--in", dest="in_dir", required=True, help="record directory")
    report.add_argument("--out", dest="out_dir", help="table directory (default: --in)")

    sub.add_parser("list-problems", help="print the stable problem names")
    sub.add_parser("list-maps", help="print the stable chaotic map names")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _make_parser().parse_args(argv)
    try:
        if args.command == "run":
            return cmd_run(_build_spec(args))
        if args.command == "report":
            return cmd_report(Path(args.in_dir),
                              Path(args.out_dir) if args.out_dir else None)
        if args.command == "list-problems":
            for i, pid in enumerate(BENCHMARK_IDS, start=1):
                print(f"{pid}\t{benchmark_problem(i).name}")
            for name in ENGINEERING_NAMES:
                print(f"-\t{name}")
            return 0
        if args.command == "list-maps":
            for name in MAP_NAMES:
                print(name)
            return 0
        raise ConfigError(f"unknown command {args.command!r}")
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EmptyInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
