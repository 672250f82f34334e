"""Experiment runner: replicate seeded runs, aggregate, write CSV and SVG.

An experiment executes R independent runs for each engine configuration
under comparison, with every run's seed derived deterministically from
(master seed, configuration index, run index).  Per-generation means
and standard deviations (population formula, divide by R) of the
best-so-far and population-mean energies are aggregated across runs and
written as one CSV per configuration plus a combined CSV, and optionally
as an SVG convergence chart.  All output bytes are a pure function of
the command line and the master seed.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Sequence

import numpy as np

from .engine import SCHEMES, EngineConfig, RunTrace, run
from .objectives import OBJECTIVES, get_objective
from .schedules import ScheduleConfig
from .svgchart import line_chart
from .variation import VariationConfig

CSV_HEADER = (
    "generation,beta,q,best_so_far_mean,best_so_far_std,"
    "pop_mean_energy_mean,pop_mean_energy_std,selection_entropy_mean"
)

DEFAULT_SEED = 1729


@dataclass(frozen=True)
class ExperimentConfig:
    """A comparison of engine configurations under shared conditions."""

    configs: tuple[EngineConfig, ...]
    labels: tuple[str, ...]
    runs: int = 20
    seed: int = DEFAULT_SEED
    out_dir: Path = Path("results")
    plot: bool = False

    def __post_init__(self) -> None:
        if not self.configs:
            raise ValueError("at least one engine configuration is required")
        if len(self.labels) != len(self.configs):
            raise ValueError("labels and configs must pair up one-to-one")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"labels must be unique, got {self.labels}")
        if self.runs < 1:
            raise ValueError(f"runs must be >= 1, got {self.runs}")
        if self.seed < 0:
            raise ValueError(f"seed must be a nonnegative integer, got {self.seed}")
        shared = {
            (c.objective, c.population_size, c.generations) for c in self.configs
        }
        if len(shared) != 1:
            raise ValueError(
                "all configurations in one experiment must share the objective, "
                "population size, and generation count"
            )


@dataclass(frozen=True)
class AggregateTrace:
    """Across-run statistics of one engine configuration, per generation."""

    label: str
    objective: str
    runs: int
    generation: np.ndarray
    beta: np.ndarray
    q: np.ndarray
    best_so_far_mean: np.ndarray
    best_so_far_std: np.ndarray
    pop_mean_energy_mean: np.ndarray
    pop_mean_energy_std: np.ndarray
    selection_entropy_mean: np.ndarray


def config_label(config: EngineConfig) -> str:
    """Human-readable series name: the scheme, plus q0 where it matters."""
    if config.scheme != "tsallis":
        return config.scheme
    label = f"tsallis(q0={config.schedule.q0:g}"
    if config.schedule.constant_q:
        label += ", constant"
    return label + ")"


def run_seed(master_seed: int, config_index: int, run_index: int) -> int:
    """Engine seed for one replicate, collision-free across the experiment."""
    ss = np.random.SeedSequence([master_seed, config_index, run_index])
    return int(ss.generate_state(1, np.uint64)[0])


def _aggregate(
    label: str, config: EngineConfig, traces: Sequence[RunTrace]
) -> AggregateTrace:
    best = np.stack([t.column("best_so_far") for t in traces])
    mean_e = np.stack([t.column("mean_energy") for t in traces])
    entropy = np.stack([t.column("selection_entropy") for t in traces])
    first = traces[0]
    return AggregateTrace(
        label=label,
        objective=config.objective,
        runs=len(traces),
        generation=first.column("generation").astype(int),
        beta=first.column("beta"),
        q=first.column("q"),
        best_so_far_mean=best.mean(axis=0),
        best_so_far_std=best.std(axis=0),
        pop_mean_energy_mean=mean_e.mean(axis=0),
        pop_mean_energy_std=mean_e.std(axis=0),
        selection_entropy_mean=entropy.mean(axis=0),
    )


def run_experiment(experiment: ExperimentConfig) -> list[AggregateTrace]:
    """Execute all replicates, in deterministic (config, run) order."""
    aggregates = []
    for i, (config, label) in enumerate(zip(experiment.configs, experiment.labels)):
        traces = []
        for j in range(experiment.runs):
            seeded = replace(config, seed=run_seed(experiment.seed, i, j))
            try:
                traces.append(run(seeded))
            except Exception as err:
                raise RuntimeError(
                    f"config {i} ({label}), run {j}: {err}"
                ) from err
        aggregates.append(_aggregate(label, config, traces))
    return aggregates


def _slug(label: str) -> str:
    safe = "".join(c if c.isalnum() or c in ".-" else "_" for c in label)
    while "__" in safe:
        safe = safe.replace("__", "_")
    return safe.strip("_")


def _csv_rows(agg: AggregateTrace) -> list[str]:
    rows = []
    for k in range(agg.generation.size):
        rows.append(
            f"{int(agg.generation[k])},{agg.beta[k]:.17g},{agg.q[k]:.17g},"
            f"{agg.best_so_far_mean[k]:.17g},{agg.best_so_far_std[k]:.17g},"
            f"{agg.pop_mean_energy_mean[k]:.17g},{agg.pop_mean_energy_std[k]:.17g},"
            f"{agg.selection_entropy_mean[k]:.17g}"
        )
    return rows


def write_csv(aggregates: Sequence[AggregateTrace], out_dir: Path) -> list[Path]:
    """One CSV per configuration plus combined.csv; returns written paths.

    Per-configuration files carry exactly the ``CSV_HEADER`` columns;
    the combined file prefixes a ``config`` column holding the label.
    Values are written with 17 significant digits so that equal runs
    produce byte-identical files.
    """
    if not aggregates:
        raise ValueError("nothing to write: no aggregates given")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    combined = ["config," + CSV_HEADER]
    for agg in aggregates:
        rows = _csv_rows(agg)
        path = out_dir / f"{_slug(agg.label)}.csv"
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join([CSV_HEADER] + rows) + "\n")
        written.append(path)
        combined.extend(f"{agg.label},{row}" for row in rows)
    path = out_dir / "combined.csv"
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(combined) + "\n")
    written.append(path)
    return written


def render_convergence_plot(
    aggregates: Sequence[AggregateTrace], path: Path
) -> Path:
    """SVG chart of mean best-so-far energy per generation, one line per config."""
    if not aggregates:
        raise ValueError("nothing to plot: no aggregates given")
    series = [
        (agg.label, agg.generation.astype(float), agg.best_so_far_mean)
        for agg in aggregates
    ]
    title = (
        f"{aggregates[0].objective}: best-so-far energy "
        f"(mean of {aggregates[0].runs} runs)"
    )
    svg = line_chart(series, title, "generation", "best-so-far energy")
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(svg, encoding="utf-8")
    return path


_TRUE_WORDS = frozenset({"1", "true", "yes", "on"})
_FALSE_WORDS = frozenset({"0", "false", "no", "off"})

# flag name, argparse dest, value type (bool means on/off switch), default, help
_OPTIONS: list[tuple[str, str, type, object, str]] = [
    ("--function", "function", str, None, "objective: ackley, rastrigin, griewangk"),
    ("--selection", "selection", str, None,
     "selection scheme: proportionate, boltzmann, tsallis"),
    ("--compare", "compare", str, None,
     "comma-separated schemes to compare in one experiment"),
    ("--q0", "q0", float, None, "initial non-extensive index (tsallis only)"),
    ("--constant-q", "constant_q", bool, False,
     "hold q constant at q0 instead of decaying it to 1 (tsallis only)"),
    ("--beta0", "beta0", float, 200.0, "initial inverse temperature"),
    ("--alpha", "alpha", float, 1.01, "annealing sum exponent, > 1"),
    ("--pop-size", "pop_size", int, 350, "population size"),
    ("--generations", "generations", int, 100, "generations per run"),
    ("--runs", "runs", int, 20, "replicate runs per configuration"),
    ("--vars", "vars", int, 15, "number of encoded variables"),
    ("--bits", "bits", int, 5, "bits per variable"),
    ("--pc", "pc", float, 0.8, "crossover probability per pair"),
    ("--pbit", "pbit", float, 0.02, "mutation probability per bit"),
    ("--no-energy-shift", "no_energy_shift", bool, False,
     "weigh raw energies instead of population-minimum-shifted ones"),
    ("--seed", "seed", int, DEFAULT_SEED, "master seed (unsigned integer)"),
    ("--out", "out", str, "results", "output directory"),
    ("--plot", "plot", bool, False, "also render an SVG convergence chart"),
    ("--config", "config", str, None,
     "key = value file with the same keys as the flags, without dashes; "
     "flags take precedence"),
]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tsallis-ea",
        description=(
            "Run seeded evolutionary-algorithm experiments comparing "
            "proportionate, Boltzmann, and Tsallis selection on binary-encoded "
            "benchmark functions, writing per-generation CSV tables and "
            "optional SVG convergence charts."
        ),
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    for flag, dest, kind, default, help_text in _OPTIONS:
        if kind is bool:
            parser.add_argument(flag, dest=dest, action="store_true", help=help_text)
        else:
            parser.add_argument(
                flag, dest=dest, type=kind, default=default, help=help_text
            )
    return parser


def _read_config_file(path: Path) -> dict[str, object]:
    """Parse 'key = value' lines into coerced argparse defaults."""
    by_key = {flag.lstrip("-"): (dest, kind) for flag, dest, kind, _, _ in _OPTIONS}
    values: dict[str, object] = {}
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as err:
        raise ValueError(f"cannot read config file: {err}") from err
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise ValueError(f"{path}:{lineno}: expected 'key = value'")
        if key == "config" or key not in by_key:
            raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
        dest, kind = by_key[key]
        if kind is bool:
            lowered = value.lower()
            if lowered in _TRUE_WORDS:
                values[dest] = True
            elif lowered in _FALSE_WORDS:
                values[dest] = False
            else:
                raise ValueError(f"{path}:{lineno}: {key} must be true or false")
        else:
            try:
                values[dest] = kind(value)
            except ValueError:
                raise ValueError(
                    f"{path}:{lineno}: cannot parse {key} value {value!r}"
                ) from None
    return values


def parse_cli(argv: Sequence[str] | None = None) -> ExperimentConfig:
    """Build an ExperimentConfig from flags and config file; exits 2 on misuse."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    if not argv:
        parser.print_help(sys.stderr)
        raise SystemExit(2)

    bootstrap = argparse.ArgumentParser(add_help=False)
    bootstrap.add_argument("--config", dest="config", type=str, default=None)
    pre, _ = bootstrap.parse_known_args(argv)
    if pre.config is not None:
        try:
            parser.set_defaults(**_read_config_file(Path(pre.config)))
        except ValueError as err:
            parser.error(str(err))
    args = parser.parse_args(argv)

    if args.function is None:
        parser.error("--function is required (ackley, rastrigin, or griewangk)")
    if args.selection is not None and args.compare is not None:
        parser.error("--selection and --compare are mutually exclusive")
    if args.selection is None and args.compare is None:
        parser.error("one of --selection or --compare is required")
    schemes = (
        [s.strip() for s in args.compare.split(",") if s.strip()]
        if args.compare is not None
        else [args.selection]
    )
    if not schemes:
        parser.error("--compare lists no schemes")
    if len(set(schemes)) != len(schemes):
        parser.error(f"--compare lists a scheme twice: {args.compare}")
    for scheme in schemes:
        if scheme not in SCHEMES:
            parser.error(f"unknown selection scheme {scheme!r}; choose from {SCHEMES}")
    if "tsallis" in schemes:
        if args.q0 is None:
            parser.error("--q0 is required for tsallis selection")
    else:
        if args.q0 is not None:
            parser.error("--q0 only applies to tsallis selection")
        if args.constant_q:
            parser.error("--constant-q only applies to tsallis selection")

    try:
        objective = get_objective(args.function)
        space = objective.search_space(num_vars=args.vars, bits_per_var=args.bits)
        variation = VariationConfig(p_crossover=args.pc, p_bit_mutation=args.pbit)
        configs = []
        for scheme in schemes:
            is_tsallis = scheme == "tsallis"
            schedule = ScheduleConfig(
                beta0=args.beta0,
                alpha=args.alpha,
                q0=args.q0 if is_tsallis else 1.0,
                horizon=args.generations,
                constant_q=args.constant_q if is_tsallis else False,
            )
            configs.append(
                EngineConfig(
                    objective=objective.name,
                    space=space,
                    population_size=args.pop_size,
                    scheme=scheme,
                    schedule=schedule,
                    variation=variation,
                    energy_shift=not args.no_energy_shift,
                )
            )
        return ExperimentConfig(
            configs=tuple(configs),
            labels=tuple(config_label(c) for c in configs),
            runs=args.runs,
            seed=args.seed,
            out_dir=Path(args.out),
            plot=args.plot,
        )
    except ValueError as err:
        parser.error(str(err))
        raise AssertionError("unreachable")  # parser.error always exits


def main(argv: Sequence[str] | None = None) -> int:
    """CLI entry point: 0 on success, 2 on usage errors, 1 on runtime errors."""
    experiment = parse_cli(argv)
    try:
        aggregates = run_experiment(experiment)
        paths = write_csv(aggregates, experiment.out_dir)
        if experiment.plot:
            paths.append(
                render_convergence_plot(
                    aggregates, experiment.out_dir / "convergence.svg"
                )
            )
    except Exception as err:
        print(f"tsallis-ea: error: {err}", file=sys.stderr)
        return 1
    for path in paths:
        print(path)
    return 0
