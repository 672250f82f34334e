"""Evolutionary optimization with generalized (Tsallis) selection.

A numpy library for binary-encoded evolutionary algorithms whose
selection step weighs individuals by the Tsallis canonical distribution,
with Boltzmann and proportionate selection as baselines, plus the
annealing and q schedules, benchmark objectives, and an experiment
harness producing seeded, reproducible convergence comparisons.
"""

from .engine import SCHEMES, EngineConfig, EngineState, RunTrace, TraceRecord, init, run, step
from .genome import (
    SearchSpace,
    decode_genome,
    decode_population,
    decode_variable,
    random_genome,
    random_population,
)
from .harness import (
    AggregateTrace,
    ExperimentConfig,
    config_label,
    main,
    parse_cli,
    render_convergence_plot,
    run_experiment,
    write_csv,
)
from .objectives import (
    OBJECTIVES,
    Objective,
    ackley,
    evaluate_population,
    get_objective,
    griewangk,
    rastrigin,
)
from .schedules import ScheduleConfig, cauchy_beta, cauchy_beta_sequence, linear_q
from .selection import (
    SelectionWeights,
    boltzmann_weights,
    proportionate_weights,
    sample_population,
    tsallis_entropy,
    tsallis_weights,
)
from .variation import VariationConfig, mutate, uniform_crossover, vary_population

__version__ = "0.1.0"

__all__ = [
    "AggregateTrace",
    "EngineConfig",
    "EngineState",
    "ExperimentConfig",
    "OBJECTIVES",
    "Objective",
    "RunTrace",
    "SCHEMES",
    "ScheduleConfig",
    "SearchSpace",
    "SelectionWeights",
    "TraceRecord",
    "VariationConfig",
    "ackley",
    "boltzmann_weights",
    "cauchy_beta",
    "cauchy_beta_sequence",
    "config_label",
    "decode_genome",
    "decode_population",
    "decode_variable",
    "evaluate_population",
    "get_objective",
    "griewangk",
    "init",
    "linear_q",
    "main",
    "mutate",
    "parse_cli",
    "proportionate_weights",
    "random_genome",
    "random_population",
    "rastrigin",
    "render_convergence_plot",
    "run",
    "run_experiment",
    "sample_population",
    "step",
    "tsallis_entropy",
    "tsallis_weights",
    "uniform_crossover",
    "vary_population",
    "write_csv",
]
