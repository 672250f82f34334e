"""Generational evolutionary loop: evaluate, select, vary, anneal.

Each generation evaluates the current population, builds the configured
selection distribution from the energies, samples the next parent pool
with replacement, applies crossover and mutation, and advances the beta
and q schedules.  One trace record is appended per generation; the best
individual ever evaluated is tracked on the side and never reinserted
into the population.

A run is a pure function of its configuration: the master seed splits
into three independent substreams (initialization, selection draws,
variation draws) so that two schemes producing identical selection
probabilities consume identical randomness and yield identical traces.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .genome import SearchSpace, decode_genome, random_population
from .objectives import evaluate_population, get_objective
from .schedules import ScheduleConfig, cauchy_beta, linear_q
from .selection import (
    SelectionWeights,
    boltzmann_weights,
    proportionate_weights,
    sample_population,
    tsallis_entropy,
    tsallis_weights,
)
from .variation import VariationConfig, vary_population

SCHEMES = ("proportionate", "boltzmann", "tsallis")


@dataclass(frozen=True)
class EngineConfig:
    """Everything one run needs; the generation count is the schedule horizon."""

    objective: str
    space: SearchSpace
    population_size: int = 350
    scheme: str = "tsallis"
    schedule: ScheduleConfig = field(default_factory=ScheduleConfig)
    variation: VariationConfig = field(default_factory=VariationConfig)
    energy_shift: bool = True
    seed: int = 0

    def __post_init__(self) -> None:
        get_objective(self.objective)
        if self.population_size < 2:
            raise ValueError(
                f"population_size must be >= 2, got {self.population_size}"
            )
        if self.scheme not in SCHEMES:
            raise ValueError(f"scheme must be one of {SCHEMES}, got {self.scheme!r}")

    @property
    def generations(self) -> int:
        return self.schedule.horizon


@dataclass(frozen=True)
class TraceRecord:
    """Per-generation statistics, recorded before selection acts."""

    generation: int
    beta: float
    q: float
    best_energy: float
    mean_energy: float
    best_so_far: float
    selection_entropy: float


@dataclass
class EngineState:
    """State between generations; owns its two random substreams."""

    t: int
    population: np.ndarray
    beta: float
    q: float
    select_rng: np.random.Generator
    vary_rng: np.random.Generator
    best_energy: float
    best_genome: np.ndarray | None
    records: tuple[TraceRecord, ...]


@dataclass(frozen=True)
class RunTrace:
    """Full record of one run plus the best individual it ever evaluated."""

    records: tuple[TraceRecord, ...]
    best_genome: np.ndarray
    best_point: np.ndarray
    best_energy: float

    def column(self, name: str) -> np.ndarray:
        """One trace field across all generations, as an array."""
        return np.array([getattr(r, name) for r in self.records])

    @property
    def best_so_far(self) -> np.ndarray:
        return self.column("best_so_far")


def _split_streams(seed: int):
    init_ss, select_ss, vary_ss = np.random.SeedSequence(seed).spawn(3)
    return (
        np.random.default_rng(init_ss),
        np.random.default_rng(select_ss),
        np.random.default_rng(vary_ss),
    )


def init(config: EngineConfig) -> EngineState:
    """Draw the initial population and prime the schedules."""
    init_rng, select_rng, vary_rng = _split_streams(config.seed)
    population = random_population(init_rng, config.space, config.population_size)
    return EngineState(
        t=0,
        population=population,
        beta=cauchy_beta(1, config.schedule),
        q=linear_q(0, config.schedule),
        select_rng=select_rng,
        vary_rng=vary_rng,
        best_energy=np.inf,
        best_genome=None,
        records=(),
    )


def _selection_weights(
    energies: np.ndarray, config: EngineConfig, state: EngineState
) -> SelectionWeights:
    if config.scheme == "boltzmann":
        return boltzmann_weights(energies, state.beta)
    if config.scheme == "tsallis":
        return tsallis_weights(energies, state.beta, state.q, shift=config.energy_shift)
    return proportionate_weights(energies)


def step(state: EngineState, config: EngineConfig) -> EngineState:
    """Advance one generation; on failure the input state is untouched.

    Evaluation, weighting, and the trace record all happen before any
    randomness is consumed, so usage errors cannot desynchronize the
    random substreams of the input state.
    """
    T = config.generations
    if state.t >= T:
        raise ValueError(f"run horizon of {T} generations already reached")
    objective = get_objective(config.objective)

    energies = evaluate_population(state.population, objective, config.space)
    weights = _selection_weights(energies, config, state)
    entropy = tsallis_entropy(weights, state.q)

    gen_best = int(np.argmin(energies))
    if energies[gen_best] < state.best_energy:
        best_energy = float(energies[gen_best])
        best_genome = state.population[gen_best].copy()
    else:
        best_energy = state.best_energy
        best_genome = state.best_genome

    record = TraceRecord(
        generation=state.t + 1,
        beta=state.beta,
        q=state.q,
        best_energy=float(energies[gen_best]),
        mean_energy=float(energies.mean()),
        best_so_far=best_energy,
        selection_entropy=entropy,
    )

    selected = sample_population(
        state.population, weights, config.population_size, state.select_rng
    )
    next_population = vary_population(selected, config.variation, state.vary_rng)

    t_next = state.t + 1
    if t_next < T:
        beta_next = cauchy_beta(t_next + 1, config.schedule)
        q_next = linear_q(t_next, config.schedule)
    else:
        beta_next, q_next = state.beta, state.q

    return replace(
        state,
        t=t_next,
        population=next_population,
        beta=beta_next,
        q=q_next,
        best_energy=best_energy,
        best_genome=best_genome,
        records=state.records + (record,),
    )


def run(config: EngineConfig) -> RunTrace:
    """Execute a complete run and return its trace."""
    state = init(config)
    for _ in range(config.generations):
        state = step(state, config)
    assert state.best_genome is not None
    return RunTrace(
        records=state.records,
        best_genome=state.best_genome,
        best_point=decode_genome(state.best_genome, config.space),
        best_energy=state.best_energy,
    )
