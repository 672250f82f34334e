"""Stochastic perturbation operators: uniform crossover and bit mutation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .genome import Genome, Population


@dataclass(frozen=True)
class VariationConfig:
    """Variation probabilities for one run.

    Attributes:
        p_crossover: probability that a mated pair undergoes uniform
            crossover.
        p_bit_mutation: independent flip probability for every bit of
            every individual.
    """

    p_crossover: float = 0.8
    p_bit_mutation: float = 0.02

    def __post_init__(self) -> None:
        for name in ("p_crossover", "p_bit_mutation"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {p}")


def uniform_crossover(
    a: Genome, b: Genome, rng: np.random.Generator
) -> tuple[Genome, Genome]:
    """Exchange bits between two parents under an independent fair mask.

    The first child takes a's bit where the mask is 0 and b's where it
    is 1; the second child takes the complement, so at every locus the
    children carry exactly the parents' bits.
    """
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"parent lengths differ: {a.shape} vs {b.shape}")
    mask = rng.integers(0, 2, size=a.shape, dtype=np.uint8)
    child1 = np.where(mask == 1, b, a)
    child2 = np.where(mask == 1, a, b)
    return child1, child2


def mutate(genome: Genome, p_bit: float, rng: np.random.Generator) -> Genome:
    """Flip each bit independently with probability ``p_bit``."""
    if not 0.0 <= p_bit <= 1.0:
        raise ValueError(f"p_bit must be in [0, 1], got {p_bit}")
    g = np.asarray(genome)
    flips = rng.random(g.shape) < p_bit
    return np.bitwise_xor(g, flips.astype(np.uint8))


def vary_population(
    population: Population, cfg: VariationConfig, rng: np.random.Generator
) -> Population:
    """Shuffle, mate adjacent pairs, then mutate every individual.

    Consumes randomness in a fixed order regardless of outcomes: one
    permutation, one crossover coin per pair, one full mask per pair
    (applied only where the coin came up), then one uniform draw per
    bit for mutation.  An odd leftover individual skips crossover.
    Output size always equals input size.
    """
    pop = np.asarray(population)
    if pop.ndim != 2:
        raise ValueError("population must be a 2-D array of genomes")
    n = pop.shape[0]
    shuffled = pop[rng.permutation(n)]

    n_pairs = n // 2
    out = shuffled.copy()
    if n_pairs > 0:
        crossed = rng.random(n_pairs) < cfg.p_crossover
        masks = rng.integers(0, 2, size=(n_pairs, pop.shape[1]), dtype=np.uint8)
        masks *= crossed[:, np.newaxis].astype(np.uint8)
        first = shuffled[0 : 2 * n_pairs : 2]
        second = shuffled[1 : 2 * n_pairs : 2]
        out[0 : 2 * n_pairs : 2] = np.where(masks == 1, second, first)
        out[1 : 2 * n_pairs : 2] = np.where(masks == 1, first, second)

    flips = rng.random(out.shape) < cfg.p_bit_mutation
    return np.bitwise_xor(out, flips.astype(np.uint8))
