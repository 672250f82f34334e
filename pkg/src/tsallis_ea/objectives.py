"""Benchmark energy functions and their registry.

All three functions are minimized, attain 0 at the origin, and are
nonnegative on their registered boxes.  Each accepts a single point of
shape (l,) and returns a float, or a batch of shape (n, l) and returns
an (n,) array; the reduction always runs over the last axis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .genome import Population, SearchSpace, decode_population


def _as_points(x) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    if x.ndim not in (1, 2) or x.shape[-1] == 0:
        raise ValueError("expected a nonempty vector or batch of vectors")
    return x


def _scalar_or_array(values: np.ndarray, was_1d: bool):
    return float(values) if was_1d else values


def ackley(x) -> float | np.ndarray:
    """Ackley's function: two exponential wells over a cosine ripple."""
    x = _as_points(x)
    dim = x.shape[-1]
    rms = np.sqrt(np.sum(x**2, axis=-1) / dim)
    mean_cos = np.sum(np.cos(2 * np.pi * x), axis=-1) / dim
    value = -20.0 * np.exp(-0.2 * rms) - np.exp(mean_cos) + 20.0 + np.e
    return _scalar_or_array(value, x.ndim == 1)


def rastrigin(x) -> float | np.ndarray:
    """Rastrigin's function with A = 10."""
    A = 10.0
    x = _as_points(x)
    dim = x.shape[-1]
    value = A * dim + np.sum(x**2 - A * np.cos(2 * np.pi * x), axis=-1)
    return _scalar_or_array(value, x.ndim == 1)


def griewangk(x) -> float | np.ndarray:
    """Griewangk's function; the 1-based 1/sqrt(i) scaling of the cosine
    product makes it asymmetric in its coordinates."""
    x = _as_points(x)
    dim = x.shape[-1]
    idx = np.sqrt(np.arange(1, dim + 1, dtype=np.float64))
    value = np.sum(x**2, axis=-1) / 4000.0 - np.prod(np.cos(x / idx), axis=-1) + 1.0
    return _scalar_or_array(value, x.ndim == 1)


@dataclass(frozen=True)
class Objective:
    """A named energy function with its fixed search bounds."""

    name: str
    bounds: tuple[float, float]
    evaluate: Callable = field(repr=False)

    def search_space(self, num_vars: int = 15, bits_per_var: int = 5) -> SearchSpace:
        lo, hi = self.bounds
        return SearchSpace(num_vars=num_vars, bits_per_var=bits_per_var, lo=lo, hi=hi)


OBJECTIVES: dict[str, Objective] = {
    obj.name: obj
    for obj in (
        Objective("ackley", (-30.0, 30.0), ackley),
        Objective("rastrigin", (-5.12, 5.12), rastrigin),
        Objective("griewangk", (-600.0, 600.0), griewangk),
    )
}


def get_objective(name: str) -> Objective:
    """Look up a registered objective by its lowercase name."""
    try:
        return OBJECTIVES[name]
    except KeyError:
        known = ", ".join(sorted(OBJECTIVES))
        raise ValueError(f"unknown objective {name!r}; known: {known}") from None


def evaluate_population(
    population: Population, objective: Objective, space: SearchSpace
) -> np.ndarray:
    """Energies of every genome in decode order, as an (n,) float array."""
    points = decode_population(population, space)
    if points.shape[0] == 0:
        return np.zeros(0, dtype=np.float64)
    return np.asarray(objective.evaluate(points), dtype=np.float64)
