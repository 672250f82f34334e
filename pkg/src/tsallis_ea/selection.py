"""Selection probability vectors and roulette-wheel sampling.

Three schemes turn a population's energy vector into a normalized
probability vector over the population:

* ``proportionate_weights``: probability inversely proportional to energy.
* ``boltzmann_weights``: probability proportional to exp(-beta * E).
* ``tsallis_weights``: probability proportional to the generalized
  canonical factor [1 - (1-q) * beta * E]^(1/(1-q)), which recovers the
  Boltzmann factor as q -> 1 and develops either heavy tails (q > 1) or
  a hard cutoff (q < 1, bracket <= 0).

Both exponential-family schemes shift energies by the population minimum
before weighting.  For the Boltzmann factor this is an exact identity
(the common factor cancels in the normalizer); for the Tsallis factor it
changes the distribution and is therefore exposed as the ``shift`` flag,
default on, which anchors the best individual at bracket value 1 and
keeps large ``beta * E`` products from cutting off entire populations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .genome import Population

#: below this distance from 1, q is treated as exactly 1 (exponential branch)
Q_ONE_EPS = 1e-9

#: regularizer keeping 1/E defined at the global optimum E = 0
PROPORTIONATE_EPS = 1e-12

_NORMALIZATION_TOL = 1e-12


@dataclass(frozen=True)
class SelectionWeights:
    """A normalized selection distribution over one population.

    Attributes:
        probs: (n,) array of selection probabilities, nonnegative, sum 1.
        scheme: "proportionate", "boltzmann", or "tsallis".
        beta: inverse temperature used, where applicable.
        q: non-extensive index used, where applicable.
    """

    probs: np.ndarray
    scheme: str
    beta: float | None = None
    q: float | None = None

    def __post_init__(self) -> None:
        probs = np.asarray(self.probs, dtype=np.float64)
        if probs.ndim != 1 or probs.size == 0:
            raise ValueError("probs must be a nonempty 1-D vector")
        if not np.isfinite(probs).all() or (probs < 0).any():
            raise ValueError("probs must be finite and nonnegative")
        if abs(probs.sum() - 1.0) > _NORMALIZATION_TOL:
            raise ValueError(f"probs sum to {probs.sum()!r}, expected 1")
        object.__setattr__(self, "probs", probs)

    def __len__(self) -> int:
        return self.probs.size


def _check_energies(energies) -> np.ndarray:
    e = np.asarray(energies, dtype=np.float64)
    if e.ndim != 1 or e.size == 0:
        raise ValueError("energies must be a nonempty 1-D vector")
    if not np.isfinite(e).all():
        raise ValueError("energies must all be finite")
    return e


def _normalize(weights: np.ndarray) -> np.ndarray:
    total = weights.sum()
    probs = weights / total
    # one corrective pass keeps the sum within 1e-12 of 1 for any length
    return probs / probs.sum()


def _argmin_point_mass(energies: np.ndarray) -> np.ndarray:
    lowest = energies == energies.min()
    return lowest / lowest.sum()


def _boltzmann_probs(energies: np.ndarray, beta: float) -> np.ndarray:
    shifted = energies - energies.min()
    return _normalize(np.exp(-beta * shifted))


def boltzmann_weights(energies, beta: float) -> SelectionWeights:
    """Boltzmann selection probabilities exp(-beta*E_k) / sum_j exp(-beta*E_j).

    Computed on min-shifted energies, which is exactly equivalent and
    never overflows: the factor exp(beta * E_min) cancels on division.
    """
    e = _check_energies(energies)
    if not np.isfinite(beta) or beta < 0:
        raise ValueError(f"beta must be finite and >= 0, got {beta}")
    return SelectionWeights(_boltzmann_probs(e, beta), "boltzmann", beta=float(beta))


def tsallis_weights(energies, beta: float, q: float, shift: bool = True) -> SelectionWeights:
    """Generalized canonical selection probabilities at non-extensive index q.

    Each individual gets unnormalized weight
    ``[1 - (1-q) * beta * E_k] ** (1/(1-q))`` when the bracket is
    positive and 0 otherwise (the cutoff convention), normalized by the
    partition sum.  ``|q - 1| < 1e-9`` routes to the Boltzmann branch,
    the exact q -> 1 limit.  With ``shift`` (default) energies enter
    relative to the population minimum; see the module docstring.

    Should the cutoff zero every weight (possible only when ``shift`` is
    off), selection degenerates to a point mass on the minimum-energy
    individual, split uniformly over ties.
    """
    e = _check_energies(energies)
    if not np.isfinite(beta) or beta < 0:
        raise ValueError(f"beta must be finite and >= 0, got {beta}")
    if not np.isfinite(q):
        raise ValueError(f"q must be finite, got {q}")

    if shift:
        e = e - e.min()

    if abs(q - 1.0) < Q_ONE_EPS:
        probs = _boltzmann_probs(e, beta)
        return SelectionWeights(probs, "tsallis", beta=float(beta), q=float(q))

    bracket = 1.0 - (1.0 - q) * beta * e
    positive = bracket > 0.0
    if not positive.any():
        probs = _argmin_point_mass(e)
        return SelectionWeights(probs, "tsallis", beta=float(beta), q=float(q))

    # power form as exp(log(.)/(1-q)), rescaled by its maximum so that
    # extreme exponents 1/(1-q) can neither overflow nor flush to zero
    log_w = np.full_like(bracket, -np.inf)
    log_w[positive] = np.log(bracket[positive]) / (1.0 - q)
    weights = np.exp(log_w - log_w.max())
    return SelectionWeights(_normalize(weights), "tsallis", beta=float(beta), q=float(q))


def proportionate_weights(energies) -> SelectionWeights:
    """Selection probabilities inversely proportional to (nonnegative) energies."""
    e = _check_energies(energies)
    if (e < 0).any():
        raise ValueError("proportionate selection requires nonnegative energies")
    return SelectionWeights(_normalize(1.0 / (e + PROPORTIONATE_EPS)), "proportionate")


def sample_population(
    population: Population,
    weights: SelectionWeights,
    size: int,
    rng: np.random.Generator,
) -> Population:
    """Draw ``size`` individuals i.i.d. from ``weights`` over ``population``.

    Roulette-wheel selection with replacement: row k is copied with
    probability ``weights.probs[k]`` at every draw.
    """
    pop = np.asarray(population)
    if pop.ndim != 2:
        raise ValueError("population must be a 2-D array of genomes")
    if len(weights) != pop.shape[0]:
        raise ValueError(
            f"{len(weights)} weights do not match population of {pop.shape[0]}"
        )
    if size < 1:
        raise ValueError(f"sample size must be >= 1, got {size}")
    chosen = rng.choice(pop.shape[0], size=size, replace=True, p=weights.probs)
    return pop[chosen]


def tsallis_entropy(weights, q: float) -> float:
    """Non-extensive entropy S_q = (1 - sum_k p_k^q) / (q - 1) of a distribution.

    Accepts a ``SelectionWeights`` or a bare probability vector, which
    must be normalized.  ``|q - 1| < 1e-9`` returns the Shannon entropy
    -sum p ln p, the q -> 1 limit.  Zero-probability entries are
    excluded from the sums (0 ln 0 := 0, and 0^q for q < 0 likewise
    contributes nothing).
    """
    if not np.isfinite(q):
        raise ValueError(f"q must be finite, got {q}")
    probs = weights.probs if isinstance(weights, SelectionWeights) else np.asarray(
        weights, dtype=np.float64
    )
    if probs.ndim != 1 or probs.size == 0:
        raise ValueError("probs must be a nonempty 1-D vector")
    if (probs < 0).any() or abs(probs.sum() - 1.0) > 1e-9:
        raise ValueError("input is not a normalized probability vector")
    p = probs[probs > 0]
    if abs(q - 1.0) < Q_ONE_EPS:
        return float(-np.sum(p * np.log(p)))
    return float((1.0 - np.sum(p**q)) / (q - 1.0))
