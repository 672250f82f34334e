"""Binary genotypes and their decoding to real-valued search points.

A genome is a 1-D ``numpy.uint8`` array of 0/1 bits; a population is a
2-D array whose rows are genomes.  Each block of ``bits_per_var``
consecutive bits encodes one real variable, read big-endian and mapped
linearly onto ``[lo, hi]`` so that the all-zero word decodes to ``lo``
and the all-one word to ``hi`` exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

Genome = np.ndarray
Population = np.ndarray


@dataclass(frozen=True)
class SearchSpace:
    """A box [lo, hi]^num_vars searched through fixed-width binary words.

    Attributes:
        num_vars: number of real variables encoded per genome.
        bits_per_var: word width in bits for each variable.
        lo: lower bound, shared by all variables.
        hi: upper bound, shared by all variables.
    """

    num_vars: int
    bits_per_var: int
    lo: float
    hi: float

    def __post_init__(self) -> None:
        if self.num_vars < 1:
            raise ValueError(f"num_vars must be >= 1, got {self.num_vars}")
        if self.bits_per_var < 1:
            raise ValueError(f"bits_per_var must be >= 1, got {self.bits_per_var}")
        if not self.lo < self.hi:
            raise ValueError(f"need lo < hi, got lo={self.lo}, hi={self.hi}")

    @property
    def genome_length(self) -> int:
        return self.num_vars * self.bits_per_var


def decode_variable(word: int, bits: int, lo: float, hi: float) -> float:
    """Map an unsigned ``bits``-wide integer linearly onto [lo, hi].

    Word 0 maps to ``lo`` and word ``2**bits - 1`` to ``hi`` exactly; the
    map is monotone in ``word``.
    """
    if bits < 1:
        raise ValueError(f"bits must be >= 1, got {bits}")
    if not lo < hi:
        raise ValueError(f"need lo < hi, got lo={lo}, hi={hi}")
    levels = (1 << bits) - 1
    if not 0 <= word <= levels:
        raise ValueError(f"word {word} out of range [0, {levels}]")
    return lo + (hi - lo) * (word / levels)


def _check_bits(bits: np.ndarray) -> np.ndarray:
    bits = np.asarray(bits)
    if not np.isin(bits, (0, 1)).all():
        raise ValueError("genome bits must all be 0 or 1")
    return bits.astype(np.uint8, copy=False)


def decode_genome(genome: Genome, space: SearchSpace) -> np.ndarray:
    """Decode one genome into its vector of ``num_vars`` reals."""
    bits = _check_bits(genome)
    if bits.ndim != 1 or bits.size != space.genome_length:
        raise ValueError(
            f"genome length {bits.size} does not match "
            f"{space.num_vars} x {space.bits_per_var} bits"
        )
    return decode_population(bits[np.newaxis, :], space)[0]

def decode_population(population: Population, space: SearchSpace) -> np.ndarray:
    """Decode a (n, L) population into an (n, num_vars) array of points."""
    bits = np.asarray(population)
    if bits.ndim != 2 or bits.shape[1] != space.genome_length:
        raise ValueError(
            f"population shape {bits.shape} does not match genome length "
            f"{space.genome_length}"
        )
    b = space.bits_per_var
    words = bits.reshape(bits.shape[0], space.num_vars, b).astype(np.float64)
    # big-endian within each variable's word
    place = 2.0 ** np.arange(b - 1, -1, -1)
    values = words @ place
    levels = float((1 << b) - 1)
    return space.lo + (space.hi - space.lo) * (values / levels)


def random_genome(rng: np.random.Generator, space: SearchSpace) -> Genome:
    """Draw a genome with independent fair bits from ``rng``."""
    return rng.integers(0, 2, size=space.genome_length, dtype=np.uint8)


def random_population(
    rng: np.random.Generator, space: SearchSpace, size: int
) -> Population:
    """Draw ``size`` independent random genomes as a (size, L) array."""
    if size < 1:
        raise ValueError(f"population size must be >= 1, got {size}")
    return rng.integers(0, 2, size=(size, space.genome_length), dtype=np.uint8)
