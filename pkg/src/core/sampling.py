"""
Seeded Random Sampling
Haar-random pure states and unitaries and Ginibre density matrices, drawn
from reproducible counter-based streams.

A RandomStream is (seed, stream_id). The same pair always yields the same
sequence, on every platform and in every thread. Parallel tasks derive their
own stream with ``substream(index)``, so results do not depend on the order
in which tasks run.

Example usage:
    stream = RandomStream(seed=42)
    psi = sample_random("pure", 4, stream)
    u = sample_random("unitary", 4, stream.substream(1))
    rho = sample_random("density", 16, stream.substream(2), rank=3)
"""

from typing import Literal, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

# Stored in every report next to the seed.
RNG_ALGORITHM = "numpy-philox4x64-seedseq-v1"

SampleKind = Literal["pure", "unitary", "density"]


class RandomStream(BaseModel):
    """Identifies one reproducible random sequence."""

    model_config = ConfigDict(frozen=True)

    seed: int = Field(ge=0, lt=2**64)
    stream_id: int = Field(default=0, ge=0, lt=2**64)

    def generator(self) -> np.random.Generator:
        """A fresh generator positioned at the start of this stream."""
        seq = np.random.SeedSequence(entropy=self.seed, spawn_key=(self.stream_id,))
        return np.random.Generator(np.random.Philox(seq))

    def substream(self, index: int) -> "RandomStream":
        """Derive the stream of task ``index``."""
        mixed = np.random.SeedSequence(
            entropy=self.stream_id, spawn_key=(int(index),)
        ).generate_state(1, dtype=np.uint64)[0]
        return RandomStream(seed=self.seed, stream_id=int(mixed))


RandomSource = Union[RandomStream, np.random.Generator]


def as_generator(source: RandomSource) -> np.random.Generator:
    """Accept a stream (start of sequence) or an already-advancing generator."""
    if isinstance(source, RandomStream):
        return source.generator()
    return source


def complex_normal(rng: np.random.Generator, shape: Tuple[int, ...]) -> np.ndarray:
    """Circular complex Gaussian entries with unit variance."""
    real = rng.normal(loc=0.0, scale=np.sqrt(0.5), size=shape)
    imag = rng.normal(loc=0.0, scale=np.sqrt(0.5), size=shape)
    return real + 1j * imag


def haar_pure_states(rng: np.random.Generator, dim: int, count: int) -> np.ndarray:
    """``count`` Haar-random unit vectors as the rows of a (count, dim) array."""
    z = complex_normal(rng, (count, dim))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def haar_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Haar unitary from the QR decomposition of a Ginibre matrix."""
    z = complex_normal(rng, (dim, dim))
    q, r = np.linalg.qr(z)
    # Phase fix so that the distribution is exactly Haar.
    diag = np.diag(r)
    return q * (diag / np.abs(diag))[np.newaxis, :]


def ginibre_density(rng: np.random.Generator, dim: int, rank: int) -> np.ndarray:
    """G G^dagger / tr(G G^dagger) with G a dim x rank Ginibre matrix."""
    if not 1 <= rank <= dim:
        raise ValueError(f"rank must lie in [1, {dim}], got {rank}")
    g = complex_normal(rng, (dim, rank))
    rho = g @ g.conj().T
    rho = (rho + rho.conj().T) / 2
    return rho / np.trace(rho).real


def sample_random(
    kind: SampleKind,
    dim: int,
    source: RandomSource,
    rank: Optional[int] = None,
) -> np.ndarray:
    """
    Draw one random object.

    Args:
        kind: "pure", "unitary" or "density"
        dim: Hilbert space dimension
        source: RandomStream (sampled from its start) or a live Generator
        rank: Rank of the density matrix (defaults to full rank)

    Returns:
        State vector, unitary or density matrix
    """
    rng = as_generator(source)
    if kind == "pure":
        return haar_pure_states(rng, dim, 1)[0]
    if kind == "unitary":
        return haar_unitary(rng, dim)
    if kind == "density":
        return ginibre_density(rng, dim, dim if rank is None else rank)
    raise ValueError(f"unknown sample kind: {kind}")
