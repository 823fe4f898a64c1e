"""Seeded Monte Carlo for the three-coin model: tosses, estimators, samplers.

The three coins are always tossed independently. The quantum-ball
constraint restricts which parameter triples describe a qubit; it does not
correlate the toss outcomes themselves. Every sampler takes an explicit
:class:`RngSpec` so results are bit-for-bit reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Literal

import numpy as np

from .core import (
    BALL_CENTER,
    BALL_RADIUS_SQ,
    QUANTUM_BALL_ATOL,
    ProbabilityTriple,
)
from .observables import GameObservable

SampleRegion = Literal["cube", "ball", "sphere"]

_SUPPORTED_ALGORITHMS = ("pcg64",)


@dataclass(frozen=True)
class RngSpec:
    """Seeded, named random generator specification.

    Identical specs produce bit-identical draws. ``stream`` selects an
    independent substream of the same seed, so parallel sampling stays
    reproducible; a single stream must be consumed sequentially.
    """

    seed: int
    algorithm: str = "pcg64"
    stream: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.seed, int) or isinstance(self.seed, bool):
            raise ValueError(f"seed must be an integer, got {self.seed!r}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must fit an unsigned 64-bit integer, got {self.seed}")
        if self.algorithm not in _SUPPORTED_ALGORITHMS:
            raise ValueError(
                f"unknown algorithm {self.algorithm!r}; supported: {_SUPPORTED_ALGORITHMS}"
            )
        if not isinstance(self.stream, int) or isinstance(self.stream, bool) or self.stream < 0:
            raise ValueError(f"stream must be a nonnegative integer, got {self.stream!r}")

    def generator(self) -> np.random.Generator:
        """Fresh generator positioned at the start of this spec's stream."""
        sequence = np.random.SeedSequence(entropy=self.seed, spawn_key=(self.stream,))
        return np.random.Generator(np.random.PCG64(sequence))

    def with_stream(self, stream: int) -> "RngSpec":
        """Sibling spec drawing from an independent substream of the same seed."""
        return replace(self, stream=stream)


@dataclass(frozen=True)
class TossRecord:
    """Raw outcome of tossing each coin ``n_tosses`` times."""

    n_tosses: int
    heads_counts: tuple[int, int, int]

    def __post_init__(self) -> None:
        if self.n_tosses < 1:
            raise ValueError(f"n_tosses must be at least 1, got {self.n_tosses}")
        if len(self.heads_counts) != 3:
            raise ValueError("heads_counts must hold exactly three counts")
        for k, count in enumerate(self.heads_counts):
            if not 0 <= count <= self.n_tosses:
                raise ValueError(
                    f"heads_counts[{k}]={count} outside [0, {self.n_tosses}]"
                )


@dataclass(frozen=True)
class SampleStats:
    """Empirical triple and per-coin payoff means derived from a record."""

    p_hat: ProbabilityTriple
    mean_x: float
    mean_y: float
    mean_z: float
    stderr: tuple[float, float, float]

    @property
    def mean_total(self) -> float:
        """Empirical estimate of the game average <A> = <X> + <Y> + <Z>."""
        return self.mean_x + self.mean_y + self.mean_z

    def to_dict(self) -> dict:
        return {
            "p_hat": self.p_hat.to_dict(),
            "mean_x": self.mean_x,
            "mean_y": self.mean_y,
            "mean_z": self.mean_z,
            "mean_total": self.mean_total,
            "stderr": list(self.stderr),
        }


def toss(p: ProbabilityTriple, n: int, rng: RngSpec) -> TossRecord:
    """Toss the three coins ``n`` times each, independently.

    The counts are three binomial draws with success probabilities
    (p1, p2, p3); fixing the spec fixes the record exactly.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    gen = rng.generator()
    counts = gen.binomial(n, [p.p1, p.p2, p.p3])
    return TossRecord(n_tosses=n, heads_counts=tuple(int(c) for c in counts))


def estimate(record: TossRecord, obs: GameObservable) -> SampleStats:
    """Empirical frequencies and payoff means for a toss record.

    mean_x = (2 p^_1 - 1) x, mean_y = (2 p^_2 - 1) y and
    mean_z = p^_3 z1 + (1 - p^_3) z2, so their sum estimates the game
    average. Standard errors are the binomial sqrt(p^ (1 - p^) / n).
    """
    n = record.n_tosses
    p_hat = tuple(count / n for count in record.heads_counts)
    stderr = tuple(math.sqrt(ph * (1.0 - ph) / n) for ph in p_hat)
    return SampleStats(
        p_hat=ProbabilityTriple(*p_hat),
        mean_x=(2.0 * p_hat[0] - 1.0) * obs.x,
        mean_y=(2.0 * p_hat[1] - 1.0) * obs.y,
        mean_z=p_hat[2] * obs.z1 + (1.0 - p_hat[2]) * obs.z2,
        stderr=stderr,
    )


def _draw_state(region: SampleRegion, gen: np.random.Generator) -> ProbabilityTriple:
    if region == "cube":
        return ProbabilityTriple(*gen.random(3))
    if region == "ball":
        # Rejection from the cube; acceptance rate is the ball/cube volume
        # ratio pi/6, which doubles as a statistical self-check.
        while True:
            point = gen.random(3)
            if float(np.sum((point - BALL_CENTER) ** 2)) <= BALL_RADIUS_SQ:
                return ProbabilityTriple(*point)
    if region == "sphere":
        while True:
            direction = gen.standard_normal(3)
            norm = float(np.linalg.norm(direction))
            if norm > 0.0:
                break
        offset = direction * (0.5 / norm)
        return ProbabilityTriple(*(BALL_CENTER + offset))
    raise ValueError(f"region must be 'cube', 'ball' or 'sphere', got {region!r}")


def sample_state(region: SampleRegion, rng: RngSpec) -> ProbabilityTriple:
    """Draw one triple uniformly from the cube or ball, or from the pure-state sphere."""
    return _draw_state(region, rng.generator())


def sample_states(region: SampleRegion, count: int, rng: RngSpec) -> list[ProbabilityTriple]:
    """Draw ``count`` triples sequentially from a single stream."""
    if count < 1:
        raise ValueError(f"count must be at least 1, got {count}")
    gen = rng.generator()
    return [_draw_state(region, gen) for _ in range(count)]


def quantum_fraction(n_samples: int, rng: RngSpec) -> float:
    """Fraction of uniform cube samples that are quantum-admissible.

    Converges to the ball/cube volume ratio pi/6 ~ 0.5235988 as the sample
    count grows.
    """
    if n_samples < 1000:
        raise ValueError(f"n_samples must be at least 1000, got {n_samples}")
    gen = rng.generator()
    points = gen.random((n_samples, 3))
    radius_sq = np.sum((points - BALL_CENTER) ** 2, axis=1)
    return float(np.mean(radius_sq <= BALL_RADIUS_SQ + QUANTUM_BALL_ATOL))
