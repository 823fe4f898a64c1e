"""Coin-game observables: matrix form, statistics, and the moment recurrence.

A game assigns payoffs to the faces of the three coins: coin 1 pays +x or
-x, coin 2 pays +y or -y, coin 3 pays z1 or z2. The same quadruple packs
into a Hermitian 2x2 matrix, so every qubit observable is a coin game and
vice versa. Every moment of the observable is determined by its mean
through a two-term linear recurrence; the matrix-power route is kept as an
independent reference implementation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Mapping

import numpy as np

from .core import CoinStateError, NonQuantumStateError, ProbabilityTriple, probs_to_density

# Below this payoff radius the observable is a multiple of the identity
# and the anisotropy coefficient is undefined.
DEGENERATE_RADIUS_ATOL = 1e-12

# Outcome probabilities tolerate this much floating-point overshoot in the
# anisotropy coefficient before the state is flagged as non-quantum.
ANISOTROPY_ATOL = 1e-9


def _constant(values: list[list[complex]]) -> np.ndarray:
    m = np.array(values, dtype=complex)
    m.setflags(write=False)
    return m


IDENTITY_2 = _constant([[1, 0], [0, 1]])
PAULI_X = _constant([[0, 1], [1, 0]])
PAULI_Y = _constant([[0, -1j], [1j, 0]])
PAULI_Z = _constant([[1, 0], [0, -1]])

PAULI_BASIS = (PAULI_X, PAULI_Y, PAULI_Z)


class InvalidObservableError(CoinStateError):
    """Payoff quadruple contains a non-finite or non-numeric entry."""


@dataclass(frozen=True)
class GameObservable:
    """Payoff quadruple (x, y, z1, z2) of the three-coin game.

    Derived quantities: ``c = (z1 + z2) / 2`` is the isotropic payoff
    offset, ``z = (z1 - z2) / 2`` the half payoff gap of the third coin,
    and ``r = sqrt(x^2 + y^2 + z^2)`` the payoff radius. The matrix form
    has eigenvalues c - r and c + r.
    """

    x: float
    y: float
    z1: float
    z2: float

    def __post_init__(self) -> None:
        for name in ("x", "y", "z1", "z2"):
            value = getattr(self, name)
            try:
                numeric = float(value)
            except (TypeError, ValueError):
                raise InvalidObservableError(f"{name}={value!r} is not a number") from None
            if not math.isfinite(numeric):
                raise InvalidObservableError(f"{name}={value!r} is not finite")
            object.__setattr__(self, name, numeric)

    @property
    def c(self) -> float:
        """Isotropic payoff offset (z1 + z2) / 2."""
        return (self.z1 + self.z2) / 2.0

    @property
    def z(self) -> float:
        """Half payoff gap (z1 - z2) / 2 of the third coin."""
        return (self.z1 - self.z2) / 2.0

    @property
    def r(self) -> float:
        """Payoff radius sqrt(x^2 + y^2 + z^2)."""
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def is_degenerate(self) -> bool:
        """True when the observable is a multiple of the identity (r = 0)."""
        return self.r < DEGENERATE_RADIUS_ATOL

    def to_matrix(self) -> np.ndarray:
        """Hermitian matrix form [[z1, x - iy], [x + iy, z2]].

        Equals c * I + x * sigma_x + y * sigma_y + z * sigma_z.
        """
        return np.array(
            [[self.z1, complex(self.x, -self.y)], [complex(self.x, self.y), self.z2]],
            dtype=complex,
        )

    def eigenvalues(self) -> tuple[float, float]:
        """Outcome values (c - r, c + r)."""
        return (self.c - self.r, self.c + self.r)

    def to_dict(self) -> dict[str, float]:
        return {"x": self.x, "y": self.y, "z1": self.z1, "z2": self.z2}

    @classmethod
    def from_dict(cls, payload: Mapping[str, Any]) -> "GameObservable":
        if not isinstance(payload, Mapping):
            raise InvalidObservableError(f"expected an object with x, y, z1, z2, got {payload!r}")
        values = []
        for field in ("x", "y", "z1", "z2"):
            if field not in payload:
                raise InvalidObservableError(f"missing field {field!r}")
            value = payload[field]
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise InvalidObservableError(f"field {field!r} must be a number, got {value!r}")
            values.append(float(value))
        return cls(*values)


@dataclass(frozen=True)
class MomentSequence:
    """Moments m_0 .. m_N of a game observable in a given state.

    ``f`` is the anisotropy coefficient (mean - c) / r, the cosine between
    the state's mean spin and the payoff direction; it is ``None`` for
    degenerate observables (r = 0), whose moments are just powers of c.
    """

    moments: tuple[float, ...]
    c: float
    r: float
    f: float | None

    def __len__(self) -> int:
        return len(self.moments)

    def to_dict(self) -> dict[str, Any]:
        return {
            "moments": list(self.moments),
            "c": self.c,
            "r": self.r,
            "f": self.f,
        }


def mean(p: ProbabilityTriple, obs: GameObservable) -> float:
    """Game average (2 p1 - 1) x + (2 p2 - 1) y + p3 z1 + (1 - p3) z2.

    Accepts any cube triple: for quantum-admissible triples this equals
    the matrix trace Tr(rho A); for general independent coins it is the
    plain classical expected payoff. The caller chooses the reading.
    """
    return (
        (2.0 * p.p1 - 1.0) * obs.x
        + (2.0 * p.p2 - 1.0) * obs.y
        + p.p3 * obs.z1
        + (1.0 - p.p3) * obs.z2
    )


def second_moment(p: ProbabilityTriple, obs: GameObservable) -> float:
    """Second moment (z1 + z2) <A> + r^2 - c^2, valid for any cube triple."""
    return (obs.z1 + obs.z2) * mean(p, obs) + obs.r**2 - obs.c**2


def _anisotropy(p: ProbabilityTriple, obs: GameObservable) -> float:
    return (mean(p, obs) - obs.c) / obs.r


def generating_function(p: ProbabilityTriple, obs: GameObservable, lam: float) -> float:
    """Moment generating function G(lam) = Tr(rho exp(lam A)) in closed form.

    Splitting the matrix into c * I plus a traceless part of radius r
    gives G(lam) = exp(lam c) [cosh(lam r) + f sinh(lam r)] with
    f = (<A> - c) / r. For degenerate observables (r = 0) this collapses
    to exp(lam c).
    """
    if not math.isfinite(lam):
        raise ValueError(f"lam={lam!r} is not finite")
    if obs.is_degenerate():
        return math.exp(lam * obs.c)
    r = obs.r
    f = _anisotropy(p, obs)
    return math.exp(lam * obs.c) * (math.cosh(lam * r) + f * math.sinh(lam * r))


def moments(p: ProbabilityTriple, obs: GameObservable, n_max: int) -> MomentSequence:
    """Moments m_0 .. m_{n_max} via the two-term linear recurrence.

    The generating function satisfies G'' = 2c G' + (r^2 - c^2) G, so

        m_{n+2} = 2 c m_{n+1} + (r^2 - c^2) m_n,  m_0 = 1,  m_1 = <A>.

    Every moment therefore depends on the state only through the mean.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    c, r = obs.c, obs.r
    values = [1.0]
    if n_max >= 1:
        values.append(mean(p, obs))
    coeff = r * r - c * c
    for _ in range(n_max - 1):
        values.append(2.0 * c * values[-1] + coeff * values[-2])
    return MomentSequence(
        moments=tuple(values),
        c=c,
        r=r,
        f=None if obs.is_degenerate() else _anisotropy(p, obs),
    )


def moments_oracle(p: ProbabilityTriple, obs: GameObservable, n_max: int) -> MomentSequence:
    """Same sequence by literal matrix powers Tr(rho A^n); no recurrence.

    Reference implementation used to cross-check :func:`moments`.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    rho = probs_to_density(p).matrix
    a = obs.to_matrix()
    values = []
    power = np.array(IDENTITY_2)
    for _ in range(n_max + 1):
        values.append(float(np.trace(rho @ power).real))
        power = power @ a
    f = None
    if not obs.is_degenerate():
        f = (float(np.trace(rho @ a).real) - obs.c) / obs.r
    return MomentSequence(moments=tuple(values), c=obs.c, r=obs.r, f=f)


def outcome_distribution(
    p: ProbabilityTriple, obs: GameObservable
) -> list[tuple[float, float]]:
    """Measurement outcomes (c + r, c - r) with their Born probabilities.

    The probabilities are (1 + f) / 2 and (1 - f) / 2; a degenerate
    observable yields the single outcome c with probability 1. Requires a
    quantum-admissible state: |f| beyond 1 + 1e-9 cannot come from a state
    inside the ball and is reported as an error rather than clamped away.
    """
    if obs.is_degenerate():
        return [(obs.c, 1.0)]
    f = _anisotropy(p, obs)
    if abs(f) > 1.0 + ANISOTROPY_ATOL:
        raise NonQuantumStateError(
            f"anisotropy coefficient {f!r} exceeds 1 in magnitude; "
            f"p={p.as_tuple()} is not a quantum state for this observable"
        )
    f = max(-1.0, min(1.0, f))
    c, r = obs.c, obs.r
    return [(c + r, (1.0 + f) / 2.0), (c - r, (1.0 - f) / 2.0)]
