"""Malevich-square geometry of a coin triple: side lengths, areas, extremes.

Each probability triple defines three squares whose side lengths couple
cyclically adjacent coins. The summed square area separates the two
admissible regions: it reaches 6 over the whole cube (independent coins)
but only 3 over the quantum ball.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .core import (
    BALL_CENTER,
    BALL_RADIUS_SQ,
    ProbabilityTriple,
)

# The radicand of the side-length formula is provably nonnegative on the
# cube; anything below zero by more than this is a logic error, not noise.
RADICAND_CLAMP_ATOL = 1e-12

Region = Literal["cube", "ball"]

# Fixed canvas proportions for the SVG triad, in units of the scale factor.
_SVG_PAD = 0.25
_SVG_GAP = 0.25
_MAX_SIDE = math.sqrt(2.0)
_SQUARE_FILLS = ("red", "black", "white")


@dataclass(frozen=True)
class MalevichTriad:
    """Side lengths of the three squares and their summed area."""

    sides: tuple[float, float, float]
    area_sum: float


@dataclass(frozen=True)
class ExtremizationResult:
    """Best point found by :func:`maximize_area` over the requested region."""

    best_p: ProbabilityTriple
    best_value: float
    iterations: int
    region: Region

    def to_dict(self) -> dict:
        return {
            "region": self.region,
            "best_value": self.best_value,
            "best_p": self.best_p.to_dict(),
            "iterations": self.iterations,
        }


def _side_squared(a: float, b: float) -> float:
    return 2.0 * a * a + 2.0 * b * b + 2.0 * a * b - 4.0 * a - 2.0 * b + 2.0


def side_lengths(p: ProbabilityTriple) -> MalevichTriad:
    """Side lengths y_1, y_2, y_3 of the triad, plus the summed area.

    Side k couples coin k with coin k+1, indices wrapping 3 -> 1:

        y_k^2 = 2 p_k^2 + 2 p_{k+1}^2 + 2 p_k p_{k+1} - 4 p_k - 2 p_{k+1} + 2

    The quadratic term in p_{k+1} makes the summed area coincide with the
    closed form of :func:`area_sum_closed_form`; that identity is enforced
    by the test suite. Radicands within -1e-12 of zero are clamped.
    """
    components = p.as_tuple()
    sides = []
    for k in range(3):
        radicand = _side_squared(components[k], components[(k + 1) % 3])
        if radicand < 0.0:
            if radicand < -RADICAND_CLAMP_ATOL:
                raise ArithmeticError(
                    f"side radicand {radicand!r} is negative beyond tolerance for p={components}"
                )
            radicand = 0.0
        sides.append(math.sqrt(radicand))
    area_sum = sum(side * side for side in sides)
    return MalevichTriad((sides[0], sides[1], sides[2]), area_sum)


def area_sum_closed_form(p: ProbabilityTriple) -> float:
    """Summed square area, directly in closed form.

    2 [3 + 2 (p1^2 + p2^2 + p3^2) - 3 (p1 + p2 + p3) + p1 p2 + p2 p3 + p3 p1]
    """
    p1, p2, p3 = p.as_tuple()
    return 2.0 * (
        3.0
        + 2.0 * (p1 * p1 + p2 * p2 + p3 * p3)
        - 3.0 * (p1 + p2 + p3)
        + p1 * p2 + p2 * p3 + p3 * p1
    )


def _area_sum_grid(points: np.ndarray) -> np.ndarray:
    p1, p2, p3 = points[..., 0], points[..., 1], points[..., 2]
    return 2.0 * (
        3.0
        + 2.0 * (p1 * p1 + p2 * p2 + p3 * p3)
        - 3.0 * (p1 + p2 + p3)
        + p1 * p2 + p2 * p3 + p3 * p1
    )


def _project(point: np.ndarray, region: Region) -> np.ndarray:
    """Clip to the cube; for the ball, first pull outside points radially onto the sphere."""
    if region == "ball":
        offset = point - BALL_CENTER
        norm_sq = float(offset @ offset)
        if norm_sq > BALL_RADIUS_SQ:
            point = BALL_CENTER + offset * (math.sqrt(BALL_RADIUS_SQ / norm_sq))
    return np.clip(point, 0.0, 1.0)


def maximize_area(
    region: Region,
    grid_density: int = 50,
    refinement_steps: int = 20,
    *,
    max_sweeps_per_step: int = 64,
) -> ExtremizationResult:
    """Maximize the summed square area over the cube or the quantum ball.

    Deterministic two-stage search: a dense axis-aligned grid scan picks
    the starting point, then a compass search refines it, halving the step
    size ``refinement_steps`` times. Steps leaving the cube are clipped;
    steps leaving the ball are projected radially onto the bounding
    sphere, where the maximum of this convex objective must lie (an
    outward radial move never decreases the area, so the sphere projection
    is also offered as an explicit candidate).

    Returns 6 for the cube (attained at the all-zeros and all-ones
    vertices) and 3 for the ball.
    """
    if region not in ("cube", "ball"):
        raise ValueError(f"region must be 'cube' or 'ball', got {region!r}")
    if grid_density < 10:
        raise ValueError(f"grid_density must be at least 10, got {grid_density}")
    if refinement_steps < 0:
        raise ValueError(f"refinement_steps must be nonnegative, got {refinement_steps}")

    axis = np.linspace(0.0, 1.0, grid_density)
    grid = np.stack(np.meshgrid(axis, axis, axis, indexing="ij"), axis=-1).reshape(-1, 3)
    if region == "ball":
        inside = np.sum((grid - BALL_CENTER) ** 2, axis=1) <= BALL_RADIUS_SQ + 1e-12
        grid = grid[inside]
    values = _area_sum_grid(grid)
    best_index = int(np.argmax(values))
    point = grid[best_index].copy()
    best_value = float(values[best_index])

    step = 1.0 / (grid_density - 1)
    iterations = 0
    for _ in range(refinement_steps):
        for _ in range(max_sweeps_per_step):
            iterations += 1
            candidates = []
            for k in range(3):
                for sign in (step, -step):
                    moved = point.copy()
                    moved[k] += sign
                    candidates.append(_project(moved, region))
            if region == "ball":
                offset = point - BALL_CENTER
                norm_sq = float(offset @ offset)
                if norm_sq > 1e-30:
                    candidates.append(
                        BALL_CENTER + offset * math.sqrt(BALL_RADIUS_SQ / norm_sq)
                    )
            candidate_values = [float(_area_sum_grid(c)) for c in candidates]
            sweep_best = int(np.argmax(candidate_values))
            if candidate_values[sweep_best] > best_value:
                best_value = candidate_values[sweep_best]
                point = candidates[sweep_best]
            else:
                break
        step *= 0.5

    return ExtremizationResult(
        best_p=ProbabilityTriple(*point),
        best_value=best_value,
        iterations=iterations,
        region=region,
    )


def _fmt(value: float) -> str:
    """Fixed-precision pixel coordinate; keeps SVG output byte deterministic."""
    return f"{value:.4f}"


def render_triad_svg(triad: MalevichTriad, *, scale: float = 100.0) -> str:
    """Render the triad as an SVG 1.1 document string.

    Three axis-aligned squares sit on a common baseline, left to right in
    index order, filled red, black, and white with black outlines. Side
    lengths are ``scale`` pixels per unit. Output bytes are deterministic
    for a fixed triad and scale.
    """
    if not math.isfinite(scale) or scale <= 0.0:
        raise ValueError(f"scale must be a positive number, got {scale!r}")
    pad = _SVG_PAD * scale
    gap = _SVG_GAP * scale
    sides_px = [side * scale for side in triad.sides]
    width = 2.0 * pad + sum(sides_px) + 2.0 * gap
    height = 2.0 * pad + _MAX_SIDE * scale
    baseline = height - pad

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
    ]
    cursor = pad
    for side, fill in zip(sides_px, _SQUARE_FILLS):
        lines.append(
            f'  <rect x="{_fmt(cursor)}" y="{_fmt(baseline - side)}" '
            f'width="{_fmt(side)}" height="{_fmt(side)}" '
            f'fill="{fill}" stroke="black" stroke-width="1"/>'
        )
        cursor += side + gap
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
