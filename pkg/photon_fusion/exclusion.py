"""
Signal and limit curves in the (Delta, beta) plane.

For each Delta the curve value is the *smallest* beta whose predicted rotation
reaches the target. At large mixing the rotation oscillates in beta and more
than one beta reproduces a target; exclusion plots are read from the smallest
coupling, so that is the one returned.

Where Delta tau / 2 hbar sits on a multiple of pi the leading-order rotation
vanishes and the required beta diverges. Those points are flagged as nodes and
carry no beta.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import repeat
from typing import List, Optional, Sequence, Union

import numpy as np
from scipy.optimize import bisect

from photon_fusion.dynamics import FieldRegion, ModelParams, half_phase, observables
from photon_fusion.errors import UsageError
from utils.logger import Logger


@dataclass(frozen=True)
class ObservedRotation:
    rotation: float  # rad
    sigma: float     # rad


@dataclass(frozen=True)
class RotationLimit:
    limit_2sigma: float  # rad


Measurement = Union[ObservedRotation, RotationLimit]


@dataclass(frozen=True)
class ExperimentConfig:
    name: str
    b: float                   # T
    l: float                   # m
    wavelength: float          # m
    passes: int
    polarization_angle: float  # rad, between polarization and B
    measurement: Measurement
    provenance: str = ""

    def __post_init__(self) -> None:
        _ = self.region  # FieldRegion checks b, l and passes
        if not np.isfinite(self.wavelength) or self.wavelength <= 0:
            raise UsageError(f"wavelength must be finite and > 0, got {self.wavelength}")
        if not np.isfinite(self.polarization_angle):
            raise UsageError(f"polarization angle must be finite, got {self.polarization_angle}")
        if not isinstance(self.measurement, (ObservedRotation, RotationLimit)):
            raise UsageError(f"unknown measurement {self.measurement!r}")
        for value in vars(self.measurement).values():
            if not np.isfinite(value) or value < 0:
                raise UsageError(f"measurement values must be finite and >= 0, got {self.measurement}")

    @property
    def region(self) -> FieldRegion:
        return FieldRegion(b=self.b, l=self.l, passes=self.passes, geometry=self.polarization_angle)

    @property
    def target(self) -> float:
        if isinstance(self.measurement, ObservedRotation):
            return self.measurement.rotation
        return self.measurement.limit_2sigma


@dataclass(frozen=True)
class CurvePoint:
    delta: float
    beta: Optional[float]
    predicted_rotation: Optional[float]
    node_flag: bool


@dataclass(frozen=True)
class ScanRow:
    delta: float
    beta: float
    rotation: float
    ellipticity: float
    birefringence: float


@dataclass(frozen=True)
class SolverSettings:
    beta_min: float = 1e-30
    beta_max: float = 1e10
    points_per_decade: int = 20
    beta_rtol: float = 1e-12
    node_tolerance: float = 1e-9

    def __post_init__(self) -> None:
        if not 0 < self.beta_min < self.beta_max:
            raise UsageError(f"need 0 < beta_min < beta_max, got {self.beta_min}, {self.beta_max}")
        if self.points_per_decade < 1:
            raise UsageError(f"points_per_decade must be >= 1, got {self.points_per_decade}")
        # scipy bisect refuses rtol below 4 eps.
        if not 4 * np.finfo(float).eps <= self.beta_rtol < 1:
            raise UsageError(f"beta_rtol must be in [4 eps, 1), got {self.beta_rtol}")

    def beta_grid(self) -> np.ndarray:
        decades = np.log10(self.beta_max) - np.log10(self.beta_min)
        count = int(np.ceil(round(decades * self.points_per_decade, 9))) + 1
        return np.logspace(np.log10(self.beta_min), np.log10(self.beta_max), count)


def predicted_rotation(p: ModelParams, e: ExperimentConfig) -> float:
    return observables(p, e.region, e.wavelength).rotation


def is_node(e: ExperimentConfig, delta: float, tolerance: float = 1e-9) -> bool:
    """Delta tau / 2 hbar within tolerance of a non-zero multiple of pi, where sinc vanishes."""
    phi_delta = half_phase(delta, e.region.tau)
    k = np.rint(phi_delta / np.pi)
    return bool(k >= 1 and abs(phi_delta - k * np.pi) <= tolerance)


def required_beta(e: ExperimentConfig, delta: float, target: float,
                  solver: Optional[SolverSettings] = None) -> Optional[float]:
    """Smallest beta with |rotation| = target at this Delta, None if no finite beta does."""
    solver = solver or SolverSettings()
    if target == 0:
        return 0.0
    if is_node(e, delta, solver.node_tolerance):
        Logger().warning("Delta=%.3e eV is a node of %s, no finite beta", delta, e.name)
        return None

    def excess(beta: float) -> float:
        return abs(predicted_rotation(ModelParams(delta, beta), e)) - target

    betas = solver.beta_grid()
    first = next((i for i, beta in enumerate(betas) if excess(beta) >= 0), None)
    if first is None:
        Logger().warning("No beta in [%.1e, %.1e] reaches %.3e rad at Delta=%.3e eV",
                         solver.beta_min, solver.beta_max, target, delta)
        return None
    hi = float(betas[first])
    lo = float(betas[first - 1]) if first > 0 else 0.0
    if excess(hi) == 0:
        return hi
    Logger().debug("Bracket for Delta=%.3e eV: [%.6e, %.6e]", delta, lo, hi)
    return float(bisect(excess, lo, hi, xtol=1e-300, rtol=solver.beta_rtol, maxiter=500))


def _curve(e: ExperimentConfig, delta_grid: Sequence[float], solver: Optional[SolverSettings]) -> List[CurvePoint]:
    grid = np.asarray(delta_grid, dtype=float)
    if grid.size == 0:
        raise UsageError("delta grid is empty")
    if np.any(~np.isfinite(grid)) or np.any(grid <= 0) or np.any(np.diff(grid) < 0):
        raise UsageError("delta grid must be finite, positive and sorted ascending")

    points = []
    for delta in grid:
        beta = required_beta(e, float(delta), e.target, solver)
        if beta is None:
            points.append(CurvePoint(float(delta), None, None, True))
        else:
            points.append(CurvePoint(float(delta), beta,
                                     predicted_rotation(ModelParams(float(delta), beta), e), False))
    return points


def signal_curve(e: ExperimentConfig, delta_grid: Sequence[float],
                 solver: Optional[SolverSettings] = None) -> List[CurvePoint]:
    if not isinstance(e.measurement, ObservedRotation):
        raise UsageError(f"{e.name} carries a limit, a signal curve needs an observed rotation")
    return _curve(e, delta_grid, solver)


def limit_curve(e: ExperimentConfig, delta_grid: Sequence[float],
                solver: Optional[SolverSettings] = None) -> List[CurvePoint]:
    """Parameter points above the curve in beta are excluded."""
    if not isinstance(e.measurement, RotationLimit):
        raise UsageError(f"{e.name} carries an observed rotation, a limit curve needs a 2-sigma limit")
    return _curve(e, delta_grid, solver)


def _scan_row(e: ExperimentConfig, delta: float, betas: Sequence[float]) -> List[ScanRow]:
    """All beta values at one Delta; module level so worker processes can unpickle it."""
    region = e.region
    out = []
    for beta in betas:
        obs = observables(ModelParams(delta, beta), region, e.wavelength)
        out.append(ScanRow(delta, beta, obs.rotation, obs.ellipticity, obs.birefringence))
    return out


def grid_scan(e: ExperimentConfig, delta_grid: Sequence[float], beta_grid: Sequence[float],
              workers: int = 1) -> List[ScanRow]:
    """
    Outer product of the grids, Delta major. Rows go to a process pool when
    workers > 1 and there is more than one Delta; row order does not depend on
    workers.
    """
    deltas = [float(d) for d in delta_grid]
    betas = [float(b) for b in beta_grid]
    if not deltas or not betas:
        raise UsageError("scan grids must be non-empty")

    workers = min(max(1, workers), len(deltas))
    if workers == 1:
        rows = [_scan_row(e, delta, betas) for delta in deltas]
    else:
        Logger().debug("Scanning %d x %d grid on %d processes", len(deltas), len(betas), workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_scan_row, repeat(e), deltas, repeat(betas)))
    return [r for block in rows for r in block]
