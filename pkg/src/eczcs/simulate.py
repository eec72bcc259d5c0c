"""Frequency-selective channel sampling, LS estimation, and MSE reports.

The noise model maps Eb/N0 in dB to a noise variance sigma^2 =
10^(-EbN0/10) with unit-energy transmitted symbols; any monotone mapping
preserves the comparisons the reports are used for, and the chosen one is
recorded in every CSV header.  All randomness flows from one master seed
through counter-derived per-trial generators, so reports are reproducible
bit for bit and trials may be evaluated in any order.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from itertools import product

import numpy as np

from .sequences import Family, PhaseSequence, SequenceSet, family_from_lists
from .training import GSMConfig, TrainingMatrix, build_ls_model_matrix, build_training_matrix

NOISE_MODEL = "sigma2 = 10^(-EbN0_dB/10), unit-energy symbols"


class RankDeficientTraining(np.linalg.LinAlgError):
    """The normal matrix of a training design is singular."""


def noise_variance(ebn0_db: float) -> float:
    return 10.0 ** (-ebn0_db / 10.0)


def mse_floor(sigma2: float, energy: float) -> float:
    """The smallest normalized MSE any training of this energy can reach."""
    return sigma2 / energy


def sample_channel(delay_spread: int, n_antennas: int, rng: np.random.Generator) -> np.ndarray:
    """Independent complex Gaussian taps, variance 1/(delay_spread+1) each.

    Every antenna sees delay_spread + 1 taps whose expected total power is
    one.
    """
    taps = delay_spread + 1
    scale = math.sqrt(1.0 / (2 * taps))
    shape = (n_antennas, taps)
    return scale * (rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


def ls_estimate(X: np.ndarray, y: np.ndarray, *, matrix_id: str = "", return_residual: bool = False):
    """Least-squares channel estimate solve(X^H X, X^H y).

    Raises :class:`RankDeficientTraining` when the normal matrix is
    singular (for example, two antennas transmitting identical rows).
    The optional residual ||X^H X h - X^H y|| is returned for audit.
    """
    normal = X.conj().T @ X
    dim = normal.shape[0]
    if np.linalg.matrix_rank(normal) < dim:
        raise RankDeficientTraining(
            f"training matrix {matrix_id or '<unnamed>'} is rank deficient: "
            f"{dim} unknowns but a singular normal matrix"
        )
    rhs = X.conj().T @ y
    estimate = np.linalg.solve(normal, rhs)
    if return_residual:
        residual = float(np.linalg.norm(normal @ estimate - rhs))
        return estimate, residual
    return estimate


def analytic_mse(X: np.ndarray, sigma2: float) -> float:
    """Normalized LS estimation MSE sigma2 * Tr((X^H X)^-1) / n_columns.

    Equals sigma2 / E exactly when the design criterion holds, and is
    strictly larger otherwise (the column norms pin the eigenvalue sum).
    """
    normal = X.conj().T @ X
    dim = normal.shape[0]
    if np.linalg.matrix_rank(normal) < dim:
        raise RankDeficientTraining("analytic MSE undefined: singular normal matrix")
    return float(sigma2 * np.trace(np.linalg.inv(normal)).real / dim)


@dataclass(frozen=True)
class SimConfig:
    """Grid, trial count, and master seed for one Monte-Carlo run."""

    ebn0_db: tuple[float, ...]
    delay_spreads: tuple[int, ...]
    trials: int
    seed: int
    matrix_id: str = ""

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError("need at least one trial")
        if not self.ebn0_db or not self.delay_spreads:
            raise ValueError("both grids must be nonempty")
        object.__setattr__(self, "ebn0_db", tuple(float(x) for x in self.ebn0_db))
        object.__setattr__(self, "delay_spreads", tuple(int(x) for x in self.delay_spreads))


@dataclass(frozen=True)
class MSEPoint:
    ebn0_db: float
    delay_spread: int
    empirical_mse: float | None
    analytic_mse: float | None
    floor: float
    trials: int
    matrix_id: str
    failed: bool = False


@dataclass(frozen=True)
class MSEReport:
    points: tuple[MSEPoint, ...]
    noise_model: str = NOISE_MODEL

    def to_csv(self) -> str:
        out = io.StringIO()
        out.write(f"# noise model: {self.noise_model}\n")
        writer = csv.writer(out)
        writer.writerow(
            ["EbN0_dB", "lambda", "empirical_mse", "analytic_mse", "floor", "trials", "matrix_id"]
        )
        for p in self.points:
            writer.writerow(
                [
                    f"{p.ebn0_db:g}",
                    p.delay_spread,
                    "failed" if p.failed else f"{p.empirical_mse:.10e}",
                    "failed" if p.failed else f"{p.analytic_mse:.10e}",
                    f"{p.floor:.10e}",
                    p.trials,
                    p.matrix_id,
                ]
            )
        return out.getvalue()


def monte_carlo_mse(tm: TrainingMatrix, cfg: SimConfig) -> MSEReport:
    """Empirical and analytic normalized MSE over the configured grid.

    Each trial draws a fresh channel and noise realization from a
    generator seeded by (master seed, grid index, trial index); the
    estimator applies the normal-equation solve factored once per grid
    point, which is the same linear map as :func:`ls_estimate`.  A
    singular design marks its grid points as failed instead of raising.
    """
    n_antennas = tm.num_rows
    energy = float(tm.energy)
    points = []
    x_cache: dict[int, tuple] = {}
    for index, (ebn0, spread) in enumerate(product(cfg.ebn0_db, cfg.delay_spreads)):
        sigma2 = noise_variance(ebn0)
        floor = mse_floor(sigma2, energy)
        if spread not in x_cache:
            X = build_ls_model_matrix(tm, spread)
            normal = X.conj().T @ X
            if np.linalg.matrix_rank(normal) < normal.shape[0]:
                x_cache[spread] = (X, None, None)
            else:
                solver = np.linalg.solve(normal, X.conj().T)
                trace_inv = float(np.trace(np.linalg.inv(normal)).real)
                x_cache[spread] = (X, solver, trace_inv)
        X, solver, trace_inv = x_cache[spread]
        if solver is None:
            points.append(
                MSEPoint(ebn0, spread, None, None, floor, cfg.trials, cfg.matrix_id, failed=True)
            )
            continue
        dim = X.shape[1]
        width = X.shape[0]
        noise_scale = math.sqrt(sigma2 / 2.0)
        total = 0.0
        for trial in range(cfg.trials):
            rng = np.random.default_rng((cfg.seed, index, trial))
            taps = sample_channel(spread, n_antennas, rng).reshape(-1)
            noise = noise_scale * (
                rng.standard_normal(width) + 1j * rng.standard_normal(width)
            )
            received = X @ taps + noise
            estimate = solver @ received
            error = estimate - taps
            total += float(np.real(np.vdot(error, error)))
        empirical = total / (cfg.trials * dim)
        analytic = sigma2 * trace_inv / dim
        points.append(
            MSEPoint(ebn0, spread, empirical, analytic, floor, cfg.trials, cfg.matrix_id)
        )
    return MSEReport(tuple(points))


def zadoff_chu(length: int, root: int) -> PhaseSequence:
    """Constant-amplitude sequence exp(-1j*pi*root*t*(t+1)/length) on Z_2L."""
    if length < 1:
        raise ValueError("length must be positive")
    if math.gcd(root, length) != 1:
        raise ValueError(f"root {root} is not coprime with length {length}")
    q = 2 * length
    phases = tuple((-root * t * (t + 1)) % q for t in range(length))
    return PhaseSequence(q, phases)


def default_zc_roots(length: int, count: int) -> tuple[int, ...]:
    """The smallest `count` roots coprime to the length."""
    roots = []
    candidate = 1
    while len(roots) < count:
        if candidate >= length and length > 1:
            raise ValueError(f"cannot find {count} distinct roots below length {length}")
        if math.gcd(candidate, length) == 1:
            roots.append(candidate)
        candidate += 1
    return tuple(roots)


def baseline_random_binary(
    cfg: GSMConfig, blocks: int, block_length: int, rng: np.random.Generator
) -> TrainingMatrix:
    """Random +-1 sequences dropped into the standard sparse layout."""
    sets = [
        [list(rng.integers(0, 2, block_length)) for _ in range(blocks)]
        for _ in range(cfg.active_antennas)
    ]
    fam = family_from_lists(2, sets)
    return build_training_matrix(fam, cfg, source="random-binary")


def baseline_zadoff_chu(
    cfg: GSMConfig, blocks: int, block_length: int, roots: tuple[int, ...] | None = None
) -> TrainingMatrix:
    """Distinct constant-amplitude sequences in the standard sparse layout."""
    needed = cfg.active_antennas * blocks
    if roots is None:
        roots = default_zc_roots(block_length, needed)
    if len(roots) != needed:
        raise ValueError(f"need {needed} roots, got {len(roots)}")
    sequences = [zadoff_chu(block_length, r) for r in roots]
    sets = []
    for m in range(cfg.active_antennas):
        members = tuple(sequences[m * blocks + n] for n in range(blocks))
        sets.append(SequenceSet(members))
    fam = Family(tuple(sets))
    return build_training_matrix(fam, cfg, source="zadoff-chu")


def baseline_zccs(fam: Family, cfg: GSMConfig, source: str = "zccs") -> TrainingMatrix:
    """A plain code-set family in the same sparse layout.

    The layout is identical to the enhanced-family one; what such a
    baseline lacks is the rotated cross-channel guarantee, so its
    wrap-around inter-antenna terms survive.
    """
    return build_training_matrix(fam, cfg, source=source)
