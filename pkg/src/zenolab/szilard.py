"""Entropy bookkeeping for the four-piston cylinder ensemble.

One experiment expands a gas of n molecules with a pair of permeable
pistons keyed to a marked interval.  w1 is the probability that a
molecule starts inside the interval; during the expansion a fraction
fo = n_o/n leaves it and fi = n_i/n enters.  The per-molecule entropy
difference between the pre- and post-expansion configurations is

    s = -kB [ w1 (1 - d/w1) ln|1 - d/w1|
              + (1 - w1)(1 + d/(1-w1)) ln|1 + d/(1-w1)|
              + d ln((1-w1)/w1) ],          d = fo - fi,

zero exactly at fo = fi.  Absolute values are taken under every
logarithm so the expression stays defined when the shifted occupancies
change sign.  With w1 = erf(x/sqrt(2)) for an interval (-x, x) of a
standard normal gas, a fixed x >= 3 saturates w1 and the surface over
(fo, fi) tends to +1 for fo >> fi and to -1 in the reversed corner
(kB = 1).

An ensemble assigns one experiment to each observer.  In related mode
the experiments tile a deterministic parameter grid (no two share the
same (fo, fi, x) triple) with x tied to the leaving fraction as x = 6 fo;
in random mode the triples are drawn independently.  With the performed
experiments spread over the full grid, the fraction of an N-observer
ensemble whose performed experiments end with negative s grows with N in
related mode and shows no trend in random mode.
"""

import math
from dataclasses import dataclass, field
from typing import Sequence

from .errors import DomainError
from .numerics import RngStream, erf
from .tables import DataTable

GRID_FO_COUNT = 50
GRID_FI_COUNT = 121
GRID_MAX = GRID_FO_COUNT * GRID_FI_COUNT       # 6050 observers
FRACTION_LO, FRACTION_HI = 0.005, 0.5


def _xlogabs(v: float) -> float:
    """v * ln|v| extended by continuity: 0 at v = 0."""
    return v * math.log(abs(v)) if v != 0.0 else 0.0


def entropy_diff(w1: float, frac_out: float, frac_in: float, k_b: float = 1.0) -> float:
    """Per-molecule entropy difference of one expansion step.

    Positive when markedly more molecules left the interval than entered
    it while the interval started nearly full; antisigned in the mirrored
    situation.  Exactly zero at frac_out = frac_in.
    """
    if not 0.0 < w1 < 1.0:
        raise DomainError("w1 must lie strictly between 0 and 1")
    for name, f in (("frac_out", frac_out), ("frac_in", frac_in)):
        if not 0.0 <= f <= 0.5:
            raise DomainError(f"{name} must lie in [0, 0.5]")
    if w1 < frac_out:
        raise DomainError("w1 cannot be smaller than the leaving fraction")
    d = frac_out - frac_in
    if d == 0.0:
        return 0.0
    t1 = w1 * _xlogabs(1.0 - d / w1)
    t2 = (1.0 - w1) * _xlogabs(1.0 + d / (1.0 - w1))
    t3 = d * math.log((1.0 - w1) / w1)
    return -k_b * (t1 + t2 + t3)


def entropy_diff_erf(x: float, frac_out: float, frac_in: float, k_b: float = 1.0) -> float:
    """entropy_diff with w1 = erf(x / sqrt(2)) for the interval (-x, x)."""
    if x < 0:
        raise DomainError("x must be nonnegative")
    return entropy_diff(erf(x / math.sqrt(2.0)), frac_out, frac_in, k_b)


@dataclass(frozen=True)
class PistonExperiment:
    w1: float
    frac_out: float
    frac_in: float
    n_molecules: int = 1
    k_b: float = 1.0
    grid_index: int = 0       # position of this experiment's observer in the ensemble

    def entropy(self) -> float:
        return entropy_diff(self.w1, self.frac_out, self.frac_in, self.k_b)


@dataclass
class EnsembleAssignment:
    experiments: list
    mode: str                  # related-grid | random
    seed: int = 0


@dataclass
class IndicatorOutcome:
    indicators: list           # g_i per performed experiment
    fraction: float            # (1/N) * sum of indicators


def ensemble_entropy(assignment: EnsembleAssignment) -> float:
    """Total entropy difference: per-molecule values scaled by n and summed."""
    return sum(e.n_molecules * e.entropy() for e in assignment.experiments)


def grid_fo_values() -> list[float]:
    span = FRACTION_HI - FRACTION_LO
    return [FRACTION_LO + span * j / (GRID_FO_COUNT - 1) for j in range(GRID_FO_COUNT)]


def grid_fi_values() -> list[float]:
    """121 distinct entering fractions on [0.005, 0.5].

    The first 101 follow the compressive progression l / (20 + l), which
    front-loads coverage of the interval; the remaining 20 fill the gap
    up to 0.5 linearly.  Strictly increasing, no duplicates.
    """
    span = FRACTION_HI - FRACTION_LO
    vals = [FRACTION_LO + span * l / (20.0 + l) for l in range(101)]
    top = vals[-1]
    vals.extend(top + (FRACTION_HI - top) * (l - 100) / 20.0 for l in range(101, 121))
    return vals


def grid_cell(index: int) -> tuple[float, float]:
    """(fo, fi) of one grid cell; row-major with the fi rows outermost."""
    if not 0 <= index < GRID_MAX:
        raise DomainError(f"grid index {index} outside [0, {GRID_MAX})")
    l, j = divmod(index, GRID_FO_COUNT)
    return grid_fo_values()[j], grid_fi_values()[l]


def related_grid(n_experiments: int, n_molecules: int = 1) -> EnsembleAssignment:
    """Deterministic related ensemble: experiments spread evenly over the grid.

    Observer slots are the 6050 grid cells; the performed experiments sit
    at evenly spaced slots so every ensemble truncation contains its
    share of them.  x = 6 fo throughout, so w1 = erf(6 fo / sqrt(2)).
    """
    if not 1 <= n_experiments <= GRID_MAX:
        raise DomainError(f"n_experiments must lie in [1, {GRID_MAX}]")
    fo_vals = grid_fo_values()
    fi_vals = grid_fi_values()
    exps = []
    for i in range(n_experiments):
        idx = min(round(i * GRID_MAX / n_experiments), GRID_MAX - 1)
        l, j = divmod(idx, GRID_FO_COUNT)
        fo, fi = fo_vals[j], fi_vals[l]
        w1 = erf(6.0 * fo / math.sqrt(2.0))
        exps.append(PistonExperiment(w1=w1, frac_out=fo, frac_in=fi,
                                     n_molecules=n_molecules, grid_index=idx))
    return EnsembleAssignment(experiments=exps, mode="related-grid")


def random_assignment(n_experiments: int, seed: int,
                      n_molecules: int = 1) -> EnsembleAssignment:
    """Unrelated ensemble: (fo, fi, x) and the observer slot drawn at random.

    Triples violating w1 >= fo are redrawn; duplicates are possible, which
    is the point.
    """
    if n_experiments < 1:
        raise DomainError("n_experiments must be >= 1")
    rng = RngStream(seed, 7).generator()
    exps = []
    slots = rng.integers(0, GRID_MAX, size=n_experiments)
    for i in range(n_experiments):
        while True:
            fo = rng.uniform(FRACTION_LO, FRACTION_HI)
            fi = rng.uniform(FRACTION_LO, FRACTION_HI)
            x = rng.uniform(0.0, 6.0 * FRACTION_HI)
            w1 = erf(x / math.sqrt(2.0))
            if w1 >= fo:
                break
        exps.append(PistonExperiment(w1=w1, frac_out=fo, frac_in=fi,
                                     n_molecules=n_molecules,
                                     grid_index=int(slots[i])))
    return EnsembleAssignment(experiments=exps, mode="random", seed=seed)


def fraction_negative(assignment: EnsembleAssignment, n_observers: int,
                      n_performed: int | None = None,
                      negative: bool = True) -> IndicatorOutcome:
    """Fraction of an N-observer ensemble validated by negative-entropy runs.

    g_i = 1 when performed experiment i belongs to the first N observer
    slots and its entropy difference is negative (or positive, with
    ``negative=False``); the fraction is the indicator sum over the
    performed experiments divided by N.
    """
    if n_performed is None:
        n_performed = len(assignment.experiments)
    if n_performed > len(assignment.experiments):
        raise DomainError("more performed experiments than assigned")
    if n_observers < n_performed:
        raise DomainError("performed experiments cannot outnumber the observers")
    gs = []
    for e in assignment.experiments[:n_performed]:
        s = e.entropy()
        hit = (s < 0.0) if negative else (s > 0.0)
        gs.append(1 if (e.grid_index < n_observers and hit) else 0)
    return IndicatorOutcome(indicators=gs, fraction=sum(gs) / n_observers)


def entropy_surface(x: float = 3.0, grid: int = 50, k_b: float = 1.0) -> DataTable:
    """s over the (fo, fi) square at fixed interval half-width x."""
    if grid < 2:
        raise DomainError("grid must be >= 2")
    span = FRACTION_HI - FRACTION_LO
    rows = []
    for i in range(grid):
        fo = FRACTION_LO + span * i / (grid - 1)
        for j in range(grid):
            fi = FRACTION_LO + span * j / (grid - 1)
            rows.append([fo, fi, entropy_diff_erf(x, fo, fi, k_b)])
    return DataTable(
        columns=["fo", "fi", "s"],
        rows=rows,
        metadata={"experiment": "piston-entropy-surface", "x": x, "k_b": k_b})


def fraction_sweep(mode: str, n_values: Sequence[int], n_performed: int = 1000,
                   seed: int = 0, negative: bool = True) -> DataTable:
    """f(N) for a sweep of ensemble sizes, in related or random mode."""
    if mode == "related":
        assignment = related_grid(n_performed)
    elif mode == "random":
        assignment = random_assignment(n_performed, seed=seed)
    else:
        raise DomainError(f"unknown mode {mode!r}")
    rows = []
    for N in n_values:
        out = fraction_negative(assignment, int(N), n_performed, negative=negative)
        rows.append([float(N), out.fraction])
    return DataTable(
        columns=["N", "f"],
        rows=rows,
        metadata={"experiment": "piston-ensemble-fraction-sweep",
                  "mode": mode, "n_performed": n_performed, "seed": seed,
                  "indicator": "negative" if negative else "positive"})
