"""Exact combinatorics of observer record sequences.

After n experiments, each with K possible outcomes, every observer
branch carries a length-n record of eigenvalues.  Counting the branches
whose records contain r preassigned eigenvalues (each a fixed number of
times) is pure combinatorics: position choices times free fills.  The
counts reach ~10^306 at n = 100, so results are exact big integers with
a log-magnitude view for display.

Two table conventions are shipped for the single-occurrence counts.  The
``formula`` mode evaluates the (r+1)-factor falling product times
(K-1)^(100-r) exactly as defined; the ``published`` mode reproduces the
historical reference table, which for r >= 1 carries one factor of
(K-1) less.  Neither is declared correct: every emitted row is tagged
with its mode, and the two differ by exactly (K-1) for r >= 1.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError
from .numerics import LogReal, falling_product
from .tables import DataTable

UNIT_N = 100                      # record length used by the reference table
TABLE_K_COLUMNS = (1100, 100, 10, 5, 2)


@dataclass(frozen=True)
class CountParams:
    """n experiments, K outcomes each, r marked eigenvalues with multiplicities."""

    n_experiments: int
    n_outcomes: int
    multiplicities: tuple

    def __post_init__(self):
        n, K, R = self.n_experiments, self.n_outcomes, self.multiplicities
        if n < 0 or K < 1:
            raise DomainError("need n >= 0 and K >= 1")
        if any(r < 1 for r in R):
            raise DomainError("multiplicities must be positive")
        if sum(R) > n:
            raise DomainError("multiplicities exceed the record length")
        if len(R) > n:
            raise DomainError("more marked eigenvalues than record positions")


@dataclass(frozen=True)
class MeasureParams:
    """Probability P of the marked set; Q = 1 - P."""

    p_marked: float

    def __post_init__(self):
        if not 0.0 <= self.p_marked <= 1.0:
            raise DomainError("P must lie in [0, 1]")

    @property
    def q_other(self) -> float:
        return 1.0 - self.p_marked


def count_sequences_general(params: CountParams) -> int:
    """Number of records holding each marked eigenvalue at its multiplicity.

    Product of position-choice binomials times (K-1)^(free positions):
    each free position excludes only the one eigenvalue tied to its own
    observable.  Exact integer.
    """
    n, K = params.n_experiments, params.n_outcomes
    total = 1
    remaining = n
    for r_i in params.multiplicities:
        total *= math.comb(remaining, r_i)
        remaining -= r_i
    return total * (K - 1) ** remaining


def count_sequences_unit(n_outcomes: int, r: int) -> int:
    """Single-occurrence count at n = 100: 100*99*...*(100-r) * (K-1)^(100-r)."""
    if n_outcomes < 1:
        raise DomainError("K must be >= 1")
    if not 0 <= r <= UNIT_N - 1:
        raise DomainError(f"need 0 <= r <= {UNIT_N - 1}")
    return falling_product(UNIT_N, r) * (n_outcomes - 1) ** (UNIT_N - r)


def count_sequences_published(n_outcomes: int, r: int) -> LogReal:
    """Single-occurrence count in the published-table convention.

    Matches the reference table: identical to the formula at r = 0, one
    factor (K-1) smaller for r >= 1.
    """
    exact = count_sequences_unit(n_outcomes, r)
    if r >= 1 and n_outcomes > 1:
        exact //= (n_outcomes - 1)
    return LogReal.from_int(exact)


def measure_unit(r: int) -> float:
    """Relative-frequency measure of the single-occurrence records at n = 100.

    falling_product(100, r) * (r/100)^r * ((100-r)/100)^(100-r), with the
    0^0 factors at the endpoints taken as 1.
    """
    if not 0 <= r <= UNIT_N:
        raise DomainError(f"need 0 <= r <= {UNIT_N}")
    if r == UNIT_N:
        return 0.0            # the falling product reaches the factor 0
    prod = falling_product(UNIT_N, r)
    lg = math.log10(prod)
    if r > 0:
        lg += r * math.log10(r / UNIT_N)
    lg += (UNIT_N - r) * math.log10((UNIT_N - r) / UNIT_N)
    return LogReal(1, lg).to_float()


def measure_general(params: CountParams, mp: MeasureParams) -> float:
    """Position-choice binomials times P^(sum R) Q^(n - sum R)."""
    n = params.n_experiments
    total = 1
    remaining = n
    for r_i in params.multiplicities:
        total *= math.comb(remaining, r_i)
        remaining -= r_i
    marked = n - remaining
    p, q = mp.p_marked, mp.q_other
    weight = (p ** marked if marked else 1.0) * (q ** remaining if remaining else 1.0)
    return total * weight


def gaussian_approx(n: int, p_marked: float) -> tuple[float, float]:
    """Mean n*P and width sqrt(n*P*Q) of the large-n measure."""
    if not 0.0 < p_marked < 1.0:
        raise DomainError("the Gaussian approximation needs 0 < P < 1")
    mu = n * p_marked
    sigma = math.sqrt(n * p_marked * (1.0 - p_marked))
    return mu, sigma


def relative_rate(n_outcomes: int, r: int) -> float:
    """(N(K, r) - N(K, r-1)) / N(K, r), evaluated exactly before rounding."""
    if r < 1:
        raise DomainError("relative rate needs r >= 1")
    num = count_sequences_unit(n_outcomes, r)
    prev = count_sequences_unit(n_outcomes, r - 1)
    if num == 0:
        raise DomainError("zero denominator in relative rate")
    return float(Fraction(num - prev, num))


def rate_surface(k_range: Sequence[int], r_range: Sequence[int]) -> DataTable:
    """Relative-rate grid over outcome counts and marked-eigenvalue counts."""
    rows = []
    for K in k_range:
        for r in r_range:
            if r < 1 or r > UNIT_N - 1:
                continue
            rows.append([float(K), float(r), relative_rate(K, r)])
    if not rows:
        raise DomainError("empty rate surface")
    return DataTable(
        columns=["K", "r", "rate"],
        rows=rows,
        metadata={"experiment": "observer-count-relative-rate-surface",
                  "n": UNIT_N})


def observer_table(mode: str = "published") -> DataTable:
    """The reference observer-count table: even r rows, five K columns.

    Modes: ``published`` (reference-table convention), ``formula``
    (counting formula as defined), ``exact`` (formula-mode exact integers
    rendered as decimal strings).
    """
    if mode not in ("published", "formula", "exact"):
        raise DomainError(f"unknown table mode {mode!r}")
    rows = []
    for r in range(0, UNIT_N - 1, 2):
        row = [r]
        for K in TABLE_K_COLUMNS:
            if mode == "exact":
                row.append(str(count_sequences_unit(K, r)))
            elif mode == "formula":
                row.append(str(LogReal.from_int(count_sequences_unit(K, r))))
            else:
                row.append(str(count_sequences_published(K, r)))
        rows.append(row)
    return DataTable(
        columns=["r"] + [f"K={K}" for K in TABLE_K_COLUMNS],
        rows=rows,
        metadata={"experiment": "observer-count-table", "mode": mode,
                  "n": UNIT_N,
                  "mode_note": ("published convention divides the r>=1 counts "
                                "by (K-1) relative to the formula")})
