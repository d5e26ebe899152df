"""Shared numeric substrate.

Log-magnitude scalars for counts far beyond float range, reproducible
counter-based random streams, time histograms, exact falling products, and
the error function used by the diffusion and entropy modules.
"""

import math
import sys
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

# The error function and its complement.  math.erf/erfc are correctly
# rounded (< 1 ulp), far inside the 1e-14 budget of every consumer; the
# test suite checks them against direct quadrature of the defining
# integral.
erf = math.erf
erfc = math.erfc

_LOG10_MAX_FLOAT = math.log10(sys.float_info.max)


@dataclass(frozen=True)
class LogReal:
    """A real number stored as sign and log10 of its magnitude.

    Handles the products and powers needed for observer counts of order
    10^306 and beyond.  ``sign == 0`` means exactly zero and the stored
    magnitude is meaningless.
    """

    sign: int
    log10_magnitude: float

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise DomainError(f"sign must be -1, 0 or +1, got {self.sign}")

    @classmethod
    def zero(cls) -> "LogReal":
        return cls(0, 0.0)

    @classmethod
    def from_float(cls, x: float) -> "LogReal":
        if x == 0.0:
            return cls.zero()
        return cls(1 if x > 0 else -1, math.log10(abs(x)))

    @classmethod
    def from_int(cls, n: int) -> "LogReal":
        """Exact conversion of an arbitrary-precision integer."""
        if n == 0:
            return cls.zero()
        # math.log10 accepts big ints directly and stays accurate
        return cls(1 if n > 0 else -1, math.log10(abs(n)))

    def to_float(self) -> float:
        if self.sign == 0:
            return 0.0
        if self.log10_magnitude > _LOG10_MAX_FLOAT:
            return math.inf * self.sign
        return self.sign * 10.0 ** self.log10_magnitude

    def __mul__(self, other: "LogReal") -> "LogReal":
        if self.sign == 0 or other.sign == 0:
            return LogReal.zero()
        return LogReal(self.sign * other.sign,
                       self.log10_magnitude + other.log10_magnitude)

    def __truediv__(self, other: "LogReal") -> "LogReal":
        if other.sign == 0:
            raise DomainError("division by exact zero")
        if self.sign == 0:
            return LogReal.zero()
        return LogReal(self.sign * other.sign,
                       self.log10_magnitude - other.log10_magnitude)

    def relative_difference(self, other: "LogReal") -> float:
        """|self/other - 1|, meaningful when the two are close in log space."""
        if self.sign == 0 and other.sign == 0:
            return 0.0
        if self.sign != other.sign or other.sign == 0:
            return math.inf
        return abs(10.0 ** (self.log10_magnitude - other.log10_magnitude) - 1.0)

    def mantissa_exponent(self) -> tuple[float, int]:
        """Decimal mantissa in [1, 10) and integer exponent."""
        if self.sign == 0:
            return 0.0, 0
        e = math.floor(self.log10_magnitude)
        m = 10.0 ** (self.log10_magnitude - e)
        if m >= 10.0:  # guard the floor/rounding edge
            m /= 10.0
            e += 1
        return self.sign * m, e

    def __str__(self) -> str:
        if self.sign == 0:
            return "0"
        m, e = self.mantissa_exponent()
        return f"{m:.7f}e{e}"


def falling_product(n: int, r: int) -> int:
    """Exact product n*(n-1)*...*(n-r), an (r+1)-factor falling product."""
    if not 0 <= r <= n - 1:
        raise DomainError(f"need 0 <= r <= n-1, got n={n}, r={r}")
    return math.prod(range(n - r, n + 1))


def pow_logreal(base: float, exponent: int) -> LogReal:
    """base**exponent as a LogReal, for positive base."""
    if base <= 0.0:
        raise DomainError(f"base must be positive, got {base}")
    return LogReal(1, exponent * math.log10(base))


@dataclass(frozen=True)
class RngStream:
    """A reproducible random stream keyed by (seed, stream_id).

    Built on the Philox counter-based bit generator, so the sequence for a
    given key is identical on every platform and independent of how work
    is scheduled across workers.
    """

    seed: int
    stream_id: int = 0

    def generator(self) -> np.random.Generator:
        key = ((self.seed & 0xFFFFFFFFFFFFFFFF) << 64) | (self.stream_id & 0xFFFFFFFFFFFFFFFF)
        return np.random.Generator(np.random.Philox(key=key))


@dataclass
class Histogram:
    """Fixed-width binned event counts starting at ``origin``.

    Bins are [origin + i*bin_width, origin + (i+1)*bin_width).  Recording
    grows the count list as needed unless ``n_bins`` was fixed up front,
    in which case out-of-range events are dropped and counted separately.
    """

    bin_width: float
    origin: float = 0.0
    counts: list[int] = field(default_factory=list)
    n_bins: int | None = None
    overflow: int = 0

    def __post_init__(self):
        if self.bin_width <= 0:
            raise DomainError("bin_width must be positive")
        if self.n_bins is not None and not self.counts:
            self.counts = [0] * self.n_bins

    def record(self, value: float) -> None:
        i = int((value - self.origin) // self.bin_width)
        if i < 0:
            raise DomainError(f"value {value} below histogram origin")
        if self.n_bins is not None:
            if i >= self.n_bins:
                self.overflow += 1
                return
        elif i >= len(self.counts):
            self.counts.extend([0] * (i + 1 - len(self.counts)))
        self.counts[i] += 1

    def total(self) -> int:
        return sum(self.counts) + self.overflow

    def merge(self, other: "Histogram") -> None:
        if other.bin_width != self.bin_width or other.origin != self.origin:
            raise DomainError("histogram layouts differ")
        if len(other.counts) > len(self.counts):
            self.counts.extend([0] * (len(other.counts) - len(self.counts)))
        for i, c in enumerate(other.counts):
            self.counts[i] += c
        self.overflow += other.overflow

    def bin_edges(self) -> list[float]:
        return [self.origin + i * self.bin_width for i in range(len(self.counts) + 1)]
