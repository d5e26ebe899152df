"""Independent reference computations used to pin expected values.

Everything here deliberately avoids the code paths under test: the error
function comes from quadrature, barrier transmission from fixed-step RK4
integration of the stationary wave equation, and sequence counts from
exhaustive enumeration.
"""

import cmath
import math

import numpy as np
from scipy.integrate import quad


def erf_quadrature(x: float) -> float:
    val, _ = quad(lambda u: 2.0 / math.sqrt(math.pi) * math.exp(-u * u),
                  0.0, abs(x), epsabs=1e-15, epsrel=1e-13, limit=200)
    return math.copysign(val, x)


def transmission_rk4(segments, energy: float, steps_per_unit: int = 20000) -> float:
    """|t|^2 by integrating psi'' = (V - e) psi right to left (hbar=1, 2m=1).

    ``segments`` is an iterable of (width, potential) pieces left to
    right; the wave enters from the left and leaves as e^{ikx} on the right.
    """
    k = math.sqrt(energy)
    segs = [s for s in segments if s[0] > 0]
    total = sum(w for w, _ in segs)
    psi = cmath.exp(1j * k * total)
    dpsi = 1j * k * psi
    for width, pot in reversed(segs):
        c = pot - energy
        m = max(8, int(round(width * steps_per_unit)))
        h = -width / m
        for _ in range(m):
            k1p, k1d = dpsi, c * psi
            k2p, k2d = dpsi + 0.5 * h * k1d, c * (psi + 0.5 * h * k1p)
            k3p, k3d = dpsi + 0.5 * h * k2d, c * (psi + 0.5 * h * k2p)
            k4p, k4d = dpsi + h * k3d, c * (psi + h * k3p)
            psi = psi + h / 6.0 * (k1p + 2 * k2p + 2 * k3p + k4p)
            dpsi = dpsi + h / 6.0 * (k1d + 2 * k2d + 2 * k3d + k4d)
    incident = 0.5 * (psi + dpsi / (1j * k))
    return 1.0 / abs(incident) ** 2


def brute_force_sequence_count(n: int, k_outcomes: int, multiplicities) -> int:
    """Exhaustive count over all k_outcomes**n records.

    Walks every record index once, counting records whose designated
    symbol appears exactly sum(multiplicities) times, each weighted by
    the number of ways to label those appearances with the marked
    eigenvalues (1 when only one eigenvalue is marked).
    """
    m = sum(multiplicities)
    labelings = math.factorial(m)
    for r_i in multiplicities:
        labelings //= math.factorial(r_i)
    size = k_outcomes ** n
    chunk = 1 << 20
    total = 0
    for start in range(0, size, chunk):
        idx = np.arange(start, min(start + chunk, size), dtype=np.int64)
        specials = np.zeros(len(idx), dtype=np.int64)
        rem = idx.copy()
        for _ in range(n):
            specials += (rem % k_outcomes) == 0
            rem //= k_outcomes
        total += int(np.sum(specials == m))
    return total * labelings


def binomial_mass_within(n: int, p: float, lo: float, hi: float) -> float:
    """Exact Bernoulli mass of counts k with lo <= k <= hi."""
    total = 0.0
    for k in range(n + 1):
        if lo <= k <= hi:
            total += math.comb(n, k) * p ** k * (1.0 - p) ** (n - k)
    return total
