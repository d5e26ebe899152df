"""Joint probabilities for prescribed paths of states.

A path is an ordered sequence of states at increasing times.  Its joint
probability is the product of squared overlaps of adjacent states, one
factor per step.  When the path discretizes a fixed continuous curve ever
more finely, every factor approaches 1 and so does the product: densely
checked paths are followed with certainty.

Two overlap kernels are provided.  The planar rotation kernel treats
states as unit vectors and overlaps them by inner product (cos of the
angle between adjacent states for 2-vectors); the coherent kernel
evolves the later state's c-number before overlapping, matching the
reaction model in :mod:`zenolab.reactions`.
"""

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError
from .reactions import CoherentState

# an overlap kernel maps (state_a, state_b, delta_t) to a complex amplitude
OverlapKernel = Callable[[object, object, float], complex]


def rotation_overlap(a, b, delta_t: float = 0.0) -> complex:
    """Inner product of two unit vectors; delta_t is ignored."""
    va = np.asarray(a, dtype=complex)
    vb = np.asarray(b, dtype=complex)
    return complex(np.vdot(va, vb))


def coherent_overlap(a: CoherentState, b: CoherentState, delta_t: float = 0.0) -> complex:
    """Overlap of state a with state b evolved for delta_t.

    exp(-za^2/2 - zb(t)^2/2 + za*zb(t)) with zb(t) = zb * e^{delta_t}; real
    for real c-numbers and equal to 1 when the evolved centres coincide.
    """
    za = a.z
    zbt = b.z * math.exp(delta_t)
    return complex(math.exp(-0.5 * za * za - 0.5 * zbt * zbt + za * zbt))


crosscorrelation = coherent_overlap


def _is_vector(state) -> bool:
    return not isinstance(state, CoherentState)


@dataclass(frozen=True)
class PathOfStates:
    """States visited at strictly increasing times.

    States are either unit-norm vectors (any dimension) or CoherentState
    instances; at least two states are required.
    """

    states: Sequence
    times: Sequence[float]

    def __post_init__(self):
        if len(self.states) < 2:
            raise DomainError("a path needs at least 2 states")
        if len(self.states) != len(self.times):
            raise DomainError("states and times must have equal length")
        if any(t2 <= t1 for t1, t2 in zip(self.times, self.times[1:])):
            raise DomainError("times must be strictly increasing")
        for s in self.states:
            if _is_vector(s):
                norm = float(np.linalg.norm(np.asarray(s, dtype=complex)))
                if abs(norm - 1.0) > 1e-12:
                    raise DomainError(f"state norm {norm} differs from 1 beyond 1e-12")

    def __len__(self) -> int:
        return len(self.states)

    def steps(self):
        for i in range(len(self.states) - 1):
            yield (self.states[i], self.states[i + 1],
                   self.times[i + 1] - self.times[i])


def rotation_path(total_angle: float, n_states: int,
                  total_time: float = 1.0) -> PathOfStates:
    """Unit 2-vectors sweeping total_angle in n_states equal steps."""
    if n_states < 2:
        raise DomainError("need at least 2 states")
    angles = [total_angle * i / (n_states - 1) for i in range(n_states)]
    states = [np.array([math.cos(th), math.sin(th)]) for th in angles]
    times = [total_time * i / (n_states - 1) for i in range(n_states)]
    return PathOfStates(states, times)


def joint_path_probability(path: PathOfStates,
                           kernel: OverlapKernel = rotation_overlap) -> float:
    """Product over adjacent pairs of |kernel|^2."""
    prob = 1.0
    for a, b, dt in path.steps():
        amp = kernel(a, b, dt)
        prob *= abs(amp) ** 2
    return prob


def joint_with_simultaneous(path: PathOfStates, block_index: int,
                            block_pairs: Sequence[tuple],
                            kernel: OverlapKernel = rotation_overlap) -> float:
    """Path probability with extra simultaneous reactions at one step.

    ``block_pairs`` holds the additional (state, state) transitions that
    happen alongside step ``block_index``; each contributes one more
    squared-overlap factor.  An empty block reduces to the plain path
    probability.
    """
    if not 0 <= block_index < len(path) - 1:
        raise DomainError(f"block_index {block_index} outside path steps")
    prob = joint_path_probability(path, kernel)
    _, _, dt = list(path.steps())[block_index]
    for a, b in block_pairs:
        prob *= abs(kernel(a, b, dt)) ** 2
    return prob


def ensemble_conditional_probability(path: PathOfStates,
                                     kernel: OverlapKernel = rotation_overlap) -> float:
    """Probability that N observers, one per prepared state, realize the path.

    Each observer checks whether their neighbour's state follows from
    their own; summing the amplitudes over all intermediate complete
    bases collapses every double sum to a direct adjacent overlap, so the
    result is again the product of squared adjacent overlaps.  Along a
    fixed continuous curve it rises to 1 as the number of prepared states
    grows.
    """
    return joint_path_probability(path, kernel)


def ensemble_conditional_probability_summed(path: PathOfStates,
                                            bases: Sequence[np.ndarray]) -> float:
    """Same quantity with the intermediate-basis sums carried out explicitly.

    ``bases[i]`` is an orthonormal basis (columns) inserted between states
    i and i+1.  Exists to demonstrate numerically that the collapsed form
    above is basis-independent; only vector states are supported.
    """
    if len(bases) != len(path) - 1:
        raise DomainError("need one basis per path step")
    prob = 1.0
    for (a, b, _), basis in zip(path.steps(), bases):
        va = np.asarray(a, dtype=complex)
        vb = np.asarray(b, dtype=complex)
        amp = complex(sum(np.vdot(va, basis[:, k]) * np.vdot(basis[:, k], vb)
                          for k in range(basis.shape[1])))
        prob *= abs(amp) ** 2
    return prob
