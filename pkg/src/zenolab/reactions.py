"""Survival probabilities for repeated classical reactions.

A reactant is modelled as a real coherent state labelled by phase-space
c-numbers (q, p), with z = (q + p)/sqrt(2).  Evolution over a time t maps
z to z*e^t, and the overlap of the evolved state with the initial one
gives the probability of remaining with the initial reactant.  Repeating
the reaction n times within a fixed total time T drives that probability
to 1 as n grows; the two-reactant variant converges to a finite, possibly
super-unit weight because the pair evolution is not norm-preserving.

All hyperbolic combinations are evaluated through expm1, since the
survival exponent collapses to (e^t - 1)^2 terms that would otherwise
cancel catastrophically in the dense-repetition regime t -> 0.
"""

import math
import warnings
from dataclasses import dataclass

from .errors import DomainError, SaturationWarning, UnderflowWarning


@dataclass(frozen=True)
class CoherentState:
    """A real phase-space point (q, p); the ground state is (0, 0)."""

    q: float
    p: float

    @property
    def z(self) -> float:
        return (self.q + self.p) / math.sqrt(2.0)

    def evolved(self, t: float) -> "CoherentState":
        """State after free evolution for time t: both c-numbers scale by e^t."""
        g = math.exp(t)
        return CoherentState(self.q * g, self.p * g)


@dataclass(frozen=True)
class RepetitionSchedule:
    """n repetitions filling a total time T; the step is always T/n."""

    total_time: float
    repetitions: int

    def __post_init__(self):
        if self.total_time <= 0:
            raise DomainError("total_time must be positive")
        if self.repetitions < 1:
            raise DomainError("repetitions must be >= 1")

    @property
    def delta_t(self) -> float:
        return self.total_time / self.repetitions


def _guarded_exp(exponent: float) -> float:
    """exp() that converts overflow to +inf and flags extreme exponents."""
    if exponent > 709.0:
        warnings.warn("weight exponent overflow, saturating to inf",
                      SaturationWarning, stacklevel=3)
        return math.inf
    value = math.exp(exponent)
    if value == 0.0 and exponent < 0.0:
        warnings.warn("survival probability underflowed to 0",
                      UnderflowWarning, stacklevel=3)
    return value


def survival_single(state: CoherentState, t: float) -> float:
    """Probability of remaining with the initial reactant after one reaction.

    Equals exp(-(q+p)^2 (e^t - 1)^2 / 4); 1 at t=0 and for the ground
    state, decaying in t otherwise.
    """
    if t < 0:
        raise DomainError("t must be nonnegative")
    s = state.q + state.p
    em = math.expm1(t)
    return _guarded_exp(-0.25 * s * s * em * em)


def survival_repeated(state: CoherentState, schedule: RepetitionSchedule) -> float:
    """Survival after n reactions of duration T/n each.

    exp(-(T / 4 dt) (q+p)^2 (e^dt - 1)^2); reduces to the single-reaction
    value at n = 1 and tends to 1 as n grows at fixed T.
    """
    dt = schedule.delta_t
    s = state.q + state.p
    em = math.expm1(dt)
    return _guarded_exp(-(schedule.total_time / (4.0 * dt)) * s * s * em * em)


def survival_repeated_smallstep(state: CoherentState, schedule: RepetitionSchedule) -> float:
    """Second-order small-step form exp(-T (q+p)^2 dt / 4) of the repeated survival."""
    s = state.q + state.p
    return _guarded_exp(-0.25 * schedule.total_time * s * s * schedule.delta_t)


def pair_survival(a: CoherentState, b: CoherentState, t: float) -> float:
    """Weight for both reactants of an interacting pair to persist one reaction.

    exp(-(1/4)(e^t-1)^2 [(qa+pa)^2 + (qb+pb)^2] + (qa qb + pa pb) t).  The
    interaction term makes the evolution nonunitary, so the result may
    exceed 1; it is returned unclamped.
    """
    if t < 0:
        raise DomainError("t must be nonnegative")
    sa = a.q + a.p
    sb = b.q + b.p
    em = math.expm1(t)
    coupling = a.q * b.q + a.p * b.p
    return _guarded_exp(-0.25 * em * em * (sa * sa + sb * sb) + coupling * t)


def pair_survival_repeated(a: CoherentState, b: CoherentState,
                           schedule: RepetitionSchedule) -> float:
    """Pair persistence weight after n reactions in total time T.

    exp(T (qa qb + pa pb) - (T / 4 dt)(e^dt - 1)^2 [(qa+pa)^2 + (qb+pb)^2]).
    """
    dt = schedule.delta_t
    T = schedule.total_time
    sa = a.q + a.p
    sb = b.q + b.p
    em = math.expm1(dt)
    coupling = a.q * b.q + a.p * b.p
    return _guarded_exp(coupling * T - (T / (4.0 * dt)) * em * em * (sa * sa + sb * sb))


def pair_survival_limit(a: CoherentState, b: CoherentState, total_time: float) -> float:
    """Dense-repetition limit exp(T (qa qb + pa pb)).

    Unity whenever either reactant is in its ground state.
    """
    if total_time < 0:
        raise DomainError("total_time must be nonnegative")
    coupling = a.q * b.q + a.p * b.p
    return _guarded_exp(coupling * total_time)
