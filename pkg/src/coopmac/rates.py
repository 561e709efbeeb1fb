"""Closed-form achievable rates for the six uplink transmission schemes.

Every function is pure, operates in linear SNR units, returns bps/Hz, and
broadcasts over numpy arrays.  The cooperative schemes carry a 1/2 pre-log
because each round spans two mini-slots.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .channel import NonIdealParams

# Split fractions are clamped here before they enter the SINR expressions, so
# a degenerate split collapses continuously onto the unsplit scheme.
SPLIT_FLOOR = 1e-12

_BUDGET_TOL = 1e-9


class Scheme(Enum):
    OMA = "oma"
    C_OMA = "c-oma"
    NOMA = "noma"
    C_NOMA = "c-noma"
    RSMA = "rsma"
    C_RSMA = "c-rsma"

    @classmethod
    def from_name(cls, name: str) -> "Scheme":
        key = name.strip().lower().replace("_", "-")
        for scheme in cls:
            if scheme.value == key:
                return scheme
        raise ValueError(f"unknown scheme {name!r}; expected one of "
                         f"{[s.value for s in cls]}")

    @property
    def cooperative(self) -> bool:
        return self in (Scheme.C_OMA, Scheme.C_NOMA, Scheme.C_RSMA)


def _positive(x) -> bool:
    x = np.asarray(x)
    return bool(np.all(np.isfinite(x)) and np.all(x > 0.0))


@dataclass(frozen=True)
class SlotPowers:
    """Normalized per-mini-slot powers p_i^j = P_i^j / P̄_i, per user i."""

    p1_1: float
    p1_2: float
    p2_1: float
    p2_2: float

    def __post_init__(self):
        for field in ("p1_1", "p1_2", "p2_1", "p2_2"):
            if not _positive(getattr(self, field)):
                raise ValueError(f"{field} must be strictly positive")
        if np.any(np.asarray(self.p1_1 + self.p1_2) > 2.0 + _BUDGET_TOL):
            raise ValueError("user 1 slot powers exceed the per-user budget of 2")
        if np.any(np.asarray(self.p2_1 + self.p2_2) > 2.0 + _BUDGET_TOL):
            raise ValueError("user 2 slot powers exceed the per-user budget of 2")

    def user(self, i: int) -> tuple[float, float]:
        return (self.p1_1, self.p1_2) if i == 1 else (self.p2_1, self.p2_2)


@dataclass(frozen=True)
class SplitPowers(SlotPowers):
    """Slot powers plus per-stream split fractions p_is for each user."""

    p11: float = 0.5
    p12: float = 0.5
    p21: float = 0.5
    p22: float = 0.5

    def __post_init__(self):
        super().__post_init__()
        for field in ("p11", "p12", "p21", "p22"):
            if not _positive(getattr(self, field)):
                raise ValueError(f"{field} must be strictly positive")
        if np.any(np.asarray(self.p11 + self.p12) > 1.0 + _BUDGET_TOL):
            raise ValueError("user 1 split fractions exceed the budget of 1")
        if np.any(np.asarray(self.p21 + self.p22) > 1.0 + _BUDGET_TOL):
            raise ValueError("user 2 split fractions exceed the budget of 1")

    @property
    def slot_powers(self) -> SlotPowers:
        return SlotPowers(self.p1_1, self.p1_2, self.p2_1, self.p2_2)


@dataclass(frozen=True)
class RatePair:
    """Achievable rates (user 1, user 2) in bps/Hz."""

    r1: float
    r2: float

    def __post_init__(self):
        for field in ("r1", "r2"):
            value = np.asarray(getattr(self, field))
            if not np.all(np.isfinite(value)) or np.any(value < 0.0):
                raise ValueError(f"{field} must be finite and non-negative")

    def objective(self, fairness: float = 1.0):
        """Max-min objective min(R1, fairness * R2)."""
        return np.minimum(self.r1, fairness * self.r2)


def _check_gammas(gamma1, gamma2):
    if not _positive(gamma1):
        raise ValueError("gamma1 must be strictly positive and finite")
    if not _positive(gamma2):
        raise ValueError("gamma2 must be strictly positive and finite")


def check_fairness(fairness: float) -> float:
    if not np.isfinite(fairness) or fairness <= 0.0:
        raise ValueError(f"fairness coefficient must be positive, got {fairness!r}")
    return float(fairness)


# ---------------------------------------------------------------------------
# Ideal strong-link rates
# ---------------------------------------------------------------------------

def cnoma_rates(gamma1, gamma2, powers: SlotPowers) -> RatePair:
    """Cooperative NOMA rates: slot-1 direct plus slot-2 relayed copy, MRC
    combined, user 1 decoded first and removed by SIC."""
    _check_gammas(gamma1, gamma2)
    s1 = gamma1 * powers.p1_1 / (gamma2 * powers.p2_1 + 1.0)
    s2 = gamma2 * powers.p2_2 / (gamma1 * powers.p1_2 + 1.0)
    r1 = 0.5 * np.log2(1.0 + s1 + s2)
    r2 = 0.5 * np.log2(1.0 + gamma1 * powers.p1_2 + gamma2 * powers.p2_1)
    return RatePair(r1, r2)


def crsma_rates(gamma1, gamma2, powers: SplitPowers) -> RatePair:
    """Cooperative RSMA rates for the four-stream chain decoded in the order
    (user-1 stream 1, user-2 stream 1, user-1 stream 2, user-2 stream 2)."""
    _check_gammas(gamma1, gamma2)
    p11 = np.maximum(powers.p11, SPLIT_FLOOR)
    p12 = np.maximum(powers.p12, SPLIT_FLOOR)
    p21 = np.maximum(powers.p21, SPLIT_FLOOR)
    p22 = np.maximum(powers.p22, SPLIT_FLOOR)
    a1, a2 = gamma1 * powers.p1_1, gamma1 * powers.p1_2
    b1, b2 = gamma2 * powers.p2_1, gamma2 * powers.p2_2

    r11 = 0.5 * np.log2(
        1.0
        + a1 * p11 / (a1 * p12 + b1 * p21 + b1 * p22 + 1.0)
        + b2 * p11 / (b2 * p12 + a2 * p21 + a2 * p22 + 1.0))
    r21 = 0.5 * np.log2(
        1.0
        + b1 * p21 / (b1 * p22 + a1 * p12 + 1.0)
        + a2 * p21 / (a2 * p22 + b2 * p12 + 1.0))
    r12 = 0.5 * np.log2(
        1.0
        + a1 * p12 / (b1 * p22 + 1.0)
        + b2 * p12 / (a2 * p22 + 1.0))
    r22 = 0.5 * np.log2(1.0 + b1 * p22 + a2 * p22)
    return RatePair(r11 + r12, r21 + r22)


def oma_rates(gamma1, gamma2) -> RatePair:
    """Orthogonal baseline: each user keeps its own frequency block at full
    power for both mini-slots."""
    _check_gammas(gamma1, gamma2)
    return RatePair(np.log2(1.0 + gamma1), np.log2(1.0 + gamma2))


def coma_rates(gamma1, gamma2, powers: SlotPowers) -> RatePair:
    """Cooperative OMA baseline: per-user orthogonal blocks, slot-1 direct
    transmission plus slot-2 relayed copy, MRC at the base station."""
    _check_gammas(gamma1, gamma2)
    r1 = 0.5 * np.log2(1.0 + gamma1 * powers.p1_1 + gamma2 * powers.p2_2)
    r2 = 0.5 * np.log2(1.0 + gamma2 * powers.p2_1 + gamma1 * powers.p1_2)
    return RatePair(r1, r2)


def noma_rates(gamma1, gamma2, order: str = "1-first") -> RatePair:
    """Non-cooperative NOMA baseline with SIC at the base station.

    `order` selects which user is decoded first (and therefore sees the
    other's interference).
    """
    _check_gammas(gamma1, gamma2)
    if order == "1-first":
        return RatePair(np.log2(1.0 + gamma1 / (1.0 + gamma2)),
                        np.log2(1.0 + gamma2))
    if order == "2-first":
        return RatePair(np.log2(1.0 + gamma1),
                        np.log2(1.0 + gamma2 / (1.0 + gamma1)))
    raise ValueError(f"order must be '1-first' or '2-first', got {order!r}")


def rsma_rates(gamma1, gamma2, split: float = 0.5) -> RatePair:
    """Non-cooperative uplink rate splitting: user 1 transmits two streams
    with power fractions (split, 1 - split); decode order is user-1 stream 1,
    user 2, user-1 stream 2."""
    _check_gammas(gamma1, gamma2)
    split = np.clip(split, SPLIT_FLOOR, 1.0 - SPLIT_FLOOR)
    head = gamma1 * split
    tail = gamma1 * (1.0 - split)
    r1 = (np.log2(1.0 + head / (tail + gamma2 + 1.0))
          + np.log2(1.0 + tail))
    r2 = np.log2(1.0 + gamma2 / (tail + 1.0))
    return RatePair(r1, r2)


def baseline_rates(scheme: Scheme, gamma1, gamma2, powers: SlotPowers | None = None,
                   order: str = "1-first", split: float = 0.5) -> RatePair:
    """Dispatch for the four non-proposed schemes."""
    if scheme is Scheme.OMA:
        return oma_rates(gamma1, gamma2)
    if scheme is Scheme.C_OMA:
        if powers is None:
            raise ValueError("c-oma needs slot powers")
        return coma_rates(gamma1, gamma2, powers)
    if scheme is Scheme.NOMA:
        return noma_rates(gamma1, gamma2, order=order)
    if scheme is Scheme.RSMA:
        return rsma_rates(gamma1, gamma2, split=split)
    raise ValueError(f"{scheme} is not a baseline scheme")


# ---------------------------------------------------------------------------
# Finite inter-user link / residual self-interference
# ---------------------------------------------------------------------------

def _relay_chain(gamma1, gamma2, powers: SlotPowers, nonideal: NonIdealParams,
                 gamma3_rx1, gamma3_rx2, power_ratio: float):
    """Per-relay slot-2 terms for the amplify-and-forward second mini-slot.

    Returns (scale1, scale2, noise1, noise2): `scale_i` multiplies the power
    a stream would have had at the base station had user i's relay input been
    noiseless, and `noise_i` is user i's amplified junk referred to the base
    station noise floor.
    """
    k = nonideal.k_sic
    if nonideal.ideal:
        # Strong-link limit: the receiver noise at the users drops out, but
        # the residual self-interference survives because it rides the same
        # channel as the wanted inter-user signal.
        ratio = power_ratio
        den1 = powers.p2_1 + k * ratio * powers.p1_1
        den2 = ratio * powers.p1_1 + k * powers.p2_1
        scale1 = powers.p2_1 / den1
        scale2 = ratio * powers.p1_1 / den2
        noise1 = gamma1 * powers.p1_2 * (k * ratio * powers.p1_1) / den1
        noise2 = gamma2 * powers.p2_2 * (k * powers.p2_1) / den2
        return scale1, scale2, noise1, noise2
    if gamma3_rx1 is None or gamma3_rx2 is None:
        raise ValueError("finite inter-user link needs gamma3_rx1 and gamma3_rx2")
    if not _positive(gamma3_rx1) or not _positive(gamma3_rx2):
        raise ValueError("inter-user SNRs must be strictly positive")
    sig1 = gamma3_rx1 * powers.p2_1                  # wanted power at user 1
    sig2 = gamma3_rx2 * powers.p1_1
    junk1 = 1.0 + k * gamma3_rx2 * powers.p1_1       # rx noise + residual SI
    junk2 = 1.0 + k * gamma3_rx1 * powers.p2_1
    scale1 = sig1 / (sig1 + junk1)
    scale2 = sig2 / (sig2 + junk2)
    noise1 = gamma1 * powers.p1_2 * junk1 / (sig1 + junk1)
    noise2 = gamma2 * powers.p2_2 * junk2 / (sig2 + junk2)
    return scale1, scale2, noise1, noise2


def cnoma_rates_nonideal(gamma1, gamma2, powers: SlotPowers,
                         nonideal: NonIdealParams,
                         gamma3_rx1=None, gamma3_rx2=None,
                         power_ratio: float = 1.0) -> RatePair:
    """C-NOMA rates with amplified relay noise and residual self-interference.

    Reduces to `cnoma_rates` as the inter-user link strengthens and k_sic
    vanishes.
    """
    _check_gammas(gamma1, gamma2)
    if nonideal.ideal and nonideal.k_sic == 0.0:
        return cnoma_rates(gamma1, gamma2, powers)
    scale1, scale2, noise1, noise2 = _relay_chain(
        gamma1, gamma2, powers, nonideal, gamma3_rx1, gamma3_rx2, power_ratio)
    slot2_noise = 1.0 + noise1 + noise2
    relayed_s1 = gamma2 * powers.p2_2 * scale2       # user 2 relays s1
    relayed_s2 = gamma1 * powers.p1_2 * scale1       # user 1 relays s2
    r1 = 0.5 * np.log2(
        1.0
        + gamma1 * powers.p1_1 / (gamma2 * powers.p2_1 + 1.0)
        + relayed_s1 / (relayed_s2 + slot2_noise))
    r2 = 0.5 * np.log2(
        1.0 + gamma2 * powers.p2_1 + relayed_s2 / slot2_noise)
    return RatePair(r1, r2)


def crsma_rates_nonideal(gamma1, gamma2, powers: SplitPowers,
                         nonideal: NonIdealParams,
                         gamma3_rx1=None, gamma3_rx2=None,
                         power_ratio: float = 1.0) -> RatePair:
    """C-RSMA rates with the same non-ideal relay chain applied to the
    four-stream detection order."""
    _check_gammas(gamma1, gamma2)
    if nonideal.ideal and nonideal.k_sic == 0.0:
        return crsma_rates(gamma1, gamma2, powers)
    scale1, scale2, noise1, noise2 = _relay_chain(
        gamma1, gamma2, powers.slot_powers, nonideal,
        gamma3_rx1, gamma3_rx2, power_ratio)
    n2 = 1.0 + noise1 + noise2
    p11 = np.maximum(powers.p11, SPLIT_FLOOR)
    p12 = np.maximum(powers.p12, SPLIT_FLOOR)
    p21 = np.maximum(powers.p21, SPLIT_FLOOR)
    p22 = np.maximum(powers.p22, SPLIT_FLOOR)
    # Slot-1 received stream powers and their slot-2 relayed counterparts.
    a1, b1 = gamma1 * powers.p1_1, gamma2 * powers.p2_1
    a2r = gamma1 * powers.p1_2 * scale1              # carries user-2 streams
    b2r = gamma2 * powers.p2_2 * scale2              # carries user-1 streams

    r11 = 0.5 * np.log2(
        1.0
        + a1 * p11 / (a1 * p12 + b1 * p21 + b1 * p22 + 1.0)
        + b2r * p11 / (b2r * p12 + a2r * p21 + a2r * p22 + n2))
    r21 = 0.5 * np.log2(
        1.0
        + b1 * p21 / (b1 * p22 + a1 * p12 + 1.0)
        + a2r * p21 / (a2r * p22 + b2r * p12 + n2))
    r12 = 0.5 * np.log2(
        1.0
        + a1 * p12 / (b1 * p22 + 1.0)
        + b2r * p12 / (a2r * p22 + n2))
    r22 = 0.5 * np.log2(1.0 + b1 * p22 + a2r * p22 / n2)
    return RatePair(r11 + r12, r21 + r22)


def coma_rates_nonideal(gamma1, gamma2, powers: SlotPowers,
                        nonideal: NonIdealParams,
                        gamma3_rx1=None, gamma3_rx2=None,
                        power_ratio: float = 1.0) -> RatePair:
    """C-OMA rates with the relay chain; each user's block only carries its
    own relay path, so the amplified junk does not mix across users."""
    _check_gammas(gamma1, gamma2)
    if nonideal.ideal and nonideal.k_sic == 0.0:
        return coma_rates(gamma1, gamma2, powers)
    scale1, scale2, noise1, noise2 = _relay_chain(
        gamma1, gamma2, powers, nonideal, gamma3_rx1, gamma3_rx2, power_ratio)
    r1 = 0.5 * np.log2(
        1.0 + gamma1 * powers.p1_1
        + gamma2 * powers.p2_2 * scale2 / (1.0 + noise2))
    r2 = 0.5 * np.log2(
        1.0 + gamma2 * powers.p2_1
        + gamma1 * powers.p1_2 * scale1 / (1.0 + noise1))
    return RatePair(r1, r2)
