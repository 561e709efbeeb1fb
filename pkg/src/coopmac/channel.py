"""Link budgets, fading draws, and the seeded streams behind every simulation.

All quantities are kept linear internally; dB and dBm appear only at the
configuration boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

import numpy as np

SPEED_OF_LIGHT = 299792458.0

# Free-space channel power gain at the 1 m reference distance for a 5 GHz
# carrier; overridable through the `beta0_db` config key.
DEFAULT_CARRIER_HZ = 5e9
DEFAULT_BETA0 = (SPEED_OF_LIGHT / (4.0 * math.pi * DEFAULT_CARRIER_HZ)) ** 2


def db_to_linear(db):
    return 10.0 ** (np.asarray(db, dtype=float) / 10.0) if np.ndim(db) else 10.0 ** (db / 10.0)


def linear_to_db(x):
    return 10.0 * np.log10(x)


def dbm_to_watts(dbm):
    return 10.0 ** ((dbm - 30.0) / 10.0)


def watts_to_dbm(w):
    return 10.0 * np.log10(w) + 30.0


def _require_positive(value, field):
    if not np.isfinite(value) or value <= 0.0:
        raise ValueError(f"{field} must be strictly positive, got {value!r}")


@dataclass(frozen=True)
class LinkBudget:
    """Large-scale link parameters for the two uplink users.

    `omega2_gap_db` scales user 2's mean SNR down by the given amount; it is
    how channel-gap sweeps are realized when both users sit at the same
    distance.
    """

    d1: float
    d2: float
    alpha: float
    beta0: float
    p_bar1: float
    p_bar2: float
    noise_psd: float
    bandwidth: float
    omega2_gap_db: float = 0.0

    def __post_init__(self):
        for field in ("d1", "d2", "alpha", "beta0", "p_bar1", "p_bar2",
                      "noise_psd", "bandwidth"):
            _require_positive(getattr(self, field), field)
        if self.alpha < 2.0:
            raise ValueError(f"alpha must be at least 2, got {self.alpha!r}")
        if not np.isfinite(self.omega2_gap_db):
            raise ValueError(f"omega2_gap_db must be finite, got {self.omega2_gap_db!r}")

    @property
    def sigma2_bs(self) -> float:
        """Receiver noise power at the base station, watts."""
        return self.noise_psd * self.bandwidth

    @property
    def omega1(self) -> float:
        """Mean SNR of user 1, linear."""
        return self.p_bar1 * self.beta0 / (self.sigma2_bs * self.d1 ** self.alpha)

    @property
    def omega2(self) -> float:
        """Mean SNR of user 2, linear (includes the configured gap)."""
        base = self.p_bar2 * self.beta0 / (self.sigma2_bs * self.d2 ** self.alpha)
        return base * 10.0 ** (-self.omega2_gap_db / 10.0)


@dataclass(frozen=True)
class NonIdealParams:
    """Inter-user link quality and residual self-interference.

    `inter_user_snr_db` is the mean received SNR at user 1 from user 2's
    average transmit power; the value at user 2 scales with the power ratio.
    `None` selects the ideal strong-link regime.  `k_sic` is the residual
    self-interference attenuation, linear in [0, 1] (0 = perfect
    cancellation); the residual propagates at the same scale as the
    inter-user link.
    """

    inter_user_snr_db: float | None = None
    k_sic: float = 0.0

    def __post_init__(self):
        if not (0.0 <= self.k_sic <= 1.0):
            raise ValueError(f"k_sic must lie in [0, 1], got {self.k_sic!r}")
        if self.inter_user_snr_db is not None and not np.isfinite(self.inter_user_snr_db):
            raise ValueError("inter_user_snr_db must be finite or None")

    @property
    def ideal(self) -> bool:
        return self.inter_user_snr_db is None


@dataclass(frozen=True)
class FadingDraw:
    """One realization of the three multipath power gains and derived SNRs."""

    g1: float
    g2: float
    g3: float
    gamma1: float
    gamma2: float
    gamma3_rx1: float | None = None
    gamma3_rx2: float | None = None


def build_link_budget(config: Mapping[str, float]) -> LinkBudget:
    """Build a LinkBudget from raw config values (distances in m, powers in
    dBm, noise PSD in dBm/Hz, beta0 in dB)."""
    known = {"d1_m", "d2_m", "alpha", "beta0_db", "p1_dbm", "p2_dbm",
             "n0_dbm_hz", "bandwidth_hz", "gap_db"}
    unknown = set(config) - known - {"k_sic_db", "inter_user_snr_db"}
    if unknown:
        raise ValueError(f"unknown link config keys: {sorted(unknown)}")
    for key in ("d1_m", "d2_m", "alpha", "p1_dbm", "p2_dbm", "n0_dbm_hz", "bandwidth_hz"):
        if key not in config:
            raise ValueError(f"missing link config key: {key}")
    beta0 = db_to_linear(config["beta0_db"]) if "beta0_db" in config else DEFAULT_BETA0
    return LinkBudget(
        d1=config["d1_m"],
        d2=config["d2_m"],
        alpha=config["alpha"],
        beta0=beta0,
        p_bar1=dbm_to_watts(config["p1_dbm"]),
        p_bar2=dbm_to_watts(config["p2_dbm"]),
        noise_psd=dbm_to_watts(config["n0_dbm_hz"]),
        bandwidth=config["bandwidth_hz"],
        omega2_gap_db=config.get("gap_db", 0.0),
    )


def build_nonideal_params(config: Mapping[str, float]) -> NonIdealParams:
    snr = config.get("inter_user_snr_db")
    k_sic_db = config.get("k_sic_db")
    k_sic = 0.0 if k_sic_db is None else 10.0 ** (k_sic_db / 10.0)
    return NonIdealParams(inter_user_snr_db=snr, k_sic=k_sic)


def parse_link_config(path) -> dict[str, float]:
    """Parse a flat `key = value` link configuration file."""
    values: dict[str, float] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        try:
            values[key.strip()] = float(value.strip())
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: non-numeric value {value.strip()!r}") from exc
    return values


def load_link_config(path) -> tuple[LinkBudget, NonIdealParams]:
    values = parse_link_config(path)
    return build_link_budget(values), build_nonideal_params(values)


def mean_snr_pair(budget: LinkBudget) -> tuple[float, float]:
    """The mean SNR pair (user 1, user 2), linear."""
    return budget.omega1, budget.omega2


def inter_user_mean_snrs(budget: LinkBudget, nonideal: NonIdealParams) -> tuple[float, float]:
    """Mean inter-user SNRs (at user 1, at user 2) for a finite link."""
    if nonideal.ideal:
        raise ValueError("inter-user SNRs are undefined in the ideal strong-link regime")
    at_user1 = db_to_linear(nonideal.inter_user_snr_db)
    at_user2 = at_user1 * budget.p_bar1 / budget.p_bar2
    return at_user1, at_user2


def fading_stream(master_seed: int, stream_index: int) -> np.random.Generator:
    """Independently seedable sub-stream: equal (seed, index) gives equal draws."""
    key = np.array([np.uint64(master_seed), np.uint64(stream_index)], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def sample_fading(budget: LinkBudget, rng: np.random.Generator,
                  nonideal: NonIdealParams | None = None) -> FadingDraw:
    """Draw one fading realization: g_k i.i.d. unit-mean exponential."""
    g1, g2, g3 = rng.standard_exponential(3)
    draw = {
        "g1": g1, "g2": g2, "g3": g3,
        "gamma1": g1 * budget.omega1,
        "gamma2": g2 * budget.omega2,
    }
    if nonideal is not None and not nonideal.ideal:
        at_user1, at_user2 = inter_user_mean_snrs(budget, nonideal)
        draw["gamma3_rx1"] = g3 * at_user1
        draw["gamma3_rx2"] = g3 * at_user2
    return FadingDraw(**draw)
