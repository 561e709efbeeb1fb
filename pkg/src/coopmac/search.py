"""Grid-search oracle and closed-form/small-grid baseline optimizers.

The exhaustive searches treat the power budgets as tight (rates only gain
from spending the full budget along the searched axes), which reduces C-NOMA
to two free variables and C-RSMA to four.  Ties resolve to the first grid
point in C-order, so results are deterministic.
"""

from __future__ import annotations

import numpy as np

from .rates import (RatePair, Scheme, SlotPowers, SplitPowers, check_fairness,
                    cnoma_rates, coma_rates, crsma_rates, noma_rates,
                    oma_rates, rsma_rates)

_TINY = 1e-12


def _axis(lo, hi, step):
    n = int(round((hi - lo) / step)) + 1
    return np.linspace(lo, hi, n)


def _cnoma_objective(gamma1, gamma2, p1_1, p2_1, fairness):
    powers = SlotPowers(np.maximum(p1_1, _TINY), np.maximum(2.0 - p1_1, _TINY),
                        np.maximum(p2_1, _TINY), np.maximum(2.0 - p2_1, _TINY))
    return cnoma_rates(gamma1, gamma2, powers).objective(fairness)


def exhaustive_cnoma(gamma1, gamma2, fairness: float = 1.0,
                     resolution: float = 0.01,
                     refine: bool = True) -> tuple[SlotPowers, float]:
    """Best tight-budget C-NOMA allocation of min(R1, fairness*R2) on a grid
    over (p1 slot 1, p2 slot 1)."""
    fairness = check_fairness(fairness)

    def evaluate(a1, a2):
        obj = _cnoma_objective(gamma1, gamma2, a1[:, None], a2[None, :], fairness)
        idx = np.unravel_index(np.argmax(obj), obj.shape)
        return float(a1[idx[0]]), float(a2[idx[1]]), float(obj[idx])

    p1_1, p2_1, value = evaluate(_axis(0.0, 2.0, resolution),
                                 _axis(0.0, 2.0, resolution))
    if refine:
        step = resolution / 10.0
        p1_1, p2_1, value = evaluate(
            _axis(max(0.0, p1_1 - resolution), min(2.0, p1_1 + resolution), step),
            _axis(max(0.0, p2_1 - resolution), min(2.0, p2_1 + resolution), step))
    powers = SlotPowers(max(p1_1, _TINY), max(2.0 - p1_1, _TINY),
                        max(p2_1, _TINY), max(2.0 - p2_1, _TINY))
    return powers, value


def exhaustive_crsma(gamma1, gamma2, fairness: float = 1.0,
                     resolution: float = 0.02,
                     refine_resolution: float = 0.002) -> tuple[SplitPowers, float]:
    """Best tight-budget C-RSMA allocation over (p1 slot 1, p2 slot 1,
    user-1 split, user-2 split): coarse pass then a local refinement."""
    fairness = check_fairness(fairness)

    def evaluate(a1, a2, s1, s2):
        # a*: slot-1 powers, s*: stream-1 split fractions; chunk over a1.
        best_val, best_idx = -np.inf, None
        for i, p1_1 in enumerate(a1):
            powers = SplitPowers(
                max(p1_1, _TINY), max(2.0 - p1_1, _TINY),
                np.maximum(a2[:, None, None], _TINY),
                np.maximum(2.0 - a2[:, None, None], _TINY),
                np.maximum(s1[None, :, None], _TINY),
                np.maximum(1.0 - s1[None, :, None], _TINY),
                np.maximum(s2[None, None, :], _TINY),
                np.maximum(1.0 - s2[None, None, :], _TINY))
            obj = crsma_rates(gamma1, gamma2, powers).objective(fairness)
            k = np.unravel_index(np.argmax(obj), obj.shape)
            if obj[k] > best_val:
                best_val = float(obj[k])
                best_idx = (float(p1_1), float(a2[k[0]]), float(s1[k[1]]), float(s2[k[2]]))
        return best_idx, best_val

    coarse = (_axis(0.0, 2.0, resolution), _axis(0.0, 2.0, resolution),
              _axis(0.0, 1.0, resolution), _axis(0.0, 1.0, resolution))
    (p1_1, p2_1, s1, s2), _ = evaluate(coarse[0], coarse[1], coarse[2], coarse[3])

    r, rr = resolution, refine_resolution
    fine = (
        _axis(max(0.0, p1_1 - r), min(2.0, p1_1 + r), rr),
        _axis(max(0.0, p2_1 - r), min(2.0, p2_1 + r), rr),
        _axis(max(0.0, s1 - r), min(1.0, s1 + r), rr),
        _axis(max(0.0, s2 - r), min(1.0, s2 + r), rr))
    (p1_1, p2_1, s1, s2), value = evaluate(fine[0], fine[1], fine[2], fine[3])
    powers = SplitPowers(
        max(p1_1, _TINY), max(2.0 - p1_1, _TINY),
        max(p2_1, _TINY), max(2.0 - p2_1, _TINY),
        max(s1, _TINY), max(1.0 - s1, _TINY),
        max(s2, _TINY), max(1.0 - s2, _TINY))
    return powers, value


def exhaustive_search(scheme: Scheme, gamma1, gamma2, fairness: float = 1.0,
                      resolution: float | None = None):
    """Grid oracle dispatch for the two proposed schemes."""
    if scheme is Scheme.C_NOMA:
        return exhaustive_cnoma(gamma1, gamma2, fairness,
                                resolution=resolution or 0.01)
    if scheme is Scheme.C_RSMA:
        return exhaustive_crsma(gamma1, gamma2, fairness,
                                resolution=resolution or 0.02)
    raise ValueError(f"no exhaustive oracle for {scheme}")


def optimize_oma(gamma1, gamma2, fairness: float = 1.0) -> tuple[dict, float]:
    fairness = check_fairness(fairness)
    pair = oma_rates(gamma1, gamma2)
    return {}, float(pair.objective(fairness))


def optimize_noma(gamma1, gamma2, fairness: float = 1.0) -> tuple[dict, float]:
    """Pick the decoding order with the better max-min value."""
    fairness = check_fairness(fairness)
    best = None
    for order in ("1-first", "2-first"):
        value = float(noma_rates(gamma1, gamma2, order=order).objective(fairness))
        if best is None or value > best[1]:
            best = ({"order": order}, value)
    return best


def optimize_rsma(gamma1, gamma2, fairness: float = 1.0,
                  n_grid: int = 2001) -> tuple[dict, float]:
    """Grid the user-1 split fraction."""
    fairness = check_fairness(fairness)
    splits = np.linspace(1e-6, 1.0 - 1e-6, n_grid)
    obj = rsma_rates(gamma1, gamma2, split=splits).objective(fairness)
    k = int(np.argmax(obj))
    return {"split": float(splits[k])}, float(obj[k])
