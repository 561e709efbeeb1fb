"""Log-domain convex subproblems and an embedded barrier-Newton solver.

After the variable change w = ln p the power-allocation subproblems reduce to

    maximize   c @ v
    s.t.       log( sum_k coeff_k * exp(exponents_k @ v) ) <= log(bound_j)

for every constraint j.  Each left-hand side is a convex log-sum-exp of
affine forms, so the subproblem is solved with a standard log-barrier method:
Newton with backtracking on the centering problem, barrier parameter scaled
up by a fixed factor per outer stage.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


class SubproblemError(RuntimeError):
    """Raised when the embedded solver cannot make progress."""


# Newton decrements below this are float64 noise once the active-constraint
# margins have shrunk to ~1/t at the late barrier stages.
_DECREMENT_FLOOR = 5e-8


@dataclass(frozen=True)
class LseConstraint:
    """One posynomial-under-bound constraint in log-domain form."""

    coeffs: np.ndarray        # (k,) strictly positive
    exponents: np.ndarray     # (k, n) rows of the affine forms
    bound: float              # linear-domain bound, > 0
    label: str = ""

    def __post_init__(self):
        coeffs = np.asarray(self.coeffs, dtype=float)
        exponents = np.atleast_2d(np.asarray(self.exponents, dtype=float))
        if coeffs.ndim != 1 or exponents.shape[0] != coeffs.shape[0]:
            raise ValueError(f"constraint {self.label!r}: shape mismatch")
        if np.any(coeffs <= 0.0) or not np.all(np.isfinite(coeffs)):
            raise ValueError(f"constraint {self.label!r}: coefficients must be positive")
        if not (np.isfinite(self.bound) and self.bound > 0.0):
            raise ValueError(f"constraint {self.label!r}: bound must be positive")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "exponents", exponents)

    @property
    def log_bound(self) -> float:
        return float(np.log(self.bound))

    def _shifted(self, v: np.ndarray):
        z = np.log(self.coeffs) + self.exponents @ v
        top = np.max(z)
        return z, top

    def log_value(self, v: np.ndarray) -> float:
        """Max-shifted log-sum-exp of the posynomial at v."""
        z, top = self._shifted(v)
        return float(top + np.log(np.sum(np.exp(z - top))))

    def margin(self, v: np.ndarray) -> float:
        """Slack log(bound) - lse(v); strictly feasible iff > 0."""
        return self.log_bound - self.log_value(v)

    def value_grad_hess(self, v: np.ndarray):
        z, top = self._shifted(v)
        e = np.exp(z - top)
        total = np.sum(e)
        softmax = e / total
        grad = self.exponents.T @ softmax
        weighted = self.exponents * softmax[:, None]
        hess = self.exponents.T @ weighted - np.outer(grad, grad)
        value = float(top + np.log(total))
        return value, grad, hess


@dataclass(frozen=True)
class ConvexSubproblem:
    """maximize objective @ v subject to log-sum-exp constraints."""

    objective: np.ndarray
    constraints: tuple[LseConstraint, ...]
    var_names: tuple[str, ...]

    def __post_init__(self):
        objective = np.asarray(self.objective, dtype=float)
        object.__setattr__(self, "objective", objective)
        n = objective.shape[0]
        if len(self.var_names) != n:
            raise ValueError("objective length must match var_names")
        for c in self.constraints:
            if c.exponents.shape[1] != n:
                raise ValueError(f"constraint {c.label!r} has wrong width")

    def margins(self, v: np.ndarray) -> np.ndarray:
        return np.array([c.margin(v) for c in self.constraints])

    def is_strictly_feasible(self, v: np.ndarray) -> bool:
        return bool(np.all(self.margins(v) > 0.0))


@dataclass
class SolverStats:
    newton_iters: int = 0
    barrier_stages: int = 0
    final_t: float = 0.0
    kkt_residual: float = float("inf")
    duality_gap: float = float("inf")
    dual_vars: np.ndarray = field(default_factory=lambda: np.empty(0))


def solve_subproblem(problem: ConvexSubproblem, v0: np.ndarray, *,
                     t0: float = 1.0, barrier_mu0: float = 10.0,
                     newton_tol: float = 1e-10, gap_tol: float = 1e-9,
                     max_newton: int = 400) -> tuple[np.ndarray, SolverStats]:
    """Barrier method from a strictly feasible start.

    Returns the primal iterate and solver statistics; the returned point is
    strictly feasible with duality gap at most `gap_tol` and a KKT residual
    reported in the stats.
    """
    v = np.asarray(v0, dtype=float).copy()
    m = len(problem.constraints)
    c = problem.objective
    if not problem.is_strictly_feasible(v):
        raise SubproblemError("start point is not strictly feasible")

    stats = SolverStats()
    t = t0
    prev_center = None
    while True:
        stats.barrier_stages += 1
        for _ in range(max_newton):
            grad = -t * c
            hess = np.zeros((v.size, v.size))
            margins = np.empty(m)
            grads = []
            for j, constraint in enumerate(problem.constraints):
                value, g_j, h_j = constraint.value_grad_hess(v)
                s_j = constraint.log_bound - value
                if s_j <= 0.0:
                    raise SubproblemError(
                        f"iterate left the interior at {constraint.label!r}")
                margins[j] = s_j
                grads.append(g_j)
                grad += g_j / s_j
                hess += h_j / s_j + np.outer(g_j, g_j) / (s_j * s_j)
            ridge = 1e-12 * max(1.0, np.trace(hess) / v.size)
            hess[np.diag_indices_from(hess)] += ridge
            try:
                step = np.linalg.solve(hess, -grad)
            except np.linalg.LinAlgError as exc:
                raise SubproblemError("singular Newton system") from exc
            decrement = float(-grad @ step)
            stats.newton_iters += 1
            if decrement / 2.0 <= max(newton_tol, _DECREMENT_FLOOR):
                break
            if decrement <= 0.01:
                # Quadratic-convergence region: a full (feasibility-guarded)
                # Newton step; the Armijo arithmetic cannot resolve these
                # decreases once the active margins are near 1/t.
                alpha = 1.0
                while alpha > 1e-14:
                    if np.all(problem.margins(v + alpha * step) > 0.0):
                        break
                    alpha *= 0.5
                else:
                    raise SubproblemError("no interior step available")
            else:
                # Backtracking: stay interior, then Armijo on the barrier
                # value, evaluated as a difference so the huge -t*mu offset
                # at late stages cannot swamp it.
                alpha = 1.0
                while alpha > 1e-14:
                    trial = v + alpha * step
                    trial_margins = problem.margins(trial)
                    if np.all(trial_margins > 0.0):
                        delta = (-t * float(c @ (alpha * step))
                                 - float(np.sum(np.log(trial_margins / margins))))
                        if delta <= -0.25 * alpha * decrement:
                            break
                    alpha *= 0.5
                else:
                    raise SubproblemError("line search failed")
            v = v + alpha * step
        else:
            raise SubproblemError("Newton iteration budget exhausted")

        margins = problem.margins(v)
        duals = 1.0 / (t * margins)
        grads = np.column_stack([
            problem.constraints[j].value_grad_hess(v)[1] for j in range(m)])
        stationarity = float(np.linalg.norm(grads @ duals - c))
        # The barrier duals carry an O(1/t) centering error; a least-squares
        # refit over the near-active constraints usually certifies a much
        # smaller stationarity residual for the same point.
        active = margins < 1e-4
        if np.any(active):
            fit, *_ = np.linalg.lstsq(grads[:, active], c, rcond=None)
            if np.all(fit >= 0.0):
                refit = np.zeros(m)
                refit[active] = fit
                refined = float(np.linalg.norm(grads[:, active] @ fit - c))
                compl = float(refit @ margins)
                if max(refined, compl) < stationarity:
                    stationarity = max(refined, compl)
                    duals = refit
        stats.final_t = t
        stats.duality_gap = m / t
        stats.kkt_residual = max(stationarity, m / t)
        stats.dual_vars = duals
        if m / t <= gap_tol:
            return v, stats
        t *= barrier_mu0
