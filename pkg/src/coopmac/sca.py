"""Successive convex approximation for the max-min power allocation problems.

Each cooperative rate is a sum of terms 0.5*log2(1 + 1/a + 1/b) where a and b
are posynomials of the normalized powers.  That inner function is convex in
(a, b), so its first-order expansion around the current iterate is a global
lower bound that touches the true rate at the expansion point.  Maximizing
the lower-bounded min-rate is a geometric program, solved in the log domain
by the embedded barrier solver; iterating the expansion point yields a
monotone non-decreasing objective.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .gp import ConvexSubproblem, LseConstraint, SubproblemError, solve_subproblem
from .rates import (RatePair, Scheme, SlotPowers, SplitPowers, check_fairness,
                    cnoma_rates, coma_rates, crsma_rates)

LN2 = math.log(2.0)

_DEGENERATE_POWER = 1e-30


class LinearizationInfeasible(RuntimeError):
    """A rate constraint's right-hand side came out non-positive; the outer
    loop should damp the step and re-linearize."""


class ScaError(RuntimeError):
    """Solver failure inside the SCA loop, annotated with the iteration."""

    def __init__(self, iteration: int, message: str):
        super().__init__(f"SCA iteration {iteration}: {message}")
        self.iteration = iteration


@dataclass(frozen=True)
class ScaOptions:
    """Knobs for the SCA loop and the embedded barrier solver."""

    sca_tol: float = 1e-6
    sca_max_iter: int = 50
    newton_tol: float = 1e-10
    barrier_mu0: float = 10.0
    barrier_gap: float = 1e-9
    damping_max: int = 10
    power_floor: float = 1e-8   # guards the log transform of start points


@dataclass(frozen=True)
class RateTermLin:
    """First-order data for one 0.5*log2(1 + 1/a + 1/b) rate term.

    `a` and `b` are the inverse SINR summands at the expansion point; the
    gradients are the partials of log2(1 + 1/a + 1/b), always negative.
    """

    a: float
    b: float
    grad_a: float
    grad_b: float

    @property
    def touch(self) -> float:
        """Term value at the expansion point (the bound is exact here)."""
        return 0.5 * math.log2(1.0 + 1.0 / self.a + 1.0 / self.b)

    def lower_bound(self, a_new: float, b_new: float) -> float:
        return (self.touch
                + 0.5 * self.grad_a * (a_new - self.a)
                + 0.5 * self.grad_b * (b_new - self.b))


def _grad_pair(a: float, b: float) -> tuple[float, float]:
    """Partials of log2(1 + 1/a + 1/b) with respect to a and b."""
    da = -1.0 / (LN2 * (a * a + a + a * a / b))
    db = -1.0 / (LN2 * (b * b + b + b * b / a))
    return da, db


def _term(a: float, b: float) -> RateTermLin:
    grad_a, grad_b = _grad_pair(a, b)
    return RateTermLin(a=a, b=b, grad_a=grad_a, grad_b=grad_b)


def _check_linearizable(powers):
    values = [powers.p1_1, powers.p1_2, powers.p2_1, powers.p2_2]
    if isinstance(powers, SplitPowers):
        values += [powers.p11, powers.p12, powers.p21, powers.p22]
    if any(v < _DEGENERATE_POWER for v in values):
        raise ValueError("degenerate (near-zero) power in the expansion point")


# ---------------------------------------------------------------------------
# Inverse-SINR summands: the single source for both the linearization and the
# lower-bound evaluation at other allocations.
# ---------------------------------------------------------------------------

def cnoma_inverse_sinrs(user: int, gamma1, gamma2, powers: SlotPowers):
    if user == 1:
        a = (gamma2 * powers.p2_1 + 1.0) / (gamma1 * powers.p1_1)
        b = (gamma1 * powers.p1_2 + 1.0) / (gamma2 * powers.p2_2)
    else:
        a = 1.0 / (gamma1 * powers.p1_2)
        b = 1.0 / (gamma2 * powers.p2_1)
    return a, b


def coma_inverse_sinrs(user: int, gamma1, gamma2, powers: SlotPowers):
    if user == 1:
        return 1.0 / (gamma1 * powers.p1_1), 1.0 / (gamma2 * powers.p2_2)
    return 1.0 / (gamma2 * powers.p2_1), 1.0 / (gamma1 * powers.p1_2)


def crsma_inverse_sinrs(user: int, stream: int, gamma1, gamma2,
                        powers: SplitPowers):
    a1 = gamma1 * powers.p1_1
    a2 = gamma1 * powers.p1_2
    b1 = gamma2 * powers.p2_1
    b2 = gamma2 * powers.p2_2
    if user == 1 and stream == 1:
        a = (a1 * powers.p12 + b1 * powers.p21 + b1 * powers.p22 + 1.0) / (a1 * powers.p11)
        b = (b2 * powers.p12 + a2 * powers.p21 + a2 * powers.p22 + 1.0) / (b2 * powers.p11)
    elif user == 1 and stream == 2:
        a = (b1 * powers.p22 + 1.0) / (a1 * powers.p12)
        b = (a2 * powers.p22 + 1.0) / (b2 * powers.p12)
    elif user == 2 and stream == 1:
        a = (b1 * powers.p22 + a1 * powers.p12 + 1.0) / (b1 * powers.p21)
        b = (a2 * powers.p22 + b2 * powers.p12 + 1.0) / (a2 * powers.p21)
    else:
        a = 1.0 / (b1 * powers.p22)
        b = 1.0 / (a2 * powers.p22)
    return a, b


# ---------------------------------------------------------------------------
# Linearization points
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CnomaLinearization:
    gamma1: float
    gamma2: float
    powers: SlotPowers
    user1: RateTermLin
    user2: RateTermLin

    def lower_bounds(self, powers: SlotPowers) -> tuple[float, float]:
        lb1 = self.user1.lower_bound(*cnoma_inverse_sinrs(1, self.gamma1, self.gamma2, powers))
        lb2 = self.user2.lower_bound(*cnoma_inverse_sinrs(2, self.gamma1, self.gamma2, powers))
        return lb1, lb2


@dataclass(frozen=True)
class ComaLinearization:
    gamma1: float
    gamma2: float
    powers: SlotPowers
    user1: RateTermLin
    user2: RateTermLin

    def lower_bounds(self, powers: SlotPowers) -> tuple[float, float]:
        lb1 = self.user1.lower_bound(*coma_inverse_sinrs(1, self.gamma1, self.gamma2, powers))
        lb2 = self.user2.lower_bound(*coma_inverse_sinrs(2, self.gamma1, self.gamma2, powers))
        return lb1, lb2


@dataclass(frozen=True)
class CrsmaLinearization:
    gamma1: float
    gamma2: float
    powers: SplitPowers
    terms: tuple[tuple[RateTermLin, RateTermLin], tuple[RateTermLin, RateTermLin]]

    def lower_bounds(self, powers: SplitPowers) -> tuple[float, float]:
        out = []
        for user in (1, 2):
            total = 0.0
            for stream in (1, 2):
                term = self.terms[user - 1][stream - 1]
                a, b = crsma_inverse_sinrs(user, stream, self.gamma1, self.gamma2, powers)
                total += term.lower_bound(a, b)
            out.append(total)
        return out[0], out[1]


def linearize_cnoma(powers: SlotPowers, gamma1: float, gamma2: float) -> CnomaLinearization:
    _check_linearizable(powers)
    return CnomaLinearization(
        gamma1=gamma1, gamma2=gamma2, powers=powers,
        user1=_term(*cnoma_inverse_sinrs(1, gamma1, gamma2, powers)),
        user2=_term(*cnoma_inverse_sinrs(2, gamma1, gamma2, powers)))


def linearize_coma(powers: SlotPowers, gamma1: float, gamma2: float) -> ComaLinearization:
    _check_linearizable(powers)
    return ComaLinearization(
        gamma1=gamma1, gamma2=gamma2, powers=powers,
        user1=_term(*coma_inverse_sinrs(1, gamma1, gamma2, powers)),
        user2=_term(*coma_inverse_sinrs(2, gamma1, gamma2, powers)))


def linearize_crsma(powers: SplitPowers, gamma1: float, gamma2: float) -> CrsmaLinearization:
    _check_linearizable(powers)
    terms = tuple(
        tuple(_term(*crsma_inverse_sinrs(user, stream, gamma1, gamma2, powers))
              for stream in (1, 2))
        for user in (1, 2))
    return CrsmaLinearization(gamma1=gamma1, gamma2=gamma2, powers=powers, terms=terms)


# ---------------------------------------------------------------------------
# Subproblem assembly.  Variable order: log slot powers (p1_1, p1_2, p2_1,
# p2_2), then for C-RSMA the log split fractions (p11, p12, p21, p22), then
# the log objective mu.
# ---------------------------------------------------------------------------

CNOMA_VARS = ("w_p1_1", "w_p1_2", "w_p2_1", "w_p2_2", "mu")
CRSMA_VARS = ("w_p1_1", "w_p1_2", "w_p2_1", "w_p2_2",
              "w_p11", "w_p12", "w_p21", "w_p22", "mu")

# Monomial tables: (coefficient builder, {var index: exponent}).  Indices
# follow the variable order above; `g1`/`g2` placeholders are resolved with
# the channel gains when the subproblem is assembled.
_CNOMA_POSY = {
    (1, "a"): [("g2/g1", {2: 1, 0: -1}), ("1/g1", {0: -1})],
    (1, "b"): [("g1/g2", {1: 1, 3: -1}), ("1/g2", {3: -1})],
    (2, "a"): [("1/g1", {1: -1})],
    (2, "b"): [("1/g2", {2: -1})],
}

_COMA_POSY = {
    (1, "a"): [("1/g1", {0: -1})],
    (1, "b"): [("1/g2", {3: -1})],
    (2, "a"): [("1/g2", {2: -1})],
    (2, "b"): [("1/g1", {1: -1})],
}

_CRSMA_POSY = {
    (1, 1, "a"): [("1", {5: 1, 4: -1}),
                  ("g2/g1", {2: 1, 6: 1, 0: -1, 4: -1}),
                  ("g2/g1", {2: 1, 7: 1, 0: -1, 4: -1}),
                  ("1/g1", {0: -1, 4: -1})],
    (1, 1, "b"): [("1", {5: 1, 4: -1}),
                  ("g1/g2", {1: 1, 6: 1, 3: -1, 4: -1}),
                  ("g1/g2", {1: 1, 7: 1, 3: -1, 4: -1}),
                  ("1/g2", {3: -1, 4: -1})],
    (1, 2, "a"): [("g2/g1", {2: 1, 7: 1, 0: -1, 5: -1}),
                  ("1/g1", {0: -1, 5: -1})],
    (1, 2, "b"): [("g1/g2", {1: 1, 7: 1, 3: -1, 5: -1}),
                  ("1/g2", {3: -1, 5: -1})],
    (2, 1, "a"): [("1", {7: 1, 6: -1}),
                  ("g1/g2", {0: 1, 5: 1, 2: -1, 6: -1}),
                  ("1/g2", {2: -1, 6: -1})],
    (2, 1, "b"): [("1", {7: 1, 6: -1}),
                  ("g2/g1", {3: 1, 5: 1, 1: -1, 6: -1}),
                  ("1/g1", {1: -1, 6: -1})],
    (2, 2, "a"): [("1/g2", {2: -1, 7: -1})],
    (2, 2, "b"): [("1/g1", {1: -1, 7: -1})],
}


def _resolve_coef(expr: str, gamma1: float, gamma2: float) -> float:
    return {"1": 1.0, "1/g1": 1.0 / gamma1, "1/g2": 1.0 / gamma2,
            "g2/g1": gamma2 / gamma1, "g1/g2": gamma1 / gamma2}[expr]


def _monomials(table, key, gamma1, gamma2, n_vars):
    coeffs, rows = [], []
    for expr, exps in table[key]:
        coeffs.append(_resolve_coef(expr, gamma1, gamma2))
        row = np.zeros(n_vars)
        for idx, power in exps.items():
            row[idx] = power
        rows.append(row)
    return coeffs, rows


def _rate_constraint(terms, posys, mu_coef, n_vars, label):
    """Assemble one linearized rate constraint.

    `terms` is the list of RateTermLin making up the user's rate and `posys`
    the matching list of ((coeffs_a, rows_a), (coeffs_b, rows_b)); `mu_coef`
    is 1 for user 1 and 1/fairness for user 2.
    """
    rhs = 0.0
    coeffs = [mu_coef]
    mu_row = np.zeros(n_vars)
    mu_row[-1] = 1.0
    rows = [mu_row]
    for term, ((ca, ra), (cb, rb)) in zip(terms, posys):
        rhs += term.touch - 0.5 * (term.grad_a * term.a + term.grad_b * term.b)
        for c, r in zip(ca, ra):
            coeffs.append(0.5 * (-term.grad_a) * c)
            rows.append(r)
        for c, r in zip(cb, rb):
            coeffs.append(0.5 * (-term.grad_b) * c)
            rows.append(r)
    if rhs <= 0.0:
        raise LinearizationInfeasible(f"{label}: non-positive bound {rhs}")
    return LseConstraint(coeffs=np.array(coeffs), exponents=np.array(rows),
                         bound=rhs, label=label)


def _budget_constraint(indices, bound, n_vars, label):
    rows = np.zeros((len(indices), n_vars))
    for k, idx in enumerate(indices):
        rows[k, idx] = 1.0
    return LseConstraint(coeffs=np.ones(len(indices)), exponents=rows,
                         bound=bound, label=label)


def _mu_objective(n_vars):
    objective = np.zeros(n_vars)
    objective[-1] = 1.0
    return objective


def build_cnoma_subproblem(lin: CnomaLinearization, fairness: float) -> ConvexSubproblem:
    fairness = check_fairness(fairness)
    n = len(CNOMA_VARS)
    g1, g2 = lin.gamma1, lin.gamma2
    posy1 = (_monomials(_CNOMA_POSY, (1, "a"), g1, g2, n),
             _monomials(_CNOMA_POSY, (1, "b"), g1, g2, n))
    posy2 = (_monomials(_CNOMA_POSY, (2, "a"), g1, g2, n),
             _monomials(_CNOMA_POSY, (2, "b"), g1, g2, n))
    constraints = (
        _rate_constraint([lin.user1], [posy1], 1.0, n, "rate-user1"),
        _rate_constraint([lin.user2], [posy2], 1.0 / fairness, n, "rate-user2"),
        _budget_constraint((0, 1), 2.0, n, "budget-user1"),
        _budget_constraint((2, 3), 2.0, n, "budget-user2"),
    )
    return ConvexSubproblem(_mu_objective(n), constraints, CNOMA_VARS)


def build_coma_subproblem(lin: ComaLinearization, fairness: float) -> ConvexSubproblem:
    fairness = check_fairness(fairness)
    n = len(CNOMA_VARS)
    g1, g2 = lin.gamma1, lin.gamma2
    posy1 = (_monomials(_COMA_POSY, (1, "a"), g1, g2, n),
             _monomials(_COMA_POSY, (1, "b"), g1, g2, n))
    posy2 = (_monomials(_COMA_POSY, (2, "a"), g1, g2, n),
             _monomials(_COMA_POSY, (2, "b"), g1, g2, n))
    constraints = (
        _rate_constraint([lin.user1], [posy1], 1.0, n, "rate-user1"),
        _rate_constraint([lin.user2], [posy2], 1.0 / fairness, n, "rate-user2"),
        _budget_constraint((0, 1), 2.0, n, "budget-user1"),
        _budget_constraint((2, 3), 2.0, n, "budget-user2"),
    )
    return ConvexSubproblem(_mu_objective(n), constraints, CNOMA_VARS)


def build_crsma_subproblem(lin: CrsmaLinearization, fairness: float) -> ConvexSubproblem:
    fairness = check_fairness(fairness)
    n = len(CRSMA_VARS)
    g1, g2 = lin.gamma1, lin.gamma2

    def posys(user):
        return [(_monomials(_CRSMA_POSY, (user, stream, "a"), g1, g2, n),
                 _monomials(_CRSMA_POSY, (user, stream, "b"), g1, g2, n))
                for stream in (1, 2)]

    constraints = (
        _rate_constraint(list(lin.terms[0]), posys(1), 1.0, n, "rate-user1"),
        _rate_constraint(list(lin.terms[1]), posys(2), 1.0 / fairness, n, "rate-user2"),
        _budget_constraint((0, 1), 2.0, n, "budget-user1"),
        _budget_constraint((2, 3), 2.0, n, "budget-user2"),
        _budget_constraint((4, 5), 1.0, n, "split-user1"),
        _budget_constraint((6, 7), 1.0, n, "split-user2"),
    )
    return ConvexSubproblem(_mu_objective(n), constraints, CRSMA_VARS)


def build_subproblem(lin, fairness: float) -> ConvexSubproblem:
    """Dispatch on the linearization type."""
    if isinstance(lin, CnomaLinearization):
        return build_cnoma_subproblem(lin, fairness)
    if isinstance(lin, CrsmaLinearization):
        return build_crsma_subproblem(lin, fairness)
    if isinstance(lin, ComaLinearization):
        return build_coma_subproblem(lin, fairness)
    raise TypeError(f"unknown linearization {type(lin).__name__}")


# ---------------------------------------------------------------------------
# SCA loop
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ScaIteration:
    powers: SlotPowers | SplitPowers
    eta: float
    r1: float
    r2: float
    newton_iters: int


@dataclass
class ScaTrace:
    iterations: list[ScaIteration] = field(default_factory=list)
    converged: bool = False
    message: str = ""

    @property
    def n_iterations(self) -> int:
        """Number of subproblem solves (the initial point is row zero)."""
        return len(self.iterations) - 1

    @property
    def final(self) -> ScaIteration:
        return self.iterations[-1]

    def objective(self, fairness: float) -> float:
        return min(self.final.r1, fairness * self.final.r2)

    def etas(self) -> np.ndarray:
        return np.array([it.eta for it in self.iterations])

    def rows(self):
        """Per-iteration records for CSV emission."""
        return [{"iteration": k, "eta": it.eta, "r1": it.r1, "r2": it.r2,
                 "newton_iters": it.newton_iters}
                for k, it in enumerate(self.iterations)]


class _SchemeHooks:
    """Scheme-specific plumbing for the shared SCA driver."""

    def __init__(self, n_powers, to_powers, linearize, rates, default_init):
        self.n_powers = n_powers
        self.to_powers = to_powers
        self.linearize = linearize
        self.rates = rates
        self.default_init = np.array(default_init, dtype=float)


_CNOMA_HOOKS = _SchemeHooks(
    4, lambda p: SlotPowers(*p), linearize_cnoma,
    cnoma_rates, [1.0, 1.0, 1.0, 1.0])
_COMA_HOOKS = _SchemeHooks(
    4, lambda p: SlotPowers(*p), linearize_coma,
    coma_rates, [1.0, 1.0, 1.0, 1.0])
_CRSMA_HOOKS = _SchemeHooks(
    8, lambda p: SplitPowers(*p), linearize_crsma,
    crsma_rates, [1.0, 1.0, 1.0, 1.0, 0.5, 0.5, 0.5, 0.5])


def _feasible_start(subproblem, lin, powers_vec, hooks, fairness):
    """Strictly interior start: back the powers off the budgets slightly and
    put the objective variable below both rate bounds."""
    backed = powers_vec * (1.0 - 1e-3)
    powers = hooks.to_powers(backed)
    lb1, lb2 = lin.lower_bounds(powers)
    target = min(lb1, fairness * lb2)
    w = np.log(backed)
    for shrink in range(40):
        if target > 0.0:
            v0 = np.concatenate([w, [math.log(0.5 * target)]])
            if subproblem.is_strictly_feasible(v0):
                return v0
        target = target * 0.5 if target > 0.0 else 1e-12
    raise SubproblemError("could not construct a strictly feasible start")


def _run_sca(hooks: _SchemeHooks, gamma1, gamma2, fairness, options: ScaOptions,
             init=None) -> tuple[SlotPowers | SplitPowers, ScaTrace]:
    fairness = check_fairness(fairness)
    if not (np.isfinite(gamma1) and gamma1 > 0 and np.isfinite(gamma2) and gamma2 > 0):
        raise ValueError("channel SNRs must be strictly positive")
    if init is None:
        vec = hooks.default_init.copy()
        vec = np.maximum(vec, options.power_floor)
    else:
        vec = np.asarray(init, dtype=float).copy()
        if vec.shape != (hooks.n_powers,):
            raise ValueError(f"init must have {hooks.n_powers} entries")
        vec = np.maximum(vec, 1e-12)

    powers = hooks.to_powers(vec)
    pair = hooks.rates(gamma1, gamma2, powers)
    eta = float(min(pair.r1, fairness * pair.r2))
    trace = ScaTrace(iterations=[
        ScaIteration(powers, eta, float(pair.r1), float(pair.r2), 0)])

    prev_vec = vec
    for iteration in range(1, options.sca_max_iter + 1):
        current = vec
        for attempt in range(options.damping_max + 1):
            try:
                lin = hooks.linearize(hooks.to_powers(current), gamma1, gamma2)
                subproblem = build_subproblem(lin, fairness)
                break
            except LinearizationInfeasible as exc:
                if attempt == options.damping_max:
                    raise ScaError(iteration, f"damping exhausted: {exc}") from exc
                current = 0.5 * (current + prev_vec)
        try:
            v0 = _feasible_start(subproblem, lin, current, hooks, fairness)
            v, stats = solve_subproblem(
                subproblem, v0,
                barrier_mu0=options.barrier_mu0,
                newton_tol=options.newton_tol,
                gap_tol=options.barrier_gap)
        except SubproblemError as exc:
            raise ScaError(iteration, str(exc)) from exc

        new_vec = np.exp(v[:hooks.n_powers])
        new_eta = float(math.exp(v[-1]))
        new_powers = hooks.to_powers(new_vec)
        pair = hooks.rates(gamma1, gamma2, new_powers)
        last = trace.final
        if new_eta < eta or min(pair.r1, fairness * pair.r2) < min(last.r1, fairness * last.r2):
            # Only solver tolerance can produce a decrease; treat as converged.
            trace.converged = True
            trace.message = "objective stalled at solver tolerance"
            break
        trace.iterations.append(ScaIteration(
            new_powers, new_eta, float(pair.r1), float(pair.r2),
            stats.newton_iters))
        improvement = new_eta - eta
        prev_vec, vec, eta = current, new_vec, new_eta
        if improvement < options.sca_tol:
            trace.converged = True
            break

    return trace.final.powers, trace


def optimize_cnoma(gamma1, gamma2, fairness: float = 1.0,
                   options: ScaOptions | None = None,
                   init=None) -> tuple[SlotPowers, ScaTrace]:
    """Max-min C-NOMA power allocation via iterated geometric programs."""
    return _run_sca(_CNOMA_HOOKS, gamma1, gamma2, fairness,
                    options or ScaOptions(), init)


def optimize_coma(gamma1, gamma2, fairness: float = 1.0,
                  options: ScaOptions | None = None,
                  init=None) -> tuple[SlotPowers, ScaTrace]:
    """Max-min C-OMA power allocation with the same machinery (its rate
    terms have the identical 1/a + 1/b shape)."""
    return _run_sca(_COMA_HOOKS, gamma1, gamma2, fairness,
                    options or ScaOptions(), init)


def collapse_to_split(powers: SlotPowers, split_tail: float) -> np.ndarray:
    """Slot powers extended with a near-degenerate split, as an init vector."""
    head = 1.0 - split_tail
    return np.array([powers.p1_1, powers.p1_2, powers.p2_1, powers.p2_2,
                     head, split_tail, head, split_tail])


def optimize_crsma(gamma1, gamma2, fairness: float = 1.0,
                   options: ScaOptions | None = None,
                   init=None) -> tuple[SplitPowers, ScaTrace]:
    """Max-min C-RSMA power allocation.

    With the default `init=None`, the loop is run both from the standard
    start [1, 1, 0.5, 0.5] and from the collapse of the C-NOMA optimum (a
    near-degenerate split), and the better run is returned.  The second start
    makes the C-RSMA objective dominate the C-NOMA one structurally instead
    of relying on the basin of the standard start.
    """
    options = options or ScaOptions()
    if init is not None:
        return _run_sca(_CRSMA_HOOKS, gamma1, gamma2, fairness, options, init)

    powers_a, trace_a = _run_sca(_CRSMA_HOOKS, gamma1, gamma2, fairness, options)
    cnoma_powers, _ = optimize_cnoma(gamma1, gamma2, fairness, options)
    tail = float(np.clip(1e-7 / (gamma1 + gamma2), 1e-12, 1e-8))
    warm = collapse_to_split(cnoma_powers, tail)
    powers_b, trace_b = _run_sca(_CRSMA_HOOKS, gamma1, gamma2, fairness,
                                 options, init=warm)
    if trace_b.objective(fairness) > trace_a.objective(fairness):
        return powers_b, trace_b
    return powers_a, trace_a
