"""Gradient-free minimizers used by the VQE loop.

Both record one ``(iteration, energy)`` trace entry per iteration and accept a
``callback(iteration, x_best, f_best)`` that may return True to stop early.
"""

import math
from typing import Callable, NamedTuple, Optional

import numpy as np

from .errors import ConfigurationError, NonFiniteObjectiveError


class MinimizeResult(NamedTuple):
    x_best: np.ndarray
    f_best: float
    trace: list
    nfev: int
    stop_reason: str  # "xtol", "ftol", "callback", "maxiter"

    @property
    def converged(self):
        return self.stop_reason != "maxiter"


def _checked(objective):
    count = [0]

    def f(x):
        count[0] += 1
        value = float(objective(x))
        if not math.isfinite(value):
            raise NonFiniteObjectiveError(value, np.array(x, dtype=float))
        return value

    return f, count


def nelder_mead_minimize(
    objective: Callable[[np.ndarray], float],
    x0,
    max_iterations: int = 500,
    ftol: float = 1e-8,
    xtol: float = 1e-8,
    initial_step: float = 0.5,
    callback: Optional[Callable] = None,
) -> MinimizeResult:
    """Nelder-Mead simplex with reflection 1, expansion 2, contraction 0.5, shrink 0.5.

    The initial simplex is ``x0`` plus ``initial_step`` along each axis.  Stops
    when the simplex diameter (max-norm distance to the best vertex) drops
    below ``xtol``, the spread of vertex values below ``ftol``, the callback
    asks to stop, or after ``max_iterations`` iterations.
    """
    if max_iterations < 1:
        raise ConfigurationError("max_iterations must be >= 1")
    if initial_step == 0:
        raise ConfigurationError("initial_step must be nonzero")
    f, nfev = _checked(objective)
    x0 = np.asarray(x0, dtype=float).reshape(-1)
    dim = x0.size
    simplex = np.vstack([x0] + [x0 + initial_step * e for e in np.eye(dim)])
    values = np.array([f(v) for v in simplex])
    trace = []
    reason = "maxiter"

    for it in range(1, max_iterations + 1):
        order = np.argsort(values, kind="stable")
        simplex, values = simplex[order], values[order]
        centroid = simplex[:-1].mean(axis=0)
        worst = simplex[-1]

        xr = centroid + (centroid - worst)
        fr = f(xr)
        if fr < values[0]:
            xe = centroid + 2.0 * (centroid - worst)
            fe = f(xe)
            if fe < fr:
                simplex[-1], values[-1] = xe, fe
            else:
                simplex[-1], values[-1] = xr, fr
        elif fr < values[-2]:
            simplex[-1], values[-1] = xr, fr
        else:
            if fr < values[-1]:
                xc = centroid + 0.5 * (xr - centroid)
                fc = f(xc)
                accept = fc <= fr
            else:
                xc = centroid + 0.5 * (worst - centroid)
                fc = f(xc)
                accept = fc < values[-1]
            if accept:
                simplex[-1], values[-1] = xc, fc
            else:
                best = simplex[0]
                for i in range(1, dim + 1):
                    simplex[i] = best + 0.5 * (simplex[i] - best)
                    values[i] = f(simplex[i])

        order = np.argsort(values, kind="stable")
        simplex, values = simplex[order], values[order]
        trace.append((it, float(values[0])))

        if dim == 0 or np.max(np.abs(simplex[1:] - simplex[0])) < xtol:
            reason = "xtol"
        elif values[-1] - values[0] < ftol:
            reason = "ftol"
        elif callback is not None and callback(it, simplex[0], float(values[0])):
            reason = "callback"
        else:
            continue
        break

    return MinimizeResult(simplex[0].copy(), float(values[0]), trace, nfev[0], reason)


def spsa_minimize(
    objective: Callable[[np.ndarray], float],
    x0,
    seed: int,
    max_iterations: int = 200,
    a: float = 0.2,
    c: float = 0.1,
    A: Optional[float] = None,
    alpha: float = 0.602,
    gamma: float = 0.101,
    callback: Optional[Callable] = None,
) -> MinimizeResult:
    """Simultaneous-perturbation stochastic approximation.

    Gains are ``a_k = a / (k + 1 + A)^alpha`` and ``c_k = c / (k + 1)^gamma``
    with ``A`` defaulting to ``max_iterations / 10``.  Perturbations are
    Rademacher vectors drawn from ``numpy.random.default_rng(seed)``.  Each
    iteration evaluates the objective at the updated point for the trace.
    """
    if max_iterations < 1:
        raise ConfigurationError("max_iterations must be >= 1")
    if not c > 0:
        raise ConfigurationError(f"perturbation scale c must be positive, got {c!r}")
    if not a > 0:
        raise ConfigurationError(f"step scale a must be positive, got {a!r}")
    if seed is None:
        raise ConfigurationError("spsa needs an explicit seed")
    A = max_iterations / 10 if A is None else A
    rng = np.random.default_rng(seed)
    f, nfev = _checked(objective)
    x = np.asarray(x0, dtype=float).reshape(-1).copy()
    f(x)  # reject a non-finite starting point before iterating
    x_best, f_best = x.copy(), math.inf
    trace = []
    reason = "maxiter"
    for k in range(max_iterations):
        ak = a / (k + 1 + A) ** alpha
        ck = c / (k + 1) ** gamma
        delta = rng.choice((-1.0, 1.0), size=x.size)
        grad = (f(x + ck * delta) - f(x - ck * delta)) / (2 * ck) * delta
        x = x - ak * grad
        fx = f(x)
        if fx < f_best:
            x_best, f_best = x.copy(), fx
        trace.append((k + 1, fx))
        if callback is not None and callback(k + 1, x_best, f_best):
            reason = "callback"
            break
    return MinimizeResult(x_best, float(f_best), trace, nfev[0], reason)
