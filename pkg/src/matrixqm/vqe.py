"""Variational quantum eigensolver on the exact statevector simulator."""

from dataclasses import dataclass, field
import time

import numpy as np

from .errors import ConfigurationError, DomainError
from .optimizers import nelder_mead_minimize, spsa_minimize
from .pauli import pauli_expectation, reconstruct
from .qsim import AnsatzSpec, hardware_efficient_ansatz, run_circuit
from .spectra import eigendecompose, relative_error

OPTIMIZERS = ("nelder_mead", "spsa")
INITIAL_PARAMS = ("zeros", "seeded_uniform")


@dataclass(frozen=True)
class VqeConfig:
    """Settings for one VQE run.

    The loop stops after ``max_iterations`` optimizer iterations, when the
    optimizer's own convergence test fires, or when the best energy improved
    by less than ``energy_tolerance`` over the last ``window`` iterations.
    ``initial_params="seeded_uniform"`` draws angles uniformly from
    ``(-pi, pi)`` with ``numpy.random.default_rng(seed)``.
    """

    ansatz: AnsatzSpec
    optimizer: str = "nelder_mead"
    max_iterations: int = 500
    energy_tolerance: float = 1e-8
    seed: int = 0
    initial_params: str = "seeded_uniform"
    window: int = 50
    optimizer_options: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.optimizer not in OPTIMIZERS:
            raise ConfigurationError(f"unknown optimizer {self.optimizer!r}")
        if self.initial_params not in INITIAL_PARAMS:
            raise ConfigurationError(f"unknown initial_params {self.initial_params!r}")
        if self.max_iterations < 1:
            raise ConfigurationError("max_iterations must be >= 1")
        if not self.energy_tolerance > 0:
            raise ConfigurationError("energy_tolerance must be positive")
        if self.window < 1:
            raise ConfigurationError("window must be >= 1")
        if self.seed < 0:
            raise ConfigurationError("seed must be an unsigned integer")


@dataclass(frozen=True)
class VqeResult:
    best_energy: float
    best_params: np.ndarray
    trace: list
    evaluations: int
    converged: bool
    exact_ground: float
    relative_error: float
    wall_seconds: float
    stop_reason: str = ""

    @property
    def iterations(self):
        return len(self.trace)


def initial_parameters(config):
    n = config.ansatz.num_params
    if config.initial_params == "zeros":
        return np.zeros(n)
    rng = np.random.default_rng(config.seed)
    return rng.uniform(-np.pi, np.pi, size=n)


def make_objective(hamiltonian, circuit):
    def energy(theta):
        return pauli_expectation(hamiltonian, run_circuit(circuit, theta))

    return energy


def vqe_run(hamiltonian, config):
    """Minimize ``<psi(theta)|H|psi(theta)>`` over the ansatz parameters."""
    if hamiltonian.q != config.ansatz.q:
        raise DomainError(
            f"Hamiltonian acts on {hamiltonian.q} qubits, ansatz on {config.ansatz.q}"
        )
    start = time.perf_counter()
    circuit = hardware_efficient_ansatz(config.ansatz)
    objective = make_objective(hamiltonian, circuit)
    x0 = initial_parameters(config)

    history = []

    def plateau(iteration, x_best, f_best):
        history.append(f_best)
        w = config.window
        return len(history) > w and history[-1 - w] - history[-1] < config.energy_tolerance

    opts = dict(config.optimizer_options)
    if config.optimizer == "nelder_mead":
        res = nelder_mead_minimize(
            objective,
            x0,
            max_iterations=config.max_iterations,
            ftol=config.energy_tolerance,
            callback=plateau,
            **opts,
        )
    else:
        res = spsa_minimize(
            objective,
            x0,
            seed=config.seed,
            max_iterations=config.max_iterations,
            callback=plateau,
            **opts,
        )

    exact = float(eigendecompose(reconstruct(hamiltonian)).eigenvalues[0])
    best = min(e for _, e in res.trace)
    return VqeResult(
        best_energy=best,
        best_params=np.asarray(res.x_best),
        trace=list(res.trace),
        evaluations=res.nfev,
        converged=res.converged,
        exact_ground=exact,
        relative_error=relative_error(best, exact),
        wall_seconds=time.perf_counter() - start,
        stop_reason=res.stop_reason,
    )
