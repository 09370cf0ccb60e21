"""Matrix quantum mechanics on a lattice, Pauli decomposition and VQE."""

from .errors import (
    ConfigurationError,
    ConvergenceError,
    DomainError,
    FileFormatError,
    NonFiniteObjectiveError,
    NotHermitianError,
)
from .hamiltonians import (
    HamiltonianSpec,
    build_anharmonic,
    build_general,
    build_harmonic_corrected,
    build_harmonic_ladder,
    build_harmonic_xp,
    build_susy_musin,
)
from .operators import (
    annihilation_energy,
    extend_bosonic,
    extend_fermionic,
    fermionic_ladder,
    fourier_matrix,
    ladder_from_xp,
    lattice_index,
    momentum_operator_pos,
    position_operator_pos,
    traceless_identity,
    xp_from_ladder,
)
from .pauli import PauliSum, PauliTerm, decompose, pauli_expectation, reconstruct
from .qsim import AnsatzSpec, Circuit, Gate, QuantumState, apply_gate, hardware_efficient_ansatz, run_circuit, zero_state
from .spectra import (
    ReferenceCurve,
    Spectrum,
    compare_spectrum,
    eigendecompose,
    exact_ho_energy,
    heisenberg_cubic_energy,
    heisenberg_quartic_energy,
    musin_susy_energy,
    wavefunction_density,
)
from .vqe import VqeConfig, VqeResult, vqe_run

__version__ = "0.1.0"
