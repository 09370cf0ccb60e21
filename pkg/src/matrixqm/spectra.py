"""Eigendecomposition, closed-form reference energies and spectrum comparison."""

from dataclasses import dataclass
import math

import numpy as np

from . import operators as ops
from .errors import ConvergenceError, DomainError, NotHermitianError

REFERENCE_MODELS = ("exact_ho", "heisenberg_cubic", "heisenberg_quartic", "musin_susy")

# Heisenberg's energies are quoted for V = m w^2 x^2/2 + lam x^3/3 and + lam x^4/4
# (force lam x^2, lam x^3); the matrix couplings multiply x^3 and x^4 directly.
CUBIC_LAMBDA_PER_ALPHA = 3.0
QUARTIC_LAMBDA_PER_BETA = 4.0

REL_ERROR_FLOOR = 1e-12


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues with eigenvectors stored as columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self):
        return len(self.eigenvalues)

    def vector(self, k):
        """Eigenvector ``k`` with its largest-magnitude component made real and nonnegative."""
        v = self.eigenvectors[:, k]
        j = int(np.argmax(np.abs(v)))
        if abs(v[j]) == 0:
            return v.copy()
        return v * (abs(v[j]) / v[j])


def eigendecompose(h, tol=ops.HERMITIAN_RTOL):
    """Dense Hermitian eigendecomposition via LAPACK.

    Rejects input whose asymmetry exceeds ``tol * (1 + max|H|)``.  Eigenvalues
    are ascending; ties keep the solver's order.
    """
    h = ops.check_square(h, "Hamiltonian")
    if h.shape[0] < 1:
        raise DomainError("cannot diagonalize an empty matrix")
    if not np.all(np.isfinite(h)):
        raise DomainError("matrix has non-finite entries")
    asym = ops.hermitian_asymmetry(h)
    limit = ops.hermitian_tolerance(h, tol)
    if asym > limit:
        raise NotHermitianError(asym, limit)
    try:
        w, v = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"eigensolver did not converge: {exc}", None) from exc
    order = np.argsort(w, kind="stable")
    w = np.ascontiguousarray(w[order])
    v = np.ascontiguousarray(v[:, order].astype(np.complex128))
    w.setflags(write=False)
    v.setflags(write=False)
    return Spectrum(w, v)


def exact_ho_energy(k):
    if k < 0:
        raise DomainError(f"level must be nonnegative, got {k}")
    return k + 0.5


def _check_constants(m, omega0, hbar):
    if not (m > 0 and omega0 > 0 and hbar > 0):
        raise DomainError(f"m, omega0, hbar must be positive, got {m}, {omega0}, {hbar}")


def heisenberg_cubic_energy(k, lam, m=1.0, omega0=1.0, hbar=1.0):
    _check_constants(m, omega0, hbar)
    return hbar * omega0 * (k + 0.5) - (5 * lam**2 * hbar**2 / (12 * m * omega0**4)) * (
        k * k + k + 11 / 30
    )


def heisenberg_quartic_energy(k, lam, m=1.0, omega0=1.0, hbar=1.0):
    _check_constants(m, omega0, hbar)
    first = (3 * lam * hbar**2 / (8 * m * omega0**2)) * (k * k + k + 0.5)
    second = (lam**2 * hbar**2 / (64 * m**2 * omega0**5)) * (
        17 * k**3 + 51 / 2 * k**2 + 59 / 2 * k + 21 / 2
    )
    return hbar * omega0 * (k + 0.5) + first - second


def musin_susy_energy(n_b, n_f, g, omega0=1.0, hbar=1.0):
    """Perturbative SUSY oscillator level with the g -> g^2 correction applied."""
    if n_f not in (0, 1):
        raise DomainError(f"fermion number must be 0 or 1, got {n_f!r}")
    if n_b < 0:
        raise DomainError(f"boson number must be nonnegative, got {n_b!r}")
    _check_constants(1.0, omega0, hbar)
    pert = hbar**2 / (4 * omega0**2) * g**2
    return (
        hbar * omega0 * (n_b + n_f)
        + 3 * pert * (n_b * n_b + n_b + 0.5)
        - 15 * pert * (n_b * n_b + n_b + 11 / 30)
    )


@dataclass(frozen=True)
class ReferenceCurve:
    """A closed-form level formula evaluated at indices ``0, 1, 2, ...``.

    ``coupling`` is Heisenberg's lambda for the anharmonic models and Musin's
    g for the SUSY model.  :meth:`from_matrix_coupling` converts the matrix
    couplings alpha and beta into lambda.
    """

    model: str
    coupling: float = 0.0
    m: float = 1.0
    omega0: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        if self.model not in REFERENCE_MODELS:
            raise DomainError(f"unknown reference model {self.model!r}")
        _check_constants(self.m, self.omega0, self.hbar)

    @classmethod
    def from_matrix_coupling(cls, model, coupling, **constants):
        factor = {
            "heisenberg_cubic": CUBIC_LAMBDA_PER_ALPHA,
            "heisenberg_quartic": QUARTIC_LAMBDA_PER_BETA,
        }.get(model, 1.0)
        return cls(model, factor * coupling, **constants)

    def level(self, index):
        c = (self.m, self.omega0, self.hbar)
        if self.model == "exact_ho":
            return self.hbar * self.omega0 * exact_ho_energy(index)
        if self.model == "heisenberg_cubic":
            return heisenberg_cubic_energy(index, self.coupling, *c)
        if self.model == "heisenberg_quartic":
            return heisenberg_quartic_energy(index, self.coupling, *c)
        # boson number outer, fermion number inner: (0,0), (0,1), (1,0), (1,1), ...
        n_b, n_f = divmod(index, 2)
        return musin_susy_energy(n_b, n_f, self.coupling, self.omega0, self.hbar)

    def levels(self, count):
        return np.array([self.level(i) for i in range(count)])


def relative_error(computed, reference):
    return abs(computed - reference) / max(abs(reference), REL_ERROR_FLOOR)


@dataclass(frozen=True)
class ComparisonReport:
    rows: tuple  # (index, computed, reference, relative_error)
    threshold: float

    @property
    def relative_errors(self):
        return np.array([r[3] for r in self.rows])

    @property
    def max_relative_error(self):
        return float(self.relative_errors.max())

    @property
    def fraction_within(self):
        return float(np.mean(self.relative_errors < self.threshold))


def compare_spectrum(spectrum, reference, count, threshold):
    """Compare the lowest ``count`` eigenvalues with a reference curve."""
    if not 1 <= count <= spectrum.dim:
        raise DomainError(f"count must lie in [1, {spectrum.dim}], got {count}")
    rows = []
    for i in range(count):
        got = float(spectrum.eigenvalues[i])
        want = float(reference.level(i))
        rows.append((i, got, want, relative_error(got, want)))
    return ComparisonReport(tuple(rows), threshold)


def wavefunction_density(spectrum, k, n=None):
    """Site coordinates and probability density of eigenvector ``k``.

    Returns an ``(n, 2)`` array of ``(x, |v_k[j]|^2)`` rows where
    ``x = sqrt(2 pi / n) ell(j)``.
    """
    n = spectrum.dim if n is None else n
    if n != spectrum.dim:
        raise DomainError(f"lattice size {n} does not match spectrum dimension {spectrum.dim}")
    if not 0 <= k < spectrum.dim:
        raise DomainError(f"state index must lie in [0, {spectrum.dim}), got {k}")
    x = math.sqrt(2 * math.pi / n) * ops.lattice_points(n)
    density = np.abs(spectrum.vector(k)) ** 2
    return np.column_stack([x, density])


def degenerate_pairs(eigenvalues, atol):
    """Index pairs ``(i, i+1)`` of adjacent eigenvalues closer than ``atol``."""
    w = np.asarray(eigenvalues)
    return [(i, i + 1) for i in range(len(w) - 1) if w[i + 1] - w[i] < atol]
