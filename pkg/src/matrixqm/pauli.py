"""Pauli-string decomposition of Hermitian ``2^q x 2^q`` matrices.

Label convention: the leftmost letter acts on qubit 0, the slowest Kronecker
factor, i.e. the most significant bit of a basis-state index.

Every Pauli string factors as ``i^{#Y} X^x Z^z`` for bit masks ``x`` (letters
X or Y) and ``z`` (letters Z or Y), so ``Tr(P H) = i^{#Y} sum_j (-1)^{z.j}
H[j, j^x]``.  :func:`decompose` evaluates all ``4^q`` traces with one
Walsh-Hadamard transform per ``x`` mask instead of forming the strings.
"""

from dataclasses import dataclass
from itertools import product

import numpy as np
from scipy.linalg import hadamard

from . import operators as ops
from .errors import DomainError, NotHermitianError

PAULI_LETTERS = "IXYZ"
PAULI_MATRICES = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}
DEFAULT_THRESHOLD = 1e-12
IMAG_RTOL = 1e-10


@dataclass(frozen=True)
class PauliTerm:
    label: str
    coefficient: float


@dataclass(frozen=True)
class PauliSum:
    q: int
    terms: tuple
    threshold: float = DEFAULT_THRESHOLD

    def __post_init__(self):
        if self.q < 1:
            raise DomainError(f"qubit count must be >= 1, got {self.q}")
        labels = [t.label for t in self.terms]
        if len(set(labels)) != len(labels):
            raise DomainError("Pauli labels must be distinct")
        for t in self.terms:
            if len(t.label) != self.q or set(t.label) - set(PAULI_LETTERS):
                raise DomainError(f"bad Pauli label {t.label!r} for {self.q} qubits")

    @classmethod
    def from_dict(cls, coefficients, threshold=DEFAULT_THRESHOLD):
        """Build from ``{label: coefficient}``, sorted by label, dropping small terms."""
        if not coefficients:
            raise DomainError("cannot infer qubit count from an empty mapping")
        q = len(next(iter(coefficients)))
        terms = tuple(
            PauliTerm(label, float(c))
            for label, c in sorted(coefficients.items(), key=lambda kv: label_key(kv[0]))
            if abs(c) > threshold
        )
        return cls(q, terms, threshold)

    def as_dict(self):
        return {t.label: t.coefficient for t in self.terms}

    def __len__(self):
        return len(self.terms)


def label_key(label):
    """Sort key for lexicographic order over ``I < X < Y < Z``."""
    return tuple(PAULI_LETTERS.index(c) for c in label)


def all_labels(q):
    return ["".join(p) for p in product(PAULI_LETTERS, repeat=q)]


def qubit_count(dim):
    """``q`` with ``dim == 2**q`` and ``q >= 1``; raises otherwise."""
    q = int(dim).bit_length() - 1
    if dim < 2 or 1 << q != dim:
        raise DomainError(f"matrix dimension {dim} is not a power of two >= 2")
    return q


def _masks(label):
    q = len(label)
    x = z = 0
    for k, c in enumerate(label):
        bit = 1 << (q - 1 - k)
        if c in "XY":
            x |= bit
        if c in "ZY":
            z |= bit
    return x, z, label.count("Y")


def pauli_matrix(label):
    """Dense matrix of a Pauli string via Kronecker products."""
    m = np.ones((1, 1), dtype=complex)
    for c in label:
        m = np.kron(m, PAULI_MATRICES[c])
    return m


def pauli_traces(h):
    """``Tr(P h)`` for every label, as a complex ``(2^q, 2^q)`` array indexed ``[x, z]``."""
    h = np.asarray(h, dtype=complex)
    dim = h.shape[0]
    j = np.arange(dim)
    # v[x, j] = h[j, j ^ x]
    v = h[j[None, :], j[None, :] ^ j[:, None]]
    return v @ hadamard(dim)


def decompose(h, threshold=DEFAULT_THRESHOLD):
    """Real Pauli coefficients ``Tr(P h) / 2^q`` of a Hermitian matrix."""
    h = ops.check_square(h, "Hamiltonian")
    q = qubit_count(h.shape[0])
    limit = ops.hermitian_tolerance(h)
    asym = ops.hermitian_asymmetry(h)
    if asym > limit:
        raise NotHermitianError(asym, limit)
    dim = 1 << q
    traces = pauli_traces(h) / dim
    imag_limit = IMAG_RTOL * (1 + float(np.max(np.abs(h))))
    coefficients = {}
    for label in all_labels(q):
        x, z, ny = _masks(label)
        c = traces[x, z] * 1j**ny
        if abs(c.imag) > imag_limit:
            raise DomainError(
                f"coefficient of {label} has imaginary part {c.imag:.3e}; input is not Hermitian"
            )
        coefficients[label] = c.real
    terms = tuple(
        PauliTerm(label, float(c)) for label, c in coefficients.items() if abs(c) > threshold
    )
    return PauliSum(q, terms, threshold)


def decompose_dense(h, threshold=DEFAULT_THRESHOLD):
    """Reference decomposition forming each Pauli string explicitly, O(8^q)."""
    h = np.asarray(h, dtype=complex)
    q = qubit_count(h.shape[0])
    coeffs = {}
    for label in all_labels(q):
        c = np.trace(pauli_matrix(label) @ h) / (1 << q)
        coeffs[label] = c
    return coeffs


def reconstruct(psum):
    dim = 1 << psum.q
    m = np.zeros((dim, dim), dtype=complex)
    j = np.arange(dim)
    for t in psum.terms:
        x, z, ny = _masks(t.label)
        # P[j ^ x, j] = i^ny (-1)^{popcount(z & j)}
        sign = 1 - 2 * (_popcount(z & j) & 1)
        m[j ^ x, j] += t.coefficient * (1j**ny) * sign
    return m


def _popcount(a):
    a = np.asarray(a, dtype=np.int64)
    count = np.zeros_like(a)
    while np.any(a):
        count += a & 1
        a = a >> 1
    return count


def pauli_expectation(psum, state):
    """``sum_P c_P <psi|P|psi>`` computed term by term with index arithmetic."""
    psi = np.asarray(getattr(state, "amplitudes", state), dtype=complex)
    dim = psi.shape[0]
    if dim != 1 << psum.q:
        raise DomainError(
            f"state has {dim} amplitudes but the Pauli sum acts on {psum.q} qubits"
        )
    j = np.arange(dim)
    total = 0.0
    for t in psum.terms:
        x, z, ny = _masks(t.label)
        sign = 1 - 2 * (_popcount(z & j) & 1)
        val = (1j**ny) * np.vdot(psi[j ^ x], sign * psi)
        total += t.coefficient * val.real
    return float(total)
