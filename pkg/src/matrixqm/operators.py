"""Finite-dimensional operator algebra on an n-site lattice.

Position-basis operators are built from the centred lattice
``ell(a) = (2a - 1 - n) / 2`` and a discrete Fourier matrix; energy-basis
operators start from the truncated lowering matrix.  Matrices are returned
as read-only complex ``ndarray`` objects.

Indices in docstrings are 1-based to match the lattice formulas; arrays are
ordinary 0-based numpy arrays.
"""

from fractions import Fraction

import numpy as np

from .errors import DomainError

HERMITIAN_RTOL = 1e-12


def _frozen(m):
    m = np.ascontiguousarray(m, dtype=np.complex128)
    m.setflags(write=False)
    return m


def _check_n(n):
    if int(n) != n or n < 1:
        raise DomainError(f"lattice size must be a positive integer, got {n!r}")
    return int(n)


def hermitian_asymmetry(m):
    """Return ``max|M - M^H|``."""
    m = np.asarray(m)
    return float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0


def hermitian_tolerance(m, rtol=HERMITIAN_RTOL):
    m = np.asarray(m)
    scale = float(np.max(np.abs(m))) if m.size else 0.0
    return rtol * (1.0 + scale)


def is_hermitian(m, rtol=HERMITIAN_RTOL):
    return hermitian_asymmetry(m) <= hermitian_tolerance(m, rtol)


def check_square(m, name="matrix"):
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DomainError(f"{name} must be square, got shape {m.shape}")
    return m


def lattice_index(a, n):
    """Exact lattice coordinate ``(2a - 1 - n) / 2`` of site ``a`` in ``1..n``."""
    n = _check_n(n)
    if int(a) != a or not 1 <= a <= n:
        raise DomainError(f"site index must lie in [1, {n}], got {a!r}")
    return Fraction(2 * int(a) - 1 - n, 2)


def lattice_points(n):
    """All lattice coordinates as floats, converted from exact rationals."""
    n = _check_n(n)
    return np.array([float(lattice_index(a, n)) for a in range(1, n + 1)])


def position_operator_pos(n):
    n = _check_n(n)
    return _frozen(np.diag(np.sqrt(2 * np.pi / n) * lattice_points(n)))


def fourier_matrix(n):
    """Centred DFT matrix ``F[j, k] = exp(2 pi i ell(j) ell(k) / n) / sqrt(n)``.

    The products ``ell(j) * ell(k)`` are formed exactly and reduced modulo
    ``n`` before exponentiation, which keeps the phases accurate for large n.
    """
    n = _check_n(n)
    # 4*ell(j)*ell(k) is an integer; reduce the phase modulo 4n
    twice = np.array([2 * a - 1 - n for a in range(1, n + 1)], dtype=np.int64)
    prod = np.mod(np.outer(twice, twice), 4 * n)
    return _frozen(np.exp(2j * np.pi * prod / (4 * n)) / np.sqrt(n))


def momentum_operator_pos(n):
    """Position-basis momentum ``F^H X F``."""
    f = fourier_matrix(n)
    p = f.conj().T @ position_operator_pos(n) @ f
    # hermitize away rounding in the triple product
    return _frozen((p + p.conj().T) / 2)


def annihilation_energy(n):
    """Truncated lowering operator with superdiagonal ``sqrt(1), ..., sqrt(n-1)``."""
    n = _check_n(n)
    return _frozen(np.diag(np.sqrt(np.arange(1, n, dtype=float)), k=1))


def xp_from_ladder(a):
    """Return ``(X, P)`` with ``X = (A^H + A)/sqrt 2`` and ``P = i(A^H - A)/sqrt 2``."""
    a = check_square(a, "ladder operator")
    ad = a.conj().T
    return _frozen((ad + a) / np.sqrt(2)), _frozen(1j * (ad - a) / np.sqrt(2))


def ladder_from_xp(x, p):
    """Return ``(A, A^H)`` from position and momentum matrices."""
    x = check_square(x, "X")
    p = check_square(p, "P")
    if x.shape != p.shape:
        raise DomainError(f"X and P dimensions differ: {x.shape} vs {p.shape}")
    return _frozen((x + 1j * p) / np.sqrt(2)), _frozen((x - 1j * p) / np.sqrt(2))


def position_momentum(basis, n):
    """``(X, P)`` in the named basis (``"position"`` or ``"energy"``)."""
    if basis == "position":
        return position_operator_pos(n), momentum_operator_pos(n)
    if basis == "energy":
        return xp_from_ladder(annihilation_energy(n))
    raise DomainError(f"unknown basis {basis!r}; expected 'position' or 'energy'")


def traceless_identity(n):
    """``diag(1, ..., 1, -(n-1))``, the commutator ``[A, A^H]`` of the truncated ladder."""
    n = _check_n(n)
    d = np.ones(n)
    d[-1] = -(n - 1)
    return _frozen(np.diag(d))


def fermionic_ladder():
    """Fermionic lowering and raising matrices ``(C, C^H)`` on ``|0> = (1,0)``, ``|1> = (0,1)``."""
    c = np.array([[0, 1], [0, 0]])
    return _frozen(c), _frozen(c.T)


def extend_bosonic(op, dim_f):
    """``op (x) I_F``; the fermion index varies fastest."""
    dim_f = _check_n(dim_f)
    return _frozen(np.kron(check_square(op), np.eye(dim_f)))


def extend_fermionic(dim_b, op):
    """``I_B (x) op``."""
    dim_b = _check_n(dim_b)
    return _frozen(np.kron(np.eye(dim_b), check_square(op)))


def commutator(a, b):
    return a @ b - b @ a
