"""Hamiltonian matrices for harmonic, anharmonic and supersymmetric oscillators.

Units are hbar = omega = m = 1.  The anharmonic builders append only the
perturbation (``-alpha X^3`` or ``+beta X^4``) to the harmonic core, so zero
coupling reproduces the harmonic oscillator exactly.
"""

from dataclasses import dataclass, field
import math

import numpy as np

from . import operators as ops
from .errors import DomainError

KINDS = (
    "harmonic_xp",
    "harmonic_ladder",
    "harmonic_corrected",
    "anharmonic_cubic",
    "anharmonic_quartic",
    "general_potential",
    "susy_musin",
)
BASES = ("position", "energy")


def _hermitize(h):
    h = (h + h.conj().T) / 2
    h = np.ascontiguousarray(h, dtype=np.complex128)
    h.setflags(write=False)
    return h


def _check_oscillator_n(n):
    if int(n) != n or n < 2:
        raise DomainError(f"oscillator dimension must be an integer >= 2, got {n!r}")
    return int(n)


def _check_finite(**couplings):
    for name, value in couplings.items():
        if not math.isfinite(value):
            raise DomainError(f"{name} must be finite, got {value!r}")


def build_harmonic_xp(basis, n):
    """``P^2/2 + X^2/2`` with the chosen basis's X and P."""
    n = _check_oscillator_n(n)
    x, p = ops.position_momentum(basis, n)
    return _hermitize(p @ p / 2 + x @ x / 2)


def ladder_operators(basis, n):
    """``(A, A^H)`` for the basis: the truncated matrix in the energy basis,
    ``(X + iP)/sqrt 2`` from position-basis X, P otherwise."""
    if basis == "energy":
        a = ops.annihilation_energy(n)
        return a, a.conj().T
    return ops.ladder_from_xp(*ops.position_momentum(basis, n))


def build_harmonic_ladder(basis, n):
    """``A^H A + I/2``."""
    n = _check_oscillator_n(n)
    a, ad = ladder_operators(basis, n)
    return _hermitize(ad @ a + np.eye(n) / 2)


def build_harmonic_corrected(basis, n):
    """``(X^2 + P^2 - Itilde + I)/2`` where Itilde is the traceless identity.

    In the energy basis this equals ``A^H A + I/2``.
    """
    n = _check_oscillator_n(n)
    x, p = ops.position_momentum(basis, n)
    return _hermitize((x @ x + p @ p - ops.traceless_identity(n) + np.eye(n)) / 2)


def build_anharmonic(basis, n, kind, coupling):
    """Harmonic core plus ``-coupling X^3`` (cubic) or ``+coupling X^4`` (quartic).

    The core is ``A^H A + I/2`` in the energy basis and ``P^2/2 + X^2/2`` in
    the position basis.
    """
    n = _check_oscillator_n(n)
    _check_finite(coupling=coupling)
    if basis == "energy":
        core = build_harmonic_ladder(basis, n)
    else:
        core = build_harmonic_xp(basis, n)
    x, _ = ops.position_momentum(basis, n)
    x2 = x @ x
    if kind == "cubic":
        return _hermitize(core - coupling * (x2 @ x))
    if kind == "quartic":
        return _hermitize(core + coupling * (x2 @ x2))
    raise DomainError(f"anharmonic kind must be 'cubic' or 'quartic', got {kind!r}")


def build_general(basis, n, potential_coeffs):
    """``P^2/2 + sum_k c_k X^k``; ``potential_coeffs`` lists ``c_0, c_1, ...``."""
    n = _check_oscillator_n(n)
    coeffs = [float(c) for c in potential_coeffs]
    if not coeffs:
        raise DomainError("potential_coeffs must be non-empty")
    _check_finite(**{f"c_{k}": c for k, c in enumerate(coeffs)})
    x, p = ops.position_momentum(basis, n)
    h = p @ p / 2
    power = np.eye(n, dtype=complex)
    for c in coeffs:
        h = h + c * power
        power = power @ x
    return _hermitize(h)


def build_susy_musin(n_b, g, omega0):
    """Boson (x) fermion anharmonic SUSY oscillator of dimension ``2 n_b``.

    ``omega0 (A^H A + I/2) + (2 omega0 g X^3 + g^2 X^4 + (omega0 I + 2 g X)[C^H, C]) / 2``
    with energy-basis bosonic operators extended by ``(x) I_2`` and fermionic
    operators by ``I_B (x)``.
    """
    n_b = _check_oscillator_n(n_b)
    _check_finite(g=g, omega0=omega0)
    if omega0 <= 0:
        raise DomainError(f"omega0 must be positive, got {omega0!r}")
    a = ops.annihilation_energy(n_b)
    x, _ = ops.xp_from_ladder(a)
    c, cd = ops.fermionic_ladder()
    at = ops.extend_bosonic(a, 2)
    xt = ops.extend_bosonic(x, 2)
    fcomm = ops.extend_fermionic(n_b, ops.commutator(cd, c))
    eye = np.eye(2 * n_b)
    x2 = xt @ xt
    h = omega0 * (at.conj().T @ at + eye / 2) + 0.5 * (
        2 * omega0 * g * (x2 @ xt) + g**2 * (x2 @ x2) + (omega0 * eye + 2 * g * xt) @ fcomm
    )
    return _hermitize(h)


@dataclass(frozen=True)
class HamiltonianSpec:
    """Selects one Hamiltonian; unused couplings must stay zero."""

    kind: str
    n: int
    basis: str = "energy"
    alpha: float = 0.0
    beta: float = 0.0
    g: float = 0.0
    omega0: float = 1.0
    potential_coeffs: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown Hamiltonian kind {self.kind!r}")
        if self.basis not in BASES:
            raise DomainError(f"unknown basis {self.basis!r}")
        _check_oscillator_n(self.n)
        used = {
            "anharmonic_cubic": {"alpha"},
            "anharmonic_quartic": {"beta"},
            "susy_musin": {"g"},
        }.get(self.kind, set())
        for name in ("alpha", "beta", "g"):
            if name not in used and getattr(self, name) != 0:
                raise DomainError(f"{name} is not used by kind {self.kind!r} and must be 0")
        if self.kind != "general_potential" and self.potential_coeffs:
            raise DomainError("potential_coeffs only apply to kind 'general_potential'")
        if self.kind == "general_potential" and not self.potential_coeffs:
            raise DomainError("general_potential needs potential_coeffs")
        if self.kind != "susy_musin" and self.omega0 != 1.0:
            raise DomainError("omega0 only applies to kind 'susy_musin'")

    @property
    def dim(self):
        return 2 * self.n if self.kind == "susy_musin" else self.n

    def build(self):
        k = self.kind
        if k == "harmonic_xp":
            return build_harmonic_xp(self.basis, self.n)
        if k == "harmonic_ladder":
            return build_harmonic_ladder(self.basis, self.n)
        if k == "harmonic_corrected":
            return build_harmonic_corrected(self.basis, self.n)
        if k == "anharmonic_cubic":
            return build_anharmonic(self.basis, self.n, "cubic", self.alpha)
        if k == "anharmonic_quartic":
            return build_anharmonic(self.basis, self.n, "quartic", self.beta)
        if k == "general_potential":
            return build_general(self.basis, self.n, self.potential_coeffs)
        return build_susy_musin(self.n, self.g, self.omega0)
