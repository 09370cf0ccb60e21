"""Exact statevector simulation of small qubit registers.

Amplitudes are stored in a length ``2^q`` array whose reshape to ``(2,)*q``
puts qubit 0 on the first (slowest) axis, matching the Pauli label order.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

NORM_ATOL = 1e-10
ROTATIONS = ("RX", "RY", "RZ")
GATE_KINDS = ROTATIONS + ("H", "X", "CNOT")

_FIXED = {
    "H": np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
}


def rotation_matrix(kind, theta):
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    if kind == "RX":
        return np.array([[c, -1j * s], [-1j * s, c]])
    if kind == "RY":
        return np.array([[c, -s], [s, c]], dtype=complex)
    if kind == "RZ":
        return np.array([[np.exp(-0.5j * theta), 0], [0, np.exp(0.5j * theta)]])
    raise DomainError(f"not a rotation gate: {kind!r}")


@dataclass(frozen=True)
class QuantumState:
    q: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amp = np.array(self.amplitudes, dtype=np.complex128)
        if amp.shape != (1 << self.q,):
            raise DomainError(f"{self.q} qubits need {1 << self.q} amplitudes, got {amp.shape}")
        norm = float(np.vdot(amp, amp).real)
        if abs(norm - 1) > NORM_ATOL:
            raise DomainError(f"state is not normalized: sum |a|^2 = {norm!r}")
        amp.setflags(write=False)
        object.__setattr__(self, "amplitudes", amp)

    @property
    def norm(self):
        return float(np.vdot(self.amplitudes, self.amplitudes).real)


def zero_state(q):
    if q < 1:
        raise DomainError(f"qubit count must be >= 1, got {q}")
    amp = np.zeros(1 << q, dtype=complex)
    amp[0] = 1
    return QuantumState(q, amp)


@dataclass(frozen=True)
class Gate:
    """One gate; ``param`` indexes the circuit parameter vector for rotations
    whose angle is bound at run time, otherwise ``theta`` is used."""

    kind: str
    target: int
    control: int = None
    theta: float = 0.0
    param: int = None

    def __post_init__(self):
        if self.kind not in GATE_KINDS:
            raise DomainError(f"unknown gate kind {self.kind!r}")
        if self.kind == "CNOT":
            if self.control is None or self.control == self.target:
                raise DomainError("CNOT needs a control distinct from its target")
        elif self.control is not None:
            raise DomainError(f"{self.kind} takes no control qubit")
        if self.param is not None and self.kind not in ROTATIONS:
            raise DomainError(f"{self.kind} has no angle to parametrize")

    def qubits(self):
        return (self.target,) if self.control is None else (self.control, self.target)

    def matrix(self, theta=None):
        if self.kind in ROTATIONS:
            return rotation_matrix(self.kind, self.theta if theta is None else theta)
        if self.kind == "CNOT":
            raise DomainError("CNOT has no single-qubit matrix")
        return _FIXED[self.kind]


def _apply_1q(amp, q, target, u):
    psi = amp.reshape((2,) * q)
    psi = np.moveaxis(np.tensordot(u, psi, axes=([1], [target])), 0, target)
    return psi.reshape(-1)


def _apply_cnot(amp, q, control, target):
    psi = amp.reshape((2,) * q).copy()
    idx = [slice(None)] * q
    idx[control] = 1
    sub = psi[tuple(idx)]
    # target axis index shifts down once the control axis is removed
    axis = target - (control < target)
    psi[tuple(idx)] = np.flip(sub, axis=axis)
    return psi.reshape(-1)


def apply_gate(state, gate, theta=None):
    """Return ``U state`` for the gate's unitary on its target (and control)."""
    q = state.q
    for k in gate.qubits():
        if not 0 <= k < q:
            raise DomainError(f"qubit index {k} out of range for {q} qubits")
    if gate.kind == "CNOT":
        amp = _apply_cnot(state.amplitudes, q, gate.control, gate.target)
    else:
        amp = _apply_1q(state.amplitudes, q, gate.target, gate.matrix(theta))
    return QuantumState(q, amp)


@dataclass(frozen=True)
class Circuit:
    q: int
    gates: tuple = field(default_factory=tuple)
    num_params: int = 0

    def __post_init__(self):
        slots = sorted(g.param for g in self.gates if g.param is not None)
        if slots != list(range(self.num_params)):
            raise DomainError(
                f"parameter slots {slots} do not bind 0..{self.num_params - 1} exactly once"
            )
        for g in self.gates:
            for k in g.qubits():
                if not 0 <= k < self.q:
                    raise DomainError(f"gate {g.kind} uses qubit {k} outside 0..{self.q - 1}")

    def count(self, kind):
        return sum(g.kind == kind for g in self.gates)


def run_circuit(circuit, params=()):
    """Apply every gate in order to ``|0...0>`` with angles bound from ``params``."""
    params = np.asarray(params, dtype=float).reshape(-1)
    if params.shape[0] != circuit.num_params:
        raise DomainError(
            f"circuit takes {circuit.num_params} parameters, got {params.shape[0]}"
        )
    state = zero_state(circuit.q)
    for g in circuit.gates:
        theta = None if g.param is None else params[g.param]
        state = apply_gate(state, g, theta)
    return state


@dataclass(frozen=True)
class AnsatzSpec:
    q: int
    depth: int = 0

    @property
    def num_params(self):
        return self.q * (self.depth + 1)


def hardware_efficient_ansatz(spec):
    """RY on every qubit, then ``depth`` rounds of a linear CNOT chain plus an RY layer.

    Parameters are numbered layer-major, qubit-minor.
    """
    if spec.q < 1 or spec.depth < 0:
        raise DomainError(f"need q >= 1 and depth >= 0, got {spec}")
    gates = []
    slot = 0
    for layer in range(spec.depth + 1):
        if layer:
            gates.extend(Gate("CNOT", k + 1, control=k) for k in range(spec.q - 1))
        for k in range(spec.q):
            gates.append(Gate("RY", k, param=slot))
            slot += 1
    return Circuit(spec.q, tuple(gates), slot)


def circuit_unitary(circuit, params=()):
    """Dense ``2^q x 2^q`` unitary built from Kronecker products (test oracle)."""
    params = np.asarray(params, dtype=float).reshape(-1)
    q = circuit.q
    eye = np.eye(2, dtype=complex)
    p0 = np.diag([1, 0]).astype(complex)
    p1 = np.diag([0, 1]).astype(complex)
    total = np.eye(1 << q, dtype=complex)
    for g in circuit.gates:
        if g.kind == "CNOT":
            a = [p0 if k == g.control else eye for k in range(q)]
            b = [p1 if k == g.control else (_FIXED["X"] if k == g.target else eye) for k in range(q)]
            u = _kron_all(a) + _kron_all(b)
        else:
            theta = None if g.param is None else params[g.param]
            u = _kron_all([g.matrix(theta) if k == g.target else eye for k in range(q)])
        total = u @ total
    return total


def _kron_all(mats):
    out = np.ones((1, 1), dtype=complex)
    for m in mats:
        out = np.kron(out, m)
    return out


def draw(circuit, params=None):
    """Text diagram: one line per qubit, one column per gate."""
    rows = [[f"q{k}: "] for k in range(circuit.q)]
    for g in circuit.gates:
        if g.kind in ROTATIONS:
            if g.param is None:
                text = f"{g.kind}({g.theta:.4g})"
            elif params is None:
                text = f"{g.kind}(t{g.param})"
            else:
                text = f"{g.kind}({params[g.param]:.4f})"
        else:
            text = g.kind
        cells = {g.target: text if g.kind != "CNOT" else "X"}
        if g.control is not None:
            cells[g.control] = "@"
        width = max(len(c) for c in cells.values())
        for k in range(circuit.q):
            if k in cells:
                cell = cells[k].center(width, "-")
            elif g.control is not None and min(g.qubits()) < k < max(g.qubits()):
                cell = "|".center(width, "-")
            else:
                cell = "-" * width
            rows[k].append(f"-{cell}-")
    return "\n".join("".join(r) + "-" for r in rows) + "\n"
