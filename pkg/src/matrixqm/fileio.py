"""Text formats for matrices and Pauli sums.

Matrix file::

    # matrixqm matrix v1
    dim <n>
    <n lines of n entries, each `re` or `re+imi`>

Pauli-sum file::

    # matrixqm pauli-sum v1
    qubits <q>
    threshold <float>
    <label> <coefficient>     (one per term, labels in I<X<Y<Z lexicographic order)

Numbers are written as shortest round-trip decimals, so reading a file back
gives bit-identical floats.  Label letter k acts on qubit k, the slowest
Kronecker factor first.
"""

import os
import re

import numpy as np

from .errors import FileFormatError
from .pauli import PAULI_LETTERS, PauliSum, PauliTerm, label_key

MATRIX_HEADER = "# matrixqm matrix v1"
PAULI_HEADER = "# matrixqm pauli-sum v1"

_COMPLEX = re.compile(r"^([+-]?[^+-]+(?:[eE][+-]?\d+)?)([+-][^+-]+(?:[eE][+-]?\d+)?)i$")


def format_real(x):
    """Shortest round-trip decimal; integral values drop the trailing ``.0``."""
    s = repr(float(x))
    return s[:-2] if s.endswith(".0") else s


def format_complex(z):
    z = complex(z)
    if z.imag == 0:
        return format_real(z.real)
    sign = "-" if np.signbit(z.imag) else "+"
    return f"{format_real(z.real)}{sign}{format_real(abs(z.imag))}i"


def parse_complex(token):
    if token.endswith("i"):
        m = _COMPLEX.match(token)
        if not m:
            raise ValueError(f"cannot parse complex entry {token!r}")
        return complex(float(m.group(1)), float(m.group(2)))
    return complex(float(token), 0.0)


def _write_atomic(path, text):
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    os.replace(tmp, path)


def matrix_to_text(m):
    m = np.asarray(m)
    lines = [MATRIX_HEADER, f"dim {m.shape[0]}"]
    lines += [" ".join(format_complex(v) for v in row) for row in m]
    return "\n".join(lines) + "\n"


def write_matrix(path, m):
    _write_atomic(path, matrix_to_text(m))


def _content_lines(path, text, header):
    lines = text.splitlines()
    if not lines or lines[0].strip() != header:
        raise FileFormatError(path, 1, f"expected header {header!r}")
    return [(i + 1, ln.strip()) for i, ln in enumerate(lines) if i > 0 and ln.strip()]


def _keyword(path, item, key, cast):
    lineno, text = item
    parts = text.split()
    if len(parts) != 2 or parts[0] != key:
        raise FileFormatError(path, lineno, f"expected '{key} <value>', got {text!r}")
    try:
        return cast(parts[1])
    except ValueError:
        raise FileFormatError(path, lineno, f"bad {key} value {parts[1]!r}") from None


def read_matrix(path):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    items = _content_lines(path, text, MATRIX_HEADER)
    if not items:
        raise FileFormatError(path, 2, "missing 'dim' line")
    n = _keyword(path, items[0], "dim", int)
    if n < 1:
        raise FileFormatError(path, items[0][0], f"dim must be positive, got {n}")
    rows = items[1:]
    if len(rows) != n:
        last = rows[-1][0] if rows else items[0][0]
        raise FileFormatError(path, last, f"expected {n} matrix rows, found {len(rows)}")
    m = np.empty((n, n), dtype=complex)
    for r, (lineno, text) in enumerate(rows):
        tokens = text.split()
        if len(tokens) != n:
            raise FileFormatError(path, lineno, f"expected {n} entries, found {len(tokens)}")
        for c, tok in enumerate(tokens):
            try:
                m[r, c] = parse_complex(tok)
            except ValueError as exc:
                raise FileFormatError(path, lineno, str(exc)) from None
    return m


def pauli_to_text(psum):
    lines = [PAULI_HEADER, f"qubits {psum.q}", f"threshold {format_real(psum.threshold)}"]
    for t in sorted(psum.terms, key=lambda t: label_key(t.label)):
        lines.append(f"{t.label} {format_real(t.coefficient)}")
    return "\n".join(lines) + "\n"


def write_pauli(path, psum):
    _write_atomic(path, pauli_to_text(psum))


def read_pauli(path):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    items = _content_lines(path, text, PAULI_HEADER)
    if len(items) < 2:
        raise FileFormatError(path, len(text.splitlines()) + 1, "missing qubits/threshold lines")
    q = _keyword(path, items[0], "qubits", int)
    if q < 1:
        raise FileFormatError(path, items[0][0], f"qubits must be >= 1, got {q}")
    threshold = _keyword(path, items[1], "threshold", float)
    terms = []
    seen = set()
    for lineno, text in items[2:]:
        parts = text.split()
        if len(parts) != 2:
            raise FileFormatError(path, lineno, f"expected '<label> <coefficient>', got {text!r}")
        label, value = parts
        if len(label) != q or set(label) - set(PAULI_LETTERS):
            raise FileFormatError(path, lineno, f"bad Pauli label {label!r} for {q} qubits")
        if label in seen:
            raise FileFormatError(path, lineno, f"duplicate label {label}")
        seen.add(label)
        try:
            terms.append(PauliTerm(label, float(value)))
        except ValueError:
            raise FileFormatError(path, lineno, f"bad coefficient {value!r}") from None
    return PauliSum(q, tuple(terms), threshold)
