from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from matrixqm import operators as ops
from matrixqm.errors import DomainError


@pytest.mark.parametrize("a, n, expected", [(1, 4, -1.5), (3, 5, 0), (8, 8, 3.5)])
def test_lattice_index(a, n, expected):
    value = ops.lattice_index(a, n)
    assert isinstance(value, Fraction)
    assert value == Fraction(expected)


@pytest.mark.parametrize("a", [0, 5, -1])
def test_lattice_index_out_of_range(a):
    with pytest.raises(DomainError):
        ops.lattice_index(a, 4)


def test_lattice_index_exact_for_large_n():
    n = 2**53 + 1
    assert ops.lattice_index(n, n) == Fraction(n - 1, 2)


def test_position_operator_small():
    x2 = ops.position_operator_pos(2)
    assert np.allclose(np.diag(x2), [-np.sqrt(np.pi) / 2, np.sqrt(np.pi) / 2], atol=1e-15)
    x4 = ops.position_operator_pos(4)
    assert np.allclose(np.diag(x4), np.sqrt(np.pi / 2) * np.array([-1.5, -0.5, 0.5, 1.5]))
    assert np.count_nonzero(x4 - np.diag(np.diag(x4))) == 0


@pytest.mark.parametrize("n", [1, 2, 3, 7, 16])
def test_position_operator_traceless(n):
    assert abs(np.trace(ops.position_operator_pos(n))) < 1e-12


def test_fourier_n1():
    assert np.allclose(ops.fourier_matrix(1), [[1]])


@pytest.mark.parametrize("n", range(2, 65))
def test_fourier_unitary_and_unimodular(n):
    f = ops.fourier_matrix(n)
    assert np.max(np.abs(f.conj().T @ f - np.eye(n))) <= 1e-12
    assert np.allclose(np.abs(f), 1 / np.sqrt(n), atol=1e-15)


def test_fourier_matches_direct_formula():
    # direct evaluation of exp(2 pi i l_j l_k / n) / sqrt(n)
    n = 6
    l = np.array([float(ops.lattice_index(a, n)) for a in range(1, n + 1)])
    direct = np.exp(2j * np.pi / n * np.outer(l, l)) / np.sqrt(n)
    assert np.allclose(ops.fourier_matrix(n), direct, atol=1e-14)


@pytest.mark.parametrize("n", [2, 5, 8, 33])
def test_momentum_hermitian_and_isospectral(n):
    p = ops.momentum_operator_pos(n)
    x = ops.position_operator_pos(n)
    assert np.max(np.abs(p - p.conj().T)) <= 1e-12
    assert np.allclose(np.linalg.eigvalsh(p), np.sort(np.diag(x).real), atol=1e-10)


def test_momentum_n2_zero_trace():
    p = ops.momentum_operator_pos(2)
    assert abs(np.trace(p)) < 1e-14


def test_annihilation():
    assert np.array_equal(ops.annihilation_energy(2), [[0, 1], [0, 0]])
    a3 = ops.annihilation_energy(3)
    assert np.allclose(np.diag(a3, 1), [1, np.sqrt(2)])
    assert np.count_nonzero(a3 - np.diag(np.diag(a3, 1), 1)) == 0
    assert not np.any(ops.annihilation_energy(6)[:, 0])


def test_xp_from_ladder_n2():
    x, p = ops.xp_from_ladder(ops.annihilation_energy(2))
    assert np.allclose(x, np.array([[0, 1], [1, 0]]) / np.sqrt(2))
    assert np.allclose(p, np.array([[0, -1j], [1j, 0]]) / np.sqrt(2))


@pytest.mark.parametrize("n", [2, 3, 8])
def test_xp_identities(n):
    a = ops.annihilation_energy(n)
    x, p = ops.xp_from_ladder(a)
    ad = a.conj().T
    for m in (x, p):
        assert np.max(np.abs(m - m.conj().T)) <= 1e-12
        assert abs(np.trace(m)) < 1e-14
    assert np.allclose(x @ x + p @ p, 2 * ad @ a + ops.commutator(a, ad), atol=1e-12)


def test_xp_from_ladder_rejects_non_square():
    with pytest.raises(DomainError):
        ops.xp_from_ladder(np.zeros((2, 3)))


def test_ladder_from_xp_recovers_energy_basis():
    a = ops.annihilation_energy(7)
    a2, ad2 = ops.ladder_from_xp(*ops.xp_from_ladder(a))
    assert np.max(np.abs(a2 - a)) <= 1e-12
    assert np.max(np.abs(ad2 - a.conj().T)) <= 1e-12


def test_ladder_from_zero():
    a, ad = ops.ladder_from_xp(np.zeros((3, 3)), np.zeros((3, 3)))
    assert not np.any(a) and not np.any(ad)


def test_ladder_from_xp_dimension_mismatch():
    with pytest.raises(DomainError):
        ops.ladder_from_xp(np.eye(2), np.eye(3))


def test_position_basis_ladder_not_bidiagonal():
    a, _ = ops.ladder_from_xp(*ops.position_momentum("position", 4))
    off = a.copy()
    for k in (-1, 0, 1):
        off -= np.diag(np.diag(a, k), k)
    assert np.max(np.abs(off)) > 1e-3


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 12), st.integers(0, 2**32 - 1))
def test_ladder_round_trip_random(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    a2, _ = ops.ladder_from_xp(*ops.xp_from_ladder(a))
    assert np.max(np.abs(a2 - a)) <= 1e-12 * (1 + np.max(np.abs(a)))


@pytest.mark.parametrize("n", [1, 2, 5, 16, 100])
def test_traceless_identity_is_commutator(n):
    a = ops.annihilation_energy(n)
    it = ops.traceless_identity(n)
    assert np.max(np.abs(ops.commutator(a, a.conj().T) - it)) <= 1e-12
    assert np.trace(it) == 0


def test_traceless_identity_values():
    assert np.array_equal(np.diag(ops.traceless_identity(2)).real, [1, -1])
    assert np.array_equal(np.diag(ops.traceless_identity(5)).real, [1, 1, 1, 1, -4])


def test_fermionic_ladder():
    c, cd = ops.fermionic_ladder()
    zero, one = np.array([1, 0]), np.array([0, 1])
    assert np.array_equal(c @ one, zero)
    assert not np.any(c @ zero)
    assert np.array_equal(cd @ zero, one)
    assert not np.any(cd @ one)
    assert np.array_equal(ops.commutator(cd, c), np.diag([-1, 1]))


def test_extend_bosonic():
    assert np.array_equal(ops.extend_bosonic(np.eye(3), 2), np.eye(6))
    assert np.array_equal(ops.extend_bosonic(np.diag([2.0, 5.0]), 2), np.diag([2.0, 2.0, 5.0, 5.0]))


def test_extend_fermionic():
    c, _ = ops.fermionic_ladder()
    ext = ops.extend_fermionic(2, c)
    expected = np.zeros((4, 4))
    expected[:2, :2] = c.real
    expected[2:, 2:] = c.real
    assert np.array_equal(ext, expected)
    assert np.array_equal(ops.extend_fermionic(1, c), c)


def test_mixed_product_and_commuting_extensions():
    n = 5
    a = ops.annihilation_energy(n)
    c, cd = ops.fermionic_ladder()
    ab = ops.extend_bosonic(a, 2)
    cf = ops.extend_fermionic(n, c)
    assert np.allclose(ab @ cf, np.kron(a, c))
    rng = np.random.default_rng(3)
    for _ in range(10):
        ob = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        of = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        comm = ops.commutator(ops.extend_bosonic(ob, 2), ops.extend_fermionic(n, of))
        assert np.max(np.abs(comm)) <= 1e-12


def test_returned_matrices_are_read_only():
    x = ops.position_operator_pos(4)
    with pytest.raises(ValueError):
        x[0, 0] = 1


@pytest.mark.parametrize("n", [128, 257, 1024])
def test_fourier_unitary_large(n):
    f = ops.fourier_matrix(n)
    assert np.max(np.abs(f.conj().T @ f - np.eye(n))) <= 1e-12
