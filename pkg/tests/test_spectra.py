from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from matrixqm import hamiltonians as hb
from matrixqm import spectra as sp
from matrixqm.errors import DomainError, NotHermitianError


def random_hermitian(rng, n):
    m = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (m + m.conj().T) / 2


def test_eigendecompose_diagonal():
    s = sp.eigendecompose(np.diag([3.0, 1.0, 2.0]))
    assert np.array_equal(s.eigenvalues, [1.0, 2.0, 3.0])


def test_eigendecompose_harmonic_ladder():
    s = sp.eigendecompose(hb.build_harmonic_ladder("energy", 8))
    assert np.max(np.abs(s.eigenvalues - (np.arange(8) + 0.5))) <= 1e-12


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 16), st.integers(0, 2**32 - 1))
def test_eigendecompose_invariants(n, seed):
    h = random_hermitian(np.random.default_rng(seed), n)
    s = sp.eigendecompose(h)
    v, w = s.eigenvectors, s.eigenvalues
    fro = np.linalg.norm(h)
    assert np.all(np.diff(w) >= 0)
    assert np.max(np.abs(v.conj().T @ v - np.eye(n))) <= 1e-10
    assert np.max(np.linalg.norm(h @ v - v * w, axis=0)) <= 1e-10 * fro
    assert np.max(np.abs((v * w) @ v.conj().T - h)) <= 1e-9 * fro


def test_eigendecompose_rejects_non_hermitian():
    with pytest.raises(NotHermitianError) as info:
        sp.eigendecompose(np.array([[1.0, 2.0], [0.0, 1.0]]))
    assert info.value.asymmetry == pytest.approx(2.0)


def test_eigendecompose_deterministic():
    h = random_hermitian(np.random.default_rng(0), 12)
    a, b = sp.eigendecompose(h), sp.eigendecompose(h)
    assert np.array_equal(a.eigenvalues, b.eigenvalues)
    assert np.array_equal(a.eigenvectors, b.eigenvectors)


@pytest.mark.parametrize("k, expected", [(0, 0.5), (3, 3.5), (100, 100.5)])
def test_exact_ho(k, expected):
    assert sp.exact_ho_energy(k) == expected


def test_heisenberg_cubic_values():
    assert sp.heisenberg_cubic_energy(0, 0.05) == pytest.approx(0.4996181, abs=5e-8)
    assert sp.heisenberg_cubic_energy(1, 0.05) == pytest.approx(1.4975347, abs=5e-8)


def test_heisenberg_quartic_values():
    assert sp.heisenberg_quartic_energy(0, 0.05) == pytest.approx(0.5089648, abs=5e-8)


@pytest.mark.parametrize("k", [0, 1, 2, 5])
def test_heisenberg_quartic_symbolic(k):
    n, lam, m, w, hbar = sympy.symbols("n lam m w hbar", positive=True)
    half = sympy.Rational(1, 2)
    expr = (
        hbar * w * (n + half)
        + 3 * lam * hbar**2 / (8 * m * w**2) * (n**2 + n + half)
        - lam**2 * hbar**2 / (64 * m**2 * w**5)
        * (17 * n**3 + sympy.Rational(51, 2) * n**2 + sympy.Rational(59, 2) * n + sympy.Rational(21, 2))
    )
    args = {n: k, lam: sympy.Rational(1, 20), m: sympy.Rational(3, 2), w: sympy.Rational(4, 5), hbar: 1}
    exact = float(expr.subs(args))
    assert sp.heisenberg_quartic_energy(k, 0.05, m=1.5, omega0=0.8) == pytest.approx(exact, rel=1e-14)


def test_musin_values():
    assert sp.musin_susy_energy(0, 0, 0.0) == 0
    assert sp.musin_susy_energy(2, 1, 0.0, omega0=1.7) == pytest.approx(3 * 1.7)
    assert sp.musin_susy_energy(1, 0, 0.05) == pytest.approx(0.9825, abs=1e-12)
    with pytest.raises(DomainError):
        sp.musin_susy_energy(1, 2, 0.05)


@pytest.mark.parametrize("model", sp.REFERENCE_MODELS)
def test_references_reduce_to_ho_at_zero_coupling(model):
    ref = sp.ReferenceCurve(model, 0.0)
    for i in range(10):
        expected = i // 2 + i % 2 if model == "musin_susy" else i + 0.5
        if model != "musin_susy":
            assert ref.level(i) == sp.exact_ho_energy(i)
        else:
            assert ref.level(i) == expected


def test_musin_enumeration_order():
    ref = sp.ReferenceCurve("musin_susy", 0.05)
    pairs = [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0)]
    for i, (nb, nf) in enumerate(pairs):
        assert ref.level(i) == sp.musin_susy_energy(nb, nf, 0.05)


def test_calibrated_couplings():
    assert sp.ReferenceCurve.from_matrix_coupling("heisenberg_cubic", 0.05).coupling == pytest.approx(0.15)
    assert sp.ReferenceCurve.from_matrix_coupling("heisenberg_quartic", 0.05).coupling == pytest.approx(0.2)
    assert sp.ReferenceCurve.from_matrix_coupling("musin_susy", 0.05).coupling == 0.05


def test_calibration_matches_low_levels():
    # with lambda = 3 alpha and 4 beta the second-order formulas track the ground level closely
    cub = sp.eigendecompose(hb.build_anharmonic("energy", 32, "cubic", 0.01))
    ref = sp.ReferenceCurve.from_matrix_coupling("heisenberg_cubic", 0.01)
    assert abs(cub.eigenvalues[0] - ref.level(0)) < 1e-6
    quart = sp.eigendecompose(hb.build_anharmonic("energy", 32, "quartic", 0.001))
    ref = sp.ReferenceCurve.from_matrix_coupling("heisenberg_quartic", 0.001)
    assert abs(quart.eigenvalues[0] - ref.level(0)) < 1e-7


def test_compare_exact_ladder():
    s = sp.eigendecompose(hb.build_harmonic_ladder("energy", 8))
    report = sp.compare_spectrum(s, sp.ReferenceCurve("exact_ho"), 8, 1e-12)
    assert report.max_relative_error <= 1e-12
    assert report.fraction_within == 1.0


def test_compare_position_basis_frozen():
    # oracle run: lowest 11 within 2%, index 11 off by 4.11%
    s = sp.eigendecompose(hb.build_harmonic_xp("position", 16))
    report = sp.compare_spectrum(s, sp.ReferenceCurve("exact_ho"), 12, 0.02)
    assert report.fraction_within == pytest.approx(11 / 12)
    assert report.relative_errors[11] == pytest.approx(0.0411, abs=5e-4)


def test_compare_monotone_in_threshold():
    s = sp.eigendecompose(hb.build_harmonic_xp("position", 16))
    ref = sp.ReferenceCurve("exact_ho")
    fractions = [sp.compare_spectrum(s, ref, 16, t).fraction_within for t in np.logspace(-12, 0, 40)]
    assert all(a <= b for a, b in zip(fractions, fractions[1:]))


def test_compare_count_checked():
    s = sp.eigendecompose(np.eye(3))
    with pytest.raises(DomainError):
        sp.compare_spectrum(s, sp.ReferenceCurve("exact_ho"), 4, 0.1)


def test_relative_error_floor():
    assert sp.relative_error(1e-13, 0.0) == pytest.approx(0.1)


@pytest.mark.parametrize("k", [0, 3])
def test_position_error_non_increasing_with_n(k):
    errors = []
    for n in (16, 32, 64, 128):
        w = sp.eigendecompose(hb.build_harmonic_xp("position", n)).eigenvalues
        errors.append(abs(w[k] - (k + 0.5)))
    # once converged the error sits at rounding level; allow that floor
    assert all(b <= a + 1e-12 for a, b in zip(errors, errors[1:]))


def _ho_ground_density():
    s = sp.eigendecompose(hb.build_harmonic_xp("position", 16))
    return s, sp.wavefunction_density(s, 0)


def test_wavefunction_normalized_and_symmetric():
    _, rows = _ho_ground_density()
    x, d = rows[:, 0], rows[:, 1]
    assert rows.shape == (16, 2)
    assert abs(d.sum() - 1) <= 1e-10
    assert np.allclose(x, -x[::-1])
    assert np.max(np.abs(d - d[::-1])) <= 1e-8
    peak = int(np.argmax(d))
    assert np.all(np.diff(d[: peak + 1]) >= 0) and np.all(np.diff(d[peak:]) <= 0)


def test_wavefunction_gaussian_overlap():
    s, rows = _ho_ground_density()
    x = rows[:, 0]
    g = np.exp(-(x**2) / 2)
    g /= np.linalg.norm(g)
    assert abs(np.vdot(g, s.vector(0))) >= 0.999


def test_wavefunction_first_excited_has_node():
    s = sp.eigendecompose(hb.build_harmonic_xp("position", 16))
    rows = sp.wavefunction_density(s, 1)
    x, d = rows[:, 0], rows[:, 1]
    # the tails vanish too, so look for the minimum between the two lobes
    left, right = int(np.argmax(d[:8])), 8 + int(np.argmax(d[8:]))
    inner = left + int(np.argmin(d[left : right + 1]))
    assert abs(x[inner]) < x[9] - x[8]
    assert d[inner] < 0.25 * d.max()


def test_vector_phase_fixed():
    s = sp.eigendecompose(random_hermitian(np.random.default_rng(1), 6))
    for k in range(6):
        v = s.vector(k)
        j = np.argmax(np.abs(v))
        assert v[j].imag == pytest.approx(0, abs=1e-15) and v[j].real > 0


def test_wavefunction_bad_index():
    s = sp.eigendecompose(np.eye(4))
    with pytest.raises(DomainError):
        sp.wavefunction_density(s, 4)
    with pytest.raises(DomainError):
        sp.wavefunction_density(s, 0, n=5)


def test_degenerate_pairs():
    w = sp.eigendecompose(hb.build_harmonic_xp("energy", 8)).eigenvalues
    pairs = sp.degenerate_pairs(w, 1e-8 * np.linalg.norm(hb.build_harmonic_xp("energy", 8)))
    assert pairs == [(3, 4)]
