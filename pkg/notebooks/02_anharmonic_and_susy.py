# %% [markdown]
# # Anharmonic and supersymmetric oscillators
#
# Matrix spectra against second-order perturbative energies, and ground-state
# densities on the lattice.

# %%
import matplotlib

matplotlib.use("Agg")
from pathlib import Path

import matplotlib.pyplot as plt
import numpy as np

from matrixqm import build_anharmonic, build_harmonic_xp, build_susy_musin, eigendecompose, wavefunction_density
from matrixqm.spectra import ReferenceCurve, compare_spectrum

figures = Path(__file__).resolve().parent / "figures"
figures.mkdir(exist_ok=True)

# %%
n, coupling = 16, 0.05
for kind, model in [("cubic", "heisenberg_cubic"), ("quartic", "heisenberg_quartic")]:
    ref = ReferenceCurve.from_matrix_coupling(model, coupling)
    for basis in ("energy", "position"):
        s = eigendecompose(build_anharmonic(basis, n, kind, coupling))
        report = compare_spectrum(s, ref, 8, 0.01)
        print(f"{kind:8s} {basis:8s} lambda={ref.coupling:.2f}  rel errors:",
              np.round(report.relative_errors, 4))

# %% [markdown]
# Supersymmetric oscillator: at g = 0 every level above zero is paired.

# %%
print(np.round(eigendecompose(build_susy_musin(4, 0.0, 1.0)).eigenvalues, 6))
s = eigendecompose(build_susy_musin(16, 0.05, 1.0))
report = compare_spectrum(s, ReferenceCurve("musin_susy", 0.05), 16, 0.02)
for i, got, want, err in report.rows[:6]:
    print(f"{i:2d}  matrix {got: .5f}  perturbative {want: .5f}  rel {err:.3g}")

# %% [markdown]
# Position-basis densities of the lowest three oscillator states.

# %%
s = eigendecompose(build_harmonic_xp("position", 32))
fig, ax = plt.subplots(figsize=(6, 3.5))
for k in range(3):
    rows = wavefunction_density(s, k)
    ax.plot(rows[:, 0], rows[:, 1], "o-", ms=3, label=f"k={k}")
ax.set_xlabel("x")
ax.set_ylabel("probability")
ax.legend()
fig.savefig(figures / "densities.png", dpi=120, bbox_inches="tight")
