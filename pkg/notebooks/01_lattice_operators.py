# %% [markdown]
# # Lattice operators and the harmonic oscillator
#
# Position and momentum on an n-site lattice, the energy-basis ladder
# operators, and the harmonic-oscillator spectrum built three ways.

# %%
import matplotlib

matplotlib.use("Agg")
from pathlib import Path

import matplotlib.pyplot as plt
import numpy as np

from matrixqm import (
    annihilation_energy,
    build_harmonic_corrected,
    build_harmonic_ladder,
    build_harmonic_xp,
    eigendecompose,
    fourier_matrix,
    momentum_operator_pos,
    position_operator_pos,
    traceless_identity,
)

figures = Path(__file__).resolve().parent / "figures"
figures.mkdir(exist_ok=True)

# %% [markdown]
# The Fourier matrix is unitary for every n, even or odd, and conjugating the
# position operator with it gives a momentum operator with the same spectrum.

# %%
n = 8
F = fourier_matrix(n)
print("max |F^H F - I| =", np.abs(F.conj().T @ F - np.eye(n)).max())
print("X eigenvalues:", np.round(np.diag(position_operator_pos(n)).real, 4))
print("P eigenvalues:", np.round(np.linalg.eigvalsh(momentum_operator_pos(n)), 4))

# %% [markdown]
# The truncated ladder commutator is not the identity: its last entry
# carries the trace.

# %%
A = annihilation_energy(5)
print(np.round((A @ A.T - A.T @ A).real, 3))
print(np.allclose(A @ A.T - A.T @ A, traceless_identity(5)))

# %%
n = 16
k = np.arange(n)
spectra = {
    "position basis, P^2/2 + X^2/2": eigendecompose(build_harmonic_xp("position", n)).eigenvalues,
    "energy basis, P^2/2 + X^2/2": eigendecompose(build_harmonic_xp("energy", n)).eigenvalues,
    "energy basis, A^H A + I/2": eigendecompose(build_harmonic_ladder("energy", n)).eigenvalues,
}
fig, ax = plt.subplots(figsize=(6, 4))
ax.plot(k, k + 0.5, "k-", lw=1, label="k + 1/2")
for (label, w), marker in zip(spectra.items(), "osx"):
    ax.plot(k, w, marker, mfc="none", label=label)
ax.set_xlabel("level k")
ax.set_ylabel("energy")
ax.legend(fontsize=8)
fig.savefig(figures / "harmonic_spectra.png", dpi=120, bbox_inches="tight")

# %% [markdown]
# The energy-basis X/P form repeats the value (n-1)/2; subtracting the
# traceless identity removes the duplicate.

# %%
print(np.round(spectra["energy basis, P^2/2 + X^2/2"], 3))
print(np.round(eigendecompose(build_harmonic_corrected("energy", n)).eigenvalues, 3))
