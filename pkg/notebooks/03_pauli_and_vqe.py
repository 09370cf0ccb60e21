# %% [markdown]
# # Pauli decomposition and VQE
#
# Decompose oscillator Hamiltonians on 1-3 qubits into Pauli strings and
# minimize their energy with the RY/CNOT ansatz on the statevector simulator.

# %%
import matplotlib

matplotlib.use("Agg")
from pathlib import Path

import matplotlib.pyplot as plt
import numpy as np

from matrixqm import AnsatzSpec, VqeConfig, build_anharmonic, build_harmonic_ladder, decompose, vqe_run
from matrixqm.qsim import draw, hardware_efficient_ansatz

figures = Path(__file__).resolve().parent / "figures"
figures.mkdir(exist_ok=True)

# %%
h = decompose(build_harmonic_ladder("energy", 4))
for t in h.terms:
    print(f"{t.label}  {t.coefficient:+.6f}")

# %%
print(draw(hardware_efficient_ansatz(AnsatzSpec(3, 2))))

# %%
fig, ax = plt.subplots(figsize=(6, 3.5))
for q in (1, 2, 3):
    h = decompose(build_harmonic_ladder("energy", 1 << q))
    res = vqe_run(h, VqeConfig(AnsatzSpec(q, 3 if q > 1 else 0), max_iterations=1000, seed=1))
    it, e = np.array(res.trace).T
    ax.semilogy(it, e - res.exact_ground + 1e-16, label=f"{q} qubits")
    print(f"q={q}: best {res.best_energy:.8f}  exact {res.exact_ground:.8f}  "
          f"rel error {res.relative_error:.2e}  iterations {res.iterations}")
ax.set_xlabel("iteration")
ax.set_ylabel("E - E_exact")
ax.legend()
fig.savefig(figures / "vqe_convergence.png", dpi=120, bbox_inches="tight")

# %% [markdown]
# SPSA on a cubic oscillator (3 qubits).

# %%
h = decompose(build_anharmonic("energy", 8, "cubic", 0.05))
res = vqe_run(h, VqeConfig(AnsatzSpec(3, 3), optimizer="spsa", max_iterations=600, seed=2,
                           energy_tolerance=1e-6, optimizer_options={"a": 1.0}))
print(f"spsa: best {res.best_energy:.6f}  exact {res.exact_ground:.6f}  rel error {res.relative_error:.2e}")
