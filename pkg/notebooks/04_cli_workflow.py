# %% [markdown]
# # Command-line workflow
#
# build -> decompose -> vqe, then spectrum and wavefunction reports.  Outputs
# land in one directory per Hamiltonian kind under a temporary folder.

# %%
import subprocess
import sys
import tempfile
from pathlib import Path

out = Path(tempfile.mkdtemp())


def matrixqm(*args):
    cmd = [sys.executable, "-m", "matrixqm", *map(str, args)]
    done = subprocess.run(cmd, capture_output=True, text=True)
    print("$ matrixqm", " ".join(map(str, args)), f"  [exit {done.returncode}]")
    print(done.stdout, done.stderr, sep="")
    return done


# %%
matrixqm("build", "--kind", "harmonic-ladder", "--basis", "energy", "--n", 4, "--out-dir", out)
matrix = out / "harmonic_ladder" / "harmonic_ladder_energy_n4.matrix"
matrixqm("decompose", matrix)
matrixqm("vqe", matrix.with_suffix(".pauli"), "--depth", 3, "--max-iterations", 500)
print((matrix.parent / "vqe_runs.log").read_text())

# %%
matrixqm("build", "--kind", "harmonic-xp", "--basis", "position", "--n", 16, "--out-dir", out)
pos = out / "harmonic_xp" / "harmonic_xp_position_n16.matrix"
matrixqm("spectrum", pos, "--reference", "exact", "--count", 12, "--threshold", 0.02)
done = matrixqm("wavefunction", pos, "--k", 0)
print(Path(done.stdout.strip()).read_text())
