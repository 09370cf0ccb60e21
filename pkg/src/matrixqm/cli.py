"""Command-line driver: build -> decompose -> vqe, plus spectrum and wavefunction reports.

Every command writes a ``*.manifest.json`` next to its outputs recording the
exact argument vector, so ``matrixqm rerun <manifest>`` reproduces the run.
"""

import argparse
import csv
import datetime
import io
import json
import os
import sys

from . import __version__
from .errors import ConfigurationError, DomainError, FileFormatError
from .fileio import format_real, read_matrix, read_pauli, write_matrix, write_pauli, _write_atomic
from .hamiltonians import KINDS, HamiltonianSpec
from .pauli import DEFAULT_THRESHOLD, decompose, reconstruct
from .qsim import AnsatzSpec, draw, hardware_efficient_ansatz
from .spectra import ReferenceCurve, compare_spectrum, eigendecompose, wavefunction_density
from .vqe import VqeConfig, vqe_run

EXIT_USAGE = 2
EXIT_NOT_CONVERGED = 1
LOG_NAME = "vqe_runs.log"
LOG_FIELDS = (
    "timestamp",
    "hamiltonian_file",
    "qubits",
    "depth",
    "optimizer",
    "seed",
    "iterations",
    "best_energy",
    "exact_ground",
    "relative_error",
    "wall_seconds",
)
REFERENCES = {
    "exact": "exact_ho",
    "heisenberg-cubic": "heisenberg_cubic",
    "heisenberg-quartic": "heisenberg_quartic",
    "musin-susy": "musin_susy",
}


class UsageError(Exception):
    pass


def _timestamp():
    return datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")


def _stem(path):
    return os.path.splitext(os.path.basename(path))[0]


def _out_dir(args, default):
    d = args.out_dir if args.out_dir is not None else default
    os.makedirs(d, exist_ok=True)
    return d


def _write_manifest(out_dir, stem, command, args, argv, inputs, outputs, extra=None):
    params = {k: v for k, v in vars(args).items() if k not in ("func",)}
    manifest = {
        "command": command,
        "argv": list(argv),
        "parameters": params,
        "inputs": inputs,
        "outputs": outputs,
        "version": __version__,
        "timestamp": _timestamp(),
    }
    if extra:
        manifest.update(extra)
    path = os.path.join(out_dir, f"{stem}.{command}.manifest.json")
    _write_atomic(path, json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return path


def _spec_from_args(args):
    kind = args.kind.replace("-", "_")
    n = args.n if args.n is not None else args.nB
    if n is None:
        raise UsageError("--n (or --nB for susy-musin) is required")
    kw = dict(kind=kind, n=n, basis=args.basis)
    if args.alpha is not None:
        kw["alpha"] = args.alpha
    if args.beta is not None:
        kw["beta"] = args.beta
    if args.g is not None:
        kw["g"] = args.g
    if args.omega0 is not None:
        kw["omega0"] = args.omega0
    if args.coeffs is not None:
        kw["potential_coeffs"] = tuple(args.coeffs)
    try:
        return HamiltonianSpec(**kw)
    except DomainError as exc:
        raise UsageError(f"invalid Hamiltonian specification: {exc}") from None


def _matrix_name(spec):
    parts = [spec.kind]
    if spec.kind != "susy_musin":
        parts.append(spec.basis)
    parts.append(f"n{spec.n}")
    for name in ("alpha", "beta", "g"):
        value = getattr(spec, name)
        if value:
            parts.append(f"{name}{format_real(value)}")
    if spec.kind == "susy_musin":
        parts.append(f"omega{format_real(spec.omega0)}")
    return "_".join(parts)


def cmd_build(args, argv):
    spec = _spec_from_args(args)
    h = spec.build()
    base = args.out_dir if args.out_dir is not None else "."
    out_dir = os.path.join(base, spec.kind)
    os.makedirs(out_dir, exist_ok=True)
    stem = args.name or _matrix_name(spec)
    path = os.path.join(out_dir, f"{stem}.matrix")
    write_matrix(path, h)
    _write_manifest(out_dir, stem, "build", args, argv, [], [path])
    print(path)
    return 0


def cmd_decompose(args, argv):
    h = read_matrix(args.matrix)
    threshold = DEFAULT_THRESHOLD if args.threshold is None else args.threshold
    full = decompose(h, threshold=0.0)
    psum = decompose(h, threshold=threshold)
    dropped = [c for label, c in full.as_dict().items() if label not in psum.as_dict()]
    out_dir = _out_dir(args, os.path.dirname(os.path.abspath(args.matrix)))
    stem = _stem(args.matrix)
    path = os.path.join(out_dir, f"{stem}.pauli")
    write_pauli(path, psum)
    _write_manifest(out_dir, stem, "decompose", args, argv, [args.matrix], [path])
    print(f"terms {len(psum)}")
    print(f"dropped_terms {len(dropped)}")
    print(f"dropped_abs_mass {format_real(sum(abs(c) for c in dropped))}")
    print(path)
    return 0


def cmd_reconstruct(args, argv):
    psum = read_pauli(args.pauli)
    out_dir = _out_dir(args, os.path.dirname(os.path.abspath(args.pauli)))
    stem = _stem(args.pauli)
    path = os.path.join(out_dir, f"{stem}.reconstructed.matrix")
    write_matrix(path, reconstruct(psum))
    _write_manifest(out_dir, stem, "reconstruct", args, argv, [args.pauli], [path])
    print(path)
    return 0


def cmd_vqe(args, argv):
    psum = read_pauli(args.pauli)
    try:
        config = VqeConfig(
            ansatz=AnsatzSpec(psum.q, args.depth),
            optimizer=args.optimizer.replace("-", "_"),
            max_iterations=args.max_iterations,
            energy_tolerance=args.tolerance,
            seed=args.seed,
            initial_params=args.initial_params.replace("-", "_"),
            window=args.window,
        )
    except ConfigurationError as exc:
        raise UsageError(str(exc)) from None
    result = vqe_run(psum, config)
    out_dir = _out_dir(args, os.path.dirname(os.path.abspath(args.pauli)))
    stem = f"{_stem(args.pauli)}.vqe.d{args.depth}.{config.optimizer}.s{args.seed}"

    circuit = hardware_efficient_ansatz(config.ansatz)
    payload = {
        "hamiltonian_file": os.path.abspath(args.pauli),
        "qubits": psum.q,
        "depth": args.depth,
        "optimizer": config.optimizer,
        "seed": args.seed,
        "max_iterations": config.max_iterations,
        "energy_tolerance": config.energy_tolerance,
        "window": config.window,
        "initial_params": config.initial_params,
        "iterations": result.iterations,
        "evaluations": result.evaluations,
        "converged": result.converged,
        "stop_reason": result.stop_reason,
        "best_energy": result.best_energy,
        "best_params": [float(v) for v in result.best_params],
        "exact_ground": result.exact_ground,
        "relative_error": result.relative_error,
    }
    json_path = os.path.join(out_dir, f"{stem}.result.json")
    trace_path = os.path.join(out_dir, f"{stem}.trace.csv")
    circuit_path = os.path.join(out_dir, f"{stem}.circuit.txt")
    log_path = os.path.join(out_dir, LOG_NAME)

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["iteration", "energy"])
    for it, e in result.trace:
        writer.writerow([it, format_real(e)])
    _write_atomic(trace_path, buf.getvalue())
    _write_atomic(json_path, json.dumps(payload, indent=2) + "\n")
    _write_atomic(circuit_path, draw(circuit, result.best_params))

    fields = [
        _timestamp(),
        os.path.abspath(args.pauli),
        str(psum.q),
        str(args.depth),
        config.optimizer,
        str(args.seed),
        str(result.iterations),
        format_real(result.best_energy),
        format_real(result.exact_ground),
        format_real(result.relative_error),
        f"{result.wall_seconds:.3f}",
    ]
    new_log = not os.path.exists(log_path)
    with open(log_path, "a", encoding="utf-8") as fh:
        if new_log:
            fh.write("# " + "\t".join(LOG_FIELDS) + "\n")
        fh.write("\t".join(fields) + "\n")

    _write_manifest(
        out_dir,
        stem,
        "vqe",
        args,
        argv,
        [args.pauli],
        [json_path, trace_path, circuit_path, log_path],
        {"wall_seconds": result.wall_seconds},
    )
    print(
        f"best_energy {format_real(result.best_energy)} exact_ground "
        f"{format_real(result.exact_ground)} relative_error {format_real(result.relative_error)} "
        f"converged {str(result.converged).lower()}"
    )
    return 0 if result.converged else EXIT_NOT_CONVERGED


def cmd_spectrum(args, argv):
    h = read_matrix(args.matrix)
    model = REFERENCES[args.reference]
    if args.lam is not None and args.coupling is not None:
        raise UsageError("give either --coupling or --lambda, not both")
    if args.lam is not None:
        ref = ReferenceCurve(model, args.lam, omega0=args.omega0)
    else:
        ref = ReferenceCurve.from_matrix_coupling(model, args.coupling or 0.0, omega0=args.omega0)
    spectrum = eigendecompose(h)
    count = spectrum.dim if args.count is None else args.count
    if not 1 <= count <= spectrum.dim:
        raise UsageError(f"--count must lie in [1, {spectrum.dim}], got {count}")
    threshold = 0.01 if args.threshold is None else args.threshold
    report = compare_spectrum(spectrum, ref, count, threshold)
    out_dir = _out_dir(args, os.path.dirname(os.path.abspath(args.matrix)))
    stem = f"{_stem(args.matrix)}.spectrum.{args.reference}"
    path = os.path.join(out_dir, f"{stem}.csv")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["index", "computed", "reference", "relative_error"])
    for i, got, want, err in report.rows:
        writer.writerow([i, format_real(got), format_real(want), format_real(err)])
    summary = (
        f"fraction_within {format_real(report.fraction_within)} threshold "
        f"{format_real(threshold)} count {count} max_relative_error "
        f"{format_real(report.max_relative_error)}"
    )
    buf.write(f"# {summary}\n")
    _write_atomic(path, buf.getvalue())
    _write_manifest(out_dir, stem, "spectrum", args, argv, [args.matrix], [path])
    print(summary)
    print(path)
    return 0


def cmd_wavefunction(args, argv):
    h = read_matrix(args.matrix)
    spectrum = eigendecompose(h)
    if not 0 <= args.k < spectrum.dim:
        raise UsageError(f"state index must lie in [0, {spectrum.dim}), got {args.k}")
    rows = wavefunction_density(spectrum, args.k)
    out_dir = _out_dir(args, os.path.dirname(os.path.abspath(args.matrix)))
    stem = f"{_stem(args.matrix)}.wavefunction.k{args.k}"
    path = os.path.join(out_dir, f"{stem}.csv")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["x", "density"])
    for x, d in rows:
        writer.writerow([format_real(x), format_real(d)])
    _write_atomic(path, buf.getvalue())
    _write_manifest(out_dir, stem, "wavefunction", args, argv, [args.matrix], [path])
    print(path)
    return 0


def cmd_rerun(args, argv):
    with open(args.manifest, encoding="utf-8") as fh:
        manifest = json.load(fh)
    return main(manifest["argv"])


def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--out-dir", default=None, help="output directory")
    p.add_argument("--seed", type=int, default=0, help="random seed (vqe)")
    p.add_argument("--threshold", type=float, default=None,
                   help="Pauli coefficient cut-off (decompose) or relative-error band (spectrum)")
    return p


def build_parser():
    common = _common()
    parser = argparse.ArgumentParser(prog="matrixqm", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="write a Hamiltonian matrix file")
    p.add_argument("--kind", required=True, choices=[k.replace("_", "-") for k in KINDS])
    p.add_argument("--basis", choices=["position", "energy"], default="energy")
    p.add_argument("--n", type=int)
    p.add_argument("--nB", type=int, help="boson dimension for susy-musin")
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--g", type=float)
    p.add_argument("--omega0", type=float)
    p.add_argument("--coeffs", type=float, nargs="+", help="c_0 c_1 ... of V(X) = sum c_k X^k")
    p.add_argument("--name", help="file stem (default derived from the parameters)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("decompose", parents=[common], help="matrix file -> Pauli-sum file")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("reconstruct", parents=[common], help="Pauli-sum file -> matrix file")
    p.add_argument("pauli")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("vqe", parents=[common], help="run VQE on a Pauli-sum file")
    p.add_argument("pauli")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--optimizer", choices=["nelder-mead", "spsa"], default="nelder-mead")
    p.add_argument("--max-iterations", type=int, default=500)
    p.add_argument("--tolerance", type=float, default=1e-8, help="energy tolerance")
    p.add_argument("--window", type=int, default=VqeConfig.__dataclass_fields__["window"].default)
    p.add_argument("--initial-params", choices=["seeded-uniform", "zeros"], default="seeded-uniform")
    p.set_defaults(func=cmd_vqe)

    p = sub.add_parser("spectrum", parents=[common], help="compare eigenvalues with a closed form")
    p.add_argument("matrix")
    p.add_argument("--reference", choices=sorted(REFERENCES), default="exact")
    p.add_argument("--coupling", type=float, help="matrix coupling (alpha, beta or g)")
    p.add_argument("--lambda", dest="lam", type=float, help="formula coupling, used verbatim")
    p.add_argument("--omega0", type=float, default=1.0)
    p.add_argument("--count", type=int)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("wavefunction", parents=[common], help="probability density of one eigenstate")
    p.add_argument("matrix")
    p.add_argument("--k", type=int, default=0)
    p.set_defaults(func=cmd_wavefunction)

    p = sub.add_parser("rerun", help="repeat the command recorded in a manifest")
    p.add_argument("manifest")
    p.set_defaults(func=cmd_rerun)
    return parser


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, argv)
    except (UsageError, ConfigurationError) as exc:
        print(f"matrixqm {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FileFormatError, DomainError, OSError) as exc:
        print(f"matrixqm {args.command}: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
