"""Command-line front end.

Subcommands: `run` (execute a .qc file or inline program), `grover`
(traced database search), `diagram` (state JSON to SVG bars), `serve`
(start the HTTP stepping service). Exit codes: 0 ok, 2 user error,
3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import diagram, dsl
from .circuit import Circuit, render_state_lines, run_all
from .errors import CapacityError, ParseError, QsimError
from .grover import GroverSpec, grover_trace, optimal_iterations
from .measure import sample_measurement

EXIT_OK = 0
EXIT_USER = 2
EXIT_CAPACITY = 3


def _common_flags(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("text", "json"), default="text", help="output format")
    p.add_argument("--seed", type=int, default=0, help="measurement sampling seed")
    p.add_argument("--shots", type=int, default=0, help="measurement shots (0 disables sampling)")
    p.add_argument("--trace", action="store_true", help="emit every intermediate stage state")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qsim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="execute a circuit description")
    run_p.add_argument("file", nargs="?", help="path to a .qc file")
    run_p.add_argument("-c", "--program", help="inline program text instead of a file")
    _common_flags(run_p)

    grover_p = sub.add_parser("grover", help="trace a database search")
    grover_p.add_argument("--k", type=int, required=True, help="data qubits (N = 2^k items)")
    grover_p.add_argument("--target", type=int, required=True, help="0-based index to search for")
    grover_p.add_argument("--iterations", type=int, default=None, help="defaults to 2 for k=2, else the optimum")
    _common_flags(grover_p)

    diagram_p = sub.add_parser("diagram", help="render a state JSON file as an SVG bar chart")
    diagram_p.add_argument("state", help="path to a state JSON file")
    diagram_p.add_argument("--out", required=True, help="output SVG path")
    diagram_p.add_argument("--real-color", default="red", help="bar color for real parts")
    diagram_p.add_argument("--imag-color", default="yellow", help="bar color for imaginary parts")

    serve_p = sub.add_parser("serve", help="start the HTTP stepping service")
    serve_p.add_argument("--host", default="127.0.0.1")
    serve_p.add_argument("--port", type=int, default=8077)
    serve_p.add_argument("--cors-origin", default=None, help="origin allowed to call the API")
    serve_p.add_argument("--session-ttl", type=float, default=3600.0, help="idle session lifetime in seconds")
    return parser


def _state_json(qubits: int, vec) -> dict:
    return {"qubits": qubits, "amplitudes": diagram.amplitudes_to_json(vec)}


def _histogram(circuit: Circuit, final_vec, seed: int, shots: int) -> dict[int, int] | None:
    if shots > 0 and circuit.measure:
        return sample_measurement(final_vec, seed, shots)
    return None


def _print_state_block(title: str, vec, qubits: int, out):
    print(f"{title}:", file=out)
    for line in render_state_lines(vec, qubits):
        print(line, file=out)


def cmd_run(args, out=None) -> int:
    out = out or sys.stdout
    if (args.file is None) == (args.program is None):
        print("run: give exactly one of FILE or --program", file=sys.stderr)
        return EXIT_USER
    text = args.program
    if text is None:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    circuit = dsl.parse(text)
    snapshots = run_all(circuit)
    n = circuit.qubit_count
    final = snapshots[-1].state.data
    hist = _histogram(circuit, final, args.seed, args.shots)

    if args.format == "json":
        payload: dict = {"qubits": n, "state": _state_json(n, final)}
        if args.trace:
            payload["snapshots"] = [
                {
                    "stage": snap.stage_index,
                    "label": circuit.stages[snap.stage_index - 1].label if snap.stage_index else None,
                    "state": _state_json(n, snap.state.data),
                }
                for snap in snapshots
            ]
        if hist is not None:
            payload["histogram"] = {str(i): c for i, c in sorted(hist.items())}
            payload["shots"] = args.shots
            payload["seed"] = args.seed
        print(json.dumps(payload), file=out)
        return EXIT_OK

    if args.trace:
        for snap in snapshots:
            title = (
                "stage 0 (initial)"
                if snap.stage_index == 0
                else f"stage {snap.stage_index} [{circuit.stages[snap.stage_index - 1].label}]"
            )
            _print_state_block(title, snap.state.data, n, out)
    _print_state_block("final state", final, n, out)
    if hist is not None:
        print(f"counts (shots={args.shots}, seed={args.seed}):", file=out)
        for i, c in sorted(hist.items()):
            print(f"|{format(i, f'0{n}b')}⟩ {c}", file=out)
    return EXIT_OK


def cmd_grover(args, out=None) -> int:
    out = out or sys.stdout
    iterations = args.iterations
    if iterations is None:
        iterations = 2 if args.k == 2 else optimal_iterations(2**args.k)
    spec = GroverSpec(args.k, args.target, iterations)
    trace = grover_trace(spec)
    circuit = trace.circuit
    n = circuit.qubit_count
    checkpoints = trace.iteration_checkpoints()
    final_p = trace.data_probabilities[-1]
    best_iter, best_p = max(checkpoints, key=lambda kv: kv[1])

    if args.format == "json":
        payload = {
            "k": spec.data_qubits,
            "target": spec.target,
            "iterations": spec.iterations,
            "stage_count": circuit.stage_count,
            "stage_labels": circuit.stage_labels,
            "state": _state_json(n, trace.snapshots[-1].state.data),
            "data_probabilities": [float(p) for p in final_p],
            "target_probability_by_iteration": [
                {"iteration": j, "stage": trace.prep_stage_count + 6 * j, "probability": p}
                for j, p in checkpoints
            ],
        }
        if args.trace:
            payload["snapshots"] = [
                {"stage": s.stage_index, "state": _state_json(n, s.state.data)}
                for s in trace.snapshots
            ]
        print(json.dumps(payload), file=out)
        return EXIT_OK

    print(
        f"grover search: k={spec.data_qubits} (N={spec.item_count}), "
        f"target={spec.target}, iterations={spec.iterations}, stages={circuit.stage_count}",
        file=out,
    )
    if args.trace:
        for snap in trace.snapshots:
            title = (
                "stage 0 (initial)"
                if snap.stage_index == 0
                else f"stage {snap.stage_index} [{circuit.stages[snap.stage_index - 1].label}]"
            )
            _print_state_block(title, snap.state.data, n, out)
    print("data-register probabilities (final):", file=out)
    for i, p in enumerate(final_p):
        print(f"|{format(i, f'0{spec.data_qubits}b')}⟩ {float(p) + 0.0!r}", file=out)
    print("target probability by iteration:", file=out)
    for j, p in checkpoints:
        print(f"  after iteration {j} (stage {trace.prep_stage_count + 6 * j}): {p!r}", file=out)
    if best_p > float(final_p[spec.target]) + 1e-12:
        print(
            f"note: the target is most likely after iteration {best_iter} "
            f"(probability {best_p:.6g}), not at the end of the circuit "
            f"(probability {float(final_p[spec.target]):.6g}).",
            file=out,
        )
    return EXIT_OK


def cmd_diagram(args, out=None) -> int:
    out = out or sys.stdout
    with open(args.state, encoding="utf-8") as fh:
        payload = json.load(fh)
    qubits, vec = diagram.state_from_json_dict(payload)
    svg = diagram.render_svg(qubits, vec, args.real_color, args.imag_color)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    print(f"wrote {args.out}", file=out)
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(session_ttl=args.session_ttl, cors_origin=args.cors_origin)
    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return cmd_run(args)
        if args.command == "grover":
            return cmd_grover(args)
        if args.command == "diagram":
            return cmd_diagram(args)
        return cmd_serve(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER
    except QsimError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER


if __name__ == "__main__":
    sys.exit(main())
