"""Command-line front end: ``jugglestate <command> ...``.

Exit codes: 0 success, 1 bad user input (or an invalid pattern for
``validate``), 2 a computation that could not be completed.
"""

from __future__ import annotations

import argparse
import sys

from . import export
from .combine import combine
from .errors import ComputationError, InputError
from .poi import (
    GROUND_LEFT_UP,
    build_poi_graph,
    find_entry,
    parse_poi_state,
    parse_word,
    poi_kernel,
    run_word,
    weave_starts,
)
from .random_walk import (
    load_kernel,
    sample_walk,
    empirical_frequencies,
    stationary_exact,
    stationary_numeric,
    total_variation,
    uniform_kernel,
    warrington_distribution,
)
from .siteswap import as_pattern, parse_siteswap, validate
from .toss import (
    build_state_graph,
    find_transition,
    ground_state,
    parse_state,
    pattern_states,
)


def _emit_graph(graph, fmt, out):
    out.write(export.export_dot(graph) if fmt == "dot" else export.graph_to_json(graph))


def cmd_validate(args, out):
    pattern = parse_siteswap(args.pattern)
    report = validate(pattern)
    if report.valid:
        out.write(f"{pattern}: valid, {report.particle_count} particles, period {pattern.period}\n")
        return 0
    pairs = ", ".join(f"({i}, {j})" for i, j in report.collisions)
    out.write(f"{pattern}: invalid, colliding beats {pairs}\n")
    return 1


def cmd_states(args, out):
    pattern = parse_siteswap(args.pattern)
    states = pattern_states(pattern, args.max_throw)
    if args.format == "json":
        doc = {
            "schema_version": export.SCHEMA_VERSION,
            "pattern": str(pattern),
            "m": states[0].capacity,
            "states": [s.id for s in states],
            "throws": list(pattern.throws),
        }
        out.write(export.to_json(doc))
        return 0
    parts = [f"{s} →{export.label_text(t)}→" for s, t in zip(states, pattern.throws)]
    out.write(" ".join(parts) + "\n")
    return 0


def cmd_graph(args, out):
    _emit_graph(build_state_graph(args.balls, args.max_throw), args.format, out)
    return 0


def _toss_kernel(args):
    graph = build_state_graph(args.balls, args.max_throw)
    if args.kernel:
        return load_kernel(args.kernel, graph)
    return uniform_kernel(graph)


def _write_distribution(dist, fmt, out):
    if fmt == "json":
        out.write(export.to_json(export.distribution_to_dict(dist)))
    else:
        out.write(export.distribution_table(dist))


def cmd_stationary(args, out):
    method = args.method
    if method == "formula":
        if args.kernel:
            raise InputError("--method formula only applies to the uniform kernel")
        dist = warrington_distribution(args.balls, args.max_throw)
    else:
        kernel = _toss_kernel(args)
        if method == "exact":
            dist = stationary_exact(kernel)
        else:
            dist = stationary_numeric(kernel, args.tolerance, args.max_iterations)
    _write_distribution(dist, args.format, out)
    return 0


def cmd_walk(args, out):
    kernel = _toss_kernel(args)
    start = parse_state(args.start, args.max_throw) if args.start else ground_state(args.balls, args.max_throw)
    trace = sample_walk(kernel, start, args.steps, args.seed)
    freqs = empirical_frequencies(trace)
    exact = stationary_exact(kernel)
    tv = total_variation(freqs, exact)
    if args.format == "json":
        doc = export.trace_to_dict(trace, include_steps=args.include_steps)
        doc["frequencies"] = export.distribution_to_dict(freqs)["weights"]
        doc["tv_distance"] = tv
        out.write(export.to_json(doc))
        return 0
    out.write(f"# rng: {trace.rng}; seed {trace.seed}; {len(trace)} steps from {start}\n")
    for node in kernel.graph.nodes:
        f = float(freqs.weights.get(node, 0))
        out.write(f"{node.id} → {f:.6f} (exact {export.format_weight(exact[node])})\n")
    out.write(f"tv_distance: {tv:.6f}\n")
    return 0


def cmd_transition(args, out):
    src = parse_state(args.source, args.max_throw)
    dst = parse_state(args.to, args.max_throw)
    for s in (src, dst):
        if s.k != args.balls:
            raise InputError(f"state {s} does not hold {args.balls} particles")
    throws = find_transition(src, dst)
    text = "".join(export.label_text(t) for t in throws)
    out.write(f"{src} → {dst}: {text or '(none)'} ({len(throws)} throws)\n")
    return 0


def cmd_poi_graph(args, out):
    _emit_graph(build_poi_graph(), args.format, out)
    return 0


def cmd_poi_run(args, out):
    word = parse_word(args.word)
    start = parse_poi_state(args.start) if args.start else GROUND_LEFT_UP
    final, trajectory = run_word(start, word)
    out.write(f"{start}\n")
    for label, state in zip(word, trajectory):
        out.write(f"  -{label}-> {state}\n")
    out.write(f"final: {final}{' (ground)' if final.is_ground else ''}; closes: {final == start}\n")
    return 0


def cmd_poi_entry(args, out):
    word = parse_word(args.word)
    entry = find_entry(word)
    if not entry:
        out.write(f"{word}: cycle contains a ground state; entry length 0\n")
    else:
        out.write(f"{word}: entry ({entry}), length {len(entry)}; cycle states: "
                  f"{', '.join(s.id for s in weave_starts(word))}\n")
    return 0


def cmd_poi_stationary(args, out):
    dist = stationary_exact(poi_kernel(args.p_r))
    _write_distribution(dist, args.format, out)
    return 0


def cmd_combine(args, out):
    pattern = as_pattern(args.pattern)
    combined = combine(pattern, args.word, args.max_throw)
    if args.format == "json":
        out.write(export.to_json(export.timeline_to_dict(combined)))
        return 0
    out.write(f"# {combined.toss} with {combined.spin}: notation period "
              f"{combined.notation_period}, full period {combined.full_period}, "
              f"poi start {combined.poi_start}\n")
    out.write("beat\tthrow\tmove\ttoss state\tpoi state\n")
    for r in combined.timeline:
        out.write(f"{r.beat}\t{export.label_text(r.throw)}\t{r.label}\t{r.toss_state}\t{r.poi_state}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jugglestate", description="Toss and spin juggling state graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a siteswap")
    p.add_argument("pattern")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("states", help="state cycle of a siteswap")
    p.add_argument("pattern")
    p.add_argument("--max-throw", type=int)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_states)

    def toss_params(p):
        p.add_argument("--balls", type=int, required=True)
        p.add_argument("--max-throw", type=int, required=True)

    p = sub.add_parser("graph", help="full toss state graph")
    toss_params(p)
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("stationary", help="stationary distribution")
    toss_params(p)
    p.add_argument("--kernel", help="JSON file of per-state throw probabilities")
    p.add_argument("--method", choices=["formula", "exact", "numeric"], default="exact")
    p.add_argument("--tolerance", type=float, default=1e-12)
    p.add_argument("--max-iterations", type=int, default=100_000)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_stationary)

    p = sub.add_parser("walk", help="seeded random walk")
    toss_params(p)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--kernel")
    p.add_argument("--start", help="start state, default ground")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--include-steps", action="store_true", help="json: list every step")
    p.set_defaults(func=cmd_walk)

    p = sub.add_parser("transition", help="shortest throw sequence between states")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", required=True)
    toss_params(p)
    p.set_defaults(func=cmd_transition)

    poi = sub.add_parser("poi", help="poi spin graph").add_subparsers(dest="poi_command", required=True)
    p = poi.add_parser("graph")
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(func=cmd_poi_graph)
    p = poi.add_parser("run")
    p.add_argument("--word", required=True)
    p.add_argument("--start")
    p.set_defaults(func=cmd_poi_run)
    p = poi.add_parser("entry")
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_poi_entry)
    p = poi.add_parser("stationary")
    p.add_argument("--p-r", required=True, help="probability of an R move, e.g. 0.3 or 1/3")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_poi_stationary)

    p = sub.add_parser("combine", help="siteswap with a poi word layered on")
    p.add_argument("pattern")
    p.add_argument("--word", required=True)
    p.add_argument("--max-throw", type=int)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_combine)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse usage errors are input errors
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args, out)
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return 1
    except ComputationError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
