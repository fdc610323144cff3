"""Command-line surface for the walk package.

All vertex labels on this surface are 1-based; internal indices are
0-based, and the conversion lives in exactly one pair of helpers below.
Data goes to stdout (or --out), diagnostics to stderr, and the exit code
is 0 only when every assertion the subcommand makes holds.

Heavy imports happen inside the handlers so the QWALK_THREADS cap can be
applied to the BLAS thread pools before numpy first loads.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

THREAD_ENV = "QWALK_THREADS"

_BLAS_VARS = (
    "OMP_NUM_THREADS",
    "OPENBLAS_NUM_THREADS",
    "MKL_NUM_THREADS",
    "NUMEXPR_NUM_THREADS",
)


def _apply_thread_cap() -> None:
    cap = os.environ.get(THREAD_ENV)
    if cap is None or cap == "":
        return
    if not cap.isdigit() or int(cap) < 1:
        raise SystemExit(f"error: {THREAD_ENV} must be a positive integer, got {cap!r}")
    for var in _BLAS_VARS:
        os.environ.setdefault(var, cap)


def vertex_to_internal(label, n) -> int:
    """1-based CLI label to 0-based internal index."""
    if not 1 <= label <= 2 * n:
        raise ValueError(f"vertex label {label} out of range [1, {2 * n}]")
    return label - 1


def vertex_to_label(i) -> int:
    return int(i) + 1


def _clamp_tiny_negative(x, tol=1e-9) -> float:
    """Zero out negative floating-point dust in emitted probabilities."""
    x = float(x)
    if -tol < x < 0.0:
        return 0.0
    return x


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, float):
        # plain-float repr round-trips and avoids numpy scalar wrappers
        return repr(float(value))
    if isinstance(value, int):
        return str(int(value))
    return str(value)


_PROVENANCE_KEYS = (
    "n",
    "n_max",
    "n_list",
    "residue",
    "src",
    "dst",
    "start",
    "t_max",
    "T",
    "T_max",
    "T_prime",
    "steps",
    "points",
    "trials",
    "seed",
    "epsilon",
    "norm",
    "su3_cap",
    "full_matrix",
    "format",
)


def _provenance(args) -> str:
    parts = [f"# qwalk {args.command}"]
    for key in _PROVENANCE_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            parts.append(f"{key}={value}")
    return " ".join(parts)


def _config_dict(args) -> dict:
    out = {"subcommand": args.command}
    for key in _PROVENANCE_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            out[key] = value
    if getattr(args, "out", None):
        out["out"] = args.out
    return out


def _write_text(args, text) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as handle:
            handle.write(text)
        print(f"wrote {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)


def _emit_csv(args, header, rows, trailing=None) -> None:
    lines = [_provenance(args), ",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    if trailing is not None:
        lines.append(trailing)
    _write_text(args, "\n".join(lines) + "\n")


def _emit_json(args, payload) -> None:
    payload = dict(payload)
    payload.setdefault("config", _config_dict(args))
    _write_text(args, json.dumps(payload, indent=2) + "\n")


_SVG_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd")


def _svg_plot(series, title, x_label, y_label, log_x=False, log_y=False) -> str:
    """Minimal standalone polyline plot; no plotting dependency."""
    width, height, margin = 720, 460, 64

    def fx(v):
        return math.log10(v) if log_x else v

    def fy(v):
        return math.log10(v) if log_y else v

    cleaned = []
    for label, pts in series:
        keep = [(x, y) for x, y in pts if (not log_x or x > 0) and (not log_y or y > 0)]
        if keep:
            cleaned.append((label, keep))
    if not cleaned:
        raise ValueError("no plottable points after log filtering")
    xs = [fx(x) for _, pts in cleaned for x, _ in pts]
    ys = [fy(y) for _, pts in cleaned for _, y in pts]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    if x1 == x0:
        x1 = x0 + 1.0
    if y1 == y0:
        y1 = y0 + 1.0

    def sx(v):
        return margin + (fx(v) - x0) / (x1 - x0) * (width - 2 * margin)

    def sy(v):
        return height - margin - (fy(v) - y0) / (y1 - y0) * (height - 2 * margin)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<rect x="{margin}" y="{margin}" width="{width - 2 * margin}" '
        f'height="{height - 2 * margin}" fill="none" stroke="#444"/>',
        f'<text x="{width / 2:.1f}" y="24" text-anchor="middle" font-size="15">{title}</text>',
        f'<text x="{width / 2:.1f}" y="{height - 16}" text-anchor="middle" font-size="12">{x_label}</text>',
        f'<text x="18" y="{height / 2:.1f}" text-anchor="middle" font-size="12" '
        f'transform="rotate(-90 18 {height / 2:.1f})">{y_label}</text>',
        f'<text x="{margin}" y="{height - margin + 16}" font-size="11">{x0:.4g}{" (log10)" if log_x else ""}</text>',
        f'<text x="{width - margin}" y="{height - margin + 16}" text-anchor="end" font-size="11">{x1:.4g}</text>',
        f'<text x="{margin - 4}" y="{height - margin}" text-anchor="end" font-size="11">{y0:.4g}</text>',
        f'<text x="{margin - 4}" y="{margin + 10}" text-anchor="end" font-size="11">'
        f'{y1:.4g}{" (log10)" if log_y else ""}</text>',
    ]
    for idx, (label, pts) in enumerate(cleaned):
        color = _SVG_COLORS[idx % len(_SVG_COLORS)]
        coords = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in pts)
        parts.append(f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        parts.append(
            f'<text x="{margin + 8}" y="{margin + 18 + 16 * idx}" font-size="12" fill="{color}">{label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _cmd_graph(args) -> int:
    from . import dihedral

    adjacency = dihedral.semi_cayley_adjacency(args.n)
    size = 2 * args.n
    if args.format == "edges-csv":
        rows = [
            (vertex_to_label(i), vertex_to_label(j))
            for i in range(size)
            for j in range(i + 1, size)
            if adjacency[i, j]
        ]
        _emit_csv(args, ["src", "dst"], rows)
    else:
        header = [str(vertex_to_label(k)) for k in range(size)]
        _emit_csv(args, header, adjacency.tolist())
    return 0


def _cmd_spectrum(args) -> int:
    from . import spectra

    n = args.n
    rows = []
    j = 0
    for branch, tag in ((spectra.PLUS, "+"), (spectra.MINUS, "-")):
        for m in range(n):
            rows.append((j, m, tag, spectra.eigenvalue(n, m, branch)))
            j += 1
    if args.format == "json":
        _emit_json(
            args,
            {
                "n": n,
                "eigenvalues": [
                    {"j": j, "m": m, "branch": tag, "eigenvalue": val} for j, m, tag, val in rows
                ],
                "second_largest": spectra.second_largest_eigenvalue(n),
            },
        )
    else:
        _emit_csv(args, ["j", "m", "branch", "eigenvalue"], rows)
    return 0


def _cmd_walk(args) -> int:
    from . import walk

    n = args.n
    src = vertex_to_internal(args.src, n)
    dst = vertex_to_internal(args.dst, n)
    if args.t_max <= 0:
        raise ValueError(f"--t-max must be positive, got {args.t_max}")
    if args.steps < 1:
        raise ValueError(f"--steps must be at least 1, got {args.steps}")
    ts = [args.t_max * k / args.steps for k in range(args.steps + 1)]
    probs = [_clamp_tiny_negative(walk.probability(n, src, dst, t)) for t in ts]
    if args.format == "svg":
        _write_text(
            args,
            _svg_plot(
                [(f"P_t({args.src},{args.dst})", list(zip(ts, probs)))],
                f"walk transition probability, n={n}",
                "t",
                "probability",
            ),
        )
    elif args.format == "json":
        _emit_json(args, {"n": n, "t": ts, "P_t": probs})
    else:
        _emit_csv(args, ["t", "P_t"], list(zip(ts, probs)))
    return 0


def _cmd_average(args) -> int:
    from . import walk

    n = args.n
    avg = walk.averaged_matrix(n, args.T)
    if args.full_matrix:
        dense = avg.to_dense()
        header = [str(vertex_to_label(k)) for k in range(2 * n)]
        rows = [[_clamp_tiny_negative(v) for v in row] for row in dense.tolist()]
        _emit_csv(args, header, rows)
        return 0
    if args.format == "json":
        _emit_json(
            args,
            {
                "n": n,
                "T": args.T,
                "same_block": [_clamp_tiny_negative(v) for v in avg.values[0].tolist()],
                "cross_block": [_clamp_tiny_negative(v) for v in avg.values[1].tolist()],
                "distance_to_limit": avg.distance_to_limit(),
            },
        )
        return 0
    rows = []
    for eps_idx, eps in ((0, 1), (1, -1)):
        for delta in range(n):
            rows.append((delta, eps, _clamp_tiny_negative(avg.values[eps_idx, delta])))
    _emit_csv(args, ["delta", "eps", "g_value"], rows)
    return 0


def _cmd_limit(args) -> int:
    from . import walk

    pi = walk.limiting_distribution(args.n)
    _emit_json(
        args,
        {
            "n": args.n,
            "diagonal": float(pi.diagonal),
            "offdiagonal": float(pi.off_diagonal),
            "min_entry": float(pi.min_entry()),
            "row_sum": float(pi.row_sum()),
            "exact": {
                "diagonal": str(pi.diagonal),
                "offdiagonal": str(pi.off_diagonal),
                "min_entry": str(pi.min_entry()),
                "row_sum": str(pi.row_sum()),
            },
        },
    )
    return 0


def _cmd_classical(args) -> int:
    from . import classical

    n = args.n
    if args.t_max < 0:
        raise ValueError(f"--t-max must be nonnegative, got {args.t_max}")
    ts = list(range(args.t_max + 1))
    halves = []
    pair_dists = []
    for t in ts:
        profile = classical.classical_profile(n, t)
        halves.append(0.5 * float(abs(profile - 1.0 / (2 * n)).sum()))
        pair_dists.append(classical.profile_column_distance(n, profile))
    crossing = next((t for t, d in zip(ts, halves) if d <= args.epsilon), None)
    if crossing is None:
        print(f"half-induced distance stays above {args.epsilon} up to t={args.t_max}", file=sys.stderr)
    else:
        print(f"half-induced distance reaches {args.epsilon} at t={crossing}", file=sys.stderr)
    if args.format == "svg":
        _write_text(
            args,
            _svg_plot(
                [
                    ("half induced norm", list(zip(ts, halves))),
                    ("d_P", list(zip(ts, pair_dists))),
                ],
                f"classical walk distance to uniform, n={n}",
                "t (steps)",
                "distance",
            ),
        )
    else:
        _emit_csv(
            args,
            ["t", "half_induced_norm_distance", "d_P"],
            list(zip(ts, halves, pair_dists)),
        )
    return 0


def _cmd_classical_mix(args) -> int:
    from . import classical

    report = classical.classical_mixing_time(args.n, args.epsilon, args.norm)
    _emit_json(args, {"n": args.n, **report.to_dict()})
    return 0


def _cmd_mix(args) -> int:
    from . import bounds, classical, spectra

    n = args.n
    epsilon = args.epsilon if args.epsilon is not None else spectra.DEFAULT_EPSILON
    quantum = bounds.quantum_mixing_threshold(n, epsilon)
    classical_report = classical.classical_mixing_time(n, epsilon)
    lower = spectra.classical_lower_bound(n, epsilon)
    budget = bounds.budget_time(n)
    lower_ok = classical_report.threshold_time >= math.floor(lower)
    payload = {
        "n": n,
        "epsilon": epsilon,
        "quantum_threshold": quantum.threshold_time,
        "classical_mixing_time": classical_report.threshold_time,
        "classical_lower_bound": lower,
        "budget_horizon": budget,
        "speedup_ratio": classical_report.threshold_time / quantum.threshold_time,
        "lower_bound_respected": bool(lower_ok),
    }
    _emit_json(args, payload)
    return 0 if lower_ok else 1


def _cmd_bounds(args) -> int:
    from . import bounds

    report = bounds.bounds_report(args.n)
    payload = report.to_dict()
    if args.n >= 100:
        budget = bounds.budget_report(args.n)
        payload["budget"] = budget.to_dict()
        ok = report.all_passed and budget.passed and budget.analytic_passed
    else:
        ok = report.all_passed
    _emit_json(args, payload)
    return 0 if ok else 1


def _residue_matches(n, residue) -> bool:
    if residue == "both":
        return True
    return n % 4 == int(residue)


def _cmd_conjecture(args) -> int:
    from . import bounds

    if args.n_max < 5:
        raise ValueError(f"--n-max must be at least 5, got {args.n_max}")
    ns = [n for n in range(5, args.n_max + 1, 2) if _residue_matches(n, args.residue)]
    rows = []
    all_ok = True
    for n in ns:
        row = bounds.conjecture_check(n, su3_cap=args.su3_cap)
        all_ok = all_ok and row.passed
        rows.append(row)
    if args.format == "svg":
        series = [
            ("f(n)", [(row.n, row.f_value) for row in rows]),
            ("100 n^2 ln(n)^5", [(row.n, row.cap_log5) for row in rows]),
            ("100 n^2 ln(n)", [(row.n, row.cap_log1) for row in rows]),
            ("su3 raw", [(row.n, row.su3_raw) for row in rows if row.su3_raw is not None]),
        ]
        _write_text(
            args,
            _svg_plot(series, "near-resonance bound sweep", "n", "value (log10)", log_y=True),
        )
    else:
        table = [
            (
                row.n,
                row.p,
                row.su3_raw,
                row.f_value,
                row.cap_log5,
                row.cap_log1,
                row.holds_scaled,
                row.passed,
            )
            for row in rows
        ]
        _emit_csv(
            args,
            ["n", "p", "su3", "f_n", "bound_100n2ln5", "bound_100n2ln1", "holds_scaled", "pass"],
            table,
        )
    failed = [row.n for row in rows if not row.passed]
    if failed:
        print(f"conjecture check failed at n={failed[:10]}", file=sys.stderr)
    return 0 if all_ok else 1


def _cmd_sample(args) -> int:
    from . import sampling

    n = args.n
    config = sampling.SamplerConfig(
        n=n,
        start_vertex=vertex_to_internal(args.start, n),
        horizon=args.T,
        steps=args.T_prime,
        trials=args.trials,
        seed=args.seed,
    )
    hist = sampling.empirical_check(config)
    summary = {
        "tv_to_uniform": hist.tv_to_uniform,
        "stderr_envelope": hist.stderr_envelope,
    }
    if args.format == "json":
        _emit_json(
            args,
            {
                "n": n,
                "counts": hist.counts.tolist(),
                "trials": hist.trials,
                **summary,
            },
        )
        return 0
    rows = [
        (vertex_to_label(i), int(count), count / hist.trials)
        for i, count in enumerate(hist.counts)
    ]
    _emit_csv(
        args,
        ["vertex", "count", "empirical_prob"],
        rows,
        trailing="# summary " + json.dumps(summary),
    )
    return 0


def _cmd_figure_1b(args) -> int:
    from . import classical, dihedral, walk

    n = args.n
    src = vertex_to_internal(args.src, n)
    dst = vertex_to_internal(args.dst, n)
    if args.T_max <= 1:
        raise ValueError(f"--T-max must exceed 1, got {args.T_max}")
    if args.points < 2:
        raise ValueError(f"--points must be at least 2, got {args.points}")
    delta, eps = dihedral.pair_geometry(n, src, dst)
    reference = 1.0 / (2 * n)
    horizons = [10 ** (math.log10(args.T_max) * k / (args.points - 1)) for k in range(args.points)]
    quantum = [
        _clamp_tiny_negative(walk.averaged_entry(n, delta, eps, T)) for T in horizons
    ]
    steps = [round(args.t_max * k / (args.points - 1)) for k in range(args.points)]
    power_cache = {}
    classical_vals = []
    for t in steps:
        if t not in power_cache:
            power_cache[t] = float(classical.classical_power(n, t)[src, dst])
        classical_vals.append(_clamp_tiny_negative(power_cache[t]))
    if args.format == "svg":
        _write_text(
            args,
            _svg_plot(
                [
                    (f"averaged P({args.src},{args.dst}) vs T", list(zip(horizons, quantum))),
                    ("reference 1/(2n)", [(horizons[0], reference), (horizons[-1], reference)]),
                ],
                f"averaged walk convergence, n={n}",
                "T",
                "probability",
                log_x=True,
            ),
        )
        return 0
    rows = [
        (horizons[k], quantum[k], steps[k], classical_vals[k], reference)
        for k in range(args.points)
    ]
    _emit_csv(args, ["T", "quantum_avg", "t", "classical", "reference"], rows)
    return 0


def _cmd_speedup(args) -> int:
    from . import bounds, classical, spectra

    try:
        ns = [int(tok) for tok in args.n_list.split(",") if tok.strip()]
    except ValueError as exc:
        raise ValueError(f"--n-list must be comma-separated integers, got {args.n_list!r}") from exc
    if not ns:
        raise ValueError("--n-list is empty")
    epsilon = args.epsilon if args.epsilon is not None else spectra.DEFAULT_EPSILON
    rows = []
    all_ok = True
    for n in ns:
        quantum = bounds.quantum_mixing_threshold(n, epsilon)
        classical_report = classical.classical_mixing_time(n, epsilon)
        lower = spectra.classical_lower_bound(n, epsilon)
        budget = bounds.budget_time(n)
        ok = classical_report.threshold_time >= math.floor(lower)
        all_ok = all_ok and ok
        rows.append(
            (
                n,
                classical_report.threshold_time,
                lower,
                quantum.threshold_time,
                budget,
                classical_report.threshold_time / quantum.threshold_time,
            )
        )
        print(f"n={n}: classical {classical_report.threshold_time}, quantum {quantum.threshold_time}", file=sys.stderr)
    header = ["n", "classical_tau", "classical_lower_bound", "quantum_T_star", "budget_horizon", "ratio"]
    if args.format == "json":
        _emit_json(args, {"rows": [dict(zip(header, row)) for row in rows]})
    else:
        _emit_csv(args, header, rows)
    return 0 if all_ok else 1


def _add_output_flags(parser, formats, default) -> None:
    parser.add_argument("--format", choices=formats, default=default, help="output format")
    parser.add_argument("--out", help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwalk",
        description="continuous-time walk on dihedral Cayley graphs: dynamics, mixing bounds, sampling",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="emit the 3-regular graph")
    p.add_argument("--n", type=int, required=True)
    _add_output_flags(p, ["edges-csv", "matrix-csv"], "edges-csv")
    p.set_defaults(handler=_cmd_graph)

    p = sub.add_parser("spectrum", help="all 2n eigenvalues with branch labels")
    p.add_argument("--n", type=int, required=True)
    _add_output_flags(p, ["csv", "json"], "csv")
    p.set_defaults(handler=_cmd_spectrum)

    p = sub.add_parser("walk", help="transition probability over a time grid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--from", dest="src", type=int, default=1, help="1-based source vertex")
    p.add_argument("--to", dest="dst", type=int, default=2, help="1-based target vertex")
    p.add_argument("--t-max", type=float, default=30.0)
    p.add_argument("--steps", type=int, default=300, help="grid intervals between 0 and t-max")
    _add_output_flags(p, ["csv", "json", "svg"], "csv")
    p.set_defaults(handler=_cmd_walk)

    p = sub.add_parser("average", help="time-averaged transition values at horizon T")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--T", type=float, required=True, help="averaging horizon")
    p.add_argument("--full-matrix", action="store_true", help="emit the dense matrix instead of the value profile")
    _add_output_flags(p, ["csv", "json"], "csv")
    p.set_defaults(handler=_cmd_average)

    p = sub.add_parser("limit", help="exact limiting distribution")
    p.add_argument("--n", type=int, required=True)
    _add_output_flags(p, ["json"], "json")
    p.set_defaults(handler=_cmd_limit)

    p = sub.add_parser("classical", help="classical distance-to-uniform series")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t-max", type=int, default=100)
    p.add_argument("--epsilon", type=float, default=1.0 / (2.0 * math.e))
    _add_output_flags(p, ["csv", "svg"], "csv")
    p.set_defaults(handler=_cmd_classical)

    p = sub.add_parser("classical-mix", help="measured classical mixing time")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--epsilon", type=float, default=None)
    p.add_argument("--norm", choices=["half_induced", "column_pairs"], default="half_induced")
    _add_output_flags(p, ["json"], "json")
    p.set_defaults(handler=_cmd_classical_mix)

    p = sub.add_parser("mix", help="quantum vs classical mixing thresholds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--epsilon", type=float, default=None)
    _add_output_flags(p, ["json"], "json")
    p.set_defaults(handler=_cmd_mix)

    p = sub.add_parser("bounds", help="gap sums, decomposition identity, analytic caps")
    p.add_argument("--n", type=int, required=True)
    _add_output_flags(p, ["json"], "json")
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("conjecture", help="near-resonance bound sweep")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--residue", choices=["1", "3", "both"], default="both", help="restrict to n = 4p+1 or 4p+3")
    p.add_argument("--su3-cap", type=int, default=2001, help="largest n for which the quadrant sum is enumerated")
    _add_output_flags(p, ["csv", "svg"], "csv")
    p.set_defaults(handler=_cmd_conjecture)

    p = sub.add_parser("sample", help="measured-walk endpoint histogram")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--start", type=int, default=1, help="1-based start vertex")
    p.add_argument("--T", type=float, required=True, help="measurement window")
    p.add_argument("--T-prime", type=int, required=True, help="measured steps per trial")
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    _add_output_flags(p, ["csv", "json"], "csv")
    p.set_defaults(handler=_cmd_sample)

    p = sub.add_parser("figure-1b", help="averaged-entry convergence dataset")
    p.add_argument("--n", type=int, default=101)
    p.add_argument("--from", dest="src", type=int, default=1, help="1-based source vertex")
    p.add_argument("--to", dest="dst", type=int, default=15, help="1-based target vertex")
    p.add_argument("--T-max", type=float, default=1e6)
    p.add_argument("--t-max", type=int, default=200)
    p.add_argument("--points", type=int, default=41)
    _add_output_flags(p, ["csv", "svg"], "csv")
    p.set_defaults(handler=_cmd_figure_1b)

    p = sub.add_parser("speedup", help="classical vs quantum mixing table")
    p.add_argument("--n-list", required=True, help="comma-separated odd n values")
    p.add_argument("--epsilon", type=float, default=None)
    _add_output_flags(p, ["csv", "json"], "csv")
    p.set_defaults(handler=_cmd_speedup)

    return parser


def main(argv=None) -> int:
    _apply_thread_cap()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return int(args.handler(args))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
