"""Command-line interface.

Twelve subcommands cover the full workflow: ``simulate`` writes
synthetic observation CSVs, ``ingest`` validates and normalizes raw
CSVs, ``project``/``reduce`` produce and merge frequency signatures,
``xcorr`` runs the full correlogram pipeline, ``hurst`` estimates
memory exponents, ``baseline`` runs the LOCF and overlap-interval
estimators, ``llr``/``band`` post-process correlogram CSVs, and
``table1``/``variance-study``/``cost-report`` reproduce the headline
experiments.

Exit codes: 0 success, 2 configuration error, 3 data error,
4 numerical failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

import numpy as np

from . import __version__
from ._backend import BACKEND
from .baselines import (
    first_differences,
    hy_lagged_correlogram,
    locf_llr_experiment,
    locf_resample,
    regular_xcov,
)
from .causal import DEFAULT_THETA, llr, percentile_band
from .config import ExperimentConfig
from .core import (
    CrossCorrelogram,
    FrequencyGrid,
    IrregularSeries,
    LagGrid,
    demean,
    read_series_csv,
    write_series_csv,
)
from .errors import (
    CliUsageError,
    ConfigError,
    CsvFormatError,
    DataError,
    GridMismatchError,
    NumericalError,
)
from .experiments import variance_study
from .lrd import DEFAULT_LOW_FRACTION, estimate_hurst
from .parallel import cost_report, partitioned_projection, reduce_all, worker_project
from .pipeline import aliasing_warning_needed, fourier_correlogram
from .spectral import auto_spectrum, project, read_signature, write_signature
from .synth import CausalKernel, kernel_pair, lagged_pair, sample_irregular, trial_seed

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DATA = 3
EXIT_NUMERICAL = 4


def _default_threads() -> int:
    raw = os.environ.get("XCAUSAL_THREADS", "").strip()
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise CliUsageError(f"XCAUSAL_THREADS must be an integer, got {raw!r}")
    if n < 1:
        raise CliUsageError(f"XCAUSAL_THREADS must be >= 1, got {n}")
    return n


def _label_for(path: str) -> str:
    base = os.path.basename(path)
    stem = base.rsplit(".", 1)[0] if "." in base else base
    return stem or base


def _read_inputs(paths: Sequence[str], drop_bad_rows: bool = False) -> list[IrregularSeries]:
    """Read observation CSVs, labeling each by file stem (deduplicated)."""
    seen: dict[str, int] = {}
    out = []
    for path in paths:
        label = _label_for(path)
        count = seen.get(label, 0) + 1
        seen[label] = count
        if count > 1:
            label = f"{label}_{count}"
        out.append(read_series_csv(path, label=label, drop_bad_rows=drop_bad_rows))
    return out


def _write_correlogram(stream, corr: CrossCorrelogram) -> None:
    stream.write("lag,rho\n")
    lags = corr.lag_grid.lags()
    for h, r in zip(lags, corr.rho):
        stream.write(f"{float(h)!r},{float(r)!r}\n")


def _save_correlogram(path: str, corr: CrossCorrelogram) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        _write_correlogram(fh, corr)


def _read_correlogram(path: str) -> CrossCorrelogram:
    """Parse a lag,rho CSV back into a correlogram.

    The lag column must form a uniform symmetric grid -h*L..+h*L; that
    is what every correlogram-producing subcommand writes.
    """
    lags = []
    rhos = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            parts = line.split(",")
            if len(parts) != 2:
                raise CsvFormatError(f"{path}: line {lineno}: expected 2 columns")
            if lineno == 1:
                try:
                    float(parts[0])
                except ValueError:
                    continue  # header row
            try:
                lags.append(float(parts[0]))
                rhos.append(float(parts[1]))
            except ValueError:
                raise CsvFormatError(f"{path}: line {lineno}: non-numeric field")
    n = len(lags)
    if n < 3 or n % 2 == 0:
        raise CsvFormatError(f"{path}: expected an odd number (>=3) of lag rows, got {n}")
    lag_arr = np.asarray(lags)
    steps = np.diff(lag_arr)
    step = steps[0]
    if step <= 0 or not np.allclose(steps, step, rtol=1e-9, atol=0.0):
        raise CsvFormatError(f"{path}: lag column is not a uniform increasing grid")
    half = n // 2
    if abs(lag_arr[half]) > 1e-9 * step:
        raise CsvFormatError(f"{path}: lag grid is not centered on zero")
    grid = LagGrid(delta_h=float(step), half_count=half)
    return CrossCorrelogram(lag_grid=grid, rho=np.asarray(rhos), imag_residual=0.0)


def _parse_float_list(text: str, flag: str) -> list[float]:
    out = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        try:
            out.append(float(piece))
        except ValueError:
            raise CliUsageError(f"{flag}: could not parse {piece!r} as a number")
    if not out:
        raise CliUsageError(f"{flag}: empty list")
    return out


def _parse_int_list(text: str, flag: str) -> list[int]:
    vals = _parse_float_list(text, flag)
    out = []
    for v in vals:
        if v != int(v) or v < 1:
            raise CliUsageError(f"{flag}: expected positive integers, got {v}")
        out.append(int(v))
    return out


def _load_config(args) -> ExperimentConfig:
    """Build the effective config: flag overrides > config file > defaults."""
    cfg = ExperimentConfig.from_file(args.config) if getattr(args, "config", None) else ExperimentConfig()
    for field in (
        "seed", "trials", "n_obs_x", "n_obs_y", "span", "fine_exponent",
        "hurst", "rho", "tau", "kernel_alpha", "kernel_beta", "noise_scale",
        "projections", "delta_f", "delta_h", "half_count", "pipeline",
        "workers", "theta", "smooth", "low_fraction",
    ):
        value = getattr(args, field, None)
        if value is not None:
            setattr(cfg, field, value)
    cfg.validate()
    return cfg


def _frequency_grid(series: Sequence[IrregularSeries], projections: int, delta_f: float) -> FrequencyGrid:
    if delta_f > 0.0:
        return FrequencyGrid(delta_f=delta_f, count=projections)
    start = min(float(s.timestamps[0]) for s in series)
    end = max(float(s.timestamps[-1]) for s in series)
    return FrequencyGrid.for_span(end - start, projections)


def _gnuplot_lines(out_path: str, csv_paths: Sequence[str], ylabel: str, columns: str = "1:2") -> None:
    lines = [
        "set datafile separator ','",
        "set key outside",
        "set xlabel 'lag'",
        f"set ylabel '{ylabel}'",
        "set grid",
    ]
    plots = []
    for p in csv_paths:
        title = _label_for(p)
        plots.append(f"'{p}' every ::1 using {columns} with lines title '{title}'")
    lines.append("plot " + ", \\\n     ".join(plots))
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


# ---------------------------------------------------------------- simulate


def cmd_simulate(args) -> int:
    cfg = _load_config(args)
    out_dir = args.out
    os.makedirs(out_dir, exist_ok=True)
    step = cfg.span / (2 ** cfg.fine_exponent)
    meta_lines = [cfg.to_text().rstrip("\n"), ""]
    written = 0
    for trial in range(cfg.trials):
        root = np.random.SeedSequence(trial_seed(cfg.seed, trial))
        pair_seed, sample_x, sample_y = root.spawn(3)
        if cfg.kernel_beta > 0.0 or cfg.kernel_alpha > 0.0:
            kernel = CausalKernel(tau=cfg.tau, alpha=cfg.kernel_alpha, beta=cfg.kernel_beta)
            pair = kernel_pair(
                kernel,
                n=2 ** cfg.fine_exponent,
                step=step,
                seed=pair_seed,
                noise_scale=cfg.noise_scale,
            )
        else:
            pair = lagged_pair(
                n=2 ** cfg.fine_exponent,
                step=step,
                hurst=cfg.hurst,
                rho=cfg.rho,
                tau=cfg.tau,
                seed=pair_seed,
            )
        x = sample_irregular(pair.x, cfg.n_obs_x, seed=sample_x, label=f"x_{trial:03d}")
        y = sample_irregular(pair.y, cfg.n_obs_y, seed=sample_y, label=f"y_{trial:03d}")
        write_series_csv(os.path.join(out_dir, f"x_{trial:03d}.csv"), x)
        write_series_csv(os.path.join(out_dir, f"y_{trial:03d}.csv"), y)
        meta_lines.append(f"trial_{trial:03d}_seed = {trial_seed(cfg.seed, trial)}")
        written += 2
    with open(os.path.join(out_dir, "meta.txt"), "w", encoding="utf-8") as fh:
        fh.write("\n".join(meta_lines) + "\n")
    print(f"wrote {written} series files to {out_dir}")
    return EXIT_OK


# ------------------------------------------------------------------ ingest


def cmd_ingest(args) -> int:
    series = _read_inputs(args.inputs, drop_bad_rows=args.drop_bad_rows)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
    for s in series:
        print(f"label = {s.label}")
        print(f"n_obs = {s.n_obs}")
        print(f"t_first = {float(s.timestamps[0])!r}")
        print(f"t_last = {float(s.timestamps[-1])!r}")
        print(f"span = {float(s.span)!r}")
        print(f"mean_gap = {float(s.mean_gap)!r}")
        print(f"value_sum = {float(np.sum(s.values))!r}")
        print(f"value_mean = {float(np.mean(s.values))!r}")
        print()
        if args.out:
            write_series_csv(os.path.join(args.out, f"{s.label}.csv"), s)
    if args.out:
        print(f"wrote {len(series)} normalized files to {args.out}")
    return EXIT_OK


# ----------------------------------------------------------------- project


def cmd_project(args) -> int:
    threads = args.threads if args.threads is not None else _default_threads()
    if args.partial and args.global_mean is None:
        raise CliUsageError("--partial requires --global-mean (shards cannot be centered locally)")
    series = _read_inputs(args.inputs)
    grid = _frequency_grid(series, args.projections, args.delta_f)
    os.makedirs(args.out, exist_ok=True)
    for s in series:
        if args.partial:
            proj = worker_project(s, grid, global_mean=args.global_mean)
        elif args.workers > 1:
            proj = partitioned_projection(s, grid, workers=args.workers, threads=threads, seed=args.seed)
        else:
            proj = project(demean(s), grid)
        path = os.path.join(args.out, f"{s.label}.sig")
        write_signature(path, proj)
        print(f"{s.label}: n_obs={proj.n_obs} projections={grid.count} -> {path}")
    print(f"backend = {BACKEND}")
    print(f"delta_f = {grid.delta_f!r}")
    return EXIT_OK


# ------------------------------------------------------------------ reduce


def cmd_reduce(args) -> int:
    parts = [read_signature(p) for p in args.inputs]
    merged = reduce_all(parts)
    write_signature(args.out, merged)
    print(f"merged {len(parts)} partials: label={merged.label} n_obs={merged.n_obs} -> {args.out}")
    return EXIT_OK


# ------------------------------------------------------------------- xcorr


def cmd_xcorr(args) -> int:
    cfg = _load_config(args)
    series = _read_inputs(args.inputs, drop_bad_rows=args.drop_bad_rows)
    if len(series) < 2:
        raise CliUsageError("xcorr needs at least two input series")
    grid = _frequency_grid(series, cfg.projections, cfg.delta_f)
    lag_grid = LagGrid(delta_h=cfg.resolved_delta_h(), half_count=cfg.half_count)
    erase = cfg.pipeline == "fourier+lrd" or args.erase_lrd
    alphas = None
    if args.alpha is not None:
        if erase:
            raise CliUsageError("--alpha and LRD erasure are mutually exclusive")
        alphas = (args.alpha, args.alpha)
    os.makedirs(args.out, exist_ok=True)
    written = []
    for i, sx in enumerate(series):
        for j, sy in enumerate(series):
            if i == j:
                continue
            if aliasing_warning_needed(sx, sy, lag_grid):
                print(
                    f"warning: lag step {lag_grid.delta_h!r} is below half the mean "
                    f"observation gap of pair ({sx.label}, {sy.label}); "
                    "fine-lag values may alias",
                    file=sys.stderr,
                )
            result = fourier_correlogram(
                sx,
                sy,
                grid,
                lag_grid,
                erase_lrd=erase,
                alphas=alphas,
                smooth_half_width=cfg.smooth,
                low_fraction=cfg.low_fraction,
            )
            corr = result.correlogram
            base = f"xcorr_{sx.label}__{sy.label}"
            csv_path = os.path.join(args.out, base + ".csv")
            _save_correlogram(csv_path, corr)
            meta = [f"imag_residual = {float(corr.imag_residual)!r}"]
            if result.hurst_x is not None:
                meta.append(f"hurst_x = {float(result.hurst_x.hurst)!r}")
                meta.append(f"hurst_y = {float(result.hurst_y.hurst)!r}")
                meta.append(f"flatness_x = {float(result.flatness_x)!r}")
                meta.append(f"flatness_y = {float(result.flatness_y)!r}")
            with open(os.path.join(args.out, base + ".meta.txt"), "w", encoding="utf-8") as fh:
                fh.write("\n".join(meta) + "\n")
            peak = llr(corr, theta=cfg.theta)
            print(
                f"{sx.label} -> {sy.label}: llr={peak.llr:.4g} delay={float(peak.delay)!r} "
                f"peak_rho={peak.peak_rho:.4g} direction={peak.direction} "
                f"imag_residual={corr.imag_residual:.3g}"
            )
            written.append(csv_path)
    if args.gnuplot:
        _gnuplot_lines(os.path.join(args.out, "xcorr.gp"), written, ylabel="rho")
        print(f"gnuplot script: {os.path.join(args.out, 'xcorr.gp')}")
    return EXIT_OK


# ------------------------------------------------------------------- hurst


def cmd_hurst(args) -> int:
    series = _read_inputs(args.inputs)
    print("label,hurst,slope,stderr,n_freqs_used,clipped")
    for s in series:
        grid = _frequency_grid([s], args.projections, args.delta_f)
        proj = project(demean(s), grid)
        est = estimate_hurst(auto_spectrum(proj), low_fraction=args.low_fraction)
        print(
            f"{s.label},{float(est.hurst)!r},{float(est.slope)!r},{float(est.stderr)!r},"
            f"{est.n_freqs_used},{int(est.clipped)}"
        )
    return EXIT_OK


# ---------------------------------------------------------------- baseline


def cmd_baseline(args) -> int:
    series = _read_inputs(args.inputs, drop_bad_rows=args.drop_bad_rows)
    if len(series) != 2:
        raise CliUsageError("baseline needs exactly two input series")
    x, y = series
    if args.method == "locf":
        start = max(x.timestamps[0], y.timestamps[0])
        end = min(x.timestamps[-1], y.timestamps[-1])
        if end <= start:
            raise GridMismatchError("series do not overlap in time")
        step = args.grid_step
        if step <= 0.0:
            step = min(x.mean_gap, y.mean_gap)
        count = int((end - start) / step) + 1
        if count < 4:
            raise CliUsageError("LOCF grid has fewer than 4 points; reduce --grid-step")
        rx = first_differences(locf_resample(x, start, step, count))
        ry = first_differences(locf_resample(y, start, step, count))
        max_lag = args.half_count
        corr = regular_xcov(rx, ry, max_lag_steps=max_lag)
    else:
        delta_h = args.delta_h
        if delta_h <= 0.0:
            delta_h = min(x.mean_gap, y.mean_gap)
        lag_grid = LagGrid(delta_h=delta_h, half_count=args.half_count)
        corr = hy_lagged_correlogram(x, y, lag_grid)
    if args.out:
        _save_correlogram(args.out, corr)
        print(f"wrote {args.out}")
    else:
        _write_correlogram(sys.stdout, corr)
    return EXIT_OK


# --------------------------------------------------------------------- llr


def cmd_llr(args) -> int:
    print("label,llr,delay,peak_rho,direction,n_pos,n_neg")
    for path in args.inputs:
        corr = _read_correlogram(path)
        res = llr(corr, theta=args.theta)
        llr_text = "inf" if res.llr == float("inf") else repr(res.llr)
        print(
            f"{_label_for(path)},{llr_text},{float(res.delay)!r},{float(res.peak_rho)!r},"
            f"{res.direction},{res.n_pos},{res.n_neg}"
        )
    return EXIT_OK


# -------------------------------------------------------------------- band


def cmd_band(args) -> int:
    correlograms = [_read_correlogram(p) for p in args.inputs]
    band = percentile_band(correlograms, min_trials=args.min_trials)
    stream = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        stream.write("lag,p05,p50,p95\n")
        for h, lo, mid, hi in zip(band.lag_grid.lags(), band.p05, band.p50, band.p95):
            stream.write(f"{float(h)!r},{float(lo)!r},{float(mid)!r},{float(hi)!r}\n")
    finally:
        if args.out:
            stream.close()
    if args.out and args.gnuplot:
        gp = args.out + ".gp"
        with open(gp, "w", encoding="utf-8") as fh:
            fh.write(
                "set datafile separator ','\n"
                "set xlabel 'lag'\nset ylabel 'rho'\nset grid\n"
                f"plot '{args.out}' every ::1 using 1:2:4 with filledcurves "
                "fs transparent solid 0.3 title '5-95%', \\\n"
                f"     '{args.out}' every ::1 using 1:3 with lines title 'median'\n"
            )
        print(f"gnuplot script: {gp}", file=sys.stderr)
    return EXIT_OK


# ------------------------------------------------------------------ table1


def cmd_table1(args) -> int:
    ratios = _parse_float_list(args.ratios, "--ratios")
    print("ratio,method,mean_llr,std_llr,trials")
    for ratio in ratios:
        summary = locf_llr_experiment(
            ratio=ratio,
            trials=args.trials,
            projections=args.projections,
            n1=args.n1,
            rho=args.rho,
            lag_steps=args.lag_steps,
            seed=args.seed,
        )
        print(f"{ratio!r},locf,{summary.locf_mean!r},{summary.locf_std!r},{args.trials}")
        print(f"{ratio!r},fourier,{summary.fourier_mean!r},{summary.fourier_std!r},{args.trials}")
    return EXIT_OK


# ---------------------------------------------------------- variance-study


def cmd_variance_study(args) -> int:
    p_list = _parse_int_list(args.projections_list, "--projections-list")
    lag_grid, stds = variance_study(
        projections_list=tuple(p_list),
        trials=args.trials,
        n_obs=args.n_obs,
        half_count=args.half_count,
        seed=args.seed,
    )
    stream = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        stream.write("projections,lag,std\n")
        for p in p_list:
            for h, s in zip(lag_grid.lags(), stds[p]):
                stream.write(f"{p},{float(h)!r},{float(s)!r}\n")
    finally:
        if args.out:
            stream.close()
    return EXIT_OK


# ------------------------------------------------------------- cost-report


def cmd_cost_report(args) -> int:
    labels = None
    if args.labels:
        labels = [piece.strip() for piece in args.labels.split(",") if piece.strip()]
    ledger = cost_report(
        series_count=args.series_count,
        projections=args.projections,
        obs_per_series=args.obs,
        workers=args.workers,
        labels=labels,
    )
    for line in ledger.lines():
        print(line)
    return EXIT_OK


# ------------------------------------------------------------------ parser


def _add_config_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="experiment config file (key = value lines)")
    g = p.add_argument_group("config overrides")
    g.add_argument("--seed", type=int)
    g.add_argument("--trials", type=int)
    g.add_argument("--n-obs-x", dest="n_obs_x", type=int)
    g.add_argument("--n-obs-y", dest="n_obs_y", type=int)
    g.add_argument("--span", type=float)
    g.add_argument("--fine-exponent", dest="fine_exponent", type=int)
    g.add_argument("--hurst", type=float)
    g.add_argument("--rho", type=float)
    g.add_argument("--tau", type=float)
    g.add_argument("--kernel-alpha", dest="kernel_alpha", type=float)
    g.add_argument("--kernel-beta", dest="kernel_beta", type=float)
    g.add_argument("--noise-scale", dest="noise_scale", type=float)
    g.add_argument("--projections", type=int)
    g.add_argument("--delta-f", dest="delta_f", type=float)
    g.add_argument("--delta-h", dest="delta_h", type=float)
    g.add_argument("--half-count", dest="half_count", type=int)
    g.add_argument("--pipeline", choices=("fourier", "fourier+lrd", "locf", "hy"))
    g.add_argument("--workers", type=int)
    g.add_argument("--theta", type=float)
    g.add_argument("--smooth", type=int)
    g.add_argument("--low-fraction", dest="low_fraction", type=float)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xcausal",
        description="Lead-lag causal inference for irregularly sampled long-memory series.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="generate synthetic observation CSVs")
    _add_config_flags(p)
    p.add_argument("--out", default="sim_out", help="output directory")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("ingest", help="validate, sort and summarize observation CSVs")
    p.add_argument("inputs", nargs="+", help="observation CSV files (time,value)")
    p.add_argument("--drop-bad-rows", action="store_true", help="skip malformed rows instead of failing")
    p.add_argument("--out", help="directory for normalized copies")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("project", help="project series onto the frequency grid, write signatures")
    p.add_argument("inputs", nargs="+", help="observation CSV files")
    p.add_argument("--projections", type=int, default=1000)
    p.add_argument("--delta-f", dest="delta_f", type=float, default=0.0,
                   help="frequency step (default: 2*pi / joint span)")
    p.add_argument("--workers", type=int, default=1, help="partition each series across k workers")
    p.add_argument("--threads", type=int, default=None,
                   help="thread bound for worker projections (default: XCAUSAL_THREADS or 1)")
    p.add_argument("--seed", type=int, default=None, help="shuffle observations before partitioning")
    p.add_argument("--partial", action="store_true",
                   help="treat each input as one shard of a larger series")
    p.add_argument("--global-mean", dest="global_mean", type=float, default=None,
                   help="global series mean used to center shard values (required with --partial)")
    p.add_argument("--out", default="signatures", help="output directory for .sig files")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("reduce", help="merge partial signatures of one series")
    p.add_argument("inputs", nargs="+", help="partial .sig files with matching label and grid")
    p.add_argument("--out", required=True, help="merged .sig path")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("xcorr", help="cross-correlograms for every ordered pair of inputs")
    _add_config_flags(p)
    p.add_argument("inputs", nargs="+", help="observation CSV files (two or more)")
    p.add_argument("--erase-lrd", dest="erase_lrd", action="store_true",
                   help="estimate memory exponents and whiten before inverting")
    p.add_argument("--alpha", type=float, default=None,
                   help="fixed pole-elimination order applied to both series")
    p.add_argument("--drop-bad-rows", action="store_true")
    p.add_argument("--out", default="xcorr_out", help="output directory")
    p.add_argument("--gnuplot", action="store_true", help="emit a gnuplot script next to the CSVs")
    p.set_defaults(func=cmd_xcorr)

    p = sub.add_parser("hurst", help="memory exponent estimates from the low-frequency auto-spectrum")
    p.add_argument("inputs", nargs="+", help="observation CSV files")
    p.add_argument("--projections", type=int, default=1000)
    p.add_argument("--delta-f", dest="delta_f", type=float, default=0.0)
    p.add_argument("--low-fraction", dest="low_fraction", type=float, default=DEFAULT_LOW_FRACTION)
    p.set_defaults(func=cmd_hurst)

    p = sub.add_parser("baseline", help="time-domain baseline correlograms (LOCF or overlap intervals)")
    p.add_argument("inputs", nargs=2, help="exactly two observation CSV files")
    p.add_argument("--method", choices=("locf", "hy"), required=True)
    p.add_argument("--grid-step", dest="grid_step", type=float, default=0.0,
                   help="LOCF grid step (default: finer mean gap)")
    p.add_argument("--delta-h", dest="delta_h", type=float, default=0.0,
                   help="lag step for --method hy (default: finer mean gap)")
    p.add_argument("--half-count", dest="half_count", type=int, default=10)
    p.add_argument("--drop-bad-rows", action="store_true")
    p.add_argument("--out", help="correlogram CSV path (default: stdout)")
    p.set_defaults(func=cmd_baseline)

    p = sub.add_parser("llr", help="lead-lag ratio and delay from correlogram CSVs")
    p.add_argument("inputs", nargs="+", help="correlogram CSV files (lag,rho)")
    p.add_argument("--theta", type=float, default=DEFAULT_THETA)
    p.set_defaults(func=cmd_llr)

    p = sub.add_parser("band", help="pointwise 5/50/95 percentile band across correlogram CSVs")
    p.add_argument("inputs", nargs="+", help="correlogram CSV files from repeated trials")
    p.add_argument("--min-trials", dest="min_trials", type=int, default=20)
    p.add_argument("--out", help="band CSV path (default: stdout)")
    p.add_argument("--gnuplot", action="store_true")
    p.set_defaults(func=cmd_band)

    p = sub.add_parser("table1", help="LOCF vs frequency-domain lead-lag ratios by sampling ratio")
    p.add_argument("--ratios", default="1,4.5,10", help="comma-separated sampling ratios")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--projections", type=int, default=1000)
    p.add_argument("--n1", type=int, default=10000)
    p.add_argument("--rho", type=float, default=0.9)
    p.add_argument("--lag-steps", dest="lag_steps", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("variance-study", help="correlogram standard deviation vs projection count")
    p.add_argument("--projections-list", dest="projections_list", default="10,100,1000")
    p.add_argument("--trials", type=int, default=40)
    p.add_argument("--n-obs", dest="n_obs", type=int, default=10000)
    p.add_argument("--half-count", dest="half_count", type=int, default=5)
    p.add_argument("--seed", type=int, default=50)
    p.add_argument("--out", help="CSV path (default: stdout)")
    p.set_defaults(func=cmd_variance_study)

    p = sub.add_parser("cost-report", help="communication ledger for a partitioned run")
    p.add_argument("--series-count", dest="series_count", type=int, required=True)
    p.add_argument("--projections", type=int, required=True)
    p.add_argument("--obs", type=int, required=True, help="observations per series")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--labels", help="comma-separated series labels (default: unlabeled)")
    p.set_defaults(func=cmd_cost_report)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except NumericalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
