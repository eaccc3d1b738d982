"""Partitioned projection with an explicit communication cost ledger.

The projection sum is order-independent, so observations can be split
across workers in any way, each worker projecting its shard against the
shared frequency grid and shipping back only P complex coefficients (a
"signature") per series. The master merges signatures by addition. The
only other exchange is a per-series (sum, count) pair so every worker
centers with the global mean. Workers here are in-process (threads when
requested), but they honor the message-passing contract: nothing is
shared except what the ledger counts.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _backend
from .errors import ConfigError, GridMismatchError
from .spectral import FourierProjection, merge, signature_n_bytes, zero_projection

# One (sum, count) float pair per series per worker.
MEAN_EXCHANGE_BYTES_PER_SERIES = 16


@dataclass(frozen=True)
class Partition:
    """One worker's shard of a series' observations, in arbitrary order."""

    shard_id: int
    label: str
    timestamps: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.timestamps, dtype=np.float64)
        v = np.asarray(self.values, dtype=np.float64)
        if t.shape != v.shape or t.ndim != 1:
            raise ValueError("timestamps and values must be 1-d and equal length")
        object.__setattr__(self, "timestamps", t)
        object.__setattr__(self, "values", v)

    @property
    def n_obs(self):
        return int(self.timestamps.shape[0])


def partition(series, k, seed=None):
    """Split a series round-robin into k shards.

    Shards interleave in time on purpose: the projection must not care.
    A seed shuffles observations first, scattering even the round-robin
    pattern. k may exceed the observation count; the excess shards are
    empty.
    """
    k = int(k)
    if k < 1:
        raise ConfigError(f"worker count must be >= 1, got {k}")
    order = np.arange(series.n_obs)
    if seed is not None:
        order = np.random.default_rng(seed).permutation(order)
    t = series.timestamps[order]
    v = series.values[order]
    return [
        Partition(shard_id=i, label=series.label,
                  timestamps=t[i::k], values=v[i::k])
        for i in range(k)
    ]


def worker_project(shard, grid, global_mean):
    """Project one shard, centering by the global series mean.

    Local means differ per shard, so centering must use the global mean
    exchanged beforehand; the partial sums then add up to the projection
    of the centered series. Empty shards contribute the zero projection.
    """
    if shard.n_obs == 0:
        return zero_projection(grid, label=shard.label)
    coeffs = _backend.nudft(shard.timestamps, shard.values - global_mean,
                            grid.delta_f, grid.count)
    return FourierProjection(grid=grid, coeffs=coeffs, n_obs=shard.n_obs,
                             label=shard.label)


def reduce_all(partials):
    """Left-fold of merge over partial projections, in the given order.

    Pass partials sorted by shard id for bit-reproducible output; any
    order gives the same result up to floating-point reassociation.
    """
    partials = list(partials)
    if not partials:
        raise ConfigError("reduce_all needs at least one partial projection")
    acc = partials[0]
    for p in partials[1:]:
        acc = merge(acc, p)
    return acc


@dataclass(frozen=True)
class CostLedger:
    """Communication and memory accounting for one partitioned run.

    bytes_sent_per_worker counts the serialized signatures one worker
    ships to the master (d records of 16*P coefficient bytes plus the
    record header); compression_ratio compares coefficient payload to
    raw observation payload (16 bytes per observation), headers excluded
    on both sides, so P/N exactly.
    """

    workers: int
    series_count: int
    projections: int
    obs_per_series: int
    bytes_sent_per_worker: int
    mean_exchange_bytes_per_worker: int
    total_bytes: int
    datapoints_represented: int
    raw_data_bytes: int
    compression_ratio: float
    compressing: bool
    master_signature_values: int

    def lines(self):
        """Key-value text form, one entry per line."""
        out = []
        for name in ("workers", "series_count", "projections", "obs_per_series",
                     "bytes_sent_per_worker", "mean_exchange_bytes_per_worker",
                     "total_bytes", "datapoints_represented", "raw_data_bytes",
                     "compression_ratio", "compressing", "master_signature_values"):
            out.append(f"{name}={getattr(self, name)}")
        return out


def cost_report(series_count, projections, obs_per_series, workers, labels=None):
    """Fill the ledger for d series of N observations on k workers.

    labels feed the per-record header sizes; by default series are
    assumed unlabeled (28-byte headers).
    """
    d = int(series_count)
    p = int(projections)
    n = int(obs_per_series)
    k = int(workers)
    if min(d, p, n, k) < 1:
        raise ConfigError("series_count, projections, obs_per_series and "
                          "workers must all be positive")
    if labels is None:
        labels = [""] * d
    if len(labels) != d:
        raise ConfigError(f"expected {d} labels, got {len(labels)}")

    per_worker = sum(signature_n_bytes(label, p) for label in labels)
    raw_bytes = d * n * 16
    ratio = (d * p * 16) / (d * n * 16)
    return CostLedger(
        workers=k,
        series_count=d,
        projections=p,
        obs_per_series=n,
        bytes_sent_per_worker=per_worker,
        mean_exchange_bytes_per_worker=d * MEAN_EXCHANGE_BYTES_PER_SERIES,
        total_bytes=k * per_worker,
        datapoints_represented=d * n,
        raw_data_bytes=raw_bytes,
        compression_ratio=ratio,
        compressing=ratio < 1.0,
        master_signature_values=d * p,
    )


def partitioned_projection(series, grid, workers, seed=None, threads=1):
    """Full partitioned run for one series: shard, project, merge.

    The master never holds more than the running merged signature: shards
    are reduced as they complete, in shard-id order. With threads > 1 the
    shard projections run concurrently (the kernels release the GIL);
    results are still merged deterministically.
    """
    shards = partition(series, workers, seed=seed)
    mean = float(np.mean(series.values))
    if threads > 1 and len(shards) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            partials = list(pool.map(
                lambda s: worker_project(s, grid, mean), shards
            ))
    else:
        partials = [worker_project(s, grid, mean) for s in shards]
    acc = partials[0]
    for p in partials[1:]:
        acc = merge(acc, p)
    return acc


def partitioned_projections(series_list, grid, workers, seed=None, threads=1):
    """Partitioned projections for several series, as {label: projection}."""
    out = {}
    for s in series_list:
        if s.label in out:
            raise GridMismatchError(
                f"duplicate series label {s.label!r}; labels identify signatures"
            )
        out[s.label] = partitioned_projection(s, grid, workers, seed=seed,
                                              threads=threads)
    return out
