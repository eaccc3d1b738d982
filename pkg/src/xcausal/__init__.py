"""Lead-lag causal inference for irregularly sampled long-memory series.

The package estimates Granger-style lead-lag structure between time
series observed at irregular, unaligned times: project each series onto
a reduced frequency grid (no interpolation), cancel long-range
dependence by fractional pole elimination, invert the cross-spectrum to
a normalized cross-correlogram, and read off the Lead-Lag Ratio and
characteristic delay. Baselines (LOCF, Hayashi-Yoshida), exact synthetic
generators and a partitioned communication-avoiding runner round out the
toolkit.
"""

from ._backend import BACKEND
from .core import (
    CrossCorrelogram,
    FrequencyGrid,
    IrregularSeries,
    LagGrid,
    RegularSeries,
    dedup_and_sort,
    demean,
    read_series_csv,
    write_series_csv,
)
from .spectral import (
    CrossSpectrum,
    FourierProjection,
    auto_spectrum,
    cross_spectrum,
    invert_to_correlogram,
    merge,
    project,
    read_signature,
    serialize_signature,
    smooth,
    write_signature,
)
from .lrd import (
    HurstEstimate,
    estimate_hurst,
    frac_diff_time,
    frac_diff_weights,
    pole_eliminate,
    whiten_pair,
)
from .causal import LlrResult, PercentileBand, daily_average, llr, percentile_band
from .baselines import (
    HyResult,
    hayashi_yoshida,
    hy_lagged_correlogram,
    locf_llr_experiment,
    locf_resample,
    regular_xcov,
)
from .synth import (
    CausalKernel,
    PathPair,
    correlated_pair,
    kernel_drive,
    kernel_pair,
    lagged_pair,
    sample_irregular,
    simulate_fgn,
)
from .parallel import CostLedger, Partition, cost_report, partition, reduce_all, worker_project
from .pipeline import PipelineResult, fourier_correlogram, joint_grid

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CausalKernel",
    "CostLedger",
    "CrossCorrelogram",
    "CrossSpectrum",
    "FourierProjection",
    "FrequencyGrid",
    "HurstEstimate",
    "HyResult",
    "IrregularSeries",
    "LagGrid",
    "LlrResult",
    "Partition",
    "PathPair",
    "PercentileBand",
    "PipelineResult",
    "RegularSeries",
    "auto_spectrum",
    "correlated_pair",
    "cost_report",
    "cross_spectrum",
    "daily_average",
    "dedup_and_sort",
    "demean",
    "estimate_hurst",
    "fourier_correlogram",
    "frac_diff_time",
    "frac_diff_weights",
    "hayashi_yoshida",
    "hy_lagged_correlogram",
    "invert_to_correlogram",
    "joint_grid",
    "kernel_drive",
    "kernel_pair",
    "lagged_pair",
    "llr",
    "locf_llr_experiment",
    "locf_resample",
    "merge",
    "partition",
    "percentile_band",
    "pole_eliminate",
    "project",
    "read_series_csv",
    "read_signature",
    "reduce_all",
    "regular_xcov",
    "sample_irregular",
    "serialize_signature",
    "simulate_fgn",
    "smooth",
    "whiten_pair",
    "worker_project",
    "write_series_csv",
    "write_signature",
    "__version__",
]
