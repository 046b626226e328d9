"""Exact computation of Kronecker, reduced Kronecker, and Littlewood-Richardson
coefficients, with closed forms for special families and a verification
harness for log-concavity style inequalities in the stable representation
ring."""

from .characters import (
    CharacterTable,
    CycleType,
    character,
    character_value,
    cycle_types,
    dimension,
)
from .closed_forms import ReachQuery, reach_count, reduced_hook, reduced_two_row
from .coefficients import (
    DEFAULT_WINDOW,
    CompareResult,
    VirtualRep,
    VirtualStableRep,
    clear_caches,
    kostka,
    kronecker,
    kronecker_sequence,
    lr_coefficient,
    reduced_kronecker,
    reduced_tensor_decompose,
    stabilization_cap,
    stabilization_start,
    stable_ring_compare,
    stable_ring_multiply,
    tensor_decompose,
)
from .conjectures import (
    EXPECTED_SQUARE_DIFFERENCE_S8,
    GOLDEN_TRIPLE,
    GOLDEN_TRIPLE_VALUE,
    GoldenCheck,
    Violation,
    ViolationReport,
    check_chain_conjecture,
    check_dim_log_concavity,
    check_midpoint_kronecker,
    check_midpoint_reduced,
    check_murnaghan_littlewood,
    check_saturation,
    check_schur_log_concavity,
    check_sort_conjecture,
    run_golden_suite,
    scan,
)
from .errors import (
    KroncaveError,
    NotIntegral,
    PadTooSmall,
    PartitionParseError,
    SizeMismatch,
    StabilizationNotDetected,
    StoreIOError,
)
from .partitions import (
    EMPTY,
    DoubleHookShape,
    Partition,
    as_partition,
    canonical_key,
    conjugate,
    double_hook_decompose,
    hook_lengths,
    interleave_split,
    midpoint,
    murnaghan_inequalities,
    pad,
    part,
    partitions_of,
    partitions_up_to,
    sort_split,
    syt_count,
    union_parts,
)
from .store import (
    CacheRecord,
    CoefficientCache,
    ENGINE_VERSION,
    format_partition,
    parse_partition_text,
    resolve_cache_path,
)

__version__ = "0.1.0"
