"""oplab: exact arithmetic for overpartition statistics and truncated
q-series identities.

The package has four layers: series (truncated integer power series and
q-product building blocks), overpartitions (enumeration and minimal-
excludant statistics), bijections (the constructive weight maps), and
identities (the registry of verifiable statements with its reporting
harness). The cli module wires them to a command line.
"""

from .series import (
    PochSpec,
    TruncatedSeries,
    gauss_binomial,
    gauss_theta,
    make,
    monomial,
    one,
    overpartition_gf,
    partition_gf,
    pentagonal_series,
    poch_inverse,
    poch_ratio,
    pochhammer,
    qproduct,
    theta_partial,
    zero,
)
from .overpartitions import (
    DEFAULT_ENUMERATION_CAP,
    ENUMERATION_CAP_ENV,
    EnumerationCapError,
    MexQuery,
    MEX_2_1,
    Overpartition,
    Part,
    Partition,
    enumerate_overpartitions,
    enumerate_partitions,
    enumeration_cap,
    mbar,
    mk_stat,
    nbar,
    op21,
    op_class_counts,
    overline_mex,
    partition_count,
    partition_mex,
    pbar,
)
from .bijections import (
    ABCClass,
    BijectionTrace,
    SetLabel,
    c_witness,
    check_staircase,
    check_weight_down,
    classify,
    map_a_to_b,
    map_b_to_a,
    staircase_insert,
    staircase_remove,
)
from .identities import (
    BadParamsError,
    IdentityDescriptor,
    MAX_ORDER,
    UnknownIdentityError,
    VerificationReport,
    expand_grid,
    get_identity,
    list_identities,
    run_default_suite,
    verify_enumerative,
    verify_identity,
    verify_inequality,
    verify_series,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # series
    "TruncatedSeries",
    "PochSpec",
    "make",
    "zero",
    "one",
    "monomial",
    "qproduct",
    "pochhammer",
    "poch_inverse",
    "gauss_binomial",
    "pentagonal_series",
    "theta_partial",
    "gauss_theta",
    "partition_gf",
    "overpartition_gf",
    "poch_ratio",
    # overpartitions
    "Part",
    "Overpartition",
    "Partition",
    "MexQuery",
    "MEX_2_1",
    "EnumerationCapError",
    "DEFAULT_ENUMERATION_CAP",
    "ENUMERATION_CAP_ENV",
    "enumeration_cap",
    "enumerate_overpartitions",
    "enumerate_partitions",
    "pbar",
    "partition_count",
    "overline_mex",
    "partition_mex",
    "op_class_counts",
    "op21",
    "mbar",
    "nbar",
    "mk_stat",
    # bijections
    "SetLabel",
    "ABCClass",
    "BijectionTrace",
    "classify",
    "map_a_to_b",
    "map_b_to_a",
    "c_witness",
    "staircase_insert",
    "staircase_remove",
    "check_weight_down",
    "check_staircase",
    # identities
    "IdentityDescriptor",
    "VerificationReport",
    "UnknownIdentityError",
    "BadParamsError",
    "MAX_ORDER",
    "list_identities",
    "get_identity",
    "expand_grid",
    "verify_series",
    "verify_enumerative",
    "verify_inequality",
    "verify_identity",
    "run_default_suite",
]
