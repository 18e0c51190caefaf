"""Exact depth and Stanley depth of I/J for square-free monomial ideals J <= I."""

from .core import (
    DegreeStats,
    IdealPair,
    InstanceError,
    Monomial,
    Poset,
    ZeroModuleError,
    build_poset,
    degree_stats,
    format_monomial,
    member,
    parse_ideal_pair,
)
from .koszul import RATIONALS, FieldSpec, HomologyProfile, depth, depth_of_quotient_ring, homology_ranks, koszul_slice
from .sdepth import Interval, PartitionCertificate, naive_sdepth, sdepth, sdepth_at_least, verify_partition

__version__ = "0.1.0"
