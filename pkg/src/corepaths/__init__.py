"""Bijection between (s, s+2)-core partitions with distinct parts and lattice paths."""

from .bijection import (
    BalancedIdeal,
    LatticePath,
    Side,
    backward,
    forward,
    from_path,
    partition_to_path,
    path_to_partition,
    to_path,
    trace,
)
from .gap_poset import CoprimePair, PlaneCoord, enumerate_ideals, gaps, is_order_ideal, psi, psi_inverse
from .oracles import CountReport, direct_filter_oracle, enumerate_distinct_cores, verify_all
from .partition_core import (
    BetaSet,
    Partition,
    beta_gap_test,
    beta_set,
    has_distinct_parts,
    hook_lengths,
    is_a_core,
    is_simultaneous_core,
    partition_from_beta_set,
)

__version__ = "0.1.0"
