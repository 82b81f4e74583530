"""Outer commutator multipliers and capability of nilpotent products of cyclic groups."""

from .arith import mobius, witt_chi, witt_sum
from .capability import (
    CapabilityVerdict,
    SubgroupDescriptor,
    c_center_descriptor,
    is_capable,
    power_absorption_check,
    verbal_center_descriptor,
)
from .commutators import (
    BasicCommutator,
    Commutator,
    Letter,
    Node,
    bracket,
    compare,
    generate_basic,
    generators_in,
    is_basic,
    max_torsion_index,
    parse_commutator,
    weight,
)
from .groups import Check, Generator, GroupSpec, HypothesisError, parse_group
from .hall import (
    BasisMismatchError,
    GroupElement,
    HallBasis,
    ResourceLimitError,
    build_basis,
    commutator,
    evaluate,
    inverse,
    multiply,
    power,
    reduce_mod_torsion,
    struik_order_check,
    verify_hall_ranks,
)
from .kernels import BACKEND
from .multiplier import (
    CommutatorPair,
    MultiplierStructure,
    RankReport,
    enumerate_A,
    enumerate_A_minus_C,
    enumerate_C,
    enumerate_D_c,
    enumerate_Y,
    multiplier_structure,
    ranks_closed_form,
    ranks_enumerated,
    ranks_printed,
    validate_hypotheses,
)

__version__ = "0.1.0"
