"""Exact square-ice partition functions and identity checks."""

from .cyclo import CoeffMode, CycNum, GenericCoeff, sigma
from .ice import (asm_count_oracle, build_dwbc, build_ht_even, build_ht_odd, build_tangle,
                  enumerate_states, state_to_asm)
from .laurent import LaurentPoly
from .partition import Convention, partition_function, transfer_matrix_partition
from .verifier import CheckReport

__all__ = [
    "CoeffMode", "CycNum", "GenericCoeff", "sigma", "LaurentPoly",
    "build_dwbc", "build_ht_even", "build_ht_odd", "build_tangle",
    "enumerate_states", "state_to_asm", "asm_count_oracle",
    "Convention", "partition_function", "transfer_matrix_partition", "CheckReport",
]
