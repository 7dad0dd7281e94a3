"""Exact branching multiplicities for classical groups, with built-in oracles."""

from .partitions import (
    Group,
    InvalidLabelError,
    as_partition,
    associated_partition,
    conjugate,
    contains,
    general_linear,
    has_even_columns,
    has_even_rows,
    in_k_hat,
    is_double_strip,
    is_strip,
    orthogonal,
    symplectic,
    weight_vector_valid,
)
from .tableaux import Alphabet, Tableau, barred_alphabet, content, enumerate_ssyt, is_lr_tableau, word
from .lr import generalized_lr, lr_coefficient, lr_tableaux, pieri_coefficient, schur_multiply
from .branching import (
    StableRangeError,
    assoc_symmetry_pair,
    ballot_number,
    enumerate_k_tableaux,
    iterate_branch,
    k_tableau_count,
    k_tableau_table,
    multiplicity_one_column,
    multiplicity_one_row,
    multiset_number,
    one_step_branch,
    stable_branch,
    stable_range_ok,
)
from .oracles import (
    chain_oracle,
    gl_dimension,
    group_dimension,
    howe_graded_dimension_check,
    lr_oracle,
    orthogonal_dimension,
    schur_polynomial,
    symplectic_dimension,
)

__version__ = "0.1.0"
