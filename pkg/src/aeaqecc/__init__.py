"""Asymmetric entanglement-assisted codes built from classical code pairs.

The package constructs [[n, k, dz/dx; c]]_q codes from two classical
linear codes over a common finite field, computes their parameters
(exactly where enumeration is affordable, as certified bounds
otherwise), and checks them against the finite existence bound.
"""

from .bch import (
    bch_asym_code,
    bch_bound,
    closed_form_bch_params,
    coset_code,
    cyclotomic_cosets,
    dual_defining_set,
    evaluation_code,
    hartmann_tzeng_bound,
    reciprocal_rep,
    splitting_field,
    subfield_subcode,
)
from .codes import (
    LinearCode,
    WeightReport,
    min_weight,
    parse_code,
    read_code_file,
    relative_min_weight,
    write_code_file,
)
from .eaqecc import (
    AsymEaqeccParams,
    asym_params,
    css_stack,
    enlargement_demo,
    entanglement_c,
    symplectic_c,
)
from .errors import (
    BudgetExceededError,
    CodeFormatError,
    DegeneratePairError,
    FieldMismatchError,
    ThresholdEmptyError,
)
from .fields import FiniteField, field_create, field_from_designator
from .gv import (
    GvQuery,
    ThresholdPair,
    asymptotic_params,
    gv_asymptotic_holds,
    gv_finite_holds,
    gv_finite_sum,
    gv_threshold,
)
from .tables import TABLE1, TABLE2, reproduce_table1, reproduce_table2

__version__ = "0.1.0"

__all__ = [
    "AsymEaqeccParams",
    "BudgetExceededError",
    "CodeFormatError",
    "DegeneratePairError",
    "FieldMismatchError",
    "FiniteField",
    "GvQuery",
    "LinearCode",
    "TABLE1",
    "TABLE2",
    "ThresholdEmptyError",
    "ThresholdPair",
    "WeightReport",
    "asym_params",
    "asymptotic_params",
    "bch_asym_code",
    "bch_bound",
    "closed_form_bch_params",
    "coset_code",
    "css_stack",
    "cyclotomic_cosets",
    "dual_defining_set",
    "enlargement_demo",
    "entanglement_c",
    "evaluation_code",
    "field_create",
    "field_from_designator",
    "gv_asymptotic_holds",
    "gv_finite_holds",
    "gv_finite_sum",
    "gv_threshold",
    "hartmann_tzeng_bound",
    "min_weight",
    "parse_code",
    "read_code_file",
    "reciprocal_rep",
    "relative_min_weight",
    "reproduce_table1",
    "reproduce_table2",
    "splitting_field",
    "subfield_subcode",
    "symplectic_c",
    "write_code_file",
]
