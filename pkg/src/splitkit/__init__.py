"""Exact computation of kernel splitting types for rational normal curves on hypersurfaces."""

from .binforms import BinForm, bf_gcd, mult_matrix
from .construct import (
    ConstructionReport,
    QuadMat,
    construct_d3,
    construct_quadric,
    construct_quadric_low_corank,
    corank_bound,
    quad_corank,
    quad_matrix,
    smooth_along_curve,
)
from .errors import (
    AmbientMismatch,
    BetaOutOfRange,
    BothZero,
    CharTwo,
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    InadmissibleType,
    IndexOutOfRange,
    LSearchExhausted,
    NotInIdeal,
    ParseError,
    SplitkitError,
    SurgeryVerificationFailed,
    VerificationFailed,
    ZeroMap,
)
from .mpoly import MPoly
from .normalmap import PsiMap, phi_matrix, phi_row_count, psi_from_poly, psi_from_row, zero_psi
from .rnc import (
    CurveContext,
    IdealDecomposition,
    ideal_basis,
    lift_monomial,
    monomial_exponents,
    quadric_gen,
    restrict,
    restriction_matrix,
    straighten_decompose,
)
from .sampler import FrequencyTable, SampleConfig, random_ideal_element, sample_distribution
from .scalars import DEFAULT_PRIME, Field
from .splitting import (
    SplitType,
    TwistProfile,
    balanced_type,
    entries_gcd,
    enumerate_types,
    h0_twist,
    h1_end,
    split_into_parts,
    splitting_type,
    twist_profile,
)
from .strata import StratumReport, census, phi_rank_nullity, quadric_phi_dims, stratum_report

__version__ = "0.1.0"
