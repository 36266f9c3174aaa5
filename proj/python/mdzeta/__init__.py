"""Multiple Dedekind zeta values over quadratic fields.

Exact shuffle/stuffle expansions, double-shuffle relations, and
truncated-sum numerical evaluation. The heavy lifting lives in the
compiled extension module."""

from mdzeta._core import (
    EvalResult,
    FieldElement,
    FieldSpec,
    LinearCombo,
    MdzetaError,
    MzvDomain,
    RealCone,
    Relation,
    Signature,
    Truncation,
    UpperCone,
    VerificationReport,
    canonical_symbol,
    classify,
    compare_with_printed,
    derive_mzv_relation,
    derive_relation,
    enumerate_cplus,
    enumerate_real,
    eval_combo,
    eval_mzv,
    eval_symbol,
    integral_shuffle,
    lemma_rewrite,
    make_element,
    make_field,
    make_real_cone,
    make_upper_cone,
    mzv_shuffle,
    mzv_stuffle,
    parse_combo,
    shuffle_diagram_count,
    sqrt_decimal,
    stuffle_imaginary,
    stuffle_real,
    verify_numeric,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
