"""Exact free-field realization of the type-C quantum affine algebra at
level one, with a mode-by-mode relation verifier and a command-line front
end.

The package is organized bottom-up:

* :mod:`qvertex.scalars`   -- the exact coefficient field Q(q**(1/4))
* :mod:`qvertex.series`    -- truncated power series and q-shifted powers
* :mod:`qvertex.multipoly` -- multivariate Laurent polynomials
* :mod:`qvertex.lattice`   -- weight lattices, pairings, twist cocycle
* :mod:`qvertex.fock`      -- the level-one Fock space and its operators
* :mod:`qvertex.vertex`    -- vertex-operator modes acting on Fock vectors
* :mod:`qvertex.report`    -- check records and their renderings
* :mod:`qvertex.verify`    -- defining-relation and identity checks
* :mod:`qvertex.cli`       -- command-line interface

Every submodule's public surface is re-exported here.
"""

from .fock import (
    FockMonomial,
    FockVector,
    HeisenGen,
    apply_heisenberg,
    grade,
    grade_monomial,
    heis_bracket,
    hw_vector,
    parse_vector,
    sign_two_a,
    translate,
    vacuum,
    vector_text,
    weight,
    zero_mode_a,
    zero_mode_b,
)
from .lattice import (
    WeightA,
    WeightC,
    alpha_coords,
    bar_parities,
    cartan,
    check_cocycle_commutation,
    check_quasi_cocycle_axioms,
    constraint_check,
    d_exp,
    eps_char,
    eps_pair,
    eps_simple,
    fundamental_weight,
    fundamental_weight_tilde,
    inner_P,
    inner_tilde,
    matching_tilde,
    simple_root,
    simple_root_tilde,
    theta,
    vertex_char,
    zero_tilde,
    zero_weight,
)
from .multipoly import MultiPoly
from .report import CheckRecord, VerificationReport
from .scalars import (
    ExactScalar,
    HalfExponent,
    classical_limit,
    parse_scalar,
    q_binom,
    q_bracket,
    q_factorial,
    q_int,
    q_int_frac,
    q_power,
    scalar_text,
)
from .series import (
    TruncatedSeries,
    geometric_series,
    qpow_exp,
    qpow_product,
    series_add,
    series_coeff,
    series_equal,
    series_inv,
    series_mul,
    series_scale,
    series_scale_var,
    series_shift,
    series_sub,
    series_truncate,
)
from .verify import (
    IDENTITY_NAMES,
    RELATION_NAMES,
    CheckConfig,
    check_identities,
    check_identity1,
    check_identity2,
    check_identity3,
    check_ope_factors,
    check_qpow,
    default_test_vectors,
    verify_hwv,
    verify_lemma,
    verify_r2,
    verify_r4,
    verify_r5,
    verify_r6,
    verify_r7,
    verify_r8,
    verify_relations,
    verify_serre,
)
from .vertex import (
    VertexContext,
    apply_e0,
    apply_k,
    apply_phi_mode,
    apply_psi_mode,
    apply_x_mode,
    apply_x_mode_split,
    chevalley_e,
    default_e0_brackets,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # scalars
    "ExactScalar",
    "HalfExponent",
    "classical_limit",
    "parse_scalar",
    "q_binom",
    "q_bracket",
    "q_factorial",
    "q_int",
    "q_int_frac",
    "q_power",
    "scalar_text",
    # series
    "TruncatedSeries",
    "geometric_series",
    "qpow_exp",
    "qpow_product",
    "series_add",
    "series_coeff",
    "series_equal",
    "series_inv",
    "series_mul",
    "series_scale",
    "series_scale_var",
    "series_shift",
    "series_sub",
    "series_truncate",
    # multipoly
    "MultiPoly",
    # lattice
    "WeightA",
    "WeightC",
    "alpha_coords",
    "bar_parities",
    "cartan",
    "check_cocycle_commutation",
    "check_quasi_cocycle_axioms",
    "constraint_check",
    "d_exp",
    "eps_char",
    "eps_pair",
    "eps_simple",
    "fundamental_weight",
    "fundamental_weight_tilde",
    "inner_P",
    "inner_tilde",
    "matching_tilde",
    "simple_root",
    "simple_root_tilde",
    "theta",
    "vertex_char",
    "zero_tilde",
    "zero_weight",
    # fock
    "FockMonomial",
    "FockVector",
    "HeisenGen",
    "apply_heisenberg",
    "grade",
    "grade_monomial",
    "heis_bracket",
    "hw_vector",
    "parse_vector",
    "sign_two_a",
    "translate",
    "vacuum",
    "vector_text",
    "weight",
    "zero_mode_a",
    "zero_mode_b",
    # vertex
    "VertexContext",
    "apply_e0",
    "apply_k",
    "apply_phi_mode",
    "apply_psi_mode",
    "apply_x_mode",
    "apply_x_mode_split",
    "chevalley_e",
    "default_e0_brackets",
    # report
    "CheckRecord",
    "VerificationReport",
    # verify
    "CheckConfig",
    "IDENTITY_NAMES",
    "RELATION_NAMES",
    "check_identities",
    "check_identity1",
    "check_identity2",
    "check_identity3",
    "check_ope_factors",
    "check_qpow",
    "default_test_vectors",
    "verify_hwv",
    "verify_lemma",
    "verify_r2",
    "verify_r4",
    "verify_r5",
    "verify_r6",
    "verify_r7",
    "verify_r8",
    "verify_relations",
    "verify_serre",
]
