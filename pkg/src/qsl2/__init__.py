"""Exact arithmetic for quantum SL(2) at roots of unity.

Scalar rings over the Laurent generator w (with q = w^2), Gaussian binomials
and power-sum Chebyshev polynomials, quantum tori with Weyl-symmetric bases,
the quantized coordinate ring with its Hopf structure and cobraiding, the
Hopf pairing against divided-power words, power maps at roots of unity, and
a braided tensor square.  Everything is computed exactly; the `verify`
suites and the `qsl2` console script re-check the algebraic identities from
first principles.
"""

from .scalars import (
    GENERIC,
    RootSpec,
    Scalar,
    ScalarRing,
    cyclic_ring,
    cyclotomic_ring,
    eta_embed,
    specialize,
)
from .intpoly import IntPolynomial
from .qcomb import (
    chebyshev_T,
    chebyshev_eval,
    gauss_row_at,
    qbinom,
    qbinom_at,
    qint,
    verify_root_identities,
)
from .torus import (
    TorusAlgebra,
    TorusElement,
    frobenius_F_N,
    normal_mul,
    reflect,
    verify_freshman_dream,
    verify_monogon_noncentrality,
    verify_torus_chebyshev,
    weyl_coefficients,
)
from .bigon import (
    BigonElement,
    annulus,
    antipode,
    co_r_basis,
    co_r_words,
    coproduct,
    counit,
    gen,
    monomial,
    normal_form,
    parse_element,
    parse_word_expr,
    verify_cobraiding,
    verify_hopf_axioms,
)
from .pairing import (
    hopf_pair,
    parse_uword,
    render_uword,
    verify_pairing_tables,
    verify_dual_frobenius,
)
from .frobenius import (
    SquareState,
    negative_control,
    phi_bigon,
    square_closed_form,
    square_framed_expansion,
    verify_annulus_TN,
    verify_phi_homomorphism,
    verify_square_lemma,
)
from .braided import (
    BraidedElement,
    braided_multiply,
    braided_pure,
    braided_unit,
    phi_braided,
    verify_braided_associativity,
    verify_phi_braided,
)
from .report import Case, Report
from .suites import SuiteConfig, parse_orders, run_suites, suite_names

__version__ = "0.1.0"

__all__ = [
    "GENERIC",
    "RootSpec",
    "Scalar",
    "ScalarRing",
    "cyclic_ring",
    "cyclotomic_ring",
    "eta_embed",
    "specialize",
    "IntPolynomial",
    "chebyshev_T",
    "chebyshev_eval",
    "gauss_row_at",
    "qbinom",
    "qbinom_at",
    "qint",
    "verify_root_identities",
    "TorusAlgebra",
    "TorusElement",
    "frobenius_F_N",
    "normal_mul",
    "reflect",
    "verify_freshman_dream",
    "verify_monogon_noncentrality",
    "verify_torus_chebyshev",
    "weyl_coefficients",
    "BigonElement",
    "annulus",
    "antipode",
    "co_r_basis",
    "co_r_words",
    "coproduct",
    "counit",
    "gen",
    "monomial",
    "normal_form",
    "parse_element",
    "parse_word_expr",
    "verify_cobraiding",
    "verify_hopf_axioms",
    "hopf_pair",
    "parse_uword",
    "render_uword",
    "verify_pairing_tables",
    "verify_dual_frobenius",
    "SquareState",
    "negative_control",
    "phi_bigon",
    "square_closed_form",
    "square_framed_expansion",
    "verify_annulus_TN",
    "verify_phi_homomorphism",
    "verify_square_lemma",
    "BraidedElement",
    "braided_multiply",
    "braided_pure",
    "braided_unit",
    "phi_braided",
    "verify_braided_associativity",
    "verify_phi_braided",
    "Case",
    "Report",
    "SuiteConfig",
    "parse_orders",
    "run_suites",
    "suite_names",
]
