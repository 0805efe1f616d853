"""Exact graded components of top local cohomology modules.

For a standard graded ring R = R_0[U_1..U_s]/I the degree -d component of the
top local cohomology of R with respect to the irrelevant ideal is the
cokernel of an explicit matrix over R_0 built from inverse polynomials.  This
package constructs those matrices, decides vanishing through content ideals,
and tabulates cohomological Hilbert functions with exact arithmetic
throughout (rationals, prime fields, integers, or polynomial coefficients).
"""

from .cohomology import (
    CohomologyQuery,
    ComparisonRow,
    FittedPolynomial,
    HilbertRow,
    HilbertTable,
    MinimalPrimesReport,
    Refutation,
    TopComponentReport,
    builtin_ideal,
    builtin_query,
    char_comparison,
    content_is_unit,
    fit_reverse_polynomial,
    gap_free_check,
    h0_closed,
    h2_closed,
    hilbert_table,
    minimal_primes_report,
    pi_set,
    top_component_at_s,
    top_dimension,
    tridiag_det,
    tridiag_matrix,
    vanishes,
)
from .groebner import (
    DEGREVLEX,
    LEX,
    GroebnerBasis,
    MonomialOrder,
    buchberger,
    in_radical,
    is_cofinite,
    is_unit_ideal,
    membership,
    normal_form,
    quotient_dimension,
)
from .linalg import ExactMatrix, determinant, rank, smith_normal_form
from .multipoly import (
    CoefficientRing,
    GradedIdealInput,
    NestedPolynomial,
    URing,
    content_ideal,
    format_polynomial,
    graded_ideal,
    lex_less,
    parse_coefficient,
    parse_ideal,
    parse_polynomial,
)
from .presentation import (
    InverseBasis,
    PresentationMatrix,
    inverse_action,
    inverse_basis,
    minors_ideal,
    presentation_matrix,
)
from .scalars import GF, QQ, ZZ, ScalarDomain, is_prime
from .strand import (
    GradedMatrix,
    StrandDegree,
    StrandReport,
    brute_force_coker_dim,
    coker_dimension,
    coker_is_zero,
    from_presentation,
    strand_matrix,
)

__version__ = "0.1.0"
