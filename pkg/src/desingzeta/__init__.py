"""desingzeta: exact and numeric engine for desingularized multiple
zeta-functions of Hurwitz-Lerch type.

Builds the finite combination identities turning the desingularized
functions into shifted ordinary multiple zeta-functions, evaluates
special values at integer points exactly, continues the rank-2
triangular family numerically, and computes p-adic multiple L-values at
non-positive integers through twisted multiple Bernoulli numbers over
cyclotomic fields.
"""

from .desing import (
    DesingIdentity,
    LaurentSeriesPoly,
    Term,
    desing_identity,
    generating_function,
    special_value_nonpos,
    trivial_relation_terms,
)
from .exact import (
    CyclotomicNumber,
    PowerSeries1,
    bernoulli,
    f_delta_coeff,
    frobenius_euler,
    lerch_neg_coeff,
    root_of_unity,
    zeta_neg_int,
)
from .models import (
    CMatrix,
    HLData,
    SingularityCatalog,
    builtin_data,
    ezl_data,
    mt2_data,
    root_system_rank2_data,
    singular_hyperplanes,
    solve_c_matrix,
)
from .numeric import (
    DEFAULT_CONFIG,
    EvalConfig,
    EvalResult,
    KERNEL_BACKEND,
    ez2_des,
    ez2_des_exact,
    ez2_des_neg_line,
    ez2_neg_args,
    ezl2_continued,
    evaluate_identity,
    hl_zeta_direct,
    hurwitz_zeta,
    lerch_phi,
    riemann_zeta,
    verify_trivial_relations,
)
from .padic import (
    PadicLRequest,
    TwistedBernoulliKey,
    kubota_leopoldt_check,
    padic_L_nonpos,
    twisted_multi_bernoulli,
)

__version__ = "1.0.0"

__all__ = [
    "CMatrix",
    "CyclotomicNumber",
    "DEFAULT_CONFIG",
    "DesingIdentity",
    "EvalConfig",
    "EvalResult",
    "HLData",
    "KERNEL_BACKEND",
    "LaurentSeriesPoly",
    "PadicLRequest",
    "PowerSeries1",
    "SingularityCatalog",
    "Term",
    "TwistedBernoulliKey",
    "bernoulli",
    "builtin_data",
    "desing_identity",
    "ez2_des",
    "ez2_des_exact",
    "ez2_des_neg_line",
    "ez2_neg_args",
    "ezl2_continued",
    "ezl_data",
    "evaluate_identity",
    "f_delta_coeff",
    "frobenius_euler",
    "generating_function",
    "hl_zeta_direct",
    "hurwitz_zeta",
    "kubota_leopoldt_check",
    "lerch_neg_coeff",
    "lerch_phi",
    "mt2_data",
    "padic_L_nonpos",
    "riemann_zeta",
    "root_of_unity",
    "root_system_rank2_data",
    "singular_hyperplanes",
    "solve_c_matrix",
    "special_value_nonpos",
    "trivial_relation_terms",
    "twisted_multi_bernoulli",
    "zeta_neg_int",
]
