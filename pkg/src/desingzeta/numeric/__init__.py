"""Floating-point evaluation layer: Euler-Maclaurin zetas, analytic
Lerch, direct multiple sums, Mellin-Barnes continuation, and the entire
desingularized double zeta."""

from .config import DEFAULT_CONFIG, EvalConfig, EvalResult
from .dzeta2 import (
    ez2_des,
    ez2_des_exact,
    ez2_des_neg_line,
    ez2_first_neg_line,
    ez2_neg_args,
    ez2_second_neg_line,
    evaluate_identity,
    verify_trivial_relations,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .multizeta import (
    ezl2_continued,
    hl_zeta_continued,
    hl_zeta_direct,
    lerch_at_neg_int,
)
from .zeta import hurwitz_zeta, lerch_phi, riemann_zeta

__all__ = [
    "DEFAULT_CONFIG",
    "EvalConfig",
    "EvalResult",
    "KERNEL_BACKEND",
    "ez2_des",
    "ez2_des_exact",
    "ez2_des_neg_line",
    "ez2_first_neg_line",
    "ez2_neg_args",
    "ez2_second_neg_line",
    "ezl2_continued",
    "evaluate_identity",
    "hl_zeta_continued",
    "hl_zeta_direct",
    "hurwitz_zeta",
    "lerch_at_neg_int",
    "lerch_phi",
    "riemann_zeta",
    "verify_trivial_relations",
]
