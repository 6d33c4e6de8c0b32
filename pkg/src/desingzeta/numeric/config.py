"""Evaluation configuration for the floating-point layer."""

from __future__ import annotations

from dataclasses import dataclass, replace

from ..errors import ParameterError

__all__ = ["EvalConfig", "DEFAULT_CONFIG", "EvalResult"]


@dataclass(frozen=True)
class EvalConfig:
    """Knobs for Euler-Maclaurin summation, the Mellin-Barnes contour,
    and direct series truncation.

    em_terms / em_bernoulli_order may be raised adaptively per point
    (large imaginary part, far-left real part); they are floors, and
    truncation never silently drops below what a caller requests.
    """

    em_terms: int = 40              # Euler-Maclaurin initial terms N0
    em_bernoulli_order: int = 20    # Euler-Maclaurin correction order M_B
    mb_M: int = 1                   # minimum shift M of the contour line
    mb_epsilon: float = 0.25        # line sits at Re z = M - epsilon
    mb_line_halflength: float = 16.0  # starting half-length T (doubled on demand)
    direct_sum_cap: int = 10_000    # per-index cap for direct multiple sums
    target_tol: float = 1e-11       # accuracy target for adaptive choices
    near_singularity_eta: float = 1e-3  # distance triggering the limit procedure

    def __post_init__(self):
        if min(self.em_terms, self.em_bernoulli_order, self.mb_M,
               self.direct_sum_cap) < 1 or self.mb_epsilon <= 0 \
                or self.mb_line_halflength <= 0 or self.target_tol <= 0:
            raise ParameterError("all EvalConfig fields must be positive, mb_M >= 1")

    def with_(self, **kw) -> "EvalConfig":
        return replace(self, **kw)


DEFAULT_CONFIG = EvalConfig()


@dataclass(frozen=True)
class EvalResult:
    """Numeric value with an error bound and the method that produced it."""

    value: complex
    error_bound: float
    method: str  # "direct" | "mb" | "closed-form" | "limit"

    def __complex__(self) -> complex:
        return self.value

    def to_json(self) -> dict:
        return {
            "value": {"re": self.value.real, "im": self.value.imag},
            "error_bound": self.error_bound,
            "method": self.method,
        }
