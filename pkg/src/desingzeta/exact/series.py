"""Truncated univariate formal power series over exact coefficients.

Coefficients may be Fractions or CyclotomicNumbers (mixed freely; the
cyclotomic type absorbs rationals).  Truncation orders are explicit:
an operation never silently returns fewer coefficients than requested.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import ParameterError

__all__ = ["PowerSeries1"]


class PowerSeries1:
    """Series sum_k c_k y^k known through order N (len(coeffs) == N + 1)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ParameterError("a series needs at least the constant term")
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("PowerSeries1 is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def truncate(self, order: int) -> "PowerSeries1":
        if order > self.order:
            raise ParameterError("cannot extend a truncated series")
        return PowerSeries1(self.coeffs[: order + 1])

    def _common_order(self, other) -> int:
        return min(self.order, other.order)

    def __add__(self, other):
        n = self._common_order(other)
        return PowerSeries1([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)])

    def __sub__(self, other):
        n = self._common_order(other)
        return PowerSeries1([self.coeffs[k] - other.coeffs[k] for k in range(n + 1)])

    def __neg__(self):
        return PowerSeries1([-c for c in self.coeffs])

    def scale(self, factor) -> "PowerSeries1":
        return PowerSeries1([c * factor for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, PowerSeries1):
            return self.scale(other)
        n = self._common_order(other)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if isinstance(a, Fraction) and a == 0:
                continue
            for j in range(n + 1 - i):
                out[i + j] = out[i + j] + a * other.coeffs[j]
        return PowerSeries1(out)

    __rmul__ = __mul__

    def __truediv__(self, other: "PowerSeries1") -> "PowerSeries1":
        """Division; the divisor's constant term must be invertible."""
        n = self._common_order(other)
        b0 = other.coeffs[0]
        if isinstance(b0, Fraction) and b0 == 0:
            raise ZeroDivisionError("divisor has zero constant term")
        inv0 = Fraction(1) / b0 if isinstance(b0, Fraction) else b0.inverse()
        q = []
        for k in range(n + 1):
            acc = self.coeffs[k]
            for i in range(k):
                acc = acc - q[i] * other.coeffs[k - i]
            q.append(acc * inv0)
        return PowerSeries1(q)

    def shift_down(self, k: int) -> "PowerSeries1":
        """Divide by y^k; the first k coefficients must vanish."""
        for c in self.coeffs[:k]:
            if not (c == 0 or (hasattr(c, "is_zero") and c.is_zero())):
                raise ParameterError("series not divisible by y^%d" % k)
        return PowerSeries1(self.coeffs[k:])

    def __eq__(self, other):
        return isinstance(other, PowerSeries1) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"PowerSeries1({list(self.coeffs)!r})"
