"""Truncated Laurent series in the genus parameter lambda over exact rationals.

A :class:`LambdaSeries` stores integer numerators over one positive common
denominator, always reduced so that the gcd of every numerator and the
denominator is 1.  Leading zero coefficients are stripped, so two series are
equal exactly when their fields are equal.
"""
from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd
from numbers import Rational
from typing import Iterable, Sequence

if os.environ.get("GVLOCAL_BACKEND", "").lower() == "python":
    from gvlocal import _pykernels as _kern

    BACKEND = "python"
else:
    try:
        from gvlocal import _ckernels as _kern

        BACKEND = "cython"
    except ImportError:  # extension not built
        from gvlocal import _pykernels as _kern

        BACKEND = "python"

__all__ = [
    "BACKEND",
    "LambdaSeries",
    "NotInvertibleError",
    "default_order",
    "gv_kernel",
    "series_invert",
    "series_mul",
    "two_sin_half",
]


class NotInvertibleError(ZeroDivisionError):
    pass


def default_order(genus_cap: int) -> int:
    """Exclusive lambda bound used when reading genus ``0..genus_cap`` coefficients."""
    return 2 * genus_cap + 2


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class LambdaSeries:
    """``sum_e c_e lambda**e`` known for ``lowest <= e < order``."""

    __slots__ = ("lowest", "nums", "den", "order")

    def __init__(self, lowest: int, nums: Sequence[int], den: int, order: int):
        nums = list(nums)[: max(order - lowest, 0)]
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den, nums = -den, [-x for x in nums]
        strip = 0
        while strip < len(nums) and nums[strip] == 0:
            strip += 1
        nums = nums[strip:]
        lowest += strip
        if not nums:
            lowest, den = order, 1
        else:
            g = gcd(den, *nums)
            if g != 1:
                nums = [x // g for x in nums]
                den //= g
        # pad to the declared precision
        nums.extend([0] * (order - lowest - len(nums)))
        self.lowest = lowest
        self.nums = tuple(nums)
        self.den = den
        self.order = order

    @classmethod
    def from_coefficients(cls, lowest: int, coeffs: Iterable, order: int | None = None) -> LambdaSeries:
        fr = [_as_fraction(c) for c in coeffs]
        if order is None:
            order = lowest + len(fr)
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        return cls(lowest, [c.numerator * (den // c.denominator) for c in fr], den, order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff=1) -> LambdaSeries:
        c = _as_fraction(coeff)
        return cls(exponent, [c.numerator], c.denominator, order)

    @classmethod
    def zero(cls, order: int) -> LambdaSeries:
        return cls(order, [], 1, order)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.nums)

    def coeff(self, exponent: int) -> Fraction:
        if exponent >= self.order:
            raise IndexError(f"lambda^{exponent} is beyond the truncation order {self.order}")
        if exponent < self.lowest:
            return Fraction(0)
        return Fraction(self.nums[exponent - self.lowest], self.den)

    def is_zero(self) -> bool:
        return not self.nums

    def truncate(self, order: int) -> LambdaSeries:
        if order >= self.order:
            return self
        return LambdaSeries(self.lowest, self.nums, self.den, order)

    def agrees_with(self, other: LambdaSeries) -> bool:
        """Equality on the exponent range both series know."""
        order = min(self.order, other.order)
        return self.truncate(order) == other.truncate(order)

    def scale_variable(self, m: int) -> LambdaSeries:
        """Substitute ``lambda -> m*lambda``; the lambda^e coefficient scales by m**e."""
        if self.is_zero():
            return self
        if self.lowest >= 0:
            nums = [x * m ** (self.lowest + i) for i, x in enumerate(self.nums)]
            return LambdaSeries(self.lowest, nums, self.den, self.order)
        shift = -self.lowest
        nums = [x * m ** i for i, x in enumerate(self.nums)]
        return LambdaSeries(self.lowest, nums, self.den * m**shift, self.order)

    def __eq__(self, other):
        if not isinstance(other, LambdaSeries):
            return NotImplemented
        return (self.lowest, self.nums, self.den, self.order) == (
            other.lowest, other.nums, other.den, other.order)

    def __hash__(self):
        return hash((self.lowest, self.nums, self.den, self.order))

    def __repr__(self):
        terms = ", ".join(str(c) for c in self.coefficients)
        return f"LambdaSeries(lowest={self.lowest}, [{terms}], order={self.order})"

    def __neg__(self):
        return LambdaSeries(self.lowest, [-x for x in self.nums], self.den, self.order)

    def __add__(self, other):
        if not isinstance(other, LambdaSeries):
            return NotImplemented
        order = min(self.order, other.order)
        if self.is_zero() or other.is_zero():
            keep = other if self.is_zero() else self
            return keep.truncate(order)
        lo = min(self.lowest, other.lowest)
        den = self.den * other.den // gcd(self.den, other.den)
        out = [0] * (order - lo)
        for s in (self, other):
            f = den // s.den
            off = s.lowest - lo
            for i, x in enumerate(s.nums[: max(order - s.lowest, 0)]):
                out[off + i] += x * f
        return LambdaSeries(lo, out, den, order)

    def __sub__(self, other):
        if not isinstance(other, LambdaSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LambdaSeries):
            return series_mul(self, other)
        c = _as_fraction(other)
        return LambdaSeries(self.lowest, [x * c.numerator for x in self.nums],
                            self.den * c.denominator, self.order)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, e: int):
        if e < 0:
            return series_invert(self) ** (-e)
        result = None
        base = self
        while e:
            if e & 1:
                result = base if result is None else series_mul(result, base)
            e >>= 1
            if e:
                base = series_mul(base, base)
        if result is None:
            # relative precision of self carries over to the constant 1
            return LambdaSeries.monomial(0, self.order - self.lowest)
        return result


def series_mul(a: LambdaSeries, b: LambdaSeries) -> LambdaSeries:
    """Exact Cauchy product.

    The result is known up to ``min(a.order + b.lowest, b.order + a.lowest)``,
    which is the honest precision of a product of truncated series.
    """
    lowest = a.lowest + b.lowest
    order = min(a.order + b.lowest, b.order + a.lowest)
    if a.is_zero() or b.is_zero():
        return LambdaSeries.zero(order)
    n = order - lowest
    nums = _kern.convolve(list(a.nums), list(b.nums), n)
    return LambdaSeries(lowest, nums, a.den * b.den, order)


def series_invert(a: LambdaSeries) -> LambdaSeries:
    """Multiplicative inverse; lowest exponent negates, relative precision is kept."""
    if a.is_zero():
        raise NotInvertibleError("not invertible")
    n = a.order - a.lowest
    nums, den = _kern.invert(list(a.nums), n)
    # 1/(lambda^l * A/den) = lambda^-l * den * (1/A)
    return LambdaSeries(-a.lowest, [x * a.den for x in nums], den, -a.lowest + n)


def two_sin_half(m: int, order: int) -> LambdaSeries:
    """Taylor expansion of ``2*sin(m*lambda/2)`` below ``lambda**order``."""
    if m < 1:
        raise ValueError("m must be positive")
    if order < 2:
        raise ValueError("order must be at least 2")
    coeffs = []
    for e in range(1, order):
        if e % 2 == 0:
            coeffs.append(Fraction(0))
        else:
            k = (e - 1) // 2
            coeffs.append(Fraction((-1) ** k * 2 * m**e, 2**e * factorial(e)))
    return LambdaSeries.from_coefficients(1, coeffs, order)


@lru_cache(maxsize=4096)
def gv_kernel(g: int, m: int, order: int) -> LambdaSeries:
    """``(2*sin(m*lambda/2))**(2g-2)`` below ``lambda**order``; lowest exponent ``2g-2``."""
    if g < 0:
        raise ValueError("genus must be nonnegative")
    lowest = 2 * g - 2
    rel = order - lowest
    if rel <= 0:
        return LambdaSeries.zero(order)
    if g == 1:
        return LambdaSeries.monomial(0, order)
    s = two_sin_half(m, max(rel + 1, 2))
    if g == 0:
        return series_invert(series_mul(s, s)).truncate(order)
    return (s ** (2 * g - 2)).truncate(order)
