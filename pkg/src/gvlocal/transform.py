"""Conversion between Gromov-Witten and Gopakumar-Vafa invariant tables.

The all-genus multiple-cover identity

    sum_{B,g} N^g_B q^B lambda^(2g-2)
        = sum_{b,g,m} n^g_b / m * (2 sin(m lambda / 2))^(2g-2) q^(m b)

is expanded forward (:func:`gw_from_gv`) and solved backward either in
genus 0 through Moebius inversion (:func:`gv_from_gw_genus0`) or in all
genera as a triangular system (:func:`gv_from_gw_all_genus`).

Curve classes are tuples of nonnegative ints in a fixed basis; ``k | B``
means ``k`` divides every coordinate.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterator, Literal, Mapping, Sequence

from gvlocal.series import default_order, gv_kernel

__all__ = [
    "CapExceededError",
    "DegreeFunctional",
    "IntegralityReport",
    "InvariantTable",
    "LocalMultiplicities",
    "class_gcd",
    "divides",
    "divisors",
    "gv_from_gw_all_genus",
    "gv_from_gw_genus0",
    "gw_from_gv",
    "integrality_check",
    "local_contribution",
    "mobius",
]

CurveClass = tuple[int, ...]
Kind = Literal["gv", "gw"]


class CapExceededError(ValueError):
    """An entry lies outside the degree or genus cap of its table."""


@dataclass(frozen=True)
class DegreeFunctional:
    """Positive integer weights; ``degree(B) = sum w_i B_i``."""

    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if not self.weights or any(w <= 0 for w in self.weights):
            raise ValueError(f"degree functional weights must be positive, got {self.weights}")

    @property
    def rank(self) -> int:
        return len(self.weights)

    def __call__(self, beta: Sequence[int]) -> int:
        return sum(w * b for w, b in zip(self.weights, beta))

    def sort_key(self, beta: CurveClass) -> tuple[int, CurveClass]:
        return (self(beta), beta)


def class_gcd(beta: Sequence[int]) -> int:
    return gcd(*beta)


def divides(k: int, beta: Sequence[int]) -> bool:
    return all(b % k == 0 for b in beta)


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for positive integers")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


@dataclass
class InvariantTable:
    """Sparse table ``(class, genus) -> value``.

    Zero values are dropped on insertion, so an absent key means 0.  ``kind``
    is ``"gv"`` (BPS numbers n^g_B, integral when the integrality conjecture
    holds) or ``"gw"`` (Gromov-Witten invariants N^g_B).
    """

    kind: Kind
    functional: DegreeFunctional
    degree_cap: int
    genus_cap: int
    entries: dict[tuple[CurveClass, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in ("gv", "gw"):
            raise ValueError(f"unknown table kind {self.kind!r}")
        if not isinstance(self.functional, DegreeFunctional):
            self.functional = DegreeFunctional(tuple(self.functional))
        raw, self.entries = self.entries, {}
        for (beta, g), value in raw.items():
            self.set(beta, g, value)

    @property
    def rank(self) -> int:
        return self.functional.rank

    def check_key(self, beta: Sequence[int], g: int) -> CurveClass:
        beta = tuple(int(b) for b in beta)
        if len(beta) != self.rank:
            raise ValueError(f"class {beta} does not have rank {self.rank}")
        if any(b < 0 for b in beta) or not any(beta):
            raise ValueError(f"class {beta} must be nonzero with nonnegative coordinates")
        if g < 0:
            raise ValueError(f"negative genus {g} at class {beta}")
        if self.functional(beta) > self.degree_cap:
            raise CapExceededError(
                f"class {beta} has degree {self.functional(beta)} > degree_cap {self.degree_cap}")
        if g > self.genus_cap:
            raise CapExceededError(f"class {beta} genus {g} > genus_cap {self.genus_cap}")
        return beta

    def set(self, beta: Sequence[int], g: int, value) -> None:
        beta = self.check_key(beta, g)
        if isinstance(value, float):
            raise TypeError(f"inexact float value {value!r} at class {beta}")
        value = Fraction(value)
        if value:
            self.entries[(beta, g)] = value
        else:
            self.entries.pop((beta, g), None)

    def get(self, beta: Sequence[int], g: int = 0) -> Fraction:
        return self.entries.get((tuple(beta), g), Fraction(0))

    def classes(self) -> list[CurveClass]:
        """Support classes in processing order (degree, then lexicographic)."""
        return sorted({b for b, _ in self.entries}, key=self.functional.sort_key)

    def sorted_items(self) -> Iterator[tuple[CurveClass, int, Fraction]]:
        key = lambda item: (self.functional(item[0][0]), item[0][0], item[0][1])
        for (beta, g), v in sorted(self.entries.items(), key=key):
            yield beta, g, v

    def empty_like(self, kind: Kind) -> InvariantTable:
        return InvariantTable(kind, self.functional, self.degree_cap, self.genus_cap)

    def genus0(self) -> dict[CurveClass, Fraction]:
        return {b: v for (b, g), v in self.entries.items() if g == 0}

    def multiples_closure(self) -> list[CurveClass]:
        """All ``k*b`` within the degree cap for ``b`` in the support, sorted."""
        out = set()
        for beta in {b for b, _ in self.entries}:
            deg = self.functional(beta)
            for k in range(1, self.degree_cap // deg + 1):
                out.add(tuple(k * x for x in beta))
        return sorted(out, key=self.functional.sort_key)

    def __eq__(self, other):
        if not isinstance(other, InvariantTable):
            return NotImplemented
        return (self.kind, self.functional, self.degree_cap, self.genus_cap, self.entries) == (
            other.kind, other.functional, other.degree_cap, other.genus_cap, other.entries)


@lru_cache(maxsize=4096)
def _kernel_column(g_src: int, m: int, genus_cap: int) -> tuple[Fraction, ...]:
    """``[lambda^(2g-2)] gv_kernel(g_src, m) / m`` for ``g = 0..genus_cap``."""
    ker = gv_kernel(g_src, m, default_order(genus_cap))
    return tuple(ker.coeff(2 * g - 2) / m for g in range(genus_cap + 1))


def _require_kind(table: InvariantTable, kind: Kind) -> None:
    if table.kind != kind:
        raise ValueError(f"expected a {kind!r} table, got {table.kind!r}")


def gw_from_gv(gv: InvariantTable, functional: DegreeFunctional | None = None) -> InvariantTable:
    """Expand BPS numbers into Gromov-Witten invariants up to the table caps."""
    _require_kind(gv, "gv")
    functional = functional or gv.functional
    gw = InvariantTable("gw", functional, gv.degree_cap, gv.genus_cap)
    acc: dict[tuple[CurveClass, int], Fraction] = {}
    for (beta, g_src), n in gv.entries.items():
        deg = functional(beta)
        if deg > gv.degree_cap:
            raise CapExceededError(f"class {beta} exceeds degree_cap {gv.degree_cap}")
        if g_src > gv.genus_cap:
            raise CapExceededError(f"class {beta} genus {g_src} exceeds genus_cap {gv.genus_cap}")
        for m in range(1, gv.degree_cap // deg + 1):
            target = tuple(m * b for b in beta)
            col = _kernel_column(g_src, m, gv.genus_cap)
            for g in range(g_src, gv.genus_cap + 1):
                c = col[g]
                if c:
                    key = (target, g)
                    acc[key] = acc.get(key, 0) + n * c
    for (beta, g), v in acc.items():
        gw.set(beta, g, v)
    return gw


def gv_from_gw_genus0(gw: InvariantTable) -> InvariantTable:
    """Genus-0 BPS numbers: ``n_B = sum_{k | B} mu(k) N_{B/k} / k^3``.

    Entries of genus > 0 are ignored.  Non-integral results are kept and can be
    audited with :func:`integrality_check`.
    """
    _require_kind(gw, "gw")
    gv = gw.empty_like("gv")
    n0 = gw.genus0()
    for beta in gw.multiples_closure():
        total = Fraction(0)
        for k in divisors(class_gcd(beta)):
            mu = mobius(k)
            if mu:
                value = n0.get(tuple(b // k for b in beta))
                if value:
                    total += mu * value / k**3
        gv.set(beta, 0, total)
    return gv


def gv_from_gw_all_genus(gw: InvariantTable) -> InvariantTable:
    """Solve the multiple-cover identity for all genera up to ``genus_cap``.

    Classes are processed by increasing degree.  For each class the multiple
    covers of already-solved smaller classes are subtracted, and the remaining
    lambda-series is expanded in the unitriangular basis
    ``(2 sin(lambda/2))^(2g-2)``.
    """
    _require_kind(gw, "gw")
    gcap = gw.genus_cap
    gv = gw.empty_like("gv")
    for beta in gw.multiples_closure():
        # residual[g] = coefficient of lambda^(2g-2)
        residual = [gw.get(beta, g) for g in range(gcap + 1)]
        for m in divisors(class_gcd(beta))[1:]:
            base = tuple(b // m for b in beta)
            for g_src in range(gcap + 1):
                n = gv.get(base, g_src)
                if n:
                    col = _kernel_column(g_src, m, gcap)
                    for g in range(g_src, gcap + 1):
                        residual[g] -= n * col[g]
        for g_src in range(gcap + 1):
            n = residual[g_src]
            if not n:
                continue
            gv.set(beta, g_src, n)
            col = _kernel_column(g_src, 1, gcap)
            for g in range(g_src, gcap + 1):
                residual[g] -= n * col[g]
    return gv


@dataclass(frozen=True)
class IntegralityReport:
    failures: tuple[tuple[CurveClass, int, Fraction], ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        if self.passed:
            return "integrality: PASS"
        lines = [f"integrality: FAIL ({len(self.failures)} non-integer entries)"]
        for beta, g, v in self.failures:
            lines.append(f"  class={list(beta)} genus={g} value={v}")
        return "\n".join(lines)


def integrality_check(gv: InvariantTable) -> IntegralityReport:
    return IntegralityReport(tuple(
        (beta, g, v) for beta, g, v in gv.sorted_items() if v.denominator != 1))


@dataclass(frozen=True)
class LocalMultiplicities:
    """Hilbert-scheme multiplicities ``n_1..n_l`` of the thickened curves ``C_i``."""

    n: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "n", tuple(int(x) for x in self.n))
        if not 1 <= len(self.n) <= 6:
            raise ValueError(f"length must be between 1 and 6, got {len(self.n)}")

    @property
    def length(self) -> int:
        return len(self.n)

    def __getitem__(self, i: int) -> int:
        """1-based; zero beyond the length."""
        return self.n[i - 1] if 1 <= i <= len(self.n) else 0

    def as_gv_table(self, degree_cap: int, genus_cap: int = 0) -> InvariantTable:
        table = InvariantTable("gv", DegreeFunctional((1,)), degree_cap, genus_cap)
        for i, v in enumerate(self.n, start=1):
            if i <= degree_cap:
                table.set((i,), 0, v)
        return table


def local_contribution(mult: LocalMultiplicities, d: int) -> Fraction:
    """Genus-0 contribution of the curve to ``N_{d[C]}``: ``sum_{k|d} n_{d/k}/k^3``."""
    if d < 1:
        raise ValueError("d must be positive")
    return sum((Fraction(mult[d // k], k**3) for k in divisors(d)), Fraction(0))


def table_from_mapping(kind: Kind, values: Mapping[tuple[CurveClass, int], object],
                       functional: Sequence[int], degree_cap: int, genus_cap: int) -> InvariantTable:
    return InvariantTable(kind, DegreeFunctional(tuple(functional)), degree_cap, genus_cap,
                          {k: Fraction(v) for k, v in values.items()})
