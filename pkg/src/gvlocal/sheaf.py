"""Hilbert polynomials of one-dimensional sheaves and slope stability checks.

For a sheaf of pure dimension one, ``P(n) = slope*n + chi`` where ``slope``
is the degree against the polarization.  Reduced polynomials all have
leading coefficient 1, so comparing them for large ``n`` comes down to
comparing ``chi/slope``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from gvlocal.ade import euler_char_chain

__all__ = [
    "AuditRow",
    "HilbertPoly1D",
    "LemmaAudit",
    "ModuliEnumeration",
    "Order",
    "StabilityVerdict",
    "SubobjectCase",
    "compare_reduced",
    "lemma_iv_audit",
    "moduli_enumeration",
    "reduced_poly",
    "stability_audit_SXbeta",
]


class Order(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


@dataclass(frozen=True)
class HilbertPoly1D:
    slope: Fraction
    chi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "slope", Fraction(self.slope))
        object.__setattr__(self, "chi", Fraction(self.chi))

    def __sub__(self, other: HilbertPoly1D) -> HilbertPoly1D:
        return HilbertPoly1D(self.slope - other.slope, self.chi - other.chi)

    def __call__(self, n) -> Fraction:
        return self.slope * n + self.chi

    def __str__(self) -> str:
        lead = "n" if self.slope == 1 else f"{self.slope}n"
        if self.chi == 0:
            return lead
        return f"{lead} {'-' if self.chi < 0 else '+'} {abs(self.chi)}"


def reduced_poly(p: HilbertPoly1D) -> tuple[int, Fraction]:
    """``(1, chi/slope)``: the coefficients of ``n + chi/slope``."""
    if p.slope <= 0:
        raise ValueError("not pure dimension one")
    return 1, p.chi / p.slope


def compare_reduced(g: HilbertPoly1D, f: HilbertPoly1D) -> Order:
    """Eventual order of the reduced polynomials of ``g`` and ``f``."""
    cg = reduced_poly(g)[1]
    cf = reduced_poly(f)[1]
    if cg < cf:
        return Order.LESS
    if cg > cf:
        return Order.GREATER
    return Order.EQUAL


@dataclass(frozen=True)
class StabilityVerdict:
    chi_sub: int
    slope_sub: Fraction
    slope_total: Fraction
    relation: Order  # reduced polynomial of the subsheaf against the whole
    is_whole: bool  # chi = 1 and full slope, i.e. G = F

    @property
    def destabilizing(self) -> bool:
        return self.relation is not Order.LESS

    @property
    def equality_forces_whole(self) -> bool:
        return self.relation is not Order.EQUAL or self.is_whole


def stability_audit_SXbeta(chiG: int, slopeG, slopeF) -> StabilityVerdict:
    """Test a subsheaf of a sheaf with ``chi = 1`` against the slope inequality.

    With ``chi(F) = 1`` the condition reads ``chi(G)/slope(G) <= 1/slope(F)``;
    since ``slope(G) <= slope(F)`` and ``chi(G)`` is an integer, equality
    needs ``chi(G) = 1`` and ``slope(G) = slope(F)``.
    """
    slopeG, slopeF = Fraction(slopeG), Fraction(slopeF)
    if not 0 < slopeG <= slopeF:
        raise ValueError("need 0 < slopeG <= slopeF")
    if int(chiG) != chiG:
        raise ValueError("chiG must be an integer")
    rel = compare_reduced(HilbertPoly1D(slopeG, chiG), HilbertPoly1D(slopeF, 1))
    return StabilityVerdict(int(chiG), slopeG, slopeF, rel, chiG == 1 and slopeG == slopeF)


@dataclass(frozen=True)
class SubobjectCase:
    """A subsheaf of ``O_{C_i}`` of one of the three shapes in the stability argument.

    ``subcurve``: the ideal of ``C_j`` in ``C_i``.
    ``zero_dimensional``: the ideal of a point scheme of length ``chi_correction``.
    ``embedded``: the ideal of a scheme of generic length ``j`` carrying an
    extra zero-dimensional piece with ``chi = chi_correction``.
    """

    kind: str
    i: int
    j: int
    LC: int
    chi_correction: int = 0

    def __post_init__(self):
        if self.kind not in ("subcurve", "zero_dimensional", "embedded"):
            raise ValueError(f"unknown subobject kind {self.kind!r}")
        if self.kind != "zero_dimensional" and not 1 <= self.j < self.i:
            raise ValueError("need 1 <= j < i")
        if self.chi_correction < 0:
            raise ValueError("chi correction must be nonnegative")

    def ambient(self) -> HilbertPoly1D:
        return HilbertPoly1D(self.i * self.LC, euler_char_chain(self.i))

    def polynomial(self) -> HilbertPoly1D:
        whole = self.ambient()
        if self.kind == "zero_dimensional":
            return HilbertPoly1D(whole.slope, whole.chi - self.chi_correction)
        quotient = HilbertPoly1D(self.j * self.LC, euler_char_chain(self.j))
        sub = whole - quotient
        return HilbertPoly1D(sub.slope, sub.chi - self.chi_correction)


@dataclass(frozen=True)
class AuditRow:
    case: SubobjectCase
    sub: HilbertPoly1D
    whole: HilbertPoly1D
    margin: Fraction  # reduced constant of whole minus that of sub

    @property
    def strict(self) -> bool:
        return self.margin > 0

    def as_dict(self) -> dict:
        return {
            "kind": self.case.kind,
            "i": self.case.i,
            "j": self.case.j,
            "LC": self.case.LC,
            "chi_correction": self.case.chi_correction,
            "sub": str(self.sub),
            "whole": str(self.whole),
            "margin": str(self.margin),
            "strict": self.strict,
        }


@dataclass(frozen=True)
class LemmaAudit:
    i: int
    LC: int
    rows: tuple[AuditRow, ...]

    @property
    def passed(self) -> bool:
        return all(r.strict for r in self.rows)

    def subcurve_rows(self) -> list[AuditRow]:
        return [r for r in self.rows if r.case.kind == "subcurve"]


def _row(case: SubobjectCase) -> AuditRow:
    sub, whole = case.polynomial(), case.ambient()
    return AuditRow(case, sub, whole, reduced_poly(whole)[1] - reduced_poly(sub)[1])


def lemma_iv_audit(i: int, LC: int, point_lengths: tuple[int, ...] = (1,)) -> LemmaAudit:
    """Check that every proper subsheaf shape of ``O_{C_i}`` has smaller reduced polynomial.

    ``point_lengths`` are the lengths used for the zero-dimensional and
    embedded-point shapes.
    """
    if not 1 <= i <= 6:
        raise ValueError("i must lie in 1..6")
    if LC < 1:
        raise ValueError("L.C must be a positive integer")
    rows = [_row(SubobjectCase("subcurve", i, j, LC)) for j in range(1, i)]
    for length in point_lengths:
        if length < 1:
            raise ValueError("point lengths must be positive")
        rows.append(_row(SubobjectCase("zero_dimensional", i, 0, LC, length)))
        rows.extend(_row(SubobjectCase("embedded", i, j, LC, length)) for j in range(1, i))
    return LemmaAudit(i, LC, tuple(rows))


@dataclass(frozen=True)
class ModuliEnumeration:
    d: int
    length: int
    sheaf: int | None  # index i of the single point O_{C_i}, None if empty

    @property
    def is_empty(self) -> bool:
        return self.sheaf is None

    def __str__(self) -> str:
        return "empty" if self.sheaf is None else f"{{O_C{self.sheaf}}}"


def moduli_enumeration(d: int, length: int) -> ModuliEnumeration:
    """Stable sheaves with ``ch2 = d[C]`` and ``chi = 1`` supported on the curve."""
    if not 1 <= length <= 6:
        raise ValueError("length must lie in 1..6")
    if d < 1:
        raise ValueError("d must be positive")
    return ModuliEnumeration(d, length, d if d <= length else None)
