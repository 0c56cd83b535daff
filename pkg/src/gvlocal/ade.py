"""Local algebra of contractible curves near the residual A_k points.

Near an A_k point the partial resolution is the hypersurface
``xy + z^(k+1) = 0`` and the curve has ideal ``(x, z)``.  Monomials are kept
in the normal form ``x^a y^b z^c`` with ``c <= k`` by rewriting
``z^(k+1) -> -xy``.  Along the curve ``y`` is a unit, ``z`` is a uniformizer
and ``x`` has order ``k+1``; symbolic powers are the valuation ideals of that
order.

The resolution chart is ``x = u^(k+1) v^k, y = v, z = u v``; the order of
vanishing of a function at the point over the singularity is its ``v``
exponent.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

__all__ = [
    "CASES",
    "E8_5_CONSTRAINT_OVERRIDE",
    "AkIdeal",
    "AkMonomial",
    "ChartExponents",
    "ContractionCase",
    "DegreeBreakdown",
    "OverrideRequiredError",
    "chart_pullback",
    "degree_breakdown",
    "euler_char_chain",
    "get_case",
    "normal_form",
    "quotient_degree",
    "symbolic_power",
    "valuation",
    "vanishing_order",
]


class OverrideRequiredError(ValueError):
    pass


@dataclass(frozen=True)
class ContractionCase:
    name: str
    singularity: str
    length: int
    residual_singularities: tuple[int, ...]
    # residual A_k points whose local form is not xy + z^(k+1) = 0 with curve (x, z)
    nonstandard: tuple[int, ...] = ()

    @property
    def residual_label(self) -> str:
        if not self.residual_singularities:
            return "none"
        return ", ".join(f"A{k}" for k in self.residual_singularities)


CASES: dict[str, ContractionCase] = {
    c.name: c
    for c in (
        ContractionCase("A1_1", "A1", 1, ()),
        ContractionCase("D4_2", "D4", 2, (1, 1, 1)),
        ContractionCase("E6_3", "E6", 3, (2, 2, 1)),
        ContractionCase("E7_4", "E7", 4, (3, 2, 1)),
        ContractionCase("E8_5", "E8", 5, (4, 3), nonstandard=(4,)),
        ContractionCase("E8_6", "E8", 6, (4, 2, 1)),
    )
}


def get_case(name: str) -> ContractionCase:
    try:
        return CASES[name]
    except KeyError:
        raise KeyError(f"unknown contraction case {name!r}; expected one of {', '.join(CASES)}") from None


@dataclass(frozen=True, order=True)
class AkMonomial:
    """``x^a y^b z^c`` in the A_k ring; the sign is carried but never compared."""

    a: int
    b: int
    c: int
    k: int
    sign: int = field(default=1, compare=False)

    def __mul__(self, other: AkMonomial) -> AkMonomial:
        if self.k != other.k:
            raise ValueError("monomials from different rings")
        return normal_form(self.a + other.a, self.b + other.b, self.c + other.c, self.k,
                           self.sign * other.sign)

    def divides(self, other: AkMonomial) -> bool:
        """Whether ``other`` is a monomial multiple of ``self`` in the ring.

        A multiple ``self * x^p y^q z^r`` either keeps ``c >= self.c`` or wraps
        the z-exponent once, which costs one extra ``x`` and one ``y``.
        """
        if self.k != other.k:
            return False
        if other.c >= self.c:
            return other.a >= self.a and other.b >= self.b
        return other.a >= self.a + 1 and other.b >= self.b + 1

    def __str__(self) -> str:
        parts = []
        for var, e in (("x", self.a), ("y", self.b), ("z", self.c)):
            if e == 1:
                parts.append(var)
            elif e > 1:
                parts.append(f"{var}^{e}")
        body = "".join(parts) or "1"
        return body if self.sign > 0 else "-" + body


def normal_form(a: int, b: int, c: int, k: int, sign: int = 1) -> AkMonomial:
    if min(a, b, c) < 0 or k < 1:
        raise ValueError("exponents must be nonnegative and k >= 1")
    q, c = divmod(c, k + 1)
    if q % 2:
        sign = -sign
    return AkMonomial(a + q, b + q, c, k, sign)


def valuation(m: AkMonomial) -> int:
    """Order along the curve: ``v(x) = k+1, v(z) = 1, v(y) = 0``."""
    return m.a * (m.k + 1) + m.c


@dataclass(frozen=True)
class AkIdeal:
    k: int
    generators: tuple[AkMonomial, ...]

    def __contains__(self, m: AkMonomial) -> bool:
        m = normal_form(m.a, m.b, m.c, m.k)
        return any(g.divides(m) for g in self.generators)

    def __str__(self) -> str:
        return "(" + ",".join(str(g) for g in self.generators) + ")"


def symbolic_power(k: int, j: int) -> AkIdeal:
    """Minimal monomial generators of ``I^(j)`` for ``I = (x, z)``."""
    if j < 1:
        raise ValueError("j must be at least 1")
    cands = []
    for c in range(k + 1):
        a = max(0, -(-(j - c) // (k + 1)))
        cands.append(AkMonomial(a, 0, c, k))
    minimal = [m for m in cands
               if not any(o != m and o.a <= m.a and o.c <= m.c for o in cands)]
    minimal.sort(key=lambda m: (-m.a, m.c))
    return AkIdeal(k, tuple(minimal))


@dataclass(frozen=True)
class ChartExponents:
    u_exp: int
    v_exp: int


def chart_pullback(m: AkMonomial) -> ChartExponents:
    k = m.k
    return ChartExponents(m.a * (k + 1) + m.c, m.a * k + m.b + m.c)


def valuation_stratum(k: int, j: int) -> list[AkMonomial]:
    """Normal monomials with ``b = 0`` of valuation exactly ``j``."""
    out = []
    for a in range(j // (k + 1) + 1):
        c = j - a * (k + 1)
        if 0 <= c <= k:
            out.append(AkMonomial(a, 0, c, k))
    return out


def vanishing_order(k: int, j: int) -> int:
    """Order of vanishing at the singular point of a local generator of ``I^(j)/I^(j+1)``."""
    if j < 1:
        raise ValueError("j must be at least 1")
    order = min(chart_pullback(m).v_exp for m in valuation_stratum(k, j))
    assert order == j - j // (k + 1)
    return order


# Orders for the A4 point of the length-5 case, chosen so that each quotient
# has degree -1 given the standard A3 orders.  Not computed from a local model.
E8_5_CONSTRAINT_OVERRIDE: dict[int, dict[int, int]] = {
    4: {j: 2 * j + 1 - (j - j // 4) for j in range(1, 5)},
}


@dataclass(frozen=True)
class DegreeBreakdown:
    case: str
    j: int
    pullback_degree: int
    orders: tuple[tuple[int, int], ...]  # (k, order) per residual point
    degree: int
    constraint_derived: bool

    def formula(self) -> str:
        terms = " - ".join(str(o) for _, o in self.orders)
        rhs = f"{self.pullback_degree} - {terms}" if terms else str(self.pullback_degree)
        return f"{rhs} = {self.degree}"


def degree_breakdown(case: ContractionCase | str, j: int,
                     overrides: Mapping[int, Mapping[int, int]] | None = None) -> DegreeBreakdown:
    if isinstance(case, str):
        case = get_case(case)
    if not 1 <= j <= case.length - 1:
        raise ValueError(f"j must lie in 1..{case.length - 1} for {case.name}, got {j}")
    overrides = overrides or {}
    missing = [k for k in case.nonstandard if k not in overrides or j not in overrides[k]]
    if missing:
        raise OverrideRequiredError(
            f"nonstandard A{missing[0]} local form required for {case.name}: supply override orders")
    orders = []
    for k in case.residual_singularities:
        if k in overrides and j in overrides[k]:
            orders.append((k, int(overrides[k][j])))
        else:
            orders.append((k, vanishing_order(k, j)))
    pulled = 2 * j
    return DegreeBreakdown(case.name, j, pulled, tuple(orders),
                           pulled - sum(o for _, o in orders), bool(case.nonstandard))


def quotient_degree(case: ContractionCase | str, j: int,
                    overrides: Mapping[int, Mapping[int, int]] | None = None) -> int:
    """Degree of ``I^(j)/I^(j+1)`` on the curve: ``2j`` minus the vanishing orders."""
    return degree_breakdown(case, j, overrides).degree


def euler_char_chain(i: int, case: ContractionCase | str | None = None,
                     overrides: Mapping[int, Mapping[int, int]] | None = None) -> int:
    """``chi(O_{C_i})`` built up along ``0 -> I^(j)/I^(j+1) -> O_{C_{j+1}} -> O_{C_j} -> 0``.

    Each graded piece is a line bundle ``O(d)`` on the rational curve, with
    ``chi = d + 1``.  Without a case, ``d = -1`` for every step; with a case the
    degrees come from :func:`quotient_degree` and ``i`` is bounded by its length.
    """
    top = 6 if case is None else (get_case(case) if isinstance(case, str) else case).length
    if not 1 <= i <= top:
        raise ValueError(f"i must lie in 1..{top}")
    chi = 1
    for j in range(1, i):
        d = -1 if case is None else quotient_degree(case, j, overrides)
        chi += d + 1
    return chi
