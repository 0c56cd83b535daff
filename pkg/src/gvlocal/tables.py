"""Plain-text and JSON renderings of the local tables and audits."""
from __future__ import annotations

from typing import Mapping

from gvlocal.ade import (
    CASES,
    E8_5_CONSTRAINT_OVERRIDE,
    ContractionCase,
    degree_breakdown,
    symbolic_power,
    valuation_stratum,
    vanishing_order,
)
from gvlocal.sheaf import lemma_iv_audit, moduli_enumeration, stability_audit_SXbeta
from gvlocal.transform import DegreeFunctional, InvariantTable, gw_from_gv

CONSTRAINT_BANNER = ("NOTE: constraint-derived A4 orders (chosen so the degree is -1; "
                     "not computed from a local model)")


def _grid(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    sep = "+" + "+".join("-" * (w + 2) for w in widths) + "+"
    out = [sep]
    for n, r in enumerate(cells):
        out.append("| " + " | ".join(c.center(w) for c, w in zip(r, widths)) + " |")
        if n == 0:
            out.append(sep)
    out.append(sep)
    return "\n".join(out)


def default_overrides(case: ContractionCase) -> dict[int, dict[int, int]]:
    return dict(E8_5_CONSTRAINT_OVERRIDE) if case.nonstandard else {}


def singularity_rows() -> list[dict]:
    return [{"case": c.name, "p": c.singularity, "length": c.length,
             "sing": c.residual_label, "residual_k": list(c.residual_singularities)}
            for c in CASES.values()]


def singularity_text() -> str:
    return _grid(["p", "l", "Sing(S-bar)"],
                 [[r["p"], r["length"], r["sing"]] for r in singularity_rows()])


def ak_rows(k: int, jmax: int = 5) -> list[dict]:
    rows = []
    for j in range(1, jmax + 1):
        gens = valuation_stratum(k, j)
        rows.append({"j": j, "ideal": str(symbolic_power(k, j)),
                     "generator": str(gens[0]), "ord": vanishing_order(k, j)})
    return rows


def ak_text(k: int, jmax: int = 5) -> str:
    vk = "v" if k == 1 else f"v^{k}"
    title = f"A{k}: xy + z^{k + 1} = 0, curve (x,z), chart x=u^{k + 1}{vk}, y=v, z=uv"
    body = _grid(["j", "I^(j)", "generator", "ord(g)"],
                 [[r["j"], r["ideal"], r["generator"], r["ord"]] for r in ak_rows(k, jmax)])
    return title + "\n" + body


def degree_rows(case: ContractionCase, overrides: Mapping | None = None) -> list[dict]:
    if overrides is None:
        overrides = default_overrides(case)
    rows = []
    for j in range(1, case.length):
        b = degree_breakdown(case, j, overrides)
        rows.append({"case": case.name, "j": j, "pullback_degree": b.pullback_degree,
                     "orders": [{"k": k, "ord": o} for k, o in b.orders],
                     "degree": b.degree, "formula": b.formula(),
                     "constraint_derived": b.constraint_derived})
    return rows


def degree_text(case: ContractionCase, overrides: Mapping | None = None,
                only_j: int | None = None) -> str:
    rows = degree_rows(case, overrides)
    if only_j is not None:
        rows = [r for r in rows if r["j"] == only_j]
    lines = [f"{case.name}: p = {case.singularity}, length {case.length}, Sing = {case.residual_label}"]
    if case.nonstandard:
        lines.append(CONSTRAINT_BANNER)
    if not rows:
        lines.append("(no quotients: length 1)")
    for r in rows:
        lines.append(f"  j={r['j']}: deg I^({r['j']})/I^({r['j'] + 1}) = {r['formula']}")
    return "\n".join(lines)


def multiple_cover_rows(dmax: int = 20, genus_cap: int = 1) -> list[dict]:
    gv = InvariantTable("gv", DegreeFunctional((1,)), dmax, genus_cap, {((1,), 0): 1})
    gw = gw_from_gv(gv)
    return [{"d": d, **{f"N{g}": str(gw.get((d,), g)) for g in range(genus_cap + 1)}}
            for d in range(1, dmax + 1)]


def multiple_cover_text(dmax: int = 20, genus_cap: int = 1) -> str:
    rows = multiple_cover_rows(dmax, genus_cap)
    header = ["d"] + [f"N^{g}_d" for g in range(genus_cap + 1)]
    return ("single class with n^0 = 1\n"
            + _grid(header, [[r["d"]] + [r[f"N{g}"] for g in range(genus_cap + 1)] for r in rows]))


def audit_rows(i: int, LC: int) -> list[dict]:
    return [r.as_dict() for r in lemma_iv_audit(i, LC).rows]


def audit_text(i: int, LC: int) -> str:
    audit = lemma_iv_audit(i, LC)
    lines = [f"O_C{i} with L.C = {LC}: " + ("PASS" if audit.passed else "FAIL")]
    if not audit.subcurve_rows():
        lines.append("  no proper subcurves (vacuous)")
    for r in audit.rows:
        c = r.case
        label = {"subcurve": f"I(C{c.j} in C{c.i})",
                 "zero_dimensional": f"I(Z), chi(O_Z)={c.chi_correction}",
                 "embedded": f"I(Z), generic length {c.j}, chi(O_Y)={c.chi_correction}"}[c.kind]
        rel = "<" if r.strict else ">="
        lines.append(f"  {c.kind:16s} {label:36s} P={r.sub}  vs  {r.whole}: "
                     f"reduced {rel}, margin {r.margin}")
    lines.append(f"  S(X,beta) sweep, slope(F) = {i * LC}:")
    for j in range(1, i + 1):
        for chi in (0, 1):
            v = stability_audit_SXbeta(chi, j * LC, i * LC)
            note = "G = F" if v.is_whole else ("would destabilize" if v.destabilizing else "ok")
            lines.append(f"    chi(G)={chi} slope(G)={j * LC}: {v.relation.value} ({note})")
    return "\n".join(lines)


def moduli_text() -> str:
    rows = []
    for c in CASES.values():
        for d in range(1, c.length + 2):
            rows.append([c.name, d, str(moduli_enumeration(d, c.length))])
    return _grid(["case", "d", "S_C(X,d[C])"], rows)
