"""Structured analysis reports.

A report is a plain dict with stable keys (schema ``milnorkit.report/1``,
documented in ``docs/report-schema.md``). Every verdict in it can be
recomputed from the echoed ``inputs`` of that verdict. Timings are kept out
of the payload so that two runs on the same germ give identical JSON.
"""

from __future__ import annotations

import json
from typing import Optional

from .index import (
    UnsupportedIndexError,
    VectorField,
    gsv_index,
    is_hamiltonian,
    ph_index,
    radial_gsv_index,
    tangency,
)
from .local import Budget
from .milnor import DECLARED, MilnorResult, milnor_number
from .obstruction import (
    decide_contact_triviality,
    decide_foliation_normal_triviality,
    decide_orthogonal_triviality,
)
from .parser import GermDefinition, format_polynomial

SCHEMA = "milnorkit.report/1"

__all__ = ["SCHEMA", "milnor_report", "decide_report", "index_report", "dumps"]


def _header(germ: GermDefinition) -> dict:
    return {
        "schema": SCHEMA,
        "label": germ.label,
        "variables": list(germ.ring.variables),
        "equations": [format_polynomial(f) for f in germ.equations],
        "ambient_dimension": germ.ring.dimension,
        "k": germ.k,
        "n": germ.n,
    }


def _budget_dict(budget: Budget) -> dict:
    return {
        "max_reductions": budget.max_reductions,
        "max_staircase": budget.max_staircase,
        "used_reductions": budget.used_reductions,
        "used_staircase": budget.used_staircase,
    }


def _milnor_dict(res: MilnorResult) -> dict:
    out = {"mu": res.mu, "method": res.method, "isolated": res.isolated, "smooth": res.smooth}
    if res.notice:
        out["notice"] = res.notice
    return out


def _resolve_milnor(germ: GermDefinition, declared_mu: Optional[int], budget: Budget) -> MilnorResult:
    if declared_mu is not None:
        return MilnorResult(mu=int(declared_mu), method=DECLARED)
    return milnor_number(germ, budget)


def milnor_report(germ: GermDefinition, declared_mu: Optional[int] = None, budget: Optional[Budget] = None) -> dict:
    budget = budget or Budget()
    res = _resolve_milnor(germ, declared_mu, budget)
    out = _header(germ)
    out["milnor"] = _milnor_dict(res)
    out["budgets"] = _budget_dict(budget)
    return out


def _field_section(germ: GermDefinition, declared_gsv: Optional[int], budget: Budget) -> dict:
    field = VectorField(germ.ring, germ.vector_field)
    tan = tangency(field, germ.equations, budget)
    section = {
        "components": [format_polynomial(c) for c in germ.vector_field],
        "hamiltonian": is_hamiltonian(germ),
        "tangent": tan.tangent,
        "tangent_to_fibres": tan.tangent_to_fibres,
    }
    gsv = gsv_index(germ, declared=declared_gsv, budget=budget)
    section["gsv"] = {"kind": gsv.kind, "value": gsv.value}
    return section


def index_report(
    germ: GermDefinition,
    radial: bool = False,
    declared_mu: Optional[int] = None,
    declared_gsv: Optional[int] = None,
    budget: Optional[Budget] = None,
) -> dict:
    """Poincare-Hopf index of the germ's field in the ambient space, and GSV indices."""
    budget = budget or Budget()
    out = _header(germ)
    indices: dict = {}
    if germ.vector_field is not None:
        ph = ph_index(VectorField(germ.ring, germ.vector_field), budget)
        indices["poincare_hopf"] = {"kind": ph.kind, "value": ph.value}
        out["field"] = _field_section(germ, declared_gsv, budget)
    if radial or germ.vector_field is None:
        res = _resolve_milnor(germ, declared_mu, budget)
        out["milnor"] = _milnor_dict(res)
        r = radial_gsv_index(germ.n, res.mu)
        indices["gsv_radial"] = {"kind": r.kind, "value": r.value}
    out["indices"] = indices
    out["budgets"] = _budget_dict(budget)
    return out


def decide_report(
    germ: GermDefinition,
    declared_mu: Optional[int] = None,
    declared_gsv: Optional[int] = None,
    budget: Optional[Budget] = None,
) -> dict:
    """Full report: mu, radial GSV index and every applicable triviality verdict."""
    budget = budget or Budget()
    if germ.n < 2:
        raise UnsupportedIndexError(f"triviality criteria need dim X >= 2, got n={germ.n}")
    res = _resolve_milnor(germ, declared_mu, budget)
    n = germ.n
    out = _header(germ)
    out["milnor"] = _milnor_dict(res)
    radial = radial_gsv_index(n, res.mu)
    out["indices"] = {"gsv_radial": {"kind": radial.kind, "value": radial.value}}
    verdicts = {
        "contact": decide_contact_triviality(n, res.mu).as_dict(),
        "orthogonal_radial": decide_orthogonal_triviality(n, radial.value).as_dict(),
    }
    foliation_gsv, foliation_source = radial.value, "radial"
    if germ.vector_field is not None:
        section = _field_section(germ, declared_gsv, budget)
        out["field"] = section
        g = section["gsv"]["value"]
        verdicts["orthogonal_field"] = decide_orthogonal_triviality(n, g).as_dict()
        foliation_gsv, foliation_source = g, "field"
    if n == 3:
        fol = decide_foliation_normal_triviality(foliation_gsv).as_dict()
        fol["field"] = foliation_source
        verdicts["foliation"] = fol
    out["verdicts"] = verdicts
    out["budgets"] = _budget_dict(budget)
    return out


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)
