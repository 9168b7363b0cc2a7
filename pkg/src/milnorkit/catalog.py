"""The shipped catalog of classical germs and its self-verification."""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from importlib import resources
from typing import Dict, List, Optional, Tuple

from .local import Budget
from .parser import GermDefinition, germ_from_dict
from .report import decide_report

__all__ = ["CatalogEntry", "load_catalog", "observed_values", "verify_entry", "run_catalog"]


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    germ: GermDefinition
    expected: Dict[str, object]
    provenance: str
    source: dict


def _entries_from(obj: dict) -> List[CatalogEntry]:
    out = []
    for raw in obj["entries"]:
        out.append(
            CatalogEntry(
                label=raw["label"],
                germ=germ_from_dict(raw["germ"]),
                expected=dict(raw["expected"]),
                provenance=raw.get("provenance", ""),
                source=raw["germ"],
            )
        )
    return sorted(out, key=lambda e: e.label)


def load_catalog(path=None) -> List[CatalogEntry]:
    """Entries sorted by label; the packaged catalog unless ``path`` is given."""
    if path is None:
        text = resources.files("milnorkit").joinpath("data/catalog.json").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return _entries_from(json.loads(text))


def observed_values(report: dict) -> Dict[str, object]:
    """Flatten a decide report into the key vocabulary used by ``expected``."""
    verdicts = report["verdicts"]
    obs: Dict[str, object] = {
        "mu": report["milnor"]["mu"],
        "method": report["milnor"]["method"],
        "gsv_radial": report["indices"]["gsv_radial"]["value"],
        "contact_trivial": verdicts["contact"]["trivial"],
        "contact_residue": verdicts["contact"]["residue"],
    }
    if "field" in report:
        obs["field_gsv"] = report["field"]["gsv"]["value"]
        obs["field_gsv_kind"] = report["field"]["gsv"]["kind"]
        obs["orthogonal_field_trivial"] = verdicts["orthogonal_field"]["trivial"]
    if "foliation" in verdicts:
        obs["foliation_trivial"] = verdicts["foliation"]["trivial"]
    return obs


def verify_entry(entry: CatalogEntry, budget_factory=Budget) -> List[Tuple[str, object, object]]:
    """Mismatches as (key, expected, observed); empty when the entry reproduces."""
    try:
        report = decide_report(entry.germ, budget=budget_factory())
    except Exception as exc:  # any engine failure is a mismatch of the whole entry
        return [("error", None, f"{type(exc).__name__}: {exc}")]
    obs = observed_values(report)
    return [(k, v, obs.get(k)) for k, v in sorted(entry.expected.items()) if obs.get(k) != v]


def run_catalog(
    entries: Optional[List[CatalogEntry]] = None,
    workers: int = 1,
    budget_factory=Budget,
) -> Dict[str, List[Tuple[str, object, object]]]:
    """Verify every entry; results are keyed and ordered by label."""
    entries = load_catalog() if entries is None else entries
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda e: verify_entry(e, budget_factory), entries))
    else:
        results = [verify_entry(e, budget_factory) for e in entries]
    return dict(sorted(zip((e.label for e in entries), results)))
