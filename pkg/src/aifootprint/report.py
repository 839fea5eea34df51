"""Deterministic report rendering: cluster matrices, footprints, scenario tables.

CSV output uses '.' decimals and scientific notation with 3 significant
digits; JSON keeps full double precision so round-trips are bit-exact.
"""

from __future__ import annotations

import json
from typing import Dict, Iterable, Mapping, Sequence

from .clusters import UseCaseCluster
from .energy import InferenceImpact
from .impact import CRITERIA, ImpactVector
from .portfolio import AnnualFootprint
from .projection import ScenarioResult, SweepResult


def sci(value: float) -> str:
    """Scientific notation with 3 significant digits."""
    return f"{value:.2e}"


def render_json(payload: dict) -> str:
    """Canonical JSON: sorted keys, two-space indent, full float precision."""
    return json.dumps(payload, indent=2, sort_keys=True, allow_nan=False) + "\n"


def _csv_line(fields: Iterable[str]) -> str:
    return ",".join(fields)


# ---------------------------------------------------------------------------
# Cluster matrix (per-inference energies and impacts for all 192 clusters)
# ---------------------------------------------------------------------------

CLUSTER_COLUMNS = (
    "ai_type", "uc_type", "model_size", "users_class", "freq_class",
    "compute_kwh", "storage_kwh", "network_kwh", "total_kwh",
    "operational_gwp", "embodied_gwp",
    "operational_water", "embodied_water",
    "operational_primary_energy", "embodied_primary_energy",
    "operational_adp", "embodied_adp",
    "eco_score",
)


def cluster_row(cluster: UseCaseCluster, impact: InferenceImpact, grade: str) -> dict:
    energy = impact.energy
    return {
        "ai_type": cluster.ai_type.value,
        "uc_type": cluster.uc_type.value,
        "model_size": cluster.model_size.value if cluster.model_size else "na",
        "users_class": cluster.users_class.value,
        "freq_class": cluster.freq_class.value,
        "compute_kwh": energy.compute,
        "storage_kwh": energy.storage,
        "network_kwh": energy.network,
        "total_kwh": energy.total,
        "operational_gwp": impact.operational.gwp,
        "embodied_gwp": impact.embodied.gwp,
        "operational_water": impact.operational.water,
        "embodied_water": impact.embodied.water,
        "operational_primary_energy": impact.operational.primary_energy,
        "embodied_primary_energy": impact.embodied.primary_energy,
        "operational_adp": impact.operational.adp,
        "embodied_adp": impact.embodied.adp,
        "eco_score": grade,
    }


def render_cluster_csv(rows: Sequence[dict]) -> str:
    lines = [_csv_line(CLUSTER_COLUMNS)]
    for row in rows:
        fields = []
        for col in CLUSTER_COLUMNS:
            value = row[col]
            fields.append(sci(value) if isinstance(value, float) else str(value))
        lines.append(_csv_line(fields))
    return "\n".join(lines) + "\n"


def render_cluster_table(rows: Sequence[dict]) -> str:
    header = f"{'ai_type':<12} {'uc_type':<16} {'size':<7} {'compute':>10} {'storage':>10} {'network':>10} {'total':>10}  score"
    lines = [header, "-" * len(header)]
    seen = set()
    for row in rows:
        key = (row["ai_type"], row["uc_type"], row["model_size"])
        if key in seen:
            continue  # energy columns repeat across users/freq classes
        seen.add(key)
        lines.append(
            f"{row['ai_type']:<12} {row['uc_type']:<16} {row['model_size']:<7} "
            f"{sci(row['compute_kwh']):>10} {sci(row['storage_kwh']):>10} "
            f"{sci(row['network_kwh']):>10} {sci(row['total_kwh']):>10}  {row['eco_score']}"
        )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Annual footprint
# ---------------------------------------------------------------------------

def footprint_payload(footprint: AnnualFootprint) -> dict:
    total = footprint.total
    payload = {
        "total": total.as_dict(),
        "breakdowns": {
            dim: {label: vec.as_dict() for label, vec in footprint.breakdown(dim).items()}
            for dim in ("stage", "step", "component", "ai_type", "uc_type")
        },
        "cells": [
            {
                "step": key[0].value,
                "component": key[1].value,
                "stage": key[2].value,
                "ai_type": key[3].value,
                "uc_type": key[4].value,
                "impact": vec.as_dict(),
            }
            for key, vec in sorted(
                footprint.cells.items(), key=lambda kv: tuple(p.value for p in kv[0])
            )
        ],
    }
    return payload


def render_footprint_csv(footprint: AnnualFootprint) -> str:
    header = ("stage", "step", "component", "ai_type") + CRITERIA
    lines = [_csv_line(header)]
    pivot: Dict[tuple, ImpactVector] = {}
    for key, vec in sorted(footprint.cells.items(), key=lambda kv: tuple(p.value for p in kv[0])):
        pkey = (key[2].value, key[0].value, key[1].value, key[3].value)
        pivot[pkey] = pivot.get(pkey, ImpactVector.zero()) + vec
    for pkey in sorted(pivot):
        vec = pivot[pkey]
        lines.append(_csv_line(list(pkey) + [sci(getattr(vec, c)) for c in CRITERIA]))
    return "\n".join(lines) + "\n"


def render_footprint_table(footprint: AnnualFootprint) -> str:
    total = footprint.total
    lines = [
        "Annual portfolio footprint",
        f"  final energy    {total.final_energy:,.0f} kWh",
        f"  climate change  {total.gwp:,.0f} kgCO2eq",
        f"  water use       {total.water:,.0f} m3eq",
        f"  primary energy  {total.primary_energy:,.0f} MJ",
        f"  resource use    {total.adp:.3g} kgSbeq",
        "",
        "By stage:",
    ]
    for label, vec in sorted(footprint.breakdown("stage").items()):
        lines.append(f"  {label:<12} energy {vec.final_energy:,.0f} kWh, gwp {vec.gwp:,.0f} kgCO2eq")
    lines.append("")
    lines.append("By AI family:")
    for label, vec in sorted(footprint.breakdown("ai_type").items()):
        lines.append(f"  {label:<12} energy {vec.final_energy:,.0f} kWh, gwp {vec.gwp:,.0f} kgCO2eq")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Scenario results
# ---------------------------------------------------------------------------

SCENARIO_COLUMNS = ("scenario",) + CRITERIA + ("use_case_count", "genai_share")


def scenario_payload(results: Mapping[str, ScenarioResult]) -> dict:
    return {name: result.as_dict() for name, result in results.items()}


def render_scenario_csv(results: Sequence[ScenarioResult]) -> str:
    lines = [_csv_line(SCENARIO_COLUMNS)]
    for result in results:
        fields = [result.scenario.name]
        fields += [sci(getattr(result.index, c)) for c in CRITERIA]
        fields += [sci(result.use_case_count), sci(result.genai_share)]
        lines.append(_csv_line(fields))
    return "\n".join(lines) + "\n"


def render_scenario_table(results: Sequence[ScenarioResult]) -> str:
    header = (
        f"{'scenario':<28} {'energy':>8} {'GHG':>8} {'water':>8} {'prim.en':>8} {'resources':>9}"
    )
    lines = ["2030 footprint indexed on the 2024 portfolio (2024 = 100)", header, "-" * len(header)]
    for result in results:
        idx = result.index
        lines.append(
            f"{result.scenario.name:<28} {idx.final_energy:>8.0f} {idx.gwp:>8.0f} "
            f"{idx.water:>8.0f} {idx.primary_energy:>8.0f} {idx.adp:>9.0f}"
        )
    return "\n".join(lines) + "\n"


def render_sweep_csv(sweep: SweepResult) -> str:
    header = (sweep.parameter,) + CRITERIA
    lines = [_csv_line(header)]
    for value, result in zip(sweep.values, sweep.results):
        fields = [sci(float(value))] + [sci(getattr(result.index, c)) for c in CRITERIA]
        lines.append(_csv_line(fields))
    return "\n".join(lines) + "\n"


def sweep_payload(sweep: SweepResult) -> dict:
    payload = {
        "parameter": sweep.parameter,
        "points": [
            {"value": float(value), "index": result.index.as_dict()}
            for value, result in zip(sweep.values, sweep.results)
        ],
    }
    if sweep.poly_coefficients is not None:
        payload["poly_coefficients"] = list(sweep.poly_coefficients)
    return payload
