"""Bundle-level operations shared verbatim by the CLI and the HTTP service."""

from __future__ import annotations

from typing import Dict, List, Mapping, Sequence, Union

from .clusters import enumerate_clusters
from .energy import inference_impact
from .loaders import DataBundle, ValidationError, portfolio_spec_from_dict
from .portfolio import AnnualFootprint, PortfolioSpec, aggregate_portfolio
from .projection import (
    ScenarioParams,
    ScenarioResult,
    SweepResult,
    eco_score,
    project,
    sensitivity_sweep,
    solve_hardware_efficiency,
)
from .report import cluster_row


def resolve_scenario(bundle: DataBundle, scenario: Union[str, Mapping, ScenarioParams]) -> ScenarioParams:
    """Accept a preset name, a parameter document, or ready params."""
    if isinstance(scenario, ScenarioParams):
        return scenario
    if isinstance(scenario, str):
        if scenario not in bundle.scenarios:
            known = ", ".join(bundle.scenario_order)
            raise ValidationError(f"unknown scenario {scenario!r} (known: {known})", "scenario")
        return bundle.scenarios[scenario]
    try:
        return ScenarioParams.from_dict(scenario)
    except (KeyError, ValueError, TypeError) as exc:
        raise ValidationError(f"bad scenario parameters: {exc}", "scenario")


def resolve_portfolio(bundle: DataBundle, spec: Union[None, Mapping, PortfolioSpec]) -> PortfolioSpec:
    if spec is None:
        return bundle.portfolio
    if isinstance(spec, PortfolioSpec):
        return spec
    return portfolio_spec_from_dict(spec)


def cluster_matrix(bundle: DataBundle) -> List[dict]:
    """Per-inference energy/impact rows for all 192 clusters."""
    rows = []
    for cluster in enumerate_clusters():
        impact = inference_impact(cluster, bundle.models, bundle.factors, bundle.datacenter)
        grade = eco_score(impact.energy.total).grade
        rows.append(cluster_row(cluster, impact, grade))
    return rows


def portfolio_footprint(bundle: DataBundle, spec=None) -> AnnualFootprint:
    spec = resolve_portfolio(bundle, spec)
    return aggregate_portfolio(spec, bundle.models, bundle.factors)


def project_scenario(bundle: DataBundle, scenario, spec=None) -> ScenarioResult:
    spec = resolve_portfolio(bundle, spec)
    params = resolve_scenario(bundle, scenario)
    return project(spec, params, bundle.models, bundle.factors)


def preset_results(bundle: DataBundle, spec=None) -> Dict[str, ScenarioResult]:
    """Project every named preset, in the published ordering."""
    spec = resolve_portfolio(bundle, spec)
    return {
        name: project_scenario(bundle, name, spec)
        for name in bundle.scenario_order
    }


def run_sweep(
    bundle: DataBundle,
    scenario,
    parameter: str,
    values: Sequence[float],
    spec=None,
) -> SweepResult:
    spec = resolve_portfolio(bundle, spec)
    params = resolve_scenario(bundle, scenario)
    return sensitivity_sweep(spec, params, parameter, values, bundle.models, bundle.factors)


def run_offset(
    bundle: DataBundle,
    scenario,
    target_fraction: float,
    pue_override: float = 1.04,
    grid_factor_override: float = 0.55,
    spec=None,
) -> dict:
    """Solve the hardware factor for a GHG target and report the check projection."""
    spec = resolve_portfolio(bundle, spec)
    params = resolve_scenario(bundle, scenario)
    factor = solve_hardware_efficiency(
        spec, params, bundle.models, bundle.factors, target_fraction,
        pue_override=pue_override, grid_factor_override=grid_factor_override,
    )
    import dataclasses

    solved = dataclasses.replace(
        params,
        hardware_efficiency_factor=factor,
        pue_2030=pue_override,
        grid_reduction=1.0 - grid_factor_override,
    )
    check = project(spec, solved, bundle.models, bundle.factors)
    return {
        "scenario": params.name,
        "ghg_target_fraction": target_fraction,
        "pue": pue_override,
        "grid_factor": grid_factor_override,
        "hardware_efficiency_factor": factor,
        "achieved_ghg_index": check.index.gwp,
        "energy_index": check.index.final_energy,
    }


def score_energy(energy_kwh: float) -> dict:
    result = eco_score(energy_kwh)
    return {
        "energy_kwh": energy_kwh,
        "grade": result.grade,
        "beyond_scale": result.beyond_scale,
    }
