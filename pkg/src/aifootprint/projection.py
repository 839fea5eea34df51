"""2030 projection engine: scenarios, sensitivity sweeps, offset solver, eco-score.

A scenario combines usage growth (per-family CAGRs over the horizon) with
systemic efficiency drivers (model size and verbosity trends, hardware and
quantization gains, PUE and grid decarbonization). Projected footprints are
reported indexed on the 2024 portfolio (2024 = 100 per criterion).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Mapping, Optional, Sequence, Tuple

import numpy as np

from .clusters import AIType, UseCaseCluster, UseCaseType
from .energy import ModelLibrary
from .factors import DatacenterProfile, EmissionFactorTable
from .impact import CRITERIA, ImpactVector
from .portfolio import AnnualFootprint, PortfolioSpec, accumulate_cells, expand_clusters

USAGE_FAMILIES = ("genai_ex_agents", "agents", "computer_vision", "nlp", "tabular")


@dataclass(frozen=True)
class ScenarioParams:
    """Drivers of one 2030 scenario."""

    name: str = "custom"
    label: str = "Custom scenario"
    horizon_years: int = 6
    cagr: Mapping[str, float] = field(default_factory=lambda: dict.fromkeys(USAGE_FAMILIES, 0.0))
    model_size_factor: float = 1.0
    output_token_factor: float = 1.0
    quantization_factor: float = 1.0          # divides compute energy
    quantization_memory_factor: float = 1.0   # divides loaded-model vGPU hours
    hardware_efficiency_factor: float = 1.0   # divides compute energy and hours
    pue_2030: float = 1.15
    grid_reduction: float = 0.0               # applied to every grid criterion

    def __post_init__(self):
        for name in ("model_size_factor", "output_token_factor", "quantization_factor",
                     "quantization_memory_factor", "hardware_efficiency_factor"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be > 0")
        if not 0.0 <= self.grid_reduction < 1.0:
            raise ValueError(f"grid_reduction must be in [0, 1), got {self.grid_reduction}")
        if self.pue_2030 < 1.0:
            raise ValueError("pue_2030 must be >= 1")
        missing = set(USAGE_FAMILIES) - set(self.cagr)
        if missing:
            raise ValueError(f"cagr map missing families: {sorted(missing)}")
        for family, value in self.cagr.items():
            if value < 0:
                raise ValueError(f"cagr[{family}] must be >= 0")

    def usage_family(self, cluster: UseCaseCluster) -> str:
        if cluster.ai_type is AIType.GENAI:
            return "agents" if cluster.uc_type is UseCaseType.AGENTS else "genai_ex_agents"
        return cluster.uc_type.value

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "label": self.label,
            "horizon_years": self.horizon_years,
            "cagr": dict(self.cagr),
            "model_size_factor": self.model_size_factor,
            "output_token_factor": self.output_token_factor,
            "quantization_factor": self.quantization_factor,
            "quantization_memory_factor": self.quantization_memory_factor,
            "hardware_efficiency_factor": self.hardware_efficiency_factor,
            "pue_2030": self.pue_2030,
            "grid_reduction": self.grid_reduction,
        }

    @staticmethod
    def from_dict(data: Mapping, name: str = "custom") -> "ScenarioParams":
        return ScenarioParams(
            name=data.get("name", name),
            label=data.get("label", name),
            horizon_years=int(data.get("horizon_years", 6)),
            cagr={str(k): float(v) for k, v in data["cagr"].items()},
            model_size_factor=float(data.get("model_size_factor", 1.0)),
            output_token_factor=float(data.get("output_token_factor", 1.0)),
            quantization_factor=float(data.get("quantization_factor", 1.0)),
            quantization_memory_factor=float(data.get("quantization_memory_factor", 1.0)),
            hardware_efficiency_factor=float(data.get("hardware_efficiency_factor", 1.0)),
            pue_2030=float(data.get("pue_2030", 1.15)),
            grid_reduction=float(data.get("grid_reduction", 0.0)),
        )


def usage_scale(cagr: float, years: int) -> float:
    """Compound growth factor (1 + cagr) ** years."""
    if cagr < 0:
        raise ValueError("cagr must be >= 0")
    if years < 0:
        raise ValueError("years must be >= 0")
    return (1.0 + cagr) ** years


@dataclass(frozen=True)
class ScenarioResult:
    """Projected footprint indexed on the 2024 portfolio (100 per criterion)."""

    scenario: ScenarioParams
    index: ImpactVector                 # each criterion indexed, 2024 = 100
    projected_total: ImpactVector       # absolute 2030 footprint
    baseline_total: ImpactVector        # absolute 2024 footprint
    use_case_count: float
    genai_share: float

    def as_dict(self) -> dict:
        return {
            "scenario": self.scenario.as_dict(),
            "index": self.index.as_dict(),
            "projected_total": self.projected_total.as_dict(),
            "baseline_total": self.baseline_total.as_dict(),
            "use_case_count": self.use_case_count,
            "genai_share": self.genai_share,
        }


def _index_vector(projected: ImpactVector, baseline: ImpactVector) -> ImpactVector:
    values = {}
    for name in CRITERIA:
        base = getattr(baseline, name)
        proj = getattr(projected, name)
        values[name] = 100.0 if base == proj else 100.0 * proj / base
    return ImpactVector(**values)


def project(
    spec: PortfolioSpec,
    scenario: ScenarioParams,
    models: ModelLibrary,
    factors: EmissionFactorTable,
    profile: Optional[DatacenterProfile] = None,
    baseline: Optional[AnnualFootprint] = None,
) -> ScenarioResult:
    """Project the 2024 portfolio to the scenario horizon.

    Usage grows per family CAGR. Per-inference compute energy scales by
    model size and output verbosity and shrinks with hardware efficiency and
    quantization. Embodied compute hours follow the same drivers except that
    quantization enters through its memory effect (half the vGPUs under
    8-bit weights). Grid criteria shrink by the decarbonization fraction,
    the datacenter runs at the scenario PUE, and embodied factors stay at
    their 2024 per-hour intensity.
    """
    if profile is None:
        profile = DatacenterProfile(region_weights=dict(spec.region_weights))
    if baseline is None:
        baseline = AnnualFootprint(cells=accumulate_cells(spec, models, factors, profile))

    years = scenario.horizon_years
    eff_energy = scenario.hardware_efficiency_factor * scenario.quantization_factor
    eff_embodied = scenario.hardware_efficiency_factor * scenario.quantization_memory_factor
    genai_energy_scale = scenario.model_size_factor * scenario.output_token_factor / eff_energy
    genai_embodied_scale = scenario.model_size_factor * scenario.output_token_factor / eff_embodied
    trad_energy_scale = 1.0 / eff_energy
    trad_embodied_scale = 1.0 / eff_embodied

    def scaling(cluster: UseCaseCluster):
        count = usage_scale(scenario.cagr[scenario.usage_family(cluster)], years)
        if cluster.ai_type is AIType.GENAI:
            return count, genai_energy_scale, genai_embodied_scale
        return count, trad_energy_scale, trad_embodied_scale

    projected_cells = accumulate_cells(
        spec,
        models,
        factors.scale_grid(1.0 - scenario.grid_reduction),
        profile.with_pue(scenario.pue_2030),
        scaling=scaling,
    )
    projected = AnnualFootprint(cells=projected_cells)

    count = 0.0
    genai_count = 0.0
    for cluster, weight in expand_clusters(spec):
        grown = weight * usage_scale(scenario.cagr[scenario.usage_family(cluster)], years)
        count += grown
        if cluster.ai_type is AIType.GENAI:
            genai_count += grown

    return ScenarioResult(
        scenario=scenario,
        index=_index_vector(projected.total, baseline.total),
        projected_total=projected.total,
        baseline_total=baseline.total,
        use_case_count=count,
        genai_share=genai_count / count if count else 0.0,
    )


SWEEPABLE_PARAMETERS = ("model_size_factor", "output_token_factor", "agents_cagr")


@dataclass(frozen=True)
class SweepResult:
    parameter: str
    values: Tuple[float, ...]
    results: Tuple[ScenarioResult, ...]
    poly_coefficients: Optional[Tuple[float, float, float]] = None  # degree-2 fit, highest first

    def energy_indices(self) -> Tuple[float, ...]:
        return tuple(r.index.final_energy for r in self.results)


def sensitivity_sweep(
    spec: PortfolioSpec,
    scenario: ScenarioParams,
    parameter: str,
    values: Sequence[float],
    models: ModelLibrary,
    factors: EmissionFactorTable,
    profile: Optional[DatacenterProfile] = None,
) -> SweepResult:
    """Re-project the scenario across a parameter range.

    For CAGR sweeps a degree-2 polynomial is least-squares fitted to
    (cagr, energy index); growth compounding makes its curvature positive.
    """
    if parameter not in SWEEPABLE_PARAMETERS:
        raise ValueError(f"unknown sweep parameter: {parameter!r}")
    if not values:
        raise ValueError("sweep needs at least one value")
    if profile is None:
        profile = DatacenterProfile(region_weights=dict(spec.region_weights))
    baseline = AnnualFootprint(cells=accumulate_cells(spec, models, factors, profile))

    results = []
    for value in values:
        if parameter == "agents_cagr":
            cagr = dict(scenario.cagr)
            cagr["agents"] = value
            variant = replace(scenario, cagr=cagr)
        else:
            variant = replace(scenario, **{parameter: value})
        results.append(project(spec, variant, models, factors, profile, baseline=baseline))

    coeffs = None
    if parameter == "agents_cagr" and len(values) >= 3:
        fit = np.polyfit(np.asarray(values, dtype=float),
                         np.asarray([r.index.final_energy for r in results]), 2)
        coeffs = (float(fit[0]), float(fit[1]), float(fit[2]))
    return SweepResult(parameter=parameter, values=tuple(values),
                       results=tuple(results), poly_coefficients=coeffs)


def solve_hardware_efficiency(
    spec: PortfolioSpec,
    scenario: ScenarioParams,
    models: ModelLibrary,
    factors: EmissionFactorTable,
    ghg_target_fraction: float,
    pue_override: float = 1.04,
    grid_factor_override: float = 0.55,
    profile: Optional[DatacenterProfile] = None,
    rel_tol: float = 1e-3,
    bracket: Tuple[float, float] = (1.0, 1e6),
) -> float:
    """Hardware-efficiency factor that meets a GHG reduction target.

    The offset setup fixes a best-in-class PUE and a decarbonized grid, then
    bisects on the hardware factor until the projected GHG index equals
    100 * (1 - target). GHG is strictly decreasing in the factor, so
    bisection is safe; raises if the target is unreachable in the bracket.
    """
    if not 0.0 < ghg_target_fraction < 1.0:
        raise ValueError("ghg_target_fraction must be in (0, 1)")
    if profile is None:
        profile = DatacenterProfile(region_weights=dict(spec.region_weights))
    baseline = AnnualFootprint(cells=accumulate_cells(spec, models, factors, profile))
    target_index = 100.0 * (1.0 - ghg_target_fraction)

    offset_base = replace(scenario, pue_2030=pue_override,
                          grid_reduction=1.0 - grid_factor_override)

    def ghg_index(hw: float) -> float:
        variant = replace(offset_base, hardware_efficiency_factor=hw)
        return project(spec, variant, models, factors, profile, baseline=baseline).index.gwp

    lo, hi = bracket
    if ghg_index(lo) < target_index or ghg_index(hi) > target_index:
        raise ValueError(
            f"GHG target index {target_index:.3f} not reachable with a hardware "
            f"factor in [{lo:g}, {hi:g}]"
        )
    for _ in range(200):
        mid = math.sqrt(lo * hi)  # geometric bisection suits the 1/hw response
        value = ghg_index(mid)
        if value > target_index:
            lo = mid
        else:
            hi = mid
        if abs(value - target_index) <= rel_tol * target_index:
            return mid
    return math.sqrt(lo * hi)


#: Eco-score thresholds: a grade applies when energy-per-task is strictly
#: below its threshold (log-spaced decades).
ECO_SCORE_THRESHOLDS = (
    ("A", 1e-8),
    ("B", 1e-7),
    ("C", 1e-6),
    ("D", 1e-5),
    ("E", 1e-4),
    ("F", 1e-3),
    ("G", 1e-2),
)


@dataclass(frozen=True)
class EcoScore:
    grade: str
    beyond_scale: bool = False

    def __str__(self):
        return f"{self.grade} (beyond scale)" if self.beyond_scale else self.grade


def eco_score(energy_per_task_kwh: float) -> EcoScore:
    """Letter grade for the energy of one task; >= 1e-2 kWh clamps to G."""
    if energy_per_task_kwh < 0:
        raise ValueError("energy must be >= 0")
    for grade, threshold in ECO_SCORE_THRESHOLDS:
        if energy_per_task_kwh < threshold:
            return EcoScore(grade)
    return EcoScore("G", beyond_scale=True)
