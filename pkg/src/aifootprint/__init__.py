"""Multi-criteria environmental footprint simulator for corporate AI portfolios.

The package models per-inference energy and life-cycle impacts for 192
clustered AI use cases, aggregates them into a company's annual footprint,
and projects the footprint to 2030 under parameterized adoption and
efficiency scenarios.
"""

from .clusters import (
    AIType,
    FreqClass,
    ModelSize,
    UseCaseCluster,
    UseCaseType,
    UsersClass,
    enumerate_clusters,
)
from .energy import (
    EnergyBreakdown,
    ModelLibrary,
    ModelProfile,
    WorkloadShape,
    finetuning_energy,
    genai_inference_energy,
    inference_impact,
    network_energy_per_inference,
    storage_energy_per_inference,
    traditional_inference_energy,
    vgpu_count,
)
from .factors import DatacenterProfile, EmissionFactorTable
from .hardware import ServerConfig, server_power, vgpu_power_share
from .impact import Component, ImpactVector, LifecycleStep, Stage
from .lca import embodied_impact, operational_impact
from .loaders import DataBundle, RunConfig, ValidationError, load_and_validate
from .portfolio import (
    AnnualFootprint,
    PortfolioSpec,
    aggregate_portfolio,
    annual_inferences,
    expand_clusters,
    scale_to_global2000,
)
from .projection import (
    EcoScore,
    ScenarioParams,
    ScenarioResult,
    eco_score,
    project,
    sensitivity_sweep,
    solve_hardware_efficiency,
    usage_scale,
)
from .wafer import (
    WaferGeometry,
    calibrate_defect_density,
    defect_yield,
    dies_per_wafer,
    silicon_area_needed,
)

__version__ = "0.1.0"

__all__ = [
    "AIType", "AnnualFootprint", "Component", "DataBundle", "DatacenterProfile",
    "EcoScore", "EmissionFactorTable", "EnergyBreakdown", "FreqClass",
    "ImpactVector", "LifecycleStep", "ModelLibrary", "ModelProfile", "ModelSize",
    "PortfolioSpec", "RunConfig", "ScenarioParams", "ScenarioResult",
    "ServerConfig", "Stage", "UseCaseCluster", "UseCaseType", "UsersClass",
    "ValidationError", "WaferGeometry", "WorkloadShape",
    "aggregate_portfolio", "annual_inferences", "calibrate_defect_density",
    "defect_yield", "dies_per_wafer", "eco_score", "embodied_impact",
    "enumerate_clusters", "expand_clusters", "finetuning_energy",
    "genai_inference_energy", "inference_impact", "load_and_validate",
    "network_energy_per_inference", "operational_impact", "project",
    "scale_to_global2000", "sensitivity_sweep", "server_power",
    "silicon_area_needed", "solve_hardware_efficiency",
    "storage_energy_per_inference", "traditional_inference_energy",
    "usage_scale", "vgpu_count", "vgpu_power_share",
]
