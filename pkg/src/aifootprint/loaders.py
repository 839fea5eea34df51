"""Validated ingestion of the versioned JSON data bundle.

Every loader checks units and distribution sums before any computation and
reports failures with the offending field path and file.
"""

from __future__ import annotations

import dataclasses
import json
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Dict, Mapping, Optional, Tuple

from .clusters import AIType, FreqClass, ModelSize, UsersClass, UseCaseType
from .energy import (
    FinetuningSpec,
    LlmLoading,
    ModelLibrary,
    ModelProfile,
    TraditionalTask,
    WorkloadShape,
)
from .factors import DatacenterProfile, EmissionFactorTable
from .impact import Component, ImpactVector
from .portfolio import PortfolioSpec
from .projection import ScenarioParams

ENV_DATA_DIR = "AIFOOTPRINT_DATA_DIR"

FACTORS_FILE = "emission_factors.json"
MODELS_FILE = "ai_models.json"
PORTFOLIO_FILE = "portfolio.json"
SCENARIOS_FILE = "scenarios.json"


class ValidationError(ValueError):
    """Schema/consistency failure, carrying the field path and source file."""

    def __init__(self, message: str, field_path: str = "", file: str = ""):
        self.field_path = field_path
        self.file = file
        prefix = ""
        if file:
            prefix += f"{file}: "
        if field_path:
            prefix += f"{field_path}: "
        super().__init__(prefix + message)


def _get(data: Mapping, path: str, file: str):
    node = data
    for part in path.split("."):
        if not isinstance(node, Mapping) or part not in node:
            raise ValidationError("missing required field", path, file)
        node = node[part]
    return node


def _quantity(data: Mapping, path: str, expected_unit: str, file: str) -> float:
    node = _get(data, path, file)
    if not isinstance(node, Mapping) or "value" not in node or "unit" not in node:
        raise ValidationError("expected {value, unit} object", path, file)
    if node["unit"] != expected_unit:
        raise ValidationError(
            f"unit mismatch: expected {expected_unit!r}, got {node['unit']!r}",
            path + ".unit", file,
        )
    value = float(node["value"])
    if value <= 0:
        raise ValidationError("factor must be > 0", path + ".value", file)
    return value


def _criteria_vector(data: Mapping, path: str, unit_suffix: str, file: str) -> ImpactVector:
    node = _get(data, path, file)
    units = {
        "gwp": f"kgCO2eq{unit_suffix}",
        "water": f"m3eq{unit_suffix}",
        "primary_energy": f"MJ{unit_suffix}",
        "adp": f"kgSbeq{unit_suffix}",
    }
    values = {}
    for criterion, unit in units.items():
        values[criterion] = _quantity(node, criterion, unit, file)
    return ImpactVector(final_energy=0.0, **values)


def _read_json(path: Path) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise ValidationError("file not found", file=str(path))
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON: {exc}", file=str(path))


def load_emission_factors(path: Path) -> Tuple[EmissionFactorTable, DatacenterProfile]:
    data = _read_json(path)
    file = str(path)

    dc = _get(data, "datacenter", file)
    pue = float(_get(dc, "pue", file))
    wue = _quantity(dc, "wue", "L/kWh-IT", file)
    weights = {str(k): float(v) for k, v in _get(dc, "region_weights", file).items()}
    try:
        profile = DatacenterProfile(pue=pue, wue_l_per_kwh=wue, region_weights=weights)
    except ValueError as exc:
        raise ValidationError(str(exc), "datacenter", file)

    embodied = {
        "vgpu_hour": _criteria_vector(data, "capacities.vgpu_hour.embodied_hourly", "/h", file),
        "vcpu_hour": _criteria_vector(data, "capacities.vcpu_hour.embodied_hourly", "/h", file),
        "storage_gb_hour": _criteria_vector(
            data, "capacities.storage_gb_hour.embodied_hourly", "/(h.GB)", file),
        "network_gb": _criteria_vector(data, "capacities.network_gb.embodied_per_gb", "/GB", file),
    }
    grid = {}
    for region in _get(data, "grid", file):
        grid[region] = _criteria_vector(data, f"grid.{region}", "/kWh", file)
    water_supply = _criteria_vector(data, "water_supply.EU-27", "/L", file)

    try:
        factors = EmissionFactorTable(
            vgpu_power_w=_quantity(data, "capacities.vgpu_hour.it_power", "W", file),
            vcpu_power_w=_quantity(data, "capacities.vcpu_hour.it_power", "W", file),
            storage_power_w_per_gb=_quantity(data, "capacities.storage_gb_hour.it_power", "W/GB", file),
            network_kwh_per_gb=_quantity(
                data, "capacities.network_gb.transmission_energy", "kWh/GB", file),
            embodied=embodied,
            grid=grid,
            water_supply=water_supply,
            version=str(data.get("version", "unversioned")),
        )
    except ValueError as exc:
        raise ValidationError(str(exc), "grid", file)
    return factors, profile


_TRAD_KEYS = {
    "tabular": UseCaseType.TABULAR,
    "computer_vision": UseCaseType.COMPUTER_VISION,
    "nlp": UseCaseType.NLP,
}
_GENAI_KEYS = {
    "chat": UseCaseType.CHAT,
    "rag": UseCaseType.RAG,
    "agents": UseCaseType.AGENTS,
}


def load_model_library(path: Path) -> ModelLibrary:
    data = _read_json(path)
    file = str(path)

    loading_node = _get(data, "llm_loading", file)
    loading = LlmLoading(
        bytes_per_param=float(_get(loading_node, "bytes_per_param", file)),
        memory_overhead=float(_get(loading_node, "memory_overhead", file)),
        vgpu_memory_gb=float(_get(loading_node, "vgpu_memory_gb", file)),
    )

    profiles: Dict[ModelSize, ModelProfile] = {}
    for size in ModelSize:
        node = _get(data, f"llm_profiles.{size.value}", file)
        try:
            profiles[size] = ModelProfile(
                name=str(node["name"]),
                params_b=float(node["params_b"]),
                ttft_s={str(k): float(v) for k, v in node["ttft_s"].items()},
                throughput_tok_s={str(k): float(v) for k, v in node["throughput_tok_s"].items()},
            )
        except (KeyError, ValueError) as exc:
            raise ValidationError(str(exc), f"llm_profiles.{size.value}", file)

    workloads: Dict[UseCaseType, WorkloadShape] = {}
    for key, uc_type in _GENAI_KEYS.items():
        node = _get(data, f"workloads.{key}", file)
        workloads[uc_type] = WorkloadShape(
            input_tokens=float(node["input_tokens"]),
            output_tokens=float(node["output_tokens"]),
            prompt_bucket=str(node.get("prompt_bucket", "100")),
            function_calls=float(node.get("function_calls", 0.0)),
            payload_factor=float(node.get("payload_factor", 1.0)),
            nlp_tool_calls=float(node.get("nlp_tool_calls", 0.0)),
        )

    traditional: Dict[UseCaseType, TraditionalTask] = {}
    for key, uc_type in _TRAD_KEYS.items():
        node = _get(data, f"traditional.{key}", file)
        component_name = str(node.get("compute_component", "compute_vgpu"))
        try:
            component = Component(component_name)
        except ValueError:
            raise ValidationError(
                f"unknown compute component {component_name!r}",
                f"traditional.{key}.compute_component", file)
        ft = _get(node, "finetuning", file)
        embodied = _criteria_vector(data, f"traditional.{key}.embodied_per_inference", "", file)
        traditional[uc_type] = TraditionalTask(
            compute_kwh_per_inference=float(node["compute_kwh_per_inference"]),
            data_size_gb=float(node["data_size_gb"]),
            compute_component=component,
            embodied_per_inference=embodied,
            finetuning=FinetuningSpec(
                compute_kwh=float(ft["compute_kwh"]),
                storage_kwh=float(ft["storage_kwh"]),
                network_kwh=float(ft["network_kwh"]),
                lifetime_years=float(ft.get("lifetime_years", 5)),
            ),
        )

    return ModelLibrary(
        loading=loading,
        bytes_per_token=float(_get(data, "bytes_per_token", file)),
        profiles=profiles,
        workloads=workloads,
        traditional=traditional,
        version=str(data.get("version", "unversioned")),
    )


def _enum_dist(node: Mapping, enum_cls, path: str, file: str) -> dict:
    out = {}
    for key, value in node.items():
        try:
            out[enum_cls(str(key))] = float(value)
        except ValueError:
            raise ValidationError(f"unknown key {key!r}", path, file)
    return out


def load_portfolio_spec(path: Path) -> PortfolioSpec:
    return _portfolio_spec_from_data(_read_json(path), str(path))


def portfolio_spec_from_dict(data: Mapping, source: str = "<request>") -> PortfolioSpec:
    """Build a PortfolioSpec from an in-memory JSON document (API bodies)."""
    return _portfolio_spec_from_data(data, source)


def _portfolio_spec_from_data(data: Mapping, file: str) -> PortfolioSpec:
    try:
        return PortfolioSpec(
            n_use_cases=float(_get(data, "n_use_cases", file)),
            genai_share=float(_get(data, "genai_share", file)),
            business_days=int(_get(data, "business_days", file)),
            genai_type_shares=_enum_dist(
                _get(data, "type_shares.genai", file), UseCaseType, "type_shares.genai", file),
            traditional_type_shares=_enum_dist(
                _get(data, "type_shares.traditional", file), UseCaseType,
                "type_shares.traditional", file),
            users_distribution={
                AIType.GENAI: _enum_dist(_get(data, "users_distribution.genai", file),
                                         UsersClass, "users_distribution.genai", file),
                AIType.TRADITIONAL: _enum_dist(_get(data, "users_distribution.traditional", file),
                                               UsersClass, "users_distribution.traditional", file),
            },
            frequency_distribution={
                AIType.GENAI: _enum_dist(_get(data, "frequency_distribution.genai", file),
                                         FreqClass, "frequency_distribution.genai", file),
                AIType.TRADITIONAL: _enum_dist(
                    _get(data, "frequency_distribution.traditional", file),
                    FreqClass, "frequency_distribution.traditional", file),
            },
            model_size_distribution=_enum_dist(
                _get(data, "model_size_distribution", file), ModelSize,
                "model_size_distribution", file),
            users_per_class=_enum_dist(
                _get(data, "users_per_class", file), UsersClass, "users_per_class", file),
            requests_per_user_day=_enum_dist(
                _get(data, "requests_per_user_day", file), FreqClass,
                "requests_per_user_day", file),
            region_weights={str(k): float(v)
                            for k, v in _get(data, "region_weights", file).items()},
        )
    except ValidationError:
        raise
    except ValueError as exc:
        message = str(exc)
        guess = message.split(" ", 1)[0] if message else ""
        raise ValidationError(message, guess, file)


def load_scenarios(path: Path) -> Tuple[Dict[str, ScenarioParams], Tuple[str, ...]]:
    data = _read_json(path)
    file = str(path)
    presets = {}
    for name, node in _get(data, "scenarios", file).items():
        try:
            presets[name] = ScenarioParams.from_dict(dict(node, name=name), name=name)
        except (KeyError, ValueError) as exc:
            raise ValidationError(str(exc), f"scenarios.{name}", file)
    ordering = tuple(str(n) for n in data.get("ordering", sorted(presets)))
    for name in ordering:
        if name not in presets:
            raise ValidationError(f"ordering references unknown scenario {name!r}", "ordering", file)
    return presets, ordering


@dataclass(frozen=True)
class DataBundle:
    """Everything loaded and validated: the single source the CLI/service share."""

    factors: EmissionFactorTable
    datacenter: DatacenterProfile
    models: ModelLibrary
    portfolio: PortfolioSpec
    scenarios: Mapping[str, ScenarioParams]
    scenario_order: Tuple[str, ...]


@dataclass(frozen=True)
class RunConfig:
    """Resolved input locations and output preferences for one invocation."""

    factors_path: Optional[Path] = None
    portfolio_path: Optional[Path] = None
    models_path: Optional[Path] = None
    scenarios_path: Optional[Path] = None
    data_dir: Optional[Path] = None
    output_format: str = "table"
    output_path: Optional[Path] = None
    region_weights: Optional[Mapping[str, float]] = None

    def __post_init__(self):
        if self.output_format not in ("table", "json", "csv"):
            raise ValidationError(f"unknown output format {self.output_format!r}", "output_format")


def default_data_dir() -> Path:
    env = os.environ.get(ENV_DATA_DIR)
    if env:
        return Path(env)
    return Path(resources.files("aifootprint") / "data")


def load_and_validate(config: RunConfig = RunConfig()) -> DataBundle:
    """Load the bundle described by a run configuration.

    Explicit paths win over the data directory; the packaged defaults back
    everything else. All invariants are checked here, before any computation.
    """
    base = Path(config.data_dir) if config.data_dir else default_data_dir()
    factors_path = Path(config.factors_path) if config.factors_path else base / FACTORS_FILE
    models_path = Path(config.models_path) if config.models_path else base / MODELS_FILE
    portfolio_path = Path(config.portfolio_path) if config.portfolio_path else base / PORTFOLIO_FILE
    scenarios_path = Path(config.scenarios_path) if config.scenarios_path else base / SCENARIOS_FILE

    factors, datacenter = load_emission_factors(factors_path)
    models = load_model_library(models_path)
    portfolio = load_portfolio_spec(portfolio_path)
    scenarios, order = load_scenarios(scenarios_path)

    if config.region_weights is not None:
        try:
            datacenter = DatacenterProfile(
                pue=datacenter.pue,
                wue_l_per_kwh=datacenter.wue_l_per_kwh,
                region_weights=dict(config.region_weights),
            )
        except ValueError as exc:
            raise ValidationError(str(exc), "region_weights")
        portfolio = dataclasses.replace(portfolio, region_weights=dict(config.region_weights))
    return DataBundle(
        factors=factors,
        datacenter=datacenter,
        models=models,
        portfolio=portfolio,
        scenarios=scenarios,
        scenario_order=order,
    )


