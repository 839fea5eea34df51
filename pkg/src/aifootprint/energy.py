"""Per-inference and fine-tuning energy/impact models for the 192 clusters.

Generative inference is charged as (time to first token + output tokens /
throughput) on the vGPUs needed to hold the model in memory. Retrieval and
agent workflows add tool calls modelled as traditional NLP inferences.
Traditional tasks use measured per-inference constants.

Storage keeps every inference payload for a full year; network moves the
payload once over the backbone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Dict, Mapping

from .clusters import AIType, ModelSize, UseCaseCluster, UseCaseType
from .factors import (
    CAPACITY_NETWORK_GB,
    CAPACITY_STORAGE_GB_HOUR,
    CAPACITY_VCPU_HOUR,
    CAPACITY_VGPU_HOUR,
    DatacenterProfile,
    EmissionFactorTable,
)
from .impact import Component, ImpactVector
from .lca import embodied_impact, operational_impact

#: Inference payloads are retained all year.
STORAGE_HOURS_PER_YEAR = 24 * 365

_CAPACITY_COMPONENT = {
    CAPACITY_VGPU_HOUR: Component.COMPUTE_VGPU,
    CAPACITY_VCPU_HOUR: Component.COMPUTE_VCPU,
    CAPACITY_STORAGE_GB_HOUR: Component.STORAGE,
    CAPACITY_NETWORK_GB: Component.NETWORK,
}


@dataclass(frozen=True)
class LlmLoading:
    """How model parameters translate into vGPU slots."""

    bytes_per_param: float = 2.0   # FP16
    memory_overhead: float = 1.3
    vgpu_memory_gb: float = 10.0


@dataclass(frozen=True)
class ModelProfile:
    """Latency profile of a reference LLM, keyed by prompt-size bucket."""

    name: str
    params_b: float
    ttft_s: Mapping[str, float]
    throughput_tok_s: Mapping[str, float]

    def __post_init__(self):
        if self.params_b <= 0:
            raise ValueError("params_b must be > 0")
        for bucket, value in self.throughput_tok_s.items():
            if value <= 0:
                raise ValueError(f"throughput for bucket {bucket} must be > 0")
        for bucket, value in self.ttft_s.items():
            if value < 0:
                raise ValueError(f"ttft for bucket {bucket} must be >= 0")


@dataclass(frozen=True)
class WorkloadShape:
    """Token profile of a generative use-case family."""

    input_tokens: float
    output_tokens: float
    prompt_bucket: str = "100"
    function_calls: float = 0.0     # LLM calls per workflow (agents)
    payload_factor: float = 1.0     # stored/transferred payload multiplier
    nlp_tool_calls: float = 0.0     # traditional NLP inferences per workflow

    def __post_init__(self):
        if self.input_tokens < 0 or self.output_tokens < 0:
            raise ValueError("token counts must be >= 0")


@dataclass(frozen=True)
class FinetuningSpec:
    """Lifetime fine-tuning energy totals (kWh) and the amortisation window."""

    compute_kwh: float = 0.0
    storage_kwh: float = 0.0
    network_kwh: float = 0.0
    lifetime_years: float = 5.0


@dataclass(frozen=True)
class TraditionalTask:
    """Measured constants for one traditional-AI task family."""

    compute_kwh_per_inference: float
    data_size_gb: float
    compute_component: Component
    embodied_per_inference: ImpactVector
    finetuning: FinetuningSpec


@dataclass(frozen=True)
class ModelLibrary:
    """Everything the energy model needs about models and workloads."""

    loading: LlmLoading
    bytes_per_token: float
    profiles: Mapping[ModelSize, ModelProfile]
    workloads: Mapping[UseCaseType, WorkloadShape]
    traditional: Mapping[UseCaseType, TraditionalTask]
    version: str = "unversioned"


@dataclass(frozen=True)
class EnergyBreakdown:
    """Final electricity per inference (or per fine-tuning lifetime), kWh."""

    compute: float = 0.0
    storage: float = 0.0
    network: float = 0.0

    @property
    def total(self) -> float:
        return self.compute + self.storage + self.network


@dataclass(frozen=True)
class InferenceQuantities:
    """Physical quantities behind one inference, before impact conversion.

    it_kwh holds pre-PUE electricity for the datacenter components;
    network_kwh is final transmission energy (the backbone carries no PUE).
    embodied_usage maps capacity keys to quantities; embodied_extra carries
    calibrated per-inference embodied vectors that have no usage expression
    (traditional tasks), attributed to embodied_extra_component.
    """

    it_kwh: Mapping[Component, float] = field(default_factory=dict)
    network_kwh: float = 0.0
    embodied_usage: Mapping[str, float] = field(default_factory=dict)
    embodied_extra: ImpactVector = field(default_factory=ImpactVector.zero)
    embodied_extra_component: Component = Component.COMPUTE_VGPU

    def scaled(self, compute_energy_scale: float = 1.0, compute_embodied_scale: float = 1.0):
        """Apply scenario efficiency scaling to the compute share."""
        it = dict(self.it_kwh)
        for comp in (Component.COMPUTE_VCPU, Component.COMPUTE_VGPU):
            if comp in it:
                it[comp] = it[comp] * compute_energy_scale
        usage = dict(self.embodied_usage)
        for cap in (CAPACITY_VCPU_HOUR, CAPACITY_VGPU_HOUR):
            if cap in usage:
                usage[cap] = usage[cap] * compute_embodied_scale
        return replace(
            self,
            it_kwh=it,
            embodied_usage=usage,
            embodied_extra=self.embodied_extra * compute_embodied_scale,
        )


def vgpu_count(profile: ModelProfile, loading: LlmLoading = LlmLoading()) -> int:
    """Isolated multi-instance vGPUs needed to hold the model in memory."""
    needed_gb = profile.params_b * loading.bytes_per_param * loading.memory_overhead
    return math.ceil(needed_gb / loading.vgpu_memory_gb)


def llm_call_seconds(profile: ModelProfile, workload: WorkloadShape) -> float:
    """Duration of a single LLM call: TTFT plus token generation."""
    bucket = workload.prompt_bucket
    return profile.ttft_s[bucket] + workload.output_tokens / profile.throughput_tok_s[bucket]


def payload_gb(workload: WorkloadShape, bytes_per_token: float) -> float:
    """Stored/transferred payload of one workflow, in GB."""
    tokens = workload.input_tokens + workload.output_tokens
    return tokens * bytes_per_token * workload.payload_factor / 1e9


def storage_energy_per_inference(
    data_size_gb: float,
    factors: EmissionFactorTable,
    profile: DatacenterProfile,
) -> float:
    """Final kWh to keep one inference payload stored for a year."""
    if data_size_gb < 0:
        raise ValueError("data_size_gb must be >= 0")
    it_kwh = data_size_gb * factors.storage_power_w_per_gb * STORAGE_HOURS_PER_YEAR / 1000.0
    return it_kwh * profile.pue


def network_energy_per_inference(data_size_gb: float, factors: EmissionFactorTable) -> float:
    """Final kWh to move one inference payload over the backbone."""
    if data_size_gb < 0:
        raise ValueError("data_size_gb must be >= 0")
    return data_size_gb * factors.network_kwh_per_gb


def _genai_quantities(
    uc_type: UseCaseType,
    size: ModelSize,
    models: ModelLibrary,
    factors: EmissionFactorTable,
    profile: DatacenterProfile,
) -> InferenceQuantities:
    llm = models.profiles[size]
    workload = models.workloads[uc_type]
    n_vgpu = vgpu_count(llm, models.loading)

    calls = workload.function_calls if workload.function_calls > 0 else 1.0
    seconds = calls * llm_call_seconds(llm, workload)
    vgpu_hours = seconds / 3600.0 * n_vgpu
    it_compute = vgpu_hours * factors.vgpu_power_w / 1000.0

    # Tool calls (RAG embedding search, agent actions) are traditional NLP
    # inferences; their measured energy is final, so undo the PUE to stay in
    # IT terms. They ride on the compute component only.
    if workload.nlp_tool_calls > 0:
        nlp = models.traditional[UseCaseType.NLP]
        it_compute += workload.nlp_tool_calls * nlp.compute_kwh_per_inference / profile.pue
        extra = nlp.embodied_per_inference * workload.nlp_tool_calls
    else:
        extra = ImpactVector.zero()

    size_gb = payload_gb(workload, models.bytes_per_token)
    it_storage = size_gb * factors.storage_power_w_per_gb * STORAGE_HOURS_PER_YEAR / 1000.0

    # Embodied compute is carried entirely by the vGPU hourly factor (the
    # server BOM is already allocated into it); payload storage/transport
    # embodied shares are not charged to generative inferences.
    return InferenceQuantities(
        it_kwh={
            Component.COMPUTE_VGPU: it_compute,
            Component.STORAGE: it_storage,
        },
        network_kwh=size_gb * factors.network_kwh_per_gb,
        embodied_usage={CAPACITY_VGPU_HOUR: vgpu_hours},
        embodied_extra=extra,
    )


def _traditional_quantities(
    uc_type: UseCaseType,
    models: ModelLibrary,
    factors: EmissionFactorTable,
    profile: DatacenterProfile,
) -> InferenceQuantities:
    task = models.traditional[uc_type]
    it_storage = task.data_size_gb * factors.storage_power_w_per_gb * STORAGE_HOURS_PER_YEAR / 1000.0
    return InferenceQuantities(
        it_kwh={
            task.compute_component: task.compute_kwh_per_inference / profile.pue,
            Component.STORAGE: it_storage,
        },
        network_kwh=task.data_size_gb * factors.network_kwh_per_gb,
        embodied_usage={},
        embodied_extra=task.embodied_per_inference,
        embodied_extra_component=task.compute_component,
    )


def inference_quantities(
    cluster: UseCaseCluster,
    models: ModelLibrary,
    factors: EmissionFactorTable,
    profile: DatacenterProfile,
) -> InferenceQuantities:
    """Physical quantities for one inference of the cluster's use case."""
    if cluster.ai_type is AIType.GENAI:
        return _genai_quantities(cluster.uc_type, cluster.model_size, models, factors, profile)
    return _traditional_quantities(cluster.uc_type, models, factors, profile)


def finetuning_quantities(
    uc_type: UseCaseType,
    models: ModelLibrary,
    factors: EmissionFactorTable,
    profile: DatacenterProfile,
) -> InferenceQuantities:
    """Lifetime fine-tuning quantities (zero for generative use cases).

    Embodied usage is derived as energy-equivalent capacity hours, since the
    fine-tuning model only states energies.
    """
    if uc_type not in models.traditional:
        return InferenceQuantities()
    task = models.traditional[uc_type]
    ft = task.finetuning
    it_compute = ft.compute_kwh / profile.pue
    it_storage = ft.storage_kwh / profile.pue
    compute_power = (
        factors.vcpu_power_w
        if task.compute_component is Component.COMPUTE_VCPU
        else factors.vgpu_power_w
    )
    compute_capacity = (
        CAPACITY_VCPU_HOUR
        if task.compute_component is Component.COMPUTE_VCPU
        else CAPACITY_VGPU_HOUR
    )
    return InferenceQuantities(
        it_kwh={
            task.compute_component: it_compute,
            Component.STORAGE: it_storage,
        },
        network_kwh=ft.network_kwh,
        embodied_usage={
            compute_capacity: it_compute * 1000.0 / compute_power,
            CAPACITY_STORAGE_GB_HOUR: it_storage * 1000.0 / factors.storage_power_w_per_gb,
            CAPACITY_NETWORK_GB: ft.network_kwh / factors.network_kwh_per_gb,
        },
    )


def energy_breakdown(q: InferenceQuantities, profile: DatacenterProfile) -> EnergyBreakdown:
    """Final electricity view of a quantity bundle (compute/storage/network)."""
    compute_it = q.it_kwh.get(Component.COMPUTE_VCPU, 0.0) + q.it_kwh.get(Component.COMPUTE_VGPU, 0.0)
    storage_it = q.it_kwh.get(Component.STORAGE, 0.0)
    return EnergyBreakdown(
        compute=compute_it * profile.pue,
        storage=storage_it * profile.pue,
        network=q.network_kwh,
    )


def genai_inference_energy(
    cluster: UseCaseCluster,
    models: ModelLibrary,
    factors: EmissionFactorTable,
    profile: DatacenterProfile,
) -> EnergyBreakdown:
    """Per-inference electricity of a generative cluster."""
    if cluster.ai_type is not AIType.GENAI:
        raise ValueError(f"not a generative cluster: {cluster.key()}")
    return energy_breakdown(inference_quantities(cluster, models, factors, profile), profile)


def traditional_inference_energy(
    uc_type: UseCaseType,
    models: ModelLibrary,
    factors: EmissionFactorTable,
    profile: DatacenterProfile,
) -> EnergyBreakdown:
    """Per-inference electricity of a traditional task family."""
    q = _traditional_quantities(uc_type, models, factors, profile)
    return energy_breakdown(q, profile)


def finetuning_energy(uc_type: UseCaseType, models: ModelLibrary) -> EnergyBreakdown:
    """Lifetime fine-tuning electricity; generative families return zero."""
    if uc_type not in models.traditional:
        return EnergyBreakdown()
    ft = models.traditional[uc_type].finetuning
    return EnergyBreakdown(compute=ft.compute_kwh, storage=ft.storage_kwh, network=ft.network_kwh)


def component_operational(
    q: InferenceQuantities,
    profile: DatacenterProfile,
    factors: EmissionFactorTable,
) -> Dict[Component, ImpactVector]:
    """Operational impact of each component.

    Datacenter components pass their IT energy through the PUE; the network
    share is divided by the PUE first so its final energy stays the raw
    transmission energy while sharing the same cooling-water base.
    """
    out: Dict[Component, ImpactVector] = {}
    for comp in (Component.COMPUTE_VCPU, Component.COMPUTE_VGPU, Component.STORAGE):
        it = q.it_kwh.get(comp, 0.0)
        if it:
            out[comp] = operational_impact(it, profile, factors)
    if q.network_kwh:
        out[Component.NETWORK] = operational_impact(q.network_kwh / profile.pue, profile, factors)
    return out


def component_embodied(
    q: InferenceQuantities,
    factors: EmissionFactorTable,
) -> Dict[Component, ImpactVector]:
    """Embodied impact of each component (usage-priced plus calibrated extras)."""
    out: Dict[Component, ImpactVector] = {}
    for capacity, quantity in q.embodied_usage.items():
        comp = _CAPACITY_COMPONENT[capacity]
        vec = embodied_impact({capacity: quantity}, factors)
        out[comp] = out.get(comp, ImpactVector.zero()) + vec
    if q.embodied_extra != ImpactVector.zero():
        comp = q.embodied_extra_component
        out[comp] = out.get(comp, ImpactVector.zero()) + q.embodied_extra
    return out


@dataclass(frozen=True)
class InferenceImpact:
    operational: ImpactVector
    embodied: ImpactVector
    energy: EnergyBreakdown


def inference_impact(
    cluster: UseCaseCluster,
    models: ModelLibrary,
    factors: EmissionFactorTable,
    profile: DatacenterProfile,
) -> InferenceImpact:
    """Operational and embodied impact of one inference of the cluster."""
    q = inference_quantities(cluster, models, factors, profile)
    op_by_component = component_operational(q, profile, factors)
    operational = ImpactVector.zero()
    for comp in Component:
        if comp in op_by_component:
            operational = operational + op_by_component[comp]
    embodied = ImpactVector.zero()
    emb_by_component = component_embodied(q, factors)
    for comp in Component:
        if comp in emb_by_component:
            embodied = embodied + emb_by_component[comp]
    return InferenceImpact(
        operational=operational,
        embodied=embodied,
        energy=energy_breakdown(q, profile),
    )
