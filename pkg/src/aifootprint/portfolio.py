"""Distribution-based portfolio expansion and annual footprint aggregation."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Tuple

from .clusters import (
    AIType,
    FreqClass,
    ModelSize,
    UseCaseCluster,
    UsersClass,
    UseCaseType,
    enumerate_clusters,
)
from .energy import (
    ModelLibrary,
    component_embodied,
    component_operational,
    finetuning_quantities,
    inference_quantities,
)
from .factors import DatacenterProfile, EmissionFactorTable
from .impact import Component, ImpactVector, LifecycleStep, Stage

#: Forbes Global 2000 extrapolation multiplier.
GLOBAL2000_COMPANIES = 2000


def _check_distribution(name: str, dist: Mapping, tol: float = 1e-9):
    total = sum(dist.values())
    if abs(total - 1.0) > tol:
        raise ValueError(f"{name} must sum to 1, got {total!r}")
    for key, value in dist.items():
        if value < 0:
            raise ValueError(f"{name}[{getattr(key, 'value', key)}] must be >= 0")


@dataclass(frozen=True)
class PortfolioSpec:
    """A company's AI portfolio described by independent marginal distributions."""

    n_use_cases: float = 100
    genai_share: float = 0.29
    business_days: int = 250
    genai_type_shares: Mapping[UseCaseType, float] = field(default_factory=lambda: {
        UseCaseType.CHAT: 0.28, UseCaseType.RAG: 0.39, UseCaseType.AGENTS: 0.33,
    })
    traditional_type_shares: Mapping[UseCaseType, float] = field(default_factory=lambda: {
        UseCaseType.TABULAR: 0.79, UseCaseType.COMPUTER_VISION: 0.11, UseCaseType.NLP: 0.10,
    })
    users_distribution: Mapping[AIType, Mapping[UsersClass, float]] = field(default_factory=lambda: {
        AIType.GENAI: {UsersClass.LOW: 0.10, UsersClass.MEDIUM: 0.40,
                       UsersClass.HIGH: 0.30, UsersClass.VERY_HIGH: 0.20},
        AIType.TRADITIONAL: {UsersClass.LOW: 0.80, UsersClass.MEDIUM: 0.15,
                             UsersClass.HIGH: 0.05, UsersClass.VERY_HIGH: 0.0},
    })
    frequency_distribution: Mapping[AIType, Mapping[FreqClass, float]] = field(default_factory=lambda: {
        AIType.GENAI: {FreqClass.LOW: 0.35, FreqClass.MEDIUM: 0.40,
                       FreqClass.HIGH: 0.20, FreqClass.VERY_HIGH: 0.05},
        AIType.TRADITIONAL: {FreqClass.LOW: 0.25, FreqClass.MEDIUM: 0.25,
                             FreqClass.HIGH: 0.25, FreqClass.VERY_HIGH: 0.25},
    })
    model_size_distribution: Mapping[ModelSize, float] = field(default_factory=lambda: {
        ModelSize.LOW: 0.131, ModelSize.MEDIUM: 0.011, ModelSize.HIGH: 0.858,
    })
    users_per_class: Mapping[UsersClass, float] = field(default_factory=lambda: {
        UsersClass.LOW: 10, UsersClass.MEDIUM: 100,
        UsersClass.HIGH: 1000, UsersClass.VERY_HIGH: 10000,
    })
    requests_per_user_day: Mapping[FreqClass, float] = field(default_factory=lambda: {
        FreqClass.LOW: 0.2, FreqClass.MEDIUM: 1.0,
        FreqClass.HIGH: 10.0, FreqClass.VERY_HIGH: 50.0,
    })
    region_weights: Mapping[str, float] = field(default_factory=lambda: {
        "US": 0.45, "EU-27": 0.28, "CN": 0.27,
    })

    def __post_init__(self):
        if self.n_use_cases < 0:
            raise ValueError("n_use_cases must be >= 0")
        if not 0.0 <= self.genai_share <= 1.0:
            raise ValueError(f"genai_share must be in [0, 1], got {self.genai_share}")
        if self.business_days <= 0:
            raise ValueError("business_days must be > 0")
        _check_distribution("genai_type_shares", self.genai_type_shares)
        _check_distribution("traditional_type_shares", self.traditional_type_shares)
        for family in (AIType.GENAI, AIType.TRADITIONAL):
            _check_distribution(f"users_distribution[{family.value}]", self.users_distribution[family])
            _check_distribution(f"frequency_distribution[{family.value}]", self.frequency_distribution[family])
        _check_distribution("model_size_distribution", self.model_size_distribution)
        _check_distribution("region_weights", self.region_weights)
        for freq, value in self.requests_per_user_day.items():
            if value < 0:
                raise ValueError(f"requests_per_user_day[{freq.value}] must be >= 0")

    def family_share(self, ai_type: AIType) -> float:
        return self.genai_share if ai_type is AIType.GENAI else 1.0 - self.genai_share


def expand_clusters(spec: PortfolioSpec) -> List[Tuple[UseCaseCluster, float]]:
    """All 192 clusters with their use-case weights.

    Independent marginals multiply: weight = n_use_cases x family share x
    type share (x size share for generative) x users share x freq share.
    """
    weighted = []
    for cluster in enumerate_clusters():
        w = spec.n_use_cases * spec.family_share(cluster.ai_type)
        if cluster.ai_type is AIType.GENAI:
            w *= spec.genai_type_shares[cluster.uc_type]
            w *= spec.model_size_distribution[cluster.model_size]
        else:
            w *= spec.traditional_type_shares[cluster.uc_type]
        w *= spec.users_distribution[cluster.ai_type][cluster.users_class]
        w *= spec.frequency_distribution[cluster.ai_type][cluster.freq_class]
        weighted.append((cluster, w))
    return weighted


def annual_inferences(cluster: UseCaseCluster, spec: PortfolioSpec) -> float:
    """Inferences per year for one use case of the cluster."""
    users = spec.users_per_class[cluster.users_class]
    per_day = spec.requests_per_user_day[cluster.freq_class]
    return spec.business_days * users * per_day


# A cell of the annual footprint: (step, component, stage, ai_type, uc_type).
CellKey = Tuple[LifecycleStep, Component, Stage, AIType, UseCaseType]


@dataclass(frozen=True)
class AnnualFootprint:
    """Annual portfolio impacts, fully indexed by the accounting grid."""

    cells: Mapping[CellKey, ImpactVector]

    def _sorted_items(self):
        return sorted(self.cells.items(), key=lambda kv: tuple(part.value for part in kv[0]))

    @property
    def total(self) -> ImpactVector:
        total = ImpactVector.zero()
        for _, vec in self._sorted_items():
            total = total + vec
        return total

    def breakdown(self, dimension: str) -> Dict[str, ImpactVector]:
        """Marginal totals along one grid dimension.

        dimension is one of: step, component, stage, ai_type, uc_type.
        """
        index = {"step": 0, "component": 1, "stage": 2, "ai_type": 3, "uc_type": 4}[dimension]
        out: Dict[str, ImpactVector] = {}
        for key, vec in self._sorted_items():
            label = key[index].value
            out[label] = out.get(label, ImpactVector.zero()) + vec
        return out

    def select(self, stage: Optional[Stage] = None, step: Optional[LifecycleStep] = None,
               ai_type: Optional[AIType] = None) -> ImpactVector:
        total = ImpactVector.zero()
        for key, vec in self._sorted_items():
            if stage is not None and key[2] is not stage:
                continue
            if step is not None and key[0] is not step:
                continue
            if ai_type is not None and key[3] is not ai_type:
                continue
            total = total + vec
        return total


#: Per-cluster scenario scaling: (count_scale, compute_energy_scale, compute_embodied_scale).
ClusterScaling = Callable[[UseCaseCluster], Tuple[float, float, float]]


def accumulate_cells(
    spec: PortfolioSpec,
    models: ModelLibrary,
    factors: EmissionFactorTable,
    profile: DatacenterProfile,
    scaling: Optional[ClusterScaling] = None,
) -> Dict[CellKey, ImpactVector]:
    """Weighted sum over clusters of inference and fine-tuning impacts.

    `scaling` hooks in scenario projection: it returns multipliers for the
    annual inference count, per-inference compute energy, and compute
    embodied intensity of each cluster.
    """
    cells: Dict[CellKey, ImpactVector] = {}

    def add(key: CellKey, vec: ImpactVector):
        cells[key] = cells.get(key, ImpactVector.zero()) + vec

    for cluster, weight in expand_clusters(spec):
        if weight == 0.0:
            continue
        count_scale, energy_scale, embodied_scale = (
            scaling(cluster) if scaling is not None else (1.0, 1.0, 1.0)
        )
        q = inference_quantities(cluster, models, factors, profile)
        if energy_scale != 1.0 or embodied_scale != 1.0:
            q = q.scaled(energy_scale, embodied_scale)
        n = annual_inferences(cluster, spec) * count_scale
        mass = weight * n
        for comp, vec in component_operational(q, profile, factors).items():
            add((LifecycleStep.INFERENCE, comp, Stage.OPERATIONAL, cluster.ai_type, cluster.uc_type),
                vec * mass)
        for comp, vec in component_embodied(q, factors).items():
            add((LifecycleStep.INFERENCE, comp, Stage.EMBODIED, cluster.ai_type, cluster.uc_type),
                vec * mass)

        if cluster.ai_type is AIType.TRADITIONAL:
            ft_q = finetuning_quantities(cluster.uc_type, models, factors, profile)
            if energy_scale != 1.0 or embodied_scale != 1.0:
                ft_q = ft_q.scaled(energy_scale, embodied_scale)
            years = models.traditional[cluster.uc_type].finetuning.lifetime_years
            annual_weight = weight / years
            for comp, vec in component_operational(ft_q, profile, factors).items():
                add((LifecycleStep.FINE_TUNING, comp, Stage.OPERATIONAL, cluster.ai_type, cluster.uc_type),
                    vec * annual_weight)
            for comp, vec in component_embodied(ft_q, factors).items():
                add((LifecycleStep.FINE_TUNING, comp, Stage.EMBODIED, cluster.ai_type, cluster.uc_type),
                    vec * annual_weight)
    return cells


def aggregate_portfolio(
    spec: PortfolioSpec,
    models: ModelLibrary,
    factors: EmissionFactorTable,
    profile: Optional[DatacenterProfile] = None,
) -> AnnualFootprint:
    """Annual multi-criteria footprint of the whole portfolio."""
    if profile is None:
        profile = DatacenterProfile(region_weights=dict(spec.region_weights))
    return AnnualFootprint(cells=accumulate_cells(spec, models, factors, profile))


def scale_to_global2000(footprint: AnnualFootprint) -> ImpactVector:
    """Extrapolate one company's footprint to the Global 2000 index."""
    return footprint.total * GLOBAL2000_COMPANIES
