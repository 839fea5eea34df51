"""Impact vector algebra and the lifecycle accounting grid.

Every assessment in this package carries five criteria together:
final electricity (kWh), climate change (kgCO2eq), deprivation-weighted
water (m3eq), primary energy (MJ) and abiotic resource depletion (kgSbeq).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class LifecycleStep(str, Enum):
    FINE_TUNING = "fine_tuning"
    INFERENCE = "inference"


class Component(str, Enum):
    COMPUTE_VCPU = "compute_vcpu"
    COMPUTE_VGPU = "compute_vgpu"
    STORAGE = "storage"
    NETWORK = "network"


class Stage(str, Enum):
    EMBODIED = "embodied"
    OPERATIONAL = "operational"


#: The full (step, component, stage) accounting grid: 2 x 4 x 2 triples.
GRID_TRIPLES = tuple(
    (step, component, stage)
    for step in LifecycleStep
    for component in Component
    for stage in Stage
)

CRITERIA = ("final_energy", "gwp", "water", "primary_energy", "adp")

CRITERIA_UNITS = {
    "final_energy": "kWh",
    "gwp": "kgCO2eq",
    "water": "m3eq",
    "primary_energy": "MJ",
    "adp": "kgSbeq",
}


@dataclass(frozen=True)
class ImpactVector:
    """The five indicators, carried componentwise.

    Factor rows (per kWh, per hour, per GB...) reuse this type with
    final_energy left at zero, since embodied stages and emission factors
    have no final-electricity dimension of their own.
    """

    final_energy: float = 0.0  # kWh
    gwp: float = 0.0           # kgCO2eq
    water: float = 0.0         # m3eq
    primary_energy: float = 0.0  # MJ
    adp: float = 0.0           # kgSbeq

    def __post_init__(self):
        for name in CRITERIA:
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"impact component {name} must be finite, got {value!r}")

    def __add__(self, other: "ImpactVector") -> "ImpactVector":
        return ImpactVector(
            self.final_energy + other.final_energy,
            self.gwp + other.gwp,
            self.water + other.water,
            self.primary_energy + other.primary_energy,
            self.adp + other.adp,
        )

    def __sub__(self, other: "ImpactVector") -> "ImpactVector":
        return self + (other * -1.0)

    def __mul__(self, scalar: float) -> "ImpactVector":
        return ImpactVector(
            self.final_energy * scalar,
            self.gwp * scalar,
            self.water * scalar,
            self.primary_energy * scalar,
            self.adp * scalar,
        )

    __rmul__ = __mul__

    @staticmethod
    def zero() -> "ImpactVector":
        return ImpactVector()

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in CRITERIA}

    @staticmethod
    def from_dict(values: dict) -> "ImpactVector":
        return ImpactVector(**{name: float(values.get(name, 0.0)) for name in CRITERIA})

    def isclose(self, other: "ImpactVector", rel_tol: float = 1e-9, abs_tol: float = 0.0) -> bool:
        return all(
            math.isclose(getattr(self, n), getattr(other, n), rel_tol=rel_tol, abs_tol=abs_tol)
            for n in CRITERIA
        )


@dataclass(frozen=True)
class ImpactQuery:
    """One cell of the accounting grid for a given use case."""

    solution: int  # 1..192 cluster index
    step: LifecycleStep
    component: Component
    stage: Stage

    def __post_init__(self):
        if not 1 <= self.solution <= 192:
            raise ValueError(f"solution index must be in 1..192, got {self.solution}")


def vector_sum(vectors) -> ImpactVector:
    """Fold impact vectors in iteration order (deterministic for a given input order)."""
    total = ImpactVector.zero()
    for v in vectors:
        total = total + v
    return total
