"""Emission factor tables and datacenter operating profiles."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .impact import ImpactVector

#: Regions the geographic blend is allowed to draw from.
REGIONS = ("US", "CN", "EU-27")

#: Capacity keys understood by embodied accounting.
CAPACITY_VGPU_HOUR = "vgpu_hour"
CAPACITY_VCPU_HOUR = "vcpu_hour"
CAPACITY_STORAGE_GB_HOUR = "storage_gb_hour"
CAPACITY_NETWORK_GB = "network_gb"

CAPACITIES = (
    CAPACITY_VGPU_HOUR,
    CAPACITY_VCPU_HOUR,
    CAPACITY_STORAGE_GB_HOUR,
    CAPACITY_NETWORK_GB,
)


@dataclass(frozen=True)
class DatacenterProfile:
    """PUE/WUE operating point plus the geographic power blend."""

    pue: float = 1.15
    wue_l_per_kwh: float = 0.18
    region_weights: Mapping[str, float] = field(
        default_factory=lambda: {"US": 0.45, "EU-27": 0.28, "CN": 0.27}
    )

    def __post_init__(self):
        if self.pue < 1.0:
            raise ValueError(f"pue must be >= 1, got {self.pue}")
        if self.wue_l_per_kwh < 0:
            raise ValueError(f"wue must be >= 0, got {self.wue_l_per_kwh}")
        total = sum(self.region_weights.values())
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"region weights must sum to 1, got {total!r}")
        unknown = set(self.region_weights) - set(REGIONS)
        if unknown:
            raise ValueError(f"unknown regions in blend: {sorted(unknown)}")

    def with_pue(self, pue: float) -> "DatacenterProfile":
        return DatacenterProfile(pue=pue, wue_l_per_kwh=self.wue_l_per_kwh,
                                 region_weights=dict(self.region_weights))


@dataclass(frozen=True)
class EmissionFactorTable:
    """Per-capacity power draw, embodied hourly impacts, and grid/water factors.

    Embodied vectors are amortised per unit of capacity use; grid vectors are
    per kWh drawn; the water-supply vector is per litre of cooling water.
    """

    vgpu_power_w: float
    vcpu_power_w: float
    storage_power_w_per_gb: float
    network_kwh_per_gb: float
    embodied: Mapping[str, ImpactVector]          # capacity key -> per-unit vector
    grid: Mapping[str, ImpactVector]              # region -> per-kWh vector
    water_supply: ImpactVector                    # per litre of water
    version: str = "unversioned"

    def __post_init__(self):
        for name in ("vgpu_power_w", "vcpu_power_w", "storage_power_w_per_gb", "network_kwh_per_gb"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be > 0")
        if self.vgpu_power_w <= self.vcpu_power_w:
            raise ValueError("vGPU power must exceed vCPU power")
        missing = set(REGIONS) - set(self.grid)
        if missing:
            raise ValueError(f"grid factor table missing regions: {sorted(missing)}")
        for cap in CAPACITIES:
            if cap not in self.embodied:
                raise ValueError(f"embodied factor table missing capacity: {cap}")

    def blended_grid(self, region_weights: Mapping[str, float]) -> ImpactVector:
        """Region-weight blend of the per-kWh grid vectors."""
        missing = set(region_weights) - set(self.grid)
        if missing:
            raise ValueError(f"no grid factors for regions: {sorted(missing)}")
        blend = ImpactVector.zero()
        for region in sorted(region_weights):
            blend = blend + self.grid[region] * region_weights[region]
        return blend

    def scale_grid(self, factor: float) -> "EmissionFactorTable":
        """Return a copy with every regional grid vector multiplied by `factor`."""
        return EmissionFactorTable(
            vgpu_power_w=self.vgpu_power_w,
            vcpu_power_w=self.vcpu_power_w,
            storage_power_w_per_gb=self.storage_power_w_per_gb,
            network_kwh_per_gb=self.network_kwh_per_gb,
            embodied=dict(self.embodied),
            grid={region: vec * factor for region, vec in self.grid.items()},
            water_supply=self.water_supply,
            version=self.version,
        )
