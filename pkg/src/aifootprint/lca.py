"""Operational and embodied impact assessment.

Operational impacts convert energy drawn from the grid into the five
criteria via the region-blended grid factors, plus datacenter cooling water
(WUE applied to the IT share of the energy, characterised with the
water-supply factor row). Embodied impacts multiply capacity usage by the
amortised per-unit vectors.
"""

from __future__ import annotations

from typing import Mapping

from .factors import DatacenterProfile, EmissionFactorTable
from .impact import ImpactVector


def operational_impact(
    it_energy_kwh: float,
    profile: DatacenterProfile,
    factors: EmissionFactorTable,
) -> ImpactVector:
    """Impacts of consuming `it_energy_kwh` of IT electricity in a datacenter.

    final_energy = IT energy x PUE. The four criteria apply the blended grid
    vector to the final energy, then add the cooling-water contribution
    (IT energy x WUE litres, characterised per litre). Network transmission
    energy carries no PUE: pass energy/pue for it so the multiplication is an
    identity and only the shared cooling base remains.
    """
    if it_energy_kwh < 0:
        raise ValueError("it_energy_kwh must be >= 0")
    final_kwh = it_energy_kwh * profile.pue
    grid = factors.blended_grid(profile.region_weights)
    cooling_litres = it_energy_kwh * profile.wue_l_per_kwh
    water_row = factors.water_supply
    return ImpactVector(
        final_energy=final_kwh,
        gwp=final_kwh * grid.gwp + cooling_litres * water_row.gwp,
        water=final_kwh * grid.water + cooling_litres * water_row.water,
        primary_energy=final_kwh * grid.primary_energy + cooling_litres * water_row.primary_energy,
        adp=final_kwh * grid.adp + cooling_litres * water_row.adp,
    )


def embodied_impact(usage: Mapping[str, float], factors: EmissionFactorTable) -> ImpactVector:
    """Manufacturing/end-of-life impacts for a map of capacity use.

    `usage` maps capacity keys (vgpu_hour, vcpu_hour, storage_gb_hour,
    network_gb) to quantities; each is priced at its amortised hourly/per-GB
    embodied vector.
    """
    total = ImpactVector.zero()
    for capacity in sorted(usage):
        quantity = usage[capacity]
        if capacity not in factors.embodied:
            raise KeyError(f"unknown capacity key: {capacity!r}")
        if quantity < 0:
            raise ValueError(f"usage for {capacity} must be >= 0, got {quantity}")
        total = total + factors.embodied[capacity] * quantity
    return total
