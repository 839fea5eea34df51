"""Wafer geometry: dies per wafer, defect yield, and silicon area per good chip.

Chips are modelled as squares sawn from a circular wafer. Three losses apply:
the edge effect (partial dies at the rim), the kerf (saw width), and defect
loss (exponential in die area via the Moore model).
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class WaferGeometry:
    wafer_diameter_mm: float = 300.0
    chip_area_mm2: float = 100.0
    kerf_mm: float = 0.2
    defect_density_per_mm2: float = 0.0

    def __post_init__(self):
        if self.chip_area_mm2 <= 0:
            raise ValueError("chip_area_mm2 must be > 0")
        if self.kerf_mm < 0:
            raise ValueError("kerf_mm must be >= 0")
        if self.defect_density_per_mm2 < 0:
            raise ValueError("defect_density_per_mm2 must be >= 0")
        if math.sqrt(self.chip_area_mm2) + self.kerf_mm >= self.wafer_diameter_mm:
            raise ValueError("chip (with kerf) does not fit in the wafer")

    @property
    def chip_side_mm(self) -> float:
        return math.sqrt(self.chip_area_mm2)

    @property
    def chip_area_with_kerf_mm2(self) -> float:
        return (self.chip_side_mm + self.kerf_mm) ** 2

    @property
    def wafer_area_mm2(self) -> float:
        return math.pi * (self.wafer_diameter_mm / 2.0) ** 2


def dies_per_wafer(geom: WaferGeometry, literal_edge_term: bool = False) -> float:
    """Analytic die count: gross area term minus the rim-loss correction.

    The standard correction divides by sqrt(2 * A_kerf). `literal_edge_term`
    switches to dividing by sqrt(2) * A_kerf, a variant that appears in some
    write-ups of the formula; it is kept for comparison only.
    """
    a_kerf = geom.chip_area_with_kerf_mm2
    area_term = geom.wafer_area_mm2 / a_kerf
    if literal_edge_term:
        edge_term = math.pi * geom.wafer_diameter_mm / (math.sqrt(2.0) * a_kerf)
    else:
        edge_term = math.pi * geom.wafer_diameter_mm / math.sqrt(2.0 * a_kerf)
    return area_term - edge_term


def edge_kerf_yield(geom: WaferGeometry) -> float:
    """Fraction of wafer area that ends up as usable chip area."""
    n = dies_per_wafer(geom)
    if n <= 0:
        raise ValueError("geometry yields no whole dies")
    return n * geom.chip_area_mm2 / geom.wafer_area_mm2


def defect_yield(geom: WaferGeometry) -> float:
    """Moore-model defect yield: exp(-sqrt(D * A)). In (0, 1]."""
    return math.exp(-math.sqrt(geom.defect_density_per_mm2 * geom.chip_area_mm2))


def silicon_area_needed(geom: WaferGeometry) -> float:
    """Silicon area (m2) consumed per good chip, inflating for all three losses."""
    y = edge_kerf_yield(geom) * defect_yield(geom)
    area_mm2 = geom.chip_area_mm2 / y
    return area_mm2 * 1e-6


def calibrate_defect_density(
    geom: WaferGeometry,
    target_area_m2: float,
    lo: float = 0.0,
    hi: float = 10.0,
    tol: float = 1e-12,
) -> float:
    """Solve the defect density that makes silicon_area_needed hit the target.

    Bisection on D: the needed area is strictly increasing in D. Raises if the
    target is below the defect-free area or outside the bracket.
    """
    base = WaferGeometry(geom.wafer_diameter_mm, geom.chip_area_mm2, geom.kerf_mm, lo)
    if silicon_area_needed(base) > target_area_m2:
        raise ValueError("target area below the defect-free silicon area")

    def area_at(d: float) -> float:
        g = WaferGeometry(geom.wafer_diameter_mm, geom.chip_area_mm2, geom.kerf_mm, d)
        return silicon_area_needed(g)

    if area_at(hi) < target_area_m2:
        raise ValueError("target area not reachable within the bracket")
    a, b = lo, hi
    for _ in range(200):
        mid = 0.5 * (a + b)
        if area_at(mid) < target_area_m2:
            a = mid
        else:
            b = mid
        if b - a < tol:
            break
    return 0.5 * (a + b)


# Reference dies on a 300 mm wafer with a 0.2 mm kerf. The A100-class
# accelerator die is 826 mm2 (7 nm); the Xeon-class server CPU die is 694 mm2
# (14 nm). Published silicon-per-chip figures calibrate the defect densities.
GPU_CHIP = WaferGeometry(wafer_diameter_mm=300.0, chip_area_mm2=826.0, kerf_mm=0.2)
CPU_CHIP = WaferGeometry(wafer_diameter_mm=300.0, chip_area_mm2=694.0, kerf_mm=0.2)

#: Target silicon areas per good chip (m2) used by the calibration routine.
GPU_SILICON_AREA_M2 = 4.83e-2
CPU_SILICON_AREA_M2 = 4.31e-3


def calibrated_chip(chip: WaferGeometry, target_area_m2: float) -> WaferGeometry:
    """Chip geometry with its defect density fitted to the target silicon area."""
    d = calibrate_defect_density(chip, target_area_m2)
    return WaferGeometry(chip.wafer_diameter_mm, chip.chip_area_mm2, chip.kerf_mm, d)
