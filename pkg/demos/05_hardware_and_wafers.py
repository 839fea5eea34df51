"""Under the hood: server power models and the silicon behind a chip.

Shows the two reference server configurations, the per-vGPU power share
that prices generative inference, and the wafer losses (edge, kerf,
defects) that inflate the silicon footprint of every CPU/GPU die.
"""

from aifootprint import dies_per_wafer, server_power, silicon_area_needed, vgpu_power_share
from aifootprint.hardware import (
    COMPUTE_SERVER, COMPUTE_SERVER_VCPUS, COMPUTE_SERVER_VGPUS, STORAGE_SERVER,
)
from aifootprint.wafer import (
    CPU_CHIP, CPU_SILICON_AREA_M2, GPU_CHIP, GPU_SILICON_AREA_M2,
    calibrated_chip, defect_yield, edge_kerf_yield,
)

compute_w = server_power(COMPUTE_SERVER)
storage_w = server_power(STORAGE_SERVER)
print(f"8-GPU compute node: {compute_w:7.0f} W")
print(f"storage node:       {storage_w:7.0f} W")
share = vgpu_power_share(compute_w, COMPUTE_SERVER_VCPUS, 3.15, COMPUTE_SERVER_VGPUS)
print(f"carving out {COMPUTE_SERVER_VCPUS} vCPUs at 3.15 W leaves {share:.1f} W per vGPU "
      f"({COMPUTE_SERVER_VGPUS} isolated instances)")

print()
print("Wafer math (300 mm wafer, 0.2 mm kerf):")
for label, chip, target in (("GPU die 826 mm2", GPU_CHIP, GPU_SILICON_AREA_M2),
                            ("CPU die 694 mm2", CPU_CHIP, CPU_SILICON_AREA_M2)):
    fitted = calibrated_chip(chip, target)
    print(f"  {label}")
    print(f"    dies per wafer (analytic)    {dies_per_wafer(chip):6.1f}")
    print(f"    edge+kerf yield              {edge_kerf_yield(chip):6.1%}")
    print(f"    calibrated defect density    {fitted.defect_density_per_mm2:.4f} /mm2 "
          f"-> defect yield {defect_yield(fitted):.1%}")
    print(f"    silicon per good chip        {silicon_area_needed(fitted) * 1e4:6.1f} cm2 "
          f"(the die itself is {chip.chip_area_mm2 / 100:.1f} cm2)")
