"""Server power models and the vGPU power-share bridge.

The compute and storage reference servers share the same CPU block; they
differ in disk population, replication and the GPU/RAM blocks. Power terms
carry their own overhead multipliers (orchestration, redundancy margins).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ServerConfig:
    # CPU block
    n_cpu: int = 0
    load_cpu: float = 0.0
    max_p_cpu: float = 0.0        # W
    min_p_cpu: float = 0.0        # W
    orchestrator_overhead: float = 0.0
    # GPU block
    n_gpu: int = 0
    load_gpu: float = 0.0
    max_p_gpu: float = 0.0        # W
    gpu_overhead: float = 0.0
    # Disk block
    n_disk: int = 0
    p_disk: float = 0.0           # W
    load_disk: float = 0.0
    replication: float = 0.0
    disk_overhead: float = 0.0
    # RAM block
    n_ram: int = 0
    load_ram: float = 0.0
    p_ram: float = 0.0            # W
    ram_overhead: float = 0.0

    def __post_init__(self):
        for name in ("n_cpu", "n_gpu", "n_disk", "n_ram"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")
        for name in ("load_cpu", "load_gpu", "load_disk", "load_ram"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {value}")
        if self.min_p_cpu > self.max_p_cpu:
            raise ValueError("min_p_cpu must not exceed max_p_cpu")


def server_power(config: ServerConfig) -> float:
    """Total electrical power of a server in W.

    CPU draw interpolates between idle and max with the load rate; disk draw
    multiplies by the replication factor; each block carries its own
    percentage overhead.
    """
    cpu = (
        config.n_cpu
        * (config.min_p_cpu + config.load_cpu * (config.max_p_cpu - config.min_p_cpu))
        * (1.0 + config.orchestrator_overhead)
    )
    disk = (
        config.n_disk * config.p_disk * config.load_disk * config.replication
        * (1.0 + config.disk_overhead)
    )
    gpu = config.n_gpu * config.load_gpu * config.max_p_gpu * (1.0 + config.gpu_overhead)
    ram = config.n_ram * config.load_ram * config.p_ram * (1.0 + config.ram_overhead)
    return cpu + disk + gpu + ram


def vgpu_power_share(total_power_w: float, n_vcpu: int, p_vcpu_w: float, n_vgpu: int) -> float:
    """Per-vGPU power once the vCPU share is carved out of a server's draw."""
    if n_vgpu <= 0:
        raise ValueError("n_vgpu must be > 0")
    residual = total_power_w - n_vcpu * p_vcpu_w
    if residual <= 0:
        raise ValueError(
            f"no residual power for vGPUs: total {total_power_w} W <= "
            f"{n_vcpu} vCPU x {p_vcpu_w} W"
        )
    return residual / n_vgpu


# Reference 8-GPU compute node. The disk population differs from the storage
# node below (8 SSD, single copy): that configuration is the one consistent
# with the node's published 3110 W draw.
COMPUTE_SERVER = ServerConfig(
    n_cpu=2, load_cpu=0.50, max_p_cpu=240.0, min_p_cpu=35.52, orchestrator_overhead=0.05,
    n_gpu=8, load_gpu=0.80, max_p_gpu=400.0, gpu_overhead=0.05,
    n_disk=8, p_disk=18.0, load_disk=0.80, replication=1.0, disk_overhead=0.05,
    n_ram=4, load_ram=0.50, p_ram=8.5, ram_overhead=0.05,
)

# Reference storage node: 24 disks, three replicas, no GPU/RAM blocks.
STORAGE_SERVER = ServerConfig(
    n_cpu=2, load_cpu=0.50, max_p_cpu=240.0, min_p_cpu=35.52, orchestrator_overhead=0.05,
    n_disk=24, p_disk=18.0, load_disk=0.80, replication=3.0, disk_overhead=0.05,
)

#: vCPU and isolated multi-instance vGPU population of the compute node.
COMPUTE_SERVER_VCPUS = 96
COMPUTE_SERVER_VGPUS = 56  # 8 GPUs x 7 MIG slices
