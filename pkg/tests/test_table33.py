"""Reference multi-criteria impacts per inference for all twelve use-case rows."""

import pytest

from aifootprint.clusters import AIType, FreqClass, ModelSize, UseCaseCluster, UseCaseType, UsersClass
from aifootprint.energy import inference_impact

# (operational, embodied) per criterion, per row:
# gwp kgCO2eq, water m3eq, primary energy MJ, adp kgSbeq.
REFERENCE_IMPACTS = {
    (UseCaseType.CHAT, ModelSize.LOW): {
        "gwp": (5.55e-5, 3.11e-6), "water": (2.72e-6, 1.06e-6),
        "primary_energy": (1.20e-3, 4.61e-5), "adp": (1.99e-12, 1.59e-11),
    },
    (UseCaseType.CHAT, ModelSize.MEDIUM): {
        "gwp": (9.26e-4, 5.19e-5), "water": (4.54e-5, 1.77e-5),
        "primary_energy": (2.01e-2, 7.68e-4), "adp": (3.32e-11, 2.65e-10),
    },
    (UseCaseType.CHAT, ModelSize.HIGH): {
        "gwp": (1.03e-2, 5.79e-4), "water": (5.06e-4, 1.98e-4),
        "primary_energy": (2.24e-1, 8.57e-3), "adp": (3.70e-10, 2.96e-9),
    },
    (UseCaseType.RAG, ModelSize.LOW): {
        "gwp": (9.28e-5, 5.17e-6), "water": (4.55e-6, 1.77e-6),
        "primary_energy": (2.01e-3, 7.65e-5), "adp": (3.32e-12, 2.80e-11),
    },
    (UseCaseType.RAG, ModelSize.MEDIUM): {
        "gwp": (1.58e-3, 8.82e-5), "water": (7.72e-5, 3.02e-5),
        "primary_energy": (3.41e-2, 1.31e-3), "adp": (5.64e-11, 4.52e-10),
    },
    (UseCaseType.RAG, ModelSize.HIGH): {
        "gwp": (1.79e-2, 1.00e-3), "water": (8.75e-4, 3.42e-4),
        "primary_energy": (3.87e-1, 1.48e-2), "adp": (6.40e-10, 5.11e-9),
    },
    (UseCaseType.AGENTS, ModelSize.LOW): {
        "gwp": (2.96e-4, 1.66e-5), "water": (1.45e-5, 5.67e-6),
        "primary_energy": (6.42e-3, 2.46e-4), "adp": (1.06e-11, 8.96e-11),
    },
    (UseCaseType.AGENTS, ModelSize.MEDIUM): {
        "gwp": (5.09e-3, 2.85e-4), "water": (2.49e-4, 9.75e-5),
        "primary_energy": (1.10e-1, 4.23e-3), "adp": (1.82e-10, 1.46e-9),
    },
    (UseCaseType.AGENTS, ModelSize.HIGH): {
        "gwp": (5.72e-2, 3.20e-3), "water": (2.80e-3, 1.09e-3),
        "primary_energy": (1.24e0, 4.74e-2), "adp": (2.05e-9, 1.64e-8),
    },
    (UseCaseType.TABULAR, None): {
        "gwp": (2.06e-8, 1.37e-9), "water": (1.01e-9, 4.40e-10),
        "primary_energy": (4.47e-7, 2.05e-8), "adp": (7.39e-16, 3.17e-13),
    },
    (UseCaseType.COMPUTER_VISION, None): {
        "gwp": (1.89e-4, 8.75e-7), "water": (9.26e-6, 2.98e-7),
        "primary_energy": (4.09e-3, 1.30e-5), "adp": (6.77e-12, 1.54e-11),
    },
    (UseCaseType.NLP, None): {
        "gwp": (2.20e-6, 1.22e-7), "water": (1.08e-7, 4.17e-8),
        "primary_energy": (4.78e-5, 1.81e-6), "adp": (7.90e-14, 2.24e-12),
    },
}


def _cluster(uc_type, size):
    if size is None:
        return UseCaseCluster(AIType.TRADITIONAL, uc_type, None, UsersClass.MEDIUM, FreqClass.MEDIUM)
    return UseCaseCluster(AIType.GENAI, uc_type, size, UsersClass.MEDIUM, FreqClass.MEDIUM)


@pytest.mark.parametrize("uc_type,size", sorted(REFERENCE_IMPACTS, key=str))
def test_reference_impacts_within_5pct(bundle, uc_type, size):
    impact = inference_impact(_cluster(uc_type, size), bundle.models, bundle.factors, bundle.datacenter)
    for criterion, (op_ref, emb_ref) in REFERENCE_IMPACTS[(uc_type, size)].items():
        assert getattr(impact.operational, criterion) == pytest.approx(op_ref, rel=0.05), (
            "operational", criterion)
        assert getattr(impact.embodied, criterion) == pytest.approx(emb_ref, rel=0.05), (
            "embodied", criterion)


def test_spot_anchors(bundle):
    medium_chat = inference_impact(
        _cluster(UseCaseType.CHAT, ModelSize.MEDIUM), bundle.models, bundle.factors, bundle.datacenter)
    assert medium_chat.operational.gwp == pytest.approx(9.26e-4, rel=0.05)
    assert medium_chat.embodied.gwp == pytest.approx(5.19e-5, rel=0.05)

    high_agents = inference_impact(
        _cluster(UseCaseType.AGENTS, ModelSize.HIGH), bundle.models, bundle.factors, bundle.datacenter)
    assert high_agents.operational.gwp == pytest.approx(5.72e-2, rel=0.05)
    assert high_agents.embodied.water == pytest.approx(1.09e-3, rel=0.05)

    tabular = inference_impact(
        _cluster(UseCaseType.TABULAR, None), bundle.models, bundle.factors, bundle.datacenter)
    assert tabular.operational.primary_energy == pytest.approx(4.47e-7, rel=0.05)


def test_per_cluster_grid_identity(bundle):
    """Total impact is the sum over the (step, component, stage) grid, nothing counted twice."""
    from aifootprint.energy import component_embodied, component_operational, inference_quantities

    for (uc_type, size) in REFERENCE_IMPACTS:
        cluster = _cluster(uc_type, size)
        q = inference_quantities(cluster, bundle.models, bundle.factors, bundle.datacenter)
        impact = inference_impact(cluster, bundle.models, bundle.factors, bundle.datacenter)
        op_cells = component_operational(q, bundle.datacenter, bundle.factors)
        emb_cells = component_embodied(q, bundle.factors)
        op_sum = sum((v for v in op_cells.values()), start=impact.operational * 0.0)
        emb_sum = sum((v for v in emb_cells.values()), start=impact.embodied * 0.0)
        assert op_sum.isclose(impact.operational, rel_tol=1e-12, abs_tol=1e-30)
        assert emb_sum.isclose(impact.embodied, rel_tol=1e-12, abs_tol=1e-30)
