import pytest

from aifootprint.clusters import (
    AIType,
    FreqClass,
    ModelSize,
    USERS_PER_CLASS,
    UseCaseCluster,
    UseCaseType,
    UsersClass,
    enumerate_clusters,
)


def test_enumeration_yields_192_distinct_clusters():
    clusters = enumerate_clusters()
    assert len(clusters) == 192
    assert len(set(clusters)) == 192


def test_family_block_sizes():
    clusters = enumerate_clusters()
    genai = [c for c in clusters if c.ai_type is AIType.GENAI]
    trad = [c for c in clusters if c.ai_type is AIType.TRADITIONAL]
    assert len(genai) == 3 * 3 * 4 * 4
    assert len(trad) == 3 * 4 * 4


def test_model_size_none_iff_traditional():
    for cluster in enumerate_clusters():
        if cluster.ai_type is AIType.TRADITIONAL:
            assert cluster.model_size is None
        else:
            assert cluster.model_size is not None


def test_invalid_combinations_rejected():
    with pytest.raises(ValueError):
        UseCaseCluster(AIType.GENAI, UseCaseType.TABULAR, ModelSize.LOW,
                       UsersClass.LOW, FreqClass.LOW)
    with pytest.raises(ValueError):
        UseCaseCluster(AIType.GENAI, UseCaseType.CHAT, None, UsersClass.LOW, FreqClass.LOW)
    with pytest.raises(ValueError):
        UseCaseCluster(AIType.TRADITIONAL, UseCaseType.CHAT, None, UsersClass.LOW, FreqClass.LOW)
    with pytest.raises(ValueError):
        UseCaseCluster(AIType.TRADITIONAL, UseCaseType.NLP, ModelSize.LOW,
                       UsersClass.LOW, FreqClass.LOW)


def test_user_class_values_log_scale():
    assert USERS_PER_CLASS[UsersClass.LOW] == 10
    assert USERS_PER_CLASS[UsersClass.MEDIUM] == 100
    assert USERS_PER_CLASS[UsersClass.HIGH] == 1000
    assert USERS_PER_CLASS[UsersClass.VERY_HIGH] == 10000


def test_enumeration_order_stable():
    assert enumerate_clusters() == enumerate_clusters()
    first = enumerate_clusters()[0]
    assert first.ai_type is AIType.GENAI
    assert first.uc_type is UseCaseType.CHAT
