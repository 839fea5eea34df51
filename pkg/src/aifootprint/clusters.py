"""Use-case cluster taxonomy: 192 clusters over five dimensions."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple


class AIType(str, Enum):
    GENAI = "genai"
    TRADITIONAL = "traditional"


class UseCaseType(str, Enum):
    # Generative families
    CHAT = "chat"
    RAG = "rag"
    AGENTS = "agents"
    # Traditional families
    TABULAR = "tabular"
    COMPUTER_VISION = "computer_vision"
    NLP = "nlp"


GENAI_TYPES = (UseCaseType.CHAT, UseCaseType.RAG, UseCaseType.AGENTS)
TRADITIONAL_TYPES = (UseCaseType.TABULAR, UseCaseType.COMPUTER_VISION, UseCaseType.NLP)


class ModelSize(str, Enum):
    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"


class UsersClass(str, Enum):
    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"
    VERY_HIGH = "very_high"


class FreqClass(str, Enum):
    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"
    VERY_HIGH = "very_high"


#: Daily-user head counts per class (log scale: PoC, MVP, industrialised, company-wide).
USERS_PER_CLASS = {
    UsersClass.LOW: 10,
    UsersClass.MEDIUM: 100,
    UsersClass.HIGH: 1000,
    UsersClass.VERY_HIGH: 10000,
}


@dataclass(frozen=True)
class UseCaseCluster:
    """One of the 192 portfolio clusters.

    model_size is only meaningful for generative use cases and must be None
    for traditional ones.
    """

    ai_type: AIType
    uc_type: UseCaseType
    model_size: Optional[ModelSize]
    users_class: UsersClass
    freq_class: FreqClass

    def __post_init__(self):
        if self.ai_type is AIType.GENAI:
            if self.uc_type not in GENAI_TYPES:
                raise ValueError(f"{self.uc_type} is not a generative use-case type")
            if self.model_size is None:
                raise ValueError("generative clusters need a model size")
        else:
            if self.uc_type not in TRADITIONAL_TYPES:
                raise ValueError(f"{self.uc_type} is not a traditional use-case type")
            if self.model_size is not None:
                raise ValueError("traditional clusters carry no model size")

    def key(self) -> Tuple:
        return (
            self.ai_type.value,
            self.uc_type.value,
            self.model_size.value if self.model_size else "na",
            self.users_class.value,
            self.freq_class.value,
        )


def enumerate_clusters() -> Tuple[UseCaseCluster, ...]:
    """All 192 clusters in a stable order (generative block first)."""
    clusters = []
    for uc_type in GENAI_TYPES:
        for size in ModelSize:
            for users in UsersClass:
                for freq in FreqClass:
                    clusters.append(UseCaseCluster(AIType.GENAI, uc_type, size, users, freq))
    for uc_type in TRADITIONAL_TYPES:
        for users in UsersClass:
            for freq in FreqClass:
                clusters.append(UseCaseCluster(AIType.TRADITIONAL, uc_type, None, users, freq))
    return tuple(clusters)
