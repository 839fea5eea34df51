"""What does one AI inference cost the environment?

Walks the per-inference model for a few representative use cases: energy by
component, the five-criteria operational/embodied impacts, and the eco-score
letter each task earns.
"""

from aifootprint import eco_score, inference_impact, load_and_validate
from aifootprint.clusters import (
    AIType, FreqClass, ModelSize, UseCaseCluster, UseCaseType, UsersClass,
)

bundle = load_and_validate()

showcase = [
    UseCaseCluster(AIType.GENAI, UseCaseType.CHAT, ModelSize.MEDIUM,
                   UsersClass.MEDIUM, FreqClass.MEDIUM),
    UseCaseCluster(AIType.GENAI, UseCaseType.RAG, ModelSize.MEDIUM,
                   UsersClass.MEDIUM, FreqClass.MEDIUM),
    UseCaseCluster(AIType.GENAI, UseCaseType.AGENTS, ModelSize.HIGH,
                   UsersClass.MEDIUM, FreqClass.MEDIUM),
    UseCaseCluster(AIType.TRADITIONAL, UseCaseType.NLP, None,
                   UsersClass.MEDIUM, FreqClass.MEDIUM),
    UseCaseCluster(AIType.TRADITIONAL, UseCaseType.COMPUTER_VISION, None,
                   UsersClass.MEDIUM, FreqClass.MEDIUM),
]

print(f"{'use case':<28} {'compute':>10} {'storage':>10} {'network':>10} {'total kWh':>10}  score")
for cluster in showcase:
    impact = inference_impact(cluster, bundle.models, bundle.factors, bundle.datacenter)
    e = impact.energy
    label = f"{cluster.uc_type.value} ({cluster.model_size.value if cluster.model_size else 'trad'})"
    grade = eco_score(e.total)
    print(f"{label:<28} {e.compute:>10.2e} {e.storage:>10.2e} {e.network:>10.2e} {e.total:>10.2e}  {grade}")

print()
print("A medium chat exchange, in full:")
chat = inference_impact(showcase[0], bundle.models, bundle.factors, bundle.datacenter)
for criterion, unit in (("gwp", "kgCO2eq"), ("water", "m3eq"),
                        ("primary_energy", "MJ"), ("adp", "kgSbeq")):
    op = getattr(chat.operational, criterion)
    emb = getattr(chat.embodied, criterion)
    share = 100 * emb / (op + emb)
    print(f"  {criterion:<16} operational {op:.2e} {unit:<8} embodied {emb:.2e} ({share:.0f}% embodied)")

print()
high_chat = inference_impact(
    UseCaseCluster(AIType.GENAI, UseCaseType.CHAT, ModelSize.HIGH, UsersClass.MEDIUM, FreqClass.MEDIUM),
    bundle.models, bundle.factors, bundle.datacenter)
nlp = inference_impact(showcase[3], bundle.models, bundle.factors, bundle.datacenter)
print(f"Generative vs traditional: one large-model chat = "
      f"{high_chat.energy.total / nlp.energy.total:,.0f}x one NLP task")
