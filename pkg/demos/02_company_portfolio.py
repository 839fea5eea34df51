"""Annual footprint of a 100-use-case company portfolio.

Expands the distribution-based portfolio into its 192 weighted clusters,
aggregates a year of inference and fine-tuning, and slices the result along
the accounting grid.
"""

from aifootprint import aggregate_portfolio, load_and_validate, scale_to_global2000
from aifootprint.portfolio import expand_clusters

bundle = load_and_validate()
spec = bundle.portfolio

weights = expand_clusters(spec)
genai_mass = sum(w for c, w in weights if c.ai_type.value == "genai")
print(f"{len(weights)} clusters; generative use cases carry {genai_mass:.0f} of {spec.n_use_cases:.0f} slots")

footprint = aggregate_portfolio(spec, bundle.models, bundle.factors)
total = footprint.total
print()
print("Annual totals")
print(f"  electricity     {total.final_energy / 1e6:8.2f} GWh")
print(f"  climate change  {total.gwp / 1e6:8.2f} ktCO2eq")
print(f"  water use       {total.water / 1e3:8.1f} thousand m3eq")
print(f"  primary energy  {total.primary_energy / 1e6:8.1f} TJ-equivalent (MJ x 1e6)")
print(f"  resource use    {total.adp:8.3f} kgSbeq")

print()
print("Who drives it?")
by_ai = footprint.breakdown("ai_type")
print(f"  generative AI: {100 * by_ai['genai'].final_energy / total.final_energy:.2f}% of electricity")
by_step = footprint.breakdown("step")
print(f"  inference vs fine-tuning energy: "
      f"{by_step['inference'].final_energy:,.0f} vs {by_step['fine_tuning'].final_energy:,.0f} kWh")

print()
print("Embodied vs operational, by criterion (embodied %):")
by_stage = footprint.breakdown("stage")
for criterion in ("gwp", "water", "primary_energy", "adp"):
    share = 100 * getattr(by_stage["embodied"], criterion) / getattr(total, criterion)
    print(f"  {criterion:<16} {share:5.1f}%")

global2000 = scale_to_global2000(footprint)
print()
print(f"If every Global-2000 company ran a similar portfolio: "
      f"{global2000.final_energy / 1e9:.1f} TWh of electricity per year")
