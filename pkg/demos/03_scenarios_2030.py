"""Where does the portfolio land in 2030?

Projects the 2024 footprint under the five named scenarios. Results are
indexed: 2024 = 100 on every criterion.
"""

from aifootprint import load_and_validate, project

bundle = load_and_validate()

print(f"{'scenario':<28} {'energy':>7} {'GHG':>7} {'water':>7} {'prim.en':>8} {'resources':>9}  use cases")
for name in bundle.scenario_order:
    scenario = bundle.scenarios[name]
    r = project(bundle.portfolio, scenario, bundle.models, bundle.factors)
    idx = r.index
    print(f"{scenario.name:<28} {idx.final_energy:>7.0f} {idx.gwp:>7.0f} {idx.water:>7.0f} "
          f"{idx.primary_energy:>8.0f} {idx.adp:>9.0f}  {r.use_case_count:>5.0f} ({100 * r.genai_share:.0f}% genAI)")

print()
inter = bundle.scenarios["intermediate"]
r = project(bundle.portfolio, inter, bundle.models, bundle.factors)
print("Reading the intermediate scenario:")
print(f"  usage grows {r.use_case_count / 100:.1f}x; model size x{inter.model_size_factor:.0f} and "
      f"output tokens x{inter.output_token_factor:.0f} outpace the {inter.hardware_efficiency_factor}x hardware gain,")
print(f"  so electricity lands at {r.index.final_energy / 100:.1f}x 2024 even before grid decarbonization;")
print(f"  the {100 * inter.grid_reduction:.0f}% cleaner grid pulls GHG down to {r.index.gwp / 100:.1f}x.")
