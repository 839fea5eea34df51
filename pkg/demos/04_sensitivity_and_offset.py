"""Which lever matters? Sensitivity sweeps and the efficiency-offset solver.

Sweeps model size and agent adoption around the intermediate scenario, fits
the growth curve, then asks how much hardware efficiency a 90% GHG cut
would take.
"""

from aifootprint import load_and_validate, sensitivity_sweep, solve_hardware_efficiency

bundle = load_and_validate()
spec = bundle.portfolio
inter = bundle.scenarios["intermediate"]

size = sensitivity_sweep(spec, inter, "model_size_factor", [1.8, 2.0, 2.2],
                         bundle.models, bundle.factors)
low, mid, high = size.energy_indices()
print("Model-size sensitivity (1:1 by construction):")
print(f"  -10% size -> {100 * (low / mid - 1):+.1f}% energy;  +10% size -> {100 * (high / mid - 1):+.1f}%")

print()
print("Agent-adoption sweep (energy index vs agents CAGR):")
cagrs = [0.25, 0.35, 0.45, 0.55, 0.65]
agents = sensitivity_sweep(spec, inter, "agents_cagr", cagrs, bundle.models, bundle.factors)
for c, e in zip(cagrs, agents.energy_indices()):
    bar = "#" * int(e / 25)
    print(f"  {100 * c:3.0f}%  {e:7.0f}  {bar}")
a2, a1, a0 = agents.poly_coefficients
print(f"  degree-2 fit: {a2:.0f} c^2 {a1:+.0f} c {a0:+.0f}   (positive curvature: compounding growth)")

print()
print("Hardware needed for a 90% GHG cut (PUE 1.04, grid factor 0.55):")
for name in ("intermediate", "high-adoption"):
    factor = solve_hardware_efficiency(spec, bundle.scenarios[name],
                                       bundle.models, bundle.factors, 0.9)
    print(f"  {name:<16} {factor:6.0f}x more efficient hardware")
print("  Neither current GPU trends (4.4x) nor inference-specialized silicon (~21x) gets close.")
