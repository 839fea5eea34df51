import type { SweepResponse } from "../types";

const WIDTH = 460;
const HEIGHT = 240;
const PAD = 40;

function scale(values: number[], lo: number, hi: number): (v: number) => number {
  const min = Math.min(...values);
  const max = Math.max(...values);
  const span = max - min || 1;
  return (v) => lo + ((v - min) / span) * (hi - lo);
}

// Agent-adoption sweep: measured points plus the service-fitted degree-2
// polynomial. All plotted numbers come from the sweep response.
export function renderSweepView(container: HTMLElement, sweep: SweepResponse | null): void {
  container.innerHTML = "";
  if (sweep === null || sweep.points.length === 0) {
    const empty = document.createElement("p");
    empty.className = "placeholder";
    empty.textContent = "Sweep not loaded.";
    container.appendChild(empty);
    return;
  }
  const xs = sweep.points.map((p) => p.value);
  const ys = sweep.points.map((p) => p.index.final_energy);
  const sx = scale(xs, PAD, WIDTH - PAD);
  const sy = scale(ys, HEIGHT - PAD, PAD);

  const svg = document.createElementNS("http://www.w3.org/2000/svg", "svg");
  svg.setAttribute("viewBox", `0 0 ${WIDTH} ${HEIGHT}`);
  svg.setAttribute("class", "sweep-chart");

  if (sweep.poly_coefficients && sweep.poly_coefficients.length === 3) {
    const [a, b, c] = sweep.poly_coefficients;
    const lo = Math.min(...xs);
    const hi = Math.max(...xs);
    const pts: string[] = [];
    for (let k = 0; k <= 60; k += 1) {
      const x = lo + ((hi - lo) * k) / 60;
      const y = a * x * x + b * x + c;
      pts.push(`${sx(x)},${sy(y)}`);
    }
    const fit = document.createElementNS("http://www.w3.org/2000/svg", "polyline");
    fit.setAttribute("points", pts.join(" "));
    fit.setAttribute("class", "sweep-fit");
    fit.setAttribute("fill", "none");
    svg.appendChild(fit);
  }

  for (const point of sweep.points) {
    const dot = document.createElementNS("http://www.w3.org/2000/svg", "circle");
    dot.setAttribute("cx", String(sx(point.value)));
    dot.setAttribute("cy", String(sy(point.index.final_energy)));
    dot.setAttribute("r", "4");
    dot.setAttribute("class", "sweep-point");
    svg.appendChild(dot);

    const label = document.createElementNS("http://www.w3.org/2000/svg", "text");
    label.setAttribute("x", String(sx(point.value)));
    label.setAttribute("y", String(sy(point.index.final_energy) - 8));
    label.setAttribute("text-anchor", "middle");
    label.setAttribute("class", "sweep-value");
    label.textContent = String(point.index.final_energy);
    svg.appendChild(label);

    const tick = document.createElementNS("http://www.w3.org/2000/svg", "text");
    tick.setAttribute("x", String(sx(point.value)));
    tick.setAttribute("y", String(HEIGHT - PAD / 2));
    tick.setAttribute("text-anchor", "middle");
    tick.setAttribute("class", "sweep-tick");
    tick.textContent = `${Math.round(point.value * 100)}%`;
    svg.appendChild(tick);
  }
  container.appendChild(svg);
}
