import { CRITERIA, CRITERIA_LABELS, type ScenarioResult } from "../types";

// Indexed bar chart: one bar per criterion against the 2024 = 100 baseline.
// The printed value is the service payload rendered verbatim (String(x));
// only the bar geometry is scaled for display.
export function renderBarChart(container: HTMLElement, result: ScenarioResult | null): void {
  container.innerHTML = "";
  if (result === null) {
    const empty = document.createElement("p");
    empty.className = "placeholder";
    empty.textContent = "Run a projection to see indexed impacts.";
    container.appendChild(empty);
    return;
  }
  const maxValue = Math.max(100, ...CRITERIA.map((c) => result.index[c]));
  const list = document.createElement("div");
  list.className = "bar-chart";
  for (const criterion of CRITERIA) {
    const value = result.index[criterion];
    const row = document.createElement("div");
    row.className = "bar-row";

    const label = document.createElement("span");
    label.className = "bar-label";
    label.textContent = CRITERIA_LABELS[criterion];

    const track = document.createElement("div");
    track.className = "bar-track";
    const bar = document.createElement("div");
    bar.className = "bar-fill";
    bar.style.width = `${Math.min(100, (100 * value) / maxValue)}%`;
    const baseline = document.createElement("div");
    baseline.className = "bar-baseline";
    baseline.style.left = `${Math.min(100, (100 * 100) / maxValue)}%`;
    baseline.title = "2024 = 100";
    track.appendChild(bar);
    track.appendChild(baseline);

    const text = document.createElement("span");
    text.className = "index-value";
    text.dataset.criterion = criterion;
    text.textContent = String(value);

    row.appendChild(label);
    row.appendChild(track);
    row.appendChild(text);
    list.appendChild(row);
  }
  const meta = document.createElement("p");
  meta.className = "chart-meta";
  meta.textContent =
    `${result.scenario.label}: ${String(result.use_case_count)} use cases, ` +
    `genAI share ${String(result.genai_share)}`;
  list.appendChild(meta);
  container.appendChild(list);
}
