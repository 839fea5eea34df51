import type { ClusterRow } from "../types";

const COLUMNS: Array<[keyof ClusterRow & string, string]> = [
  ["ai_type", "Family"],
  ["uc_type", "Use case"],
  ["model_size", "Size"],
  ["compute_kwh", "Compute kWh"],
  ["storage_kwh", "Storage kWh"],
  ["network_kwh", "Network kWh"],
  ["total_kwh", "Total kWh"],
  ["eco_score", "Score"],
];

// One row per (family, use case, size): per-inference energy does not vary
// with user or frequency class, so the 192 clusters collapse to 12 rows here.
export function renderClusterTable(container: HTMLElement, rows: ClusterRow[]): void {
  container.innerHTML = "";
  const table = document.createElement("table");
  table.className = "cluster-table";

  const head = table.createTHead().insertRow();
  for (const [, label] of COLUMNS) {
    const th = document.createElement("th");
    th.textContent = label;
    head.appendChild(th);
  }

  const body = table.createTBody();
  const seen = new Set<string>();
  for (const row of rows) {
    const key = `${row.ai_type}/${row.uc_type}/${row.model_size}`;
    if (seen.has(key)) {
      continue;
    }
    seen.add(key);
    const tr = body.insertRow();
    for (const [field] of COLUMNS) {
      const td = tr.insertCell();
      const value = row[field];
      if (field === "eco_score") {
        const badge = document.createElement("span");
        badge.className = `eco-badge eco-${String(value).toLowerCase()}`;
        badge.textContent = String(value);
        td.appendChild(badge);
      } else if (typeof value === "number") {
        td.textContent = value.toExponential(2);
        td.title = String(value);
      } else {
        td.textContent = String(value);
      }
    }
  }
  container.appendChild(table);
}
