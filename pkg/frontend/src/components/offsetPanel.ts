import type { OffsetResponse } from "../types";

// Offset panel: asks the solver how much hardware efficiency a GHG target
// needs. The factor is printed verbatim from the response.
export function renderOffsetPanel(
  container: HTMLElement,
  onSolve: (target: number) => void,
): void {
  container.innerHTML = "";

  const row = document.createElement("div");
  row.className = "offset-controls";
  const label = document.createElement("label");
  label.textContent = "GHG reduction target";
  const input = document.createElement("input");
  input.type = "number";
  input.id = "offset-target";
  input.min = "0.01";
  input.max = "0.99";
  input.step = "0.01";
  input.value = "0.9";
  const button = document.createElement("button");
  button.id = "offset-solve";
  button.textContent = "Solve hardware factor";
  button.addEventListener("click", () => onSolve(parseFloat(input.value)));
  label.appendChild(input);
  row.appendChild(label);
  row.appendChild(button);

  const output = document.createElement("div");
  output.id = "offset-result";
  output.className = "placeholder";
  output.textContent = "No solve yet.";

  container.appendChild(row);
  container.appendChild(output);
}

export function showOffsetResult(container: HTMLElement, result: OffsetResponse): void {
  const output = container.querySelector<HTMLElement>("#offset-result");
  if (output === null) {
    return;
  }
  output.className = "offset-output";
  output.innerHTML = "";

  const headline = document.createElement("p");
  headline.append("Required hardware efficiency factor: ");
  const factor = document.createElement("strong");
  factor.id = "offset-factor";
  factor.textContent = String(result.hardware_efficiency_factor);
  headline.appendChild(factor);

  const detail = document.createElement("p");
  detail.className = "offset-detail";
  detail.textContent =
    `achieved GHG index ${String(result.achieved_ghg_index)} ` +
    `(PUE ${String(result.pue)}, grid factor ${String(result.grid_factor)})`;

  output.appendChild(headline);
  output.appendChild(detail);
}

export function showOffsetError(container: HTMLElement, message: string): void {
  const output = container.querySelector<HTMLElement>("#offset-result");
  if (output === null) {
    return;
  }
  output.className = "offset-error";
  output.textContent = message;
}
