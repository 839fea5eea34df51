import type { ScenarioParams } from "../types";

export function renderPresetPicker(
  container: HTMLElement,
  order: string[],
  presets: Record<string, ScenarioParams>,
  selected: string,
  onSelect: (name: string) => void,
): void {
  container.innerHTML = "";
  const select = document.createElement("select");
  select.id = "preset-select";
  for (const name of order) {
    const option = document.createElement("option");
    option.value = name;
    option.textContent = presets[name].label;
    option.selected = name === selected;
    select.appendChild(option);
  }
  select.addEventListener("change", () => onSelect(select.value));
  container.appendChild(select);
}
