import type { ScenarioParams } from "../types";

interface SliderSpec {
  path: string;       // ScenarioParams field, or "cagr.<family>"
  label: string;
  min: number;
  max: number;
  step: number;
}

export const SLIDER_SPECS: SliderSpec[] = [
  { path: "cagr.genai_ex_agents", label: "GenAI adoption CAGR", min: 0, max: 0.8, step: 0.01 },
  { path: "cagr.agents", label: "Agents adoption CAGR", min: 0, max: 0.8, step: 0.01 },
  { path: "cagr.computer_vision", label: "CV adoption CAGR", min: 0, max: 0.5, step: 0.01 },
  { path: "cagr.nlp", label: "NLP adoption CAGR", min: 0, max: 0.5, step: 0.01 },
  { path: "cagr.tabular", label: "Tabular adoption CAGR", min: 0, max: 0.5, step: 0.01 },
  { path: "model_size_factor", label: "Model size x", min: 0.5, max: 5, step: 0.1 },
  { path: "output_token_factor", label: "Output tokens x", min: 0.5, max: 5, step: 0.1 },
  { path: "hardware_efficiency_factor", label: "Hardware efficiency x", min: 1, max: 30, step: 0.1 },
  { path: "quantization_factor", label: "Quantization energy x", min: 1, max: 2, step: 0.05 },
  { path: "quantization_memory_factor", label: "Quantization memory x", min: 1, max: 2, step: 0.05 },
  { path: "pue_2030", label: "PUE 2030", min: 1.0, max: 1.6, step: 0.01 },
  { path: "grid_reduction", label: "Grid decarbonization", min: 0, max: 0.9, step: 0.01 },
];

function valueAt(params: ScenarioParams, path: string): number {
  if (path.startsWith("cagr.")) {
    return params.cagr[path.slice(5) as keyof ScenarioParams["cagr"]];
  }
  return params[path as keyof ScenarioParams] as number;
}

export function renderSliders(
  container: HTMLElement,
  params: ScenarioParams,
  onChange: (path: string, value: number) => void,
): void {
  container.innerHTML = "";
  for (const spec of SLIDER_SPECS) {
    const row = document.createElement("label");
    row.className = "slider-row";

    const text = document.createElement("span");
    text.className = "slider-label";
    text.textContent = spec.label;

    const slider = document.createElement("input");
    slider.type = "range";
    slider.min = String(spec.min);
    slider.max = String(spec.max);
    slider.step = String(spec.step);
    slider.value = String(valueAt(params, spec.path));
    slider.dataset.path = spec.path;

    const box = document.createElement("input");
    box.type = "number";
    box.className = "slider-box";
    box.min = slider.min;
    box.max = slider.max;
    box.step = slider.step;
    box.value = slider.value;

    slider.addEventListener("input", () => {
      box.value = slider.value;
      onChange(spec.path, parseFloat(slider.value));
    });
    box.addEventListener("input", () => {
      if (box.value === "" || Number.isNaN(parseFloat(box.value))) {
        return;
      }
      slider.value = box.value;
      onChange(spec.path, parseFloat(box.value));
    });

    row.appendChild(text);
    row.appendChild(slider);
    row.appendChild(box);
    container.appendChild(row);
  }
}
