import type { ScenarioParams, ScenarioResult, SweepResponse } from "./types";

export const PINBOARD_LIMIT = 8;

export interface PinnedRun {
  label: string;
  result: ScenarioResult;
}

// All displayed numbers live in `lastResult` / `sweep` / pinned results and
// come straight from service responses; the store never recomputes them.
export class ExplorerState {
  presets: Record<string, ScenarioParams> = {};
  presetOrder: string[] = [];
  selectedPreset = "";
  overrides: ScenarioParams | null = null;
  lastResult: ScenarioResult | null = null;
  sweep: SweepResponse | null = null;
  pinboard: PinnedRun[] = [];

  loadPresets(order: string[], presets: Record<string, ScenarioParams>): void {
    this.presetOrder = [...order];
    this.presets = presets;
    if (!this.selectedPreset && order.length > 0) {
      this.selectPreset(order[order.length - 1]);
    }
  }

  selectPreset(name: string): void {
    if (!(name in this.presets)) {
      throw new Error(`unknown preset: ${name}`);
    }
    this.selectedPreset = name;
    this.overrides = structuredClone(this.presets[name]);
  }

  get params(): ScenarioParams {
    if (this.overrides === null) {
      throw new Error("no scenario selected");
    }
    return this.overrides;
  }

  setOverride(path: string, value: number): void {
    const params = this.params as unknown as Record<string, unknown>;
    if (path.startsWith("cagr.")) {
      (params.cagr as Record<string, number>)[path.slice(5)] = value;
    } else {
      params[path] = value;
    }
  }

  resetOverrides(): void {
    this.selectPreset(this.selectedPreset);
  }

  pin(label: string): boolean {
    if (this.lastResult === null || this.pinboard.length >= PINBOARD_LIMIT) {
      return false;
    }
    this.pinboard.push({ label, result: this.lastResult });
    return true;
  }

  unpin(index: number): void {
    this.pinboard.splice(index, 1);
  }
}
