import {
  getClusters,
  getScenarios,
  projectScenario,
  runSweep,
  ServiceError,
  solveOffset,
} from "./api";
import { debounce, LatestRun } from "./debounce";
import { ExplorerState } from "./state";
import { renderBarChart } from "./components/barChart";
import { renderClusterTable } from "./components/clusterTable";
import { renderOffsetPanel, showOffsetError, showOffsetResult } from "./components/offsetPanel";
import { renderPinboard } from "./components/pinboard";
import { renderPresetPicker } from "./components/presetPicker";
import { renderSliders } from "./components/sliders";
import { renderSweepView } from "./components/sweepView";
import type { ScenarioResult } from "./types";

export const PROJECT_DEBOUNCE_MS = 250;

const SWEEP_CAGRS = [0.25, 0.35, 0.45, 0.55, 0.65];

function el(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (node === null) {
    throw new Error(`missing element #${id}`);
  }
  return node;
}

export function setupExplorer(): { state: ExplorerState; ready: Promise<void> } {
  const state = new ExplorerState();
  const inflight = new LatestRun<ScenarioResult | undefined>();

  const banner = el("banner");

  function showBanner(message: string): void {
    banner.textContent = message;
    banner.classList.remove("hidden");
  }

  function clearBanner(): void {
    banner.textContent = "";
    banner.classList.add("hidden");
  }

  function fail(error: unknown): void {
    if (error instanceof ServiceError) {
      showBanner(error.field ? `${error.field}: ${error.message}` : error.message);
    } else {
      showBanner("Service unreachable. Is the backend running?");
    }
  }

  async function refreshProjection(): Promise<void> {
    try {
      const result = await inflight.run((signal) => projectScenario(state.params, signal));
      if (result === undefined) {
        return; // superseded by a newer request
      }
      clearBanner();
      state.lastResult = result;
      renderBarChart(el("chart"), result);
    } catch (error) {
      fail(error);
    }
  }

  const debouncedProjection = debounce(() => {
    void refreshProjection();
  }, PROJECT_DEBOUNCE_MS);

  function onSliderChange(path: string, value: number): void {
    state.setOverride(path, value);
    debouncedProjection();
  }

  function mountControls(): void {
    renderPresetPicker(el("preset"), state.presetOrder, state.presets,
                       state.selectedPreset, (name) => {
      state.selectPreset(name);
      renderSliders(el("sliders"), state.params, onSliderChange);
      void refreshProjection();
    });
    renderSliders(el("sliders"), state.params, onSliderChange);
  }

  el("reset").addEventListener("click", () => {
    state.resetOverrides();
    renderSliders(el("sliders"), state.params, onSliderChange);
    void refreshProjection();
  });

  el("pin").addEventListener("click", () => {
    const suffix = state.pinboard.length + 1;
    if (state.pin(`${state.selectedPreset} #${suffix}`)) {
      renderPinboard(el("pinboard"), state.pinboard, (index) => {
        state.unpin(index);
        renderPinboard(el("pinboard"), state.pinboard, () => undefined);
      });
    }
  });

  renderOffsetPanel(el("offset"), (target) => {
    solveOffset(state.params, target)
      .then((result) => showOffsetResult(el("offset"), result))
      .catch((error) => {
        if (error instanceof ServiceError) {
          showOffsetError(el("offset"), error.message);
        } else {
          fail(error);
        }
      });
  });

  const ready = (async () => {
    try {
      const scenarios = await getScenarios();
      state.loadPresets(scenarios.order, scenarios.scenarios);
      mountControls();
      await refreshProjection();
      renderPinboard(el("pinboard"), state.pinboard, () => undefined);

      state.sweep = await runSweep(state.presets["intermediate"], "agents_cagr", SWEEP_CAGRS);
      renderSweepView(el("sweep"), state.sweep);

      const clusters = await getClusters();
      renderClusterTable(el("clusters"), clusters.clusters);
    } catch (error) {
      fail(error);
    }
  })();

  return { state, ready };
}

if (typeof document !== "undefined" && document.getElementById("app") !== null) {
  setupExplorer();
}
