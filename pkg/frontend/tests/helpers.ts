import { vi } from "vitest";
import { fixtures } from "./fixtures";

// Mirrors the mount points of index.html.
export function mountAppShell(): void {
  document.body.innerHTML = `
    <div id="app">
      <div id="banner" class="banner hidden"></div>
      <div id="preset"></div>
      <div id="sliders"></div>
      <button id="reset"></button>
      <button id="pin"></button>
      <div id="chart"></div>
      <div id="sweep"></div>
      <div id="offset"></div>
      <div id="pinboard"></div>
      <div id="clusters"></div>
    </div>`;
}

// Plain stand-in for Response: json() resolves in a single microtask, so
// tests can drain render pipelines deterministically.
function jsonResponse(payload: unknown, status = 200) {
  return {
    ok: status >= 200 && status < 300,
    status,
    json: () => Promise.resolve(structuredClone(payload)),
  };
}

export interface FetchLog {
  projectBodies: Array<Record<string, unknown>>;
}

// Recorded-response service stub. Routes requests to the captured fixtures
// and logs /v1/project bodies so tests can count and inspect them.
export function installServiceStub(): FetchLog {
  const log: FetchLog = { projectBodies: [] };

  vi.stubGlobal("fetch", vi.fn(async (input: RequestInfo | URL, init?: RequestInit) => {
    const url = String(input);
    if (url.endsWith("/v1/scenarios")) {
      return jsonResponse(fixtures.scenarios);
    }
    if (url.endsWith("/v1/clusters")) {
      return jsonResponse(fixtures.clusters);
    }
    if (url.endsWith("/v1/sweep")) {
      return jsonResponse(fixtures.sweep);
    }
    if (url.endsWith("/v1/offset")) {
      return jsonResponse(fixtures.offset);
    }
    if (url.endsWith("/v1/project")) {
      const body = JSON.parse(String(init?.body ?? "{}"));
      log.projectBodies.push(body);
      const scenario = body.scenario ?? {};
      if (scenario.cagr?.agents === 0.65) {
        return jsonResponse(fixtures.project_agents65);
      }
      if (scenario.name === "high-adoption") {
        return jsonResponse(fixtures.project_high);
      }
      return jsonResponse(fixtures.project_intermediate);
    }
    return jsonResponse({ error: `unrouted: ${url}` }, 404);
  }));
  return log;
}

export async function flushMicrotasks(rounds = 6): Promise<void> {
  for (let i = 0; i < rounds; i += 1) {
    await Promise.resolve();
  }
}
