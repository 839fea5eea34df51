import type {
  ApiError,
  ClustersResponse,
  OffsetResponse,
  ScenarioParams,
  ScenarioResult,
  ScenariosResponse,
  SweepResponse,
} from "./types";

// Same-origin by default: the backend's serve command hosts both the API
// and the built assets.
let baseUrl = "";

export function setBaseUrl(url: string): void {
  baseUrl = url.replace(/\/$/, "");
}

export class ServiceError extends Error {
  status: number;
  field?: string;

  constructor(status: number, body: ApiError) {
    super(body.error);
    this.status = status;
    this.field = body.field;
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(`${baseUrl}${path}`, init);
  const body = await response.json();
  if (!response.ok) {
    throw new ServiceError(response.status, body as ApiError);
  }
  return body as T;
}

function post<T>(path: string, payload: unknown, signal?: AbortSignal): Promise<T> {
  return request<T>(path, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(payload),
    signal,
  });
}

export function getScenarios(): Promise<ScenariosResponse> {
  return request<ScenariosResponse>("/v1/scenarios");
}

export function getClusters(): Promise<ClustersResponse> {
  return request<ClustersResponse>("/v1/clusters");
}

export function projectScenario(
  scenario: ScenarioParams,
  signal?: AbortSignal,
): Promise<ScenarioResult> {
  return post<ScenarioResult>("/v1/project", { scenario }, signal);
}

export function runSweep(
  scenario: ScenarioParams,
  parameter: string,
  values: number[],
): Promise<SweepResponse> {
  return post<SweepResponse>("/v1/sweep", { scenario, parameter, values });
}

export function solveOffset(
  scenario: ScenarioParams,
  target: number,
): Promise<OffsetResponse> {
  return post<OffsetResponse>("/v1/offset", { scenario, target });
}
