// Request/response shapes of the /v1 service.

export interface ImpactDict {
  final_energy: number;
  gwp: number;
  water: number;
  primary_energy: number;
  adp: number;
}

export const CRITERIA: Array<keyof ImpactDict> = [
  "final_energy", "gwp", "water", "primary_energy", "adp",
];

export const CRITERIA_LABELS: Record<keyof ImpactDict, string> = {
  final_energy: "Energy",
  gwp: "GHG",
  water: "Water",
  primary_energy: "Primary energy",
  adp: "Resources",
};

export interface ScenarioParams {
  name: string;
  label: string;
  horizon_years: number;
  cagr: {
    genai_ex_agents: number;
    agents: number;
    computer_vision: number;
    nlp: number;
    tabular: number;
  };
  model_size_factor: number;
  output_token_factor: number;
  quantization_factor: number;
  quantization_memory_factor: number;
  hardware_efficiency_factor: number;
  pue_2030: number;
  grid_reduction: number;
}

export interface ScenarioResult {
  scenario: ScenarioParams;
  index: ImpactDict;
  projected_total: ImpactDict;
  baseline_total: ImpactDict;
  use_case_count: number;
  genai_share: number;
}

export interface ScenariosResponse {
  order: string[];
  scenarios: Record<string, ScenarioParams>;
}

export interface SweepPoint {
  value: number;
  index: ImpactDict;
}

export interface SweepResponse {
  parameter: string;
  points: SweepPoint[];
  poly_coefficients?: number[];
}

export interface OffsetResponse {
  scenario: string;
  ghg_target_fraction: number;
  pue: number;
  grid_factor: number;
  hardware_efficiency_factor: number;
  achieved_ghg_index: number;
  energy_index: number;
}

export interface ClusterRow {
  ai_type: string;
  uc_type: string;
  model_size: string;
  users_class: string;
  freq_class: string;
  compute_kwh: number;
  storage_kwh: number;
  network_kwh: number;
  total_kwh: number;
  eco_score: string;
  [extra: string]: string | number;
}

export interface ClustersResponse {
  clusters: ClusterRow[];
}

export interface ApiError {
  error: string;
  field?: string;
}
