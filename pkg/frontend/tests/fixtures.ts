// Recorded service responses (captured from a live run of the backend).
import type {
  ClustersResponse,
  OffsetResponse,
  ScenarioResult,
  ScenariosResponse,
  SweepResponse,
} from "../src/types";

interface Fixtures {
  scenarios: ScenariosResponse;
  project_intermediate: ScenarioResult;
  project_high: ScenarioResult;
  project_agents65: ScenarioResult;
  sweep: SweepResponse;
  offset: OffsetResponse;
  clusters: ClustersResponse;
  score: { energy_kwh: number; grade: string; beyond_scale: boolean };
}
export const fixtures: Fixtures = {
  "clusters": {
    "clusters": [
      {
        "ai_type": "genai",
        "compute_kwh": 0.00009128801870078739,
        "eco_score": "E",
        "embodied_adp": 1.5590976377952757e-11,
        "embodied_gwp": 0.000003057986220472441,
        "embodied_primary_energy": 0.000045156791338582674,
        "embodied_water": 0.0000010441517716535433,
        "freq_class": "low",
        "model_size": "low",
        "network_kwh": 4.5874512e-8,
        "operational_adp": 1.953380828500828e-12,
        "operational_gwp": 0.00005446437978615134,
        "operational_primary_energy": 0.0011813829445083913,
        "operational_water": 0.000002670922174576178,
        "storage_kwh": 1.68910758e-8,
        "total_kwh": 0.00009135078428858739,
        "uc_type": "chat",
        "users_class": "low"
      },
      {
        "ai_type": "genai",
        "compute_kwh": 0.00009128801870078739,
        "eco_score": "E",
        "embodied_adp": 1.5590976377952757e-11,
        "embodied_gwp": 0.000003057986220472441,
        "embodied_primary_energy": 0.000045156791338582674,
        "embodied_water": 0.0000010441517716535433,
        "freq_class": "medium",
        "model_size": "low",
        "network_kwh": 4.5874512e-8,
        "operational_adp": 1.953380828500828e-12,
        "operational_gwp": 0.00005446437978615134,
        "operational_primary_energy": 0.0011813829445083913,
        "operational_water": 0.000002670922174576178,
        "storage_kwh": 1.68910758e-8,
        "total_kwh": 0.00009135078428858739,
        "uc_type": "chat",
        "users_class": "low"
      },
      {
        "ai_type": "genai",
        "compute_kwh": 0.00009128801870078739,
        "eco_score": "E",
        "embodied_adp": 1.5590976377952757e-11,
        "embodied_gwp": 0.000003057986220472441,
        "embodied_primary_energy": 0.000045156791338582674,
        "embodied_water": 0.0000010441517716535433,
        "freq_class": "high",
        "model_size": "low",
        "network_kwh": 4.5874512e-8,
        "operational_adp": 1.953380828500828e-12,
        "operational_gwp": 0.00005446437978615134,
        "operational_primary_energy": 0.0011813829445083913,
        "operational_water": 0.000002670922174576178,
        "storage_kwh": 1.68910758e-8,
        "total_kwh": 0.00009135078428858739,
        "uc_type": "chat",
        "users_class": "low"
      },
      {
        "ai_type": "genai",
        "compute_kwh": 0.00009128801870078739,
        "eco_score": "E",
        "embodied_adp": 1.5590976377952757e-11,
        "embodied_gwp": 0.000003057986220472441,
        "embodied_primary_energy": 0.000045156791338582674,
        "embodied_water": 0.0000010441517716535433,
        "freq_class": "very_high",
        "model_size": "low",
        "network_kwh": 4.5874512e-8,
        "operational_adp": 1.953380828500828e-12,
        "operational_gwp": 0.00005446437978615134,
        "operational_primary_energy": 0.0011813829445083913,
        "operational_water": 0.000002670922174576178,
        "storage_kwh": 1.68910758e-8,
        "total_kwh": 0.00009135078428858739,
        "uc_type": "chat",
        "users_class": "low"
      },
      {
        "ai_type": "traditional",
        "compute_kwh": 0.0000035999999999999994,
        "eco_score": "D",
        "embodied_adp": 2.24e-12,
        "embodied_gwp": 1.22e-7,
        "embodied_primary_energy": 0.00000181,
        "embodied_water": 4.17e-8,
        "freq_class": "medium",
        "model_size": "na",
        "network_kwh": 6.84e-8,
        "operational_adp": 7.898102007143478e-14,
        "operational_gwp": 0.0000022021575159871297,
        "operational_primary_energy": 0.000047766840285761724,
        "operational_water": 1.0799335941130433e-7,
        "storage_kwh": 2.5185e-8,
        "total_kwh": 0.0000036935849999999995,
        "uc_type": "nlp",
        "users_class": "very_high"
      },
      {
        "ai_type": "traditional",
        "compute_kwh": 0.0000035999999999999994,
        "eco_score": "D",
        "embodied_adp": 2.24e-12,
        "embodied_gwp": 1.22e-7,
        "embodied_primary_energy": 0.00000181,
        "embodied_water": 4.17e-8,
        "freq_class": "high",
        "model_size": "na",
        "network_kwh": 6.84e-8,
        "operational_adp": 7.898102007143478e-14,
        "operational_gwp": 0.0000022021575159871297,
        "operational_primary_energy": 0.000047766840285761724,
        "operational_water": 1.0799335941130433e-7,
        "storage_kwh": 2.5185e-8,
        "total_kwh": 0.0000036935849999999995,
        "uc_type": "nlp",
        "users_class": "very_high"
      },
      {
        "ai_type": "traditional",
        "compute_kwh": 0.0000035999999999999994,
        "eco_score": "D",
        "embodied_adp": 2.24e-12,
        "embodied_gwp": 1.22e-7,
        "embodied_primary_energy": 0.00000181,
        "embodied_water": 4.17e-8,
        "freq_class": "very_high",
        "model_size": "na",
        "network_kwh": 6.84e-8,
        "operational_adp": 7.898102007143478e-14,
        "operational_gwp": 0.0000022021575159871297,
        "operational_primary_energy": 0.000047766840285761724,
        "operational_water": 1.0799335941130433e-7,
        "storage_kwh": 2.5185e-8,
        "total_kwh": 0.0000036935849999999995,
        "uc_type": "nlp",
        "users_class": "very_high"
      }
    ]
  },
  "offset": {
    "achieved_ghg_index": 9.99545324002993,
    "energy_index": 17.249521044134095,
    "ghg_target_fraction": 0.9,
    "grid_factor": 0.55,
    "hardware_efficiency_factor": 182.69167179409243,
    "pue": 1.04,
    "scenario": "intermediate"
  },
  "project_agents65": {
    "baseline_total": {
      "adp": 0.6663688056540413,
      "final_energy": 3465519.4679092397,
      "gwp": 2182247.930864245,
      "primary_energy": 46531335.340296656,
      "water": 140955.85210373983
    },
    "genai_share": 0.607109687148187,
    "index": {
      "adp": 1398.9625960542937,
      "final_energy": 1437.602817376687,
      "gwp": 1110.9909615532351,
      "primary_energy": 1105.3048374206057,
      "water": 1246.8739148721809
    },
    "projected_total": {
      "adp": 9.322250342873769,
      "final_energy": 49820405.507400796,
      "gwp": 24244577.270584255,
      "primary_energy": 514313100.43270284,
      "water": 1757541.7513673422
    },
    "scenario": {
      "cagr": {
        "agents": 0.65,
        "computer_vision": 0.165,
        "genai_ex_agents": 0.4,
        "nlp": 0.26,
        "tabular": 0.205
      },
      "grid_reduction": 0.24,
      "hardware_efficiency_factor": 4.4,
      "horizon_years": 6,
      "label": "Intermediate scenario",
      "model_size_factor": 2,
      "name": "intermediate",
      "output_token_factor": 2,
      "pue_2030": 1.15,
      "quantization_factor": 1,
      "quantization_memory_factor": 1
    },
    "use_case_count": 559.06487971536
  },
  "project_high": {
    "baseline_total": {
      "adp": 0.6663688056540413,
      "final_energy": 3465519.4679092397,
      "gwp": 2182247.930864245,
      "primary_energy": 46531335.340296656,
      "water": 140955.85210373983
    },
    "genai_share": 0.5569872675756483,
    "index": {
      "adp": 2500.4376108881906,
      "final_energy": 2569.5071117244584,
      "gwp": 1985.7375935568891,
      "primary_energy": 1975.573871704635,
      "water": 2228.617019368636
    },
    "projected_total": {
      "adp": 16.66213624380008,
      "final_energy": 89046769.18612352,
      "gwp": 43333717.54778867,
      "primary_energy": 919260903.1381657,
      "water": 3141366.10978003
    },
    "scenario": {
      "cagr": {
        "agents": 0.55,
        "computer_vision": 0.2,
        "genai_ex_agents": 0.47,
        "nlp": 0.3,
        "tabular": 0.24
      },
      "grid_reduction": 0.24,
      "hardware_efficiency_factor": 4.4,
      "horizon_years": 6,
      "label": "High adoption without boundaries",
      "model_size_factor": 3,
      "name": "high-adoption",
      "output_token_factor": 3,
      "pue_2030": 1.15,
      "quantization_factor": 1,
      "quantization_memory_factor": 1
    },
    "use_case_count": 590.2541247494996
  },
  "project_intermediate": {
    "baseline_total": {
      "adp": 0.6663688056540413,
      "final_energy": 3465519.4679092397,
      "gwp": 2182247.930864245,
      "primary_energy": 46531335.340296656,
      "water": 140955.85210373983
    },
    "genai_share": 0.5171384526058943,
    "index": {
      "adp": 768.2252294871828,
      "final_energy": 789.4660614668159,
      "gwp": 610.1044071886955,
      "primary_energy": 606.9822406099064,
      "water": 684.719639427175
    },
    "projected_total": {
      "adp": 5.119213286466758,
      "final_energy": 27359100.05266883,
      "gwp": 13313990.801986877,
      "primary_energy": 282436941.83424187,
      "water": 965152.4022762293
    },
    "scenario": {
      "cagr": {
        "agents": 0.45,
        "computer_vision": 0.165,
        "genai_ex_agents": 0.4,
        "nlp": 0.26,
        "tabular": 0.205
      },
      "grid_reduction": 0.24,
      "hardware_efficiency_factor": 4.4,
      "horizon_years": 6,
      "label": "Intermediate scenario",
      "model_size_factor": 2,
      "name": "intermediate",
      "output_token_factor": 2,
      "pue_2030": 1.15,
      "quantization_factor": 1,
      "quantization_memory_factor": 1
    },
    "use_case_count": 454.8947346941106
  },
  "scenarios": {
    "order": [
      "limited-growth",
      "technological-breakthrough",
      "steady-ascent",
      "intermediate",
      "high-adoption"
    ],
    "scenarios": {
      "high-adoption": {
        "cagr": {
          "agents": 0.55,
          "computer_vision": 0.2,
          "genai_ex_agents": 0.47,
          "nlp": 0.3,
          "tabular": 0.24
        },
        "grid_reduction": 0.24,
        "hardware_efficiency_factor": 4.4,
        "horizon_years": 6,
        "label": "High adoption without boundaries",
        "model_size_factor": 3,
        "name": "high-adoption",
        "output_token_factor": 3,
        "pue_2030": 1.15,
        "quantization_factor": 1,
        "quantization_memory_factor": 1
      },
      "intermediate": {
        "cagr": {
          "agents": 0.45,
          "computer_vision": 0.165,
          "genai_ex_agents": 0.4,
          "nlp": 0.26,
          "tabular": 0.205
        },
        "grid_reduction": 0.24,
        "hardware_efficiency_factor": 4.4,
        "horizon_years": 6,
        "label": "Intermediate scenario",
        "model_size_factor": 2,
        "name": "intermediate",
        "output_token_factor": 2,
        "pue_2030": 1.15,
        "quantization_factor": 1,
        "quantization_memory_factor": 1
      },
      "limited-growth": {
        "cagr": {
          "agents": 0.35,
          "computer_vision": 0.13,
          "genai_ex_agents": 0.32,
          "nlp": 0.22,
          "tabular": 0.17
        },
        "grid_reduction": 0.45,
        "hardware_efficiency_factor": 21.12,
        "horizon_years": 6,
        "label": "Limited growth with efficiency breakthrough",
        "model_size_factor": 1,
        "name": "limited-growth",
        "output_token_factor": 1.13,
        "pue_2030": 1.1,
        "quantization_factor": 1.2,
        "quantization_memory_factor": 2
      },
      "steady-ascent": {
        "cagr": {
          "agents": 0.35,
          "computer_vision": 0.13,
          "genai_ex_agents": 0.32,
          "nlp": 0.22,
          "tabular": 0.17
        },
        "grid_reduction": 0.24,
        "hardware_efficiency_factor": 4.4,
        "horizon_years": 6,
        "label": "Steady ascent",
        "model_size_factor": 3,
        "name": "steady-ascent",
        "output_token_factor": 1.33,
        "pue_2030": 1.15,
        "quantization_factor": 1,
        "quantization_memory_factor": 1
      },
      "technological-breakthrough": {
        "cagr": {
          "agents": 0.55,
          "computer_vision": 0.2,
          "genai_ex_agents": 0.47,
          "nlp": 0.3,
          "tabular": 0.24
        },
        "grid_reduction": 0.45,
        "hardware_efficiency_factor": 21.12,
        "horizon_years": 6,
        "label": "Technological breakthrough",
        "model_size_factor": 3,
        "name": "technological-breakthrough",
        "output_token_factor": 3,
        "pue_2030": 1.1,
        "quantization_factor": 1.2,
        "quantization_memory_factor": 2
      }
    }
  },
  "score": {
    "beyond_scale": false,
    "energy_kwh": 3.46e-8,
    "grade": "B"
  },
  "sweep": {
    "parameter": "agents_cagr",
    "points": [
      {
        "index": {
          "adp": 450.7194813116864,
          "final_energy": 463.2016659938923,
          "gwp": 357.96402574890715,
          "primary_energy": 356.1325251502433,
          "water": 401.7378101014997
        },
        "value": 0.25
      },
      {
        "index": {
          "adp": 580.4441039882596,
          "final_energy": 596.5048450347047,
          "gwp": 460.9820530815163,
          "primary_energy": 458.62321980230917,
          "water": 517.3568539914043
        },
        "value": 0.35
      },
      {
        "index": {
          "adp": 768.2252294871828,
          "final_energy": 789.4660614668159,
          "gwp": 610.1044071886955,
          "primary_energy": 606.9822406099064,
          "water": 684.719639427175
        },
        "value": 0.45
      },
      {
        "index": {
          "adp": 1033.216053779447,
          "final_energy": 1061.7668673275007,
          "gwp": 820.5411879368817,
          "primary_energy": 816.3418293893645,
          "water": 920.8967437588282
        },
        "value": 0.55
      },
      {
        "index": {
          "adp": 1398.9625960542937,
          "final_energy": 1437.602817376687,
          "gwp": 1110.9909615532351,
          "primary_energy": 1105.3048374206057,
          "water": 1246.8739148721809
        },
        "value": 0.65
      }
    ],
    "poly_coefficients": [
      4031.465224609442,
      -1214.2543770901123,
      519.1219086548699
    ]
  }
};
