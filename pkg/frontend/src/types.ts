// Wire types mirroring the service JSON schemas. The UI computes no
// physics: every displayed number is copied from the latest response.

export type Amplitude = [number, number]; // [re, im]

export interface StatePayload {
  qubits: number;
  amplitudes: Amplitude[];
}

export interface CreateResponse {
  id: string;
  qubits: number;
  stage_count: number;
  stage_labels: string[];
  state: StatePayload;
}

export interface StepResponse {
  cursor: number;
  state: StatePayload;
}

export interface StateResponse {
  cursor: number;
  stage_count: number;
  state: StatePayload;
  probabilities: number[];
  data_probabilities?: number[];
}

export interface GroverParams {
  k: number;
  target: number;
  iterations?: number;
}

// The single source of truth for rendering, assembled from responses.
export interface UiSessionState {
  id: string;
  qubits: number;
  cursor: number;
  stageCount: number;
  stageLabels: string[];
  amplitudes: Amplitude[];
  dataProbabilities?: number[];
  grover?: GroverParams;
}

export type ColorScheme = "red-yellow" | "blue-red";

export const SCHEME_COLORS: Record<ColorScheme, { real: string; imag: string }> = {
  // default per the package's diagram conventions
  "red-yellow": { real: "red", imag: "gold" },
  // the alternative splitting: real blue, imaginary red
  "blue-red": { real: "royalblue", imag: "red" },
};

export function basisLabel(index: number, qubits: number): string {
  return "|" + index.toString(2).padStart(qubits, "0") + "⟩";
}
