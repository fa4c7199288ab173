import { ApiClient } from "./api.js";
import { StepperApp } from "./app.js";
import type { ColorScheme } from "./types.js";

function requireEl<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

const params = new URLSearchParams(window.location.search);
const baseUrl = params.get("service") ?? "http://127.0.0.1:8077";

const app = new StepperApp(new ApiClient(baseUrl), {
  circuit: requireEl("circuit-panel"),
  amplitudes: requireEl("amplitude-panel"),
  forwardButton: requireEl<HTMLButtonElement>("forward"),
  backwardButton: requireEl<HTMLButtonElement>("backward"),
  restartButton: requireEl<HTMLButtonElement>("restart"),
  banner: requireEl("banner"),
  dialog: requireEl("target-dialog"),
});

requireEl<HTMLButtonElement>("create-grover").addEventListener("click", () => {
  const k = Number(requireEl<HTMLInputElement>("grover-k").value);
  const target = Number(requireEl<HTMLInputElement>("grover-target").value);
  void app.createGrover({ k, target });
});

requireEl<HTMLButtonElement>("create-program").addEventListener("click", () => {
  const program = requireEl<HTMLTextAreaElement>("program-text").value;
  void app.createProgram(program);
});

requireEl<HTMLSelectElement>("color-scheme").addEventListener("change", (event) => {
  app.setScheme((event.target as HTMLSelectElement).value as ColorScheme);
});
