import type { UiSessionState } from "./types.js";

// Glyphs for the stage strip: H stays H, the controlled phase flip is
// drawn as the circle-plus, everything else renders its text label.
function displayLabel(label: string): string {
  return label === "CPHASE" ? "⊕" : label;
}

// Horizontal stage strip with a progress indicator sitting after the
// last executed stage, plus a trailing measurement cell.
export function renderCircuit(container: HTMLElement, state: UiSessionState | null): void {
  container.textContent = "";
  container.classList.add("circuit-panel");
  if (!state) {
    const placeholder = document.createElement("div");
    placeholder.className = "placeholder";
    placeholder.textContent = "no session loaded";
    container.appendChild(placeholder);
    return;
  }
  const strip = document.createElement("div");
  strip.className = "stage-strip";

  const indicator = document.createElement("div");
  indicator.className = "progress-indicator";
  indicator.setAttribute("data-cursor", String(state.cursor));

  for (let i = 0; i < state.stageLabels.length; i++) {
    if (i === state.cursor) strip.appendChild(indicator);
    const cell = document.createElement("div");
    cell.className = "stage-cell" + (i < state.cursor ? " done" : "");
    cell.setAttribute("data-stage", String(i + 1));
    cell.setAttribute("data-label", state.stageLabels[i]);
    cell.textContent = displayLabel(state.stageLabels[i]);
    cell.title = `stage ${i + 1}: ${state.stageLabels[i]}`;
    strip.appendChild(cell);
  }
  if (state.cursor === state.stageLabels.length) strip.appendChild(indicator);

  const measure = document.createElement("div");
  measure.className = "stage-cell measure-cell";
  measure.textContent = "M";
  measure.title = "measure";
  strip.appendChild(measure);

  container.appendChild(strip);
}
