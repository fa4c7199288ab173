import { SCHEME_COLORS, basisLabel } from "./types.js";
import type { ColorScheme, UiSessionState } from "./types.js";

const PANEL_HEIGHT = 180;

// One bar group per basis state in standard order, a real and an
// imaginary bar each. Bars grow from a central baseline; the vertical
// scale follows the largest component magnitude in the current state.
export function renderAmplitudes(
  container: HTMLElement,
  state: UiSessionState | null,
  scheme: ColorScheme = "red-yellow",
): void {
  container.textContent = "";
  container.classList.add("amplitude-panel");
  if (!state) {
    const placeholder = document.createElement("div");
    placeholder.className = "placeholder";
    placeholder.textContent = "no session loaded";
    container.appendChild(placeholder);
    return;
  }
  const colors = SCHEME_COLORS[scheme];
  let vmax = 0;
  for (const [re, im] of state.amplitudes) {
    vmax = Math.max(vmax, Math.abs(re), Math.abs(im));
  }
  const scale = vmax > 0 ? PANEL_HEIGHT / 2 / vmax : 0;

  const chart = document.createElement("div");
  chart.className = "bar-chart";
  chart.style.height = `${PANEL_HEIGHT}px`;

  state.amplitudes.forEach(([re, im], index) => {
    const group = document.createElement("div");
    group.className = "bar-group";
    group.setAttribute("data-basis", basisLabel(index, state.qubits));
    group.setAttribute("data-re", String(re));
    group.setAttribute("data-im", String(im));

    for (const [kind, value, color] of [
      ["real", re, colors.real],
      ["imag", im, colors.imag],
    ] as const) {
      const bar = document.createElement("div");
      bar.className = `bar ${kind}` + (value < 0 ? " negative" : "");
      bar.style.height = `${Math.abs(value) * scale}px`;
      bar.style.backgroundColor = color;
      bar.title = `${kind} ${value}`;
      group.appendChild(bar);
    }

    const label = document.createElement("div");
    label.className = "basis-label";
    label.textContent = basisLabel(index, state.qubits);
    group.appendChild(label);
    chart.appendChild(group);
  });

  container.appendChild(chart);

  if (state.dataProbabilities) {
    const readout = document.createElement("div");
    readout.className = "data-readout";
    const dataQubits = Math.log2(state.dataProbabilities.length);
    state.dataProbabilities.forEach((p, index) => {
      const item = document.createElement("span");
      item.className = "data-prob" + (p >= 0.995 ? " certain" : "");
      item.setAttribute("data-index", String(index));
      item.textContent = `${basisLabel(index, dataQubits)} ${p.toFixed(2)}`;
      readout.appendChild(item);
    });
    container.appendChild(readout);
  }
}
