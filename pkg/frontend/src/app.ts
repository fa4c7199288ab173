import { ApiClient, ApiError } from "./api.js";
import { renderAmplitudes } from "./amplitudePanel.js";
import { renderCircuit } from "./circuitPanel.js";
import type { ColorScheme, GroverParams, StatePayload, UiSessionState } from "./types.js";

export interface AppElements {
  circuit: HTMLElement;
  amplitudes: HTMLElement;
  forwardButton: HTMLButtonElement;
  backwardButton: HTMLButtonElement;
  restartButton: HTMLButtonElement;
  banner: HTMLElement;
  dialog: HTMLElement;
}

// Orchestrates one stepping session: holds the mirror of the latest
// service responses, keeps a single mutation in flight, and re-renders
// both panels after every change.
export class StepperApp {
  session: UiSessionState | null = null;
  scheme: ColorScheme = "red-yellow";
  private pending = false;

  constructor(
    private readonly api: ApiClient,
    private readonly el: AppElements,
  ) {
    this.el.forwardButton.addEventListener("click", () => void this.forward());
    this.el.backwardButton.addEventListener("click", () => void this.backward());
    this.el.restartButton.addEventListener("click", () => this.restartPressed());
    this.render();
  }

  async createGrover(params: GroverParams): Promise<void> {
    await this.guard(async () => {
      const created = await this.api.createGrover(params);
      this.session = {
        id: created.id,
        qubits: created.qubits,
        cursor: 0,
        stageCount: created.stage_count,
        stageLabels: created.stage_labels,
        amplitudes: created.state.amplitudes,
        grover: params,
      };
      await this.refreshProbabilities();
    });
  }

  async createProgram(program: string): Promise<void> {
    await this.guard(async () => {
      const created = await this.api.createProgram(program);
      this.session = {
        id: created.id,
        qubits: created.qubits,
        cursor: 0,
        stageCount: created.stage_count,
        stageLabels: created.stage_labels,
        amplitudes: created.state.amplitudes,
      };
    });
  }

  async forward(): Promise<void> {
    await this.stepCall("forward");
  }

  async backward(): Promise<void> {
    await this.stepCall("backward");
  }

  private async stepCall(direction: "forward" | "backward"): Promise<void> {
    if (!this.session) return;
    await this.guard(async () => {
      const moved = await this.api.step(this.session!.id, direction);
      this.applyCursorState(moved.cursor, moved.state);
      await this.refreshProbabilities();
    });
  }

  // Restart asks for a new target first when this is a Grover session.
  restartPressed(): void {
    if (!this.session) return;
    if (this.session.grover) {
      this.openTargetDialog();
      return;
    }
    void this.guard(async () => {
      const reset = await this.api.restart(this.session!.id);
      this.applyCursorState(reset.cursor, reset.state);
    });
  }

  async applyRestart(target?: number): Promise<void> {
    if (!this.session) return;
    await this.guard(async () => {
      const reset = await this.api.restart(this.session!.id, target);
      if (this.session!.grover && target !== undefined) {
        this.session!.grover = { ...this.session!.grover, target };
      }
      this.applyCursorState(reset.cursor, reset.state);
      await this.refreshProbabilities();
    });
  }

  setScheme(scheme: ColorScheme): void {
    this.scheme = scheme;
    this.render();
  }

  private applyCursorState(cursor: number, state: StatePayload): void {
    if (!this.session) return;
    this.session.cursor = cursor;
    this.session.amplitudes = state.amplitudes;
    this.session.qubits = state.qubits;
  }

  private async refreshProbabilities(): Promise<void> {
    if (!this.session) return;
    const body = await this.api.state(this.session.id);
    this.session.dataProbabilities = body.data_probabilities;
  }

  // Runs one mutation at a time; buttons stay disabled while a request
  // is pending. Boundary violations disable the offending button via
  // cursor state rather than surfacing an error.
  private async guard(action: () => Promise<void>): Promise<void> {
    if (this.pending) return;
    this.pending = true;
    this.render();
    try {
      await action();
      this.clearBanner();
    } catch (err) {
      this.handleError(err);
    } finally {
      this.pending = false;
      this.render();
    }
  }

  private handleError(err: unknown): void {
    if (err instanceof ApiError && err.status === 409) {
      return; // boundary; the disabled button already tells the story
    }
    if (err instanceof ApiError && err.status === 404) {
      this.session = null; // session evicted: back to the creation screen
      this.showBanner("session expired; create a new one", false);
      return;
    }
    const message = err instanceof Error ? err.message : String(err);
    this.showBanner(`request failed: ${message}`, true);
  }

  private showBanner(message: string, retry: boolean): void {
    this.el.banner.textContent = "";
    this.el.banner.classList.add("visible");
    const text = document.createElement("span");
    text.textContent = message;
    this.el.banner.appendChild(text);
    if (retry) {
      const button = document.createElement("button");
      button.className = "retry-button";
      button.textContent = "retry";
      button.addEventListener("click", () => {
        this.clearBanner();
        void this.refreshView();
      });
      this.el.banner.appendChild(button);
    }
  }

  private clearBanner(): void {
    this.el.banner.textContent = "";
    this.el.banner.classList.remove("visible");
  }

  private async refreshView(): Promise<void> {
    if (!this.session) return;
    await this.guard(async () => {
      const body = await this.api.state(this.session!.id);
      this.session!.cursor = body.cursor;
      this.session!.amplitudes = body.state.amplitudes;
      this.session!.dataProbabilities = body.data_probabilities;
    });
  }

  private openTargetDialog(): void {
    const max = this.session?.grover ? 2 ** this.session.grover.k - 1 : 0;
    this.el.dialog.textContent = "";
    this.el.dialog.classList.add("open");

    const prompt = document.createElement("label");
    prompt.textContent = `index of the desired item (0..${max}): `;
    const input = document.createElement("input");
    input.type = "number";
    input.min = "0";
    input.max = String(max);
    input.value = String(this.session?.grover?.target ?? 0);
    prompt.appendChild(input);

    const submit = document.createElement("button");
    submit.className = "dialog-submit";
    submit.textContent = "restart";
    submit.addEventListener("click", () => {
      this.closeDialog();
      void this.applyRestart(Number(input.value));
    });

    const cancel = document.createElement("button");
    cancel.className = "dialog-cancel";
    cancel.textContent = "cancel";
    cancel.addEventListener("click", () => this.closeDialog());

    this.el.dialog.append(prompt, submit, cancel);
  }

  private closeDialog(): void {
    this.el.dialog.textContent = "";
    this.el.dialog.classList.remove("open");
  }

  render(): void {
    renderCircuit(this.el.circuit, this.session);
    renderAmplitudes(this.el.amplitudes, this.session, this.scheme);
    const atStart = !this.session || this.session.cursor === 0;
    const atEnd = !this.session || this.session.cursor >= this.session.stageCount;
    this.el.forwardButton.disabled = this.pending || atEnd;
    this.el.backwardButton.disabled = this.pending || atStart;
    this.el.restartButton.disabled = this.pending || !this.session;
  }
}
