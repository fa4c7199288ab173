import type {
  CreateResponse,
  GroverParams,
  StateResponse,
  StepResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

// Thin typed client over the session endpoints. The fetch function is
// injectable so tests can intercept the transport.
export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, {
      headers: { "content-type": "application/json" },
      ...init,
    });
    if (!response.ok) {
      let message = `${response.status}`;
      try {
        const body = await response.json();
        if (body && typeof body.error === "string") message = body.error;
      } catch {
        // no JSON body; keep the status text
      }
      throw new ApiError(response.status, message);
    }
    if (response.status === 204) return undefined as T;
    return (await response.json()) as T;
  }

  createGrover(params: GroverParams): Promise<CreateResponse> {
    return this.request("/sessions", {
      method: "POST",
      body: JSON.stringify({ grover: params }),
    });
  }

  createProgram(program: string): Promise<CreateResponse> {
    return this.request("/sessions", {
      method: "POST",
      body: JSON.stringify({ program }),
    });
  }

  step(id: string, direction: "forward" | "backward"): Promise<StepResponse> {
    return this.request(`/sessions/${id}/step`, {
      method: "POST",
      body: JSON.stringify({ direction }),
    });
  }

  state(id: string): Promise<StateResponse> {
    return this.request(`/sessions/${id}/state`, { method: "GET" });
  }

  restart(id: string, target?: number): Promise<StepResponse> {
    const body = target === undefined ? {} : { grover: { target } };
    return this.request(`/sessions/${id}/restart`, {
      method: "POST",
      body: JSON.stringify(body),
    });
  }

  remove(id: string): Promise<void> {
    return this.request(`/sessions/${id}`, { method: "DELETE" });
  }
}
