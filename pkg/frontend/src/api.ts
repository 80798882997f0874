/**
 * Types and a thin client for the scenario service JSON endpoints.
 *
 * The fetch implementation is injectable so the client (and everything built
 * on it) can be exercised without a browser or a live server.
 */

export interface ScenarioRequest {
  court_id: string;
  ramp_years: number;
  target_strength?: 'sanctioned' | number;
  disposal_floor?: number;
  target_years?: number;
}

export interface TrajectoryRow {
  t: number;
  p: number;
  r: number;
  w: number;
}

export interface ScenarioResponse {
  court_id: string;
  inputs: ScenarioRequest;
  trajectory: TrajectoryRow[];
  verdict: 'clears_in' | 'never_clears';
  years_to_clear: number | null;
  final_rate: number;
  required_judges: number | null;
  binding: string | null;
}

export interface CourtInfo {
  court_id: string;
  name: string;
  sanctioned: number;
  working: number;
  p0: number;
  rate_daily: number;
  d_daily: number;
}

export interface HttpResponseLike {
  ok: boolean;
  status: number;
  json(): Promise<unknown>;
}

export type FetchLike = (
  url: string,
  init?: {
    method?: string;
    headers?: Record<string, string>;
    body?: string;
    signal?: AbortSignal;
  },
) => Promise<HttpResponseLike>;

export class ApiError extends Error {
  constructor(
    message: string,
    readonly status: number,
  ) {
    super(message);
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (...args) => globalThis.fetch(...args),
  ) {}

  async listCourts(): Promise<CourtInfo[]> {
    const resp = await this.fetchImpl(`${this.baseUrl}/courts`);
    return (await this.unwrap(resp)) as CourtInfo[];
  }

  async project(req: ScenarioRequest, signal?: AbortSignal): Promise<ScenarioResponse> {
    return this.post('/project', req, signal);
  }

  async solve(req: ScenarioRequest, signal?: AbortSignal): Promise<ScenarioResponse> {
    return this.post('/solve', req, signal);
  }

  /** Solver requests carry target_years; plain projections do not. */
  async evaluate(req: ScenarioRequest, signal?: AbortSignal): Promise<ScenarioResponse> {
    return req.target_years !== undefined ? this.solve(req, signal) : this.project(req, signal);
  }

  private async post(
    path: string,
    req: ScenarioRequest,
    signal?: AbortSignal,
  ): Promise<ScenarioResponse> {
    const resp = await this.fetchImpl(`${this.baseUrl}${path}`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(req),
      signal,
    });
    return (await this.unwrap(resp)) as ScenarioResponse;
  }

  private async unwrap(resp: HttpResponseLike): Promise<unknown> {
    if (!resp.ok) {
      let detail = `request failed with status ${resp.status}`;
      try {
        const body = (await resp.json()) as { detail?: unknown };
        if (body && body.detail) detail = JSON.stringify(body.detail);
      } catch {
        // body was not JSON; keep the generic message
      }
      throw new ApiError(detail, resp.status);
    }
    return resp.json();
  }
}
