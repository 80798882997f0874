/**
 * Scenario state machine: form edits -> (debounced) one request -> render.
 *
 * Guarantees the UI relies on:
 *   - a burst of slider changes produces exactly one request;
 *   - the chart always reflects the newest response (stale responses are
 *     dropped and in-flight requests aborted);
 *   - invalid forms never reach the network, they surface a message instead.
 */

import { ApiClient, ApiError, type ScenarioResponse } from './api.js';
import { debounce } from './debounce.js';
import { defaultForm, formToRequest, type ScenarioForm } from './form.js';
import {
  ChartModel,
  emptyModel,
  overlayCharts,
  renderTrajectory,
} from './chart.js';

export const MAX_PINNED = 4;
export const DEBOUNCE_MS = 250;

function deepFreeze<T>(value: T): T {
  if (value !== null && typeof value === 'object') {
    for (const key of Object.getOwnPropertyNames(value)) {
      deepFreeze((value as Record<string, unknown>)[key]);
    }
    Object.freeze(value);
  }
  return value;
}

export interface PinnedScenario {
  label: string;
  response: ScenarioResponse;
}

export interface ControllerCallbacks {
  onRender: (model: ChartModel, latest: ScenarioResponse | null) => void;
  onValidation?: (message: string | null) => void;
  onError?: (message: string) => void;
}

export class ScenarioController {
  form: ScenarioForm = defaultForm();

  private pinned: PinnedScenario[] = [];
  private latest: ScenarioResponse | null = null;
  private seq = 0;
  private inflight: AbortController | null = null;
  private readonly scheduleSend: { (): void; cancel(): void };

  constructor(
    private readonly api: ApiClient,
    private readonly callbacks: ControllerCallbacks,
    debounceMs: number = DEBOUNCE_MS,
  ) {
    this.scheduleSend = debounce(() => void this.sendNow(), debounceMs);
  }

  get pinnedScenarios(): readonly PinnedScenario[] {
    return this.pinned;
  }

  get latestResponse(): ScenarioResponse | null {
    return this.latest;
  }

  /** Apply a form edit; a valid form schedules exactly one debounced send. */
  setForm(patch: Partial<ScenarioForm>): void {
    this.form = { ...this.form, ...patch };
    const result = formToRequest(this.form);
    if (!result.ok) {
      this.scheduleSend.cancel();
      this.callbacks.onValidation?.(result.message);
      return;
    }
    this.callbacks.onValidation?.(null);
    this.scheduleSend();
  }

  /** Send immediately (court switches, presets); still latest-wins. */
  async sendNow(): Promise<void> {
    const result = formToRequest(this.form);
    if (!result.ok) {
      this.callbacks.onValidation?.(result.message);
      return;
    }
    this.scheduleSend.cancel();
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;
    const seq = ++this.seq;
    try {
      const response = await this.api.evaluate(result.request, controller.signal);
      if (seq !== this.seq) return; // a newer request superseded this one
      this.latest = response;
      this.render();
    } catch (err) {
      if (seq !== this.seq || controller.signal.aborted) return;
      const message =
        err instanceof ApiError ? err.message : `request failed: ${String(err)}`;
      this.callbacks.onError?.(message);
    } finally {
      if (this.inflight === controller) this.inflight = null;
    }
  }

  /** Pin the latest response for comparison; at most MAX_PINNED at a time. */
  pin(label: string): boolean {
    if (this.latest === null || this.pinned.length >= MAX_PINNED) {
      return false;
    }
    const snapshot = deepFreeze(
      JSON.parse(JSON.stringify(this.latest)) as ScenarioResponse,
    );
    this.pinned = [...this.pinned, { label, response: snapshot }];
    this.render();
    return true;
  }

  unpin(index: number): void {
    this.pinned = this.pinned.filter((_, i) => i !== index);
    this.render();
  }

  chartModel(): ChartModel {
    const models = this.pinned.map((p) => renderTrajectory(p.response, p.label));
    if (this.latest !== null) {
      models.unshift(renderTrajectory(this.latest, 'current'));
    }
    return models.length ? overlayCharts(models) : emptyModel();
  }

  private render(): void {
    this.callbacks.onRender(this.chartModel(), this.latest);
  }
}
