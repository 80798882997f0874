/** DOM wiring for the scenario explorer; all logic lives in the modules. */

import { ApiClient, type CourtInfo, type ScenarioResponse } from './api.js';
import { chartToSvg, type ChartModel } from './chart.js';
import { DEBOUNCE_MS, ScenarioController } from './controller.js';
import { FLOOR_DEFAULT } from './form.js';

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function apiBase(): string {
  const override = new URLSearchParams(window.location.search).get('api');
  return override ?? 'http://127.0.0.1:8000';
}

function describeVerdict(resp: ScenarioResponse): string {
  const solver =
    resp.required_judges !== null
      ? ` — needs ${resp.required_judges} judges (${resp.binding ?? ''})`
      : '';
  if (resp.verdict === 'never_clears') {
    return `Never clears at this strength${solver}`;
  }
  return `Clears in ${resp.years_to_clear} years${solver}`;
}

async function start(): Promise<void> {
  const api = new ApiClient(apiBase());
  const chartHost = el<HTMLDivElement>('chart');
  const verdictHost = el<HTMLParagraphElement>('verdict');
  const messageHost = el<HTMLParagraphElement>('message');
  const pinsHost = el<HTMLUListElement>('pins');

  const controller = new ScenarioController(
    api,
    {
      onRender: (model: ChartModel, latest) => {
        chartHost.innerHTML = chartToSvg(model);
        verdictHost.textContent = latest ? describeVerdict(latest) : '';
        renderPins();
      },
      onValidation: (message) => {
        messageHost.textContent = message ?? '';
        messageHost.classList.toggle('error', message !== null);
      },
      onError: (message) => {
        messageHost.textContent = message;
        messageHost.classList.add('error');
      },
    },
    DEBOUNCE_MS,
  );

  const courtSelect = el<HTMLSelectElement>('court');
  const rampSlider = el<HTMLInputElement>('ramp-years');
  const rampLabel = el<HTMLSpanElement>('ramp-years-value');
  const floorSlider = el<HTMLInputElement>('floor');
  const floorLabel = el<HTMLSpanElement>('floor-value');
  const strengthInput = el<HTMLInputElement>('target-strength');
  const solveToggle = el<HTMLInputElement>('solve-enabled');
  const yearsChoice = el<HTMLSelectElement>('target-years');
  const customYears = el<HTMLInputElement>('custom-years');

  function renderPins(): void {
    pinsHost.innerHTML = '';
    controller.pinnedScenarios.forEach((pin, index) => {
      const item = document.createElement('li');
      const remove = document.createElement('button');
      remove.textContent = '×';
      remove.addEventListener('click', () => controller.unpin(index));
      item.textContent = pin.label + ' ';
      item.appendChild(remove);
      pinsHost.appendChild(item);
    });
  }

  rampSlider.addEventListener('input', () => {
    rampLabel.textContent = `${rampSlider.value} yr`;
    controller.setForm({ rampYears: Number(rampSlider.value) });
  });
  floorSlider.addEventListener('input', () => {
    floorLabel.textContent = Number(floorSlider.value).toFixed(2);
    controller.setForm({ floorValue: Number(floorSlider.value), floorTouched: true });
  });
  strengthInput.addEventListener('input', () => {
    controller.setForm({ targetStrength: strengthInput.value });
  });
  solveToggle.addEventListener('change', () => {
    customYears.disabled = !solveToggle.checked || yearsChoice.value !== 'custom';
    controller.setForm({ solveEnabled: solveToggle.checked });
  });
  yearsChoice.addEventListener('change', () => {
    customYears.disabled = yearsChoice.value !== 'custom';
    controller.setForm({
      targetYearsChoice: yearsChoice.value as '5' | '15' | 'custom',
    });
  });
  customYears.addEventListener('input', () => {
    controller.setForm({ customTargetYears: customYears.value });
  });
  courtSelect.addEventListener('change', () => {
    controller.setForm({ courtId: courtSelect.value });
    void controller.sendNow();
  });

  el<HTMLButtonElement>('pin').addEventListener('click', () => {
    const court = courtSelect.selectedOptions[0]?.textContent ?? controller.form.courtId;
    const label = `${court} / ramp ${controller.form.rampYears} yr`;
    if (!controller.pin(label)) {
      messageHost.textContent = 'Cannot pin: nothing to pin yet or 4 already pinned.';
    }
  });

  // one-click presets for the headline scenarios
  el<HTMLButtonElement>('preset-10y').addEventListener('click', () => {
    rampSlider.value = '10';
    rampLabel.textContent = '10 yr';
    controller.setForm({ rampYears: 10 });
  });
  el<HTMLButtonElement>('preset-20y').addEventListener('click', () => {
    rampSlider.value = '20';
    rampLabel.textContent = '20 yr';
    controller.setForm({ rampYears: 20 });
  });
  el<HTMLButtonElement>('preset-floor').addEventListener('click', () => {
    floorSlider.value = String(FLOOR_DEFAULT);
    floorLabel.textContent = FLOOR_DEFAULT.toFixed(2);
    controller.setForm({ floorValue: FLOOR_DEFAULT, floorTouched: true });
  });

  let courts: CourtInfo[] = [];
  try {
    courts = await api.listCourts();
  } catch (err) {
    messageHost.textContent =
      `Cannot reach the scenario service at ${apiBase()} — start it with ` +
      `"pendency serve --data-dir data". (${String(err)})`;
    messageHost.classList.add('error');
    return;
  }
  for (const court of courts) {
    const option = document.createElement('option');
    option.value = court.court_id;
    option.textContent = `${court.name} (${court.court_id})`;
    courtSelect.appendChild(option);
  }
  const first = courts[0];
  if (first) {
    courtSelect.value = first.court_id;
    controller.setForm({ courtId: first.court_id });
    await controller.sendNow();
  }
}

document.addEventListener('DOMContentLoaded', () => {
  void start();
});
