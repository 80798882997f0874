/**
 * Scenario form state and its pure mapping onto a service request.
 *
 * The mapping is total on valid forms and never produces a request the
 * server would reject: anything invalid is returned as a blocking message
 * instead, so no network call happens.
 */

import type { ScenarioRequest } from './api.js';

/** National-average daily disposals per judge; the floor slider's marker. */
export const FLOOR_DEFAULT = 5.93;
export const RAMP_DEFAULT = 10;
export const RAMP_MAX = 30;
export const FLOOR_MAX = 15;
export const MIN_TARGET_YEARS = 2;

export interface ScenarioForm {
  courtId: string | null;
  rampYears: number; // slider, 0..RAMP_MAX
  floorValue: number; // slider, 0..FLOOR_MAX
  floorTouched: boolean; // floor is only sent once the slider has been moved
  targetStrength: string; // free text; '' means the sanctioned strength
  solveEnabled: boolean;
  targetYearsChoice: '5' | '15' | 'custom';
  customTargetYears: string;
}

export function defaultForm(courtId: string | null = null): ScenarioForm {
  return {
    courtId,
    rampYears: RAMP_DEFAULT,
    floorValue: FLOOR_DEFAULT,
    floorTouched: false,
    targetStrength: '',
    solveEnabled: false,
    targetYearsChoice: '5',
    customTargetYears: '',
  };
}

export type FormResult =
  | { ok: true; request: ScenarioRequest }
  | { ok: false; message: string };

function blocked(message: string): FormResult {
  return { ok: false, message };
}

export function formToRequest(form: ScenarioForm): FormResult {
  if (!form.courtId) {
    return blocked('Pick a court first.');
  }
  if (!Number.isInteger(form.rampYears) || form.rampYears < 0 || form.rampYears > RAMP_MAX) {
    return blocked(`Ramp must be a whole number of years between 0 and ${RAMP_MAX}.`);
  }

  const request: ScenarioRequest = {
    court_id: form.courtId,
    ramp_years: form.rampYears,
    target_strength: 'sanctioned',
  };

  const strengthText = form.targetStrength.trim();
  if (strengthText !== '') {
    const strength = Number(strengthText);
    if (!Number.isFinite(strength) || strength <= 0) {
      return blocked('Target strength must be a positive number of judges.');
    }
    request.target_strength = strength;
  }

  if (form.floorTouched) {
    if (form.floorValue < 0 || form.floorValue > FLOOR_MAX) {
      return blocked(`Disposal floor must be between 0 and ${FLOOR_MAX} cases/judge/day.`);
    }
    request.disposal_floor = form.floorValue;
  }

  if (form.solveEnabled) {
    let years: number;
    if (form.targetYearsChoice === 'custom') {
      const parsed = Number(form.customTargetYears.trim());
      if (!Number.isInteger(parsed)) {
        return blocked('Custom target years must be a whole number.');
      }
      years = parsed;
    } else {
      years = Number(form.targetYearsChoice);
    }
    if (years < MIN_TARGET_YEARS) {
      return blocked(
        `Target years must be at least ${MIN_TARGET_YEARS}: the first year's ` +
          'backlog growth is already locked in.',
      );
    }
    request.target_years = years;
  }

  return { ok: true, request };
}
