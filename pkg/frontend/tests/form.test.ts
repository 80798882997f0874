import { describe, expect, it } from 'vitest';

import { FLOOR_DEFAULT, defaultForm, formToRequest } from '../src/form.js';

describe('formToRequest', () => {
  it('maps the default form to the default request', () => {
    const result = formToRequest(defaultForm('PH'));
    expect(result).toEqual({
      ok: true,
      request: { court_id: 'PH', ramp_years: 10, target_strength: 'sanctioned' },
    });
  });

  it('blocks when no court is selected', () => {
    const result = formToRequest(defaultForm());
    expect(result.ok).toBe(false);
    if (!result.ok) expect(result.message).toMatch(/court/i);
  });

  it('includes the floor only once the slider has been moved', () => {
    const untouched = formToRequest(defaultForm('PH'));
    expect(untouched.ok && untouched.request.disposal_floor).toBeUndefined();

    const touched = formToRequest({
      ...defaultForm('PH'),
      floorValue: FLOOR_DEFAULT,
      floorTouched: true,
    });
    expect(touched.ok && touched.request.disposal_floor).toBe(5.93);
  });

  it('passes numeric target strength through', () => {
    const result = formToRequest({ ...defaultForm('PH'), targetStrength: ' 120 ' });
    expect(result.ok && result.request.target_strength).toBe(120);
  });

  it('blocks non-numeric target strength', () => {
    const result = formToRequest({ ...defaultForm('PH'), targetStrength: 'lots' });
    expect(result.ok).toBe(false);
  });

  it('maps the 5 and 15 year solver presets', () => {
    for (const choice of ['5', '15'] as const) {
      const result = formToRequest({
        ...defaultForm('PH'),
        solveEnabled: true,
        targetYearsChoice: choice,
      });
      expect(result.ok && result.request.target_years).toBe(Number(choice));
    }
  });

  it('blocks a custom one-year deadline instead of sending it', () => {
    const result = formToRequest({
      ...defaultForm('PH'),
      solveEnabled: true,
      targetYearsChoice: 'custom',
      customTargetYears: '1',
    });
    expect(result.ok).toBe(false);
    if (!result.ok) expect(result.message).toMatch(/at least 2/);
  });

  it('blocks a non-integer custom deadline', () => {
    const result = formToRequest({
      ...defaultForm('PH'),
      solveEnabled: true,
      targetYearsChoice: 'custom',
      customTargetYears: 'soon',
    });
    expect(result.ok).toBe(false);
  });

  it('accepts a valid custom deadline', () => {
    const result = formToRequest({
      ...defaultForm('PH'),
      solveEnabled: true,
      targetYearsChoice: 'custom',
      customTargetYears: '8',
    });
    expect(result.ok && result.request.target_years).toBe(8);
  });

  it('omits target_years entirely when solving is off', () => {
    const result = formToRequest({ ...defaultForm('PH'), targetYearsChoice: '15' });
    expect(result.ok && 'target_years' in result.request).toBe(false);
  });

  it('blocks out-of-range ramp years', () => {
    expect(formToRequest({ ...defaultForm('PH'), rampYears: 31 }).ok).toBe(false);
    expect(formToRequest({ ...defaultForm('PH'), rampYears: -1 }).ok).toBe(false);
    expect(formToRequest({ ...defaultForm('PH'), rampYears: 2.5 }).ok).toBe(false);
  });

  it('is pure: the same form maps to the same request', () => {
    const form = { ...defaultForm('PH'), rampYears: 20 };
    expect(formToRequest(form)).toEqual(formToRequest(form));
  });
});
