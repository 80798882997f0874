import { describe, expect, it } from 'vitest';

import type { ScenarioResponse } from '../src/api.js';
import {
  NEVER_CLEARS_BADGE,
  chartToSvg,
  overlayCharts,
  renderTrajectory,
} from '../src/chart.js';

// Library-verified scenario: 1000 pending, +100/yr, 50 disposals/judge/yr,
// bench 10 -> 20 over 5 years; the backlog crosses zero in year 7.
const CLEARS_IN_7: ScenarioResponse = {
  court_id: 'WX',
  inputs: { court_id: 'WX', ramp_years: 5 },
  trajectory: [
    { t: 0, p: 1000, r: 100, w: 10 },
    { t: 1, p: 1100, r: 0, w: 12 },
    { t: 2, p: 1100, r: -100, w: 14 },
    { t: 3, p: 1000, r: -200, w: 16 },
    { t: 4, p: 800, r: -300, w: 18 },
    { t: 5, p: 500, r: -400, w: 20 },
    { t: 6, p: 100, r: -400, w: 20 },
    { t: 7, p: -300, r: -400, w: 20 },
  ],
  verdict: 'clears_in',
  years_to_clear: 7,
  final_rate: -400,
  required_judges: null,
  binding: null,
};

const NEVER_CLEARS: ScenarioResponse = {
  ...CLEARS_IN_7,
  trajectory: [
    { t: 0, p: 1000, r: 100, w: 10 },
    { t: 1, p: 1100, r: 90, w: 11 },
    { t: 2, p: 1190, r: 80, w: 12 },
  ],
  verdict: 'never_clears',
  years_to_clear: null,
  final_rate: 50,
};

describe('renderTrajectory', () => {
  it('marks the zero-crossing year of the worked scenario', () => {
    const model = renderTrajectory(CLEARS_IN_7);
    expect(model.kind).toBe('series');
    expect(model.series).toHaveLength(1);
    expect(model.series[0]!.zeroCrossYear).toBe(7);
    expect(model.series[0]!.points).toHaveLength(8);
    expect(model.tMax).toBe(7);
    expect(model.yMin).toBe(-300);
    expect(model.yMax).toBe(1100);
    expect(model.badges).toEqual([]);
  });

  it('badges a never-clearing scenario', () => {
    const model = renderTrajectory(NEVER_CLEARS);
    expect(model.badges).toEqual([NEVER_CLEARS_BADGE]);
    expect(model.series[0]!.zeroCrossYear).toBeNull();
  });

  it('renders an already-clear backlog as a single point at the origin year', () => {
    const resp: ScenarioResponse = {
      ...CLEARS_IN_7,
      trajectory: [{ t: 0, p: 0, r: -5, w: 9 }],
      years_to_clear: 0,
    };
    const model = renderTrajectory(resp);
    expect(model.kind).toBe('single-point');
    expect(model.series[0]!.points).toEqual([{ t: 0, p: 0 }]);
  });

  it('maps an empty trajectory to the empty state', () => {
    const model = renderTrajectory({ ...CLEARS_IN_7, trajectory: [] });
    expect(model.kind).toBe('empty');
  });
});

describe('overlayCharts', () => {
  it('overlays pinned scenarios on one axis', () => {
    const merged = overlayCharts([
      renderTrajectory(CLEARS_IN_7, 'current'),
      renderTrajectory(NEVER_CLEARS, 'pinned #1'),
    ]);
    expect(merged.series.map((s) => s.label)).toEqual(['current', 'pinned #1']);
    expect(merged.tMax).toBe(7);
    expect(merged.yMax).toBe(1190);
    expect(merged.badges).toEqual([NEVER_CLEARS_BADGE]);
  });

  it('collapses to the empty state when nothing is drawable', () => {
    expect(overlayCharts([]).kind).toBe('empty');
    expect(
      overlayCharts([renderTrajectory({ ...CLEARS_IN_7, trajectory: [] })]).kind,
    ).toBe('empty');
  });
});

describe('chartToSvg', () => {
  it('draws the zero-crossing marker and label', () => {
    const svg = chartToSvg(renderTrajectory(CLEARS_IN_7));
    expect(svg).toContain('class="zero-cross"');
    expect(svg).toContain('clears year 7');
    expect(svg).toContain('<polyline');
  });

  it('draws the never-clears badge', () => {
    const svg = chartToSvg(renderTrajectory(NEVER_CLEARS));
    expect(svg).toContain(NEVER_CLEARS_BADGE);
    expect(svg).not.toContain('zero-cross');
  });

  it('renders an empty-state panel for an empty model', () => {
    const svg = chartToSvg(renderTrajectory({ ...CLEARS_IN_7, trajectory: [] }));
    expect(svg).toContain('no trajectory to show');
  });

  it('renders a lone point as a circle', () => {
    const svg = chartToSvg(
      renderTrajectory({
        ...CLEARS_IN_7,
        trajectory: [{ t: 0, p: 0, r: 0, w: 3 }],
        years_to_clear: 0,
      }),
    );
    expect(svg).toContain('<circle');
  });
});
