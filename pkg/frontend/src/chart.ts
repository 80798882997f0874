/**
 * Chart models and a DOM-free SVG renderer.
 *
 * A model is derived from one scenario response (or several, when pinned
 * comparisons overlay), then turned into an SVG string. Keeping both steps
 * pure makes the zero-crossing markers and badges unit-testable.
 */

import type { ScenarioResponse } from './api.js';

export interface ChartSeries {
  label: string;
  points: Array<{ t: number; p: number }>;
  neverClears: boolean;
  /** First whole year with the backlog at or below zero, if any. */
  zeroCrossYear: number | null;
}

export interface ChartModel {
  kind: 'empty' | 'single-point' | 'series';
  series: ChartSeries[];
  badges: string[];
  tMax: number;
  yMin: number;
  yMax: number;
}

export const NEVER_CLEARS_BADGE = 'never clears at this strength';

const PALETTE = ['#2563eb', '#d97706', '#059669', '#dc2626', '#7c3aed'];

export function emptyModel(): ChartModel {
  return { kind: 'empty', series: [], badges: [], tMax: 0, yMin: 0, yMax: 0 };
}

export function renderTrajectory(resp: ScenarioResponse, label = 'current'): ChartModel {
  if (resp.trajectory.length === 0) {
    return emptyModel();
  }
  const points = resp.trajectory.map((row) => ({ t: row.t, p: row.p }));
  const series: ChartSeries = {
    label,
    points,
    neverClears: resp.verdict === 'never_clears',
    zeroCrossYear: resp.years_to_clear,
  };
  const model: ChartModel = {
    kind: points.length === 1 ? 'single-point' : 'series',
    series: [series],
    badges: series.neverClears ? [NEVER_CLEARS_BADGE] : [],
    tMax: Math.max(...points.map((pt) => pt.t)),
    yMin: Math.min(0, ...points.map((pt) => pt.p)),
    yMax: Math.max(0, ...points.map((pt) => pt.p)),
  };
  return model;
}

/** Overlay several models (current scenario plus pinned ones) on one axis. */
export function overlayCharts(models: ChartModel[]): ChartModel {
  const real = models.filter((m) => m.kind !== 'empty');
  if (real.length === 0) {
    return emptyModel();
  }
  const series = real.flatMap((m) => m.series);
  const badges = [...new Set(real.flatMap((m) => m.badges))];
  const merged: ChartModel = {
    kind: real.every((m) => m.kind === 'single-point') ? 'single-point' : 'series',
    series,
    badges,
    tMax: Math.max(...real.map((m) => m.tMax)),
    yMin: Math.min(...real.map((m) => m.yMin)),
    yMax: Math.max(...real.map((m) => m.yMax)),
  };
  return merged;
}

function escapeXml(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

export function chartToSvg(model: ChartModel, width = 720, height = 400): string {
  const pad = { left: 64, right: 16, top: 24, bottom: 36 };
  const innerW = width - pad.left - pad.right;
  const innerH = height - pad.top - pad.bottom;
  const open = `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" class="trajectory-chart">`;

  if (model.kind === 'empty') {
    return (
      `${open}<text x="${width / 2}" y="${height / 2}" text-anchor="middle" ` +
      `class="empty-state">no trajectory to show</text></svg>`
    );
  }

  const tMax = Math.max(model.tMax, 1);
  const ySpan = Math.max(model.yMax - model.yMin, 1);
  const x = (t: number) => pad.left + (t / tMax) * innerW;
  const y = (p: number) => pad.top + ((model.yMax - p) / ySpan) * innerH;

  const parts: string[] = [open];
  // axes: left edge and the zero-pendency line
  parts.push(
    `<line x1="${pad.left}" y1="${pad.top}" x2="${pad.left}" y2="${pad.top + innerH}" class="axis"/>`,
  );
  const zeroY = y(0);
  parts.push(
    `<line x1="${pad.left}" y1="${zeroY}" x2="${pad.left + innerW}" y2="${zeroY}" class="axis zero-line"/>`,
  );
  parts.push(
    `<text x="${pad.left - 8}" y="${zeroY + 4}" text-anchor="end" class="tick">0</text>`,
    `<text x="${pad.left - 8}" y="${pad.top + 4}" text-anchor="end" class="tick">${Math.round(model.yMax).toLocaleString('en-US')}</text>`,
    `<text x="${pad.left + innerW}" y="${pad.top + innerH + 24}" text-anchor="end" class="tick">${tMax} yr</text>`,
  );

  model.series.forEach((s, i) => {
    const color = PALETTE[i % PALETTE.length];
    if (s.points.length === 1) {
      const pt = s.points[0]!;
      parts.push(
        `<circle cx="${x(pt.t)}" cy="${y(pt.p)}" r="5" fill="${color}" data-series="${escapeXml(s.label)}"/>`,
      );
    } else {
      const coords = s.points.map((pt) => `${x(pt.t).toFixed(1)},${y(pt.p).toFixed(1)}`).join(' ');
      parts.push(
        `<polyline points="${coords}" fill="none" stroke="${color}" stroke-width="2" ` +
          `data-series="${escapeXml(s.label)}"/>`,
      );
    }
    if (s.zeroCrossYear !== null) {
      const cx = x(s.zeroCrossYear);
      parts.push(
        `<circle cx="${cx}" cy="${zeroY}" r="6" class="zero-cross" fill="none" stroke="${color}" stroke-width="2"/>`,
        `<text x="${cx}" y="${zeroY - 10}" text-anchor="middle" class="zero-cross-label" fill="${color}">` +
          `clears year ${s.zeroCrossYear}</text>`,
      );
    }
  });

  model.badges.forEach((badge, i) => {
    parts.push(
      `<text x="${pad.left + innerW}" y="${pad.top + 16 + 18 * i}" text-anchor="end" ` +
        `class="badge">${escapeXml(badge)}</text>`,
    );
  });

  parts.push('</svg>');
  return parts.join('');
}
