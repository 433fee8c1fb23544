/**
 * What-if panel: per-dimension weight sliders and level selectors that fire
 * /whatif requests; the overlay (score, delta, charts) re-renders from each
 * response. Nothing is computed locally and nothing persists until commit.
 */

import type { ModelDoc, ScoreReport, WhatIfOverrides, WhatIfResponse } from './api';
import { weightLabel } from './wizard';

export interface WhatIfState {
  assessmentId: string;
  subject: string;
  baseLevels: Record<string, number>;
  baseWeights: Record<string, number>;
  baseReport: ScoreReport;
  /** Slider positions; equal to base when untouched. */
  levels: Record<string, number>;
  weights: Record<string, number>;
  /** Latest accepted service response; null means the overlay IS the base. */
  overlay: WhatIfResponse | null;
}

export function initWhatIf(
  assessmentId: string,
  subject: string,
  levels: Record<string, number>,
  weights: Record<string, number>,
  baseReport: ScoreReport,
): WhatIfState {
  return {
    assessmentId,
    subject,
    baseLevels: { ...levels },
    baseWeights: { ...weights },
    baseReport,
    levels: { ...levels },
    weights: { ...weights },
    overlay: null,
  };
}

/** Only differences from the base are sent as overrides. */
export function currentOverrides(state: WhatIfState): WhatIfOverrides {
  const levels: Record<string, number> = {};
  const weights: Record<string, number> = {};
  for (const [key, value] of Object.entries(state.levels)) {
    if (state.baseLevels[key] !== value) levels[key] = value;
  }
  for (const [key, value] of Object.entries(state.weights)) {
    if (state.baseWeights[key] !== value) weights[key] = value;
  }
  return { levels, weight_scores: weights };
}

export function hasOverrides(state: WhatIfState): boolean {
  const o = currentOverrides(state);
  return Object.keys(o.levels).length > 0 || Object.keys(o.weight_scores).length > 0;
}

export function reset(state: WhatIfState): WhatIfState {
  return {
    ...state,
    levels: { ...state.baseLevels },
    weights: { ...state.baseWeights },
    overlay: null,
  };
}

export function setLevel(state: WhatIfState, key: string, level: number): WhatIfState {
  return { ...state, levels: { ...state.levels, [key]: level } };
}

export function setWeight(state: WhatIfState, key: string, weight: number): WhatIfState {
  return { ...state, weights: { ...state.weights, [key]: weight } };
}

export function applyResponse(state: WhatIfState, response: WhatIfResponse): WhatIfState {
  return { ...state, overlay: response };
}

/** The report the charts should draw: overlay when present, else base. */
export function effectiveReport(state: WhatIfState): ScoreReport {
  return state.overlay ? state.overlay.result : state.baseReport;
}

export function deltaText(state: WhatIfState): string {
  if (!state.overlay) return '';
  const d = state.overlay.delta_L;
  if (d.decimal === '0') return '±0.00';
  return d.display.startsWith('-') ? d.display : `+${d.display}`;
}

export function renderWhatIfPanel(state: WhatIfState, model: ModelDoc, stale = false): string {
  const { min, max } = model.weight_scale;
  const rows = model.dimensions
    .map((dim) => {
      const level = state.levels[dim.key];
      const weight = state.weights[dim.key];
      const levelOptions = dim.levels
        .map(
          (lv) =>
            `<option value="${lv.index}" ${lv.index === level ? 'selected' : ''}>` +
            `${lv.code} ${lv.name}</option>`,
        )
        .join('');
      return `
<div class="whatif-row" data-dimension="${dim.key}">
  <span class="dim">${dim.key}</span>
  <select name="wi-level-${dim.key}">${levelOptions}</select>
  <input type="range" name="wi-weight-${dim.key}" min="${min}" max="${max}" step="1"
         value="${weight}"/>
  <output>w=${weight} (${weightLabel(weight)})</output>
</div>`;
    })
    .join('\n');

  const overall = effectiveReport(state).overall.display;
  const delta = deltaText(state);
  const deltaHtml = delta ? ` <span class="delta">(${delta} vs base)</span>` : '';
  const staleHtml = stale ? '<span class="stale">updating…</span>' : '';
  return `
<section class="whatif">
  <h3>What-if exploration — ${state.subject}</h3>
  <p>Overlay L<sub>DT</sub> = <strong id="whatif-score">${overall}</strong>${deltaHtml} ${staleHtml}</p>
  ${rows}
  <div class="buttons">
    <button data-action="whatif-reset">Reset to base</button>
    <button data-action="whatif-commit" ${hasOverrides(state) ? '' : 'disabled'}>
      Commit as new assessment
    </button>
    <button data-action="close-whatif">Close</button>
  </div>
  <div id="whatif-charts"></div>
</section>`;
}
