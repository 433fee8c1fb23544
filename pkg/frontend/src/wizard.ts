/**
 * Assessment wizard: gate questions -> level picks -> weight scores ->
 * stored report. Pure state transitions and HTML rendering; the DOM layer
 * only dispatches events and swaps innerHTML.
 *
 * Forward navigation out of the gate step is impossible unless the service
 * returned a passing verdict for the current answers.
 */

import type { GateVerdict, ModelDoc, ScoreReport } from './api';
import { TAXONOMY_NAMES } from './api';
import type { Draft } from './state';

export type WizardStep = 'subject' | 'gate' | 'levels' | 'weights' | 'report';

export const STEP_ORDER: WizardStep[] = ['subject', 'gate', 'levels', 'weights', 'report'];

export interface WizardState {
  step: WizardStep;
  draft: Draft;
  verdict: GateVerdict | null; // verdict for the draft's current answers
  report: ScoreReport | null;
  assessmentId: string | null;
}

export const WEIGHT_LABELS: Record<number, string> = {
  1: 'Low',
  2: 'Medium-Low',
  3: 'Medium',
  4: 'Medium-High',
  5: 'High',
};

export function weightLabel(score: number): string {
  return WEIGHT_LABELS[score] ?? String(score);
}

export function canAdvance(state: WizardState, model: ModelDoc): boolean {
  switch (state.step) {
    case 'subject':
      return state.draft.subjectName.trim().length > 0;
    case 'gate':
      // Blocked until the service has judged the current answers as passing.
      return state.verdict !== null && state.verdict.passed;
    case 'levels':
      return model.dimensions.every(
        (d) => typeof state.draft.levels[d.key] === 'number',
      );
    case 'weights':
      return model.dimensions.every(
        (d) => typeof state.draft.weights[d.key] === 'number',
      );
    case 'report':
      return false;
  }
}

export function advance(state: WizardState, model: ModelDoc): WizardState {
  if (!canAdvance(state, model)) return state;
  const i = STEP_ORDER.indexOf(state.step);
  return { ...state, step: STEP_ORDER[i + 1] };
}

export function retreat(state: WizardState): WizardState {
  const i = STEP_ORDER.indexOf(state.step);
  if (i === 0 || state.step === 'report') return state;
  return { ...state, step: STEP_ORDER[i - 1] };
}

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

function progressBar(step: WizardStep): string {
  const items = STEP_ORDER.map((s) => {
    const cls = s === step ? 'step active' : 'step';
    return `<span class="${cls}">${s}</span>`;
  });
  return `<nav class="progress">${items.join(' › ')}</nav>`;
}

export function renderSubjectScreen(state: WizardState): string {
  const d = state.draft;
  return `
${progressBar('subject')}
<h2>Subject</h2>
<label>Name
  <input id="subject-name" type="text" value="${escapeHtml(d.subjectName)}"
         placeholder="e.g. Pilot production line"/>
</label>
<label>Description
  <input id="subject-desc" type="text" value="${escapeHtml(d.description)}"/>
</label>
<div class="buttons"><button data-action="next" ${d.subjectName.trim() ? '' : 'disabled'}>Next</button></div>`;
}

export function renderGateScreen(state: WizardState, model: ModelDoc): string {
  const rows = model.gate_items
    .map((item) => {
      const answer = state.draft.answers[item.id];
      const yes = answer === true ? 'checked' : '';
      const no = answer === false ? 'checked' : '';
      return `
<fieldset class="gate-item" data-item="${item.id}">
  <legend>[${item.condition}] ${escapeHtml(item.prompt)}</legend>
  <label><input type="radio" name="${item.id}" value="yes" ${yes}/> yes</label>
  <label><input type="radio" name="${item.id}" value="no" ${no}/> no</label>
</fieldset>`;
    })
    .join('\n');

  const allAnswered = model.gate_items.every(
    (item) => typeof state.draft.answers[item.id] === 'boolean',
  );
  const verdict = state.verdict;
  let banner = '';
  if (verdict && !verdict.passed) {
    const failed = verdict.failed_items
      .map((id) => `<li>${escapeHtml(id)}</li>`)
      .join('');
    banner = `
<div class="banner refusal">
  <strong>Blocked: ${TAXONOMY_NAMES[verdict.taxonomy]}</strong>
  <p>The subject does not satisfy the fundamental conditions. Failed items:</p>
  <ul>${failed}</ul>
</div>`;
  } else if (verdict && verdict.passed) {
    banner = `<div class="banner pass"><strong>${TAXONOMY_NAMES[verdict.taxonomy]}</strong>:
 both fundamental conditions hold.</div>`;
  }

  const nextDisabled = verdict !== null && verdict.passed ? '' : 'disabled';
  return `
${progressBar('gate')}
<h2>Fundamental conditions</h2>
${rows}
${banner}
<div class="buttons">
  <button data-action="back">Back</button>
  <button data-action="check-gate" ${allAnswered ? '' : 'disabled'}>Check conditions</button>
  <button data-action="next" ${nextDisabled}>Next</button>
</div>`;
}

export function renderLevelsScreen(state: WizardState, model: ModelDoc): string {
  const blocks = model.dimensions
    .map((dim) => {
      const options = dim.levels
        .map((lv) => {
          const checked = state.draft.levels[dim.key] === lv.index ? 'checked' : '';
          return `
<label class="level">
  <input type="radio" name="level-${dim.key}" value="${lv.index}" ${checked}/>
  <strong>${lv.code}</strong> ${escapeHtml(lv.name)}
  <small>${escapeHtml(lv.description)}</small>
</label>`;
        })
        .join('\n');
      return `<fieldset data-dimension="${dim.key}">
<legend>${escapeHtml(dim.name)} (${dim.key})</legend>${options}</fieldset>`;
    })
    .join('\n');
  return `
${progressBar('levels')}
<h2>Maturity levels</h2>
${blocks}
<div class="buttons">
  <button data-action="back">Back</button>
  <button data-action="next" ${canAdvance(state, model) ? '' : 'disabled'}>Next</button>
</div>`;
}

export function renderWeightsScreen(state: WizardState, model: ModelDoc): string {
  const { min, max } = model.weight_scale;
  const blocks = model.dimensions
    .map((dim) => {
      const value = state.draft.weights[dim.key] ?? min;
      return `
<div class="weight-row" data-dimension="${dim.key}">
  <label>${escapeHtml(dim.name)} (${dim.key})
    <input type="range" name="weight-${dim.key}" min="${min}" max="${max}"
           step="1" value="${value}"/>
  </label>
  <output>${value} — ${weightLabel(value)}</output>
</div>`;
    })
    .join('\n');
  return `
${progressBar('weights')}
<h2>Importance weights</h2>
<p class="hint">${min} = ${weightLabel(min)} … ${max} = ${weightLabel(max)}</p>
${blocks}
<div class="buttons">
  <button data-action="back">Back</button>
  <button data-action="finish" ${canAdvance(state, model) ? '' : 'disabled'}>
    Save and score
  </button>
</div>`;
}

/**
 * Render the stored score report. Every number is the service's string:
 * `display` for the headline values, `decimal` where precision matters.
 */
export function renderReportScreen(state: WizardState): string {
  const report = state.report;
  if (!report) return `${progressBar('report')}<p>No report yet.</p>`;
  const rows = report.dimensions
    .map((d) => {
      const weight =
        typeof d.weight_score === 'number' ? String(d.weight_score) : d.weight_score.display;
      return `<tr>
  <td>${d.key}</td><td>${d.level}</td>
  <td>${d.maturity.display}</td>
  <td>${weight}</td>
  <td>${d.normalized_weight.display}</td>
</tr>`;
    })
    .join('\n');
  const cap = report.cap_applied
    ? '<p class="hint">Weight cap applied: one dimension was pinned at 0.50.</p>'
    : '';
  return `
${progressBar('report')}
<h2>Maturity score</h2>
<p class="overall">L<sub>DT</sub> = <strong id="overall-score">${report.overall.display}</strong>
 <small>(exact ${report.overall.rational})</small></p>
${cap}
<table class="score">
  <thead><tr><th>dimension</th><th>level</th><th>maturity</th>
  <th>weight score</th><th>normalized weight</th></tr></thead>
  <tbody>${rows}</tbody>
</table>
<div class="buttons">
  <button data-action="open-whatif">Explore what-if</button>
  <button data-action="restart">New assessment</button>
</div>
<div id="report-charts"></div>`;
}

export function renderScreen(state: WizardState, model: ModelDoc): string {
  switch (state.step) {
    case 'subject':
      return renderSubjectScreen(state);
    case 'gate':
      return renderGateScreen(state, model);
    case 'levels':
      return renderLevelsScreen(state, model);
    case 'weights':
      return renderWeightsScreen(state, model);
    case 'report':
      return renderReportScreen(state);
  }
}
