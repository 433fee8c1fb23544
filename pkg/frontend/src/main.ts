/**
 * DOM bootstrap: event wiring around the pure wizard/what-if/chart modules.
 * All numbers on screen come from service responses; this file only moves
 * strings between fetch payloads and innerHTML.
 */

import { ApiClient, ApiFailure } from './api';
import type { AssessmentCreate, ModelDoc, SeriesPoint } from './api';
import { quadrantSvg, radarSvg, reportSeries } from './charts';
import {
  LatestWins,
  clearDraft,
  emptyDraft,
  invalidateVerdict,
  loadDraft,
  saveDraft,
} from './state';
import type { Draft } from './state';
import {
  advance,
  canAdvance,
  renderScreen,
  retreat,
} from './wizard';
import type { WizardState } from './wizard';
import {
  applyResponse,
  currentOverrides,
  effectiveReport,
  initWhatIf,
  renderWhatIfPanel,
  reset,
  setLevel,
  setWeight,
} from './whatif';
import type { WhatIfState } from './whatif';

const api = new ApiClient();
const sequencer = new LatestWins();

let model: ModelDoc;
let wizard: WizardState;
let whatIf: WhatIfState | null = null;

const app = () => document.getElementById('app')!;

function banner(message: string): void {
  const el = document.getElementById('error-banner')!;
  el.textContent = message;
  el.classList.toggle('hidden', message === '');
}

async function guard<T>(work: Promise<T>): Promise<T | null> {
  try {
    const result = await work;
    banner('');
    return result;
  } catch (err) {
    banner(err instanceof ApiFailure ? `${err.body.code}: ${err.body.message}` : String(err));
    return null;
  }
}

function persistDraft(): void {
  saveDraft(localStorage, wizard.draft);
}

function redraw(): void {
  app().innerHTML = renderScreen(wizard, model);
  if (wizard.step === 'report' && wizard.report) {
    const charts = document.getElementById('report-charts')!;
    const series = reportSeries(wizard.draft.subjectName, wizard.report);
    charts.innerHTML =
      radarSvg(series) +
      quadrantSvg(
        series,
        { decimal: String(1 / model.dimensions.length), rational: '', display: '' },
        { decimal: '0.5', rational: '1/2', display: '0.50' },
      );
  }
  if (whatIf) {
    const host = document.getElementById('whatif-host')!;
    host.innerHTML = renderWhatIfPanel(whatIf, model);
    drawWhatIfCharts();
  } else {
    const host = document.getElementById('whatif-host');
    if (host) host.innerHTML = '';
  }
}

function drawWhatIfCharts(): void {
  if (!whatIf) return;
  const target = document.getElementById('whatif-charts');
  if (!target) return;
  const report = effectiveReport(whatIf);
  const series: SeriesPoint[] = reportSeries(whatIf.subject, report);
  target.innerHTML =
    radarSvg(series, 300) +
    quadrantSvg(
      series,
      { decimal: String(1 / model.dimensions.length), rational: '', display: '' },
      { decimal: '0.5', rational: '1/2', display: '0.50' },
      300,
    );
}

function draftToCreate(draft: Draft): AssessmentCreate {
  return {
    subject: { name: draft.subjectName, description: draft.description || null },
    model_ref: { id: draft.modelId, version: draft.modelVersion },
    gate_answers: { answers: draft.answers },
    levels: draft.levels,
    weight_scores: draft.weights,
  };
}

async function checkGate(): Promise<void> {
  const verdict = await guard(
    api.gate(wizard.draft.answers, {
      id: wizard.draft.modelId,
      version: wizard.draft.modelVersion,
    }),
  );
  if (verdict) {
    wizard = { ...wizard, verdict };
    redraw();
  }
}

async function finishWizard(): Promise<void> {
  const stored = await guard(api.createAssessment(draftToCreate(wizard.draft)));
  if (!stored) return;
  const report = await guard(api.score(stored.id));
  if (!report) return;
  wizard = { ...wizard, step: 'report', report, assessmentId: stored.id };
  clearDraft(localStorage);
  redraw();
}

async function fireWhatIf(): Promise<void> {
  if (!whatIf) return;
  const seq = sequencer.next();
  const state = whatIf;
  const response = await guard(api.whatIf(state.assessmentId, currentOverrides(state)));
  if (!response || !sequencer.accept(seq) || !whatIf) return;
  whatIf = applyResponse(whatIf, response);
  const host = document.getElementById('whatif-host')!;
  host.innerHTML = renderWhatIfPanel(whatIf, model);
  drawWhatIfCharts();
}

async function commitWhatIf(): Promise<void> {
  if (!whatIf) return;
  const create = draftToCreate({
    ...wizard.draft,
    levels: { ...whatIf.levels },
    weights: { ...whatIf.weights },
  });
  const stored = await guard(api.createAssessment(create));
  if (!stored) return;
  const report = await guard(api.score(stored.id));
  if (!report) return;
  wizard = { ...wizard, report, assessmentId: stored.id };
  whatIf = initWhatIf(stored.id, create.subject.name, create.levels, create.weight_scores, report);
  redraw();
}

function onClick(event: Event): void {
  const target = (event.target as HTMLElement).closest('button');
  if (!target) return;
  switch (target.dataset.action) {
    case 'next':
      wizard = advance(wizard, model);
      persistDraft();
      redraw();
      break;
    case 'back':
      wizard = retreat(wizard);
      redraw();
      break;
    case 'check-gate':
      void checkGate();
      break;
    case 'finish':
      void finishWizard();
      break;
    case 'restart':
      wizard = {
        step: 'subject',
        draft: emptyDraft(model.id, model.version),
        verdict: null,
        report: null,
        assessmentId: null,
      };
      whatIf = null;
      clearDraft(localStorage);
      redraw();
      break;
    case 'open-whatif':
      if (wizard.report && wizard.assessmentId) {
        whatIf = initWhatIf(
          wizard.assessmentId,
          wizard.draft.subjectName,
          wizard.draft.levels,
          wizard.draft.weights,
          wizard.report,
        );
        redraw();
      }
      break;
    case 'whatif-reset':
      if (whatIf) {
        whatIf = reset(whatIf);
        redraw();
      }
      break;
    case 'whatif-commit':
      void commitWhatIf();
      break;
    case 'close-whatif':
      whatIf = null;
      redraw();
      break;
  }
}

function onInput(event: Event): void {
  const input = event.target as HTMLInputElement | HTMLSelectElement;
  if (!input.name && !input.id) return;

  if (input.id === 'subject-name') {
    wizard = { ...wizard, draft: { ...wizard.draft, subjectName: input.value } };
    persistDraft();
    const next = app().querySelector<HTMLButtonElement>('button[data-action="next"]');
    if (next) next.disabled = !canAdvance(wizard, model);
    return;
  }
  if (input.id === 'subject-desc') {
    wizard = { ...wizard, draft: { ...wizard.draft, description: input.value } };
    persistDraft();
    return;
  }

  const gateItem = model.gate_items.find((item) => item.id === input.name);
  if (gateItem) {
    const previous = wizard.draft.answers;
    const answers = { ...previous, [gateItem.id]: input.value === 'yes' };
    wizard = {
      ...wizard,
      draft: { ...wizard.draft, answers },
      verdict: invalidateVerdict(wizard.verdict, previous, answers),
    };
    persistDraft();
    redraw();
    return;
  }

  if (input.name.startsWith('level-')) {
    const key = input.name.slice('level-'.length);
    wizard = {
      ...wizard,
      draft: { ...wizard.draft, levels: { ...wizard.draft.levels, [key]: Number(input.value) } },
    };
    persistDraft();
    redraw();
    return;
  }
  if (input.name.startsWith('weight-')) {
    const key = input.name.slice('weight-'.length);
    wizard = {
      ...wizard,
      draft: { ...wizard.draft, weights: { ...wizard.draft.weights, [key]: Number(input.value) } },
    };
    persistDraft();
    redraw();
    return;
  }

  if (input.name.startsWith('wi-level-') && whatIf) {
    whatIf = setLevel(whatIf, input.name.slice('wi-level-'.length), Number(input.value));
    void fireWhatIf();
    return;
  }
  if (input.name.startsWith('wi-weight-') && whatIf) {
    whatIf = setWeight(whatIf, input.name.slice('wi-weight-'.length), Number(input.value));
    void fireWhatIf();
  }
}

async function boot(): Promise<void> {
  const models = await guard(api.listModels());
  if (!models || models.length === 0) return;
  const ref = models.find((m) => m.id === 'dt-core') ?? models[0];
  const doc = await guard(api.getModel(ref.id, ref.version));
  if (!doc) return;
  model = doc;
  const draft = loadDraft(localStorage) ?? emptyDraft(model.id, model.version);
  wizard = { step: 'subject', draft, verdict: null, report: null, assessmentId: null };
  document.body.addEventListener('click', onClick);
  document.body.addEventListener('input', onInput);
  document.body.addEventListener('change', onInput);
  redraw();
}

void boot();
