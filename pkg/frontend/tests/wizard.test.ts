import { describe, expect, it } from 'vitest';

import { emptyDraft, invalidateVerdict } from '../src/state';
import {
  advance,
  canAdvance,
  renderGateScreen,
  renderReportScreen,
  renderWeightsScreen,
  retreat,
} from '../src/wizard';
import type { WizardState } from '../src/wizard';
import {
  ALL_YES,
  LIVING_HEART_ANSWERS,
  LIVING_HEART_VERDICT,
  MODEL,
  PASSING_VERDICT,
  TESLA_REPORT,
} from './helpers';

function baseState(): WizardState {
  return {
    step: 'gate',
    draft: { ...emptyDraft(), subjectName: 'Living Heart', answers: { ...LIVING_HEART_ANSWERS } },
    verdict: null,
    report: null,
    assessmentId: null,
  };
}

describe('gate step blocking', () => {
  it('cannot advance before the service has judged the answers', () => {
    const state = baseState();
    expect(canAdvance(state, MODEL)).toBe(false);
    expect(advance(state, MODEL).step).toBe('gate');
  });

  it('blocks on the Living Heart refusal and shows the taxonomy', () => {
    const state: WizardState = { ...baseState(), verdict: LIVING_HEART_VERDICT };
    expect(canAdvance(state, MODEL)).toBe(false);
    expect(advance(state, MODEL).step).toBe('gate');

    const html = renderGateScreen(state, MODEL);
    expect(html).toContain('Digital Model');
    expect(html).toContain('connection.continuity_p2v');
    expect(html).toContain('connection.influence_v2p');
    expect(html).toMatch(/data-action="next" disabled/);
  });

  it('advances once the verdict passes', () => {
    const state: WizardState = {
      ...baseState(),
      draft: { ...baseState().draft, answers: { ...ALL_YES } },
      verdict: PASSING_VERDICT,
    };
    expect(canAdvance(state, MODEL)).toBe(true);
    expect(advance(state, MODEL).step).toBe('levels');
  });

  it('changing an answer invalidates the verdict', () => {
    const previous = { ...ALL_YES };
    const next = { ...ALL_YES, 'connection.influence_v2p': false };
    expect(invalidateVerdict(PASSING_VERDICT, previous, next)).toBeNull();
    expect(invalidateVerdict(PASSING_VERDICT, previous, { ...previous })).toBe(PASSING_VERDICT);
  });
});

describe('level and weight steps', () => {
  it('requires every dimension before advancing', () => {
    const state: WizardState = {
      ...baseState(),
      step: 'levels',
      draft: {
        ...baseState().draft,
        levels: { Cap: 3, Cor: 2, Com: 2 }, // Lc missing
      },
    };
    expect(canAdvance(state, MODEL)).toBe(false);
    const complete = {
      ...state,
      draft: { ...state.draft, levels: { ...state.draft.levels, Lc: 2 } },
    };
    expect(canAdvance(complete, MODEL)).toBe(true);
  });

  it('shows the importance scale labels Low through High', () => {
    const state: WizardState = {
      ...baseState(),
      step: 'weights',
      draft: { ...baseState().draft, weights: { Cap: 4, Cor: 3, Com: 4, Lc: 3 } },
    };
    const html = renderWeightsScreen(state, MODEL);
    expect(html).toContain('Low');
    expect(html).toContain('Medium-High');
    expect(html).toContain('High');
  });

  it('retreat walks back but never from the report', () => {
    const state: WizardState = { ...baseState(), step: 'levels' };
    expect(retreat(state).step).toBe('gate');
    expect(retreat({ ...state, step: 'report' }).step).toBe('report');
  });
});

describe('report rendering', () => {
  it('shows the service display string for the overall score verbatim', () => {
    const state: WizardState = {
      ...baseState(),
      step: 'report',
      draft: { ...baseState().draft, subjectName: 'Tesla vehicle' },
      report: TESLA_REPORT,
    };
    const html = renderReportScreen(state);
    expect(html).toContain('id="overall-score">0.69</strong>');
    expect(html).toContain('29/42');
    // per-dimension cells use the display strings, not recomputed numbers
    expect(html).toContain('<td>0.75</td>');
    expect(html).toContain('<td>0.29</td>');
  });
});
