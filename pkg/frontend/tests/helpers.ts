/** Shared wire-format fixtures mirroring real service responses. */

import type {
  GateVerdict,
  ModelDoc,
  RationalValue,
  ScoreReport,
  SeriesPoint,
} from '../src/api';

export function rv(decimal: string, rational: string, display: string): RationalValue {
  return { decimal, rational, display };
}

export const MODEL: ModelDoc = {
  id: 'dt-core',
  version: '1.0',
  weight_scale: { min: 1, max: 5 },
  gate_items: [
    { id: 'correspondence.isomorphism', condition: 'Correspondence', prompt: 'Structure preserved?' },
    { id: 'correspondence.replicate', condition: 'Correspondence', prompt: 'Replicated digitally?' },
    { id: 'correspondence.scope_scale_declared', condition: 'Correspondence', prompt: 'Scope and scale declared?' },
    { id: 'correspondence.completeness', condition: 'Correspondence', prompt: 'Complete within scope?' },
    { id: 'connection.continuity_p2v', condition: 'BidirectionalConnection', prompt: 'Continuous updates?' },
    { id: 'connection.influence_v2p', condition: 'BidirectionalConnection', prompt: 'Virtual influences physical?' },
  ],
  dimensions: [
    {
      key: 'Cap',
      name: 'Capability',
      levels: [
        { index: 1, code: 'Cap1', name: 'Synchronous analytic', description: '' },
        { index: 2, code: 'Cap2', name: 'Historical and descriptive analytic', description: '' },
        { index: 3, code: 'Cap3', name: 'Futuristic and predictive analytic', description: '' },
        { index: 4, code: 'Cap4', name: 'Explainable analytic', description: '' },
      ],
    },
    {
      key: 'Cor',
      name: 'Cooperability',
      levels: [
        { index: 1, code: 'Cor1', name: 'One-to-One', description: '' },
        { index: 2, code: 'Cor2', name: 'One-to-many in the same environment', description: '' },
        { index: 3, code: 'Cor3', name: 'One-to-many in multiple domains', description: '' },
      ],
    },
    {
      key: 'Com',
      name: 'Comprehensiveness',
      levels: [
        { index: 1, code: 'Com1', name: 'Single aspect', description: '' },
        { index: 2, code: 'Com2', name: 'Multiple aspects', description: '' },
        { index: 3, code: 'Com3', name: 'Abstraction', description: '' },
      ],
    },
    {
      key: 'Lc',
      name: 'Lifecycle',
      levels: [
        { index: 1, code: 'Lc1', name: 'Single phase', description: '' },
        { index: 2, code: 'Lc2', name: 'Multiple phases', description: '' },
        { index: 3, code: 'Lc3', name: 'Entire lifecycle', description: '' },
      ],
    },
  ],
};

export const ALL_YES: Record<string, boolean> = Object.fromEntries(
  MODEL.gate_items.map((item) => [item.id, true]),
);

export const LIVING_HEART_ANSWERS: Record<string, boolean> = {
  ...ALL_YES,
  'connection.continuity_p2v': false,
  'connection.influence_v2p': false,
};

export const LIVING_HEART_VERDICT: GateVerdict = {
  passed: false,
  taxonomy: 'DigitalModel',
  failed_items: ['connection.continuity_p2v', 'connection.influence_v2p'],
};

export const PASSING_VERDICT: GateVerdict = {
  passed: true,
  taxonomy: 'DigitalTwinCandidate',
  failed_items: [],
};

/** Tesla score report exactly as the service serializes it. */
export const TESLA_REPORT: ScoreReport = {
  model_ref: { id: 'dt-core', version: '1.0' },
  rounding_policy: 'Exact',
  cap_applied: false,
  dimensions: [
    {
      key: 'Cap', level: 3,
      maturity: rv('0.75', '3/4', '0.75'),
      weight_score: 4,
      normalized_weight: rv('0.285714285714', '2/7', '0.29'),
    },
    {
      key: 'Cor', level: 2,
      maturity: rv('0.666666666666', '2/3', '0.67'),
      weight_score: 3,
      normalized_weight: rv('0.214285714285', '3/14', '0.21'),
    },
    {
      key: 'Com', level: 2,
      maturity: rv('0.666666666666', '2/3', '0.67'),
      weight_score: 4,
      normalized_weight: rv('0.285714285714', '2/7', '0.29'),
    },
    {
      key: 'Lc', level: 2,
      maturity: rv('0.666666666666', '2/3', '0.67'),
      weight_score: 3,
      normalized_weight: rv('0.214285714285', '3/14', '0.21'),
    },
  ],
  overall: rv('0.690476190476', '29/42', '0.69'),
};

export const LU2020_REPORT: ScoreReport = {
  model_ref: { id: 'dt-core', version: '1.0' },
  rounding_policy: 'Exact',
  cap_applied: false,
  dimensions: [
    {
      key: 'Cap', level: 2,
      maturity: rv('0.5', '1/2', '0.50'),
      weight_score: 5,
      normalized_weight: rv('0.333333333333', '1/3', '0.33'),
    },
    {
      key: 'Cor', level: 1,
      maturity: rv('0.333333333333', '1/3', '0.33'),
      weight_score: 2,
      normalized_weight: rv('0.133333333333', '2/15', '0.13'),
    },
    {
      key: 'Com', level: 2,
      maturity: rv('0.666666666666', '2/3', '0.67'),
      weight_score: 4,
      normalized_weight: rv('0.266666666666', '4/15', '0.27'),
    },
    {
      key: 'Lc', level: 1,
      maturity: rv('0.333333333333', '1/3', '0.33'),
      weight_score: 4,
      normalized_weight: rv('0.266666666666', '4/15', '0.27'),
    },
  ],
  overall: rv('0.477777777777', '43/90', '0.48'),
};

export function seriesFor(subject: string, report: ScoreReport): SeriesPoint[] {
  return report.dimensions.map((d) => ({
    subject,
    dimension: d.key,
    maturity: d.maturity,
    normalized_weight: d.normalized_weight,
    quadrant: '',
  }));
}
