/**
 * Typed client for the twingauge HTTP API (/api/v1).
 *
 * Every score-carrying number arrives as a RationalValue; the `display`
 * string is the only rendering the UI may show (single source of truth:
 * the service does all rounding).
 */

export interface RationalValue {
  decimal: string;
  rational: string;
  display: string;
}

export interface ModelRef {
  id: string;
  version: string;
}

export interface GateItem {
  id: string;
  condition: 'Correspondence' | 'BidirectionalConnection';
  prompt: string;
}

export interface LevelDef {
  index: number;
  code: string;
  name: string;
  description: string;
}

export interface DimensionDef {
  key: string;
  name: string;
  levels: LevelDef[];
}

export interface ModelDoc {
  id: string;
  version: string;
  weight_scale: { min: number; max: number };
  gate_items: GateItem[];
  dimensions: DimensionDef[];
}

export interface GateVerdict {
  passed: boolean;
  taxonomy: 'DigitalModel' | 'DigitalShadow' | 'DigitalTwinCandidate';
  failed_items: string[];
  report?: string | null;
}

export interface DimensionScore {
  key: string;
  level: number;
  maturity: RationalValue;
  weight_score: number | RationalValue;
  normalized_weight: RationalValue;
}

export interface ScoreReport {
  model_ref: ModelRef;
  rounding_policy: string;
  cap_applied: boolean;
  dimensions: DimensionScore[];
  overall: RationalValue;
}

export interface SeriesPoint {
  subject: string;
  dimension: string;
  maturity: RationalValue;
  normalized_weight: RationalValue;
  quadrant: string;
}

export interface CompareResponse {
  subjects: { id: string; report: ScoreReport }[];
  series: SeriesPoint[];
  ranking: string[];
  ties: string[][];
  weight_boundary: RationalValue;
  maturity_boundary: RationalValue;
}

export interface WhatIfOverrides {
  levels: Record<string, number>;
  weight_scores: Record<string, number>;
}

export interface WhatIfResponse {
  overrides: WhatIfOverrides;
  result: ScoreReport;
  delta_L: RationalValue;
  base_overall: RationalValue;
}

export interface AssessmentCreate {
  subject: { name: string; description?: string | null };
  model_ref: ModelRef;
  gate_answers: { answers: Record<string, boolean>; notes?: Record<string, string> };
  levels: Record<string, number>;
  weight_scores: Record<string, number>;
  rater?: string | null;
}

export interface AssessmentDoc extends AssessmentCreate {
  id: string;
  timestamp: string;
}

export interface ApiError {
  code: string;
  message: string;
  path?: string | null;
  verdict?: GateVerdict | null;
}

export class ApiFailure extends Error {
  constructor(
    public readonly status: number,
    public readonly body: ApiError,
  ) {
    super(`${body.code}: ${body.message}`);
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
    private readonly base = '',
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: { 'Content-Type': 'application/json' } };
    if (body !== undefined) init.body = JSON.stringify(body);
    const resp = await this.fetchFn(this.base + path, init);
    const payload = await resp.json();
    if (!resp.ok) throw new ApiFailure(resp.status, payload as ApiError);
    return payload as T;
  }

  listModels(): Promise<ModelRef[]> {
    return this.request('GET', '/api/v1/models');
  }

  getModel(id: string, version: string): Promise<ModelDoc> {
    return this.request('GET', `/api/v1/models/${id}/${version}`);
  }

  createAssessment(doc: AssessmentCreate): Promise<AssessmentDoc> {
    return this.request('POST', '/api/v1/assessments', doc);
  }

  listAssessments(): Promise<AssessmentDoc[]> {
    return this.request('GET', '/api/v1/assessments');
  }

  score(assessmentId: string): Promise<ScoreReport> {
    return this.request('POST', `/api/v1/assessments/${assessmentId}/score`);
  }

  gate(answers: Record<string, boolean>, modelRef?: ModelRef): Promise<GateVerdict> {
    return this.request('POST', '/api/v1/gate', {
      model_ref: modelRef ?? null,
      gate_answers: { answers },
    });
  }

  whatIf(assessmentId: string, overrides: WhatIfOverrides): Promise<WhatIfResponse> {
    return this.request('POST', '/api/v1/whatif', {
      assessment_id: assessmentId,
      overrides,
    });
  }

  compare(ids: string[]): Promise<CompareResponse> {
    return this.request('GET', `/api/v1/compare?ids=${ids.join(',')}`);
  }
}

export const TAXONOMY_NAMES: Record<GateVerdict['taxonomy'], string> = {
  DigitalModel: 'Digital Model',
  DigitalShadow: 'Digital Shadow',
  DigitalTwinCandidate: 'Digital Twin candidate',
};
