/**
 * Session state: the draft assessment being built, persisted across
 * reloads, plus latest-wins sequencing for concurrent what-if requests.
 */

import type { GateVerdict } from './api';

export interface Draft {
  subjectName: string;
  description: string;
  modelId: string;
  modelVersion: string;
  answers: Record<string, boolean>;
  levels: Record<string, number>;
  weights: Record<string, number>;
}

export function emptyDraft(modelId = 'dt-core', modelVersion = '1.0'): Draft {
  return {
    subjectName: '',
    description: '',
    modelId,
    modelVersion,
    answers: {},
    levels: {},
    weights: {},
  };
}

export interface StorageLike {
  getItem(key: string): string | null;
  setItem(key: string, value: string): void;
  removeItem(key: string): void;
}

const DRAFT_KEY = 'twingauge.draft.v1';

export function saveDraft(storage: StorageLike, draft: Draft): void {
  storage.setItem(DRAFT_KEY, JSON.stringify(draft));
}

export function loadDraft(storage: StorageLike): Draft | null {
  const raw = storage.getItem(DRAFT_KEY);
  if (raw === null) return null;
  try {
    const parsed = JSON.parse(raw) as Partial<Draft>;
    if (typeof parsed.subjectName !== 'string' || typeof parsed.modelId !== 'string') {
      return null;
    }
    return { ...emptyDraft(), ...parsed };
  } catch {
    return null;
  }
}

export function clearDraft(storage: StorageLike): void {
  storage.removeItem(DRAFT_KEY);
}

/**
 * Monotonic sequence numbers for optimistic in-flight requests: a response
 * is applied only if no newer request has been issued since (latest wins).
 */
export class LatestWins {
  private issued = 0;
  private applied = 0;

  next(): number {
    this.issued += 1;
    return this.issued;
  }

  /** True when the response for `seq` is still the newest one. */
  accept(seq: number): boolean {
    if (seq < this.issued || seq <= this.applied) return false;
    this.applied = seq;
    return true;
  }
}

/** A gate verdict becomes stale the moment any answer changes. */
export function invalidateVerdict(
  verdict: GateVerdict | null,
  previous: Record<string, boolean>,
  next: Record<string, boolean>,
): GateVerdict | null {
  const keys = new Set([...Object.keys(previous), ...Object.keys(next)]);
  for (const key of keys) {
    if (previous[key] !== next[key]) return null;
  }
  return verdict;
}
