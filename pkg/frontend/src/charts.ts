/**
 * Radar and quadrant-scatter SVG, built from the same series rows the
 * service exports for CSV reports. Coordinates scale the service's decimal
 * strings; any number shown as text is the service's rendering verbatim.
 */

import type { RationalValue, ScoreReport, SeriesPoint } from './api';

const PALETTE = ['#2563eb', '#dc2626', '#059669', '#d97706', '#7c3aed', '#0891b2'];

function coord(value: RationalValue): number {
  return parseFloat(value.decimal);
}

function unique<T>(values: T[]): T[] {
  return [...new Set(values)];
}

export function radarSvg(series: SeriesPoint[], size = 360): string {
  const dims = unique(series.map((p) => p.dimension));
  const subjects = unique(series.map((p) => p.subject));
  const cx = size / 2;
  const cy = size / 2;
  const radius = size / 2 - 52;

  const point = (di: number, value: number): [number, number] => {
    const angle = -Math.PI / 2 + (2 * Math.PI * di) / dims.length;
    return [cx + radius * value * Math.cos(angle), cy + radius * value * Math.sin(angle)];
  };

  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${size} ${size}" class="radar">`,
  ];
  for (const ring of [0.25, 0.5, 0.75, 1]) {
    const pts = dims.map((_, i) => point(i, ring).map((v) => v.toFixed(1)).join(',')).join(' ');
    parts.push(`<polygon points="${pts}" fill="none" stroke="#d4d4d8"/>`);
  }
  dims.forEach((dim, i) => {
    const [x, y] = point(i, 1);
    const [lx, ly] = point(i, 1.16);
    parts.push(`<line x1="${cx}" y1="${cy}" x2="${x.toFixed(1)}" y2="${y.toFixed(1)}" stroke="#d4d4d8"/>`);
    parts.push(`<text x="${lx.toFixed(1)}" y="${ly.toFixed(1)}" text-anchor="middle">${dim}</text>`);
  });

  const byKey = new Map(series.map((p) => [`${p.subject}|${p.dimension}`, p]));
  subjects.forEach((subject, si) => {
    const color = PALETTE[si % PALETTE.length];
    const pts = dims
      .map((dim, i) => {
        const row = byKey.get(`${subject}|${dim}`);
        return point(i, row ? coord(row.maturity) : 0)
          .map((v) => v.toFixed(1))
          .join(',');
      })
      .join(' ');
    parts.push(
      `<polygon points="${pts}" fill="${color}" fill-opacity="0.15" stroke="${color}" stroke-width="2"/>`,
    );
    parts.push(`<text x="10" y="${18 + 16 * si}" fill="${color}">${subject}</text>`);
  });
  parts.push('</svg>');
  return parts.join('\n');
}

export function quadrantSvg(
  series: SeriesPoint[],
  weightBoundary: RationalValue,
  maturityBoundary: RationalValue,
  size = 360,
): string {
  const margin = 46;
  const plot = size - 2 * margin;
  const toX = (w: number) => margin + plot * Math.min(w, 1);
  const toY = (m: number) => size - margin - plot * Math.min(m, 1);

  const subjects = unique(series.map((p) => p.subject));
  const bx = toX(coord(weightBoundary));
  const by = toY(coord(maturityBoundary));

  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${size} ${size}" class="quadrants">`,
    `<rect x="${margin}" y="${margin}" width="${plot}" height="${plot}" fill="none" stroke="#52525b"/>`,
    `<line x1="${bx.toFixed(1)}" y1="${margin}" x2="${bx.toFixed(1)}" y2="${size - margin}" stroke="#a1a1aa" stroke-dasharray="4 3"/>`,
    `<line x1="${margin}" y1="${by.toFixed(1)}" x2="${size - margin}" y2="${by.toFixed(1)}" stroke="#a1a1aa" stroke-dasharray="4 3"/>`,
    `<text x="${margin + 4}" y="${margin + 14}" class="region">reallocation?</text>`,
    `<text x="${size - margin - 4}" y="${size - margin - 6}" text-anchor="end" class="region">development focus</text>`,
    `<text x="${size / 2}" y="${size - 10}" text-anchor="middle">normalized weight</text>`,
    `<text x="12" y="${size / 2}" text-anchor="middle" transform="rotate(-90 12 ${size / 2})">maturity</text>`,
  ];

  subjects.forEach((subject, si) => {
    const color = PALETTE[si % PALETTE.length];
    for (const p of series) {
      if (p.subject !== subject) continue;
      const x = toX(coord(p.normalized_weight));
      const y = toY(coord(p.maturity));
      parts.push(`<circle cx="${x.toFixed(1)}" cy="${y.toFixed(1)}" r="5" fill="${color}"><title>${p.subject} ${p.dimension}: ${p.quadrant}</title></circle>`);
      parts.push(`<text x="${(x + 7).toFixed(1)}" y="${(y - 6).toFixed(1)}" fill="${color}">${p.dimension}</text>`);
    }
  });
  parts.push('</svg>');
  return parts.join('\n');
}

/** Series rows for one report, same shape the compare endpoint returns. */
export function reportSeries(subject: string, report: ScoreReport): SeriesPoint[] {
  return report.dimensions.map((d) => ({
    subject,
    dimension: d.key,
    maturity: d.maturity,
    normalized_weight: d.normalized_weight,
    quadrant: '',
  }));
}
