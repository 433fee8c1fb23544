import { describe, expect, it } from 'vitest';

import { quadrantSvg, radarSvg, reportSeries } from '../src/charts';
import { TESLA_REPORT, rv, seriesFor } from './helpers';

const GOOGLE_SERIES = [
  { subject: 'Google Map Navigation', dimension: 'Cap', maturity: rv('0.75', '3/4', '0.75'), normalized_weight: rv('0.454545454545', '5/11', '0.45'), quadrant: 'Aligned-Strong' },
  { subject: 'Google Map Navigation', dimension: 'Cor', maturity: rv('0.333333333333', '1/3', '0.33'), normalized_weight: rv('0.272727272727', '3/11', '0.27'), quadrant: 'DevelopmentFocus' },
  { subject: 'Google Map Navigation', dimension: 'Com', maturity: rv('0.666666666666', '2/3', '0.67'), normalized_weight: rv('0.181818181818', '2/11', '0.18'), quadrant: 'ReallocationCandidate' },
  { subject: 'Google Map Navigation', dimension: 'Lc', maturity: rv('1', '1/1', '1.00'), normalized_weight: rv('0.090909090909', '1/11', '0.09'), quadrant: 'ReallocationCandidate' },
];

function polygonPoints(svg: string): number[][][] {
  const matches = [...svg.matchAll(/<polygon points="([^"]+)"[^>]*stroke-width="2"/g)];
  return matches.map((m) =>
    m[1].split(' ').map((pair) => pair.split(',').map(Number)),
  );
}

describe('radar chart', () => {
  it('draws one data polygon per subject plus the grid rings', () => {
    const series = [...GOOGLE_SERIES, ...seriesFor('Tesla vehicle', TESLA_REPORT)];
    const svg = radarSvg(series);
    expect(svg.match(/<polygon/g)?.length).toBe(6); // 4 rings + 2 subjects
    expect(svg).toContain('Tesla vehicle');
    expect(svg).toContain('Google Map Navigation');
  });

  it('puts Tesla outside Google Map on Cor, tied on Com', () => {
    const series = [...GOOGLE_SERIES, ...seriesFor('Tesla vehicle', TESLA_REPORT)];
    const svg = radarSvg(series, 360);
    const [google, tesla] = polygonPoints(svg);
    const center = 180;
    const distance = (pt: number[]) => Math.hypot(pt[0] - center, pt[1] - center);
    // vertex order follows the series dimensions: Cap, Cor, Com, Lc.
    // Tesla is Cor2 vs Cor1 (strictly outside) and Com2 vs Com2 (coincident).
    expect(distance(tesla[1])).toBeGreaterThan(distance(google[1]));
    expect(distance(tesla[2])).toBeCloseTo(distance(google[2]), 6);
    expect(distance(tesla[3])).toBeLessThan(distance(google[3])); // Lc3 beats Lc2
  });
});

describe('quadrant scatter', () => {
  it('draws boundary lines and one point per dimension', () => {
    const svg = quadrantSvg(
      GOOGLE_SERIES,
      rv('0.25', '1/4', '0.25'),
      rv('0.5', '1/2', '0.50'),
    );
    expect(svg.match(/stroke-dasharray/g)?.length).toBe(2);
    expect(svg.match(/<circle/g)?.length).toBe(4);
    expect(svg).toContain('development focus');
  });

  it('reportSeries preserves the service value objects untouched', () => {
    const series = reportSeries('Tesla vehicle', TESLA_REPORT);
    expect(series).toHaveLength(4);
    expect(series[0].maturity).toBe(TESLA_REPORT.dimensions[0].maturity);
    expect(series.map((p) => p.dimension)).toEqual(['Cap', 'Cor', 'Com', 'Lc']);
  });
});
