import { describe, expect, it } from 'vitest';

import { ORIENTATION_COLORS, renderBars, renderPie } from '../src/pie.js';

const DATA = [
  { label: 'bad', value: 850.0066, color: ORIENTATION_COLORS.negative },
  { label: 'horrible', value: 240.8866, color: ORIENTATION_COLORS.negative },
];

describe('renderPie', () => {
  it('slice angles are proportional to values', () => {
    const svg = renderPie(DATA);
    const angles = [...svg.querySelectorAll<SVGElement>('.pie-slice')]
      .map((s) => Number(s.dataset.angle));
    const ratio = angles[0] / angles[1];
    expect(Math.abs(ratio - 850.0066 / 240.8866)).toBeLessThan(1e-9);
    expect(angles[0] + angles[1]).toBeCloseTo(360, 9);
  });

  it('single datum covers the full circle', () => {
    const svg = renderPie([DATA[0]]);
    const slices = svg.querySelectorAll<SVGElement>('.pie-slice');
    expect(slices.length).toBe(1);
    expect(Number(slices[0].dataset.angle)).toBe(360);
  });

  it('zero-valued data are dropped', () => {
    const svg = renderPie([...DATA, { label: 'none', value: 0, color: 'green' }]);
    expect(svg.querySelectorAll('.pie-slice').length).toBe(2);
  });

  it('fixed orientation color constants', () => {
    expect(ORIENTATION_COLORS).toEqual(
      { positive: 'blue', negative: 'red', neutral: 'green' });
  });

  it('depth styling is a class, not geometry', () => {
    const flat = renderPie(DATA);
    const depth = renderPie(DATA, true);
    expect(depth.classList.contains('pie--depth')).toBe(true);
    const flatAngles = [...flat.querySelectorAll<SVGElement>('.pie-slice')]
      .map((s) => s.dataset.angle);
    const depthAngles = [...depth.querySelectorAll<SVGElement>('.pie-slice')]
      .map((s) => s.dataset.angle);
    expect(depthAngles).toEqual(flatAngles);
  });
});

describe('renderBars', () => {
  it('bar widths scale to the maximum value', () => {
    const bars = [...renderBars(DATA).querySelectorAll<HTMLElement>('.bar')];
    expect(bars[0].style.width).toBe('100%');
    const second = Number.parseFloat(bars[1].style.width);
    expect(second).toBeCloseTo((240.8866 / 850.0066) * 100, 6);
  });
});
