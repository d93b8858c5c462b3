// SVG pie and bar charts. The fixed color mapping lives here: blue, red,
// green for positive, negative, neutral opinions; slices expose their
// angle and value as data attributes so proportions are testable.

import type { Orientation } from './types.js';

export const ORIENTATION_COLORS: Record<Orientation, string> = {
  positive: 'blue',
  negative: 'red',
  neutral: 'green',
};

export const FEATURE_COLOR = 'orange';
export const OPINION_COLOR = 'yellow';

export interface PieDatum {
  label: string;
  value: number;
  color: string;
}

const SVG_NS = 'http://www.w3.org/2000/svg';
const SIZE = 180;
const R = SIZE / 2 - 4;
const CX = SIZE / 2;
const CY = SIZE / 2;

function polar(angleDeg: number): [number, number] {
  const rad = ((angleDeg - 90) * Math.PI) / 180;
  return [CX + R * Math.cos(rad), CY + R * Math.sin(rad)];
}

/** Pie with one slice per positive-valued datum; a single datum fills the
 * whole circle. The "3D" look of the original mock-ups is depth styling
 * only: slice angles carry all the information. */
export function renderPie(data: PieDatum[], depth = false): SVGSVGElement {
  const svg = document.createElementNS(SVG_NS, 'svg');
  svg.setAttribute('viewBox', `0 0 ${SIZE} ${SIZE}`);
  svg.setAttribute('role', 'img');
  svg.classList.add('pie');
  if (depth) svg.classList.add('pie--depth');

  const visible = data.filter((d) => d.value > 0);
  const total = visible.reduce((acc, d) => acc + d.value, 0);
  if (total <= 0) return svg;

  if (visible.length === 1) {
    const only = visible[0];
    const circle = document.createElementNS(SVG_NS, 'circle');
    circle.setAttribute('cx', String(CX));
    circle.setAttribute('cy', String(CY));
    circle.setAttribute('r', String(R));
    decorate(circle, only, 360);
    svg.appendChild(circle);
    return svg;
  }

  let angle = 0;
  for (const datum of visible) {
    const sweep = (datum.value / total) * 360;
    const [x0, y0] = polar(angle);
    const [x1, y1] = polar(angle + sweep);
    const large = sweep > 180 ? 1 : 0;
    const path = document.createElementNS(SVG_NS, 'path');
    path.setAttribute(
      'd',
      `M ${CX} ${CY} L ${x0} ${y0} A ${R} ${R} 0 ${large} 1 ${x1} ${y1} Z`,
    );
    decorate(path, datum, sweep);
    svg.appendChild(path);
    angle += sweep;
  }
  return svg;
}

function decorate(el: SVGElement, datum: PieDatum, sweep: number): void {
  el.classList.add('pie-slice');
  el.dataset.label = datum.label;
  el.dataset.value = String(datum.value);
  el.dataset.angle = String(sweep);
  el.style.fill = datum.color;
  const title = document.createElementNS(SVG_NS, 'title');
  title.textContent = `${datum.label}: ${datum.value}`;
  el.appendChild(title);
}

/** Horizontal bars as the alternative rendering of the same data. */
export function renderBars(data: PieDatum[]): HTMLElement {
  const wrap = document.createElement('div');
  wrap.className = 'bars';
  const max = Math.max(...data.map((d) => d.value), 0);
  for (const datum of data) {
    const row = document.createElement('div');
    row.className = 'bar-row';
    const label = document.createElement('span');
    label.className = 'bar-label';
    label.textContent = datum.label;
    const bar = document.createElement('span');
    bar.className = 'bar';
    bar.dataset.label = datum.label;
    bar.dataset.value = String(datum.value);
    bar.style.width = max > 0 ? `${(datum.value / max) * 100}%` : '0%';
    bar.style.backgroundColor = datum.color;
    row.append(label, bar);
    wrap.appendChild(row);
  }
  return wrap;
}
