// Main screen: upper row = review list / review text / metadata,
// lower row = review opinion pie / extraction table. Clicking a table row
// highlights that component's feature (orange) and opinion (yellow) in the
// text; clicking the highlighted feature opens the corpus-wide percentage
// popup, whose "view more" expands into the chi-square score-slice pie.

import { ApiClient, encodeFeature } from './api.js';
import {
  FEATURE_COLOR, OPINION_COLOR, ORIENTATION_COLORS, PieDatum, renderBars,
  renderPie,
} from './pie.js';
import {
  ViewState, closePopup, expandPopup, initialState, openFeaturePopup,
  selectComponent, selectReview,
} from './state.js';
import type {
  ComponentRowPayload, FeatureSummaryPayload, HighlightRow, Page,
  ReviewDetail, ReviewRow, ReviewSummaryPayload,
} from './types.js';

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K, className?: string, text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function clickable(node: HTMLElement, handler: () => void): void {
  node.addEventListener('click', handler);
  node.addEventListener('keydown', (event: KeyboardEvent) => {
    if (event.key === 'Enter' || event.key === ' ') {
      event.preventDefault();
      handler();
    }
  });
}

export class App {
  state: ViewState = initialState();
  private detail: ReviewDetail | null = null;
  private featureSummary: FeatureSummaryPayload | null = null;
  private chartKind: 'pie' | 'bar' = 'pie';

  private panels!: {
    list: HTMLElement; text: HTMLElement; meta: HTMLElement;
    pie: HTMLElement; table: HTMLElement; popup: HTMLElement;
  };

  constructor(private root: HTMLElement, private api: ApiClient) {
    this.scaffold();
  }

  private scaffold(): void {
    this.root.innerHTML = '';
    const header = el('header', 'topbar', 'reviewforge — opinion summaries');
    const upper = el('div', 'row upper-row');
    const lower = el('div', 'row lower-row');
    const list = el('section', 'panel panel-list');
    list.id = 'panel-review-list';
    const text = el('section', 'panel panel-text');
    text.id = 'panel-review-text';
    text.append(el('p', 'placeholder', 'Select a review to read it here.'));
    const meta = el('section', 'panel panel-meta');
    meta.id = 'panel-metadata';
    meta.append(el('p', 'placeholder', 'Review metadata appears here.'));
    const pie = el('section', 'panel panel-pie');
    pie.id = 'panel-review-pie';
    pie.append(el('p', 'placeholder', 'Review opinion counts appear here.'));
    const table = el('section', 'panel panel-table');
    table.id = 'panel-components';
    table.append(el('p', 'placeholder', 'Extracted components appear here.'));
    upper.append(list, text, meta);
    lower.append(pie, table);
    const popup = el('div', 'popup-host');
    popup.id = 'popup';
    this.root.append(header, upper, lower, popup);
    this.panels = { list, text, meta, pie, table, popup };
  }

  async init(initialReviewId?: string): Promise<void> {
    try {
      const page = await this.api.get<Page<ReviewRow>>('/reviews', 'reviews');
      if (page === null) return;
      this.renderReviewList(page.items);
    } catch (error) {
      this.renderError(this.panels.list, error);
      return;
    }
    if (initialReviewId) {
      await this.onSelectReview(initialReviewId);
    }
  }

  private renderReviewList(rows: ReviewRow[]): void {
    const panel = this.panels.list;
    panel.innerHTML = '';
    panel.append(el('h2', 'panel-title', 'Reviews'));
    const list = el('ul', 'review-list');
    for (const row of rows) {
      const item = el('li');
      const button = el('button', 'review-item');
      button.dataset.reviewId = row.id;
      button.append(
        el('span', 'review-item-title', row.title ?? row.id),
        el('span', 'review-item-sub',
           `${row.author ?? 'unknown'} · ${row.stars ?? '-'}★`),
      );
      clickable(button, () => void this.onSelectReview(row.id));
      item.append(button);
      list.append(item);
    }
    panel.append(list);
  }

  async onSelectReview(id: string): Promise<void> {
    this.state = selectReview(this.state, id);
    this.syncHash();
    this.markSelectedListItem(id);
    let detail: ReviewDetail | null;
    let summary: ReviewSummaryPayload | null;
    let rows: { items: ComponentRowPayload[] } | null;
    try {
      [detail, summary, rows] = await Promise.all([
        this.api.get<ReviewDetail>(`/reviews/${id}`, 'review'),
        this.api.get<ReviewSummaryPayload>(`/reviews/${id}/summary`, 'summary'),
        this.api.get<{ items: ComponentRowPayload[] }>(
          `/reviews/${id}/components`, 'components'),
      ]);
    } catch (error) {
      this.renderError(this.panels.text, error);
      return;
    }
    if (detail === null || summary === null || rows === null) return; // stale
    this.detail = detail;
    this.renderBody();
    this.renderMetadata(detail);
    this.renderReviewPie(summary);
    this.renderComponentTable(rows.items);
  }

  private markSelectedListItem(id: string): void {
    for (const button of this.panels.list.querySelectorAll<HTMLElement>('.review-item')) {
      button.classList.toggle('review-item--selected', button.dataset.reviewId === id);
    }
  }

  private renderError(panel: HTMLElement, error: unknown): void {
    panel.innerHTML = '';
    const box = el('div', 'error-panel');
    box.setAttribute('role', 'alert');
    box.textContent = `Could not load data: ${String(error)}`;
    panel.append(box);
  }

  /** Review text split into sentences; the selected component's spans are
   * wrapped in colored marks at exactly the API offsets. */
  private renderBody(): void {
    const detail = this.detail;
    if (!detail) return;
    const panel = this.panels.text;
    panel.innerHTML = '';
    panel.append(el('h2', 'panel-title', detail.title ?? detail.id));
    const active = this.state.selectedComponent;
    const highlights = active === null ? []
      : detail.highlights.filter((h) => h.component_index === active);
    const body = el('div', 'review-body');
    for (const sentence of detail.sentences) {
      const inSentence = highlights
        .filter((h) => h.start >= sentence.start && h.end <= sentence.end)
        .sort((a, b) => a.start - b.start);
      const span = el('span', 'sentence');
      span.dataset.sentenceIndex = String(sentence.index);
      if (inSentence.length > 0) span.classList.add('sentence--snippet');
      this.renderSentenceSegments(span, detail.body, sentence.start,
                                  sentence.end, inSentence);
      body.append(span, document.createTextNode(' '));
    }
    panel.append(body);
  }

  private renderSentenceSegments(
    target: HTMLElement, body: string, start: number, end: number,
    highlights: HighlightRow[],
  ): void {
    let cursor = start;
    for (const h of highlights) {
      if (h.start > cursor) {
        target.append(document.createTextNode(body.slice(cursor, h.start)));
      }
      const mark = el('mark', `highlight highlight--${h.role}`);
      mark.textContent = body.slice(h.start, h.end);
      mark.dataset.role = h.role;
      mark.dataset.start = String(h.start);
      mark.dataset.end = String(h.end);
      mark.style.backgroundColor = h.role === 'feature' ? FEATURE_COLOR : OPINION_COLOR;
      if (h.role === 'feature') {
        mark.setAttribute('role', 'button');
        mark.tabIndex = 0;
        const feature = body.slice(h.start, h.end).toLowerCase();
        clickable(mark, () => void this.onClickSnippet(feature));
      }
      target.append(mark);
      cursor = h.end;
    }
    if (cursor < end) {
      target.append(document.createTextNode(body.slice(cursor, end)));
    }
  }

  private renderMetadata(detail: ReviewDetail): void {
    const panel = this.panels.meta;
    panel.innerHTML = '';
    panel.append(el('h2', 'panel-title', 'Metadata'));
    const table = el('dl', 'meta-list');
    const rows: [string, string][] = [
      ['Source', detail.source ?? '-'],
      ['Domain', detail.domain ?? '-'],
      ['Author', detail.author ?? '-'],
      ['Description', detail.title ?? '-'],
      ['Posted', detail.date ?? '-'],
      ['Star rating', detail.stars === null ? '-' : '★'.repeat(detail.stars)],
    ];
    for (const [key, value] of rows) {
      table.append(el('dt', 'meta-key', key), el('dd', 'meta-value', value));
    }
    panel.append(table);
  }

  private renderReviewPie(summary: ReviewSummaryPayload): void {
    const panel = this.panels.pie;
    panel.innerHTML = '';
    panel.append(el('h2', 'panel-title', 'Opinions in this review'));
    const data: PieDatum[] = [
      { label: 'positive', value: summary.positive, color: ORIENTATION_COLORS.positive },
      { label: 'negative', value: summary.negative, color: ORIENTATION_COLORS.negative },
      { label: 'neutral', value: summary.neutral, color: ORIENTATION_COLORS.neutral },
    ];
    if (summary.positive + summary.negative + summary.neutral === 0) {
      panel.append(el('p', 'placeholder', 'No retained opinions in this review.'));
      return;
    }
    panel.append(renderPie(data));
    const legend = el('ul', 'legend');
    for (const datum of data) {
      const item = el('li', 'legend-item', `${datum.label}: ${datum.value}`);
      item.style.color = datum.color;
      legend.append(item);
    }
    panel.append(legend);
  }

  private renderComponentTable(rows: ComponentRowPayload[]): void {
    const panel = this.panels.table;
    panel.innerHTML = '';
    panel.append(el('h2', 'panel-title', 'Extracted feature-opinion pairs'));
    if (rows.length === 0) {
      panel.append(el('p', 'placeholder', 'No retained components.'));
      return;
    }
    const table = el('table', 'component-table');
    const head = el('thead');
    const headRow = el('tr');
    for (const column of ['Feature', 'Modifier', 'Opinion', 'Orientation', 'Reliability']) {
      headRow.append(el('th', undefined, column));
    }
    head.append(headRow);
    const tbody = el('tbody');
    rows.forEach((row, index) => {
      const tr = el('tr', 'component-row');
      tr.dataset.componentIndex = String(index);
      tr.setAttribute('role', 'button');
      tr.tabIndex = 0;
      tr.append(el('td', 'cell-feature', row.feature));
      tr.append(el('td', undefined, row.modifier || '-'));
      tr.append(el('td', undefined, row.opinion));
      const orientation = el('td', 'cell-orientation', row.orientation);
      orientation.style.color = ORIENTATION_COLORS[row.orientation];
      tr.append(orientation);
      tr.append(el('td', undefined, row.reliability.toFixed(2)));
      clickable(tr, () => this.onClickFeature(index));
      tbody.append(tr);
    });
    table.append(head, tbody);
    panel.append(table);
  }

  /** Table row click: single-selection highlight of that component. */
  onClickFeature(index: number): void {
    this.state = selectComponent(this.state, index);
    for (const row of this.panels.table.querySelectorAll<HTMLElement>('.component-row')) {
      row.classList.toggle('component-row--selected',
                           row.dataset.componentIndex === String(index));
    }
    this.renderBody();
  }

  /** Highlighted feature click: corpus-wide percentage popup. */
  async onClickSnippet(feature: string): Promise<void> {
    this.state = openFeaturePopup(this.state, feature);
    let summary: FeatureSummaryPayload | null;
    try {
      summary = await this.api.get<FeatureSummaryPayload>(
        `/features/${encodeFeature(feature)}/summary`, 'feature-summary');
    } catch (error) {
      this.renderPopupError(feature, error);
      return;
    }
    if (summary === null) return;
    this.featureSummary = summary;
    this.renderFeaturePopup();
  }

  onViewMore(): void {
    this.state = expandPopup(this.state);
    this.renderFeaturePopup();
  }

  onClosePopup(): void {
    this.state = closePopup(this.state);
    this.featureSummary = null;
    this.panels.popup.innerHTML = '';
  }

  onToggleChart(): void {
    this.chartKind = this.chartKind === 'pie' ? 'bar' : 'pie';
    this.renderFeaturePopup();
  }

  private popupShell(title: string): HTMLElement {
    const host = this.panels.popup;
    host.innerHTML = '';
    const overlay = el('div', 'popup-overlay');
    const dialog = el('div', 'popup-dialog');
    dialog.setAttribute('role', 'dialog');
    dialog.setAttribute('aria-label', title);
    if (this.state.popup === 'expanded-scores') {
      dialog.classList.add('popup-dialog--expanded');
    }
    const bar = el('div', 'popup-bar');
    bar.append(el('h3', 'popup-title', title));
    const close = el('button', 'popup-close', '×');
    close.setAttribute('aria-label', 'Close');
    clickable(close, () => this.onClosePopup());
    bar.append(close);
    dialog.append(bar);
    overlay.append(dialog);
    host.append(overlay);
    return dialog;
  }

  private renderPopupError(feature: string, error: unknown): void {
    const dialog = this.popupShell(`Feature: ${feature}`);
    const box = el('p', 'error-panel');
    box.setAttribute('role', 'alert');
    box.textContent = `Could not load feature summary: ${String(error)}`;
    dialog.append(box);
  }

  private renderFeaturePopup(): void {
    const summary = this.featureSummary;
    if (!summary || this.state.popup === 'closed') return;
    const expanded = this.state.popup === 'expanded-scores';
    const dialog = this.popupShell(`Feature: ${summary.feature}`);

    if (!expanded) {
      // percentage view: positive/negative/neutral share of all mentions
      const data: PieDatum[] = [
        { label: 'positive', value: summary.percentages.positive,
          color: ORIENTATION_COLORS.positive },
        { label: 'negative', value: summary.percentages.negative,
          color: ORIENTATION_COLORS.negative },
        { label: 'neutral', value: summary.percentages.neutral,
          color: ORIENTATION_COLORS.neutral },
      ];
      dialog.append(this.chartKind === 'pie' ? renderPie(data) : renderBars(data));
      const labels = el('ul', 'percent-list');
      for (const datum of data) {
        const item = el('li', 'percent-item', `${datum.label}: ${datum.value}%`);
        item.dataset.orientation = datum.label;
        item.style.color = datum.color;
        labels.append(item);
      }
      dialog.append(labels);
      const controls = el('div', 'popup-controls');
      const viewMore = el('button', 'view-more', 'view more');
      clickable(viewMore, () => this.onViewMore());
      const toggle = el('button', 'chart-toggle',
                        this.chartKind === 'pie' ? 'bars' : 'pie');
      clickable(toggle, () => this.onToggleChart());
      controls.append(viewMore, toggle);
      dialog.append(controls);
      return;
    }

    // expanded view: one slice per opinion word, sized by |chi-square|
    const slices = [...summary.score_slices]
      .sort((a, b) => b.magnitude - a.magnitude)
      .map((slice) => ({
        label: slice.opinion,
        value: slice.magnitude,
        color: ORIENTATION_COLORS[slice.orientation],
      }));
    dialog.append(el('p', 'popup-note',
                     'Opinion score summary (chi-square magnitudes)'));
    dialog.append(renderPie(slices, true));
    const list = el('ul', 'score-list');
    for (const slice of summary.score_slices) {
      list.append(el('li', 'score-item',
                     `${slice.opinion}: ${slice.magnitude} (${slice.orientation})`));
    }
    dialog.append(list);
  }

  private syncHash(): void {
    if (typeof window !== 'undefined' && this.state.selectedReviewId) {
      window.location.hash = `#/review/${this.state.selectedReviewId}`;
    }
  }
}
