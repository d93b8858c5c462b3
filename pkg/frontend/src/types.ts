// Payload shapes of the read-only mining API.

export type Orientation = 'positive' | 'negative' | 'neutral';

export interface ReviewRow {
  id: string;
  source: string | null;
  domain: string | null;
  author: string | null;
  date: string | null;
  stars: number | null;
  title: string | null;
}

export interface SentencePayload {
  index: number;
  start: number;
  end: number;
  text: string;
  subjectivity: string | null;
  subjectivity_score: number | null;
}

export interface ComponentPayload {
  feature: string;
  modifier: string;
  opinion: string;
  orientation: Orientation;
  reliability: number;
  sentence_index: number;
  rule: string;
  anaphora_resolved: boolean;
  antecedent_sentence_index: number | null;
  feature_span: [number, number];
  modifier_span: [number, number] | null;
  opinion_span: [number, number];
}

export interface HighlightRow {
  component_index: number;
  role: 'feature' | 'opinion';
  sentence_index: number;
  start: number;
  end: number;
}

export interface ReviewDetail extends ReviewRow {
  body: string;
  sentences: SentencePayload[];
  highlights: HighlightRow[];
  components: ComponentPayload[];
}

export interface ComponentRowPayload {
  feature: string;
  modifier: string;
  opinion: string;
  orientation: Orientation;
  reliability: number;
}

export interface ReviewSummaryPayload {
  id: string;
  positive: number;
  negative: number;
  neutral: number;
}

export interface ScoreSlice {
  opinion: string;
  magnitude: number;
  orientation: Orientation;
}

export interface FeatureSummaryPayload {
  feature: string;
  positive: number;
  negative: number;
  neutral: number;
  percentages: { positive: number; negative: number; neutral: number };
  score_slices: ScoreSlice[];
  snippets: {
    document_id: string;
    sentence_index: number;
    feature_span: [number, number];
    opinion_span: [number, number];
  }[];
}

export interface Page<T> {
  total: number;
  items: T[];
}
