// View state and its invariants: a popup always has an active feature,
// a selected component always has a selected review.

export type PopupState = 'closed' | 'feature-percentages' | 'expanded-scores';

export interface ViewState {
  selectedReviewId: string | null;
  selectedComponent: number | null;
  popup: PopupState;
  activeFeature: string | null;
}

export function initialState(): ViewState {
  return {
    selectedReviewId: null,
    selectedComponent: null,
    popup: 'closed',
    activeFeature: null,
  };
}

export function assertInvariants(state: ViewState): void {
  if (state.popup !== 'closed' && state.activeFeature === null) {
    throw new Error('popup open without an active feature');
  }
  if (state.selectedComponent !== null && state.selectedReviewId === null) {
    throw new Error('component selected without a selected review');
  }
}

export function selectReview(state: ViewState, id: string): ViewState {
  const next: ViewState = {
    ...state,
    selectedReviewId: id,
    selectedComponent: null,
    popup: 'closed',
    activeFeature: null,
  };
  assertInvariants(next);
  return next;
}

export function selectComponent(state: ViewState, index: number): ViewState {
  if (state.selectedReviewId === null) {
    throw new Error('cannot select a component without a review');
  }
  const next: ViewState = { ...state, selectedComponent: index };
  assertInvariants(next);
  return next;
}

export function openFeaturePopup(state: ViewState, feature: string): ViewState {
  const next: ViewState = {
    ...state,
    popup: 'feature-percentages' as PopupState,
    activeFeature: feature,
  };
  assertInvariants(next);
  return next;
}

export function expandPopup(state: ViewState): ViewState {
  if (state.popup !== 'feature-percentages') {
    throw new Error('view more requires the feature-percentages popup');
  }
  return { ...state, popup: 'expanded-scores' };
}

export function closePopup(state: ViewState): ViewState {
  return { ...state, popup: 'closed', activeFeature: null };
}
