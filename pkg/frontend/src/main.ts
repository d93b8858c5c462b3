import { ApiClient } from './api.js';
import { App } from './app.js';

function reviewIdFromHash(): string | undefined {
  const match = /^#\/review\/(.+)$/.exec(window.location.hash);
  return match ? decodeURIComponent(match[1]) : undefined;
}

const root = document.getElementById('app');
if (root) {
  const app = new App(root, new ApiClient(''));
  void app.init(reviewIdFromHash());
  window.addEventListener('hashchange', () => {
    const id = reviewIdFromHash();
    if (id && id !== app.state.selectedReviewId) {
      void app.onSelectReview(id);
    }
  });
}
