"""Read-only HTTP API over one immutable results snapshot.

All endpoints are GET and answer JSON; list endpoints paginate with
limit/offset (default limit 50). Unknown ids return a structured 404.
"""

from __future__ import annotations

from fastapi import FastAPI, Query, Request
from fastapi.responses import JSONResponse, Response

from . import summary
from .summary import ResultsStore, UnknownId

DEFAULT_LIMIT = 50


def _not_found(kind: str, value: str) -> JSONResponse:
    return JSONResponse(status_code=404,
                        content={"error": "not_found", kind: value})


def _review_row(doc) -> dict:
    return {"id": doc.id, "source": doc.source, "domain": doc.product_domain,
            "author": doc.author, "date": doc.posted_on,
            "stars": doc.star_rating, "title": doc.title}


def _component_row(store: ResultsStore, comp, orientation: str) -> dict:
    return {"feature": comp.feature, "modifier": comp.modifier or "",
            "opinion": comp.opinion, "orientation": orientation,
            "reliability": store.pair_reliability(comp.feature, comp.opinion)}


def create_app(store: ResultsStore) -> FastAPI:
    app = FastAPI(title="reviewforge", docs_url=None, redoc_url=None)

    @app.exception_handler(UnknownId)
    async def unknown_id(request: Request, exc: UnknownId):
        return JSONResponse(status_code=404,
                            content={"error": "not_found", "detail": str(exc)})

    @app.get("/reviews")
    def reviews(limit: int = Query(DEFAULT_LIMIT, ge=0),
                offset: int = Query(0, ge=0)):
        rows = [_review_row(d) for d in store.documents]
        return {"total": len(rows), "items": rows[offset:offset + limit]}

    @app.get("/reviews/{review_id}")
    def review(review_id: str):
        try:
            doc = store.document(review_id)
        except UnknownId:
            return _not_found("id", review_id)
        sentences = [{
            "index": s.index, "start": s.span[0], "end": s.span[1],
            "text": doc.body[s.span[0]:s.span[1]],
            "subjectivity": s.subjectivity,
            "subjectivity_score": s.subjectivity_score,
        } for s in doc.sentences]
        components = [dict(_component_row(store, c, o),
                           sentence_index=c.sentence_index,
                           rule=c.rule_id,
                           anaphora_resolved=c.anaphora_resolved,
                           antecedent_sentence_index=c.antecedent_sentence_index,
                           feature_span=list(c.feature_span),
                           modifier_span=list(c.modifier_span) if c.modifier_span else None,
                           opinion_span=list(c.opinion_span))
                      for _, c, o in store.components_of(review_id)]
        return {**_review_row(doc), "body": doc.body, "sentences": sentences,
                "highlights": summary.snippet_highlights(store, review_id),
                "components": components}

    @app.get("/reviews/{review_id}/summary")
    def review_summary(review_id: str):
        try:
            s = summary.aggregate_review_summary(store, review_id)
        except UnknownId:
            return _not_found("id", review_id)
        return {"id": s.document_id, "positive": s.positive_count,
                "negative": s.negative_count, "neutral": s.neutral_count}

    @app.get("/reviews/{review_id}/components")
    def review_components(review_id: str):
        try:
            rows = store.components_of(review_id)
        except UnknownId:
            return _not_found("id", review_id)
        return {"items": [_component_row(store, c, o) for _, c, o in rows]}

    @app.get("/features")
    def features(limit: int = Query(DEFAULT_LIMIT, ge=0),
                 offset: int = Query(0, ge=0)):
        rows = [{"feature": f, "mentions": n} for f, n in store.features()]
        return {"total": len(rows), "items": rows[offset:offset + limit]}

    @app.get("/features/{name}/summary")
    def feature_summary(name: str):
        try:
            s = summary.aggregate_feature_summary(store, name)
        except UnknownId:
            return _not_found("feature", name)
        return {
            "feature": s.feature,
            "positive": s.positive_count, "negative": s.negative_count,
            "neutral": s.neutral_count,
            "percentages": {"positive": s.percentages[0],
                            "negative": s.percentages[1],
                            "neutral": s.percentages[2]},
            "score_slices": [{"opinion": w, "magnitude": m, "orientation": o}
                             for w, m, o in s.score_slices],
            "snippets": [{"document_id": d, "sentence_index": i,
                          "feature_span": list(fs), "opinion_span": list(os_)}
                         for d, i, fs, os_ in s.snippets],
        }

    @app.get("/words")
    def words():
        return {w: {"pmi": ws.scores.pmi, "mi": ws.scores.mi,
                    "chi": ws.scores.chi, "llr": ws.scores.llr,
                    "orientation": ws.orientation}
                for w, ws in sorted(store.word_sentiments.items())}

    @app.get("/export")
    def export():
        # exact bytes of the CLI export (fixed 4-decimal serialization)
        return Response(content=summary.export_text(store),
                        media_type="application/json")

    return app
