"""Read-only HTTP service over a built output tree.

The JSON endpoints return the serialized files bit-for-bit; search and
lookup queries run against the combined index loaded once at startup.
Static pages (HTML/XML/assets) are served from the same tree.
"""

from __future__ import annotations

import json
from pathlib import Path

from fastapi import FastAPI, Query
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles

from .search import CombinedIndex

LANGS = ("ru", "bg")


def create_app(out_dir: str | Path, default_hits_per_page: int = 10) -> FastAPI:
    out = Path(out_dir)
    if not (out / "index" / "combined.json").exists():
        raise FileNotFoundError(f"no built output at {out}; run the build first")
    combined = CombinedIndex.from_json(
        json.loads((out / "index" / "combined.json").read_text(encoding="utf-8"))
    )

    app = FastAPI(title="pairlex dictionary API")

    def file_bytes(path: Path) -> Response:
        return Response(content=path.read_bytes(), media_type="application/json")

    @app.get("/api/page/{slug}")
    def api_page(slug: str) -> Response:
        path = out / "pages" / f"{slug}.json"
        if not path.exists() or path.parent != (out / "pages"):
            return JSONResponse({"error": "unknown page"}, status_code=404)
        return file_bytes(path)

    @app.get("/api/lookup")
    def api_lookup(lemma: str = Query(""), lang: str = Query("ru")) -> Response:
        if not lemma.strip():
            return JSONResponse({"error": "empty query"}, status_code=400)
        if lang not in LANGS:
            return JSONResponse({"error": "unknown language"}, status_code=400)
        result = combined.lookup(lemma, lang)
        if result.found:
            return JSONResponse({"slug": result.slug})
        return JSONResponse(
            {
                "found": False,
                "reason": result.reason,
                "suggestions": list(result.suggestions),
            },
            status_code=404,
        )

    @app.get("/api/search")
    def api_search(
        q: str = Query(""),
        n: int = Query(default_hits_per_page),
        page: int = Query(1),
    ) -> Response:
        if not q.strip():
            return JSONResponse({"error": "empty query"}, status_code=400)
        if n < 1:
            return JSONResponse({"error": "n must be >= 1"}, status_code=400)
        found = combined.search(q, n, page)
        return JSONResponse(
            {
                "query": found.query,
                "total": found.total,
                "page": found.page,
                "pages": found.pages,
                "groups": found.grouped(),
            }
        )

    @app.get("/api/index/{lang}")
    def api_index(lang: str) -> Response:
        if lang not in LANGS:
            return JSONResponse({"error": "unknown language"}, status_code=404)
        return file_bytes(out / "index" / f"alpha_{lang}.json")

    @app.get("/api/legend")
    def api_legend() -> Response:
        return file_bytes(out / "assets" / "legend.json")

    app.mount("/", StaticFiles(directory=out, html=True), name="static")
    return app
