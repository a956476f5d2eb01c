"""Alphabetical browse indices, header lookup and combined search.

The two alphabetical lists hold only lemmas that belong to the
expansive-action classification and are shown in a header or on a
comparative row; interlingual homonyms/paronyms (false and empty pairs)
never enter them, although they stay findable through combined search.
Combined search runs over six rubrics (main page, in-page text, corpus
excerpts, co-positioned pairs, the action-type catalog, the link catalog)
with constant scoring weights and deterministic ordering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from .compiler import Page
from .model import Language, LexiconModel, POS_ORDER, TED_LABELS_RU, TedTop
from .translit import collation_key

RUBRIC_ORDER = (
    "page",
    "in_page_text",
    "corpus_excerpt",
    "co_positioned_pair",
    "ted_catalog",
    "link_catalog",
)

# Constant scoring weights: exact lemma > header > gloss > citation > rest.
DEFAULT_WEIGHTS = {
    "exact_lemma": 100,
    "header": 50,
    "gloss": 20,
    "citation": 10,
    "other": 5,
}

# Lookup prefers the header whose sign ranks highest.
_KIND_PRIORITY = {
    "synchronous_homogeneous": 0,
    "synchronous_heterogeneous": 1,
    "diffuse": 2,
    "disjunctive": 3,
}


@dataclass(frozen=True)
class IndexEntry:
    lemma: str
    pos: str
    slug: str


@dataclass
class AlphaIndex:
    language: str
    entries: list[IndexEntry] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "language": self.language,
            "entries": [
                {"lemma": e.lemma, "pos": e.pos, "slug": e.slug} for e in self.entries
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "AlphaIndex":
        return cls(
            language=data["language"],
            entries=[IndexEntry(e["lemma"], e["pos"], e["slug"]) for e in data["entries"]],
        )


@dataclass(frozen=True)
class CombinedHit:
    rubric: str
    slug: str
    snippet: str
    score: int


@dataclass
class SearchPage:
    query: str
    total: int
    page: int
    pages: int
    hits: list[CombinedHit]

    def grouped(self) -> list[dict]:
        groups: list[dict] = []
        for hit in self.hits:
            if not groups or groups[-1]["rubric"] != hit.rubric:
                groups.append({"rubric": hit.rubric, "hits": []})
            groups[-1]["hits"].append(
                {"slug": hit.slug, "snippet": hit.snippet, "score": hit.score}
            )
        return groups


@dataclass(frozen=True)
class LookupResult:
    found: bool
    slug: str = ""
    reason: str = ""  # "no_such_lemma" | "rows_only" when not found
    suggestions: tuple[str, ...] = ()  # pages showing the word on their rows


@dataclass
class CombinedIndex:
    docs: list[dict] = field(default_factory=list)
    lookup_map: dict = field(default_factory=dict)  # lang -> lemma -> [prio, slug]
    rows_map: dict = field(default_factory=dict)  # lang -> lemma -> [slugs]
    weights: dict = field(default_factory=lambda: dict(DEFAULT_WEIGHTS))

    def to_json(self) -> dict:
        return {
            "docs": self.docs,
            "lookup": self.lookup_map,
            "rows": self.rows_map,
            "weights": self.weights,
        }

    @classmethod
    def from_json(cls, data: dict) -> "CombinedIndex":
        return cls(
            docs=data["docs"],
            lookup_map=data["lookup"],
            rows_map=data["rows"],
            weights=data["weights"],
        )

    # ------------------------------------------------------------- query --
    def search(self, query: str, hits_per_page: int, page: int = 1) -> SearchPage:
        q = query.strip().casefold()
        if not q:
            raise ValueError("empty query")
        if hits_per_page < 1:
            raise ValueError("hits_per_page must be >= 1")
        matched: list[CombinedHit] = []
        for doc in self.docs:
            text = doc["text"]
            if q not in text.casefold():
                continue
            score = self.weights.get(doc["weight"], self.weights["other"])
            if doc["rubric"] == "page" and q in [
                w.casefold() for w in doc.get("lemmas", [])
            ]:
                score = self.weights["exact_lemma"]
            matched.append(
                CombinedHit(doc["rubric"], doc["slug"], doc["snippet"], score)
            )
        matched.sort(
            key=lambda h: (
                RUBRIC_ORDER.index(h.rubric),
                -h.score,
                h.slug,
                h.snippet,
            )
        )
        total = len(matched)
        pages = max(1, math.ceil(total / hits_per_page))
        page = max(1, min(page, pages))
        window = matched[(page - 1) * hits_per_page : page * hits_per_page]
        return SearchPage(query=query, total=total, page=page, pages=pages, hits=window)

    def lookup(self, lemma: str, language: str) -> LookupResult:
        key = lemma.strip().casefold()
        candidates = self.lookup_map.get(language, {}).get(key)
        if candidates:
            best = sorted(candidates, key=lambda c: (c[0], c[1]))[0]
            return LookupResult(found=True, slug=best[1])
        on_rows = self.rows_map.get(language, {}).get(key)
        if on_rows:
            return LookupResult(
                found=False, reason="rows_only", suggestions=tuple(sorted(on_rows))
            )
        return LookupResult(found=False, reason="no_such_lemma")


@dataclass
class Indices:
    alpha: dict[str, AlphaIndex]
    combined: CombinedIndex


def _page_priority(page: Page) -> int:
    if page.header_kind in ("diffuse", "disjunctive"):
        return _KIND_PRIORITY[page.header_kind]
    if page.row1 is not None:
        return _KIND_PRIORITY.get(page.row1.sign_type, 1)
    return 1


def build_indices(pages: Iterable[Page], model: LexiconModel) -> Indices:
    pages = sorted(pages, key=lambda p: p.slug)

    # Where does each lexeme surface? Headers count; rows 1-4 count; row 5
    # (warnings) keeps a word out of the alphabetical lists.
    header_slugs: dict[str, list[tuple[int, str]]] = {}
    display_slugs: dict[str, set[str]] = {}
    row5_slugs: dict[str, set[str]] = {}
    for page in pages:
        prio = _page_priority(page)
        for member in page.header_members:
            header_slugs.setdefault(member.lexeme_id, []).append((prio, page.slug))
        comparative = [s for row in (page.row2, page.row3, page.row4) for s in row]
        if page.row1 is not None:
            comparative.append(page.row1)
        for sign in comparative:
            for ref in (sign.ru, sign.bg):
                if ref.sense_id:
                    lexeme_id = model.sense(ref.sense_id).lexeme_id
                    display_slugs.setdefault(lexeme_id, set()).add(page.slug)
        for chain in page.chains:
            for ref in chain.links:
                if ref.sense_id:
                    lexeme_id = model.sense(ref.sense_id).lexeme_id
                    display_slugs.setdefault(lexeme_id, set()).add(page.slug)
        for sign in page.row5:
            for ref in (sign.ru, sign.bg):
                if ref.sense_id:
                    lexeme_id = model.sense(ref.sense_id).lexeme_id
                    row5_slugs.setdefault(lexeme_id, set()).add(page.slug)

    alpha = {lang.value: AlphaIndex(language=lang.value) for lang in Language}
    for lexeme_id in sorted(model.lexemes):
        lexeme = model.lexemes[lexeme_id]
        if not lexeme.in_scheme:
            continue
        if lexeme_id in header_slugs:
            slug = sorted(header_slugs[lexeme_id])[0][1]
        elif lexeme_id in display_slugs:
            slug = sorted(display_slugs[lexeme_id])[0]
        else:
            continue
        alpha[lexeme.language.value].entries.append(
            IndexEntry(lexeme.lemma, lexeme.pos.value, slug)
        )
    for index in alpha.values():
        seen: set[tuple[str, str, str]] = set()
        unique: list[IndexEntry] = []
        for entry in index.entries:
            key = (entry.lemma, entry.pos, entry.slug)
            if key not in seen:
                seen.add(key)
                unique.append(entry)
        unique.sort(
            key=lambda e: (
                POS_ORDER.index(next(p for p in POS_ORDER if p.value == e.pos)),
                collation_key(e.lemma),
                e.slug,
            )
        )
        index.entries = unique

    def home_slug(lexeme_id: str) -> str:
        if lexeme_id in header_slugs:
            return sorted(header_slugs[lexeme_id])[0][1]
        if lexeme_id in display_slugs:
            return sorted(display_slugs[lexeme_id])[0]
        if lexeme_id in row5_slugs:
            return sorted(row5_slugs[lexeme_id])[0]
        return ""

    docs: list[dict] = []
    seen_docs: set[tuple[str, str, str]] = set()

    def add_doc(doc: dict) -> None:
        key = (doc["rubric"], doc["slug"], doc["text"])
        if key not in seen_docs:
            seen_docs.add(key)
            docs.append(doc)

    for page in pages:
        lemmas = [m.lemma for m in page.header_members]
        add_doc(
            {
                "rubric": "page",
                "slug": page.slug,
                "snippet": page.title,
                "text": " ".join(lemmas + [page.title, page.header_descriptive]),
                "weight": "header",
                "lemmas": lemmas,
            }
        )
        for payload in page.payloads:
            # glosses and citations index once, on the sense's home page
            if home_slug(model.sense(payload.sense_id).lexeme_id) != page.slug:
                continue
            add_doc(
                {
                    "rubric": "in_page_text",
                    "slug": page.slug,
                    "snippet": f"{payload.lemma}: {payload.gloss_ru} / {payload.gloss_bg}",
                    "text": " ".join(
                        [payload.lemma, payload.gloss_ru, payload.gloss_bg]
                        + list(payload.idioms)
                        + list(payload.synonyms)
                    ),
                    "weight": "gloss",
                }
            )
            for citation in payload.citations:
                add_doc(
                    {
                        "rubric": "corpus_excerpt",
                        "slug": page.slug,
                        "snippet": citation.text,
                        "text": f"{citation.text} {citation.annotation}",
                        "weight": "citation",
                    }
                )
        comparative = [s for row in (page.row2, page.row3, page.row4) for s in row]
        for sign in comparative:
            snippet = f"{sign.ru.text} {sign.glyph} {sign.bg.text}"
            add_doc(
                {
                    "rubric": "co_positioned_pair",
                    "slug": page.slug,
                    "snippet": snippet,
                    "text": f"{sign.ru.text} {sign.bg.text}",
                    "weight": "other",
                }
            )

    catalog: dict[TedTop, list[str]] = {t: [] for t in TedTop}
    for lexeme_id in sorted(model.lexemes):
        lexeme = model.lexemes[lexeme_id]
        for sense in lexeme.senses:
            if sense.ted is not None and lexeme.lemma not in catalog[sense.ted.top]:
                catalog[sense.ted.top].append(lexeme.lemma)
    slug_of_lemma: dict[str, str] = {}
    for index in alpha.values():
        for entry in index.entries:
            slug_of_lemma.setdefault(entry.lemma, entry.slug)
    for top in TedTop:
        members = catalog[top]
        if not members:
            continue
        label = TED_LABELS_RU[top]
        add_doc(
            {
                "rubric": "ted_catalog",
                "slug": slug_of_lemma.get(members[0], ""),
                "snippet": f"{label}: {', '.join(members)}",
                "text": " ".join([label] + members),
                "weight": "other",
            }
        )
    for rubric, url in sorted(model.rubric_links.items()):
        add_doc(
            {
                "rubric": "link_catalog",
                "slug": "",
                "snippet": f"{rubric}: {url}",
                "text": f"{rubric} {url}",
                "weight": "other",
            }
        )
    for word, url in sorted(model.word_links.items()):
        add_doc(
            {
                "rubric": "link_catalog",
                "slug": "",
                "snippet": f"{word}: {url}",
                "text": f"{word} {url}",
                "weight": "other",
            }
        )

    lookup_map: dict[str, dict[str, list]] = {lang.value: {} for lang in Language}
    rows_map: dict[str, dict[str, list]] = {lang.value: {} for lang in Language}
    for page in pages:
        prio = _page_priority(page)
        for member in page.header_members:
            lookup_map[member.language].setdefault(member.lemma.casefold(), []).append(
                [prio, page.slug]
            )
    for source in (display_slugs, row5_slugs):
        for lexeme_id, slugs in sorted(source.items()):
            lexeme = model.lexemes[lexeme_id]
            key = lexeme.lemma.casefold()
            if key in lookup_map[lexeme.language.value]:
                continue
            bucket = rows_map[lexeme.language.value].setdefault(key, [])
            for slug in sorted(slugs):
                if slug not in bucket:
                    bucket.append(slug)

    combined = CombinedIndex(docs=docs, lookup_map=lookup_map, rows_map=rows_map)
    return Indices(alpha=alpha, combined=combined)
