"""Page serialization: lossless XML (with parser), JSON and hydratable HTML.

The HTML document is self-sufficient: every pop-up payload (glosses,
citations, result indices, legend) is embedded inline, and interactive spans
carry data attributes (sense ids, color indices, sign types) so a reader UI
can hydrate without re-parsing prose. Emission is deterministic: identical
pages serialize to identical bytes.
"""

from __future__ import annotations

import html
import json
import xml.etree.ElementTree as ET
from typing import Optional

from .compiler import (
    ChainData,
    CitationData,
    DescriptivePayload,
    GlossPayload,
    HeaderMemberData,
    LegendEntry,
    Page,
    RowSign,
    RubricLink,
    WordRef,
)

XML_DECL = '<?xml version="1.0" encoding="UTF-8"?>\n'


# ----------------------------------------------------------------- JSON ----

def page_to_json(page: Page) -> dict:
    def word(ref: WordRef) -> dict:
        return {"text": ref.text, "language": ref.language, "sense_id": ref.sense_id}

    def sign(s: Optional[RowSign]) -> Optional[dict]:
        if s is None:
            return None
        return {
            "uid": s.uid,
            "sign_type": s.sign_type,
            "glyph": s.glyph,
            "direction": s.direction,
            "level": s.level,
            "ru": word(s.ru),
            "bg": word(s.bg),
            "ir": s.ir,
            "ted_ru": s.ted_ru,
            "ted_bg": s.ted_bg,
            "warning_link": s.warning_link,
        }

    return {
        "slug": page.slug,
        "title": page.title,
        "header": {
            "kind": page.header_kind,
            "descriptive": page.header_descriptive,
            "members": [
                {
                    "lexeme_id": m.lexeme_id,
                    "lemma": m.lemma,
                    "language": m.language,
                    "format": m.format,
                }
                for m in page.header_members
            ],
            "connectors": list(page.header_connectors),
        },
        "row1": sign(page.row1),
        "rubric_links": [{"rubric": l.rubric, "url": l.url} for l in page.rubric_links],
        "row2": [sign(s) for s in page.row2],
        "row3": [sign(s) for s in page.row3],
        "row4": [sign(s) for s in page.row4],
        "row5": [sign(s) for s in page.row5],
        "payloads": [
            {
                "sense_id": p.sense_id,
                "lemma": p.lemma,
                "language": p.language,
                "gloss_ru": p.gloss_ru,
                "gloss_bg": p.gloss_bg,
                "color": p.color,
                "ir": p.ir,
                "ted": p.ted,
                "citations": [
                    {
                        "text": c.text,
                        "annotation": c.annotation,
                        "source": c.source,
                        "url": c.url,
                    }
                    for c in p.citations
                ],
                "idioms": list(p.idioms),
                "synonyms": list(p.synonyms),
            }
            for p in page.payloads
        ],
        "descriptive_payloads": [
            {"text": d.text, "language": d.language, "color": d.color}
            for d in page.descriptive_payloads
        ],
        "color_groups": [list(g) for g in page.color_groups],
        "chains": [
            {
                "links": [word(w) for w in c.links],
                "steps": [
                    {"sign": uid, "sign_type": st, "level": lv} for uid, st, lv in c.steps
                ],
                "terminal": c.terminal,
            }
            for c in page.chains
        ],
        "legend": [
            {"kind": e.kind, "key": e.key, "glyph": e.glyph, "label": e.label}
            for e in page.legend
        ],
        "popup_count": page.popup_count,
    }


def page_from_json(data: dict) -> Page:
    def word(d: dict) -> WordRef:
        return WordRef(text=d["text"], language=d["language"], sense_id=d["sense_id"])

    def sign(d: Optional[dict]) -> Optional[RowSign]:
        if d is None:
            return None
        return RowSign(
            uid=d["uid"],
            sign_type=d["sign_type"],
            glyph=d["glyph"],
            direction=d["direction"],
            level=d["level"],
            ru=word(d["ru"]),
            bg=word(d["bg"]),
            ir=d["ir"],
            ted_ru=d["ted_ru"],
            ted_bg=d["ted_bg"],
            warning_link=d["warning_link"],
        )

    header = data["header"]
    return Page(
        slug=data["slug"],
        title=data["title"],
        header_members=tuple(
            HeaderMemberData(m["lexeme_id"], m["lemma"], m["language"], m["format"])
            for m in header["members"]
        ),
        header_connectors=tuple(header["connectors"]),
        header_kind=header["kind"],
        header_descriptive=header["descriptive"],
        row1=sign(data["row1"]),
        rubric_links=tuple(
            RubricLink(l["rubric"], l["url"]) for l in data["rubric_links"]
        ),
        row2=tuple(sign(s) for s in data["row2"]),
        row3=tuple(sign(s) for s in data["row3"]),
        row4=tuple(sign(s) for s in data["row4"]),
        row5=tuple(sign(s) for s in data["row5"]),
        payloads=tuple(
            GlossPayload(
                sense_id=p["sense_id"],
                lemma=p["lemma"],
                language=p["language"],
                gloss_ru=p["gloss_ru"],
                gloss_bg=p["gloss_bg"],
                color=p["color"],
                ir=p["ir"],
                ted=p["ted"],
                citations=tuple(
                    CitationData(c["text"], c["annotation"], c["source"], c["url"])
                    for c in p["citations"]
                ),
                idioms=tuple(p["idioms"]),
                synonyms=tuple(p["synonyms"]),
            )
            for p in data["payloads"]
        ),
        descriptive_payloads=tuple(
            DescriptivePayload(d["text"], d["language"], d["color"])
            for d in data["descriptive_payloads"]
        ),
        color_groups=tuple(tuple(g) for g in data["color_groups"]),
        chains=tuple(
            ChainData(
                links=tuple(word(w) for w in c["links"]),
                steps=tuple(
                    (s["sign"], s["sign_type"], s["level"]) for s in c["steps"]
                ),
                terminal=c["terminal"],
            )
            for c in data["chains"]
        ),
        legend=tuple(
            LegendEntry(e["kind"], e["key"], e["glyph"], e["label"])
            for e in data["legend"]
        ),
        popup_count=data["popup_count"],
    )


def emit_page_json(page: Page) -> str:
    return json.dumps(page_to_json(page), ensure_ascii=False, indent=2, sort_keys=True) + "\n"


# ------------------------------------------------------------------ XML ----

def _sign_xml(parent: ET.Element, tag: str, s: RowSign) -> None:
    el = ET.SubElement(
        parent,
        tag,
        {
            "uid": s.uid,
            "type": s.sign_type,
            "glyph": s.glyph,
            "direction": s.direction,
            "level": str(s.level),
            "ir": s.ir,
            "ted-ru": s.ted_ru,
            "ted-bg": s.ted_bg,
            "warning-link": s.warning_link,
        },
    )
    for side, ref in (("ru", s.ru), ("bg", s.bg)):
        w = ET.SubElement(el, side, {"sense": ref.sense_id, "language": ref.language})
        w.text = ref.text


def emit_xml(page: Page) -> str:
    root = ET.Element(
        "page",
        {
            "slug": page.slug,
            "kind": page.header_kind,
            "title": page.title,
            "descriptive": page.header_descriptive,
            "popups": str(page.popup_count),
        },
    )
    header = ET.SubElement(root, "header")
    for m in page.header_members:
        ET.SubElement(
            header,
            "member",
            {
                "lexeme": m.lexeme_id,
                "lemma": m.lemma,
                "language": m.language,
                "format": m.format,
            },
        )
    for glyph in page.header_connectors:
        ET.SubElement(header, "connector", {"glyph": glyph})

    links = ET.SubElement(root, "links")
    for link in page.rubric_links:
        ET.SubElement(links, "link", {"rubric": link.rubric, "url": link.url})

    for index, row in enumerate(page.rows(), start=1):
        row_el = ET.SubElement(root, "row", {"n": str(index)})
        for s in row:
            _sign_xml(row_el, "sign", s)

    payloads = ET.SubElement(root, "payloads")
    for p in page.payloads:
        pl = ET.SubElement(
            payloads,
            "payload",
            {
                "sense": p.sense_id,
                "lemma": p.lemma,
                "language": p.language,
                "color": str(p.color),
                "ir": p.ir,
                "ted": p.ted,
            },
        )
        ru = ET.SubElement(pl, "gloss", {"lang": "ru"})
        ru.text = p.gloss_ru
        bg = ET.SubElement(pl, "gloss", {"lang": "bg"})
        bg.text = p.gloss_bg
        for c in p.citations:
            cit = ET.SubElement(
                pl, "citation", {"source": c.source, "annotation": c.annotation, "url": c.url}
            )
            cit.text = c.text
        for idiom in p.idioms:
            el = ET.SubElement(pl, "idiom")
            el.text = idiom
        for synonym in p.synonyms:
            el = ET.SubElement(pl, "synonym")
            el.text = synonym
    for d in page.descriptive_payloads:
        el = ET.SubElement(
            payloads, "descriptive", {"language": d.language, "color": str(d.color)}
        )
        el.text = d.text

    colors = ET.SubElement(root, "colors")
    for color, group in enumerate(page.color_groups):
        g = ET.SubElement(colors, "group", {"color": str(color)})
        for sid in group:
            ET.SubElement(g, "sense", {"id": sid})

    chains = ET.SubElement(root, "chains")
    for chain in page.chains:
        ch = ET.SubElement(chains, "chain", {"terminal": chain.terminal})
        for w in chain.links:
            link = ET.SubElement(
                ch, "chain-link", {"sense": w.sense_id, "language": w.language}
            )
            link.text = w.text
        for uid, sign_type, level in chain.steps:
            ET.SubElement(
                ch, "step", {"sign": uid, "type": sign_type, "level": str(level)}
            )

    legend = ET.SubElement(root, "legend")
    for e in page.legend:
        ET.SubElement(
            legend, "entry", {"kind": e.kind, "key": e.key, "glyph": e.glyph, "label": e.label}
        )

    body = ET.tostring(root, encoding="unicode")
    return XML_DECL + body + "\n"


def parse_xml(text: str) -> Page:
    root = ET.fromstring(text)

    def word(el: ET.Element) -> WordRef:
        return WordRef(
            text=el.text or "", language=el.get("language", ""), sense_id=el.get("sense", "")
        )

    def sign(el: ET.Element) -> RowSign:
        ru = word(el.find("ru"))
        bg = word(el.find("bg"))
        return RowSign(
            uid=el.get("uid", ""),
            sign_type=el.get("type", ""),
            glyph=el.get("glyph", ""),
            direction=el.get("direction", ""),
            level=int(el.get("level", "0")),
            ru=ru,
            bg=bg,
            ir=el.get("ir", ""),
            ted_ru=el.get("ted-ru", ""),
            ted_bg=el.get("ted-bg", ""),
            warning_link=el.get("warning-link", ""),
        )

    header = root.find("header")
    members = tuple(
        HeaderMemberData(
            m.get("lexeme", ""), m.get("lemma", ""), m.get("language", ""), m.get("format", "")
        )
        for m in header.findall("member")
    )
    connectors = tuple(c.get("glyph", "") for c in header.findall("connector"))

    rows: dict[int, tuple[RowSign, ...]] = {}
    for row_el in root.findall("row"):
        rows[int(row_el.get("n"))] = tuple(sign(s) for s in row_el.findall("sign"))

    payloads = []
    descriptive = []
    payload_root = root.find("payloads")
    for pl in payload_root.findall("payload"):
        glosses = {g.get("lang"): g.text or "" for g in pl.findall("gloss")}
        payloads.append(
            GlossPayload(
                sense_id=pl.get("sense", ""),
                lemma=pl.get("lemma", ""),
                language=pl.get("language", ""),
                gloss_ru=glosses.get("ru", ""),
                gloss_bg=glosses.get("bg", ""),
                color=int(pl.get("color", "-1")),
                ir=pl.get("ir", ""),
                ted=pl.get("ted", ""),
                citations=tuple(
                    CitationData(
                        c.text or "", c.get("annotation", ""), c.get("source", ""), c.get("url", "")
                    )
                    for c in pl.findall("citation")
                ),
                idioms=tuple(i.text or "" for i in pl.findall("idiom")),
                synonyms=tuple(s.text or "" for s in pl.findall("synonym")),
            )
        )
    for d in payload_root.findall("descriptive"):
        descriptive.append(
            DescriptivePayload(
                text=d.text or "", language=d.get("language", ""), color=int(d.get("color", "-1"))
            )
        )

    color_groups = tuple(
        tuple(s.get("id", "") for s in g.findall("sense"))
        for g in root.find("colors").findall("group")
    )

    chains = tuple(
        ChainData(
            links=tuple(word(w) for w in ch.findall("chain-link")),
            steps=tuple(
                (s.get("sign", ""), s.get("type", ""), int(s.get("level", "0")))
                for s in ch.findall("step")
            ),
            terminal=ch.get("terminal", ""),
        )
        for ch in root.find("chains").findall("chain")
    )

    legend = tuple(
        LegendEntry(
            e.get("kind", ""), e.get("key", ""), e.get("glyph", ""), e.get("label", "")
        )
        for e in root.find("legend").findall("entry")
    )

    row1_signs = rows.get(1, ())
    return Page(
        slug=root.get("slug", ""),
        title=root.get("title", ""),
        header_members=members,
        header_connectors=connectors,
        header_kind=root.get("kind", ""),
        header_descriptive=root.get("descriptive", ""),
        row1=row1_signs[0] if row1_signs else None,
        rubric_links=tuple(
            RubricLink(l.get("rubric", ""), l.get("url", ""))
            for l in root.find("links").findall("link")
        ),
        row2=rows.get(2, ()),
        row3=rows.get(3, ()),
        row4=rows.get(4, ()),
        row5=rows.get(5, ()),
        payloads=tuple(payloads),
        descriptive_payloads=tuple(descriptive),
        color_groups=color_groups,
        chains=chains,
        legend=legend,
        popup_count=int(root.get("popups", "0")),
    )


# ----------------------------------------------------------------- HTML ----

def _esc(value: str) -> str:
    return html.escape(value, quote=True)


def _word_span(ref: WordRef, page: Page, extra_class: str = "", url: str = "") -> str:
    colors = {p.sense_id: p.color for p in page.payloads}
    classes = "word" + (f" {extra_class}" if extra_class else "")
    attrs = [f'class="{classes}"', f'data-language="{_esc(ref.language)}"']
    if ref.sense_id:
        attrs.append(f'data-sense-id="{_esc(ref.sense_id)}"')
        attrs.append(f'data-color="{colors.get(ref.sense_id, -1)}"')
    else:
        attrs.append('data-descriptive="1"')
    if url:
        attrs.append(f'data-url="{_esc(url)}"')
    return f"<span {' '.join(attrs)}>{_esc(ref.text)}</span>"


def _sign_html(s: RowSign, page: Page, warning: bool = False) -> str:
    parts = [
        f'<div class="pair" data-sign-uid="{_esc(s.uid)}" data-sign-type="{_esc(s.sign_type)}" '
        f'data-level="{s.level}" data-direction="{_esc(s.direction)}">'
    ]
    if s.ted_ru:
        parts.append(f'<span class="ted ted-left">{_esc(s.ted_ru)}</span>')
    # the source link belongs to the interloper word, not the header member
    header_lemmas = {m.lemma for m in page.header_members}

    def link_for(ref: WordRef) -> str:
        if warning and ref.sense_id and ref.text not in header_lemmas:
            return s.warning_link
        return ""

    extra = "warning" if warning else ""
    parts.append(_word_span(s.ru, page, extra, link_for(s.ru)))
    parts.append(f'<span class="ideogram">{_esc(s.glyph)}</span>')
    parts.append(_word_span(s.bg, page, extra, link_for(s.bg)))
    if s.ir:
        parts.append(f'<span class="ir">ИР = ({_esc(s.ir)})</span>')
    if s.ted_bg:
        parts.append(f'<span class="ted ted-right">{_esc(s.ted_bg)}</span>')
    parts.append("</div>")
    return "".join(parts)


def emit_html(page: Page) -> str:
    out: list[str] = []
    out.append("<!DOCTYPE html>")
    out.append('<html lang="ru">')
    out.append("<head>")
    out.append('<meta charset="utf-8"/>')
    out.append(f"<title>{_esc(page.title)}</title>")
    out.append('<link rel="stylesheet" href="../assets/page.css"/>')
    out.append("</head>")
    out.append(f'<body data-page-slug="{_esc(page.slug)}" data-page-kind="{_esc(page.header_kind)}">')

    # Header line: members with their formats, connectors, optional tail.
    title_bits: list[str] = []
    members = list(page.header_members)
    connectors = list(page.header_connectors)
    for i, m in enumerate(members):
        upper = m.lemma.upper()
        shown = {"plain": upper, "parenthesized": f"({upper})", "bracketed": f"[{upper}]"}[m.format]
        if i > 0 and i - 1 < len(connectors) and connectors[i - 1]:
            title_bits.append(f'<span class="ideogram">{_esc(connectors[i - 1])}</span>')
        title_bits.append(
            f'<span class="headword" data-lexeme-id="{_esc(m.lexeme_id)}" '
            f'data-language="{_esc(m.language)}">{_esc(shown)}</span>'
        )
    if page.header_kind == "disjunctive":
        title_bits.append('<span class="ideogram">■■</span>')
    if page.header_descriptive:
        title_bits.append('<span class="ideogram">●</span>')
        text = page.header_descriptive
        title_bits.append(
            f'<span class="headword descriptive" data-descriptive="1">'
            f"{_esc(text[:1].upper() + text[1:])}</span>"
        )
    out.append(f'<header class="page-header"><h1>{" ".join(title_bits)}</h1></header>')

    out.append('<main class="rows">')
    # Row 1: nodal sign centered, corpus links flanking, rubric links after.
    out.append('<section class="row" id="row-1" data-row="1">')
    left = [l for l in page.rubric_links if l.rubric == "НКРЯ"]
    right = [l for l in page.rubric_links if l.rubric == "БНК"]
    rest = [l for l in page.rubric_links if l.rubric not in ("НКРЯ", "БНК")]
    for l in left:
        out.append(f'<a class="rubric rubric-left" href="{_esc(l.url)}">{_esc(l.rubric)}</a>')
    if page.row1 is not None:
        out.append(_sign_html(page.row1, page))
    for l in right:
        out.append(f'<a class="rubric rubric-right" href="{_esc(l.url)}">{_esc(l.rubric)}</a>')
    out.append('<span class="rubrics-extra">')
    for l in rest:
        out.append(f'<a class="rubric" href="{_esc(l.url)}">{_esc(l.rubric)}</a>')
    out.append("</span>")
    out.append("</section>")

    out.append('<div class="polarization" data-level="1">П¹</div>')
    for n, row in ((2, page.row2), (3, page.row3), (4, page.row4), (5, page.row5)):
        if n == 4:
            out.append('<div class="polarization" data-level="2">П²</div>')
        out.append(f'<section class="row" id="row-{n}" data-row="{n}">')
        for s in row:
            out.append(_sign_html(s, page, warning=(n == 5)))
        out.append("</section>")
    out.append("</main>")

    out.append('<hr class="rule"/>')
    out.append('<footer class="reference-base"><table><tbody>')
    legend = list(page.legend)
    for i in range(0, len(legend), 4):
        cells = legend[i : i + 4]
        row_html = "".join(
            f'<td class="legend-cell" data-kind="{_esc(e.kind)}" data-key="{_esc(e.key)}">'
            f'<span class="legend-glyph">{_esc(e.glyph)}</span> '
            f'<span class="legend-label">{_esc(e.label)}</span></td>'
            for e in cells
        )
        out.append(f"<tr>{row_html}</tr>")
    out.append("</tbody></table></footer>")

    # Inline pop-up payloads: no further fetch needed for any gloss.
    out.append('<section id="popups" hidden>')
    for p in page.payloads:
        out.append(
            f'<div class="popup-payload" data-for-sense="{_esc(p.sense_id)}" '
            f'data-color="{p.color}">'
        )
        out.append(f'<div class="popup-lemma">{_esc(p.lemma)}</div>')
        out.append(f'<div class="gloss gloss-ru">{_esc(p.gloss_ru)}</div>')
        out.append(f'<div class="gloss gloss-bg">{_esc(p.gloss_bg)}</div>')
        if p.ir:
            out.append(f'<div class="popup-ir">ИР = ({_esc(p.ir)})</div>')
        if p.ted:
            out.append(f'<div class="popup-ted">ТЭД: {_esc(p.ted)}</div>')
        for c in p.citations:
            ann = f' data-annotation="{_esc(c.annotation)}"' if c.annotation else ""
            out.append(
                f'<blockquote class="citation" data-source="{_esc(c.source)}"{ann}>'
                f"{_esc(c.text)}</blockquote>"
            )
        if p.idioms:
            out.append(
                '<div class="idioms">' + "; ".join(_esc(i) for i in p.idioms) + "</div>"
            )
        if p.synonyms:
            out.append(
                '<div class="synonyms">СИН: ' + ", ".join(_esc(s) for s in p.synonyms) + "</div>"
            )
        out.append("</div>")
    for d in page.descriptive_payloads:
        out.append(
            f'<div class="popup-payload" data-for-descriptive="{_esc(d.text)}" '
            f'data-color="{d.color}"><div class="gloss">{_esc(d.text)}</div></div>'
        )
    out.append("</section>")

    payload_json = json.dumps(page_to_json(page), ensure_ascii=False, sort_keys=True)
    out.append(
        '<script type="application/json" id="page-data">'
        + payload_json.replace("</", "<\\/")
        + "</script>"
    )
    out.append("</body></html>")
    return "\n".join(out) + "\n"


PAGE_CSS = """\
body { font-family: Georgia, 'Times New Roman', serif; margin: 1.2em auto; max-width: 72em; }
.page-header h1 { text-align: center; letter-spacing: 0.06em; }
.rows .row { display: flex; justify-content: center; gap: 2.5em; min-height: 1.6em;
             flex-wrap: wrap; align-items: baseline; }
.polarization { text-align: center; color: #666; font-weight: bold; }
.pair { white-space: nowrap; }
.word { cursor: pointer; border-bottom: 1px dotted #888; }
.word.warning { color: #8a2a2a; }
.ideogram { margin: 0 0.35em; }
.ir, .ted { font-size: 0.85em; color: #444; margin-left: 0.8em; }
.rubric { font-size: 0.85em; margin: 0 0.4em; }
hr.rule { margin-top: 1.5em; }
.reference-base { font-size: 0.8em; color: #333; }
.reference-base td { padding: 0.15em 1em 0.15em 0; }
#popups .popup-payload { border: 1px solid #999; background: #fffdf4; padding: 0.5em;
                         max-width: 28em; }
.popup-open { position: absolute; z-index: 10; display: block !important; }
"""
