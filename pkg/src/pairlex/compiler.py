"""Assembly of the five-row page structure from a header and its chains.

The compiled :class:`Page` holds plain strings and integers only, which keeps
the XML emission lossless (parse(emit(page)) == page) and lets the HTML
document carry every pop-up payload inline. Layout:

    row 1   nodal pair centered, corpus/rubric links, IR and TED
    row 2   co-positioned signs of the first polarization level
    row 3   terminal synchronous pairs (each heads a page of its own)
    row 4   diffuse signs (descriptive equivalents)
    row 5   false and empty warnings with external source links

Below the rows sits the static reference base (legend). Colors tie the two
glosses of each correspondence group together; groups are the connected
components of displayed equivalence signs, at most 12 distinct colors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .chains import ChainTerminal, ImplicativeChain, assign_polarization, build_chains
from .classify import BinarySign, SignGraph, SignType, WARNING_TYPES
from .model import (
    DescriptiveEquivalent,
    Diagnostic,
    LexiconModel,
    LINK_RUBRICS,
    Sense,
)
from .pages import (
    DEFAULT_GLYPHS,
    Ideogram,
    PageHeader,
    SIGN_IDEOGRAMS,
    format_header,
    legend_entries,
)
from .translit import collation_key

MAX_COLORS = 12
NO_COLOR = -1


class PageBuildError(Exception):
    """A page violates self-sufficiency (e.g. a displayed sense lacks a gloss)."""


@dataclass(frozen=True, eq=True)
class WordRef:
    """One displayed word: a sense occurrence or a descriptive equivalent."""

    text: str
    language: str
    sense_id: str = ""  # empty for descriptive equivalents

    @property
    def is_descriptive(self) -> bool:
        return self.sense_id == ""


@dataclass(frozen=True, eq=True)
class RowSign:
    uid: str
    sign_type: str
    glyph: str
    direction: str
    level: int
    ru: WordRef
    bg: WordRef
    ir: str = ""
    ted_ru: str = ""
    ted_bg: str = ""
    warning_link: str = ""


@dataclass(frozen=True, eq=True)
class CitationData:
    text: str
    annotation: str = ""
    source: str = "other"
    url: str = ""


@dataclass(frozen=True, eq=True)
class GlossPayload:
    sense_id: str
    lemma: str
    language: str
    gloss_ru: str
    gloss_bg: str
    color: int = NO_COLOR
    ir: str = ""
    ted: str = ""
    citations: tuple[CitationData, ...] = ()
    idioms: tuple[str, ...] = ()
    synonyms: tuple[str, ...] = ()


@dataclass(frozen=True, eq=True)
class DescriptivePayload:
    text: str
    language: str
    color: int = NO_COLOR


@dataclass(frozen=True, eq=True)
class HeaderMemberData:
    lexeme_id: str
    lemma: str
    language: str
    format: str


@dataclass(frozen=True, eq=True)
class LegendEntry:
    kind: str
    key: str
    glyph: str
    label: str


@dataclass(frozen=True, eq=True)
class ChainData:
    links: tuple[WordRef, ...]
    steps: tuple[tuple[str, str, int], ...]  # (sign uid, sign type, level)
    terminal: str


@dataclass(frozen=True, eq=True)
class RubricLink:
    rubric: str
    url: str


@dataclass(frozen=True, eq=True)
class Page:
    slug: str
    title: str
    header_members: tuple[HeaderMemberData, ...]
    header_connectors: tuple[str, ...]  # glyphs, "" for bare juxtaposition
    header_kind: str
    header_descriptive: str
    row1: Optional[RowSign]
    rubric_links: tuple[RubricLink, ...]
    row2: tuple[RowSign, ...]
    row3: tuple[RowSign, ...]
    row4: tuple[RowSign, ...]
    row5: tuple[RowSign, ...]
    payloads: tuple[GlossPayload, ...]
    descriptive_payloads: tuple[DescriptivePayload, ...]
    color_groups: tuple[tuple[str, ...], ...]  # index = color, values = sense ids
    chains: tuple[ChainData, ...]
    legend: tuple[LegendEntry, ...]
    popup_count: int

    def rows(self) -> tuple[tuple[RowSign, ...], ...]:
        row1 = (self.row1,) if self.row1 is not None else ()
        return (row1, self.row2, self.row3, self.row4, self.row5)

    def displayed_sense_ids(self) -> set[str]:
        ids: set[str] = set()
        for row in self.rows():
            for sign in row:
                for ref in (sign.ru, sign.bg):
                    if ref.sense_id:
                        ids.add(ref.sense_id)
        return ids

    def payload_sense_ids(self) -> set[str]:
        return {p.sense_id for p in self.payloads}


def _word_ref(side, model: LexiconModel) -> WordRef:
    if isinstance(side, DescriptiveEquivalent):
        return WordRef(text=side.text, language=side.language.value)
    lexeme = model.lexeme_of(side)
    return WordRef(text=lexeme.lemma, language=lexeme.language.value, sense_id=side.id)


def _sign_ir(sign: BinarySign) -> str:
    for side in (sign.ru, sign.bg):
        if isinstance(side, Sense) and side.ir is not None:
            return side.ir.display()
    return ""


def _side_ted(side) -> str:
    if isinstance(side, Sense) and side.ted is not None:
        return side.ted.label()
    return ""


def _row_sign(
    sign: BinarySign,
    level: int,
    model: LexiconModel,
    glyphs: dict[Ideogram, str],
    warning_link: str = "",
) -> RowSign:
    warning = sign.sign_type in WARNING_TYPES
    return RowSign(
        uid=sign.uid,
        sign_type=sign.sign_type.value,
        glyph=glyphs[SIGN_IDEOGRAMS[sign.sign_type]],
        direction=sign.direction.value,
        level=level,
        ru=_word_ref(sign.ru, model),
        bg=_word_ref(sign.bg, model),
        # a non-equivalent pair shares no result index or scheme fragment
        ir="" if warning else _sign_ir(sign),
        ted_ru="" if warning else _side_ted(sign.ru),
        ted_bg="" if warning else _side_ted(sign.bg),
        warning_link=warning_link,
    )


def _payload(sense: Sense, model: LexiconModel, color: int) -> GlossPayload:
    lexeme = model.lexeme_of(sense)
    if not sense.gloss_ru.strip() or not sense.gloss_bg.strip():
        raise PageBuildError(
            f"sense {sense.id} is displayed but lacks a bilingual gloss payload"
        )
    return GlossPayload(
        sense_id=sense.id,
        lemma=lexeme.lemma,
        language=lexeme.language.value,
        gloss_ru=sense.gloss_ru,
        gloss_bg=sense.gloss_bg,
        color=color,
        ir=sense.ir.display() if sense.ir else "",
        ted=sense.ted.label() if sense.ted else "",
        citations=tuple(
            CitationData(c.text, c.annotation or "", c.source.value, c.url or "")
            for c in sense.citations
        ),
        idioms=sense.idioms,
        synonyms=sense.synonyms,
    )


def assign_colors(
    signs: list[BinarySign], model: LexiconModel
) -> tuple[dict[str, int], list[tuple[str, ...]], list[Diagnostic]]:
    """Union corresponding senses into groups; one color per group, max 12.

    Returns (sense id -> color, groups by color, diagnostics). Color order
    follows first appearance in the given sign order, so it is deterministic.
    """
    parent: dict[str, str] = {}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: str, b: str) -> None:
        parent.setdefault(a, a)
        parent.setdefault(b, b)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    ordered_members: list[str] = []
    for sign in signs:
        if sign.sign_type in WARNING_TYPES:
            continue
        senses = [s.id for s in sign.senses()]
        for sid in senses:
            parent.setdefault(sid, sid)
            ordered_members.append(sid)
        if len(senses) == 2:
            union(senses[0], senses[1])

    groups: dict[str, list[str]] = {}
    group_order: list[str] = []
    for sid in ordered_members:
        root = find(sid)
        if root not in groups:
            groups[root] = []
            group_order.append(root)
        if sid not in groups[root]:
            groups[root].append(sid)

    colors: dict[str, int] = {}
    color_groups: list[tuple[str, ...]] = []
    diagnostics: list[Diagnostic] = []
    for i, root in enumerate(group_order):
        color = i % MAX_COLORS
        if i == MAX_COLORS:
            diagnostics.append(
                Diagnostic(
                    "colors.reuse", root,
                    f"{len(group_order)} correspondence groups exceed the "
                    f"{MAX_COLORS}-color palette; colors repeat round-robin",
                )
            )
        for sid in groups[root]:
            colors[sid] = color
        if i < MAX_COLORS:
            color_groups.append(tuple(sorted(groups[root])))
        else:
            color_groups[color] = tuple(sorted(color_groups[color] + tuple(groups[root])))
    return colors, color_groups, diagnostics


def compile_page(
    header: PageHeader,
    graph: SignGraph,
    model: LexiconModel,
    *,
    max_chain_depth: int = 4,
    glyphs: dict[Ideogram, str] = DEFAULT_GLYPHS,
) -> tuple[Page, list[ImplicativeChain], list[Diagnostic]]:
    diagnostics: list[Diagnostic] = []

    header_sign_uids = {s.uid for s in header.signs}
    anchor_senses: list[Sense] = []
    for sign in header.signs:
        for sense in sign.senses():
            if sense not in anchor_senses:
                anchor_senses.append(sense)
    if header.kind == "disjunctive":
        lexeme = model.lexemes[header.members[0].lexeme_id]
        anchor_senses = [s for s in lexeme.senses if s.rank == 1] or list(lexeme.senses)

    chains, chain_diags = build_chains(
        anchor_senses, header_sign_uids, graph, model, max_depth=max_chain_depth
    )
    diagnostics.extend(chain_diags)
    levels = assign_polarization(chains)

    # Deterministic placement order: level, then first chain, then uid.
    anchor_index: dict[str, int] = {}
    for ci, chain in enumerate(chains):
        for step in chain.steps:
            anchor_index.setdefault(step.sign.uid, ci)

    def order_key(sign: BinarySign) -> tuple:
        return (
            levels.get(sign.uid, 0),
            anchor_index.get(sign.uid, 1_000_000),
            sign.uid,
        )

    placed: dict[str, BinarySign] = {}
    terminal_sync: list[BinarySign] = []
    for chain in chains:
        for step in chain.steps:
            placed.setdefault(step.sign.uid, step.sign)
        if chain.terminal is ChainTerminal.SYNCHRONOUS_PAIR and chain.steps:
            last = chain.steps[-1].sign
            if last not in terminal_sync:
                terminal_sync.append(last)

    row2_signs = sorted(
        (
            s
            for s in placed.values()
            if s.sign_type in (SignType.ASYNCHRONOUS, SignType.DISJUNCTIVE)
            and levels.get(s.uid) == 1
        ),
        key=order_key,
    )
    row3_signs = sorted(terminal_sync, key=order_key)
    row4_signs = sorted(
        (s for s in placed.values() if s.sign_type is SignType.DIFFUSE),
        key=order_key,
    )

    header_lexemes = set(header.lexeme_ids)

    def warning_word(sign: BinarySign) -> str:
        outsider = next(
            (s for s in sign.senses() if s.lexeme_id not in header_lexemes), None
        )
        return model.lexeme_of(outsider).lemma if outsider is not None else ""

    row5_signs = sorted(
        (
            s
            for s in graph.signs
            if s.sign_type in WARNING_TYPES
            and any(sense.lexeme_id in header_lexemes for sense in s.senses())
        ),
        key=lambda s: (s.sign_type.value, collation_key(warning_word(s)), s.uid),
    )

    # The asynchronous-sign guarantee: every placed async sign must lie on a
    # synchronous-terminated chain unless that chain was cut.
    for sign in placed.values():
        if sign.sign_type is not SignType.ASYNCHRONOUS:
            continue
        closing = [
            c for c in chains
            if sign.uid in c.sign_uids() and c.terminal is ChainTerminal.SYNCHRONOUS_PAIR
        ]
        cut = [
            c for c in chains
            if sign.uid in c.sign_uids() and c.terminal is ChainTerminal.CUT_BY_NEUTRAL
        ]
        if not closing and cut:
            diagnostics.append(
                Diagnostic(
                    "chain.unclosed", sign.uid,
                    "asynchronous sign reaches no terminal synchronous pair (chain cut)",
                )
            )

    # Colors over header + placed signs, in display order.
    color_input: list[BinarySign] = list(header.signs)
    for sign in row2_signs + row3_signs + row4_signs:
        if sign.uid not in {s.uid for s in color_input}:
            color_input.append(sign)
    for sign in sorted(placed.values(), key=order_key):
        if sign.uid not in {s.uid for s in color_input}:
            color_input.append(sign)
    colors, color_groups, color_diags = assign_colors(color_input, model)
    diagnostics.extend(color_diags)

    # Pop-up payloads: every sense displayed on a row plus every chain link.
    payload_senses: dict[str, Sense] = {}
    for sign in color_input + row5_signs:
        for sense in sign.senses():
            payload_senses.setdefault(sense.id, sense)
    for chain in chains:
        for sense in chain.links:
            payload_senses.setdefault(sense.id, sense)
    payloads = tuple(
        _payload(payload_senses[sid], model, colors.get(sid, NO_COLOR))
        for sid in sorted(payload_senses)
    )

    descriptive_payloads: list[DescriptivePayload] = []
    seen_descr: set[str] = set()
    for sign in color_input:
        descr = sign.descriptive
        if descr is None or descr.text in seen_descr:
            continue
        seen_descr.add(descr.text)
        unique = sign.unique_sense
        color = colors.get(unique.id, NO_COLOR) if unique is not None else NO_COLOR
        descriptive_payloads.append(
            DescriptivePayload(text=descr.text, language=descr.language.value, color=color)
        )

    row1 = None
    if header.signs:
        primary = header.signs[0]
        row1 = _row_sign(primary, 0, model, glyphs)

    rubric_links = tuple(
        RubricLink(rubric, model.rubric_links[rubric])
        for rubric in LINK_RUBRICS
        if rubric in model.rubric_links
    )

    def warning_row(sign: BinarySign) -> RowSign:
        outsider = next(
            (s for s in sign.senses() if s.lexeme_id not in header_lexemes), None
        )
        link = ""
        if outsider is not None:
            link = model.word_links.get(model.lexeme_of(outsider).lemma, "")
        return _row_sign(sign, levels.get(sign.uid, 0), model, glyphs, warning_link=link)

    row2 = tuple(_row_sign(s, levels.get(s.uid, 1), model, glyphs) for s in row2_signs)
    row3 = tuple(_row_sign(s, levels.get(s.uid, 1), model, glyphs) for s in row3_signs)
    row4 = tuple(_row_sign(s, levels.get(s.uid, 1), model, glyphs) for s in row4_signs)
    row5 = tuple(warning_row(s) for s in row5_signs)

    chain_data = tuple(
        ChainData(
            links=tuple(_word_ref(s, model) for s in chain.links),
            steps=tuple(
                (st.sign.uid, st.sign.sign_type.value, st.level) for st in chain.steps
            ),
            terminal=chain.terminal.value,
        )
        for chain in chains
    )

    legend = tuple(LegendEntry(**e) for e in legend_entries(glyphs))

    member_data = tuple(
        HeaderMemberData(m.lexeme_id, m.lemma, m.language.value, m.format.value)
        for m in header.members
    )
    connector_glyphs = tuple(
        glyphs[c] if c is not None else "" for c in header.connectors
    )

    # Pop-up inventory: glosses, descriptive payloads, citations, per-sign
    # IR/TED notes, rubric links, legend cells.
    citation_count = sum(len(p.citations) for p in payloads)
    sign_rows = [row1] if row1 else []
    sign_rows += list(row2) + list(row3) + list(row4) + list(row5)
    ir_ted_count = sum(1 for s in sign_rows if s.ir) + sum(
        1 for s in sign_rows if s.ted_ru or s.ted_bg
    )
    popup_count = (
        len(payloads)
        + len(descriptive_payloads)
        + citation_count
        + ir_ted_count
        + len(rubric_links)
        + len(legend)
    )

    page = Page(
        slug=header.slug(),
        title=format_header(header, glyphs),
        header_members=member_data,
        header_connectors=connector_glyphs,
        header_kind=header.kind,
        header_descriptive=header.descriptive.text if header.descriptive else "",
        row1=row1,
        rubric_links=rubric_links,
        row2=row2,
        row3=row3,
        row4=row4,
        row5=row5,
        payloads=payloads,
        descriptive_payloads=tuple(descriptive_payloads),
        color_groups=tuple(color_groups),
        chains=chain_data,
        legend=legend,
        popup_count=popup_count,
    )

    missing = page.displayed_sense_ids() - page.payload_sense_ids()
    if missing:
        raise PageBuildError(f"page {page.slug}: displayed senses without payloads: {sorted(missing)}")

    return page, chains, diagnostics
