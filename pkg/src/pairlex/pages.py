"""Header selection and five-row page compilation.

A page is compiled into a pure-data structure (strings and integers only) so
that the XML serialization round-trips it exactly and the HTML document can
embed every pop-up payload inline. Header priority per lemma:

    TED-relevant homogeneous > TED-relevant heterogeneous
    > scheme-neutral synchronous (only lemmas inside the scheme drive these)
    > diffuse (the unique word heads with its descriptive equivalent)
    > disjunctive (the unique word heads alone)

Asynchronous, false and empty signs never head a page. Synchronous signs
selected for two lemmas collapse into one page; signs sharing a member sense
merge into multi-member headers (dublets), with dated dublets bracketed and
prepended.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .classify import BinarySign, SignGraph, SignType, SYNCHRONOUS_TYPES
from .model import (
    DescriptiveEquivalent,
    Diagnostic,
    Language,
    Lexeme,
    LexiconModel,
    Sense,
)
from .translit import slug_from_lemmas


class Ideogram(str, Enum):
    FILLED_SQUARE = "filled_square"
    OPEN_SQUARE = "open_square"
    ASYNC_MARK = "async_mark"
    DISJUNCTIVE_MARK = "disjunctive_mark"
    FILLED_CIRCLE = "filled_circle"
    FALSE_MARK = "false_mark"
    EMPTY_MARK = "empty_mark"
    POLARIZATION_START = "polarization_start"
    POLARIZATION_STEP = "polarization_step"
    DIRECTION_ARROW = "direction_arrow"


# Sign type -> ideogram is total and injective over the seven sign glyphs.
SIGN_IDEOGRAMS: dict[SignType, Ideogram] = {
    SignType.SYNCHRONOUS_HOMOGENEOUS: Ideogram.FILLED_SQUARE,
    SignType.SYNCHRONOUS_HETEROGENEOUS: Ideogram.OPEN_SQUARE,
    SignType.ASYNCHRONOUS: Ideogram.ASYNC_MARK,
    SignType.DISJUNCTIVE: Ideogram.DISJUNCTIVE_MARK,
    SignType.DIFFUSE: Ideogram.FILLED_CIRCLE,
    SignType.FALSE: Ideogram.FALSE_MARK,
    SignType.EMPTY: Ideogram.EMPTY_MARK,
}

# Placeholder glyphs; the figures carrying the originals are an asset choice.
DEFAULT_GLYPHS: dict[Ideogram, str] = {
    Ideogram.FILLED_SQUARE: "■",
    Ideogram.OPEN_SQUARE: "□",
    Ideogram.ASYNC_MARK: "◪",
    Ideogram.DISJUNCTIVE_MARK: "■■",
    Ideogram.FILLED_CIRCLE: "●",
    Ideogram.FALSE_MARK: "✗",
    Ideogram.EMPTY_MARK: "○",
    Ideogram.POLARIZATION_START: "П¹",
    Ideogram.POLARIZATION_STEP: "П²",
    Ideogram.DIRECTION_ARROW: "→",
}

# Reference-base legend: the ideogram and abbreviation entries of the page
# footer, in reading order (two ideogram columns, then two abbreviation ones).
LEGEND_IDEOGRAMS: tuple[tuple[Ideogram, str], ...] = (
    (Ideogram.POLARIZATION_START, "Начало поляризации"),
    (Ideogram.POLARIZATION_STEP, "Ступень поляризации"),
    (Ideogram.FALSE_MARK, "Ложный знак (аналог)"),
    (Ideogram.DIRECTION_ARROW, "Направление связи"),
    (Ideogram.FILLED_SQUARE, "Синхронный гомогенный"),
    (Ideogram.OPEN_SQUARE, "Синхронный гетерогенный"),
    (Ideogram.ASYNC_MARK, "Асинхронный знак"),
    (Ideogram.DISJUNCTIVE_MARK, "Дизъюнктивный знак"),
    (Ideogram.FILLED_CIRCLE, "Диффузный знак"),
    (Ideogram.EMPTY_MARK, "Пустой знак"),
)
LEGEND_ABBREVIATIONS: tuple[tuple[str, str], ...] = (
    ("СИН", "Синонимы"),
    ("ФР", "Фразеологизмы"),
    ("АСС", "Ассоциации"),
    ("МОРФ", "Морфологический анализ"),
    ("ПЗ", "Полезно знать"),
    ("НКРЯ", "Руски езиков корпус"),
    ("БНК", "Български езиков корпус"),
    ("ТЭД", "Тип експансивного действия"),
    ("СС", "Соположенные слова"),
    ("ИР", "Индекс результата"),
)


def legend_entries(glyphs: dict[Ideogram, str] = DEFAULT_GLYPHS) -> list[dict]:
    entries = [
        {"kind": "ideogram", "key": ideo.value, "glyph": glyphs[ideo], "label": label}
        for ideo, label in LEGEND_IDEOGRAMS
    ]
    entries.extend(
        {"kind": "abbreviation", "key": key, "glyph": key, "label": label}
        for key, label in LEGEND_ABBREVIATIONS
    )
    return entries


class MemberFormat(str, Enum):
    PLAIN = "plain"
    PARENTHESIZED = "parenthesized"  # partner wholly outside the scheme
    BRACKETED = "bracketed"  # dated dublet


@dataclass(frozen=True)
class HeaderMember:
    lexeme_id: str
    lemma: str
    language: Language
    format: MemberFormat

    def display(self) -> str:
        upper = self.lemma.upper()
        if self.format is MemberFormat.PARENTHESIZED:
            return f"({upper})"
        if self.format is MemberFormat.BRACKETED:
            return f"[{upper}]"
        return upper


@dataclass(frozen=True)
class PageHeader:
    """1-3 lexemes with connector ideograms; diffuse headers carry a tail."""

    members: tuple[HeaderMember, ...]
    connectors: tuple[Optional[Ideogram], ...]  # between consecutive members
    descriptive: Optional[DescriptiveEquivalent] = None
    signs: tuple[BinarySign, ...] = ()  # header signs, primary first
    kind: str = "synchronous"  # synchronous | diffuse | disjunctive

    @property
    def lemmas(self) -> tuple[str, ...]:
        return tuple(m.lemma for m in self.members)

    @property
    def lexeme_ids(self) -> tuple[str, ...]:
        return tuple(m.lexeme_id for m in self.members)

    def slug(self) -> str:
        return slug_from_lemmas(self.lemmas)


class HeaderError(Exception):
    pass


def format_header(header: PageHeader, glyphs: dict[Ideogram, str] = DEFAULT_GLYPHS) -> str:
    """Canonical display string (upper-case Cyrillic plus ideograms)."""
    parts: list[str] = [header.members[0].display()]
    for member, connector in zip(header.members[1:], header.connectors):
        if connector is not None:
            parts.append(glyphs[connector])
        parts.append(member.display())
    if header.kind == "disjunctive":
        parts.append(glyphs[Ideogram.DISJUNCTIVE_MARK])
    if header.descriptive is not None:
        parts.append(glyphs[Ideogram.FILLED_CIRCLE])
        text = header.descriptive.text
        parts.append(text[:1].upper() + text[1:])
    return " ".join(parts)


def _member(lexeme: Lexeme, fmt: MemberFormat) -> HeaderMember:
    return HeaderMember(lexeme.id, lexeme.lemma, lexeme.language, fmt)


def _member_format(lexeme: Lexeme) -> MemberFormat:
    if lexeme.dated:
        return MemberFormat.BRACKETED
    if not lexeme.in_scheme:
        return MemberFormat.PARENTHESIZED
    return MemberFormat.PLAIN


def _ted_relevant(sign: BinarySign) -> bool:
    return any(s.ted is not None for s in sign.senses())


def _sign_score(sign: BinarySign) -> Optional[int]:
    """Header priority; lower is better, None is ineligible."""
    if sign.sign_type is SignType.SYNCHRONOUS_HOMOGENEOUS:
        return 0 if _ted_relevant(sign) else 2
    if sign.sign_type is SignType.SYNCHRONOUS_HETEROGENEOUS:
        return 1 if _ted_relevant(sign) else 3
    if sign.sign_type is SignType.DIFFUSE:
        return 4
    if sign.sign_type is SignType.DISJUNCTIVE:
        return 5
    return None


def _stable_key(sign: BinarySign) -> tuple:
    return (sign.declared_index if sign.declared_index is not None else 1_000_000, sign.uid)


def select_headers(
    model: LexiconModel, graph: SignGraph
) -> tuple[list[PageHeader], list[Diagnostic]]:
    diagnostics: list[Diagnostic] = []
    best_per_lexeme: dict[str, BinarySign] = {}

    for lexeme_id in sorted(model.lexemes):
        lexeme = model.lexemes[lexeme_id]
        candidates: list[tuple[int, tuple, BinarySign]] = []
        for sign in graph.of_lexeme(lexeme_id):
            score = _sign_score(sign)
            if score is None:
                continue
            if score in (2, 3) and not lexeme.in_scheme:
                continue  # scheme-neutral sync pairs need an in-scheme driver
            if sign.sign_type in (SignType.DIFFUSE, SignType.DISJUNCTIVE):
                unique = sign.unique_sense
                if unique is None or unique.lexeme_id != lexeme_id:
                    continue  # only the unique member heads
            candidates.append((score, _stable_key(sign), sign))
        if not candidates:
            if graph.of_lexeme(lexeme_id):
                diagnostics.append(
                    Diagnostic(
                        "select.no_header", lexeme_id,
                        f"{lexeme.lemma}: no header-eligible sign; appears on other pages only",
                    )
                )
            continue
        candidates.sort(key=lambda c: (c[0], c[1]))
        best_per_lexeme[lexeme_id] = candidates[0][2]

    # Sync signs group into pages, merging signs that share a member sense.
    sync_signs: dict[str, BinarySign] = {}
    headers: list[PageHeader] = []
    for lexeme_id, sign in sorted(best_per_lexeme.items()):
        if sign.sign_type in SYNCHRONOUS_TYPES:
            sync_signs[sign.uid] = sign
        elif sign.sign_type is SignType.DIFFUSE:
            headers.append(_diffuse_header(lexeme_id, model, graph))
        else:
            headers.append(_disjunctive_header(lexeme_id, model, graph))

    def dublets(a: BinarySign, b: BinarySign) -> bool:
        """Signs merge into one header only when their non-shared members are
        same-language dublets: distinct lexemes sharing one etymon."""
        shared = {s.id for s in a.senses()} & {s.id for s in b.senses()}
        if not shared:
            return False
        free_a = [s for s in a.senses() if s.id not in shared]
        free_b = [s for s in b.senses() if s.id not in shared]
        if len(free_a) != 1 or len(free_b) != 1:
            return False
        la, lb = model.lexeme_of(free_a[0]), model.lexeme_of(free_b[0])
        return (
            la.language is lb.language
            and la.etymon is not None
            and la.etymon == lb.etymon
        )

    merged: list[list[BinarySign]] = []
    for sign in sorted(sync_signs.values(), key=_stable_key):
        target = None
        for group in merged:
            if any(dublets(sign, member) for member in group):
                target = group
                break
        if target is None:
            merged.append([sign])
        else:
            target.append(sign)
    for group in merged:
        headers.append(_sync_header(group, model))

    # De-duplicate (diffuse/disjunctive headers may be driven once only, but
    # two lemmas can share a page) and order deterministically by slug.
    unique: dict[str, PageHeader] = {}
    for header in headers:
        unique.setdefault(header.slug(), header)
    return [unique[slug] for slug in sorted(unique)], diagnostics


def _sync_header(group: list[BinarySign], model: LexiconModel) -> PageHeader:
    def demoted(sign: BinarySign) -> bool:
        return any(model.lexeme_of(s).dated for s in sign.senses())

    ordered = sorted(group, key=lambda s: (demoted(s), _sign_score(s), _stable_key(s)))
    primary = ordered[0]
    ru_lex = model.lexeme_of(primary.ru) if isinstance(primary.ru, Sense) else None
    bg_lex = model.lexeme_of(primary.bg) if isinstance(primary.bg, Sense) else None
    assert ru_lex is not None and bg_lex is not None
    members = [
        _member(ru_lex, _member_format(ru_lex)),
        _member(bg_lex, _member_format(bg_lex)),
    ]
    connectors: list[Optional[Ideogram]] = [SIGN_IDEOGRAMS[primary.sign_type]]
    prepended: list[HeaderMember] = []
    pre_connectors: list[Optional[Ideogram]] = []
    placed = {ru_lex.id, bg_lex.id}
    for sign in ordered[1:]:
        free = [s for s in sign.senses() if s.lexeme_id not in placed]
        if not free:
            continue
        lexeme = model.lexeme_of(free[0])
        placed.add(lexeme.id)
        if lexeme.dated:
            prepended.insert(0, _member(lexeme, MemberFormat.BRACKETED))
            pre_connectors.insert(0, None)  # bracketed dublet juxtaposed, no glyph
        else:
            members.append(_member(lexeme, _member_format(lexeme)))
            connectors.append(SIGN_IDEOGRAMS[sign.sign_type])
    all_members = tuple(prepended + members)
    all_connectors = tuple(pre_connectors + connectors)
    if not any(m.format is MemberFormat.PLAIN for m in all_members):
        raise HeaderError(f"header {all_members} has no plain member")
    return PageHeader(
        members=all_members,
        connectors=all_connectors,
        signs=tuple([primary] + [s for s in ordered[1:]]),
        kind="synchronous",
    )


def _diffuse_header(lexeme_id: str, model: LexiconModel, graph: SignGraph) -> PageHeader:
    lexeme = model.lexemes[lexeme_id]
    diffuse = sorted(
        (
            s
            for s in graph.of_lexeme(lexeme_id)
            if s.sign_type is SignType.DIFFUSE
            and s.unique_sense is not None
            and s.unique_sense.lexeme_id == lexeme_id
        ),
        key=_stable_key,
    )
    head = diffuse[0]
    return PageHeader(
        members=(_member(lexeme, MemberFormat.PLAIN),),
        connectors=(),
        descriptive=head.descriptive,
        signs=(head,),
        kind="diffuse",
    )


def _disjunctive_header(lexeme_id: str, model: LexiconModel, graph: SignGraph) -> PageHeader:
    lexeme = model.lexemes[lexeme_id]
    return PageHeader(
        members=(_member(lexeme, MemberFormat.PLAIN),),
        connectors=(),
        signs=(),
        kind="disjunctive",
    )
