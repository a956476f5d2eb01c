"""Core lexicon data model: lexemes, senses, annotations and declared pairings.

The model is loaded once from JSON documents (see :mod:`pairlex.loader`) and
is treated as immutable afterwards; every downstream stage (classification,
chain building, page compilation, indexing) only reads from it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Union


class Language(str, Enum):
    """The two sides of the dictionary."""

    RU = "ru"
    BG = "bg"

    @property
    def other(self) -> "Language":
        return Language.BG if self is Language.RU else Language.RU


class Pos(str, Enum):
    VERB = "verb"
    NOUN = "noun"
    ADJECTIVE = "adjective"
    ADVERB = "adverb"


# Browse indices stratify lemmas in this part-of-speech order.
POS_ORDER = (Pos.VERB, Pos.NOUN, Pos.ADJECTIVE, Pos.ADVERB)


class Register(str, Enum):
    NEUTRAL = "neutral"
    COLLOQUIAL = "colloquial"
    DATED = "dated"
    DISAPPROVING = "disapproving"
    PROSTORECHIE = "prostorechie"
    SLANG = "slang"


class BorrowedFrom(str, Enum):
    RU = "ru"
    BG = "bg"
    THIRD = "third"


class TedTop(str, Enum):
    """Top-level types of expansive action (the tertium-comparationis scheme)."""

    LIQUIDATING = "liquidating"
    DEFORMING = "deforming"
    ANNEXING = "annexing"
    DISORIENTING = "disorienting"
    DEMEANING = "demeaning"
    BLOCKING = "blocking"
    INTERFERENCE = "interference"
    PROVOKING = "provoking"
    REGULATING = "regulating"
    EXPANSIVE_BEHAVIOR = "expansive_behavior"


TED_LABELS_RU = {
    TedTop.LIQUIDATING: "ликвидирующие действия",
    TedTop.DEFORMING: "деформирующие действия",
    TedTop.ANNEXING: "аннексирующие действия",
    TedTop.DISORIENTING: "дезориентирующие действия",
    TedTop.DEMEANING: "принижающие действия",
    TedTop.BLOCKING: "блокирующие действия",
    TedTop.INTERFERENCE: "действия вмешательства",
    TedTop.PROVOKING: "провоцирующие действия",
    TedTop.REGULATING: "регулирующие действия",
    TedTop.EXPANSIVE_BEHAVIOR: "экспансивное поведение",
}


class Aspect(str, Enum):
    IMPERFECTIVE = "imperfective"
    PERFECTIVE = "perfective"
    BIASPECTUAL = "biaspectual"


class CitationSource(str, Enum):
    NKRJA = "НКРЯ"
    BNK = "БНК"
    OTHER = "other"


@dataclass(frozen=True)
class TedType:
    """Scheme placement of a sense: a top-level action type, optional sublabel."""

    top: TedTop
    subtype: Optional[str] = None

    def label(self) -> str:
        base = TED_LABELS_RU[self.top]
        return f"{base} ({self.subtype})" if self.subtype else base


@dataclass(frozen=True)
class ResultIndex:
    """Outcome state imposed on the patient, labelled on both sides."""

    ru_label: str = ""
    bg_label: str = ""

    def display(self) -> str:
        if self.ru_label and self.bg_label:
            return f"{self.ru_label} / {self.bg_label}"
        return self.ru_label or self.bg_label


@dataclass(frozen=True)
class CorpusCitation:
    text: str
    annotation: Optional[str] = None
    source: CitationSource = CitationSource.OTHER
    url: Optional[str] = None


@dataclass(frozen=True)
class Sense:
    """One numbered meaning of a lexeme with its bilingual agreed gloss."""

    id: str
    lexeme_id: str
    rank: int
    gloss_ru: str
    gloss_bg: str
    ted: Optional[TedType] = None
    ir: Optional[ResultIndex] = None
    aspect: Optional[Aspect] = None
    aspect_partner: Optional[str] = None  # sense id
    citations: tuple[CorpusCitation, ...] = ()
    idioms: tuple[str, ...] = ()
    synonyms: tuple[str, ...] = ()

    @property
    def scheme_neutral(self) -> bool:
        """A sense outside the expansive-action scheme carries no TED."""
        return self.ted is None


@dataclass(frozen=True)
class Lexeme:
    id: str
    lemma: str
    language: Language
    pos: Pos
    register: frozenset[Register] = frozenset((Register.NEUTRAL,))
    etymon: Optional[str] = None
    borrowed_from: Optional[BorrowedFrom] = None
    reflex_transparent: bool = False
    pre_registered: bool = False
    senses: tuple[Sense, ...] = ()

    @property
    def dated(self) -> bool:
        return Register.DATED in self.register

    @property
    def in_scheme(self) -> bool:
        """True when at least one sense refers to the expansive-action scheme."""
        return any(s.ted is not None for s in self.senses)


@dataclass(frozen=True)
class DescriptiveEquivalent:
    """Multi-word rendering standing in for a missing one-word equivalent."""

    language: Language
    text: str
    is_definition_like: bool = True

    @property
    def single_word(self) -> bool:
        return " " not in self.text.strip()


class DeclaredType(str, Enum):
    """Editorially pre-declared pairing kinds that cannot be computed."""

    DISJUNCTIVE = "disjunctive"
    FALSE = "false"
    EMPTY = "empty"


class PairDirection(str, Enum):
    NONE = "none"
    LEFT_TO_RIGHT = "left_to_right"  # from the Russian side outward
    RIGHT_TO_LEFT = "right_to_left"  # from the Bulgarian side outward


@dataclass(frozen=True)
class DeclaredPair:
    """One editorial pairing from pairs.json.

    A pair with no declared type asserts gloss equivalence of its two sides;
    typed pairs (disjunctive / false / empty) are explicitly non-equivalent.
    Exactly one side may be a descriptive equivalent (a diffuse pairing).
    """

    index: int
    ru: Union[str, DescriptiveEquivalent]  # sense id or descriptive equivalent
    bg: Union[str, DescriptiveEquivalent]
    declared_type: Optional[DeclaredType] = None
    direction: PairDirection = PairDirection.NONE
    note: Optional[str] = None

    @property
    def is_diffuse(self) -> bool:
        return isinstance(self.ru, DescriptiveEquivalent) or isinstance(
            self.bg, DescriptiveEquivalent
        )

    def side(self, language: Language) -> Union[str, DescriptiveEquivalent]:
        return self.ru if language is Language.RU else self.bg


@dataclass(frozen=True)
class Diagnostic:
    """One validation or build finding; diagnostics never raise by themselves."""

    code: str
    ref: str
    message: str

    def __str__(self) -> str:  # one line per diagnostic on the CLI
        return f"{self.code}: {self.ref}: {self.message}"


# Rubrics of the page reference row; НКРЯ/БНК point at the two corpora.
LINK_RUBRICS = ("НКРЯ", "БНК", "АСС", "МОРФ", "ФР", "СИН", "ПЗ")


@dataclass
class LexiconModel:
    """The whole loaded lexicon: lexemes, their senses, declared pairs, links."""

    lexemes: dict[str, Lexeme] = field(default_factory=dict)
    declared_pairs: tuple[DeclaredPair, ...] = ()
    rubric_links: dict[str, str] = field(default_factory=dict)
    word_links: dict[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self._senses: dict[str, Sense] = {}
        for lexeme in self.lexemes.values():
            for sense in lexeme.senses:
                self._senses[sense.id] = sense

    @property
    def senses(self) -> dict[str, Sense]:
        return self._senses

    def sense(self, sense_id: str) -> Sense:
        return self._senses[sense_id]

    def lexeme_of(self, sense: Sense) -> Lexeme:
        return self.lexemes[sense.lexeme_id]

    def senses_of(self, lexeme_id: str) -> tuple[Sense, ...]:
        return self.lexemes[lexeme_id].senses

    def equivalent(self, a: Sense, b: Sense) -> bool:
        """Declared gloss equivalence (editorial, never computed)."""
        key = {a.id, b.id}
        for pair in self.declared_pairs:
            if pair.declared_type is not None or pair.is_diffuse:
                continue
            if {pair.ru, pair.bg} == key:
                return True
        return False

    def declaration_for(self, a_id: str, b_id: str) -> Optional[DeclaredPair]:
        key = {a_id, b_id}
        for pair in self.declared_pairs:
            if pair.is_diffuse:
                continue
            if {pair.ru, pair.bg} == key:
                return pair
        return None
