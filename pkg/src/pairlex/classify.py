"""Classification of cross-language sense pairs into the seven sign types.

Every pairing of a Russian and a Bulgarian sense (or a sense and a
descriptive equivalent) resolves to exactly one of: synchronous homogeneous,
synchronous heterogeneous, asynchronous, disjunctive, diffuse, false, empty.
The decision procedure is a total branch order over declared editorial data
(gloss equivalence, disjunctive/false/empty declarations) plus one computed
oracle (orthographic form similarity for false pairs):

1.  one side is a descriptive equivalent        -> diffuse (one-directional)
2.  equivalent, both primary, transparent
    common origin or synchronized borrowing     -> synchronous homogeneous
3.  equivalent, both primary                    -> synchronous heterogeneous
4.  equivalent, a secondary sense involved      -> asynchronous
5.  declared disjunctive                        -> disjunctive (one-directional)
6.  declared empty (shared derivational code)   -> empty
7.  declared false, or form-similar lemmas
    without equivalence                         -> false
8.  nothing fires                               -> UnclassifiablePair

Declared non-equivalent kinds are consulted before the similarity oracle so
that an empty pair with near-identical spelling is never mistaken for a
false one. Every classified pair carries a full criterion trace for audit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Union

from .model import (
    DeclaredType,
    DescriptiveEquivalent,
    Diagnostic,
    Language,
    Lexeme,
    LexiconModel,
    PairDirection,
    Sense,
)
from .similarity import form_similar

Side = Union[Sense, DescriptiveEquivalent]


class SignType(str, Enum):
    SYNCHRONOUS_HOMOGENEOUS = "synchronous_homogeneous"
    SYNCHRONOUS_HETEROGENEOUS = "synchronous_heterogeneous"
    ASYNCHRONOUS = "asynchronous"
    DISJUNCTIVE = "disjunctive"
    DIFFUSE = "diffuse"
    FALSE = "false"
    EMPTY = "empty"


SYNCHRONOUS_TYPES = (SignType.SYNCHRONOUS_HOMOGENEOUS, SignType.SYNCHRONOUS_HETEROGENEOUS)
WARNING_TYPES = (SignType.FALSE, SignType.EMPTY)

# Direction is reused from declared pairs: arrows always leave the unique member.
Direction = PairDirection

HOM_CRITERIA = (
    "common_origin_with_reflex",
    "one_primary_meaning",
    "untranslatable_identity",
    "autosynonym",
    "same_fragment_same_ir",
)
HET_CRITERIA = (
    "origin_without_reflex",
    "one_primary_meaning",
    "equivalent_naming",
    "not_autosynonym",
    "same_fragment_same_ir",
)


@dataclass
class CriterionTrace:
    """Audit record: the ten criterion booleans plus free-form notes."""

    hom: dict[str, bool] = field(default_factory=dict)
    het: dict[str, bool] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"hom": dict(self.hom), "het": dict(self.het), "notes": list(self.notes)}


@dataclass(frozen=True)
class BinarySign:
    """A classified cross-language pairing; ru/bg keep the sides apart."""

    uid: str
    ru: Side
    bg: Side
    sign_type: SignType
    direction: Direction
    trace: CriterionTrace
    declared_index: Optional[int] = None  # position in pairs.json, None if computed

    def side(self, language: Language) -> Side:
        return self.ru if language is Language.RU else self.bg

    @property
    def is_diffuse(self) -> bool:
        return self.sign_type is SignType.DIFFUSE

    def senses(self) -> tuple[Sense, ...]:
        return tuple(s for s in (self.ru, self.bg) if isinstance(s, Sense))

    @property
    def descriptive(self) -> Optional[DescriptiveEquivalent]:
        for s in (self.ru, self.bg):
            if isinstance(s, DescriptiveEquivalent):
                return s
        return None

    @property
    def unique_sense(self) -> Optional[Sense]:
        """Origin of the arrow on diffuse/disjunctive signs."""
        if self.direction is Direction.LEFT_TO_RIGHT and isinstance(self.ru, Sense):
            return self.ru
        if self.direction is Direction.RIGHT_TO_LEFT and isinstance(self.bg, Sense):
            return self.bg
        return None


class UnclassifiablePair(Exception):
    """No branch of the decision procedure fires; never defaulted silently."""

    def __init__(self, ref: str, message: str):
        super().__init__(message)
        self.diagnostic = Diagnostic("classify.unclassifiable", ref, message)


class PreRegistrationExcluded(Exception):
    """Pair involves a pre-registered lexeme while the policy flag is off."""


def _uid(ru: Side, bg: Side) -> str:
    left = ru.id if isinstance(ru, Sense) else f"descr:{ru.text}"
    right = bg.id if isinstance(bg, Sense) else f"descr:{bg.text}"
    return f"{left}~{right}"


def _orient(a: Side, b: Side, model: LexiconModel) -> tuple[Side, Side]:
    def lang(side: Side) -> Language:
        return side.language if isinstance(side, DescriptiveEquivalent) else model.lexeme_of(side).language

    if lang(a) is lang(b):
        ref = _uid(a, b)
        raise UnclassifiablePair(ref, "pair connects same-language sides")
    return (a, b) if lang(a) is Language.RU else (b, a)


def _shared_transparent_origin(ru_lex: Lexeme, bg_lex: Lexeme) -> bool:
    """Common etymon (inherited or a synchronized borrowing) still felt by speakers."""
    return (
        ru_lex.etymon is not None
        and ru_lex.etymon == bg_lex.etymon
        and ru_lex.reflex_transparent
        and bg_lex.reflex_transparent
    )


def _same_fragment_same_ir(a: Sense, b: Sense) -> bool:
    if a.ted is None or b.ted is None:
        return False
    if a.ted.top is not b.ted.top:
        return False
    if a.ir is None or b.ir is None:
        return False
    return a.ir == b.ir


def _criterion_one(a: Sense, b: Sense, model: LexiconModel) -> bool:
    return (
        _shared_transparent_origin(model.lexeme_of(a), model.lexeme_of(b))
        and a.rank == 1
        and b.rank == 1
        and model.equivalent(a, b)
    )


def _untranslatable_granted(a: Sense, b: Sense, model: LexiconModel) -> bool:
    """Criterion (3) derives from (1) and goes to the first-declared pair only."""
    if not _criterion_one(a, b, model):
        return False
    own = model.declaration_for(a.id, b.id)
    own_index = own.index if own is not None else len(model.declared_pairs)
    for pair in model.declared_pairs:
        if pair.index >= own_index or pair.declared_type is not None or pair.is_diffuse:
            continue
        if a.id not in (pair.ru, pair.bg) and b.id not in (pair.ru, pair.bg):
            continue
        sides = [model.senses[x] for x in (pair.ru, pair.bg) if x in model.senses]
        if len(sides) == 2 and _criterion_one(sides[0], sides[1], model):
            return False
    return True


def homogeneity_check(a: Sense, b: Sense, model: LexiconModel) -> CriterionTrace:
    """Evaluate the five homogeneity and five heterogeneity criteria."""
    ru, bg = _orient(a, b, model)
    assert isinstance(ru, Sense) and isinstance(bg, Sense)
    ru_lex, bg_lex = model.lexeme_of(ru), model.lexeme_of(bg)

    equivalent = model.equivalent(ru, bg)
    both_primary = ru.rank == 1 and bg.rank == 1
    origin = _shared_transparent_origin(ru_lex, bg_lex)
    fragment = _same_fragment_same_ir(ru, bg)

    c1 = origin and both_primary and equivalent
    c2 = equivalent and both_primary
    c3 = _untranslatable_granted(ru, bg, model)
    c4 = c1 and fragment
    c5 = fragment

    trace = CriterionTrace(
        hom={
            "common_origin_with_reflex": c1,
            "one_primary_meaning": c2,
            "untranslatable_identity": c3,
            "autosynonym": c4,
            "same_fragment_same_ir": c5,
        },
        het={
            "origin_without_reflex": equivalent and both_primary and not origin,
            "one_primary_meaning": c2,
            "equivalent_naming": equivalent,
            "not_autosynonym": equivalent and not c4,
            "same_fragment_same_ir": c5,
        },
    )
    if ru_lex.borrowed_from is not None or bg_lex.borrowed_from is not None:
        trace.notes.append(
            "borrowing: ru<-%s, bg<-%s"
            % (
                ru_lex.borrowed_from.value if ru_lex.borrowed_from else "-",
                bg_lex.borrowed_from.value if bg_lex.borrowed_from else "-",
            )
        )
    if ru.aspect is not None or bg.aspect is not None:
        trace.notes.append(
            "aspect: ru=%s, bg=%s"
            % (ru.aspect.value if ru.aspect else "-", bg.aspect.value if bg.aspect else "-")
        )
    return trace


def classify_pair(
    a: Side,
    b: Side,
    model: LexiconModel,
    *,
    admit_pre_registered: bool = True,
    false_threshold: float = 0.25,
) -> BinarySign:
    """Assign the pair its sign type; pure in (a, b, model, policy flags)."""
    ru, bg = _orient(a, b, model)
    uid = _uid(ru, bg)

    # Branch 1: diffuse, exactly one side is a descriptive equivalent.
    ru_descr = isinstance(ru, DescriptiveEquivalent)
    bg_descr = isinstance(bg, DescriptiveEquivalent)
    if ru_descr and bg_descr:
        raise UnclassifiablePair(uid, "both sides are descriptive equivalents")
    if ru_descr or bg_descr:
        unique = bg if ru_descr else ru
        assert isinstance(unique, Sense)
        direction = (
            Direction.RIGHT_TO_LEFT if ru_descr else Direction.LEFT_TO_RIGHT
        )
        trace = CriterionTrace(
            hom={k: False for k in HOM_CRITERIA},
            het={k: False for k in HET_CRITERIA},
            notes=[
                f"diffuse: unique word {unique.id!r} rendered by a descriptive equivalent"
            ],
        )
        return BinarySign(uid, ru, bg, SignType.DIFFUSE, direction, trace)

    assert isinstance(ru, Sense) and isinstance(bg, Sense)
    ru_lex, bg_lex = model.lexeme_of(ru), model.lexeme_of(bg)

    if not admit_pre_registered and (ru_lex.pre_registered or bg_lex.pre_registered):
        raise PreRegistrationExcluded(
            f"{uid}: pre-registered lexeme excluded while the admission flag is off"
        )

    declaration = model.declaration_for(ru.id, bg.id)
    trace = homogeneity_check(ru, bg, model)

    if model.equivalent(ru, bg):
        both_primary = ru.rank == 1 and bg.rank == 1
        if both_primary and _shared_transparent_origin(ru_lex, bg_lex):
            # Branch 2: inertial common formation or synchronized borrowing.
            return BinarySign(uid, ru, bg, SignType.SYNCHRONOUS_HOMOGENEOUS,
                              Direction.NONE, trace,
                              declaration.index if declaration else None)
        if both_primary:
            # Branch 3: parallel formation, one shared primary meaning.
            return BinarySign(uid, ru, bg, SignType.SYNCHRONOUS_HETEROGENEOUS,
                              Direction.NONE, trace,
                              declaration.index if declaration else None)
        # Branch 4: equivalence leaning on a secondary sense is asynchronous.
        if ru.rank <= bg.rank:
            leading, led = ru, bg
        else:
            leading, led = bg, ru
        trace.notes.append(f"asynchronous: leading={leading.id} led={led.id}")
        return BinarySign(uid, ru, bg, SignType.ASYNCHRONOUS, Direction.NONE, trace,
                          declaration.index if declaration else None)

    if declaration is not None and declaration.declared_type is DeclaredType.DISJUNCTIVE:
        # Branch 5: declared open-set approximation of a unique word.
        trace.notes.append("disjunctive: open set from the unique member")
        return BinarySign(uid, ru, bg, SignType.DISJUNCTIVE, declaration.direction,
                          trace, declaration.index)

    if declaration is not None and declaration.declared_type is DeclaredType.EMPTY:
        # Branch 6: declared interlingual paronym fixed by shared derivation.
        trace.notes.append("empty: shared derivational code, declared non-equivalent")
        return BinarySign(uid, ru, bg, SignType.EMPTY, Direction.NONE, trace,
                          declaration.index)

    declared_false = declaration is not None and declaration.declared_type is DeclaredType.FALSE
    if declared_false or form_similar(ru_lex.lemma, bg_lex.lemma, false_threshold):
        # Branch 7: interlingual homonym (false lexical parallel).
        trace.notes.append(
            "false: declared in source data" if declared_false
            else "false: form-similar lemmas without equivalence"
        )
        return BinarySign(uid, ru, bg, SignType.FALSE, Direction.NONE, trace,
                          declaration.index if declaration else None)

    raise UnclassifiablePair(uid, "no classification branch fires for this pair")


@dataclass(frozen=True)
class PolicyNote:
    """Header-eligibility note for a pre-registered lexeme."""

    applicable: bool
    admitted: bool
    message: str


def pre_registration_policy(
    lexeme: Lexeme, model: LexiconModel, *, admit_pre_registered: bool = True
) -> PolicyNote:
    if not lexeme.pre_registered:
        return PolicyNote(False, False, f"{lexeme.lemma}: policy not applicable")
    if admit_pre_registered:
        return PolicyNote(
            True,
            True,
            f"{lexeme.lemma}: admitted in advance; participates in synchronous "
            "classification as if established",
        )
    return PolicyNote(
        True,
        False,
        f"{lexeme.lemma}: not admitted; its pairs are withheld and the "
        "established alternative heads instead",
    )


def detect_false_candidates(
    model: LexiconModel, *, threshold: float = 0.25
) -> list[tuple[Lexeme, Lexeme]]:
    """Cross-language lemma pairs that look alike but are not equivalent.

    Includes pairs flagged false in source data (etymological reflexes and
    prefix-analogy cases fall below any reasonable similarity threshold) and
    excludes lemma pairs with any declared relation of another kind.
    """
    related: dict[frozenset[str], set[Optional[DeclaredType]]] = {}
    for pair in model.declared_pairs:
        if pair.is_diffuse:
            continue
        sides = [s for s in (pair.ru, pair.bg) if s in model.senses]
        if len(sides) != 2:
            continue
        key = frozenset(model.sense(s).lexeme_id for s in sides)
        related.setdefault(key, set()).add(pair.declared_type)

    out: list[tuple[Lexeme, Lexeme]] = []
    ru_lexemes = [lx for lx in model.lexemes.values() if lx.language is Language.RU]
    bg_lexemes = [lx for lx in model.lexemes.values() if lx.language is Language.BG]
    for ru_lex in sorted(ru_lexemes, key=lambda l: l.id):
        for bg_lex in sorted(bg_lexemes, key=lambda l: l.id):
            declared = related.get(frozenset((ru_lex.id, bg_lex.id)), set())
            if None in declared:  # an equivalence exists, not a false parallel
                continue
            if DeclaredType.FALSE in declared:
                out.append((ru_lex, bg_lex))
                continue
            if declared & {DeclaredType.EMPTY, DeclaredType.DISJUNCTIVE}:
                continue  # already accounted for by another sign kind
            if form_similar(ru_lex.lemma, bg_lex.lemma, threshold):
                out.append((ru_lex, bg_lex))
    return out


@dataclass
class SignGraph:
    """All classified signs over a model, indexed for chain building."""

    signs: list[BinarySign] = field(default_factory=list)
    by_sense: dict[str, list[BinarySign]] = field(default_factory=dict)
    by_lexeme: dict[str, list[BinarySign]] = field(default_factory=dict)
    diagnostics: list[Diagnostic] = field(default_factory=list)
    policy_notes: list[str] = field(default_factory=list)

    def add(self, sign: BinarySign, model: LexiconModel) -> None:
        self.signs.append(sign)
        for sense in sign.senses():
            self.by_sense.setdefault(sense.id, []).append(sign)
            self.by_lexeme.setdefault(sense.lexeme_id, []).append(sign)

    def of_sense(self, sense_id: str) -> list[BinarySign]:
        return self.by_sense.get(sense_id, [])

    def of_lexeme(self, lexeme_id: str) -> list[BinarySign]:
        return self.by_lexeme.get(lexeme_id, [])

    def counts(self) -> dict[str, int]:
        counts = {t.value: 0 for t in SignType}
        for sign in self.signs:
            counts[sign.sign_type.value] += 1
        return counts


def classify_all(
    model: LexiconModel,
    *,
    admit_pre_registered: bool = True,
    false_threshold: float = 0.25,
) -> SignGraph:
    """Classify every declared pair, then add computed false-pair warnings."""
    graph = SignGraph()
    seen: set[str] = set()

    def resolve(side) -> Optional[Side]:
        if isinstance(side, DescriptiveEquivalent):
            return side
        return model.senses.get(side)

    for pair in model.declared_pairs:
        ru, bg = resolve(pair.ru), resolve(pair.bg)
        if ru is None or bg is None:
            graph.diagnostics.append(
                Diagnostic("classify.dangling", f"pairs[{pair.index}]", "unresolved pair side")
            )
            continue
        try:
            sign = classify_pair(
                ru, bg, model,
                admit_pre_registered=admit_pre_registered,
                false_threshold=false_threshold,
            )
        except PreRegistrationExcluded as exc:
            graph.policy_notes.append(str(exc))
            continue
        except UnclassifiablePair as exc:
            graph.diagnostics.append(exc.diagnostic)
            continue
        if sign.uid in seen:
            continue
        seen.add(sign.uid)
        graph.add(sign, model)

    # Computed false parallels pair the rank-1 senses of the two lexemes.
    for ru_lex, bg_lex in detect_false_candidates(model, threshold=false_threshold):
        ru_sense = next((s for s in ru_lex.senses if s.rank == 1), None)
        bg_sense = next((s for s in bg_lex.senses if s.rank == 1), None)
        if ru_sense is None or bg_sense is None:
            continue
        uid = _uid(ru_sense, bg_sense)
        if uid in seen:
            continue
        try:
            sign = classify_pair(
                ru_sense, bg_sense, model,
                admit_pre_registered=admit_pre_registered,
                false_threshold=false_threshold,
            )
        except (UnclassifiablePair, PreRegistrationExcluded):
            continue
        if sign.sign_type is not SignType.FALSE:
            continue
        seen.add(uid)
        graph.add(sign, model)

    return graph


def traces_report(graph: SignGraph) -> dict:
    """Pair id -> sign type, criterion booleans and notes (the audit export)."""
    return {
        sign.uid: {
            "sign_type": sign.sign_type.value,
            "direction": sign.direction.value,
            "criteria": sign.trace.to_json(),
        }
        for sign in sorted(graph.signs, key=lambda s: s.uid)
    }
