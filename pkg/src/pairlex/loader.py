"""Loading, validation and re-emission of the lexicon source documents.

Source layout (all UTF-8 JSON):

    <input>/lexemes/<lexeme-id>.json   one document per lexeme
    <input>/pairs.json                 declared pairings
    <input>/links.json                 rubric links and per-word external links

Loading is forgiving: schema problems are collected as diagnostics rather
than raised, so ``validate`` can show everything wrong with a data set in one
pass. A model is build-ready only when the diagnostic list is empty.
"""

from __future__ import annotations

import json
from collections import Counter
from pathlib import Path
from typing import Any, Optional, Union

from .model import (
    Aspect,
    BorrowedFrom,
    CitationSource,
    CorpusCitation,
    DeclaredPair,
    DeclaredType,
    DescriptiveEquivalent,
    Diagnostic,
    Language,
    Lexeme,
    LexiconModel,
    LINK_RUBRICS,
    PairDirection,
    Pos,
    Register,
    ResultIndex,
    Sense,
    TedTop,
    TedType,
)


class LexiconIOError(Exception):
    """Input tree is missing or unreadable (CLI exit code 2)."""


def _enum(kind, value, ref: str, field: str, diags: list[Diagnostic]):
    try:
        return kind(value)
    except ValueError:
        diags.append(
            Diagnostic("schema.enum", ref, f"{field}: unknown value {value!r}")
        )
        return None


def _parse_sense(raw: dict[str, Any], lexeme_id: str, diags: list[Diagnostic]) -> Optional[Sense]:
    ref = f"{lexeme_id}/{raw.get('id', '?')}"
    for required in ("id", "rank", "gloss_ru", "gloss_bg"):
        if required not in raw:
            diags.append(Diagnostic("schema.missing", ref, f"sense field {required!r} missing"))
            return None
    if not isinstance(raw["rank"], int) or raw["rank"] < 1:
        diags.append(Diagnostic("schema.kind", ref, "rank must be a positive integer"))
        return None

    ted = None
    if raw.get("ted") is not None:
        top = _enum(TedTop, raw["ted"].get("top"), ref, "ted.top", diags)
        if top is None:
            return None
        subtype = raw["ted"].get("subtype")
        if subtype is not None and not str(subtype).strip():
            diags.append(Diagnostic("schema.kind", ref, "ted.subtype present but empty"))
        ted = TedType(top=top, subtype=subtype)

    ir = None
    if raw.get("ir") is not None:
        ir = ResultIndex(ru_label=raw["ir"].get("ru", ""), bg_label=raw["ir"].get("bg", ""))
        if not ir.ru_label and not ir.bg_label:
            diags.append(Diagnostic("invariant.ir", ref, "result index has no labels"))

    aspect = None
    aspect_partner = None
    raw_aspect = raw.get("aspect")
    if isinstance(raw_aspect, str):
        aspect = _enum(Aspect, raw_aspect, ref, "aspect", diags)
    elif isinstance(raw_aspect, dict):
        aspect = _enum(Aspect, raw_aspect.get("value"), ref, "aspect.value", diags)
        aspect_partner = raw_aspect.get("partner")

    citations = []
    for c in raw.get("citations", ()):
        if not c.get("text"):
            diags.append(Diagnostic("invariant.citation", ref, "citation with empty text"))
            continue
        source = _enum(CitationSource, c.get("source", "other"), ref, "citation.source", diags)
        citations.append(
            CorpusCitation(
                text=c["text"],
                annotation=c.get("annotation"),
                source=source or CitationSource.OTHER,
                url=c.get("url"),
            )
        )

    sense = Sense(
        id=raw["id"],
        lexeme_id=lexeme_id,
        rank=raw["rank"],
        gloss_ru=raw["gloss_ru"],
        gloss_bg=raw["gloss_bg"],
        ted=ted,
        ir=ir,
        aspect=aspect,
        aspect_partner=aspect_partner,
        citations=tuple(citations),
        idioms=tuple(raw.get("idioms", ())),
        synonyms=tuple(raw.get("synonyms", ())),
    )
    if "scheme_neutral" in raw and bool(raw["scheme_neutral"]) != sense.scheme_neutral:
        diags.append(
            Diagnostic(
                "invariant.scheme_neutral",
                ref,
                "scheme_neutral flag contradicts TED presence",
            )
        )
    if ir is not None and ted is None:
        diags.append(Diagnostic("invariant.ir_needs_ted", ref, "IR present but TED absent"))
    return sense


def _parse_lexeme(raw: dict[str, Any], diags: list[Diagnostic]) -> Optional[Lexeme]:
    ref = raw.get("id", "?")
    for required in ("id", "lemma", "language", "pos"):
        if required not in raw:
            diags.append(Diagnostic("schema.missing", str(ref), f"lexeme field {required!r} missing"))
            return None
    language = _enum(Language, raw["language"], ref, "language", diags)
    pos = _enum(Pos, raw["pos"], ref, "pos", diags)
    if language is None or pos is None:
        return None
    if not str(raw["lemma"]).strip():
        diags.append(Diagnostic("invariant.lemma", ref, "lemma is empty"))
        return None

    registers = set()
    for r in raw.get("register", ["neutral"]):
        reg = _enum(Register, r, ref, "register", diags)
        if reg is not None:
            registers.add(reg)

    borrowed = None
    if raw.get("borrowed_from") is not None:
        borrowed = _enum(BorrowedFrom, raw["borrowed_from"], ref, "borrowed_from", diags)

    senses = []
    for raw_sense in raw.get("senses", ()):
        sense = _parse_sense(raw_sense, raw["id"], diags)
        if sense is not None:
            senses.append(sense)
    senses.sort(key=lambda s: s.rank)

    return Lexeme(
        id=raw["id"],
        lemma=raw["lemma"],
        language=language,
        pos=pos,
        register=frozenset(registers) or frozenset((Register.NEUTRAL,)),
        etymon=raw.get("etymon"),
        borrowed_from=borrowed,
        reflex_transparent=bool(raw.get("reflex_transparent", False)),
        pre_registered=bool(raw.get("pre_registered", False)),
        senses=tuple(senses),
    )


def _parse_side(raw: Any, ref: str, diags: list[Diagnostic]) -> Union[str, DescriptiveEquivalent, None]:
    if isinstance(raw, str):
        return raw
    if isinstance(raw, dict) and "descriptive" in raw:
        d = raw["descriptive"]
        language = _enum(Language, d.get("language"), ref, "descriptive.language", diags)
        text = d.get("text", "")
        if language is None or not text.strip():
            diags.append(Diagnostic("schema.kind", ref, "bad descriptive equivalent"))
            return None
        return DescriptiveEquivalent(
            language=language,
            text=text,
            is_definition_like=bool(d.get("is_definition_like", True)),
        )
    diags.append(Diagnostic("schema.kind", ref, "pair side must be a sense id or descriptive"))
    return None


def _parse_pairs(raw: Any, diags: list[Diagnostic]) -> tuple[DeclaredPair, ...]:
    pairs = []
    if not isinstance(raw, list):
        diags.append(Diagnostic("schema.kind", "pairs.json", "expected a list of pairs"))
        return ()
    for index, entry in enumerate(raw):
        ref = f"pairs[{index}]"
        ru = _parse_side(entry.get("ru"), ref, diags)
        bg = _parse_side(entry.get("bg"), ref, diags)
        if ru is None or bg is None:
            continue
        declared = None
        if entry.get("type") is not None:
            declared = _enum(DeclaredType, entry["type"], ref, "type", diags)
        direction = PairDirection.NONE
        if entry.get("direction") is not None:
            direction = _enum(PairDirection, entry["direction"], ref, "direction", diags) or PairDirection.NONE
        pairs.append(
            DeclaredPair(
                index=index,
                ru=ru,
                bg=bg,
                declared_type=declared,
                direction=direction,
                note=entry.get("note"),
            )
        )
    return tuple(pairs)


def load_lexicon(input_dir: Union[str, Path]) -> tuple[LexiconModel, list[Diagnostic]]:
    """Load all source documents; returns the model plus load-time diagnostics."""
    root = Path(input_dir)
    lexeme_dir = root / "lexemes"
    if not root.is_dir() or not lexeme_dir.is_dir():
        raise LexiconIOError(f"lexicon input not found: {root}")

    diags: list[Diagnostic] = []
    lexemes: dict[str, Lexeme] = {}
    for path in sorted(lexeme_dir.glob("*.json")):
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            diags.append(Diagnostic("schema.parse", path.name, f"unreadable document: {exc}"))
            continue
        lexeme = _parse_lexeme(raw, diags)
        if lexeme is None:
            continue
        if lexeme.id in lexemes:
            diags.append(Diagnostic("schema.duplicate", lexeme.id, "duplicate lexeme id"))
            continue
        lexemes[lexeme.id] = lexeme

    pairs: tuple[DeclaredPair, ...] = ()
    pairs_path = root / "pairs.json"
    if pairs_path.exists():
        try:
            pairs = _parse_pairs(json.loads(pairs_path.read_text(encoding="utf-8")), diags)
        except (OSError, json.JSONDecodeError) as exc:
            diags.append(Diagnostic("schema.parse", "pairs.json", str(exc)))

    rubric_links: dict[str, str] = {}
    word_links: dict[str, str] = {}
    links_path = root / "links.json"
    if links_path.exists():
        try:
            raw_links = json.loads(links_path.read_text(encoding="utf-8"))
            for rubric, url in raw_links.get("rubrics", {}).items():
                if rubric not in LINK_RUBRICS:
                    diags.append(Diagnostic("schema.enum", "links.json", f"unknown rubric {rubric!r}"))
                    continue
                rubric_links[rubric] = url
            word_links = dict(raw_links.get("word_links", {}))
        except (OSError, json.JSONDecodeError) as exc:
            diags.append(Diagnostic("schema.parse", "links.json", str(exc)))

    model = LexiconModel(
        lexemes=lexemes,
        declared_pairs=pairs,
        rubric_links=rubric_links,
        word_links=word_links,
    )
    diags.extend(_check_references(model))
    return model, diags


def _check_references(model: LexiconModel) -> list[Diagnostic]:
    """Reference resolution done at load time (dangling ids, language sides)."""
    diags: list[Diagnostic] = []
    for pair in model.declared_pairs:
        ref = f"pairs[{pair.index}]"
        sides = []
        for language, side in ((Language.RU, pair.ru), (Language.BG, pair.bg)):
            if isinstance(side, DescriptiveEquivalent):
                sides.append(side.language)
                continue
            if side not in model.senses:
                diags.append(Diagnostic("ref.dangling", ref, f"unknown sense id {side!r}"))
                continue
            sides.append(model.lexeme_of(model.sense(side)).language)
        if len(sides) == 2 and sides[0] == sides[1]:
            diags.append(
                Diagnostic("invariant.same_language", ref, "pair connects same-language sides")
            )
        if (
            len(sides) == 2
            and not isinstance(pair.ru, DescriptiveEquivalent)
            and sides[0] is not Language.RU
        ):
            diags.append(Diagnostic("invariant.side_swap", ref, "ru side resolves to a Bulgarian sense"))
    for lexeme in model.lexemes.values():
        for sense in lexeme.senses:
            if sense.aspect_partner is not None and sense.aspect_partner not in model.senses:
                diags.append(
                    Diagnostic("ref.dangling", sense.id, f"aspect partner {sense.aspect_partner!r} missing")
                )
    return diags


def validate(model: LexiconModel) -> list[Diagnostic]:
    """Check every model invariant; an empty result means build-ready."""
    diags: list[Diagnostic] = []

    etymon_users = Counter(lx.etymon for lx in model.lexemes.values() if lx.etymon)
    for etymon, count in sorted(etymon_users.items()):
        if count < 2:
            owners = [lx.id for lx in model.lexemes.values() if lx.etymon == etymon]
            diags.append(
                Diagnostic(
                    "invariant.etymon",
                    owners[0],
                    f"etymon {etymon!r} declared shared but used by one lexeme only",
                )
            )

    for lexeme in model.lexemes.values():
        if not lexeme.lemma.strip():
            diags.append(Diagnostic("invariant.lemma", lexeme.id, "lemma is empty"))
        ranks = [s.rank for s in lexeme.senses]
        if len(set(ranks)) != len(ranks):
            diags.append(Diagnostic("invariant.rank_dup", lexeme.id, f"duplicate sense ranks {ranks}"))
        elif ranks and sorted(ranks) != list(range(1, len(ranks) + 1)):
            diags.append(Diagnostic("invariant.rank_gap", lexeme.id, f"sense ranks {sorted(ranks)} have gaps"))
        for sense in lexeme.senses:
            if sense.ir is not None and sense.ted is None:
                diags.append(Diagnostic("invariant.ir_needs_ted", sense.id, "IR present but TED absent"))
            if sense.ir is not None and not (sense.ir.ru_label or sense.ir.bg_label):
                diags.append(Diagnostic("invariant.ir", sense.id, "result index has no labels"))

    paired_lexemes: set[str] = set()
    for pair in model.declared_pairs:
        ref = f"pairs[{pair.index}]"
        for side, language in ((pair.ru, Language.RU), (pair.bg, Language.BG)):
            if isinstance(side, DescriptiveEquivalent):
                if side.language is not language:
                    diags.append(Diagnostic("invariant.side_swap", ref, "descriptive on the wrong side"))
                if side.single_word and side.is_definition_like:
                    diags.append(
                        Diagnostic(
                            "invariant.descriptive",
                            ref,
                            "descriptive equivalent is a bare single word",
                        )
                    )
                continue
            if side in model.senses:
                paired_lexemes.add(model.sense(side).lexeme_id)
            else:
                diags.append(Diagnostic("ref.dangling", ref, f"unknown sense id {side!r}"))
        if pair.is_diffuse and pair.declared_type is not None:
            diags.append(Diagnostic("invariant.diffuse_typed", ref, "diffuse pair cannot carry a declared type"))
        if pair.declared_type is DeclaredType.DISJUNCTIVE and pair.direction is PairDirection.NONE:
            diags.append(Diagnostic("invariant.direction", ref, "disjunctive pair needs a direction"))
        if pair.declared_type is None and not pair.is_diffuse and pair.direction is not PairDirection.NONE:
            diags.append(Diagnostic("invariant.direction", ref, "equivalence pair cannot carry a direction"))

    for lexeme_id in sorted(paired_lexemes):
        senses = model.lexemes[lexeme_id].senses if lexeme_id in model.lexemes else ()
        if not any(s.rank == 1 for s in senses):
            diags.append(
                Diagnostic("invariant.rank1", lexeme_id, "paired lexeme lacks a rank-1 sense")
            )

    return diags


def _sense_to_json(sense: Sense) -> dict[str, Any]:
    out: dict[str, Any] = {
        "id": sense.id,
        "rank": sense.rank,
        "gloss_ru": sense.gloss_ru,
        "gloss_bg": sense.gloss_bg,
    }
    if sense.ted is not None:
        ted: dict[str, Any] = {"top": sense.ted.top.value}
        if sense.ted.subtype:
            ted["subtype"] = sense.ted.subtype
        out["ted"] = ted
    if sense.ir is not None:
        out["ir"] = {"ru": sense.ir.ru_label, "bg": sense.ir.bg_label}
    if sense.aspect is not None:
        if sense.aspect_partner:
            out["aspect"] = {"value": sense.aspect.value, "partner": sense.aspect_partner}
        else:
            out["aspect"] = sense.aspect.value
    if sense.citations:
        out["citations"] = [
            {
                "text": c.text,
                **({"annotation": c.annotation} if c.annotation else {}),
                "source": c.source.value,
                **({"url": c.url} if c.url else {}),
            }
            for c in sense.citations
        ]
    if sense.idioms:
        out["idioms"] = list(sense.idioms)
    if sense.synonyms:
        out["synonyms"] = list(sense.synonyms)
    out["scheme_neutral"] = sense.scheme_neutral
    return out


def _lexeme_to_json(lexeme: Lexeme) -> dict[str, Any]:
    out: dict[str, Any] = {
        "id": lexeme.id,
        "lemma": lexeme.lemma,
        "language": lexeme.language.value,
        "pos": lexeme.pos.value,
        "register": sorted(r.value for r in lexeme.register),
    }
    if lexeme.etymon:
        out["etymon"] = lexeme.etymon
    if lexeme.borrowed_from is not None:
        out["borrowed_from"] = lexeme.borrowed_from.value
    if lexeme.reflex_transparent:
        out["reflex_transparent"] = True
    if lexeme.pre_registered:
        out["pre_registered"] = True
    out["senses"] = [_sense_to_json(s) for s in lexeme.senses]
    return out


def _side_to_json(side: Union[str, DescriptiveEquivalent]) -> Any:
    if isinstance(side, DescriptiveEquivalent):
        return {
            "descriptive": {
                "language": side.language.value,
                "text": side.text,
                "is_definition_like": side.is_definition_like,
            }
        }
    return side


def emit_lexicon(model: LexiconModel, output_dir: Union[str, Path]) -> None:
    """Write the model back out in the source schema (round-trip stable)."""
    root = Path(output_dir)
    (root / "lexemes").mkdir(parents=True, exist_ok=True)
    for lexeme_id in sorted(model.lexemes):
        doc = _lexeme_to_json(model.lexemes[lexeme_id])
        path = root / "lexemes" / f"{lexeme_id}.json"
        path.write_text(
            json.dumps(doc, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
        )
    pairs_doc = []
    for pair in model.declared_pairs:
        entry: dict[str, Any] = {"ru": _side_to_json(pair.ru), "bg": _side_to_json(pair.bg)}
        if pair.declared_type is not None:
            entry["type"] = pair.declared_type.value
        if pair.direction is not PairDirection.NONE:
            entry["direction"] = pair.direction.value
        if pair.note:
            entry["note"] = pair.note
        pairs_doc.append(entry)
    (root / "pairs.json").write_text(
        json.dumps(pairs_doc, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
    links_doc = {"rubrics": dict(sorted(model.rubric_links.items())),
                 "word_links": dict(sorted(model.word_links.items()))}
    (root / "links.json").write_text(
        json.dumps(links_doc, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
