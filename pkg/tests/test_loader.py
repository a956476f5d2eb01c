import pytest

from pairlex.loader import LexiconIOError, emit_lexicon, load_lexicon, validate
from pairlex.model import Language

from conftest import rewrite_json


def test_seed_loads_clean(model):
    assert len(model.lexemes) > 50
    assert len(model.senses) > 60
    lgat = model.lexemes["lgat"]
    assert lgat.language is Language.RU
    assert [s.rank for s in lgat.senses] == [1, 2]
    assert lgat.senses[0].citations


def test_empty_document_set(tmp_path):
    (tmp_path / "lexemes").mkdir()
    model, diagnostics = load_lexicon(tmp_path)
    assert diagnostics == []
    assert model.lexemes == {}
    assert validate(model) == []


def test_minimal_two_lexeme_set(tmp_path):
    import shutil

    from conftest import SEED_DIR

    (tmp_path / "lexemes").mkdir()
    for name in ("lgat.json", "lazha-v.json"):
        shutil.copy(SEED_DIR / "lexemes" / name, tmp_path / "lexemes" / name)
    model, diagnostics = load_lexicon(tmp_path)
    assert diagnostics == []
    assert len(model.lexemes) == 2
    assert len(model.senses) == 4


def test_missing_input_raises(tmp_path):
    with pytest.raises(LexiconIOError):
        load_lexicon(tmp_path / "nope")


def test_schema_violation_missing_field(seed_copy):
    rewrite_json(seed_copy / "lexemes" / "lgat.json", lambda d: d.pop("lemma"))
    _, diagnostics = load_lexicon(seed_copy)
    assert any(d.code == "schema.missing" for d in diagnostics)


def test_dangling_pair_reference(seed_copy):
    def mutate(pairs):
        pairs.append({"ru": "lgat-1", "bg": "no-such-sense"})

    rewrite_json(seed_copy / "pairs.json", mutate)
    _, diagnostics = load_lexicon(seed_copy)
    assert any(d.code == "ref.dangling" for d in diagnostics)


def test_same_language_pair_rejected(seed_copy):
    def mutate(pairs):
        # лгать and врать are both Russian
        pairs.append({"ru": "lgat-1", "bg": "vrat-1"})

    rewrite_json(seed_copy / "pairs.json", mutate)
    _, diagnostics = load_lexicon(seed_copy)
    assert any(d.code == "invariant.same_language" for d in diagnostics)


def test_duplicate_rank_flagged(seed_copy):
    def mutate(doc):
        doc["senses"][1]["rank"] = 1

    rewrite_json(seed_copy / "lexemes" / "lgat.json", mutate)
    model, _ = load_lexicon(seed_copy)
    assert any(d.code == "invariant.rank_dup" for d in validate(model))


def test_rank_gap_flagged(seed_copy):
    def mutate(doc):
        doc["senses"][1]["rank"] = 3

    rewrite_json(seed_copy / "lexemes" / "lgat.json", mutate)
    model, _ = load_lexicon(seed_copy)
    assert any(d.code == "invariant.rank_gap" for d in validate(model))


def test_ir_without_ted_flagged(seed_copy):
    def mutate(doc):
        sense = doc["senses"][0]
        del sense["ted"]
        sense["scheme_neutral"] = True

    rewrite_json(seed_copy / "lexemes" / "klevetat.json", mutate)
    model, diagnostics = load_lexicon(seed_copy)
    problems = diagnostics + validate(model)
    assert any(d.code == "invariant.ir_needs_ted" for d in problems)


def test_scheme_neutral_contradiction_flagged(seed_copy):
    rewrite_json(
        seed_copy / "lexemes" / "lgat.json",
        lambda d: d["senses"][0].update({"scheme_neutral": True}),
    )
    _, diagnostics = load_lexicon(seed_copy)
    assert any(d.code == "invariant.scheme_neutral" for d in diagnostics)


def test_lone_etymon_flagged(seed_copy):
    rewrite_json(
        seed_copy / "lexemes" / "kaznit.json", lambda d: d.update({"etymon": "et-solo"})
    )
    model, _ = load_lexicon(seed_copy)
    assert any(d.code == "invariant.etymon" for d in validate(model))


def test_deleting_referenced_sense_yields_diagnostic(seed_copy):
    # mutation check: remove one paired sense, expect at least one complaint
    rewrite_json(
        seed_copy / "lexemes" / "klevetya.json", lambda d: d["senses"].clear()
    )
    model, diagnostics = load_lexicon(seed_copy)
    problems = diagnostics + validate(model)
    assert any(d.code in ("ref.dangling", "invariant.rank1") for d in problems)


def test_emit_load_round_trip(model, tmp_path):
    emit_lexicon(model, tmp_path)
    reloaded, diagnostics = load_lexicon(tmp_path)
    assert diagnostics == []
    assert reloaded.lexemes == model.lexemes
    assert reloaded.declared_pairs == model.declared_pairs
    assert reloaded.rubric_links == model.rubric_links
    assert reloaded.word_links == model.word_links


def test_bad_json_is_reported_not_raised(seed_copy):
    (seed_copy / "lexemes" / "broken.json").write_text("{not json", encoding="utf-8")
    _, diagnostics = load_lexicon(seed_copy)
    assert any(d.code == "schema.parse" for d in diagnostics)


def test_aspect_partner_round_trip(seed_copy, tmp_path):
    def link_partners(doc):
        doc["senses"][0]["aspect"] = {"value": "imperfective", "partner": "lgat-2"}
        doc["senses"][1]["aspect"] = {"value": "imperfective", "partner": "lgat-1"}

    rewrite_json(seed_copy / "lexemes" / "lgat.json", link_partners)
    model, diagnostics = load_lexicon(seed_copy)
    assert diagnostics == []
    assert model.sense("lgat-1").aspect_partner == "lgat-2"
    emit_lexicon(model, tmp_path / "emitted")
    reloaded, _ = load_lexicon(tmp_path / "emitted")
    assert reloaded.sense("lgat-1").aspect_partner == "lgat-2"


def test_dangling_aspect_partner_flagged(seed_copy):
    rewrite_json(
        seed_copy / "lexemes" / "lgat.json",
        lambda d: d["senses"][0].update(
            {"aspect": {"value": "imperfective", "partner": "no-such"}}
        ),
    )
    _, diagnostics = load_lexicon(seed_copy)
    assert any(d.code == "ref.dangling" for d in diagnostics)
