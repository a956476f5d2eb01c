"""Acceptance gate: golden reproductions and property suites, one line each.

Every test prints an ``ACCEPTANCE <criterion>: PASS`` line once its
assertions hold, so a verbose run shows the whole gate at a glance.
"""

import random
import time

import pytest

from pairlex.chains import build_chains
from pairlex.classify import (
    Direction,
    SignType,
    UnclassifiablePair,
    classify_all,
    classify_pair,
)
from pairlex.emit import emit_xml, parse_xml
from pairlex.loader import load_lexicon
from pairlex.model import DescriptiveEquivalent, Language
from pairlex.pages import format_header, select_headers
from pairlex.pipeline import write_output
from pairlex.search import build_indices

from conftest import make_cyclic_seed


def _ok(name):
    print(f"ACCEPTANCE {name}: PASS")


def descr_partner(model, sense_id, text=None):
    for pair in model.declared_pairs:
        for side in (pair.ru, pair.bg):
            if isinstance(side, DescriptiveEquivalent):
                other = pair.bg if side is pair.ru else pair.ru
                if other == sense_id and (text is None or side.text == text):
                    return side
    raise AssertionError(f"no descriptive partner for {sense_id}")


def test_golden_classification_suite(model):
    """Every hand-labelled pair classifies correctly, in under a second."""
    hom = SignType.SYNCHRONOUS_HOMOGENEOUS
    het = SignType.SYNCHRONOUS_HETEROGENEOUS
    start = time.perf_counter()
    labelled = [
        ("lgat-1", "lzh-bg-1", hom),
        ("vrat-1", "lzh-bg-1", het),
        ("ubv-ru-1", "ubv-bg-1", hom),
        ("grz-ru-1", "grz-bg-1", hom),  # borrowed into Bulgarian
        ("fls-ru-1", "fls-bg-1", het),
        ("vsh2-1", "bes-1", het),
        ("lgat-2", "klv-1", SignType.ASYNCHRONOUS),
        ("obm-1", "lzh-bg-2", SignType.ASYNCHRONOUS),
        ("prt-ru-1", "rzv-bg-2", SignType.ASYNCHRONOUS),
        ("urd-1", "grz2-bg-1", SignType.DISJUNCTIVE),
        ("prt-ru-1", "grz2-bg-1", SignType.DISJUNCTIVE),
        ("obz-1", "grz2-bg-1", SignType.DISJUNCTIVE),
        ("lzn-1", "lzh-bg-1", SignType.FALSE),
        ("lyz-1", "lzh-bg-1", SignType.FALSE),
        ("brn-ru-1", "brn-bg-1", SignType.FALSE),
        ("zbl-ru-1", "bal-bg-1", SignType.FALSE),
        ("nps-ru-1", "nps-bg-1", SignType.EMPTY),
        ("zkl-ru-1", "zkl-bg-1", SignType.EMPTY),
        ("psg-ru-1", "psg-bg-1", SignType.EMPTY),
        ("svl-ru-1", "svl-bg-1", SignType.EMPTY),
    ]
    for a, b, expected in labelled:
        sign = classify_pair(model.sense(a), model.sense(b), model)
        assert sign.sign_type is expected, (a, b, sign.sign_type, expected)

    off = classify_pair(model.sense("kzn-1"), model.sense("ekz-bg-1"), model,
                        admit_pre_registered=False)
    assert off.sign_type is het
    on = classify_pair(model.sense("ekz-ru-1"), model.sense("ekz-bg-1"), model,
                       admit_pre_registered=True)
    assert on.sign_type is hom

    for sense_id, text in (
        ("zbd-1", "вводить в заблуждение"),
        ("lzh-bg-2", "вводить в заблуждение"),
        ("udt-1", "ловя с въдица"),
    ):
        sign = classify_pair(
            model.sense(sense_id), descr_partner(model, sense_id, text), model
        )
        assert sign.sign_type is SignType.DIFFUSE

    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"golden suite took {elapsed:.3f}s"
    _ok("golden-classification-suite")


def test_nodal_page_golden(pages_by_slug):
    """The walkthrough page matches row for row, shift for shift."""
    page = pages_by_slug["LGAT-LAZHA"]

    def pairs(row):
        return {(s.ru.text, s.bg.text) for s in row}

    assert pairs(page.row2) == {("лгать", "клеветя"), ("обманывать", "лъжа")}
    assert pairs(page.row3) == {("клеветать", "клеветя"), ("обманывать", "мамя")}
    assert pairs(page.row4) == {("вводить в заблуждение", "лъжа")}
    assert {s.ru.text for s in page.row5} == {"лажа", "лыжа"}

    assert page.row1.ir == "не правда"
    row2_ir = {(s.ru.text, s.bg.text): s.ir for s in page.row2}
    assert row2_ir[("обманывать", "лъжа")] == "обманут / излъган"
    assert row2_ir[("лгать", "клеветя")] == "опозорен / опорочен"

    words = {tuple(w.text for w in c.links): c.terminal for c in page.chains}
    assert words[("лгать", "клеветя", "клеветать")] == "synchronous_pair"
    assert words[("лъжа", "обманывать", "мамя")] == "synchronous_pair"
    assert words[("лъжа", "обманывать", "изневерявам", "изменять")] == "cut_by_neutral"
    all_links = {w.text for c in page.chains for w in c.links}
    assert "изменям" not in all_links  # never extends past the neutral homonym
    _ok("nodal-page-golden")


def test_routing_table_golden(build, model):
    indices = build_indices(build.pages, model)
    combined = indices.combined
    by_slug = {p.slug: p for p in build.pages}

    def header_of(lemma, lang):
        result = combined.lookup(lemma, lang)
        assert result.found, lemma
        return by_slug[result.slug].title

    assert header_of("арестовать", "ru") == "АРЕСТОВАТЬ ■ АРЕСТУВАМ"
    assert header_of("вешать", "ru") == "ВЕШАТЬ □ БЕСЯ"
    assert header_of("артобстрел", "ru") == "АРТОБСТРЕЛ ● Артиллерийски обстрел"
    assert header_of("артачиться", "ru") == "АРТАЧИТЬСЯ ■■"
    assert combined.lookup("портить", "ru").slug == "PORTIT-IZPORTVAM"
    assert combined.lookup("ангажирам", "bg").slug == "ANGAZHIROVAT-ANGAZHIRAM"
    _ok("routing-table-golden")


def test_header_formatting_golden(model, graph):
    headers, _ = select_headers(model, graph)
    formatted = {h.slug(): format_header(h) for h in headers}
    assert formatted["AHNUT-AHNA"] == "АХНУТЬ ■ (АХНА)"
    assert formatted["BREMENIT-OBREMENYAT-OBREMENYAVAM"] == "[БРЕМЕНИТЬ] ОБРЕМЕНЯТЬ ■ ОБРЕМЕНЯВАМ"
    assert formatted["BLYUDOLIZ-BLYUDOLIZETS-LIZOBLYUD"] == "БЛЮДОЛИЗ ■ БЛЮДОЛИЗЕЦ □ ЛИЗОБЛЮД"
    _ok("header-formatting-golden")


def test_property_a_classifier_determinism(model):
    rng = random.Random(20260810)
    ru = [s for s in model.senses.values() if model.lexeme_of(s).language is Language.RU]
    bg = [s for s in model.senses.values() if model.lexeme_of(s).language is Language.BG]
    for _ in range(1000):
        a, b = rng.choice(ru), rng.choice(bg)
        try:
            first = classify_pair(a, b, model)
        except UnclassifiablePair:
            with pytest.raises(UnclassifiablePair):
                classify_pair(a, b, model)
            continue
        second = classify_pair(b, a, model)
        assert first == second
        assert isinstance(first.sign_type, SignType)
        one_way = first.sign_type in (SignType.DIFFUSE, SignType.DISJUNCTIVE)
        assert (first.direction is not Direction.NONE) == one_way
    _ok("property-a-classifier-determinism-and-exclusivity")


def test_property_b_chain_discipline(build, tmp_path):
    for page in build.pages:
        for chain in page.chains:
            langs = [w.language for w in chain.links]
            assert all(x != y for x, y in zip(langs, langs[1:]))
            levels = [lv for _, _, lv in chain.steps]
            assert all(b - a == 1 for a, b in zip(levels, levels[1:]))
    seed = make_cyclic_seed(tmp_path)
    cyclic_model, _ = load_lexicon(seed)
    cyclic_graph = classify_all(cyclic_model)
    chains, diagnostics = build_chains(
        [cyclic_model.sense("xx-1"), cyclic_model.sense("yy-1")],
        {"xx-1~yy-1"},
        cyclic_graph,
        cyclic_model,
    )
    assert any(d.code == "chain.cycle" for d in diagnostics)
    _ok("property-b-chain-alternation-monotonicity-halting")


def test_property_c_page_self_sufficiency(build):
    for page in build.pages:
        displayed = page.displayed_sense_ids()
        embedded = page.payload_sense_ids()
        assert displayed <= embedded, page.slug
    _ok("property-c-page-self-sufficiency")


def test_property_d_xml_round_trip(build):
    for page in build.pages:
        assert parse_xml(emit_xml(page)) == page, page.slug
    _ok("property-d-xml-round-trip")


def test_property_e_warning_lemma_index_discipline(build, model, graph):
    indices = build_indices(build.pages, model)
    warning_only: dict[str, set[str]] = {}
    for lexeme_id, lexeme in model.lexemes.items():
        kinds = {s.sign_type for s in graph.of_lexeme(lexeme_id)}
        if kinds and kinds <= {SignType.FALSE, SignType.EMPTY}:
            warning_only.setdefault(lexeme.language.value, set()).add(lexeme.lemma)
    assert warning_only["ru"] and warning_only["bg"]  # both sides represented
    for lang, lemmas in warning_only.items():
        indexed = {e.lemma for e in indices.alpha[lang].entries}
        assert not (lemmas & indexed), (lang, lemmas & indexed)
        for lemma in lemmas:
            on_rows = any(
                lemma in (s.ru.text, s.bg.text)
                for page in build.pages
                for s in page.row5
            )
            assert on_rows, lemma
    _ok("property-e-alpha-index-warning-discipline")


def test_property_f_byte_identical_rebuild(build, tmp_path):
    out1, out2 = tmp_path / "one", tmp_path / "two"
    write_output(build, out1)
    write_output(build, out2)
    files1 = sorted(p.relative_to(out1) for p in out1.rglob("*") if p.is_file())
    files2 = sorted(p.relative_to(out2) for p in out2.rglob("*") if p.is_file())
    assert files1 == files2
    for rel in files1:
        assert (out1 / rel).read_bytes() == (out2 / rel).read_bytes(), rel
    _ok("property-f-byte-identical-rebuild")


def test_build_report_criteria(build):
    report = build.report
    assert report["page_count"] >= 20
    slugs = {p["slug"] for p in report["pages"]}
    assert {"LGAT-LAZHA", "VESHAT-BESYA", "ZABLUZHDAVAM"} <= slugs
    for page in report["pages"]:
        assert page["popup_payloads"] >= page["displayed_words"], page["slug"]
    nodal = next(p for p in report["pages"] if p["slug"] == "LGAT-LAZHA")
    print(f"nodal page pop-up payload count: {nodal['popup_payloads']}")
    _ok("build-report")
