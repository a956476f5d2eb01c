import pytest

from pairlex.compiler import (
    MAX_COLORS,
    NO_COLOR,
    PageBuildError,
    assign_colors,
    compile_page,
)
from pairlex.classify import classify_all
from pairlex.loader import load_lexicon
from pairlex.pages import (
    LEGEND_ABBREVIATIONS,
    LEGEND_IDEOGRAMS,
    SIGN_IDEOGRAMS,
    select_headers,
)


def pairs_on(row):
    return {(s.ru.text, s.bg.text) for s in row}


def test_nodal_page_rows_match_walkthrough(pages_by_slug):
    page = pages_by_slug["LGAT-LAZHA"]
    assert page.row1.ru.text == "лгать" and page.row1.bg.text == "лъжа"
    assert pairs_on(page.row2) == {("лгать", "клеветя"), ("обманывать", "лъжа")}
    assert pairs_on(page.row3) == {("клеветать", "клеветя"), ("обманывать", "мамя")}
    assert pairs_on(page.row4) == {("вводить в заблуждение", "лъжа")}
    warned = {s.ru.text for s in page.row5}
    assert warned == {"лажа", "лыжа"}


def test_nodal_page_ir_shifts(pages_by_slug):
    page = pages_by_slug["LGAT-LAZHA"]
    assert page.row1.ir == "не правда"
    by_pair = {(s.ru.text, s.bg.text): s.ir for s in page.row2}
    assert by_pair[("обманывать", "лъжа")] == "обманут / излъган"
    assert by_pair[("лгать", "клеветя")] == "опозорен / опорочен"


def test_nodal_page_ted_shift_displayed(pages_by_slug):
    page = pages_by_slug["LGAT-LAZHA"]
    kleveta = next(s for s in page.row2 if s.bg.text == "клеветя")
    assert "принижающие" in kleveta.ted_ru and "принижающие" in kleveta.ted_bg
    assert "дезинформирующее" in page.row1.ted_ru


def test_minimal_page_has_empty_rows(pages_by_slug):
    page = pages_by_slug["UBIVAT-UBIVAM"]
    assert page.row1 is not None
    assert page.row2 == page.row3 == page.row4 == page.row5 == ()


def test_rows_always_present_in_order(pages_by_slug):
    for page in pages_by_slug.values():
        rows = page.rows()
        assert len(rows) == 5


def test_self_sufficiency(pages_by_slug):
    for page in pages_by_slug.values():
        assert page.displayed_sense_ids() <= page.payload_sense_ids()


def test_warning_rows_carry_external_links(pages_by_slug):
    page = pages_by_slug["LGAT-LAZHA"]
    links = {s.ru.text: s.warning_link for s in page.row5}
    assert links["лажа"].startswith("http")
    assert links["лыжа"].startswith("http")


def test_missing_gloss_payload_is_a_build_error(seed_copy):
    from conftest import rewrite_json

    rewrite_json(
        seed_copy / "lexemes" / "klevetya.json",
        lambda d: d["senses"][0].update({"gloss_ru": ""}),
    )
    model, _ = load_lexicon(seed_copy)
    graph = classify_all(model)
    headers, _ = select_headers(model, graph)
    lgat = next(h for h in headers if h.slug() == "LGAT-LAZHA")
    with pytest.raises(PageBuildError):
        compile_page(lgat, graph, model)


def test_corresponding_glosses_share_one_color(pages_by_slug):
    page = pages_by_slug["LGAT-LAZHA"]
    colors = {p.sense_id: p.color for p in page.payloads}
    assert colors["lgat-1"] == colors["lzh-bg-1"]
    assert colors["lgat-2"] == colors["klv-1"] == colors["klt-1"]
    assert colors["obm-1"] == colors["mam-1"] == colors["lzh-bg-2"]
    assert colors["lgat-1"] != colors["lgat-2"]


def test_single_pair_page_uses_one_color(pages_by_slug):
    page = pages_by_slug["UBIVAT-UBIVAM"]
    used = {p.color for p in page.payloads if p.color != NO_COLOR}
    assert used == {0}


def test_color_budget_respected_everywhere(pages_by_slug):
    for page in pages_by_slug.values():
        used = {p.color for p in page.payloads if p.color != NO_COLOR}
        assert len(used) <= MAX_COLORS


class _FakeSense:
    def __init__(self, sid):
        self.id = sid


class _FakeSign:
    def __init__(self, i):
        from pairlex.classify import SignType, Direction, CriterionTrace

        self.uid = f"s{i}"
        self.sign_type = SignType.SYNCHRONOUS_HOMOGENEOUS
        self.direction = Direction.NONE
        self.trace = CriterionTrace()
        self._senses = (_FakeSense(f"ru{i}"), _FakeSense(f"bg{i}"))

    def senses(self):
        return self._senses


def test_thirteen_groups_reuse_colors_with_diagnostic(model):
    signs = [_FakeSign(i) for i in range(13)]
    colors, groups, diagnostics = assign_colors(signs, model)
    assert len(groups) == MAX_COLORS
    assert colors["ru12"] == 0  # wrapped around
    assert len(diagnostics) == 1
    assert diagnostics[0].code == "colors.reuse"


def test_sign_ideograms_bijective():
    glyph_targets = set(SIGN_IDEOGRAMS.values())
    assert len(glyph_targets) == len(SIGN_IDEOGRAMS) == 7


def test_reference_base_legend(pages_by_slug):
    page = pages_by_slug["LGAT-LAZHA"]
    assert len(page.legend) == len(LEGEND_IDEOGRAMS) + len(LEGEND_ABBREVIATIONS) == 20
    abbreviations = {e.key for e in page.legend if e.kind == "abbreviation"}
    assert abbreviations == {"НКРЯ", "БНК", "СИН", "ФР", "АСС", "МОРФ", "ПЗ", "ТЭД", "СС", "ИР"}


def test_rubric_links_flank_the_nodal_pair(pages_by_slug):
    page = pages_by_slug["LGAT-LAZHA"]
    rubrics = [l.rubric for l in page.rubric_links]
    assert rubrics == ["НКРЯ", "БНК", "АСС", "МОРФ", "ФР", "СИН", "ПЗ"]


def test_popup_count_covers_displayed_words(build):
    for entry in build.report["pages"]:
        assert entry["popup_payloads"] >= entry["displayed_words"]


def test_disjunctive_partners_sit_on_row_two(pages_by_slug):
    grozya = pages_by_slug["GROZYA"]
    assert pairs_on(grozya.row2) == {
        ("уродовать", "грозя"),
        ("портить", "грозя"),
        ("обезобразивать", "грозя"),
    }
    assert all(s.level == 1 for s in grozya.row2)
    assert grozya.row1 is None


def test_second_diffuse_equivalent_lands_on_row_four(pages_by_slug):
    udit = pages_by_slug["UDIT"]
    assert udit.header_descriptive == "ловя с въдица"
    assert pairs_on(udit.row4) == {("удить", "хващам на въдицата")}
