import pytest

from pairlex.model import POS_ORDER
from pairlex.search import RUBRIC_ORDER, build_indices
from pairlex.translit import collation_key


@pytest.fixture(scope="module")
def indices(build, model):
    return build_indices(build.pages, model)


def test_alpha_index_contains_nodal_verb(indices):
    ru = indices.alpha["ru"]
    entry = next(e for e in ru.entries if e.lemma == "лгать")
    assert entry.pos == "verb"
    assert entry.slug == "LGAT-LAZHA"


def test_alpha_index_excludes_warning_only_lemmas(indices):
    bg_lemmas = {e.lemma for e in indices.alpha["bg"].entries}
    ru_lemmas = {e.lemma for e in indices.alpha["ru"].entries}
    assert "браня" not in bg_lemmas
    assert "напоследък" not in bg_lemmas
    assert "лажа" not in ru_lemmas and "лыжа" not in ru_lemmas
    assert "забаллотировать" not in ru_lemmas


def test_alpha_index_excludes_scheme_neutral_partners(indices):
    bg_lemmas = {e.lemma for e in indices.alpha["bg"].entries}
    assert "ахна" not in bg_lemmas
    assert "изменям" not in bg_lemmas
    assert "веся" not in bg_lemmas


def test_alpha_index_pos_strata_order(indices):
    for index in indices.alpha.values():
        strata = [POS_ORDER.index(next(p for p in POS_ORDER if p.value == e.pos))
                  for e in index.entries]
        assert strata == sorted(strata)
        # inside each stratum the fixed Cyrillic collation applies
        by_stratum = {}
        for e in index.entries:
            by_stratum.setdefault(e.pos, []).append(e.lemma)
        for lemmas in by_stratum.values():
            assert lemmas == sorted(lemmas, key=collation_key)


def test_row_displayed_words_are_indexed(indices):
    ru_lemmas = {e.lemma for e in indices.alpha["ru"].entries}
    # disjunctive partners appear on rows only, still browseable
    assert {"уродовать", "обезобразивать", "сглазить", "запутывать"} <= ru_lemmas


def test_empty_model_gives_empty_indices():
    from pairlex.model import LexiconModel

    indices = build_indices([], LexiconModel())
    assert indices.alpha["ru"].entries == []
    assert indices.alpha["bg"].entries == []


def test_lookup_goldens(indices):
    combined = indices.combined
    assert combined.lookup("вешать", "ru").slug == "VESHAT-BESYA"
    assert combined.lookup("ангажирам", "bg").slug == "ANGAZHIROVAT-ANGAZHIRAM"
    assert combined.lookup("портить", "ru").slug == "PORTIT-IZPORTVAM"
    assert combined.lookup("лъжа", "bg").slug == "LGAT-LAZHA"  # hom page outranks het
    assert combined.lookup("грозя", "bg").slug == "GROZIT-GROZYA"


def test_lookup_not_found_variants(indices):
    combined = indices.combined
    rows_only = combined.lookup("браня", "bg")
    assert not rows_only.found and rows_only.reason == "rows_only"
    assert rows_only.suggestions == ("BRANIT-MAMRYA",)
    missing = combined.lookup("несуществующее", "ru")
    assert not missing.found and missing.reason == "no_such_lemma"


def test_every_header_lemma_reachable(build, indices):
    for page in build.pages:
        for member in page.header_members:
            result = indices.combined.lookup(member.lemma, member.language)
            assert result.found, member.lemma
            target = next(p for p in build.pages if p.slug == result.slug)
            assert member.lemma in {m.lemma for m in target.header_members}


def test_combined_search_rubric_coverage(indices):
    combined = indices.combined
    first = combined.search("лгать", 10)
    hits = list(first.hits)
    for page_no in range(2, first.pages + 1):
        hits.extend(combined.search("лгать", 10, page_no).hits)
    rubrics = {h.rubric for h in hits}
    assert {"page", "corpus_excerpt", "co_positioned_pair", "ted_catalog"} <= rubrics
    # deterministic rubric-major ordering
    order = [RUBRIC_ORDER.index(h.rubric) for h in hits]
    assert order == sorted(order)


def test_combined_search_no_hits(indices):
    assert indices.combined.search("zzzz", 10).total == 0


def test_combined_search_empty_query_rejected(indices):
    with pytest.raises(ValueError):
        indices.combined.search("   ", 10)


def test_combined_search_pagination_against_brute_scan(indices):
    combined = indices.combined
    # independent oracle: raw substring scan over the serialized documents
    expected = sum(1 for doc in combined.docs if "лъж" in doc["text"].casefold())
    result = combined.search("лъж", 2)
    assert result.total == expected
    assert result.pages >= 2
    seen = 0
    for page_no in range(1, result.pages + 1):
        window = combined.search("лъж", 2, page_no)
        assert 1 <= len(window.hits) <= 2
        seen += len(window.hits)
    assert seen == expected


def test_combined_search_superset_of_lookup(build, indices):
    combined = indices.combined
    for page in build.pages:
        for member in page.header_members:
            result = combined.search(member.lemma, 500)
            assert result.total >= 1
            slugs = {h.slug for h in result.hits}
            assert combined.lookup(member.lemma, member.language).slug in slugs


def test_scoring_orders_exact_match_first(indices):
    hits = indices.combined.search("лгать", 50).hits
    page_hits = [h for h in hits if h.rubric == "page"]
    assert page_hits and page_hits[0].slug == "LGAT-LAZHA"
    assert page_hits[0].score == indices.combined.weights["exact_lemma"]


def test_serialization_round_trip(indices):
    from pairlex.search import AlphaIndex, CombinedIndex

    for alpha in indices.alpha.values():
        assert AlphaIndex.from_json(alpha.to_json()).entries == alpha.entries
    reloaded = CombinedIndex.from_json(indices.combined.to_json())
    assert reloaded.search("лгать", 10).total == indices.combined.search("лгать", 10).total
