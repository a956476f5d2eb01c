from pairlex.similarity import form_distance, form_similar, levenshtein, orthographic_variants


def test_levenshtein_basics():
    assert levenshtein("", "") == 0
    assert levenshtein("кот", "кот") == 0
    assert levenshtein("кот", "кит") == 1
    assert levenshtein("кот", "") == 3
    assert levenshtein("лъжа", "лажа") == 1


def test_orthographic_variants_cover_hard_sign():
    variants = orthographic_variants("лъжа")
    assert "лыжа" in variants
    assert "ложа" in variants


def test_goldens_within_threshold():
    assert form_distance("лыжа", "лъжа") == 0.0
    assert form_similar("лажа", "лъжа")
    assert form_distance("напоследок", "напоследък") == 0.0


def test_goldens_outside_threshold():
    # etymological reflexes and prefix analogies fall below raw similarity
    assert not form_similar("бранить", "браня")
    assert not form_similar("забаллотировать", "балотирам")
    assert not form_similar("грозить", "грозя")


def test_jat_reflex_folding():
    assert form_distance("бес", "бяс") == 0.0


def test_distance_is_normalized():
    assert 0.0 <= form_distance("вешать", "беся") <= 1.0
