import json

from pairlex.emit import emit_html, emit_page_json, emit_xml, page_from_json, page_to_json, parse_xml


def test_xml_round_trip_every_page(build):
    for page in build.pages:
        assert parse_xml(emit_xml(page)) == page


def test_json_round_trip_every_page(build):
    for page in build.pages:
        assert page_from_json(page_to_json(page)) == page


def test_emission_is_deterministic(build):
    page = build.pages[0]
    assert emit_html(page) == emit_html(page)
    assert emit_xml(page) == emit_xml(page)
    assert emit_page_json(page) == emit_page_json(page)


def test_html_has_five_row_containers(pages_by_slug):
    html = emit_html(pages_by_slug["UBIVAT-UBIVAM"])
    for n in range(1, 6):
        assert f'id="row-{n}"' in html


def test_html_embeds_every_payload_inline(pages_by_slug):
    page = pages_by_slug["LGAT-LAZHA"]
    html = emit_html(page)
    for payload in page.payloads:
        assert f'data-for-sense="{payload.sense_id}"' in html
        assert payload.gloss_ru in html or "&" in payload.gloss_ru
    assert 'data-for-descriptive="вводить в заблуждение"' in html


def test_html_data_attributes_for_hydration(pages_by_slug):
    html = emit_html(pages_by_slug["LGAT-LAZHA"])
    assert 'data-sense-id="lgat-1"' in html
    assert 'data-sign-type="asynchronous"' in html
    assert "data-color=" in html
    assert '<script type="application/json" id="page-data">' in html


def test_html_escapes_reserved_characters(pages_by_slug):
    html = emit_html(pages_by_slug["AHNUT-AHNA"])
    # glosses contain guillemets; angle brackets must stay escaped overall
    data = html.split('id="page-data">')[1].rsplit("</script>", 1)[0]
    json.loads(data.replace("<\\/", "</"))


def test_warning_words_render_with_source_links(pages_by_slug):
    html = emit_html(pages_by_slug["LGAT-LAZHA"])
    assert 'class="word warning"' in html
    assert "data-url=" in html


def test_xml_declaration_and_structure(pages_by_slug):
    xml = emit_xml(pages_by_slug["LGAT-LAZHA"])
    assert xml.startswith('<?xml version="1.0" encoding="UTF-8"?>')
    assert "<legend>" in xml and "<chains>" in xml
