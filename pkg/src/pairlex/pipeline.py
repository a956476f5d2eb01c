"""Full build orchestration: classify -> chains -> pages -> indices -> emit.

The build computes everything in memory first; nothing is written unless
every page compiles. Output is written to a temporary sibling directory and
swapped in whole, so a failed build never leaves partial output behind.
Identical input and configuration produce byte-identical output trees.
"""

from __future__ import annotations

import json
import shutil
from dataclasses import dataclass, field
from pathlib import Path

from .classify import SignGraph, classify_all, traces_report
from .compiler import Page, compile_page
from .config import BuildConfig
from .emit import PAGE_CSS, emit_html, emit_page_json, emit_xml
from .model import Diagnostic, LexiconModel
from .pages import legend_entries, select_headers
from .search import Indices, build_indices


@dataclass
class BuildResult:
    pages: list[Page]
    indices: Indices
    graph: SignGraph
    chains_json: dict[str, list]
    report: dict
    diagnostics: list[Diagnostic] = field(default_factory=list)


def _dump(data) -> str:
    return json.dumps(data, ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def run_build(model: LexiconModel, config: BuildConfig) -> BuildResult:
    config.check()
    graph = classify_all(
        model,
        admit_pre_registered=config.admit_pre_registered,
        false_threshold=config.false_similarity_threshold,
    )
    diagnostics: list[Diagnostic] = list(graph.diagnostics)

    headers, header_diags = select_headers(model, graph)
    diagnostics.extend(header_diags)

    pages: list[Page] = []
    chains_json: dict[str, list] = {}
    for header in headers:
        page, chains, page_diags = compile_page(
            header, graph, model, max_chain_depth=config.max_chain_depth
        )
        diagnostics.extend(page_diags)
        pages.append(page)
        chains_json[page.slug] = [
            {
                "links": [
                    {"sense_id": w.sense_id, "lemma": w.text, "language": w.language}
                    for w in chain.links
                ],
                "steps": [
                    {"sign": uid, "sign_type": st, "level": lv}
                    for uid, st, lv in chain.steps
                ],
                "terminal": chain.terminal,
            }
            for chain in page.chains
        ]
    pages.sort(key=lambda p: p.slug)

    indices = build_indices(pages, model)

    def displayed_words(page: Page) -> int:
        count = len(page.header_members) + (1 if page.header_descriptive else 0)
        for row in page.rows():
            count += 2 * len(row)
        return count

    report = {
        "page_count": len(pages),
        "pages": [
            {
                "slug": p.slug,
                "title": p.title,
                "popup_payloads": p.popup_count,
                "displayed_words": displayed_words(p),
            }
            for p in pages
        ],
        "sign_counts": graph.counts(),
        "diagnostics": [
            {"code": d.code, "ref": d.ref, "message": d.message} for d in diagnostics
        ],
        "policy_notes": list(graph.policy_notes),
        "config": {
            "admit_pre_registered": config.admit_pre_registered,
            "max_chain_depth": config.max_chain_depth,
            "false_similarity_threshold": config.false_similarity_threshold,
        },
    }
    return BuildResult(
        pages=pages,
        indices=indices,
        graph=graph,
        chains_json=chains_json,
        report=report,
        diagnostics=diagnostics,
    )


def write_output(result: BuildResult, out_dir: str | Path) -> Path:
    out = Path(out_dir)
    tmp = out.parent / (out.name + ".tmp")
    if tmp.exists():
        shutil.rmtree(tmp)
    try:
        (tmp / "pages").mkdir(parents=True)
        (tmp / "index").mkdir()
        (tmp / "assets").mkdir()
        for page in result.pages:
            base = tmp / "pages" / page.slug
            base.with_suffix(".html").write_text(emit_html(page), encoding="utf-8")
            base.with_suffix(".xml").write_text(emit_xml(page), encoding="utf-8")
            base.with_suffix(".json").write_text(emit_page_json(page), encoding="utf-8")
        for lang, alpha in sorted(result.indices.alpha.items()):
            (tmp / "index" / f"alpha_{lang}.json").write_text(
                _dump(alpha.to_json()), encoding="utf-8"
            )
        (tmp / "index" / "combined.json").write_text(
            _dump(result.indices.combined.to_json()), encoding="utf-8"
        )
        (tmp / "assets" / "legend.json").write_text(
            _dump(legend_entries()), encoding="utf-8"
        )
        (tmp / "assets" / "page.css").write_text(PAGE_CSS, encoding="utf-8")
        (tmp / "chains.json").write_text(_dump(result.chains_json), encoding="utf-8")
        (tmp / "traces.json").write_text(
            _dump(traces_report(result.graph)), encoding="utf-8"
        )
        (tmp / "report.json").write_text(_dump(result.report), encoding="utf-8")
    except Exception:
        shutil.rmtree(tmp, ignore_errors=True)
        raise
    if out.exists():
        shutil.rmtree(out)
    tmp.rename(out)
    return out


def report_text(report: dict) -> str:
    lines = [
        f"pages: {report['page_count']}",
        "sign counts:",
    ]
    for sign_type, count in sorted(report["sign_counts"].items()):
        lines.append(f"  {sign_type}: {count}")
    lines.append("pages (pop-up payloads / displayed words):")
    for page in report["pages"]:
        lines.append(
            f"  {page['slug']}: {page['popup_payloads']} / {page['displayed_words']}"
            f"  {page['title']}"
        )
    if report["policy_notes"]:
        lines.append("policy notes:")
        lines.extend(f"  {note}" for note in report["policy_notes"])
    if report["diagnostics"]:
        lines.append("diagnostics:")
        lines.extend(
            f"  {d['code']}: {d['ref']}: {d['message']}" for d in report["diagnostics"]
        )
    return "\n".join(lines) + "\n"
