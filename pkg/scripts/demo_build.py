#!/usr/bin/env python3
"""Build the seed lexicon and walk one page on the console.

    python3 scripts/demo_build.py [out-dir]

Prints the nodal page row by row, the implicative chains with polarization
levels, and a couple of lookup/search round trips against the built index.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from pairlex.config import BuildConfig
from pairlex.loader import load_lexicon, validate
from pairlex.pipeline import run_build, write_output
from pairlex.search import CombinedIndex


def main() -> None:
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else ROOT / "out"
    model, diagnostics = load_lexicon(ROOT / "data" / "seed")
    problems = diagnostics + validate(model)
    if problems:
        for problem in problems:
            print(problem)
        raise SystemExit(1)

    result = run_build(model, BuildConfig(input_dir=str(ROOT / "data" / "seed")))
    write_output(result, out_dir)
    print(f"{result.report['page_count']} pages -> {out_dir}\n")

    page = next(p for p in result.pages if p.slug == "LGAT-LAZHA")
    print(page.title)
    for n, row in enumerate(page.rows(), start=1):
        cells = [f"{s.ru.text} {s.glyph} {s.bg.text}" + (f"  ИР=({s.ir})" if s.ir else "")
                 for s in row]
        print(f"  row {n}: " + ("; ".join(cells) if cells else "—"))
    print("  chains:")
    for chain in page.chains:
        path = " … ".join(w.text for w in chain.links)
        levels = ",".join(str(lv) for _, _, lv in chain.steps)
        print(f"    {path}  [levels {levels}] -> {chain.terminal}")

    combined = CombinedIndex.from_json(
        json.loads((out_dir / "index" / "combined.json").read_text(encoding="utf-8"))
    )
    print("\nlookup вешать ->", combined.lookup("вешать", "ru").slug)
    print("lookup браня  ->", combined.lookup("браня", "bg"))
    found = combined.search("лгать", 5)
    print(f"search лгать: {found.total} hits, page 1 of {found.pages}:")
    for hit in found.hits:
        print(f"  [{hit.rubric}] {hit.slug}: {hit.snippet[:60]}")


if __name__ == "__main__":
    main()
